#pragma once

#include <cassert>
#include <compare>
#include <string>

#include "modorbit/checked.hpp"
#include "modorbit/error.hpp"

namespace modorbit {

/// True iff `n` is a positive integer with no square factor above 1.
inline bool is_square_free(Int n) {
  if (n <= 0) return false;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return false;
  }
  return true;
}

enum class SignClass { TotallyPositive, TotallyNegative, NormZero };

constexpr const char* to_string(SignClass sign) {
  switch (sign) {
    case SignClass::TotallyPositive: return "totally positive";
    case SignClass::TotallyNegative: return "totally negative";
    case SignClass::NormZero: return "norm zero";
  }
  return "?";
}

class Element;
namespace detail {
Element make_in_field(Int a, Int c, Int n);
}

/// An element (a + sqrt(-n))/c of Q*(sqrt(-n)).
///
/// The triple (a, c, n) is the identity of the element; nothing is reduced.
/// b = (a^2 + n)/c is computed once at construction and always satisfies
/// b*c = a^2 + n > 0, so b and c share a sign.
class Element {
 public:
  Int a() const { return a_; }
  Int b() const { return b_; }
  Int c() const { return c_; }
  Int n() const { return n_; }

  friend bool operator==(const Element&, const Element&) = default;
  /// Lexicographic by (n, a, c); b is determined by the rest.
  friend std::strong_ordering operator<=>(const Element& lhs, const Element& rhs) {
    if (auto cmp = lhs.n_ <=> rhs.n_; cmp != 0) return cmp;
    if (auto cmp = lhs.a_ <=> rhs.a_; cmp != 0) return cmp;
    return lhs.c_ <=> rhs.c_;
  }

 private:
  Element(Int a, Int b, Int c, Int n) : a_(a), b_(b), c_(c), n_(n) {}
  friend Element detail::make_in_field(Int a, Int c, Int n);

  Int a_;
  Int b_;
  Int c_;
  Int n_;
};

namespace detail {

/// Builds an element for an `n` already known to be square-free.
inline Element make_in_field(Int a, Int c, Int n) {
  if (c == 0) throw Error(ErrorCode::ZeroDenominator, "c = 0");
  const Int norm = checked::add(checked::mul(a, a), n);
  if (norm % c != 0) {
    throw Error(ErrorCode::NotInSet, to_string(c) + " does not divide " + to_string(norm));
  }
  Element e(a, norm / c, c, n);
  assert(e.b() * e.c() == norm && e.b() * e.c() > 0);
  return e;
}

}  // namespace detail

inline Element make_element(Int a, Int c, Int n) {
  if (!is_square_free(n)) throw Error(ErrorCode::NonSquareFreeN, "n = " + to_string(n));
  return detail::make_in_field(a, c, n);
}

inline Int b_of(const Element& e) { return e.b(); }

/// a*c = 0 forces a = 0, so the three cases are exhaustive.
inline SignClass classify(const Element& e) {
  if (e.a() == 0) return SignClass::NormZero;
  return (e.a() > 0) == (e.c() > 0) ? SignClass::TotallyPositive : SignClass::TotallyNegative;
}

/// Renders "(a+sqrt(-n))/c", parenthesising a negative denominator.
inline std::string display(const Element& e) {
  std::string out = "(" + to_string(e.a()) + "+sqrt(-" + to_string(e.n()) + "))/";
  if (e.c() < 0) return out + "(" + to_string(e.c()) + ")";
  return out + to_string(e.c());
}

}  // namespace modorbit
