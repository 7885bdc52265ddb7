#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modorbit/checked.hpp"
#include "modorbit/error.hpp"
#include "modorbit/qfield.hpp"

namespace modorbit {

/// x: z -> -1/z, y: z -> (z-1)/z, v = xyx, plus the squares of y and v.
enum class Generator { X, Y, Y2, V, V2 };

constexpr const char* to_string(Generator g) {
  switch (g) {
    case Generator::X: return "x";
    case Generator::Y: return "y";
    case Generator::Y2: return "y2";
    case Generator::V: return "v";
    case Generator::V2: return "v2";
  }
  return "?";
}

/// A letter sequence, read left to right and applied right to left.
using Letters = std::vector<Generator>;

/// Parses tokens x, y, y2, v, v2 written without separators ("vy2x").
/// The empty string, "1" and "identity" all denote the empty word.
inline Letters parse_letters(std::string_view text) {
  Letters out;
  if (text == "1" || text == "identity") return out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const bool squared = i + 1 < text.size() && text[i + 1] == '2';
    switch (text[i]) {
      case 'x': out.push_back(Generator::X); break;
      case 'y': out.push_back(squared ? Generator::Y2 : Generator::Y); break;
      case 'v': out.push_back(squared ? Generator::V2 : Generator::V); break;
      default:
        throw Error(ErrorCode::ParseError,
                    "unexpected '" + std::string(1, text[i]) + "' in word '" + std::string(text) + "'");
    }
    if (squared && text[i] != 'x') ++i;
  }
  return out;
}

inline std::string to_string(std::span<const Generator> letters) {
  if (letters.empty()) return "identity";
  std::string out;
  for (Generator g : letters) out += to_string(g);
  return out;
}

/// One row of the action table, acting on the triple (a, b, c).
inline Element apply_generator(Generator g, const Element& e) {
  using namespace checked;
  const Int a = e.a(), b = e.b(), c = e.c();
  Int na = 0, nb = 0, nc = 0;
  switch (g) {
    case Generator::X:
      na = neg(a), nb = c, nc = b;
      break;
    case Generator::Y:
      na = add(neg(a), b), nb = add(add(mul(-2, a), b), c), nc = b;
      break;
    case Generator::Y2:
      na = add(neg(a), c), nb = c, nc = add(add(mul(-2, a), b), c);
      break;
    case Generator::V:
      na = sub(neg(a), c), nb = c, nc = add(add(mul(2, a), b), c);
      break;
    case Generator::V2:
      na = sub(neg(a), b), nb = add(add(mul(2, a), b), c), nc = b;
      break;
  }
  if (nc == 0 || mul(nb, nc) != add(mul(na, na), e.n())) {
    throw Error(ErrorCode::InternalInvariantBroken,
                std::string("image under ") + to_string(g) + " of " + display(e) + " left the set");
  }
  return detail::make_in_field(na, nc, e.n());
}

/// Composition: the rightmost letter acts first.
inline Element apply_word(std::span<const Generator> letters, Element e) {
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) e = apply_generator(*it, e);
  return e;
}

struct RelationReport {
  std::size_t elements = 0;
  std::size_t checks = 0;
};

/// Checks x^2 = y^3 = v^3 = 1, y2 = yy, v2 = vv and v = xyx on every element.
/// Throws RelationViolation naming the relation and the witness.
template <typename Range>
RelationReport verify_relations(const Range& sample) {
  using G = Generator;
  struct Relation {
    const char* name;
    Letters lhs;
    Letters rhs;
  };
  static const std::vector<Relation> relations = {
      {"x^2 = 1", {G::X, G::X}, {}},
      {"y^3 = 1", {G::Y, G::Y, G::Y}, {}},
      {"v^3 = 1", {G::V, G::V, G::V}, {}},
      {"y2 = yy", {G::Y2}, {G::Y, G::Y}},
      {"v2 = vv", {G::V2}, {G::V, G::V}},
      {"v = xyx", {G::V}, {G::X, G::Y, G::X}},
  };
  RelationReport report;
  for (const Element& e : sample) {
    ++report.elements;
    for (const auto& rel : relations) {
      if (apply_word(rel.lhs, e) != apply_word(rel.rhs, e)) {
        throw Error(ErrorCode::RelationViolation, std::string(rel.name) + " fails at " + display(e));
      }
      ++report.checks;
    }
  }
  if (report.elements == 0) throw Error(ErrorCode::OutOfRange, "empty relation sample");
  return report;
}

/// All valid elements with |a| <= max_a and 0 < |c| <= max_c, ordered by (a, c).
inline std::vector<Element> elements_in_box(Int n, Int max_a, Int max_c) {
  if (!is_square_free(n)) throw Error(ErrorCode::NonSquareFreeN, "n = " + to_string(n));
  std::vector<Element> out;
  for (Int a = -max_a; a <= max_a; ++a) {
    const Int norm = checked::add(checked::mul(a, a), n);
    for (Int c = -max_c; c <= max_c; ++c) {
      if (c != 0 && norm % c == 0) out.push_back(detail::make_in_field(a, c, n));
    }
  }
  return out;
}

}  // namespace modorbit
