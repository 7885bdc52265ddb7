#pragma once

#include <optional>
#include <vector>

#include "modorbit/checked.hpp"
#include "modorbit/error.hpp"
#include "modorbit/qfield.hpp"

namespace modorbit {

/// Number of positive divisors of k, by trial division up to sqrt(k).
inline Int d(Int k) {
  if (k < 1) throw Error(ErrorCode::OutOfRange, "d(k) needs k >= 1, got " + to_string(k));
  Int count = 0;
  for (Int p = 1; p * p <= k; ++p) {
    if (k % p != 0) continue;
    count += (p * p == k) ? 1 : 2;
  }
  return count;
}

/// Number of positive divisors of k that do not exceed i, for 1 <= i <= k.
inline Int d_leq(Int i, Int k) {
  if (i < 1 || i > k) {
    throw Error(ErrorCode::OutOfRange, "d_leq(i, k) needs 1 <= i <= k, got i = " + to_string(i) + ", k = " + to_string(k));
  }
  Int count = 0;
  for (Int p = 1; p * p <= k; ++p) {
    if (k % p != 0) continue;
    if (p <= i) ++count;
    const Int q = k / p;
    if (q != p && q <= i) ++count;
  }
  return count;
}

/// One bracket d(i^2+n) - 2 d_{<=i}(i^2+n) of the orbit sum, kept in parts.
struct SumTerm {
  Int i;
  Int k;        ///< i^2 + n
  Int d_k;      ///< d(k)
  Int twice_leq;  ///< 2 d_{<=i}(k)

  Int value() const { return d_k - twice_leq; }
};

inline void require_square_free(Int n) {
  if (!is_square_free(n)) throw Error(ErrorCode::NonSquareFreeN, "n = " + to_string(n));
}

/// The brackets for i = 1 .. floor((n-1)/2).
inline std::vector<SumTerm> orbit_sum_terms(Int n) {
  require_square_free(n);
  std::vector<SumTerm> out;
  for (Int i = 1; i <= (n - 1) / 2; ++i) {
    const Int k = checked::add(checked::mul(i, i), n);
    out.push_back({i, k, d(k), 2 * d_leq(i, k)});
  }
  return out;
}

inline Int orbit_sum(Int n) {
  Int total = 0;
  for (const SumTerm& t : orbit_sum_terms(n)) total = checked::add(total, t.value());
  return total;
}

namespace detail {

/// numerator/3 * sum, asserting exactness.
inline Int scaled_third(Int numerator, Int sum, Int n) {
  const Int scaled = checked::mul(numerator, sum);
  if (scaled % 3 != 0) {
    throw Error(ErrorCode::NonIntegralSum, to_string(numerator) + "/3 * " + to_string(sum) + " at n = " + to_string(n));
  }
  return scaled / 3;
}

}  // namespace detail

/// |O^G_{-n}|: 2 for n = 1 and n = 2, 4 for n = 3, otherwise
/// d(n) + (2/3) * sum.
inline Int count_g_orbits_formula(Int n) {
  require_square_free(n);
  if (n == 1 || n == 2) return 2;
  if (n == 3) return 4;
  return checked::add(d(n), detail::scaled_third(2, orbit_sum(n), n));
}

/// |O^H_{-n}|: 2, 4, 8 for n = 1, 2, 3, otherwise 2 d(n) + (4/3) * sum.
inline Int count_h_orbits_formula(Int n) {
  require_square_free(n);
  if (n == 1) return 2;
  if (n == 2) return 4;
  if (n == 3) return 8;
  return checked::add(checked::mul(2, d(n)), detail::scaled_third(4, orbit_sum(n), n));
}

/// The older estimate 2[d(n) + 2d(n+1) - 6] (n odd) or 2[d(n) + 2d(n+1) - 4]
/// (n even). Kept only for comparison; it is wrong in general and was never
/// claimed for n = 3.
inline Int count_h_orbits_legacy(Int n) {
  require_square_free(n);
  const Int offset = n % 2 == 1 ? 6 : 4;
  return 2 * (d(n) + 2 * d(checked::add(n, 1)) - offset);
}

inline bool congruence_mod8(Int n) {
  if (n < 3) throw Error(ErrorCode::OutOfRange, "congruence_mod8 needs n >= 3, got " + to_string(n));
  return count_h_orbits_formula(n) % 8 == 0;
}

struct OrbitCounts {
  Int n;
  Int h_formula;
  Int g_formula;
  Int legacy_am2;
  std::optional<bool> congruent_mod8;  ///< empty for n < 3
};

inline OrbitCounts orbit_counts(Int n) {
  OrbitCounts out{n, count_h_orbits_formula(n), count_g_orbits_formula(n), count_h_orbits_legacy(n), std::nullopt};
  if (n >= 3) out.congruent_mod8 = out.h_formula % 8 == 0;
  return out;
}

}  // namespace modorbit
