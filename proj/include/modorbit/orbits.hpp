#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <tuple>
#include <unordered_map>
#include <variant>
#include <vector>

#include "modorbit/action.hpp"
#include "modorbit/checked.hpp"
#include "modorbit/error.hpp"
#include "modorbit/qfield.hpp"
#include "modorbit/words.hpp"

namespace modorbit {

// ---------------------------------------------------------------------------
// Cycles and special units

/// The orbit {e, g(e), g^2(e)} of one order-3 generator (g = y or v).
struct Cycle {
  Generator kind;
  std::vector<Element> members;  ///< sorted; size 1 or 3
};

inline Cycle cycle_of(Generator kind, const Element& e) {
  if (kind != Generator::Y && kind != Generator::V) {
    throw Error(ErrorCode::OutOfRange, "cycles are taken under y or v only");
  }
  std::vector<Element> members{e};
  for (Element cur = apply_generator(kind, e); cur != e; cur = apply_generator(kind, cur)) {
    members.push_back(cur);
    if (members.size() > 3) throw Error(ErrorCode::InternalInvariantBroken, "generator of order > 3");
  }
  std::sort(members.begin(), members.end());
  return {kind, std::move(members)};
}

inline Cycle y_cycle(const Element& e) { return cycle_of(Generator::Y, e); }
inline Cycle v_cycle(const Element& e) { return cycle_of(Generator::V, e); }

inline bool all_members(const Cycle& cycle, SignClass sign) {
  return std::all_of(cycle.members.begin(), cycle.members.end(),
                     [sign](const Element& e) { return classify(e) == sign; });
}

/// Two norm-zero elements exchanged by x; equal only for n = 1.
struct NormZeroPair {
  Element beta;
  Element x_beta;

  bool self_paired() const { return beta == x_beta; }
};

/// A totally positive y-cycle.
struct PositiveCycle {
  Cycle cycle;
};

using SpecialUnit = std::variant<NormZeroPair, PositiveCycle>;

/// The canonical member: the smaller norm-zero element, or the smallest
/// cycle member.
inline const Element& representative(const SpecialUnit& unit) {
  if (const auto* pair = std::get_if<NormZeroPair>(&unit)) return pair->beta;
  return std::get<PositiveCycle>(unit).cycle.members.front();
}

inline bool self_paired(const SpecialUnit& unit) {
  const auto* pair = std::get_if<NormZeroPair>(&unit);
  return pair != nullptr && pair->self_paired();
}

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

/// Positive divisors of k in increasing order (plain scan, no shared code
/// with the divisor-count formulas).
inline std::vector<Int> positive_divisors(Int k) {
  std::vector<Int> low, high;
  for (Int p = 1; p * p <= k; ++p) {
    if (k % p != 0) continue;
    low.push_back(p);
    if (p != k / p) high.push_back(k / p);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

}  // namespace detail

/// All (0, c) with c a positive or negative divisor of n; 2 d(n) elements.
inline std::vector<Element> norm_zero_elements(Int n) {
  if (!is_square_free(n)) throw Error(ErrorCode::NonSquareFreeN, "n = " + to_string(n));
  std::vector<Element> out;
  for (Int c : detail::positive_divisors(n)) {
    out.push_back(detail::make_in_field(0, c, n));
    out.push_back(detail::make_in_field(0, -c, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Elements with |a| = i whose y-cycle is totally positive:
/// (a = i, i < b, i < c) or (a = -i, -i > b, -i > c).
inline std::vector<Element> totally_positive_elements(Int n, Int i) {
  if (!is_square_free(n)) throw Error(ErrorCode::NonSquareFreeN, "n = " + to_string(n));
  if (i < 1 || i > (n - 1) / 2) {
    throw Error(ErrorCode::OutOfRange, "i = " + to_string(i) + " outside [1, " + to_string((n - 1) / 2) + "]");
  }
  const Int k = checked::add(checked::mul(i, i), n);
  std::vector<Element> out;
  for (Int c : detail::positive_divisors(k)) {
    const Int b = k / c;
    if (i < b && i < c) out.push_back(detail::make_in_field(i, c, n));
    if (-i > -b && -i > -c) out.push_back(detail::make_in_field(-i, -c, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Every element lying in a totally positive y-cycle. Such elements satisfy
/// 0 < |a| < |b|, |c|, so |a| <= (n-1)/2.
inline std::vector<Element> all_totally_positive_cycle_elements(Int n) {
  std::vector<Element> out;
  for (Int i = 1; i <= (n - 1) / 2; ++i) {
    auto part = totally_positive_elements(n, i);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Norm-zero pairs (c <-> n/c, same sign) followed by totally positive
/// y-cycles, each group sorted by representative.
inline std::vector<SpecialUnit> special_units(Int n) {
  std::vector<SpecialUnit> units;
  for (const Element& e : norm_zero_elements(n)) {
    const Element image = apply_generator(Generator::X, e);
    if (image < e) continue;  // reached from the smaller member
    units.emplace_back(NormZeroPair{e, image});
  }

  const auto positive = all_totally_positive_cycle_elements(n);
  std::set<Element> unassigned(positive.begin(), positive.end());
  while (!unassigned.empty()) {
    Cycle cycle = y_cycle(*unassigned.begin());
    if (cycle.members.size() != 1 && cycle.members.size() != 3) {
      throw Error(ErrorCode::CycleGroupingFailure, "y-cycle of size " + std::to_string(cycle.members.size()));
    }
    for (const Element& m : cycle.members) {
      if (unassigned.erase(m) == 0) {
        throw Error(ErrorCode::CycleGroupingFailure, display(m) + " is not in the totally positive set");
      }
    }
    units.emplace_back(PositiveCycle{std::move(cycle)});
  }
  return units;
}

/// |O^G_{-n}|: one G-orbit per special unit.
inline Int count_g_orbits_oracle(Int n) { return static_cast<Int>(special_units(n).size()); }

/// |O^H_{-n}|: each G-orbit splits into the H-orbits of beta and x(beta),
/// which coincide only when beta is fixed by x.
inline Int count_h_orbits_oracle(Int n) {
  Int total = 0;
  for (const auto& unit : special_units(n)) total += self_paired(unit) ? 1 : 2;
  return total;
}

// ---------------------------------------------------------------------------
// Bounded best-first search

inline constexpr Generator kHGenerators[] = {Generator::Y, Generator::Y2, Generator::V, Generator::V2};
inline constexpr Generator kGGenerators[] = {Generator::X, Generator::Y, Generator::Y2, Generator::V, Generator::V2};

struct SearchOptions {
  std::size_t cap = 50'000;  ///< expanded nodes
  Int bound_factor = 16;     ///< frontier keeps m(e) <= factor * (m(start) + m(target) + n)
};

enum class SearchOutcome { Found, CapExhausted, FrontierExhausted };

constexpr const char* to_string(SearchOutcome outcome) {
  switch (outcome) {
    case SearchOutcome::Found: return "found";
    case SearchOutcome::CapExhausted: return "cap exhausted";
    case SearchOutcome::FrontierExhausted: return "bounded frontier exhausted";
  }
  return "?";
}

/// A failed search is inconclusive: it never proves two elements lie in
/// different orbits.
struct SearchResult {
  SearchOutcome outcome;
  Letters path;  ///< apply_word(path, start) == target when found
  std::size_t expanded = 0;

  bool found() const { return outcome == SearchOutcome::Found; }
};

inline Int measure(const Element& e) { return checked::add(checked::abs(e.b()), checked::abs(e.c())); }

namespace detail {

struct ElementKeyHash {
  std::size_t operator()(const std::pair<Int, Int>& key) const noexcept {
    auto mix = [](Int v) {
      const auto u = static_cast<unsigned __int128>(v);
      return static_cast<std::uint64_t>(u) ^ (static_cast<std::uint64_t>(u >> 64) * 0x9e3779b97f4a7c15ULL);
    };
    return static_cast<std::size_t>(mix(key.first) * 31 + mix(key.second));
  }
};

}  // namespace detail

inline SearchResult bounded_search(const Element& start, const Element& target, std::span<const Generator> gens,
                                   const SearchOptions& options = {}) {
  if (start.n() != target.n()) throw Error(ErrorCode::OutOfRange, "start and target lie in different fields");
  if (start == target) return {SearchOutcome::Found, {}, 0};

  const Int bound = checked::mul(options.bound_factor, measure(start) + measure(target) + start.n());

  struct Node {
    Element element;
    std::size_t parent;
    Generator via;
  };
  std::vector<Node> nodes{{start, 0, Generator::X}};
  std::unordered_map<std::pair<Int, Int>, std::size_t, detail::ElementKeyHash> seen{{{start.a(), start.c()}, 0}};

  using Key = std::tuple<Int, Int, Int, Int, std::size_t>;  // m, |a|, a, c, node
  auto key_of = [](const Element& e, std::size_t index) {
    return Key{measure(e), checked::abs(e.a()), e.a(), e.c(), index};
  };
  std::priority_queue<Key, std::vector<Key>, std::greater<>> frontier;
  frontier.push(key_of(start, 0));

  auto path_to = [&](std::size_t index) {
    Letters applied;
    for (; index != 0; index = nodes[index].parent) applied.push_back(nodes[index].via);
    // `applied` runs from the last step back to the first, which is already
    // the right-to-left order of a word.
    return applied;
  };

  std::size_t expanded = 0;
  while (!frontier.empty()) {
    if (expanded >= options.cap) return {SearchOutcome::CapExhausted, {}, expanded};
    const std::size_t current = std::get<4>(frontier.top());
    frontier.pop();
    ++expanded;
    for (Generator g : gens) {
      const Element next = apply_generator(g, nodes[current].element);
      if (measure(next) > bound) continue;
      auto [it, inserted] = seen.try_emplace({next.a(), next.c()}, nodes.size());
      if (!inserted) continue;
      nodes.push_back({next, current, g});
      if (next == target) return {SearchOutcome::Found, path_to(nodes.size() - 1), expanded};
      frontier.push(key_of(next, nodes.size() - 1));
    }
  }
  return {SearchOutcome::FrontierExhausted, {}, expanded};
}

// ---------------------------------------------------------------------------
// Splitting of a G-orbit into two H-orbits

enum class Side { BetaSide, XBetaSide };

constexpr const char* to_string(Side side) { return side == Side::BetaSide ? "beta" : "x(beta)"; }

/// For a probe alpha = w(beta): which of beta, x(beta) shares alpha's H-orbit,
/// with an H-word `witness` satisfying witness(anchor) = alpha.
struct SplitResult {
  Side side;
  Element alpha;
  Element anchor;
  HWord witness;

  bool verified() const { return apply_word(to_letters(witness), anchor) == alpha; }
};

/// w in H: alpha = w(beta) directly. Otherwise x_reduce(w^-1) = x w^-1 lies
/// in H and its inverse w x carries x(beta) to alpha.
inline SplitResult split_side(const GWord& probe_word, const Element& beta) {
  const Element alpha = apply_word(to_letters(probe_word), beta);
  if (is_in_h(inverse(probe_word))) {
    auto witness = g_to_h(probe_word);
    if (!witness) throw Error(ErrorCode::InternalInvariantBroken, "even word " + to_string(probe_word) + " outside H");
    return {Side::BetaSide, alpha, beta, *witness};
  }
  return {Side::XBetaSide, alpha, apply_generator(Generator::X, beta), inverse(x_reduce(inverse(probe_word)))};
}

inline SplitResult split_side(const GWord& probe_word, const SpecialUnit& unit) {
  return split_side(probe_word, representative(unit));
}

struct SplitEvidence {
  std::size_t beta_side = 0;
  std::size_t x_beta_side = 0;
  std::size_t unverified = 0;  ///< witnesses that failed to re-evaluate
  SearchResult beta_to_x_beta;  ///< H-search from beta to x(beta)

  /// Both sides populated, every witness checked, and no H-path found.
  bool consistent() const { return beta_side > 0 && x_beta_side > 0 && unverified == 0 && !beta_to_x_beta.found(); }
};

inline SplitEvidence gather_split_evidence(const SpecialUnit& unit, std::span<const GWord> probes,
                                           const SearchOptions& options = {}) {
  SplitEvidence out;
  const Element& beta = representative(unit);
  for (const GWord& w : probes) {
    const SplitResult r = split_side(w, beta);
    (r.side == Side::BetaSide ? out.beta_side : out.x_beta_side) += 1;
    if (!r.verified()) ++out.unverified;
  }
  out.beta_to_x_beta = bounded_search(beta, apply_generator(Generator::X, beta), kHGenerators, options);
  return out;
}

}  // namespace modorbit
