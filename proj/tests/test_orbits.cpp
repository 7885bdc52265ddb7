#include <set>

#include <gtest/gtest.h>

#include "modorbit/counting.hpp"
#include "modorbit/orbits.hpp"

namespace modorbit {
namespace {

std::size_t count_with_sign(const std::vector<Element>& elements, bool positive_a) {
  return static_cast<std::size_t>(
      std::count_if(elements.begin(), elements.end(), [&](const Element& e) { return (e.a() > 0) == positive_a; }));
}

std::size_t count_pairs(const std::vector<SpecialUnit>& units) {
  return static_cast<std::size_t>(std::count_if(units.begin(), units.end(), [](const SpecialUnit& u) {
    return std::holds_alternative<NormZeroPair>(u);
  }));
}

// Brute force: every element with 1 <= |a| <= limit whose whole y-cycle
// classifies as totally positive.
std::set<Element> positive_cycle_elements_by_scan(Int n, Int limit) {
  std::set<Element> out;
  for (Int a = -limit; a <= limit; ++a) {
    if (a == 0) continue;
    const Int k = a * a + n;
    for (Int c = 1; c <= k; ++c) {
      if (k % c != 0) continue;
      for (Int signed_c : {c, -c}) {
        const Element e = make_element(a, signed_c, n);
        const Cycle cyc = y_cycle(e);
        if (all_members(cyc, SignClass::TotallyPositive)) out.insert(e);
      }
    }
  }
  return out;
}

TEST(Orbits, NormZeroExamples) {
  EXPECT_EQ(norm_zero_elements(1), (std::vector<Element>{make_element(0, -1, 1), make_element(0, 1, 1)}));
  const auto fifteen = norm_zero_elements(15);
  ASSERT_EQ(fifteen.size(), 8u);
  std::set<Int> cs;
  for (const auto& e : fifteen) cs.insert(e.c());
  EXPECT_EQ(cs, (std::set<Int>{-15, -5, -3, -1, 1, 3, 5, 15}));
  EXPECT_EQ(norm_zero_elements(5).size(), 4u);
  for (Int n = 1; n <= 300; ++n) {
    if (is_square_free(n)) {
      ASSERT_EQ(static_cast<Int>(norm_zero_elements(n).size()), 2 * d(n));
    }
  }
}

TEST(Orbits, TotallyPositiveExamples) {
  const auto n21 = totally_positive_elements(21, 1);
  EXPECT_EQ(count_with_sign(n21, true), 2u);
  EXPECT_EQ(count_with_sign(n21, false), 2u);

  const auto n3 = totally_positive_elements(3, 1);
  EXPECT_EQ(n3, (std::vector<Element>{make_element(-1, -2, 3), make_element(1, 2, 3)}));
  for (const auto& e : n3) EXPECT_EQ(apply_generator(Generator::Y, e), e);

  EXPECT_TRUE(totally_positive_elements(21, 4).empty());
  EXPECT_THROW(totally_positive_elements(21, 11), Error);
  EXPECT_THROW(totally_positive_elements(21, 0), Error);
  EXPECT_THROW(totally_positive_elements(2, 1), Error);
}

TEST(Orbits, TotallyPositiveCountMatchesDivisorFormula) {
  for (Int n = 1; n <= 300; ++n) {
    if (!is_square_free(n)) continue;
    for (Int i = 1; i <= (n - 1) / 2; ++i) {
      const auto elements = totally_positive_elements(n, i);
      const Int k = i * i + n;
      const auto expected = static_cast<std::size_t>(d(k) - 2 * d_leq(i, k));
      ASSERT_EQ(count_with_sign(elements, true), expected) << "n=" << to_string(n) << " i=" << to_string(i);
      ASSERT_EQ(count_with_sign(elements, false), expected);
    }
  }
}

TEST(Orbits, CycleFilterMatchesDirectClassification) {
  for (Int n = 1; n <= 60; ++n) {
    if (!is_square_free(n)) continue;
    const auto filtered = all_totally_positive_cycle_elements(n);
    const auto scanned = positive_cycle_elements_by_scan(n, n + 2);
    ASSERT_EQ(std::set<Element>(filtered.begin(), filtered.end()), scanned) << to_string(n);
  }
}

TEST(Orbits, CycleCharacterisationsOnBoxes) {
  for (Int n : {1, 2, 3, 5, 7, 21}) {
    for (const Element& e : elements_in_box(n, 30, 30)) {
      const Int a = e.a(), b = e.b(), c = e.c();
      const bool y_positive = all_members(y_cycle(e), SignClass::TotallyPositive);
      const bool v_negative = all_members(v_cycle(e), SignClass::TotallyNegative);
      EXPECT_EQ(y_positive, (a > 0 && a < b && a < c) || (a < 0 && a > b && a > c)) << display(e);
      EXPECT_EQ(v_negative, (a > 0 && -a > b && -a > c) || (a < 0 && -a < b && -a < c)) << display(e);
      EXPECT_EQ(y_positive, all_members(v_cycle(apply_generator(Generator::X, e)), SignClass::TotallyNegative));
    }
  }
}

TEST(Orbits, SpecialUnitExamples) {
  const auto two = special_units(2);
  EXPECT_EQ(two.size(), 2u);
  EXPECT_EQ(count_pairs(two), 2u);

  const auto three = special_units(3);
  ASSERT_EQ(three.size(), 4u);
  EXPECT_EQ(count_pairs(three), 2u);
  for (const auto& u : three) {
    if (const auto* cyc = std::get_if<PositiveCycle>(&u)) {
      EXPECT_EQ(cyc->cycle.members.size(), 1u);
    }
  }

  const auto n21 = special_units(21);
  EXPECT_EQ(n21.size(), 8u);
  EXPECT_EQ(count_pairs(n21), 4u);

  const auto one = special_units(1);
  ASSERT_EQ(one.size(), 2u);
  for (const auto& u : one) EXPECT_TRUE(self_paired(u));
}

TEST(Orbits, OracleCounts) {
  EXPECT_EQ(count_g_orbits_oracle(1), 2);
  EXPECT_EQ(count_g_orbits_oracle(2), 2);
  EXPECT_EQ(count_g_orbits_oracle(26), 12);
  EXPECT_EQ(count_h_orbits_oracle(1), 2);
  EXPECT_EQ(count_h_orbits_oracle(2), 4);
  EXPECT_EQ(count_h_orbits_oracle(21), 16);
  EXPECT_EQ(count_h_orbits_oracle(26), 24);
  EXPECT_THROW(count_h_orbits_oracle(8), Error);
}

TEST(Orbits, UnitStructure) {
  for (Int n = 1; n <= 300; ++n) {
    if (!is_square_free(n)) continue;
    for (const auto& unit : special_units(n)) {
      if (const auto* pair = std::get_if<NormZeroPair>(&unit)) {
        ASSERT_EQ(pair->beta.a(), 0);
        ASSERT_EQ(pair->x_beta.a(), 0);
        ASSERT_EQ(apply_generator(Generator::X, pair->beta), pair->x_beta);
        ASSERT_EQ(pair->self_paired(), n == 1);
        continue;
      }
      const Cycle& cyc = std::get<PositiveCycle>(unit).cycle;
      ASSERT_EQ(cyc.members.size(), n == 3 ? 1u : 3u) << to_string(n);
      ASSERT_TRUE(all_members(cyc, SignClass::TotallyPositive));
      for (const Element& m : cyc.members) {
        ASSERT_TRUE(all_members(v_cycle(apply_generator(Generator::X, m)), SignClass::TotallyNegative));
        ASSERT_EQ(y_cycle(m).members, cyc.members);
      }
    }
    ASSERT_EQ(count_h_orbits_oracle(n), count_h_orbits_formula(n)) << to_string(n);
  }
}

TEST(Orbits, SearchExamples) {
  const auto r1 = bounded_search(make_element(1, 2, 5), make_element(1, 3, 5), kHGenerators);
  ASSERT_TRUE(r1.found());
  EXPECT_EQ(to_string(r1.path), "y2");

  const auto r2 = bounded_search(make_element(-1, -4, 7), make_element(-3, -4, 7), kHGenerators);
  ASSERT_TRUE(r2.found());
  EXPECT_EQ(to_string(r2.path), "y2");

  const Element e = make_element(2, 3, 5);
  const auto r3 = bounded_search(e, e, kHGenerators);
  EXPECT_TRUE(r3.found());
  EXPECT_TRUE(r3.path.empty());

  EXPECT_THROW(bounded_search(e, make_element(0, 1, 1), kHGenerators), Error);
}

TEST(Orbits, SearchWitnessesReevaluate) {
  const Element start = make_element(-1, -4, 7);
  for (const Element& target : elements_in_box(7, 8, 8)) {
    const auto r = bounded_search(start, target, kGGenerators, SearchOptions{5'000});
    if (r.found()) {
      ASSERT_EQ(apply_word(r.path, start), target) << to_string(r.path);
    }
  }
  // x-images are one G-step away.
  const auto r = bounded_search(start, apply_generator(Generator::X, start), kGGenerators);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(to_string(r.path), "x");
}

TEST(Orbits, SearchReportsCap) {
  const Element beta = make_element(0, 1, 2);
  const auto r = bounded_search(beta, apply_generator(Generator::X, beta), kHGenerators, SearchOptions{100});
  EXPECT_FALSE(r.found());
  EXPECT_LE(r.expanded, 100u);
}

TEST(Orbits, SplitSideExamples) {
  const Element beta = make_element(0, 1, 2);
  const auto y = split_side(parse_g_word("y"), beta);
  EXPECT_EQ(y.side, Side::BetaSide);
  EXPECT_EQ(to_string(y.witness), "y");
  EXPECT_TRUE(y.verified());

  const auto x = split_side(parse_g_word("x"), beta);
  EXPECT_EQ(x.side, Side::XBetaSide);
  EXPECT_EQ(x.anchor, make_element(0, 2, 2));
  EXPECT_EQ(x.alpha, make_element(0, 2, 2));
  EXPECT_TRUE(x.verified());

  const auto v = split_side(parse_g_word("xyx"), beta);
  EXPECT_EQ(v.side, Side::BetaSide);
  EXPECT_EQ(to_string(v.witness), "v");
  EXPECT_TRUE(v.verified());
}

TEST(Orbits, SplitEvidenceForOneUnit) {
  WordSampler sampler(7);
  std::vector<GWord> probes;
  for (int i = 0; i < 200; ++i) probes.push_back(sampler.g_word());
  for (const auto& unit : special_units(7)) {
    const auto ev = gather_split_evidence(unit, probes, SearchOptions{2'000});
    EXPECT_EQ(ev.beta_side + ev.x_beta_side, probes.size());
    EXPECT_TRUE(ev.consistent()) << display(representative(unit));
  }
}

// The same search that finds nothing between beta and x(beta) does connect
// beta to the images of short probe words on its own side.
TEST(Orbits, SearchConnectsSameSideProbes) {
  WordSampler sampler(11, 4);
  for (Int n : {2, 5, 7, 21}) {
    for (const auto& unit : special_units(n)) {
      for (int t = 0; t < 40; ++t) {
        const GWord w = sampler.g_word();
        const SplitResult r = split_side(w, unit);
        const auto found = bounded_search(r.anchor, r.alpha, kHGenerators);
        ASSERT_TRUE(found.found()) << "n=" << to_string(n) << " word " << to_string(w);
        ASSERT_EQ(apply_word(found.path, r.anchor), r.alpha);
      }
    }
  }
}

}  // namespace
}  // namespace modorbit
