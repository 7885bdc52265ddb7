#include <utility>

#include <gtest/gtest.h>

#include "modorbit/action.hpp"

namespace modorbit {
namespace {

// ---------------------------------------------------------------------------
// Independent oracle: act on z = re + im*sqrt(-n) with exact rationals by the
// linear fractional maps x: z -> -1/z and y: z -> (z-1)/z.

struct Rational {
  Int num;
  Int den;

  static Rational make(Int num, Int den) {
    if (den < 0) num = -num, den = -den;
    Int g = num < 0 ? -num : num, h = den;
    while (h != 0) g = std::exchange(h, g % h);
    return {num / g, den / g};
  }
  friend Rational operator+(Rational l, Rational r) { return make(l.num * r.den + r.num * l.den, l.den * r.den); }
  friend Rational operator-(Rational l, Rational r) { return make(l.num * r.den - r.num * l.den, l.den * r.den); }
  friend Rational operator*(Rational l, Rational r) { return make(l.num * r.num, l.den * r.den); }
  friend Rational operator/(Rational l, Rational r) { return make(l.num * r.den, l.den * r.num); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct Quad {
  Rational re;
  Rational im;  // coefficient of sqrt(-n)
};

Quad divide(Quad p, Quad q, Int n) {
  // p/q = p * conj(q) / |q|^2, |q|^2 = re^2 + n im^2
  const Rational nn{n, 1};
  const Rational norm = q.re * q.re + nn * q.im * q.im;
  const Rational re = p.re * q.re + nn * p.im * q.im;
  const Rational im = p.im * q.re - p.re * q.im;
  return {re / norm, im / norm};
}

Quad mobius(Int p, Int q, Int r, Int s, Quad z, Int n) {
  const Quad top{Rational{p, 1} * z.re + Rational{q, 1}, Rational{p, 1} * z.im};
  const Quad bottom{Rational{r, 1} * z.re + Rational{s, 1}, Rational{r, 1} * z.im};
  return divide(top, bottom, n);
}

Quad mobius_image(Generator g, Quad z, Int n) {
  auto x = [n](Quad w) { return mobius(0, -1, 1, 0, w, n); };
  auto y = [n](Quad w) { return mobius(1, -1, 1, 0, w, n); };
  switch (g) {
    case Generator::X: return x(z);
    case Generator::Y: return y(z);
    case Generator::Y2: return y(y(z));
    case Generator::V: return x(y(x(z)));
    case Generator::V2: return x(y(y(x(z))));
  }
  return z;
}

Quad as_quad(const Element& e) { return {Rational::make(e.a(), e.c()), Rational::make(1, e.c())}; }

constexpr Generator kAll[] = {Generator::X, Generator::Y, Generator::Y2, Generator::V, Generator::V2};

TEST(Action, TableMatchesLinearFractionalMaps) {
  for (Int n : {1, 2, 3, 5, 7, 10}) {
    for (const Element& e : elements_in_box(n, 15, 15)) {
      for (Generator g : kAll) {
        const Element image = apply_generator(g, e);
        const Quad expected = mobius_image(g, as_quad(e), n);
        ASSERT_TRUE(expected.im.num == 1 || expected.im.num == -1) << "image is not (a+sqrt(-n))/c";
        const Int c = expected.im.den * expected.im.num;
        ASSERT_EQ(expected.re.num * c % expected.re.den, 0);
        const Element oracle = make_element(expected.re.num * c / expected.re.den, c, n);
        ASSERT_EQ(image, oracle) << to_string(g) << " on " << display(e);
      }
    }
  }
}

// ---------------------------------------------------------------------------

TEST(Action, GeneratorExamples) {
  const Element alpha = make_element(2, 3, 5);
  EXPECT_EQ(apply_generator(Generator::Y, alpha), make_element(1, 3, 5));
  EXPECT_EQ(apply_generator(Generator::Y2, alpha), make_element(1, 2, 5));
  EXPECT_EQ(apply_generator(Generator::V, make_element(1, -2, 7)), make_element(1, -4, 7));
}

TEST(Action, WordExamples) {
  const Element alpha = make_element(-1, -4, 7);
  EXPECT_EQ(apply_word({}, alpha), alpha);
  EXPECT_EQ(apply_word(parse_letters("vx"), alpha), make_element(1, -4, 7));
  EXPECT_EQ(apply_word(parse_letters("v2x"), alpha), make_element(3, -4, 7));
  EXPECT_EQ(apply_word(parse_letters("x"), alpha), make_element(1, -2, 7));
  EXPECT_EQ(apply_word(parse_letters("yyy"), make_element(2, 3, 5)), make_element(2, 3, 5));
}

TEST(Action, ParseLetters) {
  using G = Generator;
  EXPECT_EQ(parse_letters("vy2x"), (Letters{G::V, G::Y2, G::X}));
  EXPECT_EQ(parse_letters("y2y"), (Letters{G::Y2, G::Y}));
  EXPECT_TRUE(parse_letters("").empty());
  EXPECT_TRUE(parse_letters("identity").empty());
  EXPECT_THROW(parse_letters("xz"), Error);
  EXPECT_THROW(parse_letters("x2"), Error);
  EXPECT_EQ(to_string(parse_letters("xy2v2")), "xy2v2");
}

TEST(Action, RelationExamples) {
  const auto box = elements_in_box(5, 10, 10);
  const RelationReport report = verify_relations(box);
  EXPECT_EQ(report.elements, box.size());
  EXPECT_EQ(report.checks, 6 * box.size());

  const std::vector<Element> root{make_element(0, 1, 1)};
  EXPECT_EQ(verify_relations(root).checks, 6u);
  EXPECT_EQ(apply_generator(Generator::X, root[0]), root[0]);

  EXPECT_NO_THROW(verify_relations(std::vector<Element>{make_element(-1, -4, 7)}));
  EXPECT_THROW(verify_relations(std::vector<Element>{}), Error);
}

TEST(Action, ClosureAndSignLemmas) {
  for (Int n : {1, 2, 3, 5, 6, 7, 11, 13, 21}) {
    for (const Element& e : elements_in_box(n, 25, 25)) {
      const Element x = apply_generator(Generator::X, e);
      const Element y = apply_generator(Generator::Y, e);
      const Element y2 = apply_generator(Generator::Y2, e);
      const Element v = apply_generator(Generator::V, e);
      const Element v2 = apply_generator(Generator::V2, e);
      for (const Element& image : {x, y, y2, v, v2}) ASSERT_EQ(image.n(), n);

      const SignClass s = classify(e);
      auto tp = [](const Element& t) { return classify(t) == SignClass::TotallyPositive; };
      auto tn = [](const Element& t) { return classify(t) == SignClass::TotallyNegative; };
      EXPECT_EQ(tn(x), s == SignClass::TotallyPositive);
      EXPECT_EQ(tp(x), s == SignClass::TotallyNegative);
      EXPECT_EQ(classify(x) == SignClass::NormZero, s == SignClass::NormZero);
      if (s == SignClass::TotallyPositive) {
        EXPECT_TRUE(tp(y) || tp(y2)) << display(e);
        EXPECT_TRUE(tn(v) && tn(v2)) << display(e);
      } else if (s == SignClass::TotallyNegative) {
        EXPECT_TRUE(tn(v) || tn(v2)) << display(e);
        EXPECT_TRUE(tp(y) && tp(y2)) << display(e);
      } else {
        EXPECT_TRUE(tp(y) && tp(y2) && tn(v) && tn(v2)) << display(e);
      }
    }
  }
}

TEST(Action, ElementsInBoxRejectsBadN) { EXPECT_THROW(elements_in_box(12, 3, 3), Error); }

}  // namespace
}  // namespace modorbit
