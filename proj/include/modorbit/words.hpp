#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "modorbit/action.hpp"
#include "modorbit/error.hpp"

namespace modorbit {

enum class Base { X, Y, V };

/// A maximal power of one generator. X syllables always have exp 1; Y and V
/// syllables have exp 1 or 2.
struct Syllable {
  Base base;
  int exp;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

namespace detail {

/// Multiplies `syl` onto the right of a reduced stack, cancelling x*x and
/// merging powers of y (or v) modulo 3.
inline void push_reduced(std::vector<Syllable>& stack, Syllable syl) {
  const int order = syl.base == Base::X ? 2 : 3;
  syl.exp %= order;
  if (syl.exp == 0) return;
  if (!stack.empty() && stack.back().base == syl.base) {
    const int merged = (stack.back().exp + syl.exp) % order;
    if (merged == 0) {
      stack.pop_back();
    } else {
      stack.back().exp = merged;
    }
    return;
  }
  stack.push_back(syl);
}

inline std::string render(std::span<const Syllable> syllables) {
  if (syllables.empty()) return "identity";
  std::string out;
  for (const Syllable& s : syllables) {
    out += s.base == Base::X ? "x" : s.base == Base::Y ? "y" : "v";
    if (s.exp == 2) out += "2";
  }
  return out;
}

inline Letters letters_of(std::span<const Syllable> syllables) {
  Letters out;
  for (const Syllable& s : syllables) {
    switch (s.base) {
      case Base::X: out.push_back(Generator::X); break;
      case Base::Y: out.push_back(s.exp == 1 ? Generator::Y : Generator::Y2); break;
      case Base::V: out.push_back(s.exp == 1 ? Generator::V : Generator::V2); break;
    }
  }
  return out;
}

}  // namespace detail

/// Normal form in G = <x, y | x^2 = y^3 = 1>: alternating x and y^e syllables.
class GWord {
 public:
  GWord() = default;

  /// Reduces an arbitrary product of syllables (any of x, y, v).
  static GWord from_syllables(std::span<const Syllable> syllables) {
    GWord out;
    for (Syllable s : syllables) out.push(s);
    return out;
  }

  const std::vector<Syllable>& syllables() const { return syllables_; }
  std::size_t size() const { return syllables_.size(); }
  bool is_identity() const { return syllables_.empty(); }

  std::size_t x_count() const {
    return static_cast<std::size_t>(std::count_if(syllables_.begin(), syllables_.end(),
                                                  [](const Syllable& s) { return s.base == Base::X; }));
  }

  friend GWord operator*(const GWord& lhs, const GWord& rhs) {
    GWord out = lhs;
    for (Syllable s : rhs.syllables_) out.push(s);
    return out;
  }
  friend bool operator==(const GWord&, const GWord&) = default;

 private:
  void push(Syllable s) {
    if (s.base == Base::V) {
      detail::push_reduced(syllables_, {Base::X, 1});
      detail::push_reduced(syllables_, {Base::Y, s.exp});
      detail::push_reduced(syllables_, {Base::X, 1});
    } else {
      detail::push_reduced(syllables_, s);
    }
  }

  std::vector<Syllable> syllables_;
};

/// Tags for the six mutually exclusive shapes of a non-identity element of
/// H = <y, v | y^3 = v^3 = 1>.
enum class HClass { Identity, H1, H2, H3, H4, H5, H6 };

constexpr const char* to_string(HClass tag) {
  switch (tag) {
    case HClass::Identity: return "identity";
    case HClass::H1: return "h1";
    case HClass::H2: return "h2";
    case HClass::H3: return "h3";
    case HClass::H4: return "h4";
    case HClass::H5: return "h5";
    case HClass::H6: return "h6";
  }
  return "?";
}

struct HClassification {
  HClass tag = HClass::Identity;
  /// The block count k in the displayed pattern; 0 for identity, h1 and h2.
  std::size_t k = 0;

  friend bool operator==(const HClassification&, const HClassification&) = default;
};

inline HClassification classify_h_word(std::span<const Syllable> syllables);

/// Normal form in H: alternating y^e and v^d syllables, tagged h1..h6.
class HWord {
 public:
  HWord() = default;

  static HWord from_syllables(std::span<const Syllable> syllables) {
    std::vector<Syllable> stack;
    for (Syllable s : syllables) {
      if (s.base == Base::X) throw Error(ErrorCode::ParseError, "x is not a letter of H");
      detail::push_reduced(stack, s);
    }
    HWord out;
    out.syllables_ = std::move(stack);
    out.classification_ = classify_h_word(out.syllables_);
    return out;
  }

  const std::vector<Syllable>& syllables() const { return syllables_; }
  std::size_t size() const { return syllables_.size(); }
  bool is_identity() const { return syllables_.empty(); }
  HClassification classification() const { return classification_; }

  friend HWord operator*(const HWord& lhs, const HWord& rhs) {
    std::vector<Syllable> all = lhs.syllables_;
    all.insert(all.end(), rhs.syllables_.begin(), rhs.syllables_.end());
    return from_syllables(all);
  }
  friend bool operator==(const HWord& lhs, const HWord& rhs) { return lhs.syllables_ == rhs.syllables_; }

 private:
  std::vector<Syllable> syllables_;
  HClassification classification_;
};

inline std::string to_string(const GWord& w) { return detail::render(w.syllables()); }
inline std::string to_string(const HWord& w) { return detail::render(w.syllables()); }
inline Letters to_letters(const GWord& w) { return detail::letters_of(w.syllables()); }
inline Letters to_letters(const HWord& w) { return detail::letters_of(w.syllables()); }

/// Reduces a letter sequence over {x, y, y2, v, v2}; v-letters expand to x y^e x.
inline GWord reduce_g_word(std::span<const Generator> letters) {
  std::vector<Syllable> syllables;
  for (Generator g : letters) {
    switch (g) {
      case Generator::X: syllables.push_back({Base::X, 1}); break;
      case Generator::Y: syllables.push_back({Base::Y, 1}); break;
      case Generator::Y2: syllables.push_back({Base::Y, 2}); break;
      case Generator::V: syllables.push_back({Base::V, 1}); break;
      case Generator::V2: syllables.push_back({Base::V, 2}); break;
    }
  }
  return GWord::from_syllables(syllables);
}

inline GWord parse_g_word(std::string_view text) { return reduce_g_word(parse_letters(text)); }

inline HWord parse_h_word(std::string_view text) {
  std::vector<Syllable> syllables;
  for (Generator g : parse_letters(text)) {
    switch (g) {
      case Generator::Y: syllables.push_back({Base::Y, 1}); break;
      case Generator::Y2: syllables.push_back({Base::Y, 2}); break;
      case Generator::V: syllables.push_back({Base::V, 1}); break;
      case Generator::V2: syllables.push_back({Base::V, 2}); break;
      case Generator::X: throw Error(ErrorCode::ParseError, "x is not a letter of H in '" + std::string(text) + "'");
    }
  }
  return HWord::from_syllables(syllables);
}

namespace detail {

inline std::vector<Syllable> inverted(std::span<const Syllable> syllables) {
  std::vector<Syllable> out(syllables.rbegin(), syllables.rend());
  for (Syllable& s : out) {
    if (s.base != Base::X) s.exp = 3 - s.exp;
  }
  return out;
}

/// Shape test for one displayed pattern: first base, last base, length rule.
struct HPattern {
  HClass tag;
  Base first;
  Base last;
  bool (*length_ok)(std::size_t);
};

inline bool alternates(std::span<const Syllable> syllables) {
  for (std::size_t i = 0; i + 1 < syllables.size(); ++i) {
    if (syllables[i].base == syllables[i + 1].base) return false;
  }
  return true;
}

}  // namespace detail

inline GWord inverse(const GWord& w) { return GWord::from_syllables(detail::inverted(w.syllables())); }
inline HWord inverse(const HWord& w) { return HWord::from_syllables(detail::inverted(w.syllables())); }

/// Matches a reduced H-word against the six displayed patterns
///   h1 = y^e, h2 = v^d, h3 = (y v)^k, h4 = v (y v)^(k-1),
///   h5 = (v y)^k, h6 = y (v y)^(k-1)
/// and requires exactly one hit.
inline HClassification classify_h_word(std::span<const Syllable> syllables) {
  if (syllables.empty()) return {HClass::Identity, 0};
  static constexpr detail::HPattern patterns[] = {
      {HClass::H1, Base::Y, Base::Y, [](std::size_t len) { return len == 1; }},
      {HClass::H2, Base::V, Base::V, [](std::size_t len) { return len == 1; }},
      {HClass::H3, Base::Y, Base::V, [](std::size_t len) { return len >= 2 && len % 2 == 0; }},
      {HClass::H4, Base::V, Base::V, [](std::size_t len) { return len >= 3 && len % 2 == 1; }},
      {HClass::H5, Base::V, Base::Y, [](std::size_t len) { return len >= 2 && len % 2 == 0; }},
      {HClass::H6, Base::Y, Base::Y, [](std::size_t len) { return len >= 3 && len % 2 == 1; }},
  };
  if (!detail::alternates(syllables)) {
    throw Error(ErrorCode::InternalInvariantBroken, "H-word " + detail::render(syllables) + " is not reduced");
  }
  const std::size_t len = syllables.size();
  std::optional<HClass> hit;
  for (const auto& p : patterns) {
    if (syllables.front().base != p.first || syllables.back().base != p.last || !p.length_ok(len)) continue;
    if (hit) throw Error(ErrorCode::InternalInvariantBroken, "H-word matches two patterns");
    hit = p.tag;
  }
  if (!hit) throw Error(ErrorCode::InternalInvariantBroken, "H-word " + detail::render(syllables) + " matches no pattern");
  const std::size_t k = (*hit == HClass::H1 || *hit == HClass::H2) ? 0 : (len + 1) / 2;
  return {*hit, k};
}

inline HClassification classify_h_word(const HWord& w) { return classify_h_word(w.syllables()); }

/// Substitutes v^d -> x y^d x and reduces.
inline GWord h_to_g(const HWord& w) { return GWord::from_syllables(w.syllables()); }

/// Structural parse of a G normal form as a product of y^e and x y^d x blocks.
/// Returns nullopt when the word is not of that shape.
inline std::optional<HWord> g_to_h(std::span<const Syllable> syllables) {
  std::vector<Syllable> out;
  std::size_t i = 0;
  while (i < syllables.size()) {
    if (syllables[i].base == Base::Y) {
      out.push_back(syllables[i]);
      ++i;
    } else if (i + 2 < syllables.size() && syllables[i].base == Base::X && syllables[i + 1].base == Base::Y &&
               syllables[i + 2].base == Base::X) {
      out.push_back({Base::V, syllables[i + 1].exp});
      i += 3;
    } else {
      return std::nullopt;
    }
  }
  return HWord::from_syllables(out);
}

inline std::optional<HWord> g_to_h(const GWord& w) { return g_to_h(w.syllables()); }

/// H is the kernel of the x-parity map G -> Z/2: both relators and both
/// generators y and v = xyx have an even number of x letters.
inline bool is_in_h(const GWord& w) { return w.x_count() % 2 == 0; }

/// The four shapes of an element of G outside H, each with an H-part h.
enum class CosetForm { XH, YXH, HX, HXY };

constexpr const char* to_string(CosetForm form) {
  switch (form) {
    case CosetForm::XH: return "x h";
    case CosetForm::YXH: return "y^g x h";
    case CosetForm::HX: return "h x";
    case CosetForm::HXY: return "h x y^g";
  }
  return "?";
}

/// Every way of reading `w` as x h, y^g x h, h x or h x y^g with h parsed
/// structurally as an H-word.
inline std::vector<CosetForm> coset_forms(const GWord& w) {
  const auto& s = w.syllables();
  const std::size_t len = s.size();
  std::span<const Syllable> all(s);
  std::vector<CosetForm> out;
  if (len >= 1 && s[0].base == Base::X && g_to_h(all.subspan(1))) out.push_back(CosetForm::XH);
  if (len >= 2 && s[0].base == Base::Y && s[1].base == Base::X && g_to_h(all.subspan(2))) out.push_back(CosetForm::YXH);
  if (len >= 1 && s[len - 1].base == Base::X && g_to_h(all.first(len - 1))) out.push_back(CosetForm::HX);
  if (len >= 2 && s[len - 1].base == Base::Y && s[len - 2].base == Base::X && g_to_h(all.first(len - 2))) {
    out.push_back(CosetForm::HXY);
  }
  return out;
}

/// Membership decided without parity: either the word parses as an H-word, or
/// it matches one of the complementary coset forms. Exactly one must hold.
inline bool is_in_h_by_pattern(const GWord& w) {
  const bool parses = g_to_h(w).has_value();
  const bool outside = !coset_forms(w).empty();
  if (parses == outside) {
    throw Error(ErrorCode::InternalInvariantBroken,
                "word " + to_string(w) + (parses ? " is both in and outside H" : " matches no membership pattern"));
  }
  return parses;
}

/// Conjugation by x: swaps y^e and v^e syllables.
inline HWord conjugate_by_x(const HWord& w) {
  std::vector<Syllable> out = w.syllables();
  for (Syllable& s : out) s.base = s.base == Base::Y ? Base::V : Base::Y;
  return HWord::from_syllables(out);
}

/// Rewrites x*w into H using one coset form:
///   x (x h) = h,  x (y^g x h) = v^g h,  x (h x) = xhx,  x (h x y^g) = (xhx) y^g.
inline HWord x_reduce_by_form(const GWord& w, CosetForm form) {
  const auto& s = w.syllables();
  std::span<const Syllable> all(s);
  const std::size_t len = s.size();
  auto part = [&](std::span<const Syllable> piece) {
    auto h = g_to_h(piece);
    if (!h) throw Error(ErrorCode::InternalInvariantBroken, std::string("form ") + to_string(form) + " does not apply");
    return *h;
  };
  switch (form) {
    case CosetForm::XH:
      if (len < 1 || s[0].base != Base::X) break;
      return part(all.subspan(1));
    case CosetForm::YXH: {
      if (len < 2 || s[0].base != Base::Y || s[1].base != Base::X) break;
      const Syllable v_gamma{Base::V, s[0].exp};
      return HWord::from_syllables(std::span(&v_gamma, 1)) * part(all.subspan(2));
    }
    case CosetForm::HX:
      if (len < 1 || s[len - 1].base != Base::X) break;
      return conjugate_by_x(part(all.first(len - 1)));
    case CosetForm::HXY: {
      if (len < 2 || s[len - 1].base != Base::Y || s[len - 2].base != Base::X) break;
      const Syllable y_gamma{Base::Y, s[len - 1].exp};
      return conjugate_by_x(part(all.first(len - 2))) * HWord::from_syllables(std::span(&y_gamma, 1));
    }
  }
  throw Error(ErrorCode::InternalInvariantBroken, std::string("form ") + to_string(form) + " does not apply");
}

/// For w outside H, the H-word equal to x*w in G.
inline HWord x_reduce(const GWord& w) {
  if (is_in_h(w)) throw Error(ErrorCode::AlreadyInH, to_string(w));
  const auto forms = coset_forms(w);
  if (forms.empty()) throw Error(ErrorCode::InternalInvariantBroken, "no coset form for " + to_string(w));
  return x_reduce_by_form(w, forms.front());
}

/// Seeded generators for property tests. Syllable counts are geometric with
/// mean 8, truncated at `max_len` to keep images inside 128-bit range.
class WordSampler {
 public:
  explicit WordSampler(std::uint64_t seed, std::size_t max_len = 48) : rng_(seed), max_len_(max_len) {}

  std::size_t length() { return std::min(max_len_, static_cast<std::size_t>(length_dist_(rng_))); }

  /// Alternating x / y^e syllables, reduced by construction.
  GWord g_word() {
    std::vector<Syllable> out;
    bool x_turn = coin_(rng_);
    for (std::size_t i = length(); i > 0; --i, x_turn = !x_turn) {
      out.push_back(x_turn ? Syllable{Base::X, 1} : Syllable{Base::Y, exp_dist_(rng_)});
    }
    return GWord::from_syllables(out);
  }

  /// Alternating y^e / v^d syllables, reduced by construction.
  HWord h_word() {
    std::vector<Syllable> out;
    bool y_turn = coin_(rng_);
    for (std::size_t i = length(); i > 0; --i, y_turn = !y_turn) {
      out.push_back({y_turn ? Base::Y : Base::V, exp_dist_(rng_)});
    }
    return HWord::from_syllables(out);
  }

  /// Unreduced letters drawn uniformly from {x, y, y2, v, v2}.
  Letters letters() {
    static constexpr Generator all[] = {Generator::X, Generator::Y, Generator::Y2, Generator::V, Generator::V2};
    std::uniform_int_distribution<int> pick(0, 4);
    Letters out;
    for (std::size_t i = length(); i > 0; --i) out.push_back(all[pick(rng_)]);
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::size_t max_len_;
  std::geometric_distribution<int> length_dist_{1.0 / 9.0};
  std::uniform_int_distribution<int> exp_dist_{1, 2};
  std::bernoulli_distribution coin_{0.5};
};

}  // namespace modorbit
