#include "acs/catalog.hpp"
#include "generators.hpp"

#include <doctest.h>

using namespace acs;

namespace {

FormalCoefficient sigma_word(DerivWord w) { return FormalCoefficient::derivative(std::move(w)); }

// Random coefficient: sums of c e^(a s) W1 W2 with short normal-ordered words.
FormalCoefficient random_coefficient(support::Gen& gen, const FrameBracketTable& t) {
  FormalCoefficient f;
  const int terms = gen.integer(1, 3);
  for (int k = 0; k < terms; ++k) {
    std::vector<DerivWord> words;
    const int factors = gen.integer(0, 2);
    for (int j = 0; j < factors; ++j) {
      DerivWord w;
      const int len = gen.integer(1, 2);
      for (int l = 0; l < len; ++l) w.push_back(static_cast<std::uint8_t>(gen.integer(0, t.letters() - 1)));
      words.push_back(w);
    }
    f += FormalCoefficient::normalized_term(gen.gaussian(), mpq_class(gen.integer(-2, 2)), words, t);
  }
  return f;
}

}  // namespace

TEST_CASE("normal ordering of derivative words") {
  const auto iw = build_structure(builtin("iwasawa"));
  const auto& t = iw->frame_brackets();
  // V2 V1 = V1 V2 - V3
  const WordCombination n = normalize_word({1, 0}, t);
  CHECK(n.size() == 2);
  CHECK(n.at({0, 1}) == Gaussian(1));
  CHECK(n.at({2}) == Gaussian(-1));
  // Vb3 V3 = V3 Vb3
  const WordCombination m = normalize_word({5, 2}, t);
  CHECK(m.size() == 1);
  CHECK(m.at({2, 5}) == Gaussian(1));
  // abelian: untouched
  const auto torus = build_structure(builtin("torus3"));
  const WordCombination a = normalize_word({0, 1}, torus->frame_brackets());
  CHECK(a.size() == 1);
  CHECK(a.at({0, 1}) == Gaussian(1));

  // V1V2(s) - V2V1(s) - V3(s) vanishes
  const FormalCoefficient lhs = sigma_word({0, 1}) -
                                FormalCoefficient::normalized_term(Gaussian(1), 0, {{1, 0}}, t) -
                                sigma_word({2});
  CHECK(lhs.is_zero());
}

TEST_CASE("differentiation") {
  const auto iw = build_structure(builtin("iwasawa"));
  const auto& t = iw->frame_brackets();
  // V3 e^(-4 s) = -4 V3(s) e^(-4 s)
  const FormalCoefficient e = FormalCoefficient::exponential(-4);
  CHECK(e.differentiate(2, t) == FormalCoefficient::exponential(-4, Gaussian(-4)) * sigma_word({2}));
  // Vb3 V3(s) = V3 Vb3(s)
  CHECK(sigma_word({2}).differentiate(5, t) == sigma_word({2, 5}));
  // constants differentiate to zero
  for (int a = 0; a < 6; ++a) CHECK(FormalCoefficient(Gaussian(3, 2)).differentiate(a, t).is_zero());
  CHECK(e.to_string(t) == "e^(-4 s)");
}

TEST_CASE("zero tests and conjugation") {
  const auto iw = build_structure(builtin("iwasawa"));
  const auto& t = iw->frame_brackets();
  const FormalCoefficient v = FormalCoefficient::exponential(-4, Gaussian(2)) * sigma_word({2, 5});
  CHECK_FALSE(v.is_zero());
  CHECK(v.to_string(t) == "2 e^(-4 s) V3 Vb3 (s)");
  const Gaussian q(0, mpq_class(-1, 2));  // 1/(2i)
  CHECK(FormalCoefficient(q).conjugate(t) == FormalCoefficient(-q));
  CHECK(FormalCoefficient::exponential(1, Gaussian(2)).inverse() ==
        FormalCoefficient::exponential(-1, Gaussian(mpq_class(1, 2))));
}

TEST_CASE("property: commutators of frame derivatives reproduce the brackets") {
  for (const char* name : {"iwasawa", "nil4", "kodaira_thurston"}) {
    const auto acs = build_structure(builtin(name));
    const auto& t = acs->frame_brackets();
    support::Gen gen(2024);
    for (int trial = 0; trial < 40; ++trial) {
      const FormalCoefficient f = random_coefficient(gen, t);
      const int a = gen.integer(0, t.letters() - 1), b = gen.integer(0, t.letters() - 1);
      FormalCoefficient rhs;
      for (int c = 0; c < t.letters(); ++c)
        if (!t.gamma(c, a, b).is_zero()) rhs += t.gamma(c, a, b) * f.differentiate(c, t);
      const FormalCoefficient lhs = f.differentiate(b, t).differentiate(a, t) - f.differentiate(a, t).differentiate(b, t);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("property: conjugation is an involution compatible with derivatives") {
  for (const char* name : {"iwasawa", "nil4"}) {
    const auto acs = build_structure(builtin(name));
    const auto& t = acs->frame_brackets();
    support::Gen gen(77);
    for (int trial = 0; trial < 40; ++trial) {
      const FormalCoefficient f = random_coefficient(gen, t);
      CHECK(f.conjugate(t).conjugate(t) == f);
      const int a = gen.integer(0, t.letters() - 1);
      CHECK(f.differentiate(a, t).conjugate(t) == f.conjugate(t).differentiate(t.bar(a), t));
    }
  }
}

TEST_CASE("property: arithmetic laws") {
  const auto acs = build_structure(builtin("nil4"));
  const auto& t = acs->frame_brackets();
  support::Gen gen(5);
  for (int trial = 0; trial < 40; ++trial) {
    const FormalCoefficient f = random_coefficient(gen, t), g = random_coefficient(gen, t),
                            h = random_coefficient(gen, t);
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f * g == g * f);
    CHECK((f - f).is_zero());
    // Leibniz rule for each frame derivative
    const int a = gen.integer(0, 3);
    CHECK((f * g).differentiate(a, t) == f.differentiate(a, t) * g + f * g.differentiate(a, t));
  }
}
