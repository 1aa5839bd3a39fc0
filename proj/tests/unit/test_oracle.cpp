#include "acs/catalog.hpp"
#include "bridge.hpp"
#include "generators.hpp"

#include <doctest.h>

using namespace acs;

TEST_CASE("d agrees with the bracket-evaluation oracle on every basis word") {
  for (const auto& name : builtin_names()) {
    const ManifoldDescriptor d = builtin(name);
    const auto acs = build_structure(d);
    const auto frame = support::oracle_frame(d);
    const Space sp = acs->space();
    for (Word w = 0; w <= sp.full_mask(); ++w) {
      CHECK(support::to_oracle(acs->d(Form::word(sp, w))) == oracle::d(frame, w));
      if (w == sp.full_mask()) break;
    }
  }
}

TEST_CASE("Riemannian star agrees with the Gram-determinant oracle") {
  support::Gen gen(314);
  for (const auto& name : builtin_names()) {
    const ManifoldDescriptor d = builtin(name);
    const auto acs = build_structure(d);
    const int n = acs->n();
    for (int trial = 0; trial < 4; ++trial) {
      const Matrix h = gen.hermitian(n);
      const HermitianGeometry g(acs, HermitianMetric::constant(h), d.omega_scale);
      const Word w = gen.word(g.space(), gen.integer(0, 2 * n));
      const oracle::Vec expected = oracle::star(n, support::to_oracle(h), support::to_oracle(d.omega_scale), w);
      CHECK(support::to_oracle(g.hodge_star(Form::word(g.space(), w))) == expected);
    }
  }
}

TEST_CASE("del-adjoint of omega on nil4 agrees with -* delbar * computed by the oracle") {
  const ManifoldDescriptor d = builtin("nil4");
  const auto acs = build_structure(d);
  const HermitianGeometry g(acs, HermitianMetric::diagonal({1, 1}), d.omega_scale);
  const auto frame = support::oracle_frame(d);
  const oracle::Mat h = support::to_oracle(Matrix::identity(2));
  const oracle::C kappa = support::to_oracle(d.omega_scale);
  auto ostar = [&](const oracle::Vec& v) {
    oracle::Vec out;
    for (const auto& [w, c] : v)
      for (const auto& [u, x] : oracle::star(2, h, kappa, w)) out[u] = out[u] + c * x;
    return out;
  };
  const oracle::Vec omega = support::to_oracle(g.fundamental_form());
  const oracle::Vec starred = ostar(omega);
  const oracle::Vec dbar = oracle::bidegree_part(oracle::d(frame, starred), 2, 1, 2);
  oracle::Vec expected;
  for (const auto& [w, c] : ostar(dbar))
    if (!c.zero()) expected[w] = oracle::C(0) - c;
  CHECK_FALSE(expected.empty());
  CHECK(support::to_oracle(g.adjoint(Adjoint::Del, g.fundamental_form())) == expected);
}

TEST_CASE("harmonic dimensions agree with the brute-force kernel") {
  support::Gen gen(1618);
  for (const auto& name : builtin_names()) {
    const ManifoldDescriptor d = builtin(name);
    const auto acs = build_structure(d);
    const auto frame = support::oracle_frame(d);
    const int n = acs->n();
    for (int trial = 0; trial < 2; ++trial) {
      const Matrix h = trial == 0 ? Matrix::identity(n) : gen.hermitian(n);
      const HermitianGeometry g(acs, HermitianMetric::constant(h), d.omega_scale);
      for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q)
          CHECK(g.harmonic_space(p, q).dimension() ==
                oracle::harmonic_dimension(frame, support::to_oracle(h), support::to_oracle(d.omega_scale), p, q));
    }
  }
}

TEST_CASE("closed J-compatible forms agree with a complex (1,1) kernel count") {
  for (const auto& name : builtin_names()) {
    const ManifoldDescriptor d = builtin(name);
    const auto acs = build_structure(d);
    const auto frame = support::oracle_frame(d);
    // closed (1,1)-forms: kernel of d restricted to (1,1) words
    std::vector<Word> words = acs->space().words_of_bidegree(1, 1);
    std::map<Word, std::vector<oracle::C>> rows;
    for (std::size_t j = 0; j < words.size(); ++j)
      for (const auto& [w, c] : oracle::d(frame, words[j])) {
        auto& row = rows[w];
        row.resize(words.size());
        row[j] = c;
      }
    oracle::Mat m;
    for (auto& [w, row] : rows) m.push_back(row);
    const std::size_t closed = words.size() - oracle::rank(m);
    CHECK(almost_kahler_obstruction(*acs).compatible_closed_forms.size() == closed);
  }
}
