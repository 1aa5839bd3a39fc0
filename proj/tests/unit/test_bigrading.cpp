#include "acs/catalog.hpp"
#include "generators.hpp"

#include <doctest.h>

using namespace acs;

namespace {

Form term(const Space& sp, std::initializer_list<int> gens, Gaussian c) {
  Form f = Form::scalar(sp, FormalCoefficient(c));
  for (int g : gens) f = wedge(f, Form::generator(sp, g));
  return f;
}

const Gaussian kInv2i(0, mpq_class(-1, 2));  // 1/(2i)

}  // namespace

TEST_CASE("split_d on the Iwasawa coframe") {
  const auto iw = build_structure(builtin("iwasawa"));
  const Space sp = iw->space();
  const OperatorSplit s = iw->split_d(iw->phi(2));
  CHECK(s.mu.is_zero());
  CHECK(s.del == term(sp, {0, 1}, Gaussian(-1)));
  CHECK(s.delbar.is_zero());
  CHECK(s.mubar.is_zero());
}

TEST_CASE("split_d on nil4 reproduces the four displayed parts") {
  const auto nil4 = build_structure(builtin("nil4"));
  const Space sp = nil4->space();
  const OperatorSplit s = nil4->split_d(nil4->phi(1));
  // phi1, phi2, ~phi1, ~phi2 are generators 0..3
  CHECK(s.mu.is_zero());
  CHECK(s.del == term(sp, {0, 1}, kInv2i));
  CHECK(s.delbar == term(sp, {0, 3}, kInv2i) - term(sp, {1, 2}, kInv2i) + term(sp, {0, 2}, -Gaussian::i()));
  CHECK(s.mubar == term(sp, {2, 3}, kInv2i));
  CHECK(s.sum() == nil4->d(nil4->phi(1)));
  CHECK_THROWS_AS(nil4->split_d(nil4->phi(0) + term(sp, {0, 1}, Gaussian(1))), MixedBidegree);
}

TEST_CASE("split_d vanishes on the abelian algebra") {
  const auto torus = build_structure(builtin("torus3"));
  support::Gen gen(3);
  for (int trial = 0; trial < 10; ++trial) {
    const OperatorSplit s = torus->split_d(gen.bidegree_form(torus->space(), gen.integer(0, 3), gen.integer(0, 3)));
    CHECK(s.sum().is_zero());
  }
}

TEST_CASE("bidegree relations") {
  const auto nil4 = build_structure(builtin("nil4"));
  const RelationReport r = nil4->check_relations();
  CHECK(r.relations.size() == 7);
  CHECK(r.all_hold());
  CHECK_FALSE(r.del_squared_vanishes);

  const auto iw = build_structure(builtin("iwasawa"));
  const RelationReport ri = iw->check_relations();
  CHECK(ri.all_hold());
  CHECK(ri.del_squared_vanishes);
  const Space sp = iw->space();
  for (Word w = 0; w <= sp.full_mask(); ++w) {
    const Form f = Form::word(sp, w);
    CHECK(iw->apply(Part::Mu, f).is_zero());
    CHECK(iw->apply(Part::MuBar, f).is_zero());
    CHECK(iw->apply(Part::DelBar, iw->apply(Part::DelBar, f)).is_zero());
    CHECK((iw->apply(Part::Del, iw->apply(Part::DelBar, f)) + iw->apply(Part::DelBar, iw->apply(Part::Del, f))).is_zero());
  }
  CHECK(build_structure(builtin("torus2"))->check_relations().all_hold());
}

TEST_CASE("integrability") {
  CHECK(build_structure(builtin("iwasawa"))->is_integrable());
  CHECK(build_structure(builtin("torus2"))->is_integrable());
  CHECK(build_structure(builtin("torus3"))->is_integrable());
  CHECK(build_structure(builtin("kodaira_thurston"))->is_integrable());
  const auto nil4 = build_structure(builtin("nil4"));
  CHECK_FALSE(nil4->is_integrable());
  CHECK(nil4->d(nil4->phi(1)).project_bidegree(0, 2) == term(nil4->space(), {2, 3}, kInv2i));
}

TEST_CASE("real structure round trip") {
  // the real coframe of a complex catalog entry is a real Lie algebra whose
  // own complexification gives back an almost complex structure of the same type
  for (const auto& name : builtin_names()) {
    const auto acs = build_structure(builtin(name));
    const RealStructure real = acs->real_structure();
    CHECK(real.coframe.jacobi_ok());
    const StructuredAlgebra alg = real.coframe.to_algebra();
    CHECK(alg.jacobi_ok);
    const auto again = AlmostComplexStructure::from_real(alg, real.j_images);
    CHECK(again.is_integrable() == acs->is_integrable());
    CHECK(again.check_relations().all_hold());
  }
}

TEST_CASE("real mode nil4 matches the complex catalog entry qualitatively") {
  const std::string text =
      "manifold nil4_real\nreal_dim 4\nJ 0 -1 0 0\nJ 1 0 0 0\nJ 0 0 0 -1\nJ 0 0 1 0\n"
      "d e3 = -e1^e2\nd e4 = -e1^e3\n";
  const auto acs = build_structure(parse_structure_file(text));
  CHECK_FALSE(acs->is_integrable());
  CHECK(acs->check_relations().all_hold());
  CHECK(almost_kahler_obstruction(*acs).found);
}
