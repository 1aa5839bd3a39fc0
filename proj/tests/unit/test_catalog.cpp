#include "acs/report.hpp"
#include "generators.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace acs;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("catalog entries") {
  const ManifoldDescriptor iw = builtin("iwasawa");
  CHECK(iw.mode == Mode::Complex);
  CHECK(iw.dimension == 3);
  const Space sp{6, true};
  CHECK(iw.equations[2] == -Form::word(sp, 0b11));
  CHECK(iw.equations[0].is_zero());
  CHECK(build_structure(iw)->is_integrable());

  const ManifoldDescriptor nil4 = builtin("nil4");
  CHECK(nil4.equations[1].terms().size() == 5);
  CHECK(nil4.omega_scale == Gaussian(0, mpq_class(-1, 2)));

  const ManifoldDescriptor torus = builtin("torus3");
  for (const auto& eq : torus.equations) CHECK(eq.is_zero());
  CHECK(build_structure(torus)->is_integrable());
  CHECK_THROWS_AS(builtin("klein"), UnknownName);
}

TEST_CASE("nil4 has exactly two closed real coframe directions") {
  const auto acs = build_structure(builtin("nil4"));
  const RealStructure real = acs->real_structure();
  const Space rs = real.coframe.space();
  Matrix dmat(rs.words_of_degree(2).size(), 4);
  const auto words = rs.words_of_degree(2);
  for (int g = 0; g < 4; ++g) {
    const Form dg = real.coframe.d(Form::generator(rs, g));
    for (std::size_t r = 0; r < words.size(); ++r) dmat(r, g) = dg.coefficient(words[r]).constant();
  }
  CHECK(kernel_basis(dmat).size() == 2);
  const StructuredAlgebra alg = real.coframe.to_algebra();
  REQUIRE(alg.nilpotency_step);
  CHECK(*alg.nilpotency_step == 3);
}

TEST_CASE("parser accepts the coefficient grammar") {
  CHECK(parse_gaussian("3") == Gaussian(3));
  CHECK(parse_gaussian("-1/2") == Gaussian(mpq_class(-1, 2)));
  CHECK(parse_gaussian("1/2i") == Gaussian(0, mpq_class(1, 2)));
  CHECK(parse_gaussian("(1/2)i") == Gaussian(0, mpq_class(1, 2)));
  CHECK(parse_gaussian("(1-2/3i)") == Gaussian(1, mpq_class(-2, 3)));
  CHECK(parse_gaussian("(-1+1i)") == Gaussian(-1, 1));
  CHECK_THROWS_AS(parse_gaussian("1/0"), SyntaxError);

  const auto d = parse_structure_file(
      "# comment line\nmanifold t\ncomplex_dim 2\n\nd phi2 = (1/2)i*phi1^~phi1 + 0 - 2*~phi1^phi1  # trailing\n");
  const Space sp{4, true};
  CHECK(d.equations[1] == Form::word(sp, 0b101, FormalCoefficient(Gaussian(2, mpq_class(1, 2)))));
  CHECK(d.equations[0].is_zero());
}

TEST_CASE("parser diagnostics") {
  try {
    parse_structure_file("manifold x\ncomplex_dim 3\nd phi1 = phi9\n");
    FAIL("expected UndeclaredSymbol");
  } catch (const UndeclaredSymbol& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 10);
    CHECK(e.symbol() == "phi9");
  }
  CHECK_THROWS_AS(parse_structure_file("manifold x\ncomplex_dim 7\n"), DimensionMismatch);
  CHECK_THROWS_AS(parse_structure_file("manifold x\ncomplex_dim 2\nd phi1 = phi1^phi2^~phi1\n"), DimensionMismatch);
  CHECK_THROWS_AS(parse_structure_file("manifold x\nreal_dim 2\nJ 0 1\nd e1 = 0\n"), DimensionMismatch);
  CHECK_THROWS_AS(parse_structure_file("manifold x\nreal_dim 2\nJ 0 -1 3\n"), DimensionMismatch);
  try {
    parse_structure_file("manifold x\ncomplex_dim 2\nd phi2 = 1/2i**phi1^phi2\n");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 15);
    CHECK_FALSE(e.expected().empty());
  }
}

TEST_CASE("round trip on catalog sources and files") {
  for (const auto& name : builtin_names()) {
    const ManifoldDescriptor d = builtin(name);
    CHECK(parse_structure_file(render(d)) == d);
    CHECK(parse_structure_file(slurp(std::string(ACS_CATALOG_DIR) + "/" + name + ".alg")) == d);
  }
  const ManifoldDescriptor real = parse_structure_file(slurp(std::string(ACS_CATALOG_DIR) + "/nil4_real.alg"));
  CHECK(real.mode == Mode::Real);
  CHECK(parse_structure_file(render(real)) == real);
}

TEST_CASE("metric flags render back to themselves") {
  for (const char* text : {"diag:1,2,3", "herm:2,(1+1i),0,(1-1i),3,0,0,0,1", "cdiag:1*exp(-2),1*exp(-2),1*exp(2)"}) {
    const HermitianMetric m = parse_metric(text, 3);
    CHECK(m.to_string() == text);
  }
}

TEST_CASE("reports are deterministic and ordered") {
  const ManifoldDescriptor d = builtin("nil4");
  const auto acs = build_structure(d);
  const HermitianGeometry g(acs, parse_metric("diag:1,1", 2), d.omega_scale);
  Json a = report_header("check", d);
  a["result"] = to_json(g, classify(g));
  Json b = report_header("check", d);
  b["result"] = to_json(g, classify(g));
  CHECK(a.dump() == b.dump());
  CHECK(a.begin().key() == "engine");
  CHECK(a["result"]["verdicts"]["strongly_gauduchon"] == "holds");
  CHECK(a["result"]["strongly_gauduchon"]["witness"] == "-1i*phi1^phi2");
  CHECK(a["result"]["verdicts"]["integral_condition"] == "holds");
}
