#include "acs/conditions.hpp"

#include <exception>
#include <functional>
#include <random>

namespace acs {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Undetermined: return "undetermined";
  }
  return "?";
}

const char* integral_status_name(IntegralStatus s) {
  switch (s) {
    case IntegralStatus::Zero: return "zero";
    case IntegralStatus::Nonzero: return "nonzero";
    case IntegralStatus::Undetermined: return "undetermined";
  }
  return "?";
}

GauduchonResult is_gauduchon(const HermitianGeometry& g) {
  const auto& acs = g.structure();
  acs.require_jacobi();
  GauduchonResult r;
  Form w = g.omega_power(g.n() - 1);
  r.ddbar_omega_n1 = acs.apply(Part::Del, acs.apply(Part::DelBar, w));
  r.verdict = r.ddbar_omega_n1.is_zero() ? Verdict::Holds : Verdict::Fails;
  r.formal = !r.ddbar_omega_n1.has_constant_coefficients();
  return r;
}

WitnessResult strongly_gauduchon_witness(const HermitianGeometry& g) {
  return strongly_gauduchon_witness(g, is_gauduchon(g));
}

WitnessResult strongly_gauduchon_witness(const HermitianGeometry& g, const GauduchonResult& gauduchon) {
  const auto& acs = g.structure();
  const int n = g.n();
  WitnessResult r;
  r.del_omega_n1 = acs.apply(Part::Del, g.omega_power(n - 1));
  r.residual = Form(g.space());
  if (gauduchon.verdict != Verdict::Holds) {
    r.verdict = gauduchon.verdict == Verdict::Fails ? Verdict::Fails : Verdict::Undetermined;
    r.reason = "not Gauduchon";
    return r;
  }
  const auto words = g.space().words_of_bidegree(n, n - 2);
  std::vector<std::vector<Form>> columns;
  for (Word w : words) columns.push_back({acs.apply(Part::DelBar, Form::word(g.space(), w))});
  std::optional<Vector> sol;
  if (r.del_omega_n1.is_zero()) {
    sol = Vector(words.size());
  } else if (!words.empty()) {
    FormalSystem sys = assemble_system(columns, {r.del_omega_n1});
    sol = solve(sys.matrix, sys.rhs);
  }
  if (!sol) {
    // invariant-level search only; conformal data leaves the question open
    r.verdict = g.metric().is_constant() ? Verdict::Fails : Verdict::Undetermined;
    r.reason = "del omega^{n-1} is not delbar of an invariant (n,n-2)-form";
    return r;
  }
  Form lambda(g.space());
  for (std::size_t j = 0; j < words.size(); ++j) lambda.add(words[j], FormalCoefficient((*sol)[j]));
  r.residual = acs.apply(Part::DelBar, lambda) - r.del_omega_n1;
  if (!r.residual.is_zero()) throw InvariantViolation("strongly Gauduchon witness has nonzero residual");
  r.lambda = std::move(lambda);
  r.verdict = Verdict::Holds;
  return r;
}

namespace {

void normal_words(int letters, std::size_t max_len, DerivWord& current, std::vector<DerivWord>& out) {
  if (!current.empty()) out.push_back(current);
  if (current.size() == max_len) return;
  const int start = current.empty() ? 0 : current.back();
  for (int a = start; a < letters; ++a) {
    current.push_back(static_cast<std::uint8_t>(a));
    normal_words(letters, max_len, current, out);
    current.pop_back();
  }
}

void factor_multisets(const std::vector<DerivWord>& words, std::size_t first, std::size_t budget,
                      std::vector<DerivWord>& current, std::vector<std::vector<DerivWord>>& out) {
  out.push_back(current);
  for (std::size_t i = first; i < words.size(); ++i) {
    if (words[i].size() > budget) continue;
    current.push_back(words[i]);
    factor_multisets(words, i, budget - words[i].size(), current, out);
    current.pop_back();
  }
}

}  // namespace

std::optional<Form> find_primitive(const AlmostComplexStructure& acs, const Form& top, int bound) {
  const Space& sp = acs.space();
  if (top.is_zero()) return Form(sp);
  const std::size_t order = bound > 0 ? static_cast<std::size_t>(bound - 1) : 0;
  std::set<mpq_class> exponents;
  for (const auto& [w, c] : top.terms())
    for (const auto& e : c.exponents()) exponents.insert(e);

  std::vector<DerivWord> words;
  DerivWord scratch;
  normal_words(sp.generators, order, scratch, words);
  std::sort(words.begin(), words.end());
  std::vector<std::vector<DerivWord>> multisets;
  std::vector<DerivWord> current;
  factor_multisets(words, 0, order, current, multisets);

  std::vector<Monomial> monomials;
  for (const auto& e : exponents)
    for (const auto& fs : multisets) monomials.push_back(Monomial{e, fs});

  const auto forms = sp.words_of_degree(sp.generators - 1);
  std::vector<std::vector<Form>> columns;
  std::vector<std::pair<Word, Monomial>> unknowns;
  for (Word w : forms)
    for (const auto& m : monomials) {
      columns.push_back({acs.d(Form::word(sp, w, FormalCoefficient::from_monomial(m)))});
      unknowns.emplace_back(w, m);
    }
  FormalSystem sys = assemble_system(columns, {top});
  auto sol = solve(sys.matrix, sys.rhs);
  if (!sol) return std::nullopt;
  Form beta(sp);
  for (std::size_t j = 0; j < unknowns.size(); ++j)
    beta.add(unknowns[j].first, FormalCoefficient::from_monomial(unknowns[j].second, (*sol)[j]));
  if (!(acs.d(beta) == top)) throw InvariantViolation("primitive does not reproduce the integrand");
  return beta;
}

IntegralValue integral_value(const HermitianGeometry& g, const Form& eta, int derivative_bound) {
  const auto& acs = g.structure();
  IntegralValue v;
  v.eta = eta;
  Form integrand = wedge(acs.apply(Part::Del, eta), g.omega_power(g.n() - 1));
  v.value = integrand.top_coefficient() * g.volume().top_coefficient().inverse();
  if (v.value.is_zero()) {
    v.status = IntegralStatus::Zero;
    v.route = integrand.has_constant_coefficients() ? "constant" : "formal-zero";
    return v;
  }
  if (v.value.is_constant()) {
    v.status = IntegralStatus::Nonzero;
    v.route = "constant";
    return v;
  }
  v.primitive = find_primitive(acs, integrand, derivative_bound);
  if (v.primitive) {
    v.status = IntegralStatus::Zero;
    v.route = "exact";
  } else {
    v.status = IntegralStatus::Undetermined;
    v.route = "none";
  }
  return v;
}

IntegralConditionResult integral_condition(const HermitianGeometry& g, int derivative_bound) {
  g.structure().require_jacobi();
  IntegralConditionResult r;
  r.harmonic = g.harmonic_space(0, 1);
  bool any_nonzero = false, any_open = false;
  for (const auto& eta : r.harmonic.basis) {
    r.values.push_back(integral_value(g, eta, derivative_bound));
    any_nonzero |= r.values.back().status == IntegralStatus::Nonzero;
    any_open |= r.values.back().status == IntegralStatus::Undetermined;
  }
  r.verdict = any_nonzero ? Verdict::Fails : any_open ? Verdict::Undetermined : Verdict::Holds;
  return r;
}

OrthogonalityResult orthogonality_check(const HermitianGeometry& g) {
  return orthogonality_check(g, g.harmonic_space(0, 1));
}

OrthogonalityResult orthogonality_check(const HermitianGeometry& g, const HarmonicBasis& harmonic) {
  OrthogonalityResult r;
  r.del_star_omega = g.adjoint(Adjoint::Del, g.fundamental_form());
  bool any_nonzero = false, any_open = false;
  for (const auto& eta : harmonic.basis) {
    PairingValue p = g.l2_pairing(eta, r.del_star_omega);
    if (!p.coefficient.is_zero()) {
      if (p.requires_integration)
        any_open = true;
      else
        any_nonzero = true;
    }
    r.pairings.push_back(std::move(p));
  }
  r.verdict = any_nonzero ? Verdict::Fails : any_open ? Verdict::Undetermined : Verdict::Holds;
  return r;
}

MetricReport classify(const HermitianGeometry& g) {
  const auto& acs = g.structure();
  acs.require_jacobi();
  const int n = g.n();
  MetricReport r;
  r.integrable = acs.is_integrable();
  r.invariant_stokes = g.invariant_stokes();
  r.omega = g.fundamental_form();
  r.d_omega = acs.d(r.omega);
  r.d_omega_n1 = acs.d(g.omega_power(n - 1));
  r.almost_kahler = r.d_omega.is_zero() ? Verdict::Holds : Verdict::Fails;
  r.balanced = r.d_omega_n1.is_zero() ? Verdict::Holds : Verdict::Fails;
  r.skt = acs.apply(Part::Del, acs.apply(Part::DelBar, r.omega)).is_zero() ? Verdict::Holds : Verdict::Fails;

  r.gauduchon_detail = is_gauduchon(g);
  r.gauduchon = r.gauduchon_detail.verdict;
  r.witness = strongly_gauduchon_witness(g, r.gauduchon_detail);
  r.strongly_gauduchon = r.witness.verdict;
  r.integral = integral_condition(g);
  r.integral_condition = r.integral.verdict;
  r.orthogonal = orthogonality_check(g, r.integral.harmonic);
  r.orthogonality = r.orthogonal.verdict;
  if (g.metric().is_constant()) r.lee = g.lee_form();
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) r.hodge_numbers.push_back({p, q, g.harmonic_space(p, q).dimension()});

  if (r.strongly_gauduchon == Verdict::Holds && r.gauduchon != Verdict::Holds)
    throw InvariantViolation("strongly Gauduchon without Gauduchon");
  if (r.balanced == Verdict::Holds &&
      (r.gauduchon != Verdict::Holds || r.strongly_gauduchon != Verdict::Holds ||
       !r.witness.lambda || !r.witness.lambda->is_zero()))
    throw InvariantViolation("balanced metric without the zero strongly Gauduchon witness");
  if (r.almost_kahler == Verdict::Holds && r.balanced != Verdict::Holds)
    throw InvariantViolation("almost-Kahler metric that is not balanced");
  return r;
}

Matrix operator_matrix(const AlmostComplexStructure& acs, Part part, const std::vector<Word>& from,
                       const std::vector<Word>& to) {
  Matrix m(to.size(), from.size());
  for (std::size_t j = 0; j < from.size(); ++j) {
    Form image = acs.apply(part, Form::word(acs.space(), from[j]));
    for (std::size_t i = 0; i < to.size(); ++i) m(i, j) = image.coefficient(to[i]).constant();
  }
  return m;
}

DolbeaultGroup dolbeault_cohomology(const AlmostComplexStructure& acs, int p, int q) {
  if (!acs.is_integrable()) throw NotIntegrable();
  acs.require_jacobi();
  const Space& sp = acs.space();
  DolbeaultGroup grp;
  grp.p = p;
  grp.q = q;
  const auto here = sp.words_of_bidegree(p, q);
  if (here.empty()) return grp;
  const auto above = sp.words_of_bidegree(p, q + 1);
  const auto below = sp.words_of_bidegree(p, q - 1);
  std::vector<Vector> cycles;
  if (above.empty()) {
    for (std::size_t j = 0; j < here.size(); ++j) {
      Vector v(here.size());
      v[j] = Gaussian(1);
      cycles.push_back(std::move(v));
    }
  } else {
    cycles = kernel_basis(operator_matrix(acs, Part::DelBar, here, above));
  }
  std::vector<Vector> spanning;  // boundaries first, then accepted representatives
  if (!below.empty()) {
    Matrix b = operator_matrix(acs, Part::DelBar, below, here);
    for (std::size_t c = 0; c < b.cols(); ++c) {
      Vector col(here.size());
      for (std::size_t r = 0; r < here.size(); ++r) col[r] = b(r, c);
      spanning.push_back(std::move(col));
    }
  }
  auto span_rank = [&](const std::vector<Vector>& vs) {
    Matrix m(vs.size(), here.size());
    for (std::size_t r = 0; r < vs.size(); ++r)
      for (std::size_t c = 0; c < here.size(); ++c) m(r, c) = vs[r][c];
    return rank(m);
  };
  std::size_t current = spanning.empty() ? 0 : span_rank(spanning);
  for (const auto& z : cycles) {
    spanning.push_back(z);
    const std::size_t next = span_rank(spanning);
    if (next > current) {
      current = next;
      Form rep(sp);
      for (std::size_t j = 0; j < here.size(); ++j) rep.add(here[j], FormalCoefficient(z[j]));
      grp.representatives.push_back(std::move(rep));
    } else {
      spanning.pop_back();
    }
  }
  grp.dimension = grp.representatives.size();
  return grp;
}

namespace {

// omega(u, v) for a real 2-form given by its word coefficients.
mpq_class evaluate(const Form& two_form, const std::vector<mpq_class>& u, const std::vector<mpq_class>& v) {
  mpq_class s = 0;
  for (const auto& [w, c] : two_form.terms()) {
    const int i = std::countr_zero(w);
    const int j = 31 - std::countl_zero(w);
    s += c.constant().re() * (u[i] * v[j] - u[j] * v[i]);
  }
  return s;
}

std::vector<mpq_class> apply_j(const RealStructure& real, const std::vector<mpq_class>& v) {
  const std::size_t m = v.size();
  std::vector<mpq_class> out(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (sgn(v[i]) != 0)
      for (std::size_t k = 0; k < m; ++k) out[k] += v[i] * real.j_images[i][k];
  return out;
}

std::vector<mpq_class> unit(std::size_t m, std::size_t i) {
  std::vector<mpq_class> e(m, 0);
  e[i] = 1;
  return e;
}

}  // namespace

mpq_class evaluate_on_v_jv(const Form& real_two_form, const RealStructure& real,
                           const std::vector<mpq_class>& v) {
  return evaluate(real_two_form, v, apply_j(real, v));
}

ObstructionCertificate almost_kahler_obstruction(const AlmostComplexStructure& acs) {
  acs.require_jacobi();
  ObstructionCertificate cert;
  cert.real = acs.real_structure();
  const RealStructure& real = cert.real;
  const Space& sp = real.coframe.space();
  const std::size_t m = sp.generators;
  const auto two_words = sp.words_of_degree(2);

  // unknown real 2-forms: closed and J-invariant
  std::vector<std::vector<Form>> columns;
  for (Word w : two_words) {
    Form basis = Form::word(sp, w);
    Form compat(sp);  // omega(J e_a, J e_b) - omega(e_a, e_b) stored on word e^{ab}
    for (Word ab : two_words) {
      const int a = std::countr_zero(ab);
      const int b = 31 - std::countl_zero(ab);
      auto ea = unit(m, a), eb = unit(m, b);
      mpq_class diff = evaluate(basis, apply_j(real, ea), apply_j(real, eb)) - evaluate(basis, ea, eb);
      compat.add(ab, FormalCoefficient(Gaussian(diff)));
    }
    columns.push_back({real.coframe.d(basis), compat});
  }
  FormalSystem sys = assemble_system(columns);
  for (const auto& v : kernel_basis(sys.matrix)) {
    Form f(sp);
    for (std::size_t j = 0; j < two_words.size(); ++j) f.add(two_words[j], FormalCoefficient(v[j]));
    cert.compatible_closed_forms.push_back(std::move(f));
  }
  const auto& forms = cert.compatible_closed_forms;

  auto vanishes_on_all = [&](const std::vector<mpq_class>& v) {
    for (const auto& f : forms)
      if (sgn(evaluate_on_v_jv(f, real, v)) != 0) return false;
    return true;
  };

  for (std::size_t i = 0; i < m; ++i) {
    auto e = unit(m, i);
    if (vanishes_on_all(e)) {
      cert.found = true;
      cert.vector = e;
      cert.stage = "basis-vector";
      return cert;
    }
  }
  // common kernel of the symmetric forms B(u, v) = omega(u, J v)
  Matrix stacked(forms.size() * m, m);
  for (std::size_t s = 0; s < forms.size(); ++s)
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c)
        stacked(s * m + r, c) = Gaussian(evaluate(forms[s], unit(m, r), apply_j(real, unit(m, c))));
  auto kernel = kernel_basis(stacked);
  if (!kernel.empty()) {
    std::vector<mpq_class> v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = kernel.front()[i].re();
    if (!vanishes_on_all(v)) throw InvariantViolation("obstruction certificate failed re-check");
    cert.found = true;
    cert.vector = std::move(v);
    cert.stage = "common-kernel";
    return cert;
  }
  cert.stage = "inconclusive";
  return cert;
}

std::vector<HermitianMetric> sample_metrics(int n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(1, 9), den(1, 4), off(-2, 2), half(1, 2);
  std::vector<HermitianMetric> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    Matrix d(n, n), u = Matrix::identity(n);
    for (int i = 0; i < n; ++i) d(i, i) = Gaussian(mpq_class(num(rng), den(rng)));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) u(i, j) = Gaussian(mpq_class(off(rng), half(rng)), mpq_class(off(rng), half(rng)));
    out.push_back(HermitianMetric::constant(u.conj_transpose() * d * u));
  }
  return out;
}

std::vector<MetricReport> classify_batch(std::shared_ptr<const AlmostComplexStructure> acs,
                                         const Gaussian& omega_scale,
                                         const std::vector<HermitianMetric>& metrics, Execution exec) {
  std::vector<MetricReport> reports(metrics.size());
  auto one = [&](std::size_t i) { reports[i] = classify(HermitianGeometry(acs, metrics[i], omega_scale)); };
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < metrics.size(); ++i) one(i);
    return reports;
  }
  std::vector<std::exception_ptr> errors(metrics.size());
  const auto count = static_cast<std::int64_t>(metrics.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      one(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return reports;
}

BatchSummary summarize(const std::vector<MetricReport>& reports) {
  BatchSummary s;
  s.samples = reports.size();
  for (const auto& r : reports) {
    const bool gd = r.gauduchon == Verdict::Holds;
    const bool sg = r.strongly_gauduchon == Verdict::Holds;
    const bool ic = r.integral_condition == Verdict::Holds;
    s.gauduchon += gd;
    s.strongly_gauduchon += sg;
    s.integral_condition += ic;
    s.vacuous_integral_condition += r.integral.harmonic.basis.empty();
    if (sg && !ic) ++s.sg_without_ic;
    if (r.integral_condition != Verdict::Undetermined && r.orthogonality != Verdict::Undetermined &&
        r.integral_condition != r.orthogonality)
      ++s.ic_orthogonality_disagreements;
    if (r.integrable && gd) {
      ++s.integrable_gauduchon_checked;
      if (ic != sg) ++s.ic_witness_disagreements;
    }
    if (gd && !sg) s.all_sampled_gauduchon_are_sg = false;
  }
  return s;
}

}  // namespace acs
