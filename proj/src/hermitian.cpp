#include "acs/hermitian.hpp"

#include <map>
#include <sstream>

namespace acs {

namespace {

// H = L D L^* with L lower unitriangular; throws unless D > 0.
void ldl(const Matrix& h, Matrix& l, std::vector<mpq_class>& d) {
  const std::size_t n = h.rows();
  l = Matrix::identity(n);
  d.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    Gaussian dj = h(j, j);
    for (std::size_t k = 0; k < j; ++k) dj -= l(j, k) * Gaussian(d[k]) * l(j, k).conj();
    if (!dj.is_real() || sgn(dj.re()) <= 0)
      throw NotPositiveDefinite("metric is not positive definite (leading minor " +
                                std::to_string(j + 1) + ")");
    d[j] = dj.re();
    for (std::size_t i = j + 1; i < n; ++i) {
      Gaussian v = h(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= l(i, k) * Gaussian(d[k]) * l(j, k).conj();
      l(i, j) = v / Gaussian(d[j]);
    }
  }
}

}  // namespace

HermitianMetric HermitianMetric::constant(Matrix h) {
  if (h.rows() == 0 || h.rows() != h.cols()) throw NotPositiveDefinite("metric matrix must be square");
  if (!(h == h.conj_transpose())) throw NotPositiveDefinite("metric matrix is not Hermitian");
  HermitianMetric m;
  m.kind_ = Kind::Constant;
  m.n_ = static_cast<int>(h.rows());
  Matrix l;
  std::vector<mpq_class> d;
  ldl(h, l, d);
  m.h_ = std::move(h);
  // psi^a = sum_j L(j, a) phi^j
  m.p_ = Matrix(m.n_, m.n_);
  for (int a = 0; a < m.n_; ++a)
    for (int j = 0; j < m.n_; ++j) m.p_(a, j) = l(j, a);
  m.q_ = *inverse(m.p_);
  for (const auto& v : d) m.weights_.emplace_back(Gaussian(v));
  return m;
}

HermitianMetric HermitianMetric::diagonal(const std::vector<mpq_class>& entries) {
  Matrix h(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) h(i, i) = Gaussian(entries[i]);
  return constant(std::move(h));
}

HermitianMetric HermitianMetric::conformal_diagonal(std::vector<std::pair<mpq_class, mpq_class>> entries) {
  if (entries.empty()) throw NotPositiveDefinite("empty metric");
  HermitianMetric m;
  m.kind_ = Kind::ConformalDiagonal;
  m.n_ = static_cast<int>(entries.size());
  for (const auto& [c, a] : entries) {
    if (sgn(c) <= 0) throw NotPositiveDefinite("conformal-diagonal entries need positive constants");
    m.weights_.push_back(FormalCoefficient::exponential(a, Gaussian(c)));
  }
  m.conformal_ = std::move(entries);
  m.p_ = Matrix::identity(m.n_);
  m.q_ = Matrix::identity(m.n_);
  return m;
}

std::string HermitianMetric::to_string() const {
  std::ostringstream os;
  if (kind_ == Kind::ConformalDiagonal) {
    os << "cdiag:";
    for (std::size_t i = 0; i < conformal_.size(); ++i)
      os << (i ? "," : "") << conformal_[i].first.get_str() << "*exp(" << conformal_[i].second.get_str()
         << ")";
    return os.str();
  }
  bool diagonal = true;
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c)
      if (r != c && !h_(r, c).is_zero()) diagonal = false;
  if (diagonal) {
    os << "diag:";
    for (int i = 0; i < n_; ++i) os << (i ? "," : "") << h_(i, i).to_string();
    return os.str();
  }
  os << "herm:";
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) os << (r || c ? "," : "") << h_(r, c).to_string();
  return os.str();
}

HermitianGeometry::HermitianGeometry(std::shared_ptr<const AlmostComplexStructure> acs,
                                     HermitianMetric metric, Gaussian omega_scale)
    : acs_(std::move(acs)), metric_(std::move(metric)), kappa_(std::move(omega_scale)) {
  if (!acs_) throw Error("missing almost complex structure");
  if (metric_.n() != acs_->n())
    throw NotPositiveDefinite("metric size " + std::to_string(metric_.n()) +
                              " does not match complex dimension " + std::to_string(acs_->n()));
  if (!kappa_.is_zero() && !(kappa_.norm() == mpq_class(1, 4) && sgn(kappa_.re()) == 0))
    throw Error("fundamental form scale must be i/2 or -i/2");
  const Space sp = acs_->space();
  const int n = acs_->n();
  const Matrix& p = metric_.frame_change();
  const Matrix& q = metric_.frame_change_inverse();
  phi_to_psi_.assign(2 * n, Form(sp));
  psi_to_phi_.assign(2 * n, Form(sp));
  for (int j = 0; j < n; ++j)
    for (int a = 0; a < n; ++a) {
      phi_to_psi_[j].add(Word{1} << a, FormalCoefficient(q(j, a)));
      phi_to_psi_[n + j].add(Word{1} << (n + a), FormalCoefficient(q(j, a).conj()));
      psi_to_phi_[j].add(Word{1} << a, FormalCoefficient(p(j, a)));
      psi_to_phi_[n + j].add(Word{1} << (n + a), FormalCoefficient(p(j, a).conj()));
    }
  Form omega_psi(sp);
  for (int a = 0; a < n; ++a)
    omega_psi.add((Word{1} << a) | (Word{1} << (n + a)), metric_.weights()[a] * kappa_);
  omega_ = from_orthogonal(omega_psi);
}

Form HermitianGeometry::to_orthogonal(const Form& f) const { return substitute(f, phi_to_psi_, space()); }
Form HermitianGeometry::from_orthogonal(const Form& f) const { return substitute(f, psi_to_phi_, space()); }

Form HermitianGeometry::omega_power(int k) const {
  Form acc = Form::scalar(space(), FormalCoefficient(1));
  for (int i = 0; i < k; ++i) acc = wedge(acc, omega_);
  return acc;
}

FormalCoefficient HermitianGeometry::volume_coefficient(StarConvention conv) const {
  const int n = this->n();
  FormalCoefficient v(1);
  for (const auto& d : metric_.weights()) v = v * d;
  if (conv == StarConvention::CoframeVolume) return v;
  // omega^n / n! = kappa^n * prod d_a * psi^{1 1b 2 2b ...}, reordered to the canonical top word
  Gaussian k(1);
  for (int i = 0; i < n; ++i) k *= kappa_;
  if ((n * (n - 1) / 2) % 2) k = -k;
  return v * k;
}

Form HermitianGeometry::volume(StarConvention conv) const {
  // the frame change is unitriangular, so the top coefficient is basis independent
  return Form::word(space(), space().full_mask(), volume_coefficient(conv));
}

Form HermitianGeometry::star_orthogonal(const Form& f, StarConvention conv) const {
  const Space& sp = space();
  const int n = this->n();
  const Word full = sp.full_mask();
  const FormalCoefficient vol = volume_coefficient(conv);
  std::vector<FormalCoefficient> norms;  // <psi^a, psi^a> = <~psi^a, ~psi^a>
  for (const auto& d : metric_.weights()) {
    FormalCoefficient inv = d.inverse();
    norms.push_back(conv == StarConvention::Riemannian ? inv * Gaussian(2) : inv);
  }
  Form out(sp);
  for (const auto& [w, c] : f.terms()) {
    // conj(w) = s * u with u canonical
    Word u = 0;
    int s = 1;
    FormalCoefficient norm(1);
    for (Word rest = w; rest; rest &= rest - 1) {
      const int g = std::countr_zero(rest);
      const Word image = Word{1} << (g < n ? g + n : g - n);
      s *= wedge_sign(u, image);
      u |= image;
      norm = norm * norms[g % n];
    }
    const Word complement = full & ~u;
    const int t = wedge_sign(u, complement);
    FormalCoefficient coef = c * norm * vol;
    if (s * t < 0) coef = -coef;
    out.add(complement, coef);
  }
  return out;
}

Form HermitianGeometry::hodge_star(const Form& f, StarConvention conv) const {
  return from_orthogonal(star_orthogonal(to_orthogonal(f), conv));
}

Form HermitianGeometry::adjoint(Adjoint which, const Form& f) const {
  const auto& acs = *acs_;
  Form starred = hodge_star(f);
  Form inner(space());
  switch (which) {
    case Adjoint::D: inner = acs.d(starred); break;
    case Adjoint::Del: inner = acs.apply(Part::DelBar, starred); break;
    case Adjoint::DelBar: inner = acs.apply(Part::Del, starred); break;
    case Adjoint::Mu: inner = acs.apply(Part::MuBar, starred); break;
    case Adjoint::MuBar: inner = acs.apply(Part::Mu, starred); break;
  }
  return -hodge_star(inner);
}

Form HermitianGeometry::laplacian(Laplacian which, const Form& f) const {
  const auto& acs = *acs_;
  switch (which) {
    case Laplacian::D:
      return acs.d(adjoint(Adjoint::D, f)) + adjoint(Adjoint::D, acs.d(f));
    case Laplacian::Del:
      return acs.apply(Part::Del, adjoint(Adjoint::Del, f)) +
             adjoint(Adjoint::Del, acs.apply(Part::Del, f));
    case Laplacian::DelBar:
      return acs.apply(Part::DelBar, adjoint(Adjoint::DelBar, f)) +
             adjoint(Adjoint::DelBar, acs.apply(Part::DelBar, f));
  }
  return Form(space());
}

FormalSystem assemble_system(const std::vector<std::vector<Form>>& columns, const std::vector<Form>& rhs) {
  std::map<FormalRow, std::size_t> rows;
  auto collect = [&rows](const std::vector<Form>& eqs) {
    for (std::size_t e = 0; e < eqs.size(); ++e)
      for (const auto& [w, c] : eqs[e].terms())
        for (const auto& [m, v] : c.terms()) rows.try_emplace(FormalRow{static_cast<int>(e), w, m}, 0);
  };
  for (const auto& col : columns) collect(col);
  collect(rhs);
  std::size_t idx = 0;
  for (auto& [key, i] : rows) i = idx++;
  FormalSystem sys{Matrix(rows.size(), columns.size()), Vector(rows.size())};
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t e = 0; e < columns[j].size(); ++e)
      for (const auto& [w, c] : columns[j][e].terms())
        for (const auto& [m, v] : c.terms()) sys.matrix(rows.at({static_cast<int>(e), w, m}), j) += v;
  for (std::size_t e = 0; e < rhs.size(); ++e)
    for (const auto& [w, c] : rhs[e].terms())
      for (const auto& [m, v] : c.terms()) sys.rhs[rows.at({static_cast<int>(e), w, m})] += v;
  return sys;
}

HarmonicBasis HermitianGeometry::harmonic_space(int p, int q) const {
  const auto& acs = *acs_;
  HarmonicBasis hb;
  hb.p = p;
  hb.q = q;
  const auto words = space().words_of_bidegree(p, q);
  if (words.empty()) return hb;
  std::vector<std::vector<Form>> columns;
  for (Word w : words) {
    Form basis = Form::word(space(), w);
    columns.push_back({acs.apply(Part::DelBar, basis), acs.apply(Part::Del, hodge_star(basis))});
  }
  FormalSystem sys = assemble_system(columns);
  for (const auto& v : kernel_basis(sys.matrix)) {
    Form f(space());
    for (std::size_t j = 0; j < words.size(); ++j) f.add(words[j], FormalCoefficient(v[j]));
    hb.basis.push_back(std::move(f));
  }
  return hb;
}

PairingValue HermitianGeometry::l2_pairing(const Form& alpha, const Form& beta) const {
  Form integrand = wedge(alpha, hodge_star(acs_->conjugate(beta)));
  PairingValue v;
  v.coefficient = integrand.top_coefficient() * volume_coefficient(StarConvention::Riemannian).inverse();
  v.requires_integration = !v.coefficient.is_constant();
  return v;
}

LeeForm HermitianGeometry::lee_form() const {
  if (!metric_.is_constant()) throw Error("the Lee form is computed for constant metrics only");
  const auto& acs = *acs_;
  const int n = this->n();
  Form omega_n1 = omega_power(n - 1);
  Form target = acs.d(omega_n1);
  std::vector<std::vector<Form>> columns;
  for (int g = 0; g < 2 * n; ++g) columns.push_back({wedge(Form::generator(space(), g), omega_n1)});
  FormalSystem sys = assemble_system(columns, {target});
  auto sol = solve(sys.matrix, sys.rhs);
  if (!sol) throw Error("no Lee form solves d omega^{n-1} = theta ^ omega^{n-1}");
  LeeForm lee{Form(space()), Gaussian()};
  for (int g = 0; g < 2 * n; ++g) lee.theta.add(Word{1} << g, FormalCoefficient((*sol)[g]));
  if (!(wedge(lee.theta, omega_n1) == target)) throw Error("Lee form residual is nonzero");
  lee.d_star_theta = adjoint(Adjoint::D, lee.theta).coefficient(0).constant();
  return lee;
}

}  // namespace acs
