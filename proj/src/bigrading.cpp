#include "acs/bigrading.hpp"

#include "acs/linalg.hpp"

#include <map>
#include <utility>

namespace acs {

const char* part_name(Part p) {
  switch (p) {
    case Part::Mu: return "mu";
    case Part::Del: return "del";
    case Part::DelBar: return "delbar";
    case Part::MuBar: return "mubar";
  }
  return "?";
}

bool RelationReport::all_hold() const {
  for (const auto& r : relations)
    if (!r.holds) return false;
  return true;
}

AlmostComplexStructure AlmostComplexStructure::from_complex_equations(int n, std::vector<Form> dphi) {
  if (n <= 0 || n > 6) throw Error("complex dimension must be between 1 and 6");
  if (dphi.size() != static_cast<std::size_t>(n)) throw Error("one equation per coframe element");
  const Space space{2 * n, true};
  // provisional coframe with zero antiholomorphic differentials, used only for conjugation
  std::vector<Form> all(2 * n, Form(space));
  for (int k = 0; k < n; ++k) {
    if (!dphi[k].is_zero() && !(dphi[k].space() == space)) throw ModeMismatch();
    all[k] = dphi[k].is_zero() ? Form(space) : dphi[k];
  }
  Coframe provisional(space, all);
  for (int k = 0; k < n; ++k) all[n + k] = provisional.conjugate(all[k]);
  AlmostComplexStructure acs;
  acs.n_ = n;
  acs.coframe_ = Coframe(space, std::move(all));
  return acs;
}

AlmostComplexStructure AlmostComplexStructure::from_real(
    const StructuredAlgebra& algebra, const std::vector<std::vector<mpq_class>>& j_images) {
  const int m = algebra.real_dim;
  if (j_images.size() != static_cast<std::size_t>(m)) throw Error("J needs one row per basis vector");
  Matrix j(m, m);  // j(k, i) = coordinate k of J e_i
  for (int i = 0; i < m; ++i) {
    if (j_images[i].size() != static_cast<std::size_t>(m)) throw Error("J row has wrong length");
    for (int k = 0; k < m; ++k) j(k, i) = Gaussian(j_images[i][k]);
  }
  Matrix j2 = j * j;
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c)
      if (!(j2(r, c) == Gaussian(r == c ? -1 : 0))) throw Error("J does not square to -Id");

  const int n = m / 2;
  // rows of `coframe`: coordinates of phi^k (then conjugates) in the basis e^1..e^m
  std::vector<Vector> chosen;
  for (int k = 0; k < m && static_cast<int>(chosen.size()) < n; ++k) {
    Vector phi(m);
    // (e^k o J)(e_i) = e^k(J e_i) = j(k, i)
    for (int i = 0; i < m; ++i) phi[i] = (i == k ? Gaussian(1) : Gaussian()) - Gaussian::i() * j(k, i);
    std::vector<Vector> trial = chosen;
    trial.push_back(phi);
    Matrix test(2 * trial.size(), m);
    for (std::size_t r = 0; r < trial.size(); ++r)
      for (int c = 0; c < m; ++c) {
        test(r, c) = trial[r][c];
        test(trial.size() + r, c) = trial[r][c].conj();
      }
    if (rank(test) == 2 * trial.size()) chosen = std::move(trial);
  }
  Matrix change(m, m);  // rows phi^1..phi^n, ~phi^1..~phi^n
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < m; ++c) {
      change(r, c) = chosen[r][c];
      change(n + r, c) = chosen[r][c].conj();
    }
  auto inv = inverse(change);
  if (!inv) throw Error("could not build a (1,0)-coframe from J");

  const Space complex_space{m, true};
  std::vector<Form> images;  // e^k in terms of phi, ~phi
  for (int k = 0; k < m; ++k) {
    Form img(complex_space);
    for (int g = 0; g < m; ++g) img.add(Word{1} << g, FormalCoefficient((*inv)(k, g)));
    images.push_back(std::move(img));
  }
  Coframe real = Coframe::from_algebra(algebra);
  std::vector<Form> dphi;
  for (int r = 0; r < n; ++r) {
    Form acc(complex_space);
    for (int k = 0; k < m; ++k)
      if (!change(r, k).is_zero())
        acc += change(r, k) * substitute(real.d_generator(k), images, complex_space);
    dphi.push_back(std::move(acc));
  }
  return from_complex_equations(n, std::move(dphi));
}

void AlmostComplexStructure::require_jacobi() const {
  if (!jacobi_ok()) throw JacobiViolation();
}

namespace {

std::pair<int, int> shift(Part p) {
  switch (p) {
    case Part::Mu: return {2, -1};
    case Part::Del: return {1, 0};
    case Part::DelBar: return {0, 1};
    case Part::MuBar: return {-1, 2};
  }
  return {0, 0};
}

}  // namespace

Form AlmostComplexStructure::apply(Part part, const Form& f) const {
  std::map<std::pair<int, int>, Form> components;
  for (const auto& [w, c] : f.terms()) {
    auto [it, fresh] = components.try_emplace(space().bidegree(w), space());
    it->second.add(w, c);
  }
  const auto [dp, dq] = shift(part);
  Form out(space());
  for (const auto& [bd, comp] : components)
    out += d(comp).project_bidegree(bd.first + dp, bd.second + dq);
  return out;
}

OperatorSplit AlmostComplexStructure::split_d(const Form& f) const {
  std::optional<std::pair<int, int>> bd;
  for (const auto& [w, c] : f.terms()) {
    auto b = space().bidegree(w);
    if (bd && *bd != b) throw MixedBidegree();
    bd = b;
  }
  OperatorSplit s{Form(space()), Form(space()), Form(space()), Form(space())};
  if (!bd) return s;
  const auto [p, q] = *bd;
  Form df = d(f);
  s.mu = df.project_bidegree(p + 2, q - 1);
  s.del = df.project_bidegree(p + 1, q);
  s.delbar = df.project_bidegree(p, q + 1);
  s.mubar = df.project_bidegree(p - 1, q + 2);
  return s;
}

bool AlmostComplexStructure::is_integrable() const {
  for (int k = 0; k < n_; ++k)
    if (!coframe_.d_generator(k).project_bidegree(0, 2).is_zero()) return false;
  return true;
}

RelationReport AlmostComplexStructure::check_relations() const {
  using P = Part;
  struct Identity {
    const char* name;
    std::vector<std::pair<P, P>> terms;  // (outer, inner)
  };
  const std::vector<Identity> identities = {
      {"mu^2", {{P::Mu, P::Mu}}},
      {"mu del + del mu", {{P::Mu, P::Del}, {P::Del, P::Mu}}},
      {"del^2 + mu delbar + delbar mu", {{P::Del, P::Del}, {P::Mu, P::DelBar}, {P::DelBar, P::Mu}}},
      {"del delbar + delbar del + mu mubar + mubar mu",
       {{P::Del, P::DelBar}, {P::DelBar, P::Del}, {P::Mu, P::MuBar}, {P::MuBar, P::Mu}}},
      {"delbar^2 + mubar del + del mubar",
       {{P::DelBar, P::DelBar}, {P::MuBar, P::Del}, {P::Del, P::MuBar}}},
      {"mubar delbar + delbar mubar", {{P::MuBar, P::DelBar}, {P::DelBar, P::MuBar}}},
      {"mubar^2", {{P::MuBar, P::MuBar}}},
  };
  RelationReport report;
  for (const auto& id : identities) report.relations.push_back({id.name, true, std::nullopt, Form(space())});

  const Word full = space().full_mask();
  for (Word w = 0;; ++w) {
    Form basis = Form::word(space(), w);
    std::map<P, Form> first;
    for (P p : {P::Mu, P::Del, P::DelBar, P::MuBar}) first.emplace(p, apply(p, basis));
    for (std::size_t i = 0; i < identities.size(); ++i) {
      Form total(space());
      for (auto [outer, inner] : identities[i].terms) total += apply(outer, first.at(inner));
      auto& r = report.relations[i];
      if (!total.is_zero() && r.holds) {
        r.holds = false;
        r.counterexample = w;
        r.residual = total;
      }
    }
    if (!apply(P::Del, first.at(P::Del)).is_zero()) report.del_squared_vanishes = false;
    if (w == full) break;
  }
  return report;
}

RealStructure AlmostComplexStructure::real_structure() const {
  const int m = 2 * n_;
  const Space real_space{m, false};
  // phi^j = x^j + i y^j, ~phi^j = x^j - i y^j
  std::vector<Form> to_real;
  for (int g = 0; g < m; ++g) {
    const int j = g % n_;
    const bool bar = g >= n_;
    Form img(real_space);
    img.add(Word{1} << (2 * j), FormalCoefficient(1));
    img.add(Word{1} << (2 * j + 1), FormalCoefficient(bar ? -Gaussian::i() : Gaussian::i()));
    to_real.push_back(std::move(img));
  }
  std::vector<Form> dreal;
  for (int j = 0; j < n_; ++j) {
    const Form& dphi = coframe_.d_generator(j);
    const Form& dphibar = coframe_.d_generator(n_ + j);
    Form dx = Gaussian::ratio(1, 2) * substitute(dphi + dphibar, to_real, real_space);
    Form dy = Gaussian(0, mpq_class(-1, 2)) * substitute(dphi - dphibar, to_real, real_space);
    for (const Form* f : {&dx, &dy})
      for (const auto& [w, c] : f->terms())
        if (!c.constant().is_real()) throw Error("structure equations are not conjugation consistent");
    dreal.push_back(std::move(dx));
    dreal.push_back(std::move(dy));
  }
  RealStructure rs;
  rs.coframe = Coframe(real_space, std::move(dreal));
  rs.j_images.assign(m, std::vector<mpq_class>(m, 0));
  for (int j = 0; j < n_; ++j) {
    rs.j_images[2 * j][2 * j + 1] = 1;
    rs.j_images[2 * j + 1][2 * j] = -1;
  }
  return rs;
}

}  // namespace acs
