#include "acs/algebra.hpp"

#include "acs/linalg.hpp"

#include <string>

namespace acs {

NotAntisymmetric::NotAntisymmetric(int k, int i, int j)
    : Error("structure constants not antisymmetric at c^" + std::to_string(k + 1) + "_" +
            std::to_string(i + 1) + std::to_string(j + 1)) {}

namespace {

std::optional<int> nilpotency_step(const StructuredAlgebra& alg) {
  const int m = alg.real_dim;
  // lower central series g^1 = g, g^{k+1} = [g, g^k], tracked by a spanning set
  std::vector<Vector> current;
  for (int i = 0; i < m; ++i) {
    Vector v(m);
    v[i] = Gaussian(1);
    current.push_back(v);
  }
  std::size_t dim = m;
  for (int step = 1; step <= m + 1; ++step) {
    std::vector<Vector> next;
    for (int i = 0; i < m; ++i)
      for (const auto& v : current) {
        Vector w(m);
        for (int j = 0; j < m; ++j) {
          if (v[j].is_zero()) continue;
          for (int k = 0; k < m; ++k)
            if (sgn(alg.c(k, i, j)) != 0) w[k] += v[j] * Gaussian(alg.c(k, i, j));
        }
        next.push_back(std::move(w));
      }
    Matrix span(next.size(), m);
    for (std::size_t r = 0; r < next.size(); ++r)
      for (int c = 0; c < m; ++c) span(r, c) = next[r][c];
    Echelon e = rref(span);
    const std::size_t next_dim = e.pivots.size();
    if (next_dim == 0) return step;
    if (next_dim == dim) return std::nullopt;
    dim = next_dim;
    current.clear();
    for (std::size_t r = 0; r < next_dim; ++r) {
      Vector row(m);
      for (int c = 0; c < m; ++c) row[c] = e.reduced(r, c);
      current.push_back(std::move(row));
    }
  }
  return std::nullopt;
}

}  // namespace

StructuredAlgebra validate_algebra(int real_dim, std::vector<mpq_class> constants) {
  if (real_dim <= 0 || real_dim % 2 != 0)
    throw Error("real dimension must be a positive even integer");
  const std::size_t m = real_dim;
  if (constants.size() != m * m * m)
    throw Error("structure constant array does not match dimension " + std::to_string(real_dim));
  StructuredAlgebra alg;
  alg.real_dim = real_dim;
  alg.constants = std::move(constants);
  for (int k = 0; k < real_dim; ++k)
    for (int i = 0; i < real_dim; ++i)
      for (int j = 0; j <= i; ++j)
        if (alg.c(k, i, j) != -alg.c(k, j, i)) throw NotAntisymmetric(k, i, j);

  alg.jacobi_ok = true;
  for (int i = 0; i < real_dim && alg.jacobi_ok; ++i)
    for (int j = 0; j < real_dim && alg.jacobi_ok; ++j)
      for (int k = 0; k < real_dim && alg.jacobi_ok; ++k)
        for (int l = 0; l < real_dim; ++l) {
          mpq_class s = 0;
          for (int p = 0; p < real_dim; ++p)
            s += alg.c(p, i, j) * alg.c(l, p, k) + alg.c(p, j, k) * alg.c(l, p, i) +
                 alg.c(p, k, i) * alg.c(l, p, j);
          if (sgn(s) != 0) {
            alg.jacobi_ok = false;
            break;
          }
        }

  alg.unimodular = true;
  for (int j = 0; j < real_dim; ++j) {
    mpq_class trace = 0;
    for (int i = 0; i < real_dim; ++i) trace += alg.c(i, i, j);
    if (sgn(trace) != 0) alg.unimodular = false;
  }
  if (alg.jacobi_ok) alg.nilpotency_step = nilpotency_step(alg);
  return alg;
}

Coframe::Coframe(Space space, std::vector<Form> generator_differentials)
    : space_(space), dgen_(std::move(generator_differentials)) {
  const int m = space.generators;
  if (m <= 0 || m > 12) throw Error("coframe size must be between 1 and 12");
  if (dgen_.size() != static_cast<std::size_t>(m)) throw Error("one differential per generator");
  brackets_ = FrameBracketTable(m, space.complex);
  for (int c = 0; c < m; ++c) {
    const Form& dc = dgen_[c];
    if (!(dc.space() == space) && !dc.is_zero()) throw ModeMismatch();
    for (const auto& [w, coef] : dc.terms()) {
      if (word_degree(w) != 2) throw Error("generator differentials must be 2-forms");
      if (!coef.is_constant()) throw Error("generator differentials must have constant coefficients");
      const int a = std::countr_zero(w);
      const int b = 31 - std::countl_zero(w);
      brackets_.set_gamma(c, a, b, -coef.constant());
      brackets_.set_gamma(c, b, a, coef.constant());
    }
    dgen_[c] = dc.is_zero() ? Form(space) : dc;
  }

  const std::size_t words = std::size_t{1} << m;
  dword_.assign(words, Form(space));
  for (Word w = 1; w < words; ++w) {
    const int g = std::countr_zero(w);
    const Word rest = w & (w - 1);
    // d(g ^ rest) = dg ^ rest - g ^ d(rest)
    Form acc = wedge(dgen_[g], Form::word(space, rest));
    acc -= wedge(Form::generator(space, g), dword_[rest]);
    dword_[w] = std::move(acc);
  }

  jacobi_ = true;
  for (int g = 0; g < m && jacobi_; ++g) jacobi_ = d(dgen_[g]).is_zero();
}

Form Coframe::d(const Form& f) const {
  if (!f.is_zero() && !(f.space() == space_)) throw ModeMismatch();
  Form out(space_);
  for (const auto& [w, c] : f.terms()) {
    if (!c.is_constant()) {
      for (int a = 0; a < space_.generators; ++a) {
        const Word letter = Word{1} << a;
        const int s = wedge_sign(letter, w);
        if (s == 0) continue;
        FormalCoefficient da = c.differentiate(a, brackets_);
        if (da.is_zero()) continue;
        out.add(letter | w, s > 0 ? da : -da);
      }
    }
    for (const auto& [dw, dc] : dword_[w].terms()) out.add(dw, dc * c);
  }
  return out;
}

Form Coframe::conjugate(const Form& f) const {
  if (!space_.complex) return f;
  Form out(space_);
  for (const auto& [w, c] : f.terms()) {
    Word acc = 0;
    int sign = 1;
    for (Word rest = w; rest; rest &= rest - 1) {
      const Word image = Word{1} << brackets_.bar(std::countr_zero(rest));
      sign *= wedge_sign(acc, image);
      acc |= image;
    }
    FormalCoefficient cc = c.conjugate(brackets_);
    out.add(acc, sign > 0 ? cc : -cc);
  }
  return out;
}

bool Coframe::unimodular() const {
  const int m = space_.generators;
  for (int b = 0; b < m; ++b) {
    Gaussian trace;
    for (int a = 0; a < m; ++a) trace += brackets_.gamma(a, b, a);
    if (!trace.is_zero()) return false;
  }
  return true;
}

StructuredAlgebra Coframe::to_algebra() const {
  if (space_.complex) throw Error("structure constants require a real coframe");
  const int m = space_.generators;
  std::vector<mpq_class> constants(static_cast<std::size_t>(m) * m * m);
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        const Gaussian& g = brackets_.gamma(k, i, j);
        if (!g.is_real()) throw Error("real coframe with non-real brackets");
        constants[(static_cast<std::size_t>(k) * m + i) * m + j] = g.re();
      }
  return validate_algebra(m, std::move(constants));
}

Coframe Coframe::from_algebra(const StructuredAlgebra& alg) {
  const int m = alg.real_dim;
  Space space{m, false};
  std::vector<Form> dgen;
  for (int k = 0; k < m; ++k) {
    Form dk(space);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (sgn(alg.c(k, i, j)) != 0)
          dk.add((Word{1} << i) | (Word{1} << j), FormalCoefficient(Gaussian(-alg.c(k, i, j))));
    dgen.push_back(std::move(dk));
  }
  return Coframe(space, std::move(dgen));
}

}  // namespace acs
