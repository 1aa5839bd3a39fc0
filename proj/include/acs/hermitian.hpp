#pragma once

#include "acs/bigrading.hpp"
#include "acs/linalg.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace acs {

class NotPositiveDefinite : public Error {
public:
  using Error::Error;
};

/// Hermitian metric on the (1,0)-coframe. The fundamental form is
/// omega = kappa * sum_{j,k} h_{jk} phi^j ^ ~phi^k with kappa = +-i/2 fixed by
/// the manifold (see HermitianGeometry).
class HermitianMetric {
public:
  enum class Kind { Constant, ConformalDiagonal };

  /// Hermitian positive definite matrix with Gaussian-rational entries.
  static HermitianMetric constant(Matrix h);
  static HermitianMetric diagonal(const std::vector<mpq_class>& entries);
  /// Entries c_j e^(a_j s) with c_j > 0.
  static HermitianMetric conformal_diagonal(std::vector<std::pair<mpq_class, mpq_class>> entries);

  Kind kind() const { return kind_; }
  bool is_constant() const { return kind_ == Kind::Constant; }
  int n() const { return n_; }
  /// Constant mode only.
  const Matrix& matrix() const { return h_; }
  const std::vector<std::pair<mpq_class, mpq_class>>& conformal_entries() const { return conformal_; }

  /// Orthogonalizing congruence psi^a = sum_j P(a, j) phi^j with
  /// omega = kappa * sum_a d_a psi^a ^ ~psi^a. P is unitriangular.
  const Matrix& frame_change() const { return p_; }
  const Matrix& frame_change_inverse() const { return q_; }
  const std::vector<FormalCoefficient>& weights() const { return weights_; }

  /// Metric flag syntax (`diag:`, `herm:`, `cdiag:`).
  std::string to_string() const;

private:
  Kind kind_ = Kind::Constant;
  int n_ = 0;
  Matrix h_;
  std::vector<std::pair<mpq_class, mpq_class>> conformal_;
  Matrix p_, q_;
  std::vector<FormalCoefficient> weights_;
};

/// Normalization of the Hodge star.
///  Riemannian: the C-linear extension of the real star of g with orientation
///    vol = omega^n / n!; alpha ^ *conj(beta) = <alpha, beta> vol.
///  CoframeVolume: pairing <phi^j, phi^k> = (h^{-1}) and volume det(h) times the
///    canonical top word. It differs from the Riemannian star by a nonzero
///    constant on each degree, so every kernel computation is unaffected.
enum class StarConvention { Riemannian, CoframeVolume };

enum class Adjoint { D, Del, DelBar, Mu, MuBar };
enum class Laplacian { D, Del, DelBar };

struct HarmonicBasis {
  int p = 0, q = 0;
  std::vector<Form> basis;  // invariant part only
  std::size_t dimension() const { return basis.size(); }
};

/// Value of an L^2 pairing as (coefficient) * Vol. When the coefficient is not
/// constant the pairing needs global integration and is left symbolic.
struct PairingValue {
  FormalCoefficient coefficient;
  bool requires_integration = false;
};

struct LeeForm {
  Form theta;
  Gaussian d_star_theta;
};

/// A metric bound to an almost complex structure.
class HermitianGeometry {
public:
  HermitianGeometry(std::shared_ptr<const AlmostComplexStructure> acs, HermitianMetric metric,
                    Gaussian omega_scale = Gaussian(0, mpq_class(1, 2)));

  const AlmostComplexStructure& structure() const { return *acs_; }
  const HermitianMetric& metric() const { return metric_; }
  const Space& space() const { return acs_->space(); }
  int n() const { return acs_->n(); }
  const Gaussian& omega_scale() const { return kappa_; }
  /// Unimodular algebras integrate invariant exact top forms to zero.
  bool invariant_stokes() const { return acs_->coframe().unimodular(); }

  Form fundamental_form() const { return omega_; }
  Form omega_power(int k) const;
  Form volume(StarConvention conv = StarConvention::Riemannian) const;

  Form hodge_star(const Form& f, StarConvention conv = StarConvention::Riemannian) const;
  Form adjoint(Adjoint which, const Form& f) const;
  Form laplacian(Laplacian which, const Form& f) const;

  /// Invariant solutions of delbar(a) = 0 and del(*a) = 0 among constant-coefficient
  /// (p,q)-forms; in conformal mode both must vanish as formal expressions.
  HarmonicBasis harmonic_space(int p, int q) const;

  /// <alpha, beta> realised as the Vol-coefficient of alpha ^ *conj(beta).
  PairingValue l2_pairing(const Form& alpha, const Form& beta) const;

  /// Constant mode only.
  LeeForm lee_form() const;

  /// Renders a form including formal coefficients.
  std::string render(const Form& f) const { return f.to_string(acs_->frame_brackets()); }
  std::string render(const FormalCoefficient& c) const { return c.to_string(acs_->frame_brackets()); }

private:
  Form to_orthogonal(const Form& f) const;
  Form from_orthogonal(const Form& f) const;
  Form star_orthogonal(const Form& f, StarConvention conv) const;
  FormalCoefficient volume_coefficient(StarConvention conv) const;

  std::shared_ptr<const AlmostComplexStructure> acs_;
  HermitianMetric metric_;
  Gaussian kappa_;
  Form omega_;
  std::vector<Form> phi_to_psi_, psi_to_phi_;
};

/// Pair (word, monomial) indexing the rows of a linear system whose unknowns
/// are constant coefficients and whose equations must vanish formally.
struct FormalRow {
  int equation;
  Word word;
  Monomial monomial;
  friend bool operator<(const FormalRow& a, const FormalRow& b) {
    if (a.equation != b.equation) return a.equation < b.equation;
    if (a.word != b.word) return a.word < b.word;
    return a.monomial < b.monomial;
  }
};

/// Assembles the matrix with one column per unknown: column j holds the forms
/// columns[j][e] for each equation e, expanded over (word, monomial).
/// `rhs`, when given, is expanded over the same rows.
struct FormalSystem {
  Matrix matrix;
  Vector rhs;
};
FormalSystem assemble_system(const std::vector<std::vector<Form>>& columns,
                             const std::vector<Form>& rhs = {});

}  // namespace acs
