#pragma once

#include "acs/form.hpp"

#include <optional>
#include <vector>

namespace acs {

class NotAntisymmetric : public Error {
public:
  NotAntisymmetric(int k, int i, int j);
};

/// Raised by operations that refuse to run on structure constants failing Jacobi.
class JacobiViolation : public Error {
public:
  JacobiViolation() : Error("structure constants violate the Jacobi identity") {}
};

/// Real Lie algebra [e_i, e_j] = sum_k c(k, i, j) e_k with derived flags.
struct StructuredAlgebra {
  int real_dim = 0;
  std::vector<mpq_class> constants;  // index (k * m + i) * m + j
  bool jacobi_ok = false;
  bool unimodular = false;
  /// Length of the lower central series; empty when not nilpotent.
  std::optional<int> nilpotency_step;

  const mpq_class& c(int k, int i, int j) const {
    return constants[(static_cast<std::size_t>(k) * real_dim + i) * real_dim + j];
  }
};

/// Checks shape and antisymmetry and computes the flags. Jacobi failure is
/// reported through the flag, not thrown.
StructuredAlgebra validate_algebra(int real_dim, std::vector<mpq_class> constants);

/// Left-invariant coframe of a Lie algebra: the differentials of the
/// generators determine the Chevalley-Eilenberg differential on all forms
/// and, by duality, the frame brackets phi^c([V_a, V_b]) = -dphi^c(V_a, V_b).
class Coframe {
public:
  Coframe() = default;
  Coframe(Space space, std::vector<Form> generator_differentials);

  const Space& space() const { return space_; }
  const FrameBracketTable& brackets() const { return brackets_; }
  const Form& d_generator(int g) const { return dgen_[g]; }

  /// Exterior derivative; coefficients are differentiated with
  /// d f = sum_a V_a(f) phi^a.
  Form d(const Form& f) const;
  /// d of a constant basis word.
  const Form& d_word(Word w) const { return dword_[w]; }
  /// Complex conjugation (identity on real coframes).
  Form conjugate(const Form& f) const;

  bool jacobi_ok() const { return jacobi_; }
  bool unimodular() const;

  /// Real structure constants; only meaningful for real coframes.
  StructuredAlgebra to_algebra() const;
  static Coframe from_algebra(const StructuredAlgebra& algebra);

private:
  Space space_{};
  std::vector<Form> dgen_;
  std::vector<Form> dword_;
  FrameBracketTable brackets_;
  bool jacobi_ = false;
};

}  // namespace acs
