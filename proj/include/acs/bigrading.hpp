#pragma once

#include "acs/algebra.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace acs {

/// The four bidegree components of d: mu (2,-1), del (1,0), delbar (0,1), mubar (-1,2).
enum class Part { Mu, Del, DelBar, MuBar };

const char* part_name(Part p);

class MixedBidegree : public Error {
public:
  MixedBidegree() : Error("form is not of pure bidegree") {}
};

struct OperatorSplit {
  Form mu, del, delbar, mubar;
  Form sum() const { return mu + del + delbar + mubar; }
};

struct RelationResult {
  std::string identity;
  bool holds = true;
  std::optional<Word> counterexample;
  Form residual;
};

struct RelationReport {
  std::vector<RelationResult> relations;  // the seven identities from d^2 = 0
  bool del_squared_vanishes = true;       // informational: del o del = 0 on its own
  bool all_hold() const;
};

/// Real description: real coframe e^1..e^{2n} and J acting on frame vectors,
/// j_images[i][k] = k-th coordinate of J e_i.
struct RealStructure {
  Coframe coframe;
  std::vector<std::vector<mpq_class>> j_images;
};

/// An invariant almost complex structure, stored through the complex
/// structure equations dphi^k of a (1,0)-coframe.
class AlmostComplexStructure {
public:
  AlmostComplexStructure() = default;

  /// `dphi[k]` is dphi^{k+1} as a constant 2-form over phi, ~phi.
  static AlmostComplexStructure from_complex_equations(int n, std::vector<Form> dphi);
  /// Builds the (1,0)-coframe phi = alpha - i alpha o J from a real algebra and J.
  static AlmostComplexStructure from_real(const StructuredAlgebra& algebra,
                                          const std::vector<std::vector<mpq_class>>& j_images);

  int n() const { return n_; }
  const Space& space() const { return coframe_.space(); }
  const Coframe& coframe() const { return coframe_; }
  const FrameBracketTable& frame_brackets() const { return coframe_.brackets(); }
  bool jacobi_ok() const { return coframe_.jacobi_ok(); }
  /// Throws JacobiViolation unless d^2 = 0 on the coframe.
  void require_jacobi() const;

  Form d(const Form& f) const { return coframe_.d(f); }
  Form conjugate(const Form& f) const { return coframe_.conjugate(f); }
  /// One component of d, applied bidegree by bidegree.
  Form apply(Part part, const Form& f) const;
  OperatorSplit split_d(const Form& f) const;

  bool is_integrable() const;
  RelationReport check_relations() const;

  /// Real coframe x^j = Re phi^j, y^j = Im phi^j (ordered x1, y1, x2, y2, ...)
  /// with J e_{x_j} = e_{y_j}.
  RealStructure real_structure() const;

  Form phi(int k) const { return Form::generator(space(), k); }
  Form phibar(int k) const { return Form::generator(space(), n_ + k); }

private:
  int n_ = 0;
  Coframe coframe_;
};

}  // namespace acs
