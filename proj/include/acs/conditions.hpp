#pragma once

#include "acs/hermitian.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace acs {

enum class Verdict { Holds, Fails, Undetermined };
const char* verdict_name(Verdict v);

/// Raised when a definitional implication between verdicts is violated.
class InvariantViolation : public Error {
public:
  using Error::Error;
};

class NotIntegrable : public Error {
public:
  NotIntegrable() : Error("Dolbeault cohomology needs an integrable structure") {}
};

struct GauduchonResult {
  Verdict verdict = Verdict::Undetermined;
  Form ddbar_omega_n1;  // del delbar omega^{n-1}
  /// Set when the verdict rests on formal (non)vanishing in sigma.
  bool formal = false;
};

struct WitnessResult {
  Verdict verdict = Verdict::Undetermined;
  Form del_omega_n1;
  std::optional<Form> lambda;  // delbar lambda = del omega^{n-1}
  Form residual;
  std::string reason;
};

enum class IntegralStatus { Zero, Nonzero, Undetermined };
const char* integral_status_name(IntegralStatus s);

struct IntegralValue {
  Form eta;
  /// Integral = value * Vol (the Vol-coefficient of del eta ^ omega^{n-1}).
  FormalCoefficient value;
  IntegralStatus status = IntegralStatus::Undetermined;
  /// "constant", "formal-zero", "exact" or "none".
  std::string route;
  std::optional<Form> primitive;
};

struct IntegralConditionResult {
  Verdict verdict = Verdict::Undetermined;
  HarmonicBasis harmonic;
  std::vector<IntegralValue> values;
};

struct OrthogonalityResult {
  Verdict verdict = Verdict::Undetermined;
  Form del_star_omega;
  std::vector<PairingValue> pairings;
};

struct HodgeNumber {
  int p, q;
  std::size_t dimension;
};

struct MetricReport {
  Verdict almost_kahler = Verdict::Undetermined;
  Verdict balanced = Verdict::Undetermined;
  Verdict skt = Verdict::Undetermined;
  Verdict gauduchon = Verdict::Undetermined;
  Verdict strongly_gauduchon = Verdict::Undetermined;
  Verdict integral_condition = Verdict::Undetermined;
  Verdict orthogonality = Verdict::Undetermined;

  Form omega;
  Form d_omega;
  Form d_omega_n1;
  GauduchonResult gauduchon_detail;
  WitnessResult witness;
  IntegralConditionResult integral;
  OrthogonalityResult orthogonal;
  std::optional<LeeForm> lee;
  std::vector<HodgeNumber> hodge_numbers;  // invariant part
  bool invariant_stokes = true;
  bool integrable = false;
};

GauduchonResult is_gauduchon(const HermitianGeometry& g);
WitnessResult strongly_gauduchon_witness(const HermitianGeometry& g);
WitnessResult strongly_gauduchon_witness(const HermitianGeometry& g, const GauduchonResult& gauduchon);

/// Default derivative-order bound for the exactness search.
inline constexpr int kDefaultDerivativeBound = 2;

/// Integral of del eta ^ omega^{n-1} for one (0,1)-form eta.
IntegralValue integral_value(const HermitianGeometry& g, const Form& eta,
                             int derivative_bound = kDefaultDerivativeBound);
IntegralConditionResult integral_condition(const HermitianGeometry& g,
                                           int derivative_bound = kDefaultDerivativeBound);
OrthogonalityResult orthogonality_check(const HermitianGeometry& g);
OrthogonalityResult orthogonality_check(const HermitianGeometry& g, const HarmonicBasis& harmonic);

/// Searches beta with d beta = top over (2n-1)-forms whose coefficients are
/// monomials e^(a s) W_1(s)...W_k(s) of total derivative order below `bound`,
/// with exponents a taken from `top`.
std::optional<Form> find_primitive(const AlmostComplexStructure& acs, const Form& top, int bound);

MetricReport classify(const HermitianGeometry& g);

struct DolbeaultGroup {
  int p = 0, q = 0;
  std::size_t dimension = 0;
  std::vector<Form> representatives;
};
DolbeaultGroup dolbeault_cohomology(const AlmostComplexStructure& acs, int p, int q);

/// Matrix of an operator on the constant basis words of `from` expressed in
/// the basis words of `to`.
Matrix operator_matrix(const AlmostComplexStructure& acs, Part part, const std::vector<Word>& from,
                       const std::vector<Word>& to);

struct ObstructionCertificate {
  bool found = false;
  /// Coordinates in the real frame x1, y1, ..., xn, yn dual to Re phi, Im phi.
  std::vector<mpq_class> vector;
  std::string stage;  // "basis-vector", "common-kernel" or "inconclusive"
  /// Basis of closed J-compatible real 2-forms, as real forms.
  std::vector<Form> compatible_closed_forms;
  RealStructure real;
};
ObstructionCertificate almost_kahler_obstruction(const AlmostComplexStructure& acs);
/// omega(v, J v) for a real 2-form on the real frame.
mpq_class evaluate_on_v_jv(const Form& real_two_form, const RealStructure& real,
                           const std::vector<mpq_class>& v);

// -- batches of sampled constant metrics --------------------------------------

/// Random diagonal positive rational entries followed by a congruence by a
/// random unipotent Gaussian-rational matrix. Deterministic in `seed`.
std::vector<HermitianMetric> sample_metrics(int n, std::size_t count, std::uint64_t seed);

enum class Execution { Serial, Parallel };

/// Classifies every metric. The parallel path distributes metrics over
/// OpenMP threads; results are identical to the serial path.
std::vector<MetricReport> classify_batch(std::shared_ptr<const AlmostComplexStructure> acs,
                                         const Gaussian& omega_scale,
                                         const std::vector<HermitianMetric>& metrics,
                                         Execution exec = Execution::Parallel);

struct BatchSummary {
  std::size_t samples = 0;
  std::size_t gauduchon = 0;
  std::size_t strongly_gauduchon = 0;
  std::size_t integral_condition = 0;
  std::size_t vacuous_integral_condition = 0;  // h^{0,1} = 0
  std::size_t sg_without_ic = 0;               // counterexamples to sG => IC
  std::size_t ic_orthogonality_disagreements = 0;
  std::size_t integrable_gauduchon_checked = 0;
  std::size_t ic_witness_disagreements = 0;  // IC <=> witness, integrable + Gauduchon
  /// Over the sample only; never a proof of sGG.
  bool all_sampled_gauduchon_are_sg = true;
};
BatchSummary summarize(const std::vector<MetricReport>& reports);

}  // namespace acs
