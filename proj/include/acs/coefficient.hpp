#pragma once

// Exact scalars with a formal conformal factor: finite sums of
//   c * e^(a s) * W_1(s) * ... * W_k(s)
// where c is in Q(i), a is rational, and each W_j is a word in the frame
// vector fields applied to the real function s (sigma). Words are kept in
// PBW normal order with respect to the frame order V1 < ... < Vn < Vb1 < ... < Vbn.

#include "acs/gaussian.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace acs {

/// Brackets [V_a, V_b] = sum_c gamma(c, a, b) V_c over a fixed frame.
/// Complex frames have 2n letters V1..Vn, Vb1..Vbn; real frames have m letters E1..Em.
class FrameBracketTable {
public:
  FrameBracketTable() = default;
  FrameBracketTable(int letters, bool complex);

  int letters() const { return letters_; }
  bool complex() const { return complex_; }
  int complex_dim() const { return complex_ ? letters_ / 2 : 0; }

  const Gaussian& gamma(int c, int a, int b) const { return data_[index(c, a, b)]; }
  void set_gamma(int c, int a, int b, Gaussian value) { data_[index(c, a, b)] = std::move(value); }

  /// Index of the conjugate letter (identity for real frames).
  int bar(int a) const;
  std::string letter_name(int a) const;

  bool is_antisymmetric() const;
  /// Conjugation symmetry: gamma(bar c, bar a, bar b) = conj gamma(c, a, b).
  bool is_conjugation_symmetric() const;
  bool satisfies_jacobi() const;
  bool is_zero() const;

  friend bool operator==(const FrameBracketTable&, const FrameBracketTable&) = default;

private:
  std::size_t index(int c, int a, int b) const {
    return (static_cast<std::size_t>(c) * letters_ + a) * letters_ + b;
  }
  int letters_ = 0;
  bool complex_ = true;
  std::vector<Gaussian> data_;
};

/// V_{w0} V_{w1} ... V_{wk} applied to s, i.e. w0 acts last.
using DerivWord = std::vector<std::uint8_t>;
using WordCombination = std::map<DerivWord, Gaussian>;

/// Rewrites a derivative word into PBW normal order using
/// V_b V_a = V_a V_b - [V_a, V_b] for a < b.
WordCombination normalize_word(const DerivWord& word, const FrameBracketTable& table);

struct Monomial {
  mpq_class exponent{0};
  std::vector<DerivWord> factors;  // sorted multiset

  bool is_unit() const { return sgn(exponent) == 0 && factors.empty(); }
  std::size_t derivative_order() const;
  friend bool operator<(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponent == b.exponent && a.factors == b.factors;
  }
};

Monomial operator*(const Monomial& a, const Monomial& b);

class FormalCoefficient {
public:
  using TermMap = std::map<Monomial, Gaussian>;

  FormalCoefficient() = default;
  FormalCoefficient(Gaussian c);
  FormalCoefficient(long c) : FormalCoefficient(Gaussian(c)) {}

  /// c * e^(a s)
  static FormalCoefficient exponential(const mpq_class& a, Gaussian c = Gaussian(1));
  /// W(s) for a word already in normal order.
  static FormalCoefficient derivative(DerivWord word);
  /// c * e^(a s) * prod W_j(s) with arbitrary-order words, normalized.
  static FormalCoefficient normalized_term(Gaussian c, const mpq_class& a,
                                           const std::vector<DerivWord>& words,
                                           const FrameBracketTable& table);
  static FormalCoefficient from_monomial(Monomial m, Gaussian c = Gaussian(1));

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant coefficient; throws otherwise.
  Gaussian constant() const;
  /// Coefficient of the unit monomial (possibly zero).
  Gaussian constant_part() const;
  /// Inverse of a single term c e^(a s) without derivative factors.
  FormalCoefficient inverse() const;
  std::set<mpq_class> exponents() const;
  std::size_t max_derivative_order() const;

  FormalCoefficient conjugate(const FrameBracketTable& table) const;
  /// V_a applied to this coefficient, result in normal form.
  FormalCoefficient differentiate(int a, const FrameBracketTable& table) const;

  FormalCoefficient operator-() const;
  FormalCoefficient& operator+=(const FormalCoefficient& o);
  FormalCoefficient& operator-=(const FormalCoefficient& o);
  FormalCoefficient& operator*=(const Gaussian& c);
  friend FormalCoefficient operator+(FormalCoefficient a, const FormalCoefficient& b) { return a += b; }
  friend FormalCoefficient operator-(FormalCoefficient a, const FormalCoefficient& b) { return a -= b; }
  friend FormalCoefficient operator*(const FormalCoefficient& a, const FormalCoefficient& b);
  friend FormalCoefficient operator*(FormalCoefficient a, const Gaussian& c) { return a *= c; }
  friend FormalCoefficient operator*(const Gaussian& c, FormalCoefficient a) { return a *= c; }
  friend bool operator==(const FormalCoefficient& a, const FormalCoefficient& b) {
    return a.terms_ == b.terms_;
  }

  void add_term(const Monomial& m, const Gaussian& c);

  /// Rendering: `e^(a s)` for exponentials, `V3 Vb3 (s)` for words.
  std::string to_string(const FrameBracketTable& table) const;

private:
  TermMap terms_;
};

/// True when the rendered leading sign should be pulled out as " - ".
bool renders_negative(const Gaussian& c);

}  // namespace acs
