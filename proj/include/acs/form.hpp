#pragma once

#include "acs/coefficient.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace acs {

/// Strictly increasing index word over the coframe, stored as a bitmask.
using Word = std::uint32_t;

inline int word_degree(Word w) { return std::popcount(w); }

/// Sign of w1 ^ w2 relative to the canonical word w1 | w2 (0 if they share a letter).
int wedge_sign(Word w1, Word w2);

/// Ambient exterior algebra: `generators` letters; in complex mode the first
/// half are the (1,0) letters phi1..phin and the second half their conjugates.
struct Space {
  int generators = 0;
  bool complex = true;

  int complex_dim() const { return complex ? generators / 2 : 0; }
  Word full_mask() const { return generators == 32 ? ~Word{0} : (Word{1} << generators) - 1; }
  Word holomorphic_mask() const { return (Word{1} << complex_dim()) - 1; }
  Word antiholomorphic_mask() const { return holomorphic_mask() << complex_dim(); }
  std::pair<int, int> bidegree(Word w) const {
    return {std::popcount(w & holomorphic_mask()), std::popcount(w & antiholomorphic_mask())};
  }
  std::string generator_name(int g) const;
  /// All words of bidegree (p, q), in increasing mask order.
  std::vector<Word> words_of_bidegree(int p, int q) const;
  std::vector<Word> words_of_degree(int k) const;

  friend bool operator==(const Space&, const Space&) = default;
};

class ModeMismatch : public Error {
public:
  ModeMismatch() : Error("forms live in different exterior algebras") {}
};

/// Element of the exterior algebra with formal coefficients. Zero
/// coefficients are never stored.
class Form {
public:
  using TermMap = std::map<Word, FormalCoefficient>;

  Form() = default;
  explicit Form(Space space) : space_(space) {}

  static Form word(Space space, Word w, FormalCoefficient c = FormalCoefficient(1));
  static Form generator(Space space, int g, FormalCoefficient c = FormalCoefficient(1));
  static Form scalar(Space space, FormalCoefficient c) { return word(space, 0, std::move(c)); }

  const Space& space() const { return space_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Degree of the highest-degree word (-1 for zero).
  int degree() const;
  bool is_homogeneous() const;
  bool has_constant_coefficients() const;

  FormalCoefficient coefficient(Word w) const;
  /// Coefficient of the canonical top word phi^{1..n 1b..nb}.
  FormalCoefficient top_coefficient() const { return coefficient(space_.full_mask()); }

  void add(Word w, const FormalCoefficient& c);
  Form project_bidegree(int p, int q) const;
  Form project_degree(int k) const;

  Form operator-() const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const FormalCoefficient& c);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const FormalCoefficient& c, Form a) { return a *= c; }
  friend Form operator*(const Gaussian& c, Form a) { return a *= FormalCoefficient(c); }
  friend bool operator==(const Form& a, const Form& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
  }

  /// Rendering in structure-file syntax (`-1/2*phi1^phi2^~phi1`); non-constant
  /// coefficients are bracketed: `[2 e^(-4 s) V3 Vb3 (s)]*phi1^...`.
  std::string to_string(const FrameBracketTable& table) const;
  /// Constant-coefficient rendering; throws on formal coefficients.
  std::string to_string() const;

private:
  Space space_{};
  TermMap terms_;
};

Form wedge(const Form& a, const Form& b);

/// Pulls a form back along a coframe change: generator g is replaced by the
/// 1-form images[g], which live in `target`.
Form substitute(const Form& f, std::span<const Form> images, Space target);

std::string render_word(const Space& space, Word w);

}  // namespace acs
