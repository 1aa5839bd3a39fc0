#include "acs/coefficient.hpp"

#include <algorithm>
#include <sstream>

namespace acs {

FrameBracketTable::FrameBracketTable(int letters, bool complex)
    : letters_(letters), complex_(complex),
      data_(static_cast<std::size_t>(letters) * letters * letters) {
  if (complex && letters % 2 != 0) throw Error("complex frame needs an even number of letters");
}

int FrameBracketTable::bar(int a) const {
  if (!complex_) return a;
  const int n = letters_ / 2;
  return a < n ? a + n : a - n;
}

std::string FrameBracketTable::letter_name(int a) const {
  if (!complex_) return "E" + std::to_string(a + 1);
  const int n = letters_ / 2;
  return a < n ? "V" + std::to_string(a + 1) : "Vb" + std::to_string(a - n + 1);
}

bool FrameBracketTable::is_antisymmetric() const {
  for (int c = 0; c < letters_; ++c)
    for (int a = 0; a < letters_; ++a)
      for (int b = 0; b < letters_; ++b)
        if (!(gamma(c, a, b) + gamma(c, b, a)).is_zero()) return false;
  return true;
}

bool FrameBracketTable::is_conjugation_symmetric() const {
  for (int c = 0; c < letters_; ++c)
    for (int a = 0; a < letters_; ++a)
      for (int b = 0; b < letters_; ++b)
        if (!(gamma(bar(c), bar(a), bar(b)) == gamma(c, a, b).conj())) return false;
  return true;
}

bool FrameBracketTable::satisfies_jacobi() const {
  const int m = letters_;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        for (int l = 0; l < m; ++l) {
          Gaussian s;
          for (int k = 0; k < m; ++k) {
            s += gamma(k, a, b) * gamma(l, k, c);
            s += gamma(k, b, c) * gamma(l, k, a);
            s += gamma(k, c, a) * gamma(l, k, b);
          }
          if (!s.is_zero()) return false;
        }
  return true;
}

bool FrameBracketTable::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Gaussian& g) { return g.is_zero(); });
}

WordCombination normalize_word(const DerivWord& word, const FrameBracketTable& table) {
  WordCombination out;
  std::size_t pos = 0;
  while (pos + 1 < word.size() && word[pos] <= word[pos + 1]) ++pos;
  if (pos + 1 >= word.size()) {
    out.emplace(word, Gaussian(1));
    return out;
  }
  // word = ... V_b V_a ... with b > a: V_b V_a = V_a V_b - sum_c gamma(c,a,b) V_c
  const int b = word[pos];
  const int a = word[pos + 1];
  DerivWord swapped = word;
  std::swap(swapped[pos], swapped[pos + 1]);
  for (auto& [w, c] : normalize_word(swapped, table)) out[w] += c;
  for (int c = 0; c < table.letters(); ++c) {
    const Gaussian& g = table.gamma(c, a, b);
    if (g.is_zero()) continue;
    DerivWord shorter(word.begin(), word.begin() + pos);
    shorter.push_back(static_cast<std::uint8_t>(c));
    shorter.insert(shorter.end(), word.begin() + pos + 2, word.end());
    for (auto& [w, coef] : normalize_word(shorter, table)) out[w] -= g * coef;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

std::size_t Monomial::derivative_order() const {
  std::size_t n = 0;
  for (const auto& w : factors) n += w.size();
  return n;
}

bool operator<(const Monomial& a, const Monomial& b) {
  if (a.exponent != b.exponent) return a.exponent < b.exponent;
  return a.factors < b.factors;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.exponent = a.exponent + b.exponent;
  m.factors.reserve(a.factors.size() + b.factors.size());
  std::merge(a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end(),
             std::back_inserter(m.factors));
  return m;
}

FormalCoefficient::FormalCoefficient(Gaussian c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

FormalCoefficient FormalCoefficient::exponential(const mpq_class& a, Gaussian c) {
  FormalCoefficient f;
  Monomial m;
  m.exponent = a;
  f.add_term(m, c);
  return f;
}

FormalCoefficient FormalCoefficient::derivative(DerivWord word) {
  FormalCoefficient f;
  Monomial m;
  m.factors.push_back(std::move(word));
  f.add_term(m, Gaussian(1));
  return f;
}

FormalCoefficient FormalCoefficient::from_monomial(Monomial m, Gaussian c) {
  FormalCoefficient f;
  f.add_term(m, c);
  return f;
}

FormalCoefficient FormalCoefficient::normalized_term(Gaussian c, const mpq_class& a,
                                                     const std::vector<DerivWord>& words,
                                                     const FrameBracketTable& table) {
  FormalCoefficient acc = exponential(a, std::move(c));
  for (const auto& w : words) {
    FormalCoefficient factor;
    for (auto& [nw, coef] : normalize_word(w, table)) {
      Monomial m;
      m.factors.push_back(nw);
      factor.add_term(m, coef);
    }
    acc = acc * factor;
  }
  return acc;
}

void FormalCoefficient::add_term(const Monomial& m, const Gaussian& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool FormalCoefficient::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Gaussian FormalCoefficient::constant() const {
  if (!is_constant()) throw Error("coefficient is not constant");
  return terms_.empty() ? Gaussian() : terms_.begin()->second;
}

Gaussian FormalCoefficient::constant_part() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Gaussian() : it->second;
}

FormalCoefficient FormalCoefficient::inverse() const {
  if (terms_.size() != 1 || !terms_.begin()->first.factors.empty())
    throw Error("only single exponential terms are invertible");
  const auto& [m, c] = *terms_.begin();
  return exponential(-m.exponent, Gaussian(1) / c);
}

std::set<mpq_class> FormalCoefficient::exponents() const {
  std::set<mpq_class> out;
  for (const auto& [m, c] : terms_) out.insert(m.exponent);
  return out;
}

std::size_t FormalCoefficient::max_derivative_order() const {
  std::size_t n = 0;
  for (const auto& [m, c] : terms_) n = std::max(n, m.derivative_order());
  return n;
}

FormalCoefficient FormalCoefficient::conjugate(const FrameBracketTable& table) const {
  FormalCoefficient out;
  for (const auto& [m, c] : terms_) {
    std::vector<DerivWord> words;
    for (const auto& w : m.factors) {
      DerivWord b = w;
      for (auto& letter : b) letter = static_cast<std::uint8_t>(table.bar(letter));
      words.push_back(std::move(b));
    }
    out += normalized_term(c.conj(), m.exponent, words, table);
  }
  return out;
}

FormalCoefficient FormalCoefficient::differentiate(int a, const FrameBracketTable& table) const {
  FormalCoefficient out;
  const auto letter = static_cast<std::uint8_t>(a);
  for (const auto& [m, c] : terms_) {
    if (sgn(m.exponent) != 0) {
      Monomial dm = m;
      dm.factors.insert(std::upper_bound(dm.factors.begin(), dm.factors.end(), DerivWord{letter}),
                        DerivWord{letter});
      out.add_term(dm, c * Gaussian(m.exponent));
    }
    for (std::size_t j = 0; j < m.factors.size(); ++j) {
      Monomial rest;
      rest.exponent = m.exponent;
      for (std::size_t i = 0; i < m.factors.size(); ++i)
        if (i != j) rest.factors.push_back(m.factors[i]);
      DerivWord longer{letter};
      longer.insert(longer.end(), m.factors[j].begin(), m.factors[j].end());
      for (auto& [nw, coef] : normalize_word(longer, table)) {
        Monomial single;
        single.factors.push_back(nw);
        out.add_term(rest * single, c * coef);
      }
    }
  }
  return out;
}

FormalCoefficient FormalCoefficient::operator-() const {
  FormalCoefficient out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

FormalCoefficient& FormalCoefficient::operator+=(const FormalCoefficient& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

FormalCoefficient& FormalCoefficient::operator-=(const FormalCoefficient& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

FormalCoefficient& FormalCoefficient::operator*=(const Gaussian& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

FormalCoefficient operator*(const FormalCoefficient& a, const FormalCoefficient& b) {
  FormalCoefficient out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

bool renders_negative(const Gaussian& c) {
  return sgn(c.re()) < 0 || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
}

namespace {

std::string render_exponent(const mpq_class& a) {
  if (a == 1) return "e^(s)";
  if (a == -1) return "e^(-s)";
  return "e^(" + rational_to_string(a) + " s)";
}

}  // namespace

std::string FormalCoefficient::to_string(const FrameBracketTable& table) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Gaussian shown = c;
    if (renders_negative(c)) {
      os << (first ? "-" : " - ");
      shown = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    std::vector<std::string> parts;
    if (!shown.is_one() || m.is_unit()) parts.push_back(shown.to_string());
    if (sgn(m.exponent) != 0) parts.push_back(render_exponent(m.exponent));
    for (const auto& w : m.factors) {
      std::string s;
      for (auto letter : w) s += table.letter_name(letter) + " ";
      parts.push_back(s + "(s)");
    }
    for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " " : "") << parts[i];
  }
  return os.str();
}

}  // namespace acs
