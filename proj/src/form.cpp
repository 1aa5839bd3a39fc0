#include "acs/form.hpp"

#include <sstream>

namespace acs {

int wedge_sign(Word w1, Word w2) {
  if (w1 & w2) return 0;
  int inversions = 0;
  for (Word rest = w2; rest; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    // letters of w1 above j must move past letter j
    const Word above = j >= 31 ? 0 : (w1 >> (j + 1));
    inversions += std::popcount(above);
  }
  return inversions % 2 ? -1 : 1;
}

std::string Space::generator_name(int g) const {
  if (!complex) return "e" + std::to_string(g + 1);
  const int n = complex_dim();
  return g < n ? "phi" + std::to_string(g + 1) : "~phi" + std::to_string(g - n + 1);
}

std::vector<Word> Space::words_of_bidegree(int p, int q) const {
  std::vector<Word> out;
  if (p < 0 || q < 0) return out;
  for (Word w = 0; w <= full_mask(); ++w) {
    if (bidegree(w) == std::pair{p, q}) out.push_back(w);
    if (w == full_mask()) break;
  }
  return out;
}

std::vector<Word> Space::words_of_degree(int k) const {
  std::vector<Word> out;
  for (Word w = 0; w <= full_mask(); ++w) {
    if (word_degree(w) == k) out.push_back(w);
    if (w == full_mask()) break;
  }
  return out;
}

Form Form::word(Space space, Word w, FormalCoefficient c) {
  Form f(space);
  f.add(w, c);
  return f;
}

Form Form::generator(Space space, int g, FormalCoefficient c) {
  return word(space, Word{1} << g, std::move(c));
}

int Form::degree() const {
  int d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, word_degree(w));
  return d;
}

bool Form::is_homogeneous() const {
  const int d = degree();
  for (const auto& [w, c] : terms_)
    if (word_degree(w) != d) return false;
  return true;
}

bool Form::has_constant_coefficients() const {
  for (const auto& [w, c] : terms_)
    if (!c.is_constant()) return false;
  return true;
}

FormalCoefficient Form::coefficient(Word w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? FormalCoefficient() : it->second;
}

void Form::add(Word w, const FormalCoefficient& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form Form::project_bidegree(int p, int q) const {
  Form out(space_);
  for (const auto& [w, c] : terms_)
    if (space_.bidegree(w) == std::pair{p, q}) out.terms_.emplace(w, c);
  return out;
}

Form Form::project_degree(int k) const {
  Form out(space_);
  for (const auto& [w, c] : terms_)
    if (word_degree(w) == k) out.terms_.emplace(w, c);
  return out;
}

Form Form::operator-() const {
  Form out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

Form& Form::operator+=(const Form& o) {
  if (is_zero() && space_.generators == 0) space_ = o.space_;
  if (!o.is_zero() && !(o.space_ == space_)) throw ModeMismatch();
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

Form& Form::operator-=(const Form& o) { return *this += -o; }

Form& Form::operator*=(const FormalCoefficient& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  TermMap scaled;
  for (const auto& [w, v] : terms_) {
    FormalCoefficient p = v * c;
    if (!p.is_zero()) scaled.emplace(w, std::move(p));
  }
  terms_ = std::move(scaled);
  return *this;
}

Form wedge(const Form& a, const Form& b) {
  if (!(a.space() == b.space())) throw ModeMismatch();
  Form out(a.space());
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      const int s = wedge_sign(wa, wb);
      if (s == 0) continue;
      FormalCoefficient c = ca * cb;
      if (s < 0) c = -c;
      out.add(wa | wb, c);
    }
  }
  return out;
}

Form substitute(const Form& f, std::span<const Form> images, Space target) {
  if (images.size() != static_cast<std::size_t>(f.space().generators))
    throw Error("substitution needs one image per generator");
  Form out(target);
  for (const auto& [w, c] : f.terms()) {
    Form acc = Form::scalar(target, c);
    for (Word rest = w; rest; rest &= rest - 1) acc = wedge(acc, images[std::countr_zero(rest)]);
    out += acc;
  }
  return out;
}

std::string render_word(const Space& space, Word w) {
  if (w == 0) return "1";
  std::string s;
  for (Word rest = w; rest; rest &= rest - 1) {
    if (!s.empty()) s += "^";
    s += space.generator_name(std::countr_zero(rest));
  }
  return s;
}

namespace {

std::string render(const Form& f, const FrameBracketTable* table) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : f.terms()) {
    if (c.is_constant()) {
      Gaussian v = c.constant();
      const bool neg = renders_negative(v);
      if (neg) v = -v;
      os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
      if (w == 0)
        os << v.to_string();
      else if (v.is_one())
        os << render_word(f.space(), w);
      else
        os << v.to_string() << "*" << render_word(f.space(), w);
    } else {
      if (!table) throw Error("formal coefficient needs a frame to render");
      os << (first ? "" : " + ") << "[" << c.to_string(*table) << "]";
      if (w != 0) os << "*" << render_word(f.space(), w);
    }
    first = false;
  }
  return os.str();
}

}  // namespace

std::string Form::to_string(const FrameBracketTable& table) const { return render(*this, &table); }
std::string Form::to_string() const { return render(*this, nullptr); }

}  // namespace acs
