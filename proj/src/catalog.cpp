#include "acs/catalog.hpp"

#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace acs {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
  return s;
}

}  // namespace

SyntaxError::SyntaxError(int line, int column, std::vector<std::string> expected, const std::string& found)
    : ParseError("SyntaxError", line, column, "expected " + join(expected) + "; found " + found),
      expected_(std::move(expected)) {}

namespace {

struct Token {
  enum Kind { Ident, Int, Sym, End } kind;
  std::string text;
  int column;
};

std::string describe(const Token& t) { return t.kind == Token::End ? "end of line" : "'" + t.text + "'"; }

std::vector<Token> lex(std::string_view line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    const int col = static_cast<int>(i) + 1;
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_')) ++j;
      out.push_back({Token::Ident, std::string(line.substr(i, j - i)), col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Token::Int, std::string(line.substr(i, j - i)), col});
      i = j;
    } else if (std::string_view("~/()+-*^=,").find(c) != std::string_view::npos) {
      out.push_back({Token::Sym, std::string(1, c), col});
      ++i;
    } else {
      std::string shown = std::isprint(static_cast<unsigned char>(c)) ? std::string(1, c) : "byte " + std::to_string(static_cast<unsigned char>(c));
      throw SyntaxError(line_no, col, {"symbol, number or operator"}, "'" + shown + "'");
    }
  }
  out.push_back({Token::End, "", static_cast<int>(line.size()) + 1});
  return out;
}

class LineParser {
public:
  LineParser(std::vector<Token> tokens, int line_no) : toks_(std::move(tokens)), line_(line_no) {}

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
  bool at_sym(char c) const { return peek().kind == Token::Sym && peek().text[0] == c; }
  bool at_ident(std::string_view s) const { return peek().kind == Token::Ident && peek().text == s; }
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw SyntaxError(line_, peek().column, std::move(expected), describe(peek()));
  }
  void expect_sym(char c) {
    if (!at_sym(c)) fail({"'" + std::string(1, c) + "'"});
    next();
  }
  void expect_end() {
    if (peek().kind != Token::End) fail({"end of line"});
  }
  int line() const { return line_; }

  mpq_class integer() {
    if (peek().kind != Token::Int) fail({"integer"});
    return mpq_class(next().text);
  }

  // RAT := INT ('/' POSINT)?
  mpq_class rational() {
    mpq_class v = integer();
    if (at_sym('/')) {
      next();
      if (peek().kind != Token::Int || mpz_class(peek().text) == 0) fail({"positive integer"});
      v /= mpq_class(next().text);
      v.canonicalize();
    }
    return v;
  }

  mpq_class signed_rational() {
    bool neg = false;
    if (at_sym('-') || at_sym('+')) neg = next().text == "-";
    mpq_class v = rational();
    return neg ? mpq_class(-v) : v;
  }

  // COEFF := RAT | RAT 'i' | '(' RAT (('+'|'-') RAT 'i')? ')' ['i']
  Gaussian coefficient() {
    Gaussian v;
    if (at_sym('(')) {
      next();
      mpq_class re = signed_rational();
      mpq_class im = 0;
      if (at_ident("i")) {
        next();
        std::swap(re, im);
      } else if (at_sym('+') || at_sym('-')) {
        const bool neg = next().text == "-";
        im = rational();
        if (neg) im = -im;
        if (!at_ident("i")) fail({"'i'"});
        next();
      }
      expect_sym(')');
      v = Gaussian(re, im);
    } else if (peek().kind == Token::Int) {
      v = Gaussian(rational());
    } else {
      fail({"coefficient"});
    }
    if (at_ident("i")) {
      next();
      v = v * Gaussian::i();
    }
    return v;
  }

  Gaussian signed_coefficient() {
    bool neg = false;
    if (at_sym('-') || at_sym('+')) neg = next().text == "-";
    Gaussian v = coefficient();
    return neg ? -v : v;
  }

private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int line_;
};

// Generator index of an atom, or -1 if the symbol is not declared.
int atom_index(const std::string& ident, bool conjugate, Mode mode, int dimension) {
  const std::string prefix = mode == Mode::Complex ? "phi" : "e";
  if (ident.size() <= prefix.size() || ident.compare(0, prefix.size(), prefix) != 0) return -1;
  const std::string digits = ident.substr(prefix.size());
  if (digits.size() > 3 || digits[0] == '0') return -1;
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) return -1;
  const int k = std::stoi(digits);
  if (mode == Mode::Complex) {
    if (k > dimension) return -1;
    return conjugate ? dimension + k - 1 : k - 1;
  }
  if (conjugate || k > dimension) return -1;
  return k - 1;
}

class FileParser {
public:
  ManifoldDescriptor parse(std::string_view text) {
    int line_no = 0;
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      statement(text.substr(start, end - start), line_no);
      start = end + 1;
    }
    const int eof = line_no + 1;
    if (!have_name_) throw SyntaxError(eof, 1, {"'manifold'"}, "end of input");
    if (!have_dim_) throw SyntaxError(eof, 1, {"'complex_dim'", "'real_dim'"}, "end of input");
    if (d_.mode == Mode::Real && d_.j_matrix.size() != static_cast<std::size_t>(d_.dimension))
      throw DimensionMismatch(eof, 1, "J needs " + std::to_string(d_.dimension) + " rows, got " +
                                          std::to_string(d_.j_matrix.size()));
    return d_;
  }

private:
  void statement(std::string_view raw, int line_no) {
    const auto first = raw.find_first_not_of(" \t");
    if (first != std::string_view::npos && raw.substr(first, 4) == "note" &&
        (raw.size() == first + 4 || raw[first + 4] == ' ' || raw[first + 4] == '\t')) {
      std::string rest(raw.substr(first + 4));
      const auto b = rest.find_first_not_of(" \t");
      const auto e = rest.find_last_not_of(" \t\r");
      d_.note = b == std::string::npos ? "" : rest.substr(b, e - b + 1);
      return;
    }
    LineParser p(lex(raw, line_no), line_no);
    if (p.peek().kind == Token::End) return;
    const std::vector<std::string> keywords = {"'manifold'", "'complex_dim'", "'real_dim'", "'omega_scale'",
                                               "'note'", "'J'", "'d'"};
    if (p.peek().kind != Token::Ident) p.fail(keywords);
    const std::string kw = p.peek().text;
    p.next();
    if (kw == "manifold") {
      if (have_name_) throw SyntaxError(line_no, 1, {"a single 'manifold' header"}, "'manifold'");
      if (p.peek().kind != Token::Ident) p.fail({"manifold name"});
      d_.name = p.next().text;
      have_name_ = true;
    } else if (kw == "complex_dim" || kw == "real_dim") {
      if (have_dim_) throw SyntaxError(line_no, 1, {"a single dimension header"}, "'" + kw + "'");
      const int col = p.peek().column;
      mpq_class v = p.integer();
      const bool real = kw == "real_dim";
      if (real ? (v < 2 || v > 12 || v.get_num() % 2 != 0) : (v < 1 || v > 6))
        throw DimensionMismatch(line_no, col,
                                real ? "real_dim must be even and between 2 and 12"
                                     : "complex_dim must be between 1 and 6");
      d_.mode = real ? Mode::Real : Mode::Complex;
      d_.dimension = static_cast<int>(v.get_num().get_si());
      const Space sp{real ? d_.dimension : 2 * d_.dimension, !real};
      d_.equations.assign(d_.dimension, Form(sp));
      have_dim_ = true;
    } else if (kw == "omega_scale") {
      d_.omega_scale = p.signed_coefficient();
    } else if (kw == "J") {
      if (!have_dim_ || d_.mode != Mode::Real) throw SyntaxError(line_no, 1, {"'real_dim' before 'J'"}, "'J'");
      std::vector<mpq_class> row;
      while (p.peek().kind != Token::End) {
        row.push_back(p.signed_rational());
        if (p.at_sym(',')) p.next();
      }
      if (row.size() != static_cast<std::size_t>(d_.dimension))
        throw DimensionMismatch(line_no, 1, "J row has " + std::to_string(row.size()) + " entries, expected " +
                                                std::to_string(d_.dimension));
      if (d_.j_matrix.size() == static_cast<std::size_t>(d_.dimension))
        throw DimensionMismatch(line_no, 1, "too many J rows");
      d_.j_matrix.push_back(std::move(row));
    } else if (kw == "d") {
      equation(p);
    } else {
      throw SyntaxError(line_no, 1, keywords, "'" + kw + "'");
    }
    p.expect_end();
  }

  int atom(LineParser& p, bool allow_conjugate) {
    bool conj = false;
    if (p.at_sym('~')) {
      if (!allow_conjugate) p.fail({d_.mode == Mode::Complex ? "phiK" : "eK"});
      p.next();
      conj = true;
    }
    if (p.peek().kind != Token::Ident) p.fail({d_.mode == Mode::Complex ? "phiK" : "eK"});
    const Token& t = p.peek();
    const int g = atom_index(t.text, conj, d_.mode, d_.dimension);
    if (g < 0) throw UndeclaredSymbol(p.line(), t.column, (conj ? "~" : "") + t.text);
    p.next();
    return g;
  }

  void equation(LineParser& p) {
    if (!have_dim_) throw SyntaxError(p.line(), 1, {"'complex_dim'", "'real_dim'"}, "'d'");
    const int lhs = atom(p, false);
    if (seen_.count(lhs)) throw SyntaxError(p.line(), 1, {"one equation per generator"}, "repeated equation");
    seen_.insert(lhs);
    p.expect_sym('=');
    Form& eq = d_.equations[lhs];
    bool first = true;
    for (;;) {
      bool neg = false;
      if (p.at_sym('+') || p.at_sym('-')) {
        neg = p.next().text == "-";
      } else if (!first) {
        if (p.peek().kind == Token::End) break;
        p.fail({"'+'", "'-'", "end of line"});
      }
      first = false;
      const int term_col = p.peek().column;
      Gaussian c(1);
      bool zero_literal = false;
      if (p.peek().kind == Token::Int || p.at_sym('(')) {
        zero_literal = p.peek().text == "0";
        c = p.coefficient();
        if (zero_literal && !p.at_sym('*')) continue;
        p.expect_sym('*');
      }
      Word w = 0;
      int sign = 1;
      for (;;) {
        const int g = atom(p, true);
        const Word bit = Word{1} << g;
        sign *= wedge_sign(w, bit);
        w |= bit;
        if (!p.at_sym('^')) break;
        p.next();
      }
      if (word_degree(w) != 2 && sign != 0)
        throw DimensionMismatch(p.line(), term_col, "structure equation terms must be 2-forms");
      if (sign == 0) continue;
      if (neg) c = -c;
      if (sign < 0) c = -c;
      eq.add(w, FormalCoefficient(c));
    }
  }

  ManifoldDescriptor d_;
  bool have_name_ = false, have_dim_ = false;
  std::set<int> seen_;
};

const std::map<std::string, std::string>& sources() {
  static const std::map<std::string, std::string> s = {
      {"iwasawa",
       "manifold iwasawa\n"
       "note complex Heisenberg nilmanifold with its holomorphically parallelizable structure\n"
       "complex_dim 3\n"
       "d phi1 = 0\n"
       "d phi2 = 0\n"
       "d phi3 = -phi1^phi2\n"},
      {"nil4",
       "manifold nil4\n"
       "note 3-step nilmanifold [e1,e2]=e3, [e1,e3]=e4 with a non-integrable J\n"
       "complex_dim 2\n"
       "omega_scale -1/2i\n"
       "d phi1 = 0\n"
       "d phi2 = -1/2i*phi1^phi2 - 1/2i*phi1^~phi2 + 1/2i*phi2^~phi1 - 1i*phi1^~phi1 - 1/2i*~phi1^~phi2\n"},
      {"torus2",
       "manifold torus2\n"
       "note flat complex torus\n"
       "complex_dim 2\n"
       "d phi1 = 0\n"
       "d phi2 = 0\n"},
      {"torus3",
       "manifold torus3\n"
       "note flat complex torus\n"
       "complex_dim 3\n"
       "d phi1 = 0\n"
       "d phi2 = 0\n"
       "d phi3 = 0\n"},
      {"kodaira_thurston",
       "manifold kodaira_thurston\n"
       "note Kodaira-Thurston nilmanifold, algebra and structure fixture\n"
       "complex_dim 2\n"
       "d phi1 = 0\n"
       "d phi2 = 1/2i*phi1^~phi1\n"},
  };
  return s;
}

mpq_class rational_from(std::string_view text) {
  LineParser p(lex(text, 1), 1);
  mpq_class v = p.signed_rational();
  p.expect_end();
  return v;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = s.find(sep, start);
    out.emplace_back(s.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos) return out;
    start = end + 1;
  }
}

}  // namespace

ManifoldDescriptor parse_structure_file(std::string_view text) { return FileParser().parse(text); }

std::string render(const ManifoldDescriptor& d) {
  std::ostringstream os;
  os << "manifold " << d.name << "\n";
  if (!d.note.empty()) os << "note " << d.note << "\n";
  os << (d.mode == Mode::Complex ? "complex_dim " : "real_dim ") << d.dimension << "\n";
  if (!(d.omega_scale == Gaussian(0, mpq_class(1, 2)))) os << "omega_scale " << d.omega_scale.to_string() << "\n";
  for (const auto& row : d.j_matrix) {
    os << "J";
    for (const auto& v : row) os << " " << v.get_str();
    os << "\n";
  }
  for (std::size_t k = 0; k < d.equations.size(); ++k)
    os << "d " << d.equations[k].space().generator_name(static_cast<int>(k)) << " = " << d.equations[k].to_string()
       << "\n";
  return os.str();
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"iwasawa", "nil4", "torus2", "torus3", "kodaira_thurston"};
  return names;
}

std::string builtin_source(const std::string& name) {
  auto it = sources().find(name);
  if (it == sources().end()) throw UnknownName(name);
  return it->second;
}

ManifoldDescriptor builtin(const std::string& name) { return parse_structure_file(builtin_source(name)); }

std::shared_ptr<const AlmostComplexStructure> build_structure(const ManifoldDescriptor& d) {
  if (d.mode == Mode::Complex)
    return std::make_shared<const AlmostComplexStructure>(
        AlmostComplexStructure::from_complex_equations(d.dimension, d.equations));
  const int m = d.dimension;
  std::vector<mpq_class> constants(static_cast<std::size_t>(m) * m * m, 0);
  for (int k = 0; k < m; ++k)
    for (const auto& [w, c] : d.equations[k].terms()) {
      const Gaussian v = c.constant();
      if (!v.is_real()) throw Error("real structure equations need real coefficients");
      const int i = std::countr_zero(w);
      const int j = 31 - std::countl_zero(w);
      // d e^k = -sum_{i<j} c^k_ij e^ij
      constants[(k * m + i) * m + j] = -v.re();
      constants[(k * m + j) * m + i] = v.re();
    }
  const StructuredAlgebra alg = validate_algebra(m, constants);
  std::vector<std::vector<mpq_class>> images(m, std::vector<mpq_class>(m));
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) images[c][r] = d.j_matrix[r][c];
  return std::make_shared<const AlmostComplexStructure>(AlmostComplexStructure::from_real(alg, images));
}

Gaussian parse_gaussian(std::string_view text) {
  LineParser p(lex(text, 1), 1);
  Gaussian v = p.signed_coefficient();
  p.expect_end();
  return v;
}

HermitianMetric parse_metric(std::string_view text, int n) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw InvalidMetric("metric must start with diag:, herm: or cdiag:");
  const std::string_view kind = text.substr(0, colon);
  const auto items = split(text.substr(colon + 1), ',');
  try {
    if (kind == "diag") {
      if (items.size() != static_cast<std::size_t>(n))
        throw InvalidMetric("diag: needs " + std::to_string(n) + " entries");
      std::vector<mpq_class> entries;
      for (const auto& s : items) entries.push_back(rational_from(s));
      return HermitianMetric::diagonal(entries);
    }
    if (kind == "herm") {
      if (items.size() != static_cast<std::size_t>(n * n))
        throw InvalidMetric("herm: needs " + std::to_string(n * n) + " entries");
      Matrix h(n, n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) h(r, c) = parse_gaussian(items[r * n + c]);
      return HermitianMetric::constant(std::move(h));
    }
    if (kind == "cdiag") {
      if (items.size() != static_cast<std::size_t>(n))
        throw InvalidMetric("cdiag: needs " + std::to_string(n) + " entries");
      std::vector<std::pair<mpq_class, mpq_class>> entries;
      for (const auto& s : items) {
        const auto star = s.find("*exp(");
        if (star == std::string::npos || s.back() != ')') throw InvalidMetric("cdiag entry must read c*exp(a)");
        entries.emplace_back(rational_from(s.substr(0, star)),
                             rational_from(s.substr(star + 5, s.size() - star - 6)));
      }
      return HermitianMetric::conformal_diagonal(std::move(entries));
    }
  } catch (const ParseError& e) {
    throw InvalidMetric(std::string("bad metric entry: ") + e.what());
  } catch (const NotPositiveDefinite& e) {
    throw InvalidMetric(e.what());
  }
  throw InvalidMetric("unknown metric kind '" + std::string(kind) + "'");
}

}  // namespace acs
