#pragma once

#include "acs/conditions.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace acs {

/// Any diagnostic raised while reading a structure file. Positions are 1-based.
class ParseError : public Error {
public:
  ParseError(const std::string& kind, int line, int column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + kind + ": " +
              message),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_, column_;
};

class SyntaxError : public ParseError {
public:
  SyntaxError(int line, int column, std::vector<std::string> expected, const std::string& found);
  const std::vector<std::string>& expected() const { return expected_; }

private:
  std::vector<std::string> expected_;
};

class UndeclaredSymbol : public ParseError {
public:
  UndeclaredSymbol(int line, int column, const std::string& symbol)
      : ParseError("UndeclaredSymbol", line, column, "'" + symbol + "' is not a declared coframe symbol"),
        symbol_(symbol) {}
  const std::string& symbol() const { return symbol_; }

private:
  std::string symbol_;
};

class DimensionMismatch : public ParseError {
public:
  DimensionMismatch(int line, int column, const std::string& message)
      : ParseError("DimensionMismatch", line, column, message) {}
};

class UnknownName : public Error {
public:
  explicit UnknownName(const std::string& name) : Error("unknown catalog entry '" + name + "'") {}
};

class InvalidMetric : public Error {
public:
  using Error::Error;
};

enum class Mode { Complex, Real };

struct ManifoldDescriptor {
  std::string name;
  Mode mode = Mode::Complex;
  /// Complex dimension in complex mode, real dimension in real mode.
  int dimension = 0;
  /// d of each coframe generator (phiK, or eK in real mode); zero when absent.
  std::vector<Form> equations;
  /// Real mode: J as a matrix in the basis e_1..e_m (row r, column c).
  std::vector<std::vector<mpq_class>> j_matrix;
  /// omega = scale * sum h_jk phi^j ^ ~phi^k.
  Gaussian omega_scale = Gaussian(0, mpq_class(1, 2));
  std::string note;

  int complex_dim() const { return mode == Mode::Complex ? dimension : dimension / 2; }
  friend bool operator==(const ManifoldDescriptor&, const ManifoldDescriptor&) = default;
};

ManifoldDescriptor parse_structure_file(std::string_view text);
/// Canonical text; parse(render(d)) == d.
std::string render(const ManifoldDescriptor& d);

const std::vector<std::string>& builtin_names();
ManifoldDescriptor builtin(const std::string& name);
/// Catalog source text of a built-in entry.
std::string builtin_source(const std::string& name);

std::shared_ptr<const AlmostComplexStructure> build_structure(const ManifoldDescriptor& d);

/// `diag:c1,...`, `herm:` row-major entries, `cdiag:c1*exp(a1),...`.
HermitianMetric parse_metric(std::string_view text, int n);
/// A single Gaussian rational in structure-file coefficient syntax.
Gaussian parse_gaussian(std::string_view text);

}  // namespace acs
