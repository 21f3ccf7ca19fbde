#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace semisplit::kreport {

/// Degree index: symbol ("n" or "*") plus an offset, or a concrete integer after substitution.
struct Degree {
  std::string symbol = "n";
  int offset = 0;
  std::optional<int> value;

  Degree shifted(int k) const { return {symbol, offset + k, value ? std::optional<int>(*value + k) : std::nullopt}; }
  std::string latex() const;
  std::string unicode() const;
};

/// Text leaf with both renderings.
struct Text {
  std::string latex, unicode;
};

struct Expr {
  enum class Op { K, Wh, Nil, Sum, Quotient, Frac, IndexedSum, Power };
  Op op = Op::Sum;
  Degree degree;
  Text arg;                          // ring / group argument, index set, or exponent
  std::vector<std::shared_ptr<const Expr>> children;

  std::string latex() const;
  std::string unicode() const;
  nlohmann::json to_json() const;
};
using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr K(Degree d, Text ring);
ExprPtr Wh(Text group);
ExprPtr Nil(Degree d, Text ring);
ExprPtr Sum(std::vector<ExprPtr> terms);
ExprPtr Quotient(ExprPtr num, ExprPtr den);  // (num)/den
ExprPtr Frac(ExprPtr num, ExprPtr den);      // \frac{num}{den}
ExprPtr IndexedSum(Text index, ExprPtr body);
ExprPtr Power(ExprPtr body, Text exponent);

struct Report {
  std::string target;
  ExprPtr lhs, rhs;
  Text relation;
  nlohmann::json index_sets = nlohmann::json::object();

  std::string latex() const;
  std::string unicode() const;
  nlohmann::json to_json() const;
};

/// Targets: dinfty, psl2, intro-dinfty, intro-psl2, intro-wh-g0, or an amalgam name (generic form).
/// With `degree` the symbolic index is replaced by the integer. `enumeration_length` fills the
/// M_C / M_D prefixes of the PSL2 report.
Report ktheory_report(const std::string& target, std::optional<int> degree = std::nullopt,
                      int enumeration_length = 6);
std::vector<std::string> report_targets();

/// Drops whitespace that does not separate a control word from a letter, alignment marks and
/// line breaks, so a rendering can be compared with a display copied from LaTeX source.
std::string normalize_latex(const std::string& s);

}  // namespace semisplit::kreport
