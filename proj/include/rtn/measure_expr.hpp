#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rtn {

/// Symbolic probability measure over {delta_1, MP, free product, classical
/// product}.
class MeasureExpr {
 public:
  enum class Kind { One, MP, FreeConv, ClassConv };

  static MeasureExpr one();
  static MeasureExpr mp();
  /// Throws std::invalid_argument on an empty child list.
  static MeasureExpr free_conv(std::vector<MeasureExpr> children);
  static MeasureExpr class_conv(std::vector<MeasureExpr> children);
  /// MP boxtimes ... boxtimes MP, s factors (s == 0 gives One).
  static MeasureExpr mp_power(int s);

  Kind kind() const { return kind_; }
  const std::vector<MeasureExpr>& children() const { return children_; }

  /// Flattens nested products of the same kind, drops One factors, collapses
  /// single-child products and sorts children (One < MP < FreeConv <
  /// ClassConv, then lexicographically by children).
  MeasureExpr canonical() const;
  bool is_canonical() const { return *this == canonical(); }

  /// If the canonical form is MP^{boxtimes s} (One counts as s = 0), returns s.
  std::optional<int> mp_power_exponent() const;

  std::strong_ordering operator<=>(const MeasureExpr& other) const;
  bool operator==(const MeasureExpr& other) const;

 private:
  MeasureExpr(Kind kind, std::vector<MeasureExpr> children)
      : kind_(kind), children_(std::move(children)) {}

  Kind kind_ = Kind::One;
  std::vector<MeasureExpr> children_;
};

class ExprParseError : public std::runtime_error {
 public:
  ExprParseError(const std::string& message, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// expr := "one" | "mp" | "box(" expr ("," expr)+ ")"
///       | "times(" expr ("," expr)+ ")" | "pow_box(" expr "," int ")"
/// Whitespace between tokens is ignored. The result is not canonicalized.
MeasureExpr parse_measure_expr(std::string_view text);

/// Canonical text form. Runs of identical free-product factors are written
/// as pow_box(x,k).
std::string render_measure_expr(const MeasureExpr& e);

}  // namespace rtn
