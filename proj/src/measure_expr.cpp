#include "rtn/measure_expr.hpp"

#include <algorithm>
#include <cctype>

namespace rtn {

MeasureExpr MeasureExpr::one() { return MeasureExpr(Kind::One, {}); }
MeasureExpr MeasureExpr::mp() { return MeasureExpr(Kind::MP, {}); }

MeasureExpr MeasureExpr::free_conv(std::vector<MeasureExpr> children) {
  if (children.empty()) throw std::invalid_argument("free product needs at least one factor");
  return MeasureExpr(Kind::FreeConv, std::move(children));
}

MeasureExpr MeasureExpr::class_conv(std::vector<MeasureExpr> children) {
  if (children.empty()) throw std::invalid_argument("classical product needs at least one factor");
  return MeasureExpr(Kind::ClassConv, std::move(children));
}

MeasureExpr MeasureExpr::mp_power(int s) {
  if (s < 0) throw std::invalid_argument("negative power");
  if (s == 0) return one();
  if (s == 1) return mp();
  return free_conv(std::vector<MeasureExpr>(s, mp()));
}

std::strong_ordering MeasureExpr::operator<=>(const MeasureExpr& other) const {
  if (auto c = kind_ <=> other.kind_; c != 0) return c;
  return std::lexicographical_compare_three_way(children_.begin(), children_.end(),
                                                other.children_.begin(), other.children_.end());
}

bool MeasureExpr::operator==(const MeasureExpr& other) const {
  return (*this <=> other) == std::strong_ordering::equal;
}

MeasureExpr MeasureExpr::canonical() const {
  if (kind_ == Kind::One || kind_ == Kind::MP) return *this;
  std::vector<MeasureExpr> flat;
  for (const auto& child : children_) {
    MeasureExpr c = child.canonical();
    if (c.kind_ == Kind::One) continue;
    if (c.kind_ == kind_) {
      flat.insert(flat.end(), c.children_.begin(), c.children_.end());
    } else {
      flat.push_back(std::move(c));
    }
  }
  if (flat.empty()) return one();
  if (flat.size() == 1) return std::move(flat.front());
  std::sort(flat.begin(), flat.end());
  return MeasureExpr(kind_, std::move(flat));
}

std::optional<int> MeasureExpr::mp_power_exponent() const {
  const MeasureExpr c = canonical();
  switch (c.kind_) {
    case Kind::One: return 0;
    case Kind::MP: return 1;
    case Kind::FreeConv:
      for (const auto& child : c.children_)
        if (child.kind_ != Kind::MP) return std::nullopt;
      return static_cast<int>(c.children_.size());
    case Kind::ClassConv: return std::nullopt;
  }
  return std::nullopt;
}

ExprParseError::ExprParseError(const std::string& message, std::size_t position)
    : std::runtime_error("at position " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MeasureExpr parse() {
    MeasureExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ExprParseError("trailing input", pos_);
    return e;
  }

 private:
  MeasureExpr expr() {
    skip_ws();
    const std::size_t start = pos_;
    std::string word = identifier();
    if (word == "one") return MeasureExpr::one();
    if (word == "mp") return MeasureExpr::mp();
    if (word == "box" || word == "times") {
      expect('(');
      std::vector<MeasureExpr> args{expr()};
      while (accept(',')) args.push_back(expr());
      expect(')');
      if (args.size() < 2) throw ExprParseError(word + " needs at least two arguments", start);
      return word == "box" ? MeasureExpr::free_conv(std::move(args))
                           : MeasureExpr::class_conv(std::move(args));
    }
    if (word == "pow_box") {
      expect('(');
      MeasureExpr base = expr();
      expect(',');
      const int k = integer();
      expect(')');
      if (k < 1) throw ExprParseError("pow_box exponent must be >= 1", start);
      if (k == 1) return base;
      return MeasureExpr::free_conv(std::vector<MeasureExpr>(k, base));
    }
    throw ExprParseError(word.empty() ? "expected expression" : "unknown name '" + word + "'", start);
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_++] - '0');
      if (value > 1000000) throw ExprParseError("exponent too large", start);
    }
    if (pos_ == start) throw ExprParseError("expected integer", start);
    return static_cast<int>(value);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) throw ExprParseError(std::string("expected '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string render_canonical(const MeasureExpr& e) {
  using Kind = MeasureExpr::Kind;
  switch (e.kind()) {
    case Kind::One: return "one";
    case Kind::MP: return "mp";
    case Kind::ClassConv: {
      std::string out = "times(";
      for (std::size_t i = 0; i < e.children().size(); ++i) {
        if (i) out += ", ";
        out += render_canonical(e.children()[i]);
      }
      return out + ")";
    }
    case Kind::FreeConv: {
      // Children are sorted, so equal factors are adjacent.
      std::vector<std::string> items;
      const auto& ch = e.children();
      for (std::size_t i = 0; i < ch.size();) {
        std::size_t j = i;
        while (j < ch.size() && ch[j] == ch[i]) ++j;
        const std::string base = render_canonical(ch[i]);
        items.push_back(j - i == 1 ? base : "pow_box(" + base + "," + std::to_string(j - i) + ")");
        i = j;
      }
      if (items.size() == 1) return items.front();
      std::string out = "box(";
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ", ";
        out += items[i];
      }
      return out + ")";
    }
  }
  return {};
}

}  // namespace

MeasureExpr parse_measure_expr(std::string_view text) { return Parser(text).parse(); }

std::string render_measure_expr(const MeasureExpr& e) { return render_canonical(e.canonical()); }

}  // namespace rtn
