#include "orthocap/expr.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "orthocap/geometry.hpp"

namespace orthocap {

struct Expr::Node {
  enum class Op {
    kConst,
    kVarX,
    kVarY,
    kAdd,
    kSub,
    kMul,
    kDiv,
    kPow,
    kNeg,
    kSin,
    kCos,
    kExp,
    kSqrt,
    kAbs,
  };

  Op op;
  double value = 0.0;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;

  double eval(double x, double y) const {
    switch (op) {
      case Op::kConst: return value;
      case Op::kVarX: return x;
      case Op::kVarY: return y;
      case Op::kAdd: return lhs->eval(x, y) + rhs->eval(x, y);
      case Op::kSub: return lhs->eval(x, y) - rhs->eval(x, y);
      case Op::kMul: return lhs->eval(x, y) * rhs->eval(x, y);
      case Op::kDiv: return lhs->eval(x, y) / rhs->eval(x, y);
      case Op::kPow: return std::pow(lhs->eval(x, y), rhs->eval(x, y));
      case Op::kNeg: return -lhs->eval(x, y);
      case Op::kSin: return std::sin(lhs->eval(x, y));
      case Op::kCos: return std::cos(lhs->eval(x, y));
      case Op::kExp: return std::exp(lhs->eval(x, y));
      case Op::kSqrt: return std::sqrt(lhs->eval(x, y));
      case Op::kAbs: return std::fabs(lhs->eval(x, y));
    }
    return 0.0;
  }
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;
using Op = Expr::Node::Op;

NodePtr make_node(Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr,
                  double value = 0.0) {
  auto n = std::make_shared<Expr::Node>();
  n->op = op;
  n->value = value;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  NodePtr run() {
    NodePtr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::runtime_error("expression error at position " +
                             std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  int peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : -1;
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    for (;;) {
      if (consume('+'))
        lhs = make_node(Op::kAdd, lhs, parse_term());
      else if (consume('-'))
        lhs = make_node(Op::kSub, lhs, parse_term());
      else
        return lhs;
    }
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_factor();
    for (;;) {
      if (consume('*'))
        lhs = make_node(Op::kMul, lhs, parse_factor());
      else if (consume('/'))
        lhs = make_node(Op::kDiv, lhs, parse_factor());
      else
        return lhs;
    }
  }

  // factor := unary ('^' factor)?   -- power binds tighter than unary minus
  // does on its left operand, and associates to the right.
  NodePtr parse_factor() {
    if (consume('-')) return make_node(Op::kNeg, parse_factor());
    if (consume('+')) return parse_factor();
    NodePtr base = parse_primary();
    if (consume('^')) return make_node(Op::kPow, base, parse_factor());
    return base;
  }

  NodePtr parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident();
    if (consume('(')) {
      NodePtr e = parse_expr();
      if (!consume(')')) fail("missing ')'");
      return e;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  NodePtr parse_number() {
    size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(text_.substr(pos_), &used);
    } catch (const std::exception&) {
      fail("malformed number");
    }
    pos_ += used;
    return make_node(Op::kConst, nullptr, nullptr, v);
  }

  NodePtr parse_ident() {
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    const std::string name = text_.substr(start, pos_ - start);
    if (name == "x") return make_node(Op::kVarX);
    if (name == "y") return make_node(Op::kVarY);
    if (name == "pi") return make_node(Op::kConst, nullptr, nullptr, kPi);

    Op fn;
    if (name == "sin") fn = Op::kSin;
    else if (name == "cos") fn = Op::kCos;
    else if (name == "exp") fn = Op::kExp;
    else if (name == "sqrt") fn = Op::kSqrt;
    else if (name == "abs") fn = Op::kAbs;
    else fail("unknown identifier '" + name + "'");

    if (!consume('(')) fail("expected '(' after function name");
    NodePtr arg = parse_expr();
    if (!consume(')')) fail("missing ')'");
    return make_node(fn, arg);
  }

  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace

Expr Expr::parse(const std::string& text) {
  Parser parser(text);
  return Expr(parser.run(), text);
}

Expr::Expr(std::shared_ptr<const Node> root, std::string text)
    : root_(std::move(root)), text_(std::move(text)) {}

double Expr::eval(double x, double y) const { return root_->eval(x, y); }

}  // namespace orthocap
