#pragma once

#include <memory>
#include <string>

namespace orthocap {

/// Compiled arithmetic expression in the variables x and y.
/// Grammar: + - * / ^ (right-assoc power), unary minus, parentheses,
/// functions sin cos exp sqrt abs, numeric literals and the constant pi.
class Expr {
 public:
  struct Node;

  /// Parses `text`; throws std::runtime_error with a position on bad input.
  static Expr parse(const std::string& text);

  double eval(double x, double y = 0.0) const;
  const std::string& text() const { return text_; }

 private:
  Expr(std::shared_ptr<const Node> root, std::string text);

  std::shared_ptr<const Node> root_;
  std::string text_;
};

}  // namespace orthocap
