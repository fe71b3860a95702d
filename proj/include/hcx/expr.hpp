#pragma once

// Small expression language for component functions:
//   numbers, u1..u4, pi, names bound by `let`, + - * /, unary minus,
//   ^ with an integer exponent, and calls sin cos sinh cosh tanh coth exp sqrt.
// An Expr evaluates both on plain doubles and on Jet2, so the same text
// yields values and exact first and second derivatives.

#include "hcx/jet.hpp"

#include <map>
#include <memory>
#include <string>
#include <string_view>

namespace hcx {

class Expr {
public:
  struct Node;
  using Bindings = std::map<std::string, Expr, std::less<>>;

  Expr();

  /// Throws ParseError (with the 1-based column in the message).
  static Expr parse(std::string_view text, const Bindings& lets = {});
  static Expr constant(double v);

  double eval(const Point& u) const;
  Jet2 eval(const std::array<Jet2, kDim>& u) const;
  /// Seeds u and evaluates as a jet.
  Jet2 eval_jet(const Point& u) const;

  /// True when no coordinate occurs (after substituting lets).
  bool is_constant() const;

  /// The text the expression was parsed from (canonical for constants).
  const std::string& source() const noexcept { return source_; }

  /// Structural equality of the syntax trees.
  bool same_tree(const Expr& other) const;

private:
  Expr(std::shared_ptr<const Node> root, std::string source);
  std::shared_ptr<const Node> root_;
  std::string source_;
};

} // namespace hcx
