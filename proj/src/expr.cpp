#include "hcx/expr.hpp"

#include "hcx/errors.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace hcx {

struct Expr::Node {
  enum class Kind { Number, Var, Neg, Add, Sub, Mul, Div, Pow, Call };
  Kind kind = Kind::Number;
  double number = 0.0;
  int var = 0;   // Var
  int power = 0; // Pow
  Func func = Func::Sin;
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using Node = Expr::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_number(double v) {
  auto n = std::make_shared<Node>();
  n->number = v;
  return n;
}

NodePtr make_binary(Node::Kind k, NodePtr a, NodePtr b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->lhs = std::move(a);
  n->rhs = std::move(b);
  return n;
}

class Parser {
public:
  Parser(std::string_view text, const std::map<std::string, NodePtr, std::less<>>& roots)
      : text_(text), roots_(roots) {}

  NodePtr parse() {
    NodePtr e = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
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
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  NodePtr expression() {
    NodePtr e = term();
    for (;;) {
      if (accept('+'))
        e = make_binary(Node::Kind::Add, e, term());
      else if (accept('-'))
        e = make_binary(Node::Kind::Sub, e, term());
      else
        return e;
    }
  }

  NodePtr term() {
    NodePtr e = unary();
    for (;;) {
      if (accept('*'))
        e = make_binary(Node::Kind::Mul, e, unary());
      else if (accept('/'))
        e = make_binary(Node::Kind::Div, e, unary());
      else
        return e;
    }
  }

  NodePtr unary() {
    if (accept('-')) {
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Neg;
      n->lhs = unary();
      return n;
    }
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (!accept('^')) return base;
    const bool paren = accept('(');
    const bool neg = accept('-');
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be an integer");
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_) fail("exponent out of range");
    if (pos_ < text_.size() && text_[pos_] == '.') fail("exponent must be an integer");
    if (paren) expect(')');
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Pow;
    n->power = neg ? -value : value;
    n->lhs = std::move(base);
    return n;
  }

  NodePtr primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = expression();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  NodePtr number() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) ++pos_;
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
      if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
        pos_ = p;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc() || ptr != text_.data() + pos_) {
      pos_ = start;
      fail("malformed number");
    }
    return make_number(v);
  }

  NodePtr name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    const std::string_view id = text_.substr(start, pos_ - start);
    if (accept('(')) {
      const auto f = func_from_name(id);
      if (!f) {
        pos_ = start;
        fail("unknown function '" + std::string(id) + "'");
      }
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Call;
      n->func = *f;
      n->lhs = expression();
      expect(')');
      return n;
    }
    if (id.size() == 2 && id[0] == 'u' && id[1] >= '1' && id[1] <= '4') {
      auto n = std::make_shared<Node>();
      n->kind = Node::Kind::Var;
      n->var = id[1] - '1';
      return n;
    }
    if (id == "pi") return make_number(std::numbers::pi);
    if (const auto it = roots_.find(id); it != roots_.end()) return it->second;
    pos_ = start;
    fail("unknown name '" + std::string(id) + "'");
  }

  std::string_view text_;
  const std::map<std::string, NodePtr, std::less<>>& roots_;
  std::size_t pos_ = 0;
};

template <class T>
T eval_node(const Node& n, const std::array<T, kDim>& u) {
  using K = Node::Kind;
  switch (n.kind) {
  case K::Number:
    return T(n.number);
  case K::Var:
    return u[n.var];
  case K::Neg:
    return -eval_node(*n.lhs, u);
  case K::Add:
    return eval_node(*n.lhs, u) + eval_node(*n.rhs, u);
  case K::Sub:
    return eval_node(*n.lhs, u) - eval_node(*n.rhs, u);
  case K::Mul:
    return eval_node(*n.lhs, u) * eval_node(*n.rhs, u);
  case K::Div: {
    const T den = eval_node(*n.rhs, u);
    if constexpr (std::is_same_v<T, double>) {
      if (den == 0.0) throw DivisionByZero("division by zero");
    }
    return eval_node(*n.lhs, u) / den;
  }
  case K::Pow:
    if constexpr (std::is_same_v<T, double>) {
      const double b = eval_node(*n.lhs, u);
      if (n.power < 0 && b == 0.0) throw DivisionByZero("negative power of zero");
      return pow(b, n.power);
    } else {
      return pow(eval_node(*n.lhs, u), n.power);
    }
  case K::Call:
    return elementary(n.func, eval_node(*n.lhs, u));
  }
  return T(0.0);
}

bool has_var(const Node& n) {
  if (n.kind == Node::Kind::Var) return true;
  return (n.lhs && has_var(*n.lhs)) || (n.rhs && has_var(*n.rhs));
}

bool same(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.var != b.var || a.power != b.power || a.func != b.func) return false;
  if (a.kind == Node::Kind::Number && !(a.number == b.number)) return false;
  if (static_cast<bool>(a.lhs) != static_cast<bool>(b.lhs) || static_cast<bool>(a.rhs) != static_cast<bool>(b.rhs))
    return false;
  return (!a.lhs || same(*a.lhs, *b.lhs)) && (!a.rhs || same(*a.rhs, *b.rhs));
}

std::string number_text(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

} // namespace

Expr::Expr() : root_(make_number(0.0)), source_("0") {}

Expr::Expr(std::shared_ptr<const Node> root, std::string source) : root_(std::move(root)), source_(std::move(source)) {}

Expr Expr::parse(std::string_view text, const Bindings& lets) {
  std::map<std::string, NodePtr, std::less<>> roots;
  for (const auto& [name, e] : lets) roots.emplace(name, e.root_);
  Parser p(text, roots);
  NodePtr root = p.parse();
  return Expr(std::move(root), std::string(text));
}

Expr Expr::constant(double v) { return Expr(make_number(v), number_text(v)); }

double Expr::eval(const Point& u) const { return eval_node<double>(*root_, u); }

Jet2 Expr::eval(const std::array<Jet2, kDim>& u) const { return eval_node<Jet2>(*root_, u); }

Jet2 Expr::eval_jet(const Point& u) const { return eval(seed(u)); }

bool Expr::is_constant() const { return !has_var(*root_); }

bool Expr::same_tree(const Expr& other) const { return same(*root_, *other.root_); }

} // namespace hcx
