#include "funobs/signal.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "funobs/error.hpp"

namespace funobs {

struct Expression::Node {
  enum class Op { number, var, add, sub, mul, div, pow, neg, call } op;
  double value = 0;
  std::string fn;
  std::shared_ptr<const Node> lhs, rhs;

  double eval(double t) const {
    switch (op) {
      case Op::number: return value;
      case Op::var: return t;
      case Op::add: return lhs->eval(t) + rhs->eval(t);
      case Op::sub: return lhs->eval(t) - rhs->eval(t);
      case Op::mul: return lhs->eval(t) * rhs->eval(t);
      case Op::div: return lhs->eval(t) / rhs->eval(t);
      case Op::pow: return std::pow(lhs->eval(t), rhs->eval(t));
      case Op::neg: return -lhs->eval(t);
      case Op::call: {
        const double x = lhs->eval(t);
        if (fn == "sin") return std::sin(x);
        if (fn == "cos") return std::cos(x);
        if (fn == "tan") return std::tan(x);
        if (fn == "exp") return std::exp(x);
        if (fn == "log") return std::log(x);
        if (fn == "sqrt") return std::sqrt(x);
        if (fn == "abs") return std::abs(x);
        if (fn == "tanh") return std::tanh(x);
        if (fn == "sinc") return std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x;
        return std::nan("");
      }
    }
    return std::nan("");
  }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Op = Expression::Node::Op;

NodePtr make(Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto n = std::make_shared<Expression::Node>();
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected character");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::parse, "expression '" + s_ + "': " + what + " at offset " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) lhs = make(Op::add, lhs, term());
      else if (accept('-')) lhs = make(Op::sub, lhs, term());
      else return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*')) lhs = make(Op::mul, lhs, unary());
      else if (accept('/')) lhs = make(Op::div, lhs, unary());
      else return lhs;
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Op::neg, unary());
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return make(Op::pow, base, unary());
    return base;
  }

  NodePtr primary() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end");
    if (accept('(')) {
      NodePtr e = expr();
      if (!accept(')')) error("expected ')'");
      return e;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t used = 0;
      double v = 0;
      try {
        v = std::stod(s_.substr(pos_), &used);
      } catch (const std::exception&) {
        error("bad number");
      }
      pos_ += used;
      auto n = std::make_shared<Expression::Node>();
      n->op = Op::number;
      n->value = v;
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      if (name == "t") return make(Op::var);
      if (name == "pi") {
        auto n = std::make_shared<Expression::Node>();
        n->op = Op::number;
        n->value = std::numbers::pi;
        return n;
      }
      static const char* const kFunctions[] = {"sin", "cos", "tan", "exp", "log", "sqrt", "abs", "tanh", "sinc"};
      bool known = false;
      for (const char* f : kFunctions) known = known || name == f;
      if (!known) error("unknown identifier '" + name + "'");
      if (!accept('(')) error("expected '(' after " + name);
      NodePtr arg = expr();
      if (!accept(')')) error("expected ')'");
      auto n = std::make_shared<Expression::Node>();
      n->op = Op::call;
      n->fn = name;
      n->lhs = std::move(arg);
      return n;
    }
    error(std::string("unexpected '") + c + "'");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

Eigen::VectorXd value_of(const ZeroInput&, double, Eigen::Index dim) { return Eigen::VectorXd::Zero(dim); }

Eigen::VectorXd value_of(const ConstantInput& sig, double, Eigen::Index) { return sig.value; }

Eigen::VectorXd value_of(const PolynomialInput& sig, double t, Eigen::Index dim) {
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(sig.coeffs.empty() ? dim : sig.coeffs.front().size());
  for (auto it = sig.coeffs.rbegin(); it != sig.coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Eigen::VectorXd value_of(const SinusoidBank& sig, double t, Eigen::Index dim) {
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(sig.terms.empty() ? dim : sig.terms.front().amplitude.size());
  for (const auto& term : sig.terms) acc += term.amplitude * std::sin(term.omega * t + term.phase);
  return acc;
}

Eigen::VectorXd value_of(const SampledTable& sig, double t, Eigen::Index dim) {
  if (sig.t.empty()) return Eigen::VectorXd::Zero(dim);
  if (t <= sig.t.front()) return sig.u.front();
  if (t >= sig.t.back()) return sig.u.back();
  auto hi = std::upper_bound(sig.t.begin(), sig.t.end(), t);
  const std::size_t j = static_cast<std::size_t>(hi - sig.t.begin());
  const double a = (t - sig.t[j - 1]) / (sig.t[j] - sig.t[j - 1]);
  return (1 - a) * sig.u[j - 1] + a * sig.u[j];
}

Eigen::VectorXd value_of(const ExpressionInput& sig, double t, Eigen::Index) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(sig.components.size()));
  for (std::size_t i = 0; i < sig.components.size(); ++i) v(static_cast<Eigen::Index>(i)) = sig.components[i](t);
  return v;
}

Eigen::VectorXd value_of(const FilteredInput& f, double t, const Eigen::VectorXd& w) {
  const Eigen::VectorXd s = std::visit([&](const auto& sig) { return value_of(sig, t, f.D.cols()); }, f.source);
  return f.C * w + f.D * s;
}

}  // namespace

Expression Expression::parse(const std::string& text) {
  Expression e;
  e.text_ = text;
  e.root_ = Parser(text).parse();
  return e;
}

double Expression::operator()(double t) const { return root_->eval(t); }

Eigen::Index input_state_dim(const InputSignal& u) {
  if (const auto* f = std::get_if<FilteredInput>(&u)) return f->A.rows();
  return 0;
}

Eigen::VectorXd input_initial_state(const InputSignal& u) {
  if (const auto* f = std::get_if<FilteredInput>(&u))
    return f->w0.size() == f->A.rows() ? f->w0 : Eigen::VectorXd::Zero(f->A.rows());
  return {};
}

Eigen::VectorXd input_value(const InputSignal& u, double t, const Eigen::VectorXd& w, Eigen::Index m) {
  Eigen::VectorXd v = std::visit(
      [&](const auto& sig) -> Eigen::VectorXd {
        using T = std::decay_t<decltype(sig)>;
        if constexpr (std::is_same_v<T, FilteredInput>)
          return value_of(sig, t, w);
        else
          return value_of(sig, t, m);
      },
      u);
  if (v.size() != m)
    fail(ErrorCode::dimension, "input signal has " + std::to_string(v.size()) + " components, plant expects " +
                                   std::to_string(m));
  return v;
}

Eigen::VectorXd input_state_derivative(const InputSignal& u, double t, const Eigen::VectorXd& w) {
  if (const auto* f = std::get_if<FilteredInput>(&u)) {
    const Eigen::VectorXd s = std::visit([&](const auto& sig) { return value_of(sig, t, f->B.cols()); }, f->source);
    return f->A * w + f->B * s;
  }
  return {};
}

std::string input_kind(const InputSignal& u) {
  static const char* const kKinds[] = {"zero", "constant", "polynomial", "sinusoid", "table", "expression", "filtered"};
  return kKinds[u.index()];
}

}  // namespace funobs
