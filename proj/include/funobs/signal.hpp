#pragma once

#include <Eigen/Dense>

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace funobs {

// Scalar formula in t: numbers, t, pi, + - * / ^, parentheses and the
// functions sin cos tan exp log sqrt abs tanh sinc (sinc(x) = sin(x)/x, sinc(0) = 1).
class Expression {
 public:
  static Expression parse(const std::string& text);
  double operator()(double t) const;
  const std::string& text() const noexcept { return text_; }

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

struct ZeroInput {};
struct ConstantInput {
  Eigen::VectorXd value;
};
// u(t) = sum_k coeffs[k] t^k
struct PolynomialInput {
  std::vector<Eigen::VectorXd> coeffs;
};
// u(t) = sum_j amplitude_j sin(omega_j t + phase_j)
struct SinusoidBank {
  struct Term {
    Eigen::VectorXd amplitude;
    double omega = 0;
    double phase = 0;
  };
  std::vector<Term> terms;
};
// Linear interpolation, held constant outside the table.
struct SampledTable {
  std::vector<double> t;
  std::vector<Eigen::VectorXd> u;
};
struct ExpressionInput {
  std::vector<Expression> components;
};

using SourceSignal = std::variant<ZeroInput, ConstantInput, PolynomialInput, SinusoidBank, SampledTable, ExpressionInput>;

// u = C w + D s(t),  w' = A w + B s(t),  w(0) = w0.
struct FilteredInput {
  Eigen::MatrixXd A, B, C, D;
  Eigen::VectorXd w0;
  SourceSignal source;
};

using InputSignal = std::variant<ZeroInput, ConstantInput, PolynomialInput, SinusoidBank, SampledTable, ExpressionInput,
                                 FilteredInput>;

// Number of auxiliary states integrated alongside the plant.
Eigen::Index input_state_dim(const InputSignal& u);
Eigen::VectorXd input_initial_state(const InputSignal& u);
// Value of the input at time t; `w` is the auxiliary state.
Eigen::VectorXd input_value(const InputSignal& u, double t, const Eigen::VectorXd& w, Eigen::Index m);
Eigen::VectorXd input_state_derivative(const InputSignal& u, double t, const Eigen::VectorXd& w);

std::string input_kind(const InputSignal& u);

}  // namespace funobs
