#pragma once

#include <Eigen/Dense>

#include <iosfwd>
#include <vector>

#include "funobs/ratfunc.hpp"
#include "funobs/signal.hpp"
#include "funobs/system.hpp"

namespace funobs {

// Observer  xi' = G xi + H y,  zhat = Q xi + R y.
struct StateSpaceRealization {
  Eigen::MatrixXd G, H, Q, R;
  Eigen::Index order() const { return G.rows(); }
};

// Realizes a proper stable transfer matrix: each column gets a controllable
// companion block for the monic lcm of its denominators; R = N(infinity).
// Rejects non-proper (ErrorCode::not_proper) and unstable (ErrorCode::unstable) input.
StateSpaceRealization realize(const RationalFunctionMatrix& n);

// Q (sI - G)^{-1} H + R at a complex point.
Eigen::MatrixXcd transfer_at(const StateSpaceRealization& r, std::complex<double> s);

struct Scenario {
  Eigen::VectorXd x0;   // empty means zero
  Eigen::VectorXd xi0;  // empty means zero
  InputSignal input = ZeroInput{};
  double horizon = 10.0;
  double step = 1e-3;
};

struct Trajectory {
  std::vector<double> t;
  std::vector<Eigen::VectorXd> x, xi, u, y, z, zhat, e;
};

// Fixed-step classical RK4 on the cascade of plant, observer and any input
// filter states. Throws ErrorCode::numeric when the state overflows.
Trajectory simulate(const SystemSextuple& sys, const StateSpaceRealization& obs, const Scenario& sc);

struct ConvergenceSummary {
  bool decayed = false;
  double final_sup = 0;  // sup ||e|| over the last 10% of the horizon
  double threshold = 0;
};

inline constexpr double kDefaultThreshold = 1e-4;

ConvergenceSummary convergence_metric(const Trajectory& traj, double threshold = kDefaultThreshold);

// sup of the Euclidean norm of `series` over t in [from, to].
double window_sup(const Trajectory& traj, const std::vector<Eigen::VectorXd>& series, double from, double to);

// 10 / |max Re eig| of the joint plant-observer dynamics; `fallback` when that is not negative.
double suggest_horizon(const SystemSextuple& sys, const StateSpaceRealization& obs, double fallback = 100.0);

Eigen::MatrixXd to_eigen(const Matrix& m);

// Header: t, x_1..x_n, xi_1..xi_nu, z_1..z_q, zhat_1..zhat_q, e_1..e_q. LF endings.
void write_csv(std::ostream& os, const Trajectory& traj, std::size_t every = 1);

}  // namespace funobs
