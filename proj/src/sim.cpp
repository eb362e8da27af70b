#include "funobs/sim.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

#include "funobs/error.hpp"
#include "funobs/stability.hpp"

namespace funobs {

Eigen::MatrixXd to_eigen(const Matrix& m) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = to_double(m(i, j));
  return out;
}

StateSpaceRealization realize(const RationalFunctionMatrix& n) {
  const std::size_t q = n.rows(), p = n.cols();
  std::vector<Polynomial> col_den(p, Polynomial(1));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      const RationalFunction& f = n(i, j);
      if (!f.is_proper())
        fail(ErrorCode::not_proper, "N(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " + f.to_string() +
                                        " is not proper");
      const HurwitzReport h = is_hurwitz(f.den());
      if (!h.is_hurwitz)
        fail(ErrorCode::unstable, "N(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " + f.to_string() +
                                      " has a pole with Re >= 0 (denominator " + f.den().to_string() + " fails the Routh test: " +
                                      (h.failure_reason ? to_string(*h.failure_reason) : std::string("?")) + ")");
      col_den[j] = poly_lcm(col_den[j], f.den());
    }

  Eigen::Index order = 0;
  for (const auto& d : col_den) order += d.degree();
  StateSpaceRealization r;
  r.G = Eigen::MatrixXd::Zero(order, order);
  r.H = Eigen::MatrixXd::Zero(order, static_cast<Eigen::Index>(p));
  r.Q = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(q), order);
  r.R = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(q), static_cast<Eigen::Index>(p));

  Eigen::Index offset = 0;
  for (std::size_t j = 0; j < p; ++j) {
    const Polynomial& d = col_den[j];
    const Eigen::Index nu = d.degree();
    const auto jj = static_cast<Eigen::Index>(j);
    for (Eigen::Index k = 0; k + 1 < nu; ++k) r.G(offset + k, offset + k + 1) = 1.0;
    for (Eigen::Index k = 0; k < nu; ++k) r.G(offset + nu - 1, offset + k) = -to_double(d.coeff(static_cast<std::size_t>(k)));
    if (nu > 0) r.H(offset + nu - 1, jj) = 1.0;
    for (std::size_t i = 0; i < q; ++i) {
      const RationalFunction& f = n(i, j);
      // f = num / d with deg num <= nu; split off the direct feedthrough.
      Polynomial num = f.num() * exact_div(d, f.den());
      const Rational direct = num.coeff(static_cast<std::size_t>(nu));
      r.R(static_cast<Eigen::Index>(i), jj) = to_double(direct);
      const Polynomial strict = num - Polynomial(direct) * d;
      for (Eigen::Index k = 0; k < nu; ++k)
        r.Q(static_cast<Eigen::Index>(i), offset + k) = to_double(strict.coeff(static_cast<std::size_t>(k)));
    }
    offset += nu;
  }
  return r;
}

Eigen::MatrixXcd transfer_at(const StateSpaceRealization& r, std::complex<double> s) {
  const Eigen::Index nu = r.order();
  Eigen::MatrixXcd out = r.R.cast<std::complex<double>>();
  if (nu == 0) return out;
  Eigen::MatrixXcd pencil = s * Eigen::MatrixXcd::Identity(nu, nu) - r.G.cast<std::complex<double>>();
  out += r.Q.cast<std::complex<double>>() * pencil.partialPivLu().solve(r.H.cast<std::complex<double>>());
  return out;
}

Trajectory simulate(const SystemSextuple& sys, const StateSpaceRealization& obs, const Scenario& sc) {
  const Eigen::MatrixXd A = to_eigen(sys.A), B = to_eigen(sys.B), C = to_eigen(sys.C), D = to_eigen(sys.D),
                        E = to_eigen(sys.E), F = to_eigen(sys.F);
  const Eigen::Index n = A.rows(), m = B.cols(), p = C.rows(), q = E.rows();
  const Eigen::Index nu = obs.order();
  if (obs.H.cols() != p || obs.R.cols() != p || obs.Q.rows() != q || obs.R.rows() != q || obs.H.rows() != nu ||
      obs.Q.cols() != nu)
    fail(ErrorCode::dimension, "observer dimensions do not match the plant (p = " + std::to_string(p) +
                                   ", q = " + std::to_string(q) + ")");
  if (!(sc.step > 0) || !(sc.horizon >= sc.step)) fail(ErrorCode::invalid_argument, "scenario needs step > 0 and horizon >= step");
  if (sc.x0.size() != 0 && sc.x0.size() != n) fail(ErrorCode::dimension, "x0 length differs from n");
  if (sc.xi0.size() != 0 && sc.xi0.size() != nu) fail(ErrorCode::dimension, "xi0 length differs from observer order");

  const Eigen::Index nw = input_state_dim(sc.input);
  const Eigen::Index dim = n + nu + nw;
  Eigen::VectorXd state = Eigen::VectorXd::Zero(dim);
  if (sc.x0.size()) state.head(n) = sc.x0;
  if (sc.xi0.size()) state.segment(n, nu) = sc.xi0;
  if (nw) state.tail(nw) = input_initial_state(sc.input);

  auto rhs = [&](double t, const Eigen::VectorXd& s) {
    const Eigen::VectorXd w = s.tail(nw);
    const Eigen::VectorXd u = input_value(sc.input, t, w, m);
    const Eigen::VectorXd x = s.head(n);
    const Eigen::VectorXd y = C * x + D * u;
    Eigen::VectorXd ds(dim);
    ds.head(n) = A * x + B * u;
    ds.segment(n, nu) = obs.G * s.segment(n, nu) + obs.H * y;
    if (nw) ds.tail(nw) = input_state_derivative(sc.input, t, w);
    return ds;
  };

  const auto steps = static_cast<std::size_t>(std::llround(sc.horizon / sc.step));
  Trajectory tr;
  const std::size_t samples = steps + 1;
  for (auto* v : {&tr.x, &tr.xi, &tr.u, &tr.y, &tr.z, &tr.zhat, &tr.e}) v->reserve(samples);
  tr.t.reserve(samples);

  auto record = [&](double t) {
    const Eigen::VectorXd x = state.head(n);
    const Eigen::VectorXd xi = state.segment(n, nu);
    const Eigen::VectorXd u = input_value(sc.input, t, state.tail(nw), m);
    const Eigen::VectorXd y = C * x + D * u;
    Eigen::VectorXd z = E * x + F * u;
    Eigen::VectorXd zhat = obs.Q * xi + obs.R * y;
    tr.t.push_back(t);
    tr.e.push_back(z - zhat);
    tr.x.push_back(x);
    tr.xi.push_back(xi);
    tr.u.push_back(u);
    tr.y.push_back(y);
    tr.z.push_back(std::move(z));
    tr.zhat.push_back(std::move(zhat));
  };

  record(0.0);
  const double h = sc.step;
  for (std::size_t k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) * h;
    const Eigen::VectorXd k1 = rhs(t, state);
    const Eigen::VectorXd k2 = rhs(t + h / 2, state + h / 2 * k1);
    const Eigen::VectorXd k3 = rhs(t + h / 2, state + h / 2 * k2);
    const Eigen::VectorXd k4 = rhs(t + h, state + h * k3);
    state += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    if (!state.allFinite() || state.lpNorm<Eigen::Infinity>() > 1e150)
      fail(ErrorCode::numeric, "integration diverged at t = " + std::to_string(t + h) +
                                   " (state norm overflow); reduce the step or check stability");
    record(static_cast<double>(k + 1) * h);
  }
  return tr;
}

double window_sup(const Trajectory& traj, const std::vector<Eigen::VectorXd>& series, double from, double to) {
  double sup = 0;
  for (std::size_t i = 0; i < traj.t.size(); ++i)
    if (traj.t[i] >= from && traj.t[i] <= to && series[i].size() > 0) sup = std::max(sup, series[i].norm());
  return sup;
}

ConvergenceSummary convergence_metric(const Trajectory& traj, double threshold) {
  if (traj.t.empty()) fail(ErrorCode::invalid_argument, "empty trajectory");
  const double t0 = traj.t.front(), t1 = traj.t.back();
  ConvergenceSummary s;
  s.threshold = threshold;
  s.final_sup = window_sup(traj, traj.e, t1 - 0.1 * (t1 - t0), t1);
  s.decayed = s.final_sup < threshold;
  return s;
}

double suggest_horizon(const SystemSextuple& sys, const StateSpaceRealization& obs, double fallback) {
  const Eigen::Index n = static_cast<Eigen::Index>(sys.n()), nu = obs.order();
  if (n + nu == 0) return fallback;
  Eigen::MatrixXd joint = Eigen::MatrixXd::Zero(n + nu, n + nu);
  joint.topLeftCorner(n, n) = to_eigen(sys.A);
  joint.bottomRightCorner(nu, nu) = obs.G;
  joint.bottomLeftCorner(nu, n) = obs.H * to_eigen(sys.C);
  const Eigen::VectorXcd eig = joint.eigenvalues();
  double abscissa = -std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < eig.size(); ++i) abscissa = std::max(abscissa, eig(i).real());
  if (!(abscissa < 0)) return fallback;
  return 10.0 / std::abs(abscissa);
}

void write_csv(std::ostream& os, const Trajectory& traj, std::size_t every) {
  if (every == 0) every = 1;
  const Eigen::Index n = traj.x.empty() ? 0 : traj.x.front().size();
  const Eigen::Index nu = traj.xi.empty() ? 0 : traj.xi.front().size();
  const Eigen::Index q = traj.z.empty() ? 0 : traj.z.front().size();
  os << 't';
  for (Eigen::Index i = 1; i <= n; ++i) os << ",x_" << i;
  for (Eigen::Index i = 1; i <= nu; ++i) os << ",xi_" << i;
  for (Eigen::Index i = 1; i <= q; ++i) os << ",z_" << i;
  for (Eigen::Index i = 1; i <= q; ++i) os << ",zhat_" << i;
  for (Eigen::Index i = 1; i <= q; ++i) os << ",e_" << i;
  os << '\n';
  os << std::setprecision(17);
  for (std::size_t k = 0; k < traj.t.size(); ++k) {
    if (k % every != 0 && k + 1 != traj.t.size()) continue;
    os << traj.t[k];
    for (const auto* v : {&traj.x[k], &traj.xi[k], &traj.z[k], &traj.zhat[k], &traj.e[k]})
      for (Eigen::Index i = 0; i < v->size(); ++i) os << ',' << (*v)(i);
    os << '\n';
  }
}

}  // namespace funobs
