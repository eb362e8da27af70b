#include "funobs/stability.hpp"

#include "funobs/error.hpp"

namespace funobs {

std::string to_string(HurwitzFailure f) {
  switch (f) {
    case HurwitzFailure::nonpositive_coefficient: return "nonpositive_coefficient";
    case HurwitzFailure::routh_degeneracy: return "routh_degeneracy";
    case HurwitzFailure::sign_change: return "sign_change";
  }
  return "unknown";
}

HurwitzReport is_hurwitz(const Polynomial& p) {
  if (p.is_zero()) fail(ErrorCode::invalid_argument, "Hurwitz test of the zero polynomial");
  HurwitzReport report;
  const int n = p.degree();
  if (n == 0) {
    report.is_hurwitz = true;
    return report;
  }
  std::vector<Rational> c = p.coefficients();
  if (sgn(c.back()) < 0)
    for (auto& x : c) x = -x;
  for (const auto& x : c)
    if (sgn(x) <= 0) {
      report.failure_reason = HurwitzFailure::nonpositive_coefficient;
      return report;
    }

  // Routh array rows from descending coefficients: a_n, a_{n-2}, ... and a_{n-1}, a_{n-3}, ...
  std::vector<Rational> upper, lower;
  for (int k = n; k >= 0; k -= 2) upper.push_back(c[static_cast<std::size_t>(k)]);
  for (int k = n - 1; k >= 0; k -= 2) lower.push_back(c[static_cast<std::size_t>(k)]);
  report.routh_first_column.push_back(upper.front());
  report.routh_first_column.push_back(lower.front());

  for (int row = 2; row <= n; ++row) {
    const Rational& pivot = lower.front();
    std::vector<Rational> next;
    for (std::size_t j = 0; j + 1 < upper.size(); ++j) {
      const Rational lo = j + 1 < lower.size() ? lower[j + 1] : Rational(0);
      next.push_back((pivot * upper[j + 1] - upper.front() * lo) / pivot);
    }
    bool zero_row = true;
    for (const auto& x : next)
      if (sgn(x) != 0) zero_row = false;
    if (next.empty() || zero_row) {
      report.failure_reason = HurwitzFailure::routh_degeneracy;
      return report;
    }
    report.routh_first_column.push_back(next.front());
    if (sgn(next.front()) == 0) {
      report.failure_reason = HurwitzFailure::routh_degeneracy;
      return report;
    }
    if (sgn(next.front()) < 0) {
      report.failure_reason = HurwitzFailure::sign_change;
      return report;
    }
    upper = std::move(lower);
    lower = std::move(next);
  }
  report.is_hurwitz = true;
  return report;
}

AntistableComparison antistable_parts_equal(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) fail(ErrorCode::invalid_argument, "antistable comparison with a zero polynomial");
  AntistableComparison out;
  out.gcd = poly_gcd(p, q);
  out.p_quotient = exact_div(p, out.gcd);
  out.q_quotient = exact_div(q, out.gcd);
  out.p_quotient_report = is_hurwitz(out.p_quotient);
  out.q_quotient_report = is_hurwitz(out.q_quotient);
  out.equal = out.p_quotient_report.is_hurwitz && out.q_quotient_report.is_hurwitz;
  return out;
}

}  // namespace funobs
