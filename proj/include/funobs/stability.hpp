#pragma once

#include <optional>
#include <string>
#include <vector>

#include "funobs/polynomial.hpp"

namespace funobs {

enum class HurwitzFailure { nonpositive_coefficient, routh_degeneracy, sign_change };

std::string to_string(HurwitzFailure f);

struct HurwitzReport {
  bool is_hurwitz = false;
  std::optional<HurwitzFailure> failure_reason;
  std::vector<Rational> routh_first_column;
};

// Exact Routh test for "every root has Re < 0". The closed right half-plane
// counts as unstable, so imaginary-axis roots fail. Nonzero constants pass.
HurwitzReport is_hurwitz(const Polynomial& p);

struct AntistableComparison {
  bool equal = false;
  Polynomial gcd;
  Polynomial p_quotient;
  Polynomial q_quotient;
  HurwitzReport p_quotient_report;
  HurwitzReport q_quotient_report;
};

// True iff p and q have the same multiset of roots with Re >= 0. The shared
// factor gcd(p, q) cancels; the coprime quotients must then both be Hurwitz.
AntistableComparison antistable_parts_equal(const Polynomial& p, const Polynomial& q);

}  // namespace funobs
