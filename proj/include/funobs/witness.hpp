#pragma once

#include <cstddef>
#include <optional>

#include "funobs/polynomial.hpp"
#include "funobs/ratfunc.hpp"
#include "funobs/stability.hpp"
#include "funobs/system.hpp"

namespace funobs {

struct Classification {
  bool proper = true;
  Polynomial pole_polynomial{1};  // monic lcm of the reduced denominators
  bool stable = true;             // pole polynomial is Hurwitz
  HurwitzReport pole_report;
};

Classification classify(const RationalFunctionMatrix& mn);

// Canonical field solution of [M N] P = [E F] built from the Smith form
// U P V = S as [E F] V S^+ U, where S^+ inverts the nonzero invariant
// polynomials. The affine family of all solutions adds left-kernel elements
// of P; no search for a stable or proper representative is made.
struct WitnessReport {
  bool solvable_over_field = false;
  std::optional<RationalFunctionMatrix> MN;
  bool residual_zero = false;
  bool is_proper = false;
  Polynomial pole_denominator{1};
  HurwitzReport denominator_hurwitz;
  std::size_t left_kernel_dim = 0;  // (n + p) - normrank P
  std::size_t n = 0;
  std::size_t p = 0;
  // Classification of the N block alone (the part an observer realizes).
  std::optional<Classification> n_block;

  RationalFunctionMatrix M() const { return MN->block(0, 0, MN->rows(), n); }
  RationalFunctionMatrix N() const { return MN->block(0, n, MN->rows(), p); }
};

WitnessReport solve_over_field(const SystemSextuple& sys);

// One-directional consistency between the decision procedures and the
// constructed witness; true when no contradiction is found.
bool decision_consistency(const SystemSextuple& sys);

}  // namespace funobs
