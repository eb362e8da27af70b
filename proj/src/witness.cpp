#include "funobs/witness.hpp"

#include "funobs/decide.hpp"
#include "funobs/error.hpp"
#include "funobs/polymatrix.hpp"

namespace funobs {

Classification classify(const RationalFunctionMatrix& mn) {
  Classification out;
  Polynomial lcm(1);
  for (std::size_t i = 0; i < mn.rows(); ++i)
    for (std::size_t j = 0; j < mn.cols(); ++j) {
      const RationalFunction& f = mn(i, j);
      if (!f.is_proper()) out.proper = false;
      lcm = poly_lcm(lcm, f.den());
    }
  out.pole_polynomial = lcm;
  out.pole_report = is_hurwitz(lcm);
  out.stable = out.pole_report.is_hurwitz;
  return out;
}

WitnessReport solve_over_field(const SystemSextuple& sys) {
  const SystemMatrices mats = build_system_matrices(sys);
  const SmithDecomposition smith = smith_form(mats.P);
  const std::size_t r = smith.invariant_polys.size();
  const std::size_t q = sys.q();
  const std::size_t rows_p = mats.P.rows();
  const std::size_t cols_p = mats.P.cols();

  WitnessReport out;
  out.n = sys.n();
  out.p = sys.p();
  out.left_kernel_dim = rows_p - r;

  const PolyMatrix ef(hcat(sys.E, sys.F));
  const PolyMatrix g = ef * smith.V;
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = r; j < cols_p; ++j)
      if (!g(i, j).is_zero()) return out;
  out.solvable_over_field = true;

  RationalFunctionMatrix y(q, rows_p);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < r; ++j) y(i, j) = RationalFunction(g(i, j), smith.invariant_polys[j]);
  RationalFunctionMatrix mn = y * RationalFunctionMatrix(smith.U);

  const RationalFunctionMatrix residual = mn * RationalFunctionMatrix(mats.P) - RationalFunctionMatrix(ef);
  out.residual_zero = residual.is_zero();
  if (!out.residual_zero) fail(ErrorCode::internal, "witness residual [M N] P - [E F] is not zero");

  const Classification cls = classify(mn);
  out.is_proper = cls.proper;
  out.pole_denominator = cls.pole_polynomial;
  out.denominator_hurwitz = cls.pole_report;
  out.MN = std::move(mn);
  out.n_block = classify(out.N());
  return out;
}

bool decision_consistency(const SystemSextuple& sys) {
  const WitnessReport w = solve_over_field(sys);
  const Verdict strong = strongly_functional_detectable(sys);
  if (strong.holds && !w.solvable_over_field) return false;
  if (w.MN && !w.residual_zero) return false;
  if (w.MN && w.is_proper && w.denominator_hurwitz.is_hurwitz) {
    if (!strong.holds) return false;
    if (!strong_star_functional_detectable(sys).holds) return false;
  }
  if (w.MN && w.denominator_hurwitz.is_hurwitz && !strong.holds) return false;
  return true;
}

}  // namespace funobs
