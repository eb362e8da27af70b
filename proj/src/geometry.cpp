#include "funobs/geometry.hpp"

#include <string>

#include "funobs/error.hpp"

namespace funobs {

ExtendedSystem extend(const SystemSextuple& sys) {
  sys.validate();
  const std::size_t n = sys.n(), m = sys.m();
  ExtendedSystem ext;
  ext.A_e = Matrix(n + m, n + m);
  ext.A_e.set_block(0, 0, sys.A);
  ext.A_e.set_block(0, n, sys.B);
  ext.B_e = Matrix(n + m, m);
  ext.B_e.set_block(n, 0, Matrix::identity(m));
  ext.C_e = hcat(sys.C, sys.D);
  ext.EF_e = hcat(sys.E, sys.F);
  return ext;
}

namespace {

void check_shapes(const Matrix& a_e, const Matrix& b_e, const Subspace& k, const char* who) {
  const std::size_t d = a_e.rows();
  if (a_e.cols() != d || b_e.rows() != d || k.ambient_dim() != d)
    fail(ErrorCode::dimension, std::string(who) + ": inconsistent ambient dimensions");
}

}  // namespace

FixedPoint vstar(const Matrix& a_e, const Matrix& b_e, const Subspace& k) {
  check_shapes(a_e, b_e, k, "vstar");
  const Subspace im_b = image_basis(b_e);
  FixedPoint out{k, 0, {k.dim()}};
  const std::size_t cap = k.dim() + 1;
  for (std::size_t step = 1; step <= cap; ++step) {
    Subspace next = intersect(k, preimage(a_e, sum(im_b, out.space)));
    if (!is_subspace_of(next, out.space)) fail(ErrorCode::internal, "vstar: sequence is not nonincreasing");
    if (next == out.space) {
      out.steps = step - 1;
      return out;
    }
    out.space = std::move(next);
    out.dimensions.push_back(out.space.dim());
  }
  fail(ErrorCode::internal, "vstar: no fixed point within dim K + 1 iterations");
}

FixedPoint sstar(const Matrix& a_e, const Matrix& b_e, const Subspace& k) {
  check_shapes(a_e, b_e, k, "sstar");
  const Subspace im_b = image_basis(b_e);
  FixedPoint out{im_b, 0, {im_b.dim()}};
  const std::size_t cap = a_e.rows() - im_b.dim() + 1;
  for (std::size_t step = 1; step <= cap; ++step) {
    Subspace next = sum(im_b, image_basis(a_e * intersect(out.space, k).basis()));
    if (!is_subspace_of(out.space, next)) fail(ErrorCode::internal, "sstar: sequence is not nondecreasing");
    if (next == out.space) {
      out.steps = step - 1;
      return out;
    }
    out.space = std::move(next);
    out.dimensions.push_back(out.space.dim());
  }
  fail(ErrorCode::internal, "sstar: no fixed point within codim Im B_e + 1 iterations");
}

StrongStarInclusion strong_star_inclusion(const SystemSextuple& sys) {
  const ExtendedSystem ext = extend(sys);
  const Subspace ker_c = kernel_basis(ext.C_e);
  const Subspace ker_ef = kernel_basis(ext.EF_e);
  const Subspace im_b = image_basis(ext.B_e);

  StrongStarInclusion out;
  FixedPoint s = sstar(ext.A_e, ext.B_e, ker_c);
  out.sstar_cd = s.space;
  out.sstar_cd_steps = s.steps;
  out.reachable_cd = intersect(s.space, ker_c);
  out.holds = is_subspace_of(out.reachable_cd, ker_ef);
  if (!out.holds) {
    const Matrix& basis = out.reachable_cd.basis();
    for (std::size_t j = 0; j < basis.cols(); ++j) {
      Matrix v = basis.col(j);
      if (!ker_ef.contains(v)) {
        out.violating_direction = std::move(v);
        break;
      }
    }
  }

  FixedPoint vcd = vstar(ext.A_e, ext.B_e, ker_c);
  FixedPoint vef = vstar(ext.A_e, ext.B_e, ker_ef);
  out.vstar_cd_steps = vcd.steps;
  out.vstar_cd = vcd.space;
  out.vstar_ef = vef.space;
  out.vstar_cd_input = intersect(vcd.space, im_b);
  out.vstar_ef_input = intersect(vef.space, im_b);
  out.vstar_input_inclusion = is_subspace_of(out.vstar_cd_input, out.vstar_ef_input);
  return out;
}

}  // namespace funobs
