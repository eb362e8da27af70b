#include "funobs/system.hpp"

#include <string>

#include "funobs/error.hpp"

namespace funobs {

namespace {

void expect_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* name) {
  if (m.rows() != rows || m.cols() != cols)
    fail(ErrorCode::dimension, std::string("block ") + name + " is " + std::to_string(m.rows()) + "x" +
                                   std::to_string(m.cols()) + ", expected " + std::to_string(rows) + "x" +
                                   std::to_string(cols));
}

}  // namespace

void SystemSextuple::validate() const {
  const std::size_t nn = A.rows();
  expect_shape(A, nn, nn, "A");
  const std::size_t mm = B.cols();
  expect_shape(B, nn, mm, "B");
  const std::size_t pp = C.rows();
  expect_shape(C, pp, nn, "C");
  expect_shape(D, pp, mm, "D");
  const std::size_t qq = E.rows();
  expect_shape(E, qq, nn, "E");
  expect_shape(F, qq, mm, "F");
}

SystemSextuple SystemSextuple::without_input() const {
  return make_system(A, Matrix(n(), 0), C, Matrix(p(), 0), E, Matrix(q(), 0));
}

SystemSextuple SystemSextuple::with_output(Matrix e, Matrix f) const {
  return make_system(A, B, C, D, std::move(e), std::move(f));
}

SystemSextuple make_system(Matrix a, Matrix b, Matrix c, Matrix d, Matrix e, Matrix f) {
  SystemSextuple sys{std::move(a), std::move(b), std::move(c), std::move(d), std::move(e), std::move(f)};
  sys.validate();
  return sys;
}

PolyMatrix pencil(const Matrix& a) {
  PolyMatrix p(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) p(i, j) = Polynomial(-a(i, j));
  for (std::size_t i = 0; i < a.rows(); ++i) p(i, i) += Polynomial::s();
  return p;
}

SystemMatrices build_system_matrices(const SystemSextuple& sys) {
  sys.validate();
  const std::size_t n = sys.n(), m = sys.m();
  PolyMatrix top(n, n + m);
  top.set_block(0, 0, pencil(sys.A));
  top.set_block(0, n, PolyMatrix(-sys.B));
  PolyMatrix P = vcat(top, PolyMatrix(hcat(sys.C, sys.D)));
  PolyMatrix Pe = vcat(P, PolyMatrix(hcat(sys.E, sys.F)));
  return {std::move(P), std::move(Pe)};
}

Polynomial output_decoupling_zero_polynomial(const SystemSextuple& sys) {
  return zero_polynomial(vcat(pencil(sys.A), PolyMatrix(sys.C)));
}

}  // namespace funobs
