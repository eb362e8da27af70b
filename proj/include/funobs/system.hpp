#pragma once

#include <cstddef>

#include "funobs/matrix.hpp"
#include "funobs/polymatrix.hpp"

namespace funobs {

// Plant  x' = A x + B u,  y = C x + D u,  z = E x + F u.
struct SystemSextuple {
  Matrix A, B, C, D, E, F;

  std::size_t n() const { return A.rows(); }
  std::size_t m() const { return B.cols(); }
  std::size_t p() const { return C.rows(); }
  std::size_t q() const { return E.rows(); }

  // Throws ErrorCode::dimension with the offending block named.
  void validate() const;

  // Same plant with the input removed (m = 0): the known-input reduction.
  SystemSextuple without_input() const;
  // Same plant with a different estimated output z = E x + F u.
  SystemSextuple with_output(Matrix e, Matrix f) const;
};

SystemSextuple make_system(Matrix a, Matrix b, Matrix c, Matrix d, Matrix e, Matrix f);

struct SystemMatrices {
  PolyMatrix P;   // [sI - A, -B; C, D]
  PolyMatrix Pe;  // [P; E F]
};

SystemMatrices build_system_matrices(const SystemSextuple& sys);

// sI - A as a polynomial matrix.
PolyMatrix pencil(const Matrix& a);

// Zero polynomial of [sI - A; C]; its roots are the (A, C)-unobservable eigenvalues.
Polynomial output_decoupling_zero_polynomial(const SystemSextuple& sys);

}  // namespace funobs
