#pragma once

// Independent reference computations for the test suites. Nothing here calls
// the library's elimination, Smith or Routh code.

#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "funobs/matrix.hpp"
#include "funobs/polymatrix.hpp"
#include "funobs/polynomial.hpp"
#include "funobs/system.hpp"

namespace oracle {

using funobs::Matrix;
using funobs::PolyMatrix;
using funobs::Polynomial;
using funobs::Rational;

// Rank by exact Gram-Schmidt on the rows.
std::size_t rank(const Matrix& m);
// Cofactor expansion along the first row.
Rational det(const Matrix& m);
Polynomial det(const PolyMatrix& m);
// Max rank of P(s0) over min(r, c) * deg + 1 integer sample points.
std::size_t normal_rank(const PolyMatrix& p);
// Monic gcd of all r x r minors, r = normal rank (determinantal divisor).
Polynomial determinantal_divisor(const PolyMatrix& p);
// Roots via eigenvalues of the companion matrix.
std::vector<std::complex<double>> roots(const Polynomial& p);
// All roots with Re < -margin (true), some root with Re > margin (false);
// returns -1 when a root lies within the margin band.
int hurwitz_by_roots(const Polynomial& p, double margin);
// rank [lambda I - A; C] < n
bool pbh_unobservable(const Matrix& a, const Matrix& c, const Rational& lambda);
// Solves a x = b exactly when consistent; returns false otherwise. Plain
// Gauss-Jordan with full pivot search, written independently for tests.
bool solve(const Matrix& a, const Matrix& b, Matrix& x);

}  // namespace oracle

namespace gen {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);
funobs::Matrix matrix(Rng& rng, std::size_t r, std::size_t c, int lo = -2, int hi = 2, double zero_prob = 0.0);
funobs::Polynomial polynomial(Rng& rng, int max_degree, int lo = -3, int hi = 3);
funobs::PolyMatrix polymatrix(Rng& rng, std::size_t r, std::size_t c, int max_degree);
// n + m <= max_nm, q <= max_q, entries in [-2, 2]; a share of the outputs is
// built from C, D to make the positive verdicts frequent.
funobs::SystemSextuple system(Rng& rng, std::size_t max_nm = 6, std::size_t max_q = 2);
// Random unimodular matrix as a product of elementary operations.
funobs::PolyMatrix unimodular(Rng& rng, std::size_t n, int steps);

}  // namespace gen
