#include "funobs/subspace.hpp"

#include "funobs/error.hpp"

namespace funobs {

namespace {

void require_same_ambient(const Subspace& v, const Subspace& w, const char* op) {
  if (v.ambient_dim() != w.ambient_dim())
    fail(ErrorCode::dimension, std::string(op) + ": ambient dimension mismatch (" + std::to_string(v.ambient_dim()) +
                                   " vs " + std::to_string(w.ambient_dim()) + ")");
}

}  // namespace

Subspace Subspace::span(const Matrix& generators) {
  // Column echelon form of G is the transpose of the row echelon form of G^T.
  RowEchelon e = rref(generators.transpose());
  Matrix basis = e.reduced.block(0, 0, e.pivots.size(), generators.rows()).transpose();
  return Subspace(generators.rows(), std::move(basis));
}

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, Matrix(ambient_dim, 0)); }

Subspace Subspace::full(std::size_t ambient_dim) { return Subspace(ambient_dim, Matrix::identity(ambient_dim)); }

Matrix Subspace::annihilator() const { return kernel_basis(basis_.transpose()).basis().transpose(); }

bool Subspace::contains(const Matrix& vectors) const {
  if (vectors.rows() != ambient_) fail(ErrorCode::dimension, "membership test: vector length mismatch");
  if (dim() == ambient_) return true;
  return (annihilator() * vectors).is_zero();
}

Subspace kernel_basis(const Matrix& m) {
  RowEchelon e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix k(n, n - e.pivots.size());
  std::size_t c = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    k(f, c) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k(e.pivots[r], c) = -e.reduced(r, f);
    ++c;
  }
  return Subspace::span(k);
}

Subspace image_basis(const Matrix& m) { return Subspace::span(m); }

Subspace intersect(const Subspace& v, const Subspace& w) {
  require_same_ambient(v, w, "intersect");
  return kernel_basis(vcat(v.annihilator(), w.annihilator()));
}

Subspace sum(const Subspace& v, const Subspace& w) {
  require_same_ambient(v, w, "sum");
  return Subspace::span(hcat(v.basis(), w.basis()));
}

Subspace preimage(const Matrix& a, const Subspace& v) {
  if (a.rows() != v.ambient_dim()) fail(ErrorCode::dimension, "preimage: matrix rows differ from subspace ambient dimension");
  return kernel_basis(v.annihilator() * a);
}

bool is_subspace_of(const Subspace& v, const Subspace& w) {
  require_same_ambient(v, w, "is_subspace_of");
  return w.contains(v.basis());
}

}  // namespace funobs
