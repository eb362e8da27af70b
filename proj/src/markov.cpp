#include "funobs/markov.hpp"

#include "funobs/error.hpp"
#include "funobs/subspace.hpp"

namespace funobs {

ToeplitzChain toeplitz(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d, std::size_t k) {
  const std::size_t n = a.rows(), m = b.cols(), p = c.rows();
  if (a.cols() != n || b.rows() != n || c.cols() != n || d.rows() != p || d.cols() != m)
    fail(ErrorCode::dimension, "toeplitz: inconsistent block dimensions");
  // markov[l] = C A^l B
  std::vector<Matrix> markov;
  markov.reserve(k);
  Matrix ak_b = b;
  for (std::size_t l = 0; l < k; ++l) {
    markov.push_back(c * ak_b);
    ak_b = a * ak_b;
  }
  ToeplitzChain out{k, Matrix((k + 1) * p, (k + 1) * m)};
  for (std::size_t i = 0; i <= k; ++i) {
    out.M.set_block(i * p, i * m, d);
    for (std::size_t j = 0; j < i; ++j) out.M.set_block(i * p, j * m, markov[i - 1 - j]);
  }
  return out;
}

KernelInclusion kernel_inclusion_upto(const SystemSextuple& sys, std::size_t kmax) {
  sys.validate();
  const std::size_t n = sys.n(), m = sys.m(), q = sys.q();
  KernelInclusion out;
  out.checked_up_to = kmax;
  for (std::size_t k = 0; k <= kmax; ++k) {
    const Matrix mcd = toeplitz(sys.A, sys.B, sys.C, sys.D, k).M;
    const Matrix mef = toeplitz(sys.A, sys.B, sys.E, sys.F, k).M;
    const Subspace ker = kernel_basis(mcd);
    const Matrix image = mef * ker.basis();
    if (image.is_zero()) continue;

    std::size_t col = 0;
    while (image.col(col).is_zero()) ++col;
    const Matrix v = ker.basis().col(col);
    KernelWitness w;
    Matrix state(n, 1);
    for (std::size_t i = 0; i <= k; ++i) {
      Matrix qi = v.block(i * m, 0, m, 1);
      w.p.push_back(state);
      state = sys.A * state + sys.B * qi;
      w.q.push_back(std::move(qi));
    }
    const Matrix ev = mef * v;
    for (std::size_t i = 0; i <= k; ++i)
      if (!ev.block(i * q, 0, q, 1).is_zero()) {
        w.violated_block = i;
        break;
      }
    out.holds = false;
    out.failing_k = k;
    out.witness = std::move(w);
    return out;
  }
  return out;
}

}  // namespace funobs
