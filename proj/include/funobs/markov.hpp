#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "funobs/matrix.hpp"
#include "funobs/system.hpp"

namespace funobs {

// Lower block-triangular Toeplitz matrix of Markov parameters:
// block (i, j) = D for i = j, C A^{i-1-j} B for i > j, zero above the diagonal.
struct ToeplitzChain {
  std::size_t k = 0;
  Matrix M;  // (k+1) rows(C) x (k+1) cols(B)
};

ToeplitzChain toeplitz(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d, std::size_t k);

// Input direction q_0..q_k in Ker M^k_{C,D} together with the state sequence
// p_0 = 0, p_{i+1} = A p_i + B q_i. Read as polynomials
// p(s) = p_1 s^{k-1} + ... + p_k and q(s) = q_0 s^k + ... + q_k, P(s)[p; q] is
// proper while [E F][p; q] is not.
struct KernelWitness {
  std::vector<Matrix> q;  // k+1 column vectors of length m
  std::vector<Matrix> p;  // k+1 column vectors of length n, p[0] = 0
  std::size_t violated_block = 0;  // first i with E p_i + F q_i != 0
};

struct KernelInclusion {
  bool holds = true;
  std::size_t checked_up_to = 0;
  std::optional<std::size_t> failing_k;
  std::optional<KernelWitness> witness;
};

// Ker M^k_{C,D} ⊆ Ker M^k_{E,F} for every k <= kmax; reports the smallest failing k.
KernelInclusion kernel_inclusion_upto(const SystemSextuple& sys, std::size_t kmax);

inline std::size_t default_kmax(const SystemSextuple& sys) { return sys.n() + sys.m(); }

}  // namespace funobs
