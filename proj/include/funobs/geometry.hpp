#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "funobs/subspace.hpp"
#include "funobs/system.hpp"

namespace funobs {

// Extended system on the stacked state (x, u):
//   A_e = [A B; 0 0],  B_e = [0; I_m],  C_e = [C D],  EF_e = [E F].
struct ExtendedSystem {
  Matrix A_e;
  Matrix B_e;
  Matrix C_e;
  Matrix EF_e;
};

ExtendedSystem extend(const SystemSextuple& sys);

struct FixedPoint {
  Subspace space;
  std::size_t steps = 0;               // iterations until the sequence repeated
  std::vector<std::size_t> dimensions; // dimension after each iterate, starting with the seed
};

// Supremal (A_e, B_e)-invariant subspace inside K:
//   V^0 = K,  V^k = K ∩ A_e^{-1}(Im B_e + V^{k-1}).
// Nonincreasing; reaches its fixed point within dim K steps.
FixedPoint vstar(const Matrix& a_e, const Matrix& b_e, const Subspace& k);

// Infimal (K, A_e)-conditioned invariant subspace containing Im B_e:
//   S^0 = Im B_e,  S^k = Im B_e + A_e (S^{k-1} ∩ K).
// Nondecreasing; S^k ∩ K is exactly the set of extended states psi_k reachable
// by input sequences q_0..q_k that keep every psi_i inside K.
FixedPoint sstar(const Matrix& a_e, const Matrix& b_e, const Subspace& k);

struct StrongStarInclusion {
  bool holds = false;
  // Decision route: S*_{C,D} ∩ Ker C_e ⊆ Ker [E F].
  Subspace sstar_cd;
  Subspace reachable_cd;   // S*_{C,D} ∩ Ker C_e
  std::optional<Matrix> violating_direction;  // extended state outside Ker [E F]
  // Supremal invariant subspaces and their traces on Im B_e.
  Subspace vstar_cd;
  Subspace vstar_ef;
  Subspace vstar_cd_input;  // V*_{C,D} ∩ Im B_e
  Subspace vstar_ef_input;  // V*_{E,F} ∩ Im B_e
  bool vstar_input_inclusion = false;
  std::size_t vstar_cd_steps = 0;
  std::size_t sstar_cd_steps = 0;
};

StrongStarInclusion strong_star_inclusion(const SystemSextuple& sys);

}  // namespace funobs
