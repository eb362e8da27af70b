#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "funobs/markov.hpp"
#include "funobs/polynomial.hpp"
#include "funobs/stability.hpp"
#include "funobs/subspace.hpp"
#include "funobs/system.hpp"

namespace funobs {

enum class Property {
  functional_detectable,
  strongly_functional_detectable,
  strong_star_functional_detectable,
  hautus_strong_detectable,
  hautus_strong_star_detectable,
  asympt_strong_left_invertible,
  asympt_strong_star_left_invertible,
  darouach_fixed_order,
};

std::string to_string(Property p);
std::optional<Property> property_from_string(const std::string& name);
const std::vector<Property>& all_properties();

// Every exact object a verdict rests on, keyed by name, so the verdict can be
// re-checked without trusting the decision code.
struct Certificate {
  std::map<std::string, std::size_t> ranks;
  std::map<std::string, Polynomial> polynomials;
  std::map<std::string, HurwitzReport> hurwitz;
  std::map<std::string, Subspace> subspaces;
  std::map<std::string, bool> conditions;
  std::optional<KernelInclusion> toeplitz;
  std::string failing_condition;  // empty when the verdict holds
  std::vector<std::string> notes;

  void absorb(const Certificate& other);
};

struct Verdict {
  Property property;
  bool holds = false;
  Certificate certificate;
};

// normrank P = normrank P_e and equal antistable invariant-zero multisets.
Verdict strongly_functional_detectable(const SystemSextuple& sys);
// Strong detectability plus properness: every P-proper polynomial direction
// maps to a proper [E F] direction.
Verdict strong_star_functional_detectable(const SystemSextuple& sys);
// Known-input case: strong functional detectability of (A, 0, C, 0, E, 0).
Verdict functional_detectable(const SystemSextuple& sys);

// State reconstruction, [E F] = [I 0].
Verdict hautus_strong_detectable(const SystemSextuple& sys);
Verdict hautus_strong_star_detectable(const SystemSextuple& sys);
// Input reconstruction, [E F] = [0 I].
Verdict asympt_strong_left_invertible(const SystemSextuple& sys);
Verdict asympt_strong_star_left_invertible(const SystemSextuple& sys);
// Fixed-order (dim z) observer conditions: a kernel inclusion and a rank
// condition over the closed right half-plane.
Verdict darouach_fixed_order(const SystemSextuple& sys);

Verdict decide(Property property, const SystemSextuple& sys);

bool is_controllable(const Matrix& a, const Matrix& b);

}  // namespace funobs
