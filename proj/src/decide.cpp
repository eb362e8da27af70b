#include "funobs/decide.hpp"

#include <array>

#include "funobs/error.hpp"
#include "funobs/geometry.hpp"

namespace funobs {

namespace {

constexpr std::array<std::pair<Property, const char*>, 8> kNames{{
    {Property::functional_detectable, "functional_detectable"},
    {Property::strongly_functional_detectable, "strongly_functional_detectable"},
    {Property::strong_star_functional_detectable, "strong_star_functional_detectable"},
    {Property::hautus_strong_detectable, "hautus_strong_detectable"},
    {Property::hautus_strong_star_detectable, "hautus_strong_star_detectable"},
    {Property::asympt_strong_left_invertible, "asympt_strong_left_invertible"},
    {Property::asympt_strong_star_left_invertible, "asympt_strong_star_left_invertible"},
    {Property::darouach_fixed_order, "darouach_fixed_order"},
}};

// Records a named condition and remembers the first one that fails.
void note_condition(Certificate& cert, const std::string& name, bool value) {
  cert.conditions[name] = value;
  if (!value && cert.failing_condition.empty()) cert.failing_condition = name;
}

bool all_conditions(const Certificate& cert, std::initializer_list<const char*> names) {
  for (const char* n : names)
    if (!cert.conditions.at(n)) return false;
  return true;
}

// Ker left ⊆ Ker right.
bool kernel_included(const Matrix& left, const Matrix& right) {
  return (right * kernel_basis(left).basis()).is_zero();
}

}  // namespace

std::string to_string(Property p) {
  for (const auto& [prop, name] : kNames)
    if (prop == p) return name;
  return "unknown";
}

std::optional<Property> property_from_string(const std::string& name) {
  for (const auto& [prop, n] : kNames)
    if (name == n) return prop;
  return std::nullopt;
}

const std::vector<Property>& all_properties() {
  static const std::vector<Property> props = [] {
    std::vector<Property> v;
    for (const auto& entry : kNames) v.push_back(entry.first);
    return v;
  }();
  return props;
}

void Certificate::absorb(const Certificate& other) {
  ranks.insert(other.ranks.begin(), other.ranks.end());
  polynomials.insert(other.polynomials.begin(), other.polynomials.end());
  hurwitz.insert(other.hurwitz.begin(), other.hurwitz.end());
  subspaces.insert(other.subspaces.begin(), other.subspaces.end());
  for (const auto& [k, v] : other.conditions) note_condition(*this, k, v);
  if (other.toeplitz) toeplitz = other.toeplitz;
  if (failing_condition.empty()) failing_condition = other.failing_condition;
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

bool is_controllable(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.rows();
  if (n == 0) return true;
  Matrix reach = b;
  Matrix block = b;
  for (std::size_t k = 1; k < n; ++k) {
    block = a * block;
    reach = hcat(reach, block);
  }
  return rank(reach) == n;
}

Verdict strongly_functional_detectable(const SystemSextuple& sys) {
  const SystemMatrices mats = build_system_matrices(sys);
  Verdict v{Property::strongly_functional_detectable, false, {}};
  Certificate& c = v.certificate;
  c.ranks["normrank_P"] = normal_rank(mats.P);
  c.ranks["normrank_Pe"] = normal_rank(mats.Pe);
  const Polynomial zp = zero_polynomial(mats.P);
  const Polynomial zpe = zero_polynomial(mats.Pe);
  const AntistableComparison cmp = antistable_parts_equal(zp, zpe);
  c.polynomials["zero_poly_P"] = zp;
  c.polynomials["zero_poly_Pe"] = zpe;
  c.polynomials["zero_gcd"] = cmp.gcd;
  c.polynomials["zero_quotient_P"] = cmp.p_quotient;
  c.polynomials["zero_quotient_Pe"] = cmp.q_quotient;
  c.hurwitz["zero_quotient_P"] = cmp.p_quotient_report;
  c.hurwitz["zero_quotient_Pe"] = cmp.q_quotient_report;
  note_condition(c, "normrank_equal", c.ranks["normrank_P"] == c.ranks["normrank_Pe"]);
  note_condition(c, "antistable_zeros_equal", cmp.equal);
  if (sys.q() == 0) c.notes.push_back("q = 0: nothing to estimate, the verdict holds vacuously");
  v.holds = all_conditions(c, {"normrank_equal", "antistable_zeros_equal"});
  return v;
}

Verdict strong_star_functional_detectable(const SystemSextuple& sys) {
  Verdict v{Property::strong_star_functional_detectable, false, {}};
  Certificate& c = v.certificate;
  c.absorb(strongly_functional_detectable(sys).certificate);

  const StrongStarInclusion inc = strong_star_inclusion(sys);
  c.subspaces["sstar_cd"] = inc.sstar_cd;
  c.subspaces["sstar_cd_in_ker_ce"] = inc.reachable_cd;
  c.subspaces["vstar_cd"] = inc.vstar_cd;
  c.subspaces["vstar_ef"] = inc.vstar_ef;
  c.subspaces["vstar_cd_cap_im_be"] = inc.vstar_cd_input;
  c.subspaces["vstar_ef_cap_im_be"] = inc.vstar_ef_input;
  c.ranks["vstar_cd_steps"] = inc.vstar_cd_steps;
  c.ranks["sstar_cd_steps"] = inc.sstar_cd_steps;
  note_condition(c, "properness_inclusion", inc.holds);
  c.conditions["vstar_cap_im_be_inclusion"] = inc.vstar_input_inclusion;
  if (inc.violating_direction) {
    Subspace witness = Subspace::span(*inc.violating_direction);
    c.subspaces["properness_violation"] = witness;
  }

  const KernelInclusion toe = kernel_inclusion_upto(sys, default_kmax(sys));
  c.conditions["toeplitz_kernel_inclusion"] = toe.holds;
  c.toeplitz = toe;
  if (toe.holds != inc.holds)
    c.notes.push_back("cross-check disagreement: geometric properness test and Toeplitz kernel test differ");

  v.holds = all_conditions(c, {"normrank_equal", "antistable_zeros_equal", "properness_inclusion"});
  return v;
}

Verdict functional_detectable(const SystemSextuple& sys) {
  Verdict v = strongly_functional_detectable(sys.without_input());
  v.property = Property::functional_detectable;
  v.certificate.notes.push_back("known-input reduction: B, D, F removed (m = 0)");
  if (!is_controllable(sys.A, sys.B))
    v.certificate.notes.push_back("(A, B) is not controllable; the verdict does not rely on controllability");
  return v;
}

Verdict hautus_strong_detectable(const SystemSextuple& sys) {
  const SystemMatrices mats = build_system_matrices(sys);
  Verdict v{Property::hautus_strong_detectable, false, {}};
  Certificate& c = v.certificate;
  const std::size_t rP = normal_rank(mats.P);
  const std::size_t rBD = rank(vcat(-sys.B, sys.D));
  c.ranks["normrank_P"] = rP;
  c.ranks["rank_minusB_D"] = rBD;
  c.ranks["n"] = sys.n();
  const Polynomial zp = zero_polynomial(mats.P);
  c.polynomials["zero_poly_P"] = zp;
  c.hurwitz["zero_poly_P"] = is_hurwitz(zp);
  note_condition(c, "normrank_P_eq_n_plus_rank_BD", rP == sys.n() + rBD);
  note_condition(c, "invariant_zeros_stable", c.hurwitz["zero_poly_P"].is_hurwitz);
  v.holds = all_conditions(c, {"normrank_P_eq_n_plus_rank_BD", "invariant_zeros_stable"});
  return v;
}

Verdict hautus_strong_star_detectable(const SystemSextuple& sys) {
  Verdict v = hautus_strong_detectable(sys);
  v.property = Property::hautus_strong_star_detectable;
  Certificate& c = v.certificate;
  const std::size_t n = sys.n(), m = sys.m(), p = sys.p();
  // Ker [D 0; CB D] ⊆ Ker [0 0; B 0]
  Matrix left(2 * p, 2 * m);
  left.set_block(0, 0, sys.D);
  left.set_block(p, 0, sys.C * sys.B);
  left.set_block(p, m, sys.D);
  Matrix right(2 * n, 2 * m);
  right.set_block(n, 0, sys.B);
  note_condition(c, "kernel_inclusion_D_CB", kernel_included(left, right));
  v.holds = all_conditions(c, {"normrank_P_eq_n_plus_rank_BD", "invariant_zeros_stable", "kernel_inclusion_D_CB"});
  return v;
}

Verdict asympt_strong_left_invertible(const SystemSextuple& sys) {
  const SystemMatrices mats = build_system_matrices(sys);
  Verdict v{Property::asympt_strong_left_invertible, false, {}};
  Certificate& c = v.certificate;
  c.ranks["normrank_P"] = normal_rank(mats.P);
  const Polynomial zp = zero_polynomial(mats.P);
  const Polynomial zod = output_decoupling_zero_polynomial(sys);
  const Polynomial g = poly_gcd(zp, zod);
  const Polynomial rest = exact_div(zp, g);
  c.polynomials["zero_poly_P"] = zp;
  c.polynomials["output_decoupling_poly"] = zod;
  c.polynomials["shared_zeros"] = g;
  c.polynomials["invariant_minus_decoupling"] = rest;
  c.hurwitz["invariant_minus_decoupling"] = is_hurwitz(rest);
  c.notes.push_back("set difference taken with multiplicity: zero_poly_P / gcd(zero_poly_P, output_decoupling_poly)");
  note_condition(c, "normrank_P_eq_n_plus_m", c.ranks["normrank_P"] == sys.n() + sys.m());
  note_condition(c, "remaining_zeros_stable", c.hurwitz["invariant_minus_decoupling"].is_hurwitz);
  v.holds = all_conditions(c, {"normrank_P_eq_n_plus_m", "remaining_zeros_stable"});
  return v;
}

Verdict asympt_strong_star_left_invertible(const SystemSextuple& sys) {
  Verdict v = asympt_strong_left_invertible(sys);
  v.property = Property::asympt_strong_star_left_invertible;
  Certificate& c = v.certificate;
  c.ranks["rank_D"] = rank(sys.D);
  note_condition(c, "rank_D_eq_m", c.ranks["rank_D"] == sys.m());
  v.holds = all_conditions(c, {"normrank_P_eq_n_plus_m", "remaining_zeros_stable", "rank_D_eq_m"});
  return v;
}

Verdict darouach_fixed_order(const SystemSextuple& sys) {
  const std::size_t n = sys.n(), m = sys.m(), p = sys.p(), q = sys.q();
  Verdict v{Property::darouach_fixed_order, false, {}};
  Certificate& c = v.certificate;

  // K = [E F 0; C D 0; CA CB D]
  Matrix k(q + 2 * p, n + 2 * m);
  k.set_block(0, 0, sys.E);
  k.set_block(0, n, sys.F);
  k.set_block(q, 0, sys.C);
  k.set_block(q, n, sys.D);
  k.set_block(q + p, 0, sys.C * sys.A);
  k.set_block(q + p, n, sys.C * sys.B);
  k.set_block(q + p, n + m, sys.D);
  // [EA EB F]
  Matrix target(q, n + 2 * m);
  target.set_block(0, 0, sys.E * sys.A);
  target.set_block(0, n, sys.E * sys.B);
  target.set_block(0, n + m, sys.F);
  note_condition(c, "fixed_order_kernel_inclusion", kernel_included(k, target));

  // L(s) = [E(sI - A) -EB 0; C D 0; CA CB D] against the constant K.
  PolyMatrix l(k);
  PolyMatrix e_pencil = PolyMatrix(sys.E) * pencil(sys.A);
  l.set_block(0, 0, e_pencil);
  l.set_block(0, n, PolyMatrix(-(sys.E * sys.B)));
  l.set_block(0, n + m, PolyMatrix(Matrix(q, m)));
  const PolyMatrix kp(k);
  c.ranks["normrank_L"] = normal_rank(l);
  c.ranks["rank_K"] = rank(k);
  const Polynomial zl = zero_polynomial(l);
  const Polynomial zk = zero_polynomial(kp);
  const AntistableComparison cmp = antistable_parts_equal(zl, zk);
  c.polynomials["zero_poly_L"] = zl;
  c.polynomials["zero_poly_K"] = zk;
  c.hurwitz["zero_quotient_L"] = cmp.p_quotient_report;
  c.hurwitz["zero_quotient_K"] = cmp.q_quotient_report;
  note_condition(c, "rank_equal_on_closed_rhp", c.ranks["normrank_L"] == c.ranks["rank_K"] && cmp.equal);

  if (!is_controllable(sys.A, sys.B))
    c.notes.push_back("(A, B) is not controllable; the fixed-order result this mirrors assumes controllability");
  v.holds = all_conditions(c, {"fixed_order_kernel_inclusion", "rank_equal_on_closed_rhp"});
  return v;
}

Verdict decide(Property property, const SystemSextuple& sys) {
  switch (property) {
    case Property::functional_detectable: return functional_detectable(sys);
    case Property::strongly_functional_detectable: return strongly_functional_detectable(sys);
    case Property::strong_star_functional_detectable: return strong_star_functional_detectable(sys);
    case Property::hautus_strong_detectable: return hautus_strong_detectable(sys);
    case Property::hautus_strong_star_detectable: return hautus_strong_star_detectable(sys);
    case Property::asympt_strong_left_invertible: return asympt_strong_left_invertible(sys);
    case Property::asympt_strong_star_left_invertible: return asympt_strong_star_left_invertible(sys);
    case Property::darouach_fixed_order: return darouach_fixed_order(sys);
  }
  fail(ErrorCode::internal, "unknown property");
}

}  // namespace funobs
