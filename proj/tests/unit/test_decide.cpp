#include <doctest.h>

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"
#include "funobs/decide.hpp"

using namespace funobs;

namespace {

const Polynomial s = Polynomial::s();

SystemSextuple state_output(const SystemSextuple& sys) {
  return sys.with_output(Matrix::identity(sys.n()), Matrix(sys.n(), sys.m()));
}

SystemSextuple input_output(const SystemSextuple& sys) {
  return sys.with_output(Matrix(sys.m(), sys.n()), Matrix::identity(sys.m()));
}

}  // namespace

TEST_SUITE("decide") {
  TEST_CASE("example 1: functional but not strongly") {
    const auto sys = fixture::example1();
    CHECK(functional_detectable(sys).holds);
    const Verdict v = strongly_functional_detectable(sys);
    CHECK_FALSE(v.holds);
    CHECK(v.certificate.ranks.at("normrank_P") == 2);
    CHECK(v.certificate.ranks.at("normrank_Pe") == 3);
    CHECK(v.certificate.failing_condition == "normrank_equal");
    CHECK_FALSE(strong_star_functional_detectable(sys).holds);
  }
  TEST_CASE("example 2: strongly but not strong-star") {
    const auto sys = fixture::example2();
    const Verdict v = strongly_functional_detectable(sys);
    CHECK(v.holds);
    CHECK(v.certificate.polynomials.at("zero_poly_P") == s + 1);
    CHECK(v.certificate.polynomials.at("zero_poly_Pe") == Polynomial(1));
    const Verdict st = strong_star_functional_detectable(sys);
    CHECK_FALSE(st.holds);
    CHECK(st.certificate.failing_condition == "properness_inclusion");
    CHECK_FALSE(st.certificate.conditions.at("toeplitz_kernel_inclusion"));
  }
  TEST_CASE("diagonal plant with full-state measurement") {
    const auto sys = fixture::diagonal_full_state();
    CHECK(strongly_functional_detectable(sys).holds);
    const Verdict st = strong_star_functional_detectable(sys);
    CHECK(st.holds);
    CHECK(st.certificate.subspaces.at("vstar_cd_cap_im_be").dim() == 0);
    CHECK(functional_detectable(sys).holds);
    CHECK(darouach_fixed_order(sys).holds);
    CHECK_FALSE(is_controllable(sys.A, sys.B));
  }
  TEST_CASE("proper unstable witness plant") {
    const auto sys = fixture::proper_unstable_witness();
    const Verdict d = darouach_fixed_order(sys);
    CHECK_FALSE(d.holds);
    CHECK_FALSE(d.certificate.conditions.at("fixed_order_kernel_inclusion"));
    CHECK_FALSE(functional_detectable(sys).holds);
    CHECK_FALSE(strongly_functional_detectable(sys).holds);
  }
  TEST_CASE("triple chain plant") {
    const auto sys = fixture::triple_chain();
    const Verdict d = darouach_fixed_order(sys);
    CHECK_FALSE(d.holds);
    CHECK_FALSE(d.certificate.conditions.at("rank_equal_on_closed_rhp"));
    CHECK(strong_star_functional_detectable(sys).holds);
    CHECK(functional_detectable(sys).holds);
  }
  TEST_CASE("z = y always holds") {
    gen::Rng rng(107);
    for (int t = 0; t < 100; ++t) {
      const SystemSextuple sys = gen::system(rng);
      const SystemSextuple same = sys.with_output(sys.C, sys.D);
      CHECK(strongly_functional_detectable(same).holds);
      CHECK(strong_star_functional_detectable(same).holds);
    }
  }
  TEST_CASE("q = 0 is vacuous") {
    const auto sys = fixture::example1().with_output(Matrix(0, 1), Matrix(0, 2));
    for (Property p : {Property::functional_detectable, Property::strongly_functional_detectable,
                       Property::strong_star_functional_detectable})
      CHECK(decide(p, sys).holds);
  }
  TEST_CASE("hautus examples") {
    CHECK(hautus_strong_detectable(fixture::example2()).holds);
    CHECK(strongly_functional_detectable(state_output(fixture::example2())).holds);
    const auto unstable_hidden = make_system({{1}}, Matrix(1, 0), {{0}}, Matrix(1, 0), Matrix(0, 1), Matrix(0, 0));
    CHECK_FALSE(hautus_strong_detectable(unstable_hidden).holds);
    const auto lag = make_system({{-1}}, {{1}}, {{1}}, {{0}}, Matrix(0, 1), Matrix(0, 1));
    const Verdict v = hautus_strong_detectable(lag);
    CHECK(v.holds);
    CHECK(oracle::det(build_system_matrices(lag).P) == Polynomial(1));
  }
  TEST_CASE("hautus strong-star examples") {
    const auto full_d = make_system({{-1, 0}, {1, -2}}, {{1}, {0}}, {{1, 0}}, {{1}}, Matrix(0, 2), Matrix(0, 1));
    CHECK(hautus_strong_detectable(full_d).holds);
    CHECK(hautus_strong_star_detectable(full_d).holds);
    const auto no_b = make_system({{-1, 0}, {1, -2}}, Matrix(2, 1), {{1, 0}}, {{0}}, Matrix(0, 2), Matrix(0, 1));
    CHECK(hautus_strong_star_detectable(no_b).certificate.conditions.at("kernel_inclusion_D_CB"));
  }
  TEST_CASE("left invertibility examples") {
    const auto sys = fixture::example2();
    CHECK(asympt_strong_left_invertible(sys).holds);
    const Verdict st = asympt_strong_star_left_invertible(sys);
    CHECK_FALSE(st.holds);
    CHECK_FALSE(st.certificate.conditions.at("rank_D_eq_m"));
    const auto direct = make_system({{-1, 0}, {0, -2}}, {{1}, {1}}, Matrix::identity(2), {{1}, {0}}, Matrix(0, 2), Matrix(0, 1));
    CHECK(asympt_strong_left_invertible(direct).holds);
    CHECK(asympt_strong_star_left_invertible(direct).holds);
  }
  TEST_CASE("darouach with z = y, D = 0, observable stable plant") {
    const auto sys = make_system({{-1, 1}, {0, -2}}, {{0}, {1}}, {{1, 0}}, {{0}}, {{1, 0}}, {{0}});
    CHECK(darouach_fixed_order(sys).holds);
  }
  TEST_CASE("specializations agree with the general criteria") {
    gen::Rng rng(109);
    for (int t = 0; t < 200; ++t) {
      const SystemSextuple sys = gen::system(rng);
      CHECK(hautus_strong_detectable(sys).holds == strongly_functional_detectable(state_output(sys)).holds);
      CHECK(hautus_strong_star_detectable(sys).holds == strong_star_functional_detectable(state_output(sys)).holds);
      CHECK(asympt_strong_left_invertible(sys).holds == strongly_functional_detectable(input_output(sys)).holds);
      CHECK(asympt_strong_star_left_invertible(sys).holds ==
            strong_star_functional_detectable(input_output(sys)).holds);
    }
  }
  TEST_CASE("implication chain and the darouach implication") {
    gen::Rng rng(113);
    for (int t = 0; t < 200; ++t) {
      const SystemSextuple sys = gen::system(rng);
      const bool st = strong_star_functional_detectable(sys).holds;
      const bool sf = strongly_functional_detectable(sys).holds;
      const bool f = functional_detectable(sys).holds;
      if (st) CHECK(sf);
      if (sf) CHECK(f);
      if (darouach_fixed_order(sys).holds) CHECK(st);
    }
  }
  TEST_CASE("known input: all three verdicts coincide when m = 0") {
    gen::Rng rng(127);
    for (int t = 0; t < 150; ++t) {
      const SystemSextuple sys = gen::system(rng).without_input();
      const bool f = functional_detectable(sys).holds;
      CHECK(strongly_functional_detectable(sys).holds == f);
      CHECK(strong_star_functional_detectable(sys).holds == f);
    }
  }
  TEST_CASE("functional detectability matches a PBH argument on diagonal plants") {
    // Diagonal A with integer eigenvalues: an unstable mode must be either seen by C or absent from E.
    gen::Rng rng(131);
    for (int t = 0; t < 150; ++t) {
      const auto n = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
      Matrix a(n, n);
      for (std::size_t i = 0; i < n; ++i) a(i, i) = gen::uniform(rng, -3, 3);
      const Matrix c = gen::matrix(rng, static_cast<std::size_t>(gen::uniform(rng, 0, 2)), n, -1, 1, 0.5);
      const Matrix e = gen::matrix(rng, 1, n, -1, 1, 0.5);
      const auto sys = make_system(a, Matrix(n, 0), c, Matrix(c.rows(), 0), e, Matrix(1, 0));
      bool expect = true;
      for (std::size_t i = 0; i < n; ++i) {
        const Rational lambda = a(i, i);
        if (lambda < 0) continue;
        // rank [lambda I - A; C] = rank [lambda I - A; C; E] at every closed-RHP eigenvalue.
        Matrix top(n, n);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t k = 0; k < n; ++k) top(r, k) = (r == k ? lambda : Rational(0)) - a(r, k);
        if (oracle::rank(vcat(top, c)) != oracle::rank(vcat(vcat(top, c), e))) expect = false;
      }
      CHECK(functional_detectable(sys).holds == expect);
    }
  }
  TEST_CASE("property names round-trip") {
    for (Property p : all_properties()) CHECK(property_from_string(to_string(p)) == p);
    CHECK_FALSE(property_from_string("nonsense").has_value());
    CHECK(all_properties().size() == 8);
  }
  TEST_CASE("certificates re-verify their verdicts") {
    gen::Rng rng(137);
    for (int t = 0; t < 100; ++t) {
      const SystemSextuple sys = gen::system(rng);
      const Verdict v = strong_star_functional_detectable(sys);
      const Certificate& c = v.certificate;
      const bool ranks = c.ranks.at("normrank_P") == c.ranks.at("normrank_Pe");
      const Polynomial g = poly_gcd(c.polynomials.at("zero_poly_P"), c.polynomials.at("zero_poly_Pe"));
      CHECK(g == c.polynomials.at("zero_gcd"));
      CHECK(c.polynomials.at("zero_quotient_P") * g == c.polynomials.at("zero_poly_P"));
      const int pq = oracle::hurwitz_by_roots(c.polynomials.at("zero_quotient_P"), 1e-9);
      const int qq = oracle::hurwitz_by_roots(c.polynomials.at("zero_quotient_Pe"), 1e-9);
      if (pq >= 0 && qq >= 0) CHECK(c.conditions.at("antistable_zeros_equal") == (pq == 1 && qq == 1));
      CHECK(v.holds == (ranks && c.conditions.at("antistable_zeros_equal") && c.conditions.at("properness_inclusion")));
      CHECK(v.holds == c.failing_condition.empty());
    }
  }
}
