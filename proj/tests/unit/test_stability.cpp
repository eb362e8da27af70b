#include <doctest.h>

#include "../support/oracles.hpp"
#include "funobs/error.hpp"
#include "funobs/stability.hpp"

using namespace funobs;

namespace {

const Polynomial s = Polynomial::s();

// Product of (s - r) over real roots and (s^2 - 2a s + a^2 + b^2) over pairs a +- ib.
Polynomial from_roots(gen::Rng& rng, int degree, Rational& min_abs_real) {
  Polynomial p(1);
  min_abs_real = 1000;
  auto rational_part = [&] {
    Rational v(gen::uniform(rng, -40, 40), gen::uniform(rng, 1, 8));
    return v;
  };
  int d = 0;
  while (d < degree) {
    Rational a = rational_part();
    if (a == 0) continue;
    if (abs(a) < min_abs_real) min_abs_real = abs(a);
    if (d + 2 <= degree && gen::uniform(rng, 0, 1)) {
      const Rational b = rational_part();
      p *= Polynomial(std::vector<Rational>{a * a + b * b, -2 * a, 1});
      d += 2;
    } else {
      p *= Polynomial(std::vector<Rational>{-a, 1});
      d += 1;
    }
  }
  return p * Polynomial(Rational(gen::uniform(rng, 1, 5), gen::uniform(rng, 1, 5)) * (gen::uniform(rng, 0, 1) ? 1 : -1));
}

}  // namespace

TEST_SUITE("stability") {
  TEST_CASE("basic cases") {
    CHECK(is_hurwitz(s + 1).is_hurwitz);
    CHECK_FALSE(is_hurwitz(s - 3).is_hurwitz);
    const HurwitzReport axis = is_hurwitz(s * s + 1);
    CHECK_FALSE(axis.is_hurwitz);
    CHECK(axis.failure_reason.has_value());
    CHECK(is_hurwitz(Polynomial(-4)).is_hurwitz);
    CHECK_FALSE(is_hurwitz(s).is_hurwitz);
    CHECK(is_hurwitz(-(s + 1)).is_hurwitz);
    CHECK_THROWS_AS(is_hurwitz(Polynomial()), Error);
  }
  TEST_CASE("cubic against the root oracle") {
    const Polynomial p(std::vector<Rational>{1, 3, 2, 1});
    const HurwitzReport r = is_hurwitz(p);
    CHECK(r.is_hurwitz);
    CHECK(oracle::hurwitz_by_roots(p, 1e-9) == 1);
    for (const Rational& v : r.routh_first_column) CHECK(v > 0);
  }
  TEST_CASE("failure reasons") {
    CHECK(is_hurwitz(Polynomial(std::vector<Rational>{1, -1, 1})).failure_reason == HurwitzFailure::nonpositive_coefficient);
    CHECK(is_hurwitz(Polynomial(std::vector<Rational>{0, 1, 1})).failure_reason == HurwitzFailure::nonpositive_coefficient);
    // (s^2 + 1)(s + 1): positive coefficients, zero row in the Routh array.
    CHECK(is_hurwitz((s * s + 1) * (s + 1)).failure_reason == HurwitzFailure::routh_degeneracy);
    // s^3 + s^2 + 2 s + 8 has positive coefficients and two right half-plane roots.
    const HurwitzReport r = is_hurwitz(Polynomial(std::vector<Rational>{8, 2, 1, 1}));
    CHECK_FALSE(r.is_hurwitz);
    CHECK(r.failure_reason == HurwitzFailure::sign_change);
    CHECK(oracle::hurwitz_by_roots(Polynomial(std::vector<Rational>{8, 2, 1, 1}), 1e-9) == 0);
  }
  TEST_CASE("agreement with companion-matrix roots") {
    gen::Rng rng(61);
    int compared = 0;
    for (int t = 0; t < 600; ++t) {
      Rational margin;
      const Polynomial p = from_roots(rng, gen::uniform(rng, 1, 8), margin);
      const int expect = oracle::hurwitz_by_roots(p, 1e-6);
      if (expect < 0) continue;
      ++compared;
      CAPTURE(p.to_string());
      CHECK(is_hurwitz(p).is_hurwitz == (expect == 1));
    }
    CHECK(compared > 500);
  }
  TEST_CASE("product rule") {
    gen::Rng rng(67);
    for (int t = 0; t < 300; ++t) {
      Rational m1, m2;
      const Polynomial p = from_roots(rng, gen::uniform(rng, 1, 4), m1);
      const Polynomial q = from_roots(rng, gen::uniform(rng, 1, 4), m2);
      CHECK(is_hurwitz(p * q).is_hurwitz == (is_hurwitz(p).is_hurwitz && is_hurwitz(q).is_hurwitz));
    }
  }
  TEST_CASE("antistable comparison examples") {
    const Polynomial p = (s - 2) * (s + 1) * (s * s + 3);
    CHECK(antistable_parts_equal(p, p).equal);
    CHECK(antistable_parts_equal(s + 1, Polynomial(1)).equal);
    CHECK_FALSE(antistable_parts_equal(s - 1, Polynomial(1)).equal);
    const AntistableComparison c = antistable_parts_equal((s - 2) * (s + 1), (s - 2) * (s + 5));
    CHECK(c.equal);
    CHECK(c.gcd == s - 2);
    CHECK(c.p_quotient == s + 1);
    CHECK(c.q_quotient == s + 5);
    // Multiplicity matters.
    CHECK_FALSE(antistable_parts_equal((s - 2) * (s - 2), s - 2).equal);
    // Irrational antistable roots: s^2 - 2 on both sides.
    CHECK(antistable_parts_equal((s * s - 2) * (s + 3), (s * s - 2)).equal);
    CHECK_THROWS_AS(antistable_parts_equal(Polynomial(), s), Error);
  }
  TEST_CASE("antistable comparison is reflexive and symmetric") {
    gen::Rng rng(71);
    for (int t = 0; t < 200; ++t) {
      Rational m;
      const Polynomial shared = from_roots(rng, gen::uniform(rng, 0, 3), m);
      const Polynomial p = shared * from_roots(rng, gen::uniform(rng, 0, 3), m);
      const Polynomial q = shared * from_roots(rng, gen::uniform(rng, 0, 3), m);
      CHECK(antistable_parts_equal(p, p).equal);
      CHECK(antistable_parts_equal(p, q).equal == antistable_parts_equal(q, p).equal);
    }
  }
}
