#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "funobs/rational.hpp"

namespace funobs {

// Univariate polynomial over Q, coefficients in ascending degree with no
// trailing zeros. The zero polynomial has an empty coefficient list.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Rational> ascending);

  static Polynomial monomial(const Rational& coefficient, std::size_t degree);
  // The indeterminate s.
  static Polynomial s() { return monomial(1, 1); }

  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }
  const std::vector<Rational>& coefficients() const noexcept { return c_; }

  Polynomial monic() const;
  Rational eval(const Rational& x) const;
  std::complex<double> eval(std::complex<double> x) const;
  Polynomial derivative() const;

  std::string to_string(const std::string& var = "s") const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

 private:
  void strip();
  std::vector<Rational> c_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

// Euclidean division; throws on a zero divisor.
DivMod divmod(const Polynomial& a, const Polynomial& b);
// a / b, throwing if the division is not exact.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& d, const Polynomial& a);

// Monic greatest common divisor; throws when both arguments are zero.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);
// Monic least common multiple of nonzero polynomials.
Polynomial poly_lcm(const Polynomial& a, const Polynomial& b);

}  // namespace funobs
