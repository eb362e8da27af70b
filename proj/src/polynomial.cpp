#include "funobs/polynomial.hpp"

#include <sstream>

#include "funobs/error.hpp"

namespace funobs {

Polynomial::Polynomial(const Rational& constant) {
  if (sgn(constant) != 0) c_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) { strip(); }

Polynomial Polynomial::monomial(const Rational& coefficient, std::size_t degree) {
  if (sgn(coefficient) == 0) return {};
  std::vector<Rational> c(degree + 1);
  c[degree] = coefficient;
  return Polynomial(std::move(c));
}

void Polynomial::strip() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  const Rational inv = 1 / leading();
  std::vector<Rational> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * inv;
  return Polynomial(std::move(c));
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> Polynomial::eval(std::complex<double> x) const {
  std::complex<double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& a = c_[k];
    if (sgn(a) == 0) continue;
    Rational mag = abs(a);
    if (first) {
      if (sgn(a) < 0) os << '-';
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (k == 0 || !unit) {
      os << mag.get_str();
      if (k > 0) os << '*';
    }
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return Polynomial(std::move(c));
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) fail(ErrorCode::invalid_argument, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> rem = a.coefficients();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Rational> quo(rem.size() - db);
  const Rational inv_lead = 1 / b.leading();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (sgn(rem[k]) == 0) continue;
    const Rational f = rem[k] * inv_lead;
    quo[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeff(j);
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  DivMod qr = divmod(a, b);
  if (!qr.remainder.is_zero()) fail(ErrorCode::internal, "inexact polynomial division");
  return qr.quotient;
}

bool divides(const Polynomial& d, const Polynomial& a) {
  if (d.is_zero()) return a.is_zero();
  return divmod(a, d).remainder.is_zero();
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) fail(ErrorCode::invalid_argument, "gcd of two zero polynomials");
  Polynomial x = a.monic();
  Polynomial y = b.monic();
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

Polynomial poly_lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) fail(ErrorCode::invalid_argument, "lcm of a zero polynomial");
  return exact_div(a * b, poly_gcd(a, b)).monic();
}

}  // namespace funobs
