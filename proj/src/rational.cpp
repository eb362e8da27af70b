#include "funobs/rational.hpp"

#include <cctype>

#include "funobs/error.hpp"

namespace funobs {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) fail(ErrorCode::parse, "invalid rational literal '" + std::string(whole) + "'");
  mpz_class value(std::string(s), 10);
  return negative ? mpz_class(-value) : value;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    auto exp_text = s.substr(e + 1);
    mpz_class ex = parse_integer(exp_text, whole);
    if (!ex.fits_slong_p() || abs(ex) > 100000) fail(ErrorCode::parse, "exponent out of range in '" + std::string(whole) + "'");
    exponent = ex.get_si();
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto int_part = s.substr(0, dot);
    auto frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) fail(ErrorCode::parse, "invalid rational literal '" + std::string(whole) + "'");
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)))
      fail(ErrorCode::parse, "invalid rational literal '" + std::string(whole) + "'");
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) fail(ErrorCode::parse, "invalid rational literal '" + std::string(whole) + "'");
    digits = std::string(s);
  }
  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational out = exponent < 0 ? Rational(mantissa, scale) : Rational(mantissa * scale);
  out.canonicalize();
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  if (s.empty()) fail(ErrorCode::parse, "empty rational literal");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(trim(s.substr(0, slash)), text);
    mpz_class den = parse_integer(trim(s.substr(slash + 1)), text);
    if (den == 0) fail(ErrorCode::parse, "zero denominator in '" + std::string(text) + "'");
    Rational out(num, den);
    out.canonicalize();
    return out;
  }
  if (s.find_first_of(".eE") != std::string_view::npos) return parse_decimal(s, text);
  return Rational(parse_integer(s, text));
}

std::string to_string(const Rational& value) { return value.get_str(10); }

double to_double(const Rational& value) {
  const mpz_class& num = value.get_num();
  const mpz_class& den = value.get_den();
  if (mpz_sizeinbase(num.get_mpz_t(), 2) <= 53 && mpz_sizeinbase(den.get_mpz_t(), 2) <= 53) return num.get_d() / den.get_d();
  return value.get_d();
}

}  // namespace funobs
