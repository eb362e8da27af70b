#include "funobs/ratfunc.hpp"

#include <cctype>

#include "funobs/error.hpp"
#include "funobs/rational.hpp"

namespace funobs {

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_(1) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) fail(ErrorCode::invalid_argument, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  const Polynomial g = poly_gcd(num, den);
  num_ = exact_div(num, g);
  den_ = exact_div(den, g);
  const Rational lead = den_.leading();
  if (lead != 1) {
    const Polynomial inv(Rational(1 / lead));
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (den_ == Polynomial(1)) return num_.to_string(var);
  auto wrap = [&](const Polynomial& p) {
    const std::string s = p.to_string(var);
    return s.find_first_of("+-*", 1) == std::string::npos ? s : "(" + s + ")";
  };
  return wrap(num_) + "/" + wrap(den_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) fail(ErrorCode::invalid_argument, "rational function division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunctionMatrix::RationalFunctionMatrix(const PolyMatrix& p) : RationalFunctionMatrix(p.rows(), p.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = RationalFunction(p(i, j));
}

bool RationalFunctionMatrix::is_zero() const {
  for (const auto& f : data_)
    if (!f.is_zero()) return false;
  return true;
}

RationalFunctionMatrix RationalFunctionMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                                                     std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) fail(ErrorCode::dimension, "rational function block out of range");
  RationalFunctionMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

RationalFunctionMatrix operator*(const RationalFunctionMatrix& a, const RationalFunctionMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorCode::dimension, "rational function matrix product shape mismatch");
  RationalFunctionMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) = c(i, j) + a(i, k) * b(k, j);
    }
  return c;
}

RationalFunctionMatrix operator-(const RationalFunctionMatrix& a, const RationalFunctionMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::dimension, "rational function matrix shape mismatch");
  RationalFunctionMatrix c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
  return c;
}

namespace {

class FormulaParser {
 public:
  explicit FormulaParser(const std::string& text) : text_(text) {}

  RationalFunction parse() {
    RationalFunction r = expr();
    skip();
    if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::parse, "rational function \"" + text_ + "\" at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool starts_factor() {
    skip();
    return pos_ < text_.size() && (text_[pos_] == 's' || text_[pos_] == '(');
  }

  RationalFunction expr() {
    RationalFunction r = accept('-') ? RationalFunction(Polynomial(0)) - term() : term();
    for (;;) {
      if (accept('+')) r = r + term();
      else if (accept('-')) r = r - term();
      else return r;
    }
  }
  RationalFunction term() {
    RationalFunction r = power();
    for (;;) {
      if (accept('*')) r = r * power();
      else if (accept('/')) {
        RationalFunction d = power();
        if (d.is_zero()) error("division by zero");
        r = r / d;
      } else if (starts_factor()) r = r * power();
      else return r;
    }
  }
  RationalFunction power() {
    RationalFunction base = primary();
    if (!accept('^')) return base;
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) error("expected a nonnegative integer exponent");
    const unsigned long e = std::stoul(text_.substr(start, pos_ - start));
    if (e > 1000) error("exponent too large");
    RationalFunction r(Polynomial(1));
    for (unsigned long i = 0; i < e; ++i) r = r * base;
    return r;
  }
  RationalFunction primary() {
    skip();
    if (pos_ >= text_.size()) error("unexpected end of input");
    const char c = text_[pos_];
    if (c == 's') {
      ++pos_;
      return RationalFunction(Polynomial::s());
    }
    if (c == '(') {
      ++pos_;
      RationalFunction r = expr();
      if (!accept(')')) error("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
        std::size_t look = pos_ + 1;
        if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) ++look;
        if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
          pos_ = look;
          while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        }
      }
      return RationalFunction(Polynomial(parse_rational(text_.substr(start, pos_ - start))));
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t at = text.find(sep, start);
    parts.push_back(text.substr(start, at == std::string::npos ? std::string::npos : at - start));
    if (at == std::string::npos) return parts;
    start = at + 1;
  }
}

}  // namespace

RationalFunction parse_rational_function(const std::string& text) { return FormulaParser(text).parse(); }

RationalFunctionMatrix parse_rational_function_matrix(const std::string& text) {
  std::vector<std::vector<RationalFunction>> rows;
  for (const std::string& row : split(text, ';')) {
    rows.emplace_back();
    for (const std::string& entry : split(row, ',')) rows.back().push_back(parse_rational_function(entry));
    if (rows.back().size() != rows.front().size())
      fail(ErrorCode::parse, "rational function matrix \"" + text + "\": rows have different lengths");
  }
  RationalFunctionMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace funobs
