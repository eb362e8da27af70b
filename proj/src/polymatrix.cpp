#include "funobs/polymatrix.hpp"

#include <optional>
#include <sstream>
#include <utility>

#include "funobs/error.hpp"

namespace funobs {

PolyMatrix::PolyMatrix(const Matrix& constant) : PolyMatrix(constant.rows(), constant.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = Polynomial(constant(i, j));
}

PolyMatrix PolyMatrix::identity(std::size_t n) { return PolyMatrix(Matrix::identity(n)); }

bool PolyMatrix::is_zero() const {
  for (const auto& p : data_)
    if (!p.is_zero()) return false;
  return true;
}

int PolyMatrix::max_degree() const {
  int d = -1;
  for (const auto& p : data_) d = std::max(d, p.degree());
  return d;
}

Matrix PolyMatrix::eval(const Rational& s) const {
  Matrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).eval(s);
  return m;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void PolyMatrix::set_block(std::size_t r0, std::size_t c0, const PolyMatrix& src) {
  if (r0 + src.rows() > rows_ || c0 + src.cols() > cols_) fail(ErrorCode::dimension, "polynomial block out of range");
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j) (*this)(r0 + i, c0 + j) = src(i, j);
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) fail(ErrorCode::dimension, "polynomial matrix product shape mismatch");
  PolyMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Polynomial& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j).is_zero()) continue;
        c(i, j) += aik * b(k, j);
      }
    }
  return c;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::dimension, "polynomial matrix sum shape mismatch");
  PolyMatrix c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
  return c;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::dimension, "polynomial matrix difference shape mismatch");
  PolyMatrix c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
  return c;
}

PolyMatrix vcat(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.cols()) fail(ErrorCode::dimension, "vcat column mismatch");
  PolyMatrix c(a.rows() + b.rows(), a.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), 0, b);
  return c;
}

PolyMatrix hcat(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows() != b.rows()) fail(ErrorCode::dimension, "hcat row mismatch");
  PolyMatrix c(a.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(0, a.cols(), b);
  return c;
}

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::dimension, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Polynomial(1);
  PolyMatrix a = m;
  Polynomial prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t i = k + 1;
      while (i < n && a(i, k).is_zero()) ++i;
      if (i == n) return {};
      for (std::size_t j = 0; j < n; ++j) std::swap(a(i, j), a(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = exact_div(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
    prev = a(k, k);
  }
  return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

std::size_t normal_rank(const PolyMatrix& p) {
  std::vector<std::vector<Polynomial>> rows(p.rows(), std::vector<Polynomial>(p.cols()));
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) rows[i][j] = p(i, j);

  std::size_t rank = 0;
  for (std::size_t col = 0; col < p.cols() && rank < p.rows(); ++col) {
    std::optional<std::size_t> pivot;
    for (std::size_t i = rank; i < rows.size(); ++i)
      if (!rows[i][col].is_zero() && (!pivot || rows[i][col].degree() < rows[*pivot][col].degree())) pivot = i;
    if (!pivot) continue;
    std::swap(rows[*pivot], rows[rank]);
    const Polynomial& piv = rows[rank][col];
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][col].is_zero()) continue;
      const Polynomial f = rows[i][col];
      Polynomial content;
      for (std::size_t j = col; j < p.cols(); ++j) {
        rows[i][j] = piv * rows[i][j] - f * rows[rank][j];
        if (!rows[i][j].is_zero()) content = content.is_zero() ? rows[i][j].monic() : poly_gcd(content, rows[i][j]);
      }
      if (!content.is_zero() && content.degree() > 0)
        for (std::size_t j = col; j < p.cols(); ++j) rows[i][j] = exact_div(rows[i][j], content);
    }
    ++rank;
  }
  return rank;
}

namespace {

// Elementary row and column operations applied to S, mirrored on U (rows)
// and V (columns) when transformers are tracked.
class SmithWork {
 public:
  SmithWork(const PolyMatrix& p, bool track)
      : s_(p), track_(track), u_(track ? PolyMatrix::identity(p.rows()) : PolyMatrix()),
        v_(track ? PolyMatrix::identity(p.cols()) : PolyMatrix()) {}

  PolyMatrix& s() { return s_; }
  PolyMatrix& u() { return u_; }
  PolyMatrix& v() { return v_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < s_.cols(); ++j) std::swap(s_(a, j), s_(b, j));
    if (track_)
      for (std::size_t j = 0; j < u_.cols(); ++j) std::swap(u_(a, j), u_(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < s_.rows(); ++i) std::swap(s_(i, a), s_(i, b));
    if (track_)
      for (std::size_t i = 0; i < v_.rows(); ++i) std::swap(v_(i, a), v_(i, b));
  }

  // row[dst] += f * row[src]
  void add_row(std::size_t dst, std::size_t src, const Polynomial& f) {
    for (std::size_t j = 0; j < s_.cols(); ++j)
      if (!s_(src, j).is_zero()) s_(dst, j) += f * s_(src, j);
    if (track_)
      for (std::size_t j = 0; j < u_.cols(); ++j)
        if (!u_(src, j).is_zero()) u_(dst, j) += f * u_(src, j);
  }

  // col[dst] += col[src] * f
  void add_col(std::size_t dst, std::size_t src, const Polynomial& f) {
    for (std::size_t i = 0; i < s_.rows(); ++i)
      if (!s_(i, src).is_zero()) s_(i, dst) += s_(i, src) * f;
    if (track_)
      for (std::size_t i = 0; i < v_.rows(); ++i)
        if (!v_(i, src).is_zero()) v_(i, dst) += v_(i, src) * f;
  }

  void scale_row(std::size_t r, const Rational& k) {
    const Polynomial f(k);
    for (std::size_t j = 0; j < s_.cols(); ++j) s_(r, j) = s_(r, j) * f;
    if (track_)
      for (std::size_t j = 0; j < u_.cols(); ++j) u_(r, j) = u_(r, j) * f;
  }

 private:
  PolyMatrix s_;
  bool track_;
  PolyMatrix u_;
  PolyMatrix v_;
};

SmithDecomposition smith_impl(const PolyMatrix& p, bool track) {
  SmithWork w(p, track);
  PolyMatrix& s = w.s();
  const std::size_t rows = p.rows();
  const std::size_t cols = p.cols();
  std::vector<Polynomial> invariants;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    bool any = false;
    // Each pass either finishes position t or strictly lowers the pivot degree.
    for (;;) {
      std::size_t bi = 0, bj = 0;
      int best = -1;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (!s(i, j).is_zero() && (best < 0 || s(i, j).degree() < best)) {
            best = s(i, j).degree();
            bi = i;
            bj = j;
          }
      if (best < 0) break;
      any = true;
      w.swap_rows(t, bi);
      w.swap_cols(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s(i, t).is_zero()) continue;
        w.add_row(i, t, -divmod(s(i, t), s(t, t)).quotient);
        if (!s(i, t).is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s(t, j).is_zero()) continue;
        w.add_col(j, t, -divmod(s(t, j), s(t, t)).quotient);
        if (!s(t, j).is_zero()) clean = false;
      }
      if (!clean) continue;

      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols && !fixed; ++j) {
          if (divides(s(t, t), s(i, j))) continue;
          w.add_row(t, i, Polynomial(1));
          w.add_col(j, t, -divmod(s(t, j), s(t, t)).quotient);
          fixed = true;
        }
      if (!fixed) break;
    }
    if (!any) break;
    w.scale_row(t, 1 / s(t, t).leading());
    invariants.push_back(s(t, t));
  }

  SmithDecomposition out;
  out.S = std::move(s);
  out.invariant_polys = std::move(invariants);
  if (track) {
    out.U = std::move(w.u());
    out.V = std::move(w.v());
  }
  return out;
}

}  // namespace

SmithDecomposition smith_form(const PolyMatrix& p) { return smith_impl(p, true); }

std::vector<Polynomial> invariant_polynomials(const PolyMatrix& p) { return smith_impl(p, false).invariant_polys; }

Polynomial zero_polynomial(const PolyMatrix& p) {
  Polynomial z(1);
  for (const auto& a : invariant_polynomials(p)) z *= a;
  return z.monic();
}

std::string to_string(const PolyMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j).to_string();
    }
  }
  os << ']';
  return os.str();
}

}  // namespace funobs
