// Copyright 2026 The nakayama-birep Authors.
// SPDX-License-Identifier: Apache-2.0

#include "nakayama/exact_linalg.hpp"

#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace nakayama {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("Matrix: ragged initializer");
    for (long v : r) data_.emplace_back(v);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw std::invalid_argument("Matrix::from_columns: bad length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::block(std::size_t row, std::size_t col, std::size_t rows, std::size_t cols) const {
  Matrix b(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) b(r, c) = (*this)(row + r, col + c);
  return b;
}

void Matrix::set_block(std::size_t row, std::size_t col, const Matrix& b) {
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(row + r, col + c) = b(r, c);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: shape mismatch");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t m = 0; m < a.cols_; ++m) {
      const Scalar& x = a(r, m);
      if (sgn(x) == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const Scalar& y = b(m, c);
        if (sgn(y) != 0) p(r, c) += x * y;
      }
    }
  }
  return p;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix sum: shape mismatch");
  Matrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] += b.data_[i];
  return s;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix difference: shape mismatch");
  Matrix s = a;
  for (std::size_t i = 0; i < s.data_.size(); ++i) s.data_[i] -= b.data_[i];
  return s;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix m = a;
  for (auto& x : m.data_) x *= s;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Vector operator*(const Matrix& m, const Vector& v) {
  if (m.cols() != v.size()) throw std::invalid_argument("Matrix-vector product: shape mismatch");
  Vector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0 && sgn(v[c]) != 0) out[r] += m(r, c) * v[c];
  return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      if (sgn(a(ar, ac)) == 0) continue;
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          if (sgn(b(br, bc)) != 0) k(ar * b.rows() + br, ac * b.cols() + bc) = a(ar, ac) * b(br, bc);
    }
  return k;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix s(a.rows() + b.rows(), a.cols() + b.cols());
  s.set_block(0, 0, a);
  s.set_block(a.rows(), a.cols(), b);
  return s;
}

namespace {

struct Overflow {};

// Fraction-free Gauss-Jordan elimination (Bareiss). After reduction every
// pivot entry equals `det` and all other entries of pivot columns are zero.
// Divisions are exact because every intermediate entry is a minor of the input.
struct Int64Ops {
  using Int = std::int64_t;
  static bool is_zero(Int x) { return x == 0; }
  static Int cross(Int p, Int x, Int f, Int y, Int prev) {
    __int128 v = static_cast<__int128>(p) * x - static_cast<__int128>(f) * y;
    v /= prev;
    if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min()) throw Overflow{};
    return static_cast<Int>(v);
  }
  static Int scale(Int x, Int p, Int prev) {
    __int128 v = static_cast<__int128>(x) * p / prev;
    if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min()) throw Overflow{};
    return static_cast<Int>(v);
  }
  static Int magnitude(Int x) { return x < 0 ? -x : x; }
};

struct MpzOps {
  using Int = mpz_class;
  static bool is_zero(const Int& x) { return sgn(x) == 0; }
  static Int cross(const Int& p, const Int& x, const Int& f, const Int& y, const Int& prev) {
    Int v = p * x - f * y;
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
    return v;
  }
  static Int scale(const Int& x, const Int& p, const Int& prev) {
    Int v = x * p;
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
    return v;
  }
  static Int magnitude(const Int& x) { return abs(x); }
};

template <class Ops>
struct IntegerReduction {
  using Int = typename Ops::Int;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> a;
  std::vector<std::size_t> pivots;
  Int det = 1;

  Int& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }

  void run() {
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (Ops::is_zero(at(i, c))) continue;
        if (best == rows || Ops::magnitude(at(i, c)) < Ops::magnitude(at(best, c))) best = i;
        if (Ops::magnitude(at(best, c)) == 1) break;
      }
      if (best == rows) continue;
      if (best != r)
        for (std::size_t j = 0; j < cols; ++j) std::swap(at(best, j), at(r, j));
      const Int p = at(r, c);
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == r) continue;
        const Int f = at(i, c);
        if (Ops::is_zero(f)) {
          if (p == prev) continue;
          for (std::size_t j = 0; j < cols; ++j)
            if (!Ops::is_zero(at(i, j))) at(i, j) = Ops::scale(at(i, j), p, prev);
          continue;
        }
        for (std::size_t j = 0; j < cols; ++j) {
          if (Ops::is_zero(at(i, j)) && Ops::is_zero(at(r, j))) continue;
          at(i, j) = Ops::cross(p, at(i, j), f, at(r, j), prev);
        }
      }
      prev = p;
      pivots.push_back(c);
      ++r;
    }
    det = prev;
  }
};

// Integer rows obtained by clearing denominators row by row; row scaling does
// not change the row space.
std::vector<mpz_class> integer_rows(const Matrix& m) {
  std::vector<mpz_class> out(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& d = m(r, c).get_den();
      if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Scalar& x = m(r, c);
      if (sgn(x) == 0) continue;
      if (l == 1) {
        out[r * m.cols() + c] = x.get_num();
      } else {
        mpz_class q = l;
        mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), x.get_den_mpz_t());
        out[r * m.cols() + c] = q * x.get_num();
      }
    }
  }
  return out;
}

// Reduced form as rationals: entry (r, c) = a(r, c) / det.
struct Reduced {
  std::size_t cols = 0;
  std::vector<std::size_t> pivots;
  Matrix rows;  // rank x cols, pivots normalised to one
};

Reduced reduce(const Matrix& m) {
  Reduced out;
  out.cols = m.cols();
  if (m.rows() == 0 || m.cols() == 0) {
    out.rows = Matrix(0, m.cols());
    return out;
  }
  const auto ints = integer_rows(m);
  bool small = true;
  for (const auto& x : ints)
    if (!x.fits_slong_p()) {
      small = false;
      break;
    }
  if (small) {
    IntegerReduction<Int64Ops> red;
    red.rows = m.rows();
    red.cols = m.cols();
    red.a.reserve(ints.size());
    for (const auto& x : ints) red.a.push_back(x.get_si());
    try {
      red.run();
      out.pivots = red.pivots;
      out.rows = Matrix(red.pivots.size(), m.cols());
      for (std::size_t r = 0; r < red.pivots.size(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
          const auto v = red.at(r, c);
          if (v != 0) out.rows(r, c) = Scalar(mpz_class(static_cast<long>(v)), mpz_class(static_cast<long>(red.det)));
        }
      for (std::size_t r = 0; r < out.rows.rows(); ++r)
        for (std::size_t c = 0; c < out.rows.cols(); ++c) out.rows(r, c).canonicalize();
      return out;
    } catch (const Overflow&) {
      // fall through to arbitrary precision
    }
  }
  IntegerReduction<MpzOps> red;
  red.rows = m.rows();
  red.cols = m.cols();
  red.a = ints;
  red.run();
  out.pivots = red.pivots;
  out.rows = Matrix(red.pivots.size(), m.cols());
  for (std::size_t r = 0; r < red.pivots.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& v = red.at(r, c);
      if (sgn(v) != 0) {
        out.rows(r, c) = Scalar(v, red.det);
        out.rows(r, c).canonicalize();
      }
    }
  return out;
}

}  // namespace

RowReduction row_reduce(const Matrix& m) {
  auto red = reduce(m);
  return RowReduction{std::move(red.pivots), std::move(red.rows)};
}

std::size_t rank(const Matrix& m) { return reduce(m).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  const auto red = reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : red.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < red.pivots.size(); ++r) v[red.pivots[r]] = -red.rows(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side has wrong length");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto red = reduce(aug);
  Vector x(m.cols());
  for (std::size_t r = 0; r < red.pivots.size(); ++r) {
    if (red.pivots[r] == m.cols()) return std::nullopt;
    x[red.pivots[r]] = red.rows(r, m.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix::identity(n));
  const auto red = reduce(aug);
  if (red.pivots.size() < n || (n > 0 && red.pivots[n - 1] != n - 1)) return std::nullopt;
  return red.rows.block(0, n, n, n);
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

std::vector<std::size_t> column_space_pivots(const Matrix& m) { return reduce(m).pivots; }

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      os << m(r, c).get_str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace nakayama
