#include "dqg/matrix.hpp"

#include "dqg/error.hpp"

namespace dqg {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) { return scalar(n, Scalar(1)); }

Matrix Matrix::scalar(std::size_t n, const Scalar& s) {
  Matrix m(n, n);
  if (!s.is_zero()) {
    for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  }
  return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t r, std::size_t c) {
  Matrix m(n, n);
  m(r, c) = Scalar(1);
  return m;
}

Matrix Matrix::column(const std::vector<Scalar>& v) {
  Matrix m(v.size(), 1);
  m.a_ = v;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix Matrix::adjoint() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j).conj();
  }
  return t;
}

Scalar Matrix::trace() const {
  if (!is_square()) throw ShapeError("trace of a non-square matrix");
  Scalar t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::column_at(std::size_t c) const {
  Matrix m(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) m(i, 0) = (*this)(i, c);
  return m;
}

Matrix Matrix::row_at(std::size_t r) const {
  Matrix m(1, cols_);
  for (std::size_t j = 0; j < cols_; ++j) m(0, j) = (*this)(r, j);
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum of mismatched sizes");
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!o.a_[i].is_zero()) a_[i] += o.a_[i];
  }
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference of mismatched sizes");
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!o.a_[i].is_zero()) a_[i] -= o.a_[i];
  }
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : a_) {
    if (!x.is_zero()) x *= s;
  }
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("matrix product of mismatched sizes");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) c(i, j) += x * y;
      }
    }
  }
  return c;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& x : m.a_) x = -x;
  return m;
}

std::string Matrix::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i == 0 ? "[" : ", [";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) out += ", ";
      out += (*this)(i, j).str();
    }
    out += "]";
  }
  return out + "]";
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p) {
        for (std::size_t q = 0; q < b.cols(); ++q) {
          if (!b(p, q).is_zero()) k(i * b.rows() + p, j * b.cols() + q) = x * b(p, q);
        }
      }
    }
  }
  return k;
}

Matrix direct_sum(const std::vector<Matrix>& blocks) {
  std::size_t r = 0;
  std::size_t c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix m(r, c);
  std::size_t r0 = 0;
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
    }
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

Matrix flip_factors(const Matrix& z, std::size_t n1, std::size_t n2) {
  if (z.rows() != n1 * n2 || z.cols() != n1 * n2) throw ShapeError("flip of a mis-sized tensor block");
  Matrix w(n1 * n2, n1 * n2);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t p = 0; p < n2; ++p) {
      for (std::size_t j = 0; j < n1; ++j) {
        for (std::size_t q = 0; q < n2; ++q) w(p * n1 + i, q * n1 + j) = z(i * n2 + p, j * n2 + q);
      }
    }
  }
  return w;
}

Matrix partial_trace_second(const Matrix& z, const Matrix& g, std::size_t n1) {
  const std::size_t n2 = g.rows();
  if (z.rows() != n1 * n2 || z.cols() != n1 * n2) throw ShapeError("partial trace of a mis-sized block");
  Matrix m(n1, n1);
  for (std::size_t p = 0; p < n2; ++p) {
    for (std::size_t q = 0; q < n2; ++q) {
      const Scalar& w = g(q, p);
      if (w.is_zero()) continue;
      for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = 0; j < n1; ++j) {
          const Scalar& v = z(i * n2 + p, j * n2 + q);
          if (!v.is_zero()) m(i, j) += v * w;
        }
      }
    }
  }
  return m;
}

Matrix partial_trace_first(const Matrix& z, const Matrix& g, std::size_t n2) {
  const std::size_t n1 = g.rows();
  if (z.rows() != n1 * n2 || z.cols() != n1 * n2) throw ShapeError("partial trace of a mis-sized block");
  Matrix m(n2, n2);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n1; ++j) {
      const Scalar& w = g(j, i);
      if (w.is_zero()) continue;
      for (std::size_t p = 0; p < n2; ++p) {
        for (std::size_t q = 0; q < n2; ++q) {
          const Scalar& v = z(i * n2 + p, j * n2 + q);
          if (!v.is_zero()) m(p, q) += v * w;
        }
      }
    }
  }
  return m;
}

Matrix multiply_legs(const Matrix& z, std::size_t n) {
  if (z.rows() != n * n || z.cols() != n * n) throw ShapeError("multiplication map on a mis-sized block");
  // e_ij e_pq = [j == p] e_iq
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t j = 0; j < n; ++j) m(i, q) += z(i * n + j, j * n + q);
    }
  }
  return m;
}

RowEchelon row_echelon(Matrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    }
    const Scalar inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) {
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar f = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_echelon(m).pivots.size(); }

Matrix nullspace(const Matrix& m) {
  const RowEchelon e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix basis(m.cols(), m.cols() - e.pivots.size());
  std::size_t k = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    basis(f, k) = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      if (!e.reduced(r, f).is_zero()) basis(e.pivots[r], k) = -e.reduced(r, f);
    }
    ++k;
  }
  return basis;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw ShapeError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(1);
  }
  const RowEchelon e = row_echelon(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw SingularMatrixError("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  }
  return inv;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ShapeError("solve with mismatched right-hand side");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
  }
  const RowEchelon e = row_echelon(std::move(aug));
  Matrix x(n, b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, n + j);
  }
  return x;
}

RankFactorization rank_factorize(const Matrix& m) {
  RowEchelon e = row_echelon(m);
  RankFactorization f;
  const std::size_t r = e.pivots.size();
  f.left = Matrix(m.rows(), r);
  f.right = Matrix(r, m.cols());
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t i = 0; i < m.rows(); ++i) f.left(i, k) = m(i, e.pivots[k]);
    for (std::size_t j = 0; j < m.cols(); ++j) f.right(k, j) = e.reduced(k, j);
  }
  f.pivots = std::move(e.pivots);
  return f;
}

}  // namespace dqg
