#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "dqg/scalar.hpp"

namespace dqg {

/// Dense exact matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix scalar(std::size_t n, const Scalar& s);
  /// Matrix unit E_{r,c} of size n.
  static Matrix unit(std::size_t n, std::size_t r, std::size_t c);
  static Matrix column(const std::vector<Scalar>& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  const std::vector<Scalar>& data() const noexcept { return a_; }

  bool is_zero() const;
  Matrix transpose() const;
  /// Conjugate transpose.
  Matrix adjoint() const;
  Scalar trace() const;
  Matrix column_at(std::size_t c) const;
  Matrix row_at(std::size_t r) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix operator-() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> a_;
};

/// Kronecker product; row index (i, p) maps to i * b.rows() + p.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix direct_sum(const std::vector<Matrix>& blocks);
/// Swaps the tensor factors of z in M_n1 (x) M_n2, giving an element of M_n2 (x) M_n1.
Matrix flip_factors(const Matrix& z, std::size_t n1, std::size_t n2);
/// (id (x) tr(g .))(z) for z in M_n1 (x) M_n2 and g in M_n2.
Matrix partial_trace_second(const Matrix& z, const Matrix& g, std::size_t n1);
/// (tr(g .) (x) id)(z) for z in M_n1 (x) M_n2 and g in M_n1.
Matrix partial_trace_first(const Matrix& z, const Matrix& g, std::size_t n2);
/// Multiplication map m(x (x) y) = xy for z in M_n (x) M_n.
Matrix multiply_legs(const Matrix& z, std::size_t n);

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Gauss-Jordan elimination; the pivot in each column is the first nonzero
/// entry by row index, so results are deterministic.
RowEchelon row_echelon(Matrix m);
std::size_t rank(const Matrix& m);
/// Columns form a basis of the right null space, one per free column.
Matrix nullspace(const Matrix& m);
Matrix inverse(const Matrix& m);
/// Some x with a x = b, if one exists.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

struct RankFactorization {
  Matrix left;    // pivot columns of m, rows x rank
  Matrix right;   // nonzero rows of rref(m), rank x cols
  std::vector<std::size_t> pivots;
};

/// m = left * right with both factors of full rank.
RankFactorization rank_factorize(const Matrix& m);

}  // namespace dqg
