#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dqg {

/// Exact element of a cyclotomic field Q(zeta_n).
///
/// Rationals have order 1; Gaussian rationals live in order 4. Square roots of
/// integers (and hence towers of quadratic extensions) embed in a cyclotomic
/// field via Gauss sums, see `sqrt_of_integer`. Operands of different orders are
/// lifted to the field of the lcm of their orders. Values whose non-constant
/// coordinates vanish are always demoted to order 1, so every rational has a
/// unique representation.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : q_(v) {}
  Scalar(long v) : q_(v) {}
  Scalar(long long v) : q_(static_cast<long>(v)) {}
  explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  static Scalar rational(long num, long den);
  /// Parses "p", "-p" or "p/q" with arbitrary-precision integers.
  static Scalar parse_rational(std::string_view text);
  /// zeta_n^k for a primitive n-th root of unity zeta_n = exp(2 pi i / n).
  static Scalar root_of_unity(unsigned n, long k);
  /// The positive real square root of d when d > 0, i*sqrt(|d|) when d < 0.
  static Scalar sqrt_of_integer(long d);
  /// Power-basis coordinates in Q(zeta_order); length must equal phi(order).
  static Scalar from_coords(unsigned order, std::vector<mpq_class> coords);

  unsigned order() const noexcept { return order_; }
  bool is_rational() const noexcept { return order_ == 1; }
  bool is_zero() const;
  bool is_one() const;
  const mpq_class& rational_value() const;
  /// Power-basis coordinates after lifting to Q(zeta_order); order must be a
  /// multiple of this->order().
  std::vector<mpq_class> coords_in(unsigned order) const;

  Scalar conj() const;
  Scalar inverse() const;
  Scalar pow(long e) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Total order used for canonical containers. Consistent with ==.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// Canonical text, parseable by the element-expression grammar:
  /// "3/4", "-2", "(1/2 + zeta(8,1) + -3*zeta(8,3))".
  std::string str() const;

 private:
  void normalize();

  unsigned order_ = 1;
  mpq_class q_;                // value when order_ == 1
  std::vector<mpq_class> c_;   // power-basis coordinates when order_ > 1
};

/// Euler totient.
unsigned euler_phi(unsigned n);

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<mpz_class>& cyclotomic_polynomial(unsigned n);

}  // namespace dqg
