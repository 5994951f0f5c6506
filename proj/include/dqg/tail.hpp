#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dqg/block.hpp"
#include "dqg/scalar.hpp"

namespace dqg {

/// Closed-form rule for the 1x1 blocks of a lattice-indexed multiplier:
///
///     g  |->  sum_{lambda, e}  c_{lambda,e} * g^e * lambda^g
///
/// with lambda in (K^x)^k, multi-exponent e, g^e = prod g_i^{e_i} and
/// lambda^g = prod lambda_i^{g_i}. The family is closed under sum, product,
/// conjugation, reflection g -> -g and translation.
///
/// The zero rule is the only rule allowed on finite shapes.
class TailRule {
 public:
  using Base = std::vector<Scalar>;
  using Exponent = std::array<std::uint8_t, BlockIndex::max_rank>;
  using Terms = std::map<Base, std::map<Exponent, Scalar>>;

  TailRule() = default;  // zero
  static TailRule constant(unsigned rank, const Scalar& c);
  /// g |-> lambda^g.
  static TailRule character(Base lambda);
  /// g |-> g_i^k.
  static TailRule monomial(unsigned rank, unsigned i, unsigned k);

  bool is_zero() const noexcept { return terms_.empty(); }
  /// Number of coordinates of the lattice, or 0 for the zero rule.
  unsigned rank() const noexcept { return rank_; }
  const Terms& terms() const noexcept { return terms_; }
  /// Constant rules c * 1 (including zero).
  bool is_constant() const;

  Scalar evaluate(const BlockIndex& g) const;

  TailRule& operator+=(const TailRule& o);
  TailRule& operator*=(const Scalar& s);
  friend TailRule operator+(TailRule a, const TailRule& b) { return a += b; }
  friend TailRule operator-(TailRule a, const TailRule& b) { return a += -b; }
  friend TailRule operator*(TailRule a, const Scalar& s) { return a *= s; }
  friend TailRule operator*(const TailRule& a, const TailRule& b);
  TailRule operator-() const;

  TailRule conj() const;
  /// g |-> f(-g).
  TailRule reflect() const;
  /// g |-> f(g + h).
  TailRule shift(const BlockIndex& h) const;

  friend bool operator==(const TailRule&, const TailRule&) = default;

  /// Human-readable form, e.g. "2^g + 3*g*2^g".
  std::string str() const;

 private:
  void add_term(const Base& lambda, const Exponent& e, const Scalar& c);
  void check_rank(unsigned r);

  unsigned rank_ = 0;
  Terms terms_;
};

}  // namespace dqg
