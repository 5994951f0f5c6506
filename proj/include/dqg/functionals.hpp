#pragma once

#include <string>
#include <vector>

#include "dqg/element.hpp"
#include "dqg/model.hpp"

namespace dqg {

/// Finitely supported functional xi(m) = sum_iota tr(G_iota m_iota). This is
/// the canonical form of the span of all a f b; it extends to every multiplier.
class ReducedFunctional {
 public:
  explicit ReducedFunctional(ShapePtr shape) : shape_(std::move(shape)) {}
  /// Validates block sizes and drops zero blocks.
  ReducedFunctional(ShapePtr shape, BlockMap g);

  /// tr of block b (the value m(b) on one-dimensional blocks).
  static ReducedFunctional eval_at(ShapePtr shape, const BlockIndex& b);
  /// m |-> (m_b)_{i,j}.
  static ReducedFunctional matrix_entry(ShapePtr shape, const BlockIndex& b, std::size_t i, std::size_t j);

  const ShapePtr& shape() const noexcept { return shape_; }
  const BlockMap& blocks() const noexcept { return g_; }
  Window support() const;
  bool is_zero() const noexcept { return g_.empty(); }
  /// G_b, or zero.
  Matrix weight(const BlockIndex& b) const;

  Scalar operator()(const Multiplier& m) const;
  Scalar operator()(const FiniteElement& a) const;

  ReducedFunctional& operator+=(const ReducedFunctional& o);
  ReducedFunctional& operator*=(const Scalar& s);
  friend ReducedFunctional operator+(ReducedFunctional a, const ReducedFunctional& b) { return a += b; }
  friend ReducedFunctional operator-(ReducedFunctional a, const ReducedFunctional& b) { return a += b * Scalar(-1); }
  friend ReducedFunctional operator*(ReducedFunctional a, const Scalar& s) { return a *= s; }
  friend bool operator==(const ReducedFunctional& a, const ReducedFunctional& b) { return a.g_ == b.g_; }

  std::string str() const;

 private:
  ShapePtr shape_;
  BlockMap g_;
};

/// A functional on the algebra given by per-block weights W (possibly on
/// infinitely many blocks): f(a) = sum_iota tr(W_iota a_iota). It is only
/// evaluated on finitely supported elements.
class RawFunctional {
 public:
  explicit RawFunctional(Multiplier weights) : w_(std::move(weights)) {}
  /// f(a) = sum of all matrix entries of a.
  static RawFunctional sum_of_entries(const ShapePtr& shape);

  const ShapePtr& shape() const noexcept { return w_.shape(); }
  const Multiplier& weights() const noexcept { return w_; }
  Matrix weight(const BlockIndex& b) const { return w_.block(b); }
  Scalar operator()(const FiniteElement& a) const;

 private:
  Multiplier w_;
};

/// (a f b)(m) = f(b m a).
ReducedFunctional reduce(const FiniteElement& a, const RawFunctional& f, const FiniteElement& b);

/// Product functional on pairs of blocks: (zeta (x) xi) has weight G_beta (x) G_iota at (beta, iota).
class TensorFunctional {
 public:
  TensorFunctional(ReducedFunctional left, ReducedFunctional right);
  const ReducedFunctional& left() const noexcept { return l_; }
  const ReducedFunctional& right() const noexcept { return r_; }
  Matrix weight(const BlockIndex& b, const BlockIndex& i) const;
  /// Sum over the support of tr(weight * block(beta, iota)).
  template <class BlockFn>
  Scalar evaluate(BlockFn&& block) const {
    Scalar total(0);
    for (const auto& [b, gb] : l_.blocks())
      for (const auto& [i, gi] : r_.blocks()) total += (kron(gb, gi) * block(b, i)).trace();
    return total;
  }

 private:
  ReducedFunctional l_, r_;
};

TensorFunctional tensor(const ReducedFunctional& zeta, const ReducedFunctional& xi);

enum class Side { left, right };

struct InvariantFunctional {
  Side side = Side::left;
  RawFunctional weights{Multiplier(nullptr)};
  Window window;                      // last window the equations were solved on
  std::vector<std::size_t> nullity;   // solution-space dimension per explored window
};

/// Solves the invariance equations on growing windows starting at F, normalized
/// so the weight at the trivial block is 1. Throws ModelError when no nonzero
/// solution exists.
InvariantFunctional solve_invariant(const ModelPtr& model, const Window& f, Side side);

/// psi = phi o kappa, with weight (R^-1 W_partner R)^T at each block.
RawFunctional compose_antipode(const ModelPtr& model, const RawFunctional& phi);

/// b |-> phi(b a) as a reduced functional.
ReducedFunctional dual_element(const InvariantFunctional& phi, const FiniteElement& a);

}  // namespace dqg
