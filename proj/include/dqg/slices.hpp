#pragma once

#include <map>
#include <vector>

#include "dqg/functionals.hpp"
#include "dqg/model.hpp"

namespace dqg {

using PairMap = std::map<BlockPair, Matrix>;

/// Multiplier of B (x) A, stored as a finite explicit part plus coproduct terms
/// delta(x) and elementary tensors x (x) y. Block (beta, iota) lives in
/// M_{n_beta} (x) M_{n_iota}.
class TensorMultiplier {
 public:
  TensorMultiplier(ShapePtr left, ShapePtr right);

  /// delta(x) on the model's pair shape.
  static TensorMultiplier coproduct(const ModelPtr& model, const Multiplier& x);
  static TensorMultiplier elementary(const Multiplier& x, const Multiplier& y);
  static TensorMultiplier from_blocks(ShapePtr left, ShapePtr right, PairMap blocks);

  const ShapePtr& left_shape() const noexcept { return left_; }
  const ShapePtr& right_shape() const noexcept { return right_; }
  Matrix block(const BlockIndex& beta, const BlockIndex& iota) const;

  TensorMultiplier& operator+=(const TensorMultiplier& o);
  TensorMultiplier& operator*=(const Scalar& s);
  friend TensorMultiplier operator+(TensorMultiplier a, const TensorMultiplier& b) { return a += b; }
  friend TensorMultiplier operator*(TensorMultiplier a, const Scalar& s) { return a *= s; }

  friend Multiplier right_slice(const TensorMultiplier& y, const ReducedFunctional& xi);
  friend Multiplier left_slice(const ReducedFunctional& zeta, const TensorMultiplier& y);

 private:
  struct CoproductTerm {
    ModelPtr model;
    Multiplier x;
  };
  struct ElementaryTerm {
    Multiplier x, y;
  };
  ShapePtr left_, right_;
  PairMap explicit_;
  std::vector<CoproductTerm> coproducts_;
  std::vector<ElementaryTerm> elementary_;
};

/// (id (x) xi)(Y): the unique m with zeta(m) = (zeta (x) xi)(Y) for all reduced zeta.
Multiplier right_slice(const TensorMultiplier& y, const ReducedFunctional& xi);
/// (zeta (x) id)(Y).
Multiplier left_slice(const ReducedFunctional& zeta, const TensorMultiplier& y);

/// The two multiplication formulas defining m = (id (x) afc)(Y) on B:
/// m b2 = (id (x) f)((1 (x) c) Y (b2 (x) a)) and b1 m = (id (x) f)((b1 (x) c) Y (1 (x) a)).
FiniteElement slice_times(const TensorMultiplier& y, const FiniteElement& a, const RawFunctional& f,
                          const FiniteElement& c, const FiniteElement& b2);
FiniteElement times_slice(const FiniteElement& b1, const TensorMultiplier& y, const FiniteElement& a,
                          const RawFunctional& f, const FiniteElement& c);

}  // namespace dqg
