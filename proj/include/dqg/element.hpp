#pragma once

#include <map>
#include <string>

#include "dqg/block.hpp"
#include "dqg/matrix.hpp"
#include "dqg/tail.hpp"

namespace dqg {

using BlockMap = std::map<BlockIndex, Matrix>;

/// Finitely supported element of the block algebra. Zero blocks are never stored.
class FiniteElement {
 public:
  explicit FiniteElement(ShapePtr shape) : shape_(std::move(shape)) {}
  /// Validates block sizes against the shape and drops zero blocks.
  FiniteElement(ShapePtr shape, BlockMap blocks);

  const ShapePtr& shape() const noexcept { return shape_; }
  const BlockMap& blocks() const noexcept { return blocks_; }
  bool is_zero() const noexcept { return blocks_.empty(); }
  Window support() const;
  /// The stored block, or the zero matrix of the right size.
  Matrix block(const BlockIndex& b) const;

  FiniteElement& operator+=(const FiniteElement& o);
  FiniteElement& operator*=(const Scalar& s);
  friend FiniteElement operator+(FiniteElement a, const FiniteElement& b) { return a += b; }
  friend FiniteElement operator-(FiniteElement a, const FiniteElement& b) { return a += -b; }
  friend FiniteElement operator*(FiniteElement a, const Scalar& s) { return a *= s; }
  friend FiniteElement operator*(const FiniteElement& a, const FiniteElement& b);
  FiniteElement operator-() const;
  FiniteElement adjoint() const;

  friend bool operator==(const FiniteElement& a, const FiniteElement& b) { return a.blocks_ == b.blocks_; }

 private:
  ShapePtr shape_;
  BlockMap blocks_;
};

/// Element of the full block product: an explicit finite family of blocks plus
/// a tail rule that supplies every other block. The explicit part only stores
/// blocks that differ from the tail, so equality is structural.
class Multiplier {
 public:
  explicit Multiplier(ShapePtr shape) : shape_(std::move(shape)) {}
  Multiplier(ShapePtr shape, BlockMap explicit_blocks, TailRule tail = {});

  static Multiplier identity(ShapePtr shape);
  static Multiplier scalar(ShapePtr shape, const Scalar& s);
  /// Lattice shapes only: the character g |-> lambda^g.
  static Multiplier character(ShapePtr shape, TailRule::Base lambda);
  static Multiplier from_tail(ShapePtr shape, TailRule tail);

  const ShapePtr& shape() const noexcept { return shape_; }
  const BlockMap& explicit_blocks() const noexcept { return explicit_; }
  const TailRule& tail() const noexcept { return tail_; }
  bool is_finitely_supported() const noexcept { return tail_.is_zero(); }
  bool is_zero() const noexcept { return explicit_.empty() && tail_.is_zero(); }

  /// m e_b; throws UnknownBlockError outside the shape.
  Matrix block(const BlockIndex& b) const;
  /// The value the tail rule assigns to block b.
  Matrix tail_block(const BlockIndex& b) const;
  /// Blocks where the explicit part differs from the tail.
  Window explicit_support() const;

  Multiplier& operator+=(const Multiplier& o);
  Multiplier& operator*=(const Scalar& s);
  friend Multiplier operator+(Multiplier a, const Multiplier& b) { return a += b; }
  friend Multiplier operator-(Multiplier a, const Multiplier& b) { return a += -b; }
  friend Multiplier operator*(Multiplier a, const Scalar& s) { return a *= s; }
  friend Multiplier operator*(const Scalar& s, Multiplier a) { return a *= s; }
  friend Multiplier operator*(const Multiplier& a, const Multiplier& b);
  Multiplier operator-() const;
  Multiplier adjoint() const;

  /// Finite element with the same blocks; throws if the tail is nonzero.
  FiniteElement to_finite() const;

  friend bool operator==(const Multiplier& a, const Multiplier& b) {
    return a.tail_ == b.tail_ && a.explicit_ == b.explicit_;
  }

  std::string str() const;

 private:
  void canonicalize();

  ShapePtr shape_;
  BlockMap explicit_;
  TailRule tail_;
};

Multiplier embed(const FiniteElement& a);
Multiplier operator*(const FiniteElement& a, const Multiplier& m);
Multiplier operator*(const Multiplier& m, const FiniteElement& a);

/// e_F: identity in every block of F. Throws on empty F.
FiniteElement central_idempotent(const ShapePtr& shape, const Window& f);
bool equal_on_window(const Multiplier& x, const Multiplier& y, const Window& f);

/// Matrix unit E_{r,c} in block b.
FiniteElement matrix_unit(const ShapePtr& shape, const BlockIndex& b, std::size_t r, std::size_t c);
/// Identity of block b.
FiniteElement block_unit(const ShapePtr& shape, const BlockIndex& b);

}  // namespace dqg
