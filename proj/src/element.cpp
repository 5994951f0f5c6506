#include "dqg/element.hpp"

#include <vector>

#include "dqg/error.hpp"

namespace dqg {

namespace {

void check_block(const BlockShape& shape, const BlockIndex& b, const Matrix& m) {
  const std::size_t n = shape.dim(b);
  if (m.rows() != n || m.cols() != n) {
    throw ShapeError("block " + b.str() + " must be " + std::to_string(n) + "x" + std::to_string(n));
  }
}

void check_same_shape(const ShapePtr& a, const ShapePtr& b) {
  if (!a->same_as(*b)) throw ShapeError("operands live on different block shapes");
}

}  // namespace

FiniteElement::FiniteElement(ShapePtr shape, BlockMap blocks) : shape_(std::move(shape)) {
  for (auto& [b, m] : blocks) {
    check_block(*shape_, b, m);
    if (!m.is_zero()) blocks_.emplace(b, std::move(m));
  }
}

Window FiniteElement::support() const {
  std::vector<BlockIndex> v;
  for (const auto& [b, m] : blocks_) v.push_back(b);
  return Window(std::move(v));
}

Matrix FiniteElement::block(const BlockIndex& b) const {
  const std::size_t n = shape_->dim(b);
  const auto it = blocks_.find(b);
  return it == blocks_.end() ? Matrix(n, n) : it->second;
}

FiniteElement& FiniteElement::operator+=(const FiniteElement& o) {
  check_same_shape(shape_, o.shape_);
  for (const auto& [b, m] : o.blocks_) {
    auto [it, inserted] = blocks_.try_emplace(b, m);
    if (!inserted) {
      it->second += m;
      if (it->second.is_zero()) blocks_.erase(it);
    }
  }
  return *this;
}

FiniteElement& FiniteElement::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    blocks_.clear();
    return *this;
  }
  for (auto& [b, m] : blocks_) m *= s;
  return *this;
}

FiniteElement operator*(const FiniteElement& a, const FiniteElement& b) {
  check_same_shape(a.shape_, b.shape_);
  FiniteElement r(a.shape_);
  for (const auto& [k, m] : a.blocks_) {
    const auto it = b.blocks_.find(k);
    if (it == b.blocks_.end()) continue;
    Matrix p = m * it->second;
    if (!p.is_zero()) r.blocks_.emplace(k, std::move(p));
  }
  return r;
}

FiniteElement FiniteElement::operator-() const { return FiniteElement(*this) *= Scalar(-1); }

FiniteElement FiniteElement::adjoint() const {
  FiniteElement r(shape_);
  for (const auto& [b, m] : blocks_) r.blocks_.emplace(b, m.adjoint());
  return r;
}

Multiplier::Multiplier(ShapePtr shape, BlockMap explicit_blocks, TailRule tail)
    : shape_(std::move(shape)), explicit_(std::move(explicit_blocks)), tail_(std::move(tail)) {
  if (shape_->is_finite() && !tail_.is_zero()) {
    throw UnsupportedTailError("finite shapes carry every block explicitly");
  }
  if (!tail_.is_zero() && tail_.rank() != shape_->lattice_rank()) {
    throw ShapeError("tail rule rank does not match the lattice");
  }
  for (const auto& [b, m] : explicit_) check_block(*shape_, b, m);
  canonicalize();
}

void Multiplier::canonicalize() {
  for (auto it = explicit_.begin(); it != explicit_.end();) {
    if (it->second == tail_block(it->first)) {
      it = explicit_.erase(it);
    } else {
      ++it;
    }
  }
}

Multiplier Multiplier::identity(ShapePtr shape) { return scalar(std::move(shape), Scalar(1)); }

Multiplier Multiplier::scalar(ShapePtr shape, const Scalar& s) {
  if (shape->is_lattice()) {
    const unsigned r = shape->lattice_rank();
    return Multiplier(std::move(shape), {}, TailRule::constant(r, s));
  }
  BlockMap blocks;
  for (const auto& b : shape->blocks()) blocks.emplace(b, Matrix::scalar(shape->dim(b), s));
  return Multiplier(std::move(shape), std::move(blocks));
}

Multiplier Multiplier::character(ShapePtr shape, TailRule::Base lambda) {
  if (!shape->is_lattice() || lambda.size() != shape->lattice_rank()) {
    throw ShapeError("characters need a lattice shape of matching rank");
  }
  return Multiplier(std::move(shape), {}, TailRule::character(std::move(lambda)));
}

Multiplier Multiplier::from_tail(ShapePtr shape, TailRule tail) {
  return Multiplier(std::move(shape), {}, std::move(tail));
}

Matrix Multiplier::tail_block(const BlockIndex& b) const {
  const std::size_t n = shape_->dim(b);
  if (tail_.is_zero()) return Matrix(n, n);
  return Matrix::scalar(1, tail_.evaluate(b));
}

Matrix Multiplier::block(const BlockIndex& b) const {
  const auto it = explicit_.find(b);
  if (it != explicit_.end()) return it->second;
  return tail_block(b);
}

Window Multiplier::explicit_support() const {
  std::vector<BlockIndex> v;
  for (const auto& [b, m] : explicit_) v.push_back(b);
  return Window(std::move(v));
}

Multiplier& Multiplier::operator+=(const Multiplier& o) {
  check_same_shape(shape_, o.shape_);
  BlockMap sum;
  for (const auto& [b, m] : explicit_) sum.emplace(b, m + o.block(b));
  for (const auto& [b, m] : o.explicit_) {
    if (!sum.contains(b)) sum.emplace(b, block(b) + m);
  }
  tail_ += o.tail_;
  explicit_ = std::move(sum);
  canonicalize();
  return *this;
}

Multiplier& Multiplier::operator*=(const Scalar& s) {
  for (auto& [b, m] : explicit_) m *= s;
  tail_ *= s;
  if (s.is_zero()) explicit_.clear();
  return *this;
}

Multiplier operator*(const Multiplier& a, const Multiplier& b) {
  check_same_shape(a.shape_, b.shape_);
  BlockMap prod;
  for (const auto& [k, m] : a.explicit_) prod.emplace(k, m * b.block(k));
  for (const auto& [k, m] : b.explicit_) {
    if (!prod.contains(k)) prod.emplace(k, a.block(k) * m);
  }
  return Multiplier(a.shape_, std::move(prod), a.tail_ * b.tail_);
}

Multiplier Multiplier::operator-() const { return Multiplier(*this) *= Scalar(-1); }

Multiplier Multiplier::adjoint() const {
  BlockMap adj;
  for (const auto& [b, m] : explicit_) adj.emplace(b, m.adjoint());
  return Multiplier(shape_, std::move(adj), tail_.conj());
}

FiniteElement Multiplier::to_finite() const {
  if (!tail_.is_zero()) throw UnsupportedTailError("multiplier is not finitely supported");
  return FiniteElement(shape_, explicit_);
}

std::string Multiplier::str() const {
  std::string s;
  for (const auto& [b, m] : explicit_) {
    if (!s.empty()) s += "; ";
    s += b.str() + ": " + m.str();
  }
  if (!tail_.is_zero()) {
    if (!s.empty()) s += "; ";
    s += "tail: " + tail_.str();
  }
  return s.empty() ? "0" : s;
}

Multiplier embed(const FiniteElement& a) { return Multiplier(a.shape(), a.blocks()); }

Multiplier operator*(const FiniteElement& a, const Multiplier& m) {
  check_same_shape(a.shape(), m.shape());
  BlockMap prod;
  for (const auto& [b, x] : a.blocks()) prod.emplace(b, x * m.block(b));
  return Multiplier(a.shape(), std::move(prod));
}

Multiplier operator*(const Multiplier& m, const FiniteElement& a) {
  check_same_shape(a.shape(), m.shape());
  BlockMap prod;
  for (const auto& [b, x] : a.blocks()) prod.emplace(b, m.block(b) * x);
  return Multiplier(a.shape(), std::move(prod));
}

FiniteElement central_idempotent(const ShapePtr& shape, const Window& f) {
  if (f.empty()) throw Error("central idempotent of an empty window");
  BlockMap blocks;
  for (const auto& b : f) blocks.emplace(b, Matrix::identity(shape->dim(b)));
  return FiniteElement(shape, std::move(blocks));
}

bool equal_on_window(const Multiplier& x, const Multiplier& y, const Window& f) {
  for (const auto& b : f) {
    if (x.block(b) != y.block(b)) return false;
  }
  return true;
}

FiniteElement matrix_unit(const ShapePtr& shape, const BlockIndex& b, std::size_t r, std::size_t c) {
  const std::size_t n = shape->dim(b);
  if (r >= n || c >= n) throw ShapeError("matrix unit index out of range");
  return FiniteElement(shape, {{b, Matrix::unit(n, r, c)}});
}

FiniteElement block_unit(const ShapePtr& shape, const BlockIndex& b) {
  return FiniteElement(shape, {{b, Matrix::identity(shape->dim(b))}});
}

}  // namespace dqg
