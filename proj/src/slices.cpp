#include "dqg/slices.hpp"

#include <set>

#include "dqg/error.hpp"

namespace dqg {

TensorMultiplier::TensorMultiplier(ShapePtr left, ShapePtr right) : left_(std::move(left)), right_(std::move(right)) {}

TensorMultiplier TensorMultiplier::coproduct(const ModelPtr& model, const Multiplier& x) {
  if (!x.shape()->same_as(*model->shape())) throw ShapeError("element does not belong to the model");
  TensorMultiplier t(model->shape(), model->shape());
  t.coproducts_.push_back({model, x});
  return t;
}

TensorMultiplier TensorMultiplier::elementary(const Multiplier& x, const Multiplier& y) {
  TensorMultiplier t(x.shape(), y.shape());
  t.elementary_.push_back({x, y});
  return t;
}

TensorMultiplier TensorMultiplier::from_blocks(ShapePtr left, ShapePtr right, PairMap blocks) {
  TensorMultiplier t(std::move(left), std::move(right));
  for (auto& [p, m] : blocks) {
    const std::size_t n = t.left_->dim(p.first) * t.right_->dim(p.second);
    if (m.rows() != n || m.cols() != n) throw ShapeError("tensor block at (" + p.first.str() + ", " + p.second.str() + ") has wrong size");
    if (!m.is_zero()) t.explicit_.emplace(p, std::move(m));
  }
  return t;
}

Matrix TensorMultiplier::block(const BlockIndex& beta, const BlockIndex& iota) const {
  const std::size_t n = left_->dim(beta) * right_->dim(iota);
  Matrix out(n, n);
  const auto it = explicit_.find({beta, iota});
  if (it != explicit_.end()) out += it->second;
  for (const auto& t : coproducts_) out += t.model->coproduct_block(t.x, beta, iota);
  for (const auto& t : elementary_) out += kron(t.x.block(beta), t.y.block(iota));
  return out;
}

TensorMultiplier& TensorMultiplier::operator+=(const TensorMultiplier& o) {
  if (!left_->same_as(*o.left_) || !right_->same_as(*o.right_)) throw ShapeError("tensor multipliers on different shapes");
  for (const auto& [p, m] : o.explicit_) {
    auto [it, inserted] = explicit_.try_emplace(p, m);
    if (!inserted) {
      it->second += m;
      if (it->second.is_zero()) explicit_.erase(it);
    }
  }
  coproducts_.insert(coproducts_.end(), o.coproducts_.begin(), o.coproducts_.end());
  elementary_.insert(elementary_.end(), o.elementary_.begin(), o.elementary_.end());
  return *this;
}

TensorMultiplier& TensorMultiplier::operator*=(const Scalar& s) {
  for (auto& [p, m] : explicit_) m *= s;
  for (auto& t : coproducts_) t.x *= s;
  for (auto& t : elementary_) t.x *= s;
  if (s.is_zero()) explicit_.clear();
  return *this;
}

namespace {

// Weight of a functional on a lattice block (always 1x1).
Scalar lattice_weight(const Matrix& g) { return g(0, 0); }

}  // namespace

Multiplier right_slice(const TensorMultiplier& y, const ReducedFunctional& xi) {
  if (!xi.shape()->same_as(*y.right_)) throw ShapeError("functional does not live on the second factor");
  const ShapePtr& shape = y.left_;
  auto block_at = [&](const BlockIndex& beta) {
    const std::size_t n = shape->dim(beta);
    Matrix m(n, n);
    for (const auto& [iota, g] : xi.blocks()) m += partial_trace_second(y.block(beta, iota), g, n);
    return m;
  };
  BlockMap blocks;
  if (shape->is_finite()) {
    for (const auto& b : shape->blocks()) blocks.emplace(b, block_at(b));
    return Multiplier(shape, std::move(blocks));
  }
  // Lattice first factor: assemble the tail and the finitely many blocks where it can differ.
  TailRule tail;
  std::set<BlockIndex> candidates;
  for (const auto& [p, m] : y.explicit_)
    if (xi.blocks().count(p.second)) candidates.insert(p.first);
  for (const auto& t : y.elementary_) {
    TailRule part = t.x.tail();
    part *= xi(t.y);
    tail += part;
    for (const auto& b : t.x.explicit_support()) candidates.insert(b);
  }
  for (const auto& t : y.coproducts_) {
    for (const auto& [iota, g] : xi.blocks()) {
      TailRule part = t.x.tail().shift(iota);
      part *= lattice_weight(g);
      tail += part;
      for (const auto& s : t.x.explicit_support()) candidates.insert(s - iota);
    }
    for (const auto& [p, target] : t.model->overrides())
      if (xi.blocks().count(p.second)) candidates.insert(p.first);
  }
  for (const auto& b : candidates) blocks.emplace(b, block_at(b));
  return Multiplier(shape, std::move(blocks), std::move(tail));
}

Multiplier left_slice(const ReducedFunctional& zeta, const TensorMultiplier& y) {
  if (!zeta.shape()->same_as(*y.left_)) throw ShapeError("functional does not live on the first factor");
  const ShapePtr& shape = y.right_;
  auto block_at = [&](const BlockIndex& iota) {
    const std::size_t n = shape->dim(iota);
    Matrix m(n, n);
    for (const auto& [beta, g] : zeta.blocks()) m += partial_trace_first(y.block(beta, iota), g, n);
    return m;
  };
  BlockMap blocks;
  if (shape->is_finite()) {
    for (const auto& b : shape->blocks()) blocks.emplace(b, block_at(b));
    return Multiplier(shape, std::move(blocks));
  }
  TailRule tail;
  std::set<BlockIndex> candidates;
  for (const auto& [p, m] : y.explicit_)
    if (zeta.blocks().count(p.first)) candidates.insert(p.second);
  for (const auto& t : y.elementary_) {
    TailRule part = t.y.tail();
    part *= zeta(t.x);
    tail += part;
    for (const auto& b : t.y.explicit_support()) candidates.insert(b);
  }
  for (const auto& t : y.coproducts_) {
    for (const auto& [beta, g] : zeta.blocks()) {
      TailRule part = t.x.tail().shift(beta);
      part *= lattice_weight(g);
      tail += part;
      for (const auto& s : t.x.explicit_support()) candidates.insert(s - beta);
    }
    for (const auto& [p, target] : t.model->overrides())
      if (zeta.blocks().count(p.first)) candidates.insert(p.second);
  }
  for (const auto& b : candidates) blocks.emplace(b, block_at(b));
  return Multiplier(shape, std::move(blocks), std::move(tail));
}

FiniteElement slice_times(const TensorMultiplier& y, const FiniteElement& a, const RawFunctional& f,
                          const FiniteElement& c, const FiniteElement& b2) {
  BlockMap out;
  for (const auto& [beta, bb] : b2.blocks()) {
    const std::size_t n = bb.rows();
    Matrix m(n, n);
    for (const auto& [iota, ai] : a.blocks()) {
      const auto ci = c.blocks().find(iota);
      if (ci == c.blocks().end()) continue;
      const Matrix z = kron(Matrix::identity(n), ci->second) * y.block(beta, iota) * kron(bb, ai);
      m += partial_trace_second(z, f.weight(iota), n);
    }
    out.emplace(beta, std::move(m));
  }
  return FiniteElement(b2.shape(), std::move(out));
}

FiniteElement times_slice(const FiniteElement& b1, const TensorMultiplier& y, const FiniteElement& a,
                          const RawFunctional& f, const FiniteElement& c) {
  BlockMap out;
  for (const auto& [beta, bb] : b1.blocks()) {
    const std::size_t n = bb.rows();
    Matrix m(n, n);
    for (const auto& [iota, ai] : a.blocks()) {
      const auto ci = c.blocks().find(iota);
      if (ci == c.blocks().end()) continue;
      const Matrix z = kron(bb, ci->second) * y.block(beta, iota) * kron(Matrix::identity(n), ai);
      m += partial_trace_second(z, f.weight(iota), n);
    }
    out.emplace(beta, std::move(m));
  }
  return FiniteElement(b1.shape(), std::move(out));
}

}  // namespace dqg
