#pragma once

// Hand-rolled generators shared by the unit and acceptance tests. Every
// generator draws from a caller-owned std::mt19937_64 with a fixed seed.

#include <random>

#include "dqg/functionals.hpp"
#include "dqg/model.hpp"
#include "dqg/slices.hpp"

namespace dqg::gen {

inline int integer(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Matrix matrix(std::mt19937_64& rng, std::size_t n, int range = 3) {
  Matrix x(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x(i, j) = Scalar(integer(rng, -range, range));
  return x;
}

/// Random block index in the ball of the given radius.
inline BlockIndex block(std::mt19937_64& rng, const ShapePtr& shape, int radius) {
  if (shape->is_finite()) {
    const auto& bs = shape->blocks();
    return bs[static_cast<std::size_t>(integer(rng, 0, static_cast<int>(bs.size()) - 1))];
  }
  std::vector<std::int32_t> c(shape->lattice_rank());
  for (auto& v : c) v = integer(rng, -radius, radius);
  return BlockIndex::from_coords(c);
}

/// Element supported on at most `count` random blocks of the ball.
inline FiniteElement element(std::mt19937_64& rng, const ShapePtr& shape, int radius, int count) {
  BlockMap blocks;
  for (int k = 0; k < count; ++k) {
    const BlockIndex b = block(rng, shape, radius);
    blocks[b] = matrix(rng, shape->dim(b));
  }
  return FiniteElement(shape, blocks);
}

/// Element with a random matrix on every block of the window.
inline FiniteElement element_on(std::mt19937_64& rng, const ShapePtr& shape, const Window& w) {
  BlockMap blocks;
  for (const auto& b : w) blocks[b] = matrix(rng, shape->dim(b));
  return FiniteElement(shape, blocks);
}

/// Random tail: a combination of characters with small bases, optionally times a monomial.
inline TailRule tail(std::mt19937_64& rng, unsigned rank) {
  static const std::vector<Scalar> bases{Scalar(1), Scalar(2), Scalar(-1), Scalar(3), Scalar::rational(1, 2)};
  TailRule t;
  const int terms = integer(rng, 1, 2);
  for (int k = 0; k < terms; ++k) {
    TailRule::Base lambda(rank);
    for (auto& l : lambda) l = bases[static_cast<std::size_t>(integer(rng, 0, static_cast<int>(bases.size()) - 1))];
    TailRule part = TailRule::character(lambda);
    if (integer(rng, 0, 2) == 0) part = part * (TailRule::monomial(rank, static_cast<unsigned>(integer(rng, 0, static_cast<int>(rank) - 1)), 1));
    part *= Scalar(integer(rng, 1, 3));
    t += part;
  }
  return t;
}

/// Random multiplier: finite models get a full random element; lattices a tail plus a few explicit blocks.
inline Multiplier multiplier(std::mt19937_64& rng, const ShapePtr& shape) {
  if (shape->is_finite()) return embed(element_on(rng, shape, shape->ball(0)));
  Multiplier m = Multiplier::from_tail(shape, tail(rng, shape->lattice_rank()));
  return m + embed(element(rng, shape, 4, 2));
}

inline ReducedFunctional functional(std::mt19937_64& rng, const ShapePtr& shape, int radius = 3, int count = 2) {
  BlockMap g;
  for (int k = 0; k < count; ++k) {
    const BlockIndex b = block(rng, shape, radius);
    g[b] = matrix(rng, shape->dim(b));
  }
  return ReducedFunctional(shape, g);
}

inline RawFunctional raw_functional(std::mt19937_64& rng, const ShapePtr& shape) {
  if (shape->is_finite()) return RawFunctional(embed(element_on(rng, shape, shape->ball(0))));
  return RawFunctional(Multiplier::scalar(shape, Scalar(integer(rng, 1, 3))) + embed(element(rng, shape, 3, 2)));
}

/// delta(x) plus an elementary tensor plus an explicit pair block.
inline TensorMultiplier tensor_multiplier(std::mt19937_64& rng, const ModelPtr& model) {
  const ShapePtr& s = model->shape();
  TensorMultiplier y = TensorMultiplier::coproduct(model, multiplier(rng, s));
  y += TensorMultiplier::elementary(multiplier(rng, s), multiplier(rng, s));
  const BlockIndex b = block(rng, s, 3), i = block(rng, s, 3);
  y += TensorMultiplier::from_blocks(s, s, {{{b, i}, matrix(rng, s->dim(b) * s->dim(i))}});
  return y;
}

}  // namespace dqg::gen
