#include "support.hpp"

#include <random>

#include "dqg/element.hpp"
#include "dqg/error.hpp"

using namespace dqg;

namespace {

const ShapePtr& Z() {
  static const ShapePtr s = BlockShape::lattice(1);
  return s;
}

BlockIndex at(int n) { return BlockIndex(n); }

Multiplier delta(int n) { return embed(FiniteElement(Z(), {{at(n), Matrix{{1}}}})); }

Multiplier chr(long l) { return Multiplier::character(Z(), {Scalar(l)}); }

Multiplier random_lattice_multiplier(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  BlockMap blocks;
  for (int k = 0; k < 3; ++k) blocks[at(d(rng))] = Matrix{{Scalar(d(rng))}};
  TailRule t = TailRule::character({Scalar(1 + std::abs(d(rng)))}) * Scalar(d(rng));
  if (d(rng) > 0) t += TailRule::monomial(1, 0, 1) * Scalar(d(rng));
  return Multiplier(Z(), blocks, t);
}

Multiplier random_finite_multiplier(std::mt19937_64& rng, const ShapePtr& s) {
  std::uniform_int_distribution<int> d(-3, 3);
  BlockMap blocks;
  for (const auto& b : s->blocks()) {
    const std::size_t n = s->dim(b);
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Scalar(d(rng)) + Scalar(d(rng)) * Scalar::root_of_unity(3, 1);
    blocks[b] = m;
  }
  return Multiplier(s, blocks);
}

}  // namespace

TEST_CASE("embedding and block extraction") {
  const Multiplier d0 = delta(0);
  CHECK(d0.block(at(0)) == Matrix{{1}});
  CHECK(d0.block(at(7)) == Matrix{{0}});
  CHECK(delta(5).block(at(4)).is_zero());
  CHECK(chr(2).block(at(3)) == Matrix{{8}});
  CHECK(chr(2).block(at(-2)) == Matrix{{Scalar::rational(1, 4)}});
  CHECK(Multiplier::identity(Z()).block(at(-9)) == Matrix{{1}});
  CHECK_THROWS_AS(chr(2).block(BlockIndex{1, 2}), UnknownBlockError);

  const Window f({at(-1), at(0), at(1)});
  CHECK(embed(central_idempotent(Z(), f)) == delta(-1) + delta(0) + delta(1));

  const ShapePtr s3 = BlockShape::finite({1, 1, 2});
  const FiniteElement u = block_unit(s3, at(2));
  CHECK(embed(u).block(at(2)) == Matrix::identity(2));
  CHECK(embed(u).block(at(0)) == Matrix{{0}});
  CHECK_THROWS_AS(FiniteElement(s3, {{at(2), Matrix{{1}}}}), ShapeError);
}

TEST_CASE("multiplication examples") {
  CHECK(chr(2) * chr(3) == chr(6));
  CHECK(chr(2) * delta(0) == delta(0));
  CHECK(chr(2) * delta(3) == delta(3) * Scalar(8));
  const Window f({at(0), at(1), at(2)});
  const FiniteElement e = central_idempotent(Z(), f);
  const Multiplier m = chr(2) + delta(9);
  const Multiplier trunc = e * m * e;
  CHECK(trunc.is_finitely_supported());
  CHECK(trunc == delta(0) + delta(1) * Scalar(2) + delta(2) * Scalar(4));
}

TEST_CASE("adjoint examples") {
  const Scalar i = Scalar::root_of_unity(4, 1);
  const Multiplier c = Multiplier::character(Z(), {Scalar(2) + i});
  CHECK(c.adjoint() == Multiplier::character(Z(), {Scalar(2) - i}));
  const FiniteElement e = central_idempotent(Z(), Window({at(0), at(4)}));
  CHECK(e.adjoint() == e);
  const ShapePtr s3 = BlockShape::finite({1, 1, 2});
  const Multiplier x(s3, {{at(2), Matrix{{1, i}, {2, 3}}}});
  CHECK(x.adjoint().block(at(2)) == Matrix{{1, 2}, {-i, 3}});
}

TEST_CASE("central idempotents") {
  CHECK(central_idempotent(Z(), Window({at(0)})) == FiniteElement(Z(), {{at(0), Matrix{{1}}}}));
  const Window f({at(0), at(1), at(2)}), g({at(2), at(3)});
  CHECK(central_idempotent(Z(), f) * central_idempotent(Z(), g) == central_idempotent(Z(), intersect(f, g)));
  CHECK_THROWS(central_idempotent(Z(), Window()));
  const ShapePtr s3 = BlockShape::finite({1, 1, 2});
  const FiniteElement one = central_idempotent(s3, s3->ball(0));
  CHECK(embed(one) == Multiplier::identity(s3));
  std::size_t dim = 0;
  for (const auto& [b, m] : one.blocks()) dim += m.rows();
  CHECK(dim == 4);
  CHECK(s3->algebra_dimension() == 6);
}

TEST_CASE("equality on windows") {
  const Multiplier x = chr(2), y = chr(2) + delta(9);
  CHECK(equal_on_window(x, y, Z()->box(0, 5)));
  CHECK_FALSE(equal_on_window(x, y, Z()->box(0, 9)));
  CHECK(equal_on_window(y, y, Z()->box(-20, 20)));
}

TEST_CASE("tail rules") {
  const TailRule g = TailRule::monomial(1, 0, 1);
  const TailRule two = TailRule::character({Scalar(2)});
  const TailRule f = g * two;  // g 2^g
  CHECK(f.evaluate(at(3)) == Scalar(24));
  CHECK(f.reflect().evaluate(at(3)) == f.evaluate(at(-3)));
  CHECK(f.shift(at(2)).evaluate(at(5)) == f.evaluate(at(7)));
  CHECK(f.shift(at(-3)).evaluate(at(-1)) == f.evaluate(at(-4)));
  CHECK((f - f).is_zero());
  CHECK((f - f) == TailRule());
  const ShapePtr z2 = BlockShape::lattice(2);
  const TailRule h = TailRule::monomial(2, 0, 2) * TailRule::monomial(2, 1, 1) *
                     TailRule::character({Scalar(3), Scalar::rational(1, 2)});
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      CHECK(h.shift(BlockIndex{1, -2}).evaluate(BlockIndex{a, b}) == h.evaluate(BlockIndex{a + 1, b - 2}));
      CHECK(h.reflect().evaluate(BlockIndex{a, b}) == h.evaluate(BlockIndex{-a, -b}));
    }
}

TEST_CASE("blockwise product and module associativity properties") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> pick(-6, 6);
  for (int t = 0; t < 200; ++t) {
    const Multiplier x = random_lattice_multiplier(rng), y = random_lattice_multiplier(rng);
    const BlockIndex b = at(pick(rng));
    CHECK((x * y).block(b) == x.block(b) * y.block(b));
    CHECK((x * y).adjoint() == y.adjoint() * x.adjoint());
    CHECK(x.adjoint().adjoint() == x);
  }
  const ShapePtr s3 = BlockShape::finite({1, 1, 2});
  for (int t = 0; t < 200; ++t) {
    const Multiplier x = random_finite_multiplier(rng, s3), y = random_finite_multiplier(rng, s3);
    const BlockIndex b = at(t % 3);
    CHECK((x * y).block(b) == x.block(b) * y.block(b));
    CHECK((x * y).adjoint() == y.adjoint() * x.adjoint());
  }
  for (int t = 0; t < 50; ++t) {
    const Multiplier m = random_lattice_multiplier(rng);
    const FiniteElement b1 = (delta(pick(rng)) * Scalar(2) + delta(pick(rng))).to_finite();
    const FiniteElement b2 = (delta(pick(rng)) - delta(pick(rng))).to_finite();
    CHECK((b1 * m) * b2 == b1 * (m * b2));
    CHECK((b1 * m).is_finitely_supported());
    CHECK((m * b2).is_finitely_supported());
    CHECK(embed(b1 * b2) == embed(b1) * embed(b2));
    CHECK(embed(b1.adjoint()) == embed(b1).adjoint());
  }
}
