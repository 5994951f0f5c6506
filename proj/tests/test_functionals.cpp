#include "support.hpp"

#include <random>

#include "dqg/builders.hpp"
#include "dqg/error.hpp"
#include "dqg/functionals.hpp"

using namespace dqg;

namespace {

BlockIndex at(int n) { return BlockIndex(n); }

Matrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-3, 3);
  Matrix x(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x(i, j) = Scalar(d(rng));
  return x;
}

FiniteElement random_element(std::mt19937_64& rng, const ShapePtr& shape, const Window& w) {
  BlockMap blocks;
  for (const auto& b : w) blocks[b] = random_matrix(rng, shape->dim(b));
  return FiniteElement(shape, blocks);
}

}  // namespace

TEST_CASE("reduced functionals on the lattice") {
  const ModelPtr z = builtin_model("Z");
  const ShapePtr& s = z->shape();
  const auto xi = ReducedFunctional::eval_at(s, at(3));
  CHECK(xi(Multiplier::character(s, {Scalar(2)})) == Scalar(8));
  CHECK(xi(Multiplier::identity(s)) == Scalar(1));
  CHECK(xi(FiniteElement(s, {{at(3), Matrix{{5}}}})) == Scalar(5));
  CHECK(xi(FiniteElement(s, {{at(4), Matrix{{5}}}})) == Scalar(0));

  // counting measure reduced by delta_0 on both sides is evaluation at 0
  const FiniteElement d0(s, {{at(0), Matrix{{1}}}});
  const auto red = reduce(d0, RawFunctional::sum_of_entries(s), d0);
  CHECK(red == ReducedFunctional::eval_at(s, at(0)));
  CHECK(red.support().size() == 1);
}

TEST_CASE("a f b agrees with f(b m a) and different triples can give the same functional") {
  std::mt19937_64 rng(7);
  const ModelPtr m = builtin_model("dual(S3)");
  const ShapePtr& s = m->shape();
  const Window all = s->ball(0);
  const RawFunctional f = RawFunctional::sum_of_entries(s);
  for (int t = 0; t < 100; ++t) {
    const FiniteElement a = random_element(rng, s, all), b = random_element(rng, s, all);
    const FiniteElement x = random_element(rng, s, all);
    CHECK(reduce(a, f, b)(x) == f(b * x * a));
    CHECK(reduce(a, f, b)(embed(x)) == f(b * x * a));
  }
  // two triples with identical weight products
  const FiniteElement e2 = block_unit(s, at(2));
  const FiniteElement twice = e2 * Scalar(2);
  const FiniteElement half = e2 * Scalar::rational(1, 2);
  const auto xi1 = reduce(twice, f, half);
  const auto xi2 = reduce(e2, f, e2);
  CHECK(xi1 == xi2);
  const FiniteElement x = random_element(rng, s, all);
  CHECK(xi1(x) == xi2(x));
}

TEST_CASE("matrix entry functionals") {
  const ModelPtr m = builtin_model("dual(S3)");
  const auto xi = ReducedFunctional::matrix_entry(m->shape(), at(2), 0, 1);
  const FiniteElement x(m->shape(), {{at(2), Matrix{{1, 2}, {3, 4}}}});
  CHECK(xi(x) == Scalar(2));
  CHECK_THROWS_AS(ReducedFunctional::matrix_entry(m->shape(), at(2), 2, 0), ShapeError);
}

TEST_CASE("tensor functional factorizes on elementary tensors") {
  std::mt19937_64 rng(11);
  const ModelPtr m = builtin_model("dual(S3)");
  const ShapePtr& s = m->shape();
  const Window all = s->ball(0);
  for (int t = 0; t < 30; ++t) {
    const auto zeta = reduce(random_element(rng, s, all), RawFunctional::sum_of_entries(s), random_element(rng, s, all));
    const auto xi = reduce(random_element(rng, s, all), RawFunctional::sum_of_entries(s), random_element(rng, s, all));
    const FiniteElement x = random_element(rng, s, all), y = random_element(rng, s, all);
    const TensorFunctional tf = tensor(zeta, xi);
    const Scalar v = tf.evaluate([&](const BlockIndex& b, const BlockIndex& i) { return kron(x.block(b), y.block(i)); });
    CHECK(v == zeta(x) * xi(y));
  }
}

TEST_CASE("left invariant functional on Z is the counting measure") {
  const ModelPtr z = builtin_model("Z");
  const InvariantFunctional phi = solve_invariant(z, z->shape()->ball(2), Side::left);
  CHECK(phi.weights.weights() == Multiplier::scalar(z->shape(), Scalar(1)));
  for (int n = -20; n <= 20; ++n) CHECK(phi.weights(FiniteElement(z->shape(), {{at(n), Matrix{{1}}}})) == Scalar(1));
  REQUIRE(phi.nullity.size() >= 2);
  CHECK(phi.nullity.back() == 1);
  const InvariantFunctional psi = solve_invariant(z, z->shape()->ball(1), Side::right);
  CHECK(psi.weights.weights() == phi.weights.weights());
  CHECK(compose_antipode(z, phi.weights).weights() == psi.weights.weights());

  const ModelPtr z2 = builtin_model("Z^2");
  const InvariantFunctional phi2 = solve_invariant(z2, z2->shape()->ball(1), Side::left);
  CHECK(phi2.weights.weights() == Multiplier::scalar(z2->shape(), Scalar(1)));
}

TEST_CASE("invariant functional of a finite function algebra is the sum") {
  for (const char* name : {"C(Z/2)", "C(S3)"}) {
    const ModelPtr m = builtin_model(name);
    INFO(name);
    const InvariantFunctional phi = solve_invariant(m, m->shape()->ball(0), Side::left);
    for (const auto& b : m->shape()->blocks()) CHECK(phi.weights.weight(b) == Matrix{{1}});
    CHECK(phi.weights(FiniteElement(m->shape(), {{at(1), Matrix{{1}}}})) == Scalar(1));
  }
}

TEST_CASE("Haar weights of dual(S3) follow the Plancherel formula") {
  const ModelPtr m = builtin_model("dual(S3)");
  const ShapePtr& s = m->shape();
  const InvariantFunctional phi = solve_invariant(m, s->ball(0), Side::left);
  CHECK(phi.weights.weight(at(0)) == Matrix{{1}});
  CHECK(phi.weights.weight(at(1)) == Matrix{{1}});
  CHECK(phi.weights.weight(at(2)) == Matrix{{2, 0}, {0, 2}});
  CHECK(phi.nullity == std::vector<std::size_t>{1});

  // Oracle: sum_pi d_pi chi_pi(g) = |G| [g = e].
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  const auto irreps = irreducible_representations(s3);
  for (int g = 0; g < 6; ++g) {
    BlockMap blocks;
    for (int k = 0; k < 3; ++k) blocks[at(k)] = irreps[k].images[g];
    CHECK(phi.weights(FiniteElement(s, blocks)) == Scalar(g == s3.identity() ? 6 : 0));
  }

  // unimodular: right invariant functional and phi o kappa coincide with phi
  const InvariantFunctional psi = solve_invariant(m, s->ball(0), Side::right);
  CHECK(psi.weights.weights() == phi.weights.weights());
  CHECK(compose_antipode(m, phi.weights).weights() == phi.weights.weights());
}

TEST_CASE("invariance holds blockwise on random elements") {
  std::mt19937_64 rng(23);
  for (const char* name : {"dual(S3)", "dual(Z/3)", "C(S3)", "dual(S4)"}) {
    const ModelPtr m = builtin_model(name);
    const ShapePtr& s = m->shape();
    INFO(name);
    const InvariantFunctional phi = solve_invariant(m, s->ball(0), Side::left);
    const InvariantFunctional psi = solve_invariant(m, s->ball(0), Side::right);
    CHECK(compose_antipode(m, phi.weights).weights() == psi.weights.weights());
    const int trials = std::string(name) == "dual(S4)" ? 2 : 10;
    for (int t = 0; t < trials; ++t) {
      const FiniteElement a = random_element(rng, s, s->ball(0));
      for (const auto& alpha : s->blocks()) {
        const std::size_t na = s->dim(alpha);
        Matrix lhs(na, na), rhs(na, na);
        for (const auto& beta : s->blocks()) {
          lhs += partial_trace_second(m->coproduct_block(a, alpha, beta), phi.weights.weight(beta), na);
          rhs += partial_trace_first(m->coproduct_block(a, beta, alpha), psi.weights.weight(beta), na);
        }
        CHECK(lhs == Matrix::scalar(na, phi.weights(a)));
        CHECK(rhs == Matrix::scalar(na, psi.weights(a)));
      }
    }
  }
}

TEST_CASE("dual element and rejection of broken models") {
  const ModelPtr m = builtin_model("dual(S3)");
  const ShapePtr& s = m->shape();
  const InvariantFunctional phi = solve_invariant(m, s->ball(0), Side::left);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const FiniteElement a = random_element(rng, s, s->ball(0)), b = random_element(rng, s, s->ball(0));
    CHECK(dual_element(phi, a)(b) == phi.weights(b * a));
  }
  // delta(1, 2) = 4 breaks translation invariance of the counting measure
  const ModelPtr bad = QuantumGroupModel::lattice(1, {{{at(1), at(2)}, at(4)}}, "Z-corrupted");
  CHECK_THROWS_AS(solve_invariant(bad, bad->shape()->ball(3), Side::left), Error);
}
