#include "support.hpp"

#include <random>

#include "dqg/axioms.hpp"
#include "dqg/builders.hpp"
#include "dqg/error.hpp"

using namespace dqg;

namespace {

BlockIndex at(int n) { return BlockIndex(n); }

FiniteElement random_element(std::mt19937_64& rng, const ModelPtr& m) {
  std::uniform_int_distribution<int> d(-2, 2);
  BlockMap blocks;
  for (const auto& b : m->shape()->blocks()) {
    const std::size_t n = m->shape()->dim(b);
    Matrix x(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) x(i, j) = Scalar(d(rng));
    blocks[b] = x;
  }
  return FiniteElement(m->shape(), blocks);
}

}  // namespace

TEST_CASE("lattice coproduct, counit and antipode examples") {
  const ModelPtr z = builtin_model("Z");
  const auto d5 = FiniteElement(z->shape(), {{at(5), Matrix{{1}}}});
  CHECK(z->coproduct_block(d5, at(2), at(3)) == Matrix{{1}});
  CHECK(z->coproduct_block(d5, at(2), at(2)) == Matrix{{0}});
  CHECK(z->counit(FiniteElement(z->shape(), {{at(0), Matrix{{1}}}})) == Scalar(1));
  CHECK(z->counit(d5) == Scalar(0));
  CHECK(z->counit(z->cointegral()) == Scalar(1));
  CHECK(z->antipode(embed(d5)) == embed(FiniteElement(z->shape(), {{at(-5), Matrix{{1}}}})));
  const Multiplier c2 = Multiplier::character(z->shape(), {Scalar(2)});
  CHECK(z->antipode(c2) == Multiplier::character(z->shape(), {Scalar::rational(1, 2)}));
}

TEST_CASE("function algebra of Z/2") {
  const ModelPtr c2 = builtin_model("C(Z/2)");
  CHECK(c2->shape()->blocks().size() == 2);
  const auto d1 = FiniteElement(c2->shape(), {{at(1), Matrix{{1}}}});
  CHECK(c2->coproduct_block(d1, at(1), at(0)) == Matrix{{1}});
  CHECK(c2->coproduct_block(d1, at(1), at(1)) == Matrix{{0}});
}

TEST_CASE("irreducible representations of S3") {
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  const auto irreps = irreducible_representations(s3);
  REQUIRE(irreps.size() == 3);
  CHECK(irreps[0].dim() == 1);
  CHECK(irreps[1].dim() == 1);
  CHECK(irreps[2].dim() == 2);
  for (const auto& r : irreps) {
    for (int a = 0; a < 6; ++a) {
      // unitary homomorphism
      CHECK(r.images[a].adjoint() == r.images[s3.inv(a)]);
      for (int b = 0; b < 6; ++b) CHECK(r.images[a] * r.images[b] == r.images[s3.mul(a, b)]);
    }
  }
  // Character table of S3: classes are {e}, transpositions, 3-cycles.
  for (int a = 0; a < 6; ++a) {
    const int ord = s3.element_order(a);
    CHECK(irreps[0].character[a] == Scalar(1));
    CHECK(irreps[1].character[a] == Scalar(ord == 2 ? -1 : 1));
    CHECK(irreps[2].character[a] == Scalar(ord == 1 ? 2 : ord == 2 ? 0 : -1));
  }
}

TEST_CASE("dual of S3: fusion and the coproduct of the two-dimensional unit") {
  const ModelPtr m = builtin_model("dual(S3)");
  const auto& shape = m->shape();
  CHECK(shape->dim(at(0)) == 1);
  CHECK(shape->dim(at(1)) == 1);
  CHECK(shape->dim(at(2)) == 2);
  const FusionData f = m->fusion(at(2), at(2));
  REQUIRE(f.summands.size() == 3);
  for (const auto& s : f.summands) CHECK(s.multiplicity == 1);

  // Oracle: the isotypic projector (2/6) sum conj(chi(g)) pi(g) (x) pi(g) onto the
  // standard summand of std (x) std.
  const FiniteGroup s3 = FiniteGroup::symmetric(3);
  const auto irreps = irreducible_representations(s3);
  Matrix p(4, 4);
  for (int a = 0; a < 6; ++a) p += kron(irreps[2].images[a], irreps[2].images[a]) * irreps[2].character[a].conj();
  p *= Scalar::rational(2, 6);
  const Matrix got = m->coproduct_block(block_unit(shape, at(2)), at(2), at(2));
  CHECK(got == p);
  CHECK(got * got == got);
  CHECK(rank(got) == 2);

  // The coproduct of lambda_g is pi(g) (x) sigma(g) on every pair.
  for (int a = 0; a < 6; ++a) {
    BlockMap blocks;
    for (int k = 0; k < 3; ++k) blocks[at(k)] = irreps[k].images[a];
    const FiniteElement lg(shape, blocks);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y)
        CHECK(m->coproduct_block(lg, at(x), at(y)) == kron(irreps[x].images[a], irreps[y].images[a]));
    // kappa(lambda_g) = lambda_{g^-1}
    BlockMap inv;
    for (int k = 0; k < 3; ++k) inv[at(k)] = irreps[k].images[s3.inv(a)];
    CHECK(m->antipode(lg) == FiniteElement(shape, inv));
  }
}

TEST_CASE("coproduct is multiplicative, counit is a character, antipode is antimultiplicative") {
  std::mt19937_64 rng(99);
  for (const char* name : {"C(Z/6)", "C(S3)", "dual(S3)", "dual(Z/3)"}) {
    const ModelPtr m = builtin_model(name);
    INFO(name);
    const auto& blocks = m->shape()->blocks();
    for (int t = 0; t < 100; ++t) {
      const FiniteElement a = random_element(rng, m), b = random_element(rng, m);
      CHECK(m->counit(a * b) == m->counit(a) * m->counit(b));
      CHECK(m->counit(a.adjoint()) == m->counit(a).conj());
      CHECK(m->antipode(a * b) == m->antipode(b) * m->antipode(a));
      CHECK(m->antipode(m->antipode(a)) == a);
      if (t < 10) {
        for (const auto& x : blocks)
          for (const auto& y : blocks) {
            CHECK(m->coproduct_block(a * b, x, y) == m->coproduct_block(a, x, y) * m->coproduct_block(b, x, y));
            CHECK(m->coproduct_block(a.adjoint(), x, y) == m->coproduct_block(a, x, y).adjoint());
          }
      }
    }
  }
}

TEST_CASE("axiom suite passes on the builtin models") {
  for (const char* name : {"C(Z/2)", "C(Z/6)", "C(S3)", "dual(S3)", "dual(Z/3)", "Z", "Z^2"}) {
    const ModelPtr m = builtin_model(name);
    const AxiomReport r = check_axioms(m, default_window(m));
    INFO(name);
    REQUIRE(r.checks.size() == 6);
    for (const auto& c : r.checks) {
      INFO(c.name << ": " << c.witness);
      CHECK(c.passed);
      CHECK(c.checks > 0);
    }
  }
}

TEST_CASE("corrupted lattice fusion is caught with a witness") {
  const ModelPtr bad = QuantumGroupModel::lattice(1, {{{at(1), at(2)}, at(4)}}, "Z-corrupted");
  const AxiomReport r = check_axioms(bad, bad->shape()->ball(4));
  const auto& co = r.get("coassociativity");
  CHECK_FALSE(co.passed);
  CHECK(co.witness.find("triple") != std::string::npos);
  CHECK_FALSE(r.all_passed());
  CHECK(r.get("counit").passed);
}

TEST_CASE("explicit model validation") {
  const ShapePtr s = BlockShape::finite({1, 1});
  std::map<BlockIndex, AntipodeEntry> kappa{{at(0), {at(0), Matrix{{1}}, {}}}, {at(1), {at(1), Matrix{{1}}, {}}}};
  auto good_fusion = [] {
    std::map<BlockPair, FusionData> f;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) f[{at(a), at(b)}] = FusionData{{{at((a + b) % 2), 1}}, Matrix{{1}}, {}};
    return f;
  };
  const FiniteElement h(s, {{at(0), Matrix{{1}}}});
  CHECK_NOTHROW(QuantumGroupModel::finite("ok", s, at(0), good_fusion(), kappa, h));

  auto count = good_fusion();
  count[{at(1), at(1)}].summands.push_back({at(1), 1});
  CHECK_THROWS_AS(QuantumGroupModel::finite("bad", s, at(0), count, kappa, h), ModelError);

  auto singular = good_fusion();
  singular[{at(1), at(1)}].u = Matrix{{0}};
  CHECK_THROWS_AS(QuantumGroupModel::finite("bad", s, at(0), singular, kappa, h), ModelError);

  auto bad_kappa = kappa;
  bad_kappa[at(1)].partner = at(0);
  CHECK_THROWS_AS(QuantumGroupModel::finite("bad", s, at(0), good_fusion(), bad_kappa, h), ModelError);
  CHECK_THROWS_AS(builtin_model("SU(2)"), ModelError);
}
