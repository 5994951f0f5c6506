#include "support.hpp"

#include "dqg/ap.hpp"
#include "dqg/builders.hpp"
#include "dqg/error.hpp"
#include "generators.hpp"

using namespace dqg;

namespace {

BlockIndex at(int n) { return BlockIndex(n); }

// Oracle: the Hankel matrix x(m + n) on {-r..r}, built from point values only.
std::size_t hankel_rank(const Multiplier& x, int r) {
  const std::size_t n = static_cast<std::size_t>(2 * r + 1);
  Matrix h(n, n);
  for (int m = -r; m <= r; ++m)
    for (int k = -r; k <= r; ++k) h(static_cast<std::size_t>(m + r), static_cast<std::size_t>(k + r)) = x.block(at(m + k))(0, 0);
  return rank(h);
}

Multiplier character(const ShapePtr& s, const Scalar& l) { return Multiplier::character(s, {l}); }

Multiplier poly_char(const ShapePtr& s, unsigned k, const Scalar& l) {
  return Multiplier::from_tail(s, TailRule::monomial(1, 0, k) * TailRule::character({l}));
}

void check_decomposition(const ModelPtr& m, const Multiplier& x, const APVerdict& v, const Window& probe) {
  REQUIRE(v.status == Verdict::yes);
  REQUIRE(v.x_legs.size() == v.rank);
  REQUIRE(v.y_legs.size() == v.rank);
  for (const auto& a : probe)
    for (const auto& b : probe) {
      const std::size_t n = m->shape()->dim(a) * m->shape()->dim(b);
      Matrix sum(n, n);
      for (std::size_t k = 0; k < v.rank; ++k) sum += kron(v.x_legs[k].block(a), v.y_legs[k].block(b));
      CHECK(sum == m->coproduct_block(x, a, b));
    }
  Multiplier back(m->shape());
  for (std::size_t k = 0; k < v.rank; ++k) back += v.y_legs[k] * m->counit(v.x_legs[k]);
  CHECK(back == x);
}

}  // namespace

TEST_CASE("coefficient matrix examples on Z") {
  const ModelPtr z = builtin_model("Z");
  const ShapePtr& s = z->shape();
  const Window f = s->ball(2);
  const Matrix c2 = coefficient_matrix(*z, character(s, Scalar(2)), f);
  for (int m = -2; m <= 2; ++m)
    for (int n = -2; n <= 2; ++n) CHECK(c2(static_cast<std::size_t>(m + 2), static_cast<std::size_t>(n + 2)) == Scalar(2).pow(m + n));
  CHECK(rank(c2) == 1);

  const Multiplier d0 = embed(FiniteElement(s, {{at(0), Matrix{{1}}}}));
  const Matrix cd = coefficient_matrix(*z, d0, f);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) CHECK(cd(i, j) == Scalar(i + j == 4 ? 1 : 0));
  CHECK(rank(cd) == 5);
  CHECK(rank(coefficient_matrix(*z, poly_char(s, 1, Scalar(2)), f)) == 2);

  // frozen against the Hankel oracle
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    const Multiplier x = gen::multiplier(rng, s);
    for (int r = 0; r <= 4; ++r) CHECK(rank(coefficient_matrix(*z, x, s->ball(r))) == hankel_rank(x, r));
  }
}

TEST_CASE("ap_test positive family on Z") {
  const ModelPtr z = builtin_model("Z");
  const ShapePtr& s = z->shape();
  const Multiplier c2 = character(s, Scalar(2));
  const APVerdict v = ap_test(z, c2, 8);
  CHECK(v.status == Verdict::yes);
  CHECK(v.rank == 1);
  CHECK(v.profile == std::vector<std::size_t>(9, 1));
  // group-like: delta(x) = x (x) x up to the split of the scalar
  CHECK(v.x_legs[0] * v.y_legs[0] == c2 * c2);
  CHECK(v.x_legs[0] * z->counit(v.y_legs[0]) == c2);
  check_decomposition(z, c2, v, s->ball(3));

  const Multiplier p = poly_char(s, 1, Scalar(2));
  const APVerdict vp = ap_test(z, p, 8);
  CHECK(vp.status == Verdict::yes);
  CHECK(vp.rank == 2);
  check_decomposition(z, p, vp, s->ball(3));

  const Multiplier sum = character(s, Scalar(2)) + character(s, Scalar(3));
  const APVerdict vs = ap_test(z, sum, 8);
  CHECK(vs.status == Verdict::yes);
  CHECK(vs.rank == 2);
  check_decomposition(z, sum, vs, s->ball(3));

  CHECK(ap_test(z, Multiplier::identity(s), 4).rank == 1);
  CHECK(ap_test(z, Multiplier(s), 4).status == Verdict::yes);
  CHECK(ap_test(z, Multiplier(s), 4).rank == 0);
  CHECK_THROWS_AS(ap_test(z, c2, 1), ShapeError);
}

TEST_CASE("legs, antipodes and enlargements of almost periodic elements stay almost periodic") {
  std::mt19937_64 rng(29);
  for (const char* name : {"Z", "Z^2"}) {
    const ModelPtr m = builtin_model(name);
    const ShapePtr& s = m->shape();
    INFO(name);
    for (int t = 0; t < 8; ++t) {
      const Multiplier x = Multiplier::from_tail(s, gen::tail(rng, s->lattice_rank()));
      const APVerdict v = ap_test(m, x, 4);
      REQUIRE(v.status == Verdict::yes);
      check_decomposition(m, x, v, s->ball(2));
      for (std::size_t k = 0; k < v.rank; ++k) {
        for (const Multiplier* leg : {&v.x_legs[k], &v.y_legs[k]}) {
          const APVerdict lv = ap_test(m, *leg, 4);
          CHECK(lv.status == Verdict::yes);
          CHECK(lv.rank <= v.rank);
        }
      }
      const APVerdict kv = ap_test(m, m->antipode(x), 4);
      CHECK(kv.status == Verdict::yes);
      CHECK(kv.rank == v.rank);
      const APVerdict bigger = ap_test(m, x, 5);
      CHECK(bigger.status == Verdict::yes);
      for (std::size_t r = 1; r < bigger.profile.size(); ++r) CHECK(bigger.profile[r - 1] <= bigger.profile[r]);
    }
  }
}

TEST_CASE("finitely supported elements of Z are not almost periodic") {
  const ModelPtr z = builtin_model("Z");
  const ShapePtr& s = z->shape();
  const Multiplier d0 = embed(FiniteElement(s, {{at(0), Matrix{{1}}}}));
  const APVerdict v = ap_test(z, d0, 8);
  CHECK(v.status == Verdict::no);
  CHECK(v.bound == 0);
  CHECK(v.rank == 1);
  CHECK(v.witness == Window({at(0)}));
  CHECK(v.profile == std::vector<std::size_t>{1, 3, 5, 7, 9, 11, 13, 15, 17});
  const APVerdict full = ap_test(z, d0, 8, std::size_t{100});
  CHECK(full.status == Verdict::inconclusive);
  CHECK(full.profile == std::vector<std::size_t>{1, 3, 5, 7, 9, 11, 13, 15, 17});

  // a deviation from an almost periodic tail is detected once the window rank exceeds the tail rank
  const Multiplier x = character(s, Scalar(2)) + d0;
  const APVerdict vx = ap_test(z, x, 8);
  CHECK(vx.status == Verdict::no);
  CHECK(vx.bound == 1);
  CHECK(vx.rank > 1);

  // a deviation beyond the horizon stays undecided
  const Multiplier far = character(s, Scalar(2)) + embed(FiniteElement(s, {{at(40), Matrix{{1}}}}));
  CHECK(ap_test(z, far, 4).status == Verdict::inconclusive);
}

TEST_CASE("finite models: every element is almost periodic") {
  std::mt19937_64 rng(31);
  for (const char* name : {"C(Z/2)", "C(S3)", "dual(S3)"}) {
    const ModelPtr m = builtin_model(name);
    const ShapePtr& s = m->shape();
    INFO(name);
    for (int t = 0; t < 5; ++t) {
      const Multiplier x = gen::multiplier(rng, s);
      const APVerdict v = ap_test(m, x, 2);
      CHECK(v.status == Verdict::yes);
      check_decomposition(m, x, v, s->ball(0));
      if (std::string(name) == "C(Z/2)") CHECK(v.rank <= 2);
    }
  }
}

TEST_CASE("lemma_l examples") {
  const ModelPtr z = builtin_model("Z");
  const ShapePtr& s = z->shape();
  const LemmaResult chars = lemma_l(z, {character(s, Scalar(1)), character(s, Scalar(2)), character(s, Scalar(3))}, 6);
  CHECK(chars.status == LemmaStatus::independent);
  CHECK(chars.window == Window({at(0), at(1), at(2)}));
  CHECK(chars.unit == central_idempotent(s, chars.window));
  // Vandermonde determinant on {0, 1, 2}
  Matrix v(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) v(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) = Scalar(k + 1).pow(i);
  CHECK(rank(v) == 3);

  const LemmaResult dep = lemma_l(z, {character(s, Scalar(2)), character(s, Scalar(2))}, 6);
  CHECK(dep.status == LemmaStatus::dependent);
  CHECK(dep.alpha == std::vector<Scalar>{Scalar(1), Scalar(-1)});

  const Multiplier d0 = embed(FiniteElement(s, {{at(0), Matrix{{1}}}}));
  const Multiplier d1 = embed(FiniteElement(s, {{at(1), Matrix{{1}}}}));
  const LemmaResult deltas = lemma_l(z, {d0, d1}, 6);
  CHECK(deltas.status == LemmaStatus::independent);
  REQUIRE(deltas.windows.size() == 2);
  CHECK(deltas.windows[0] == Window({at(0)}));
  CHECK(deltas.kernels[0].cols() == 1);
  CHECK(deltas.windows[1] == Window({at(0), at(1)}));

  // a family that only separates outside the horizon
  const Multiplier d9 = embed(FiniteElement(s, {{at(9), Matrix{{1}}}}));
  CHECK(lemma_l(z, {d0, d0 + d9}, 4).status == LemmaStatus::inconclusive);
}

TEST_CASE("lemma_l on random character families") {
  std::mt19937_64 rng(37);
  const ModelPtr z = builtin_model("Z");
  const ShapePtr& s = z->shape();
  for (int t = 0; t < 20; ++t) {
    const int n = gen::integer(rng, 1, 6);
    std::vector<int> bases;
    while (static_cast<int>(bases.size()) < n) {
      const int b = gen::integer(rng, -5, 7);
      if (b != 0 && std::find(bases.begin(), bases.end(), b) == bases.end()) bases.push_back(b);
    }
    std::vector<Multiplier> xs;
    for (int b : bases) xs.push_back(character(s, Scalar(b)));
    const LemmaResult r = lemma_l(z, xs, 8);
    CHECK(r.status == LemmaStatus::independent);
    CHECK(r.window.size() == static_cast<std::size_t>(n));
    for (std::size_t k = 1; k < r.kernels.size(); ++k) CHECK(r.kernels[k].cols() < r.kernels[k - 1].cols());

    // plant a relation: the last element is a combination of the others
    std::vector<Scalar> alpha;
    Multiplier planted(s);
    for (std::size_t k = 0; k < xs.size(); ++k) {
      alpha.push_back(Scalar(gen::integer(rng, -3, 3)));
      planted += xs[k] * alpha.back();
    }
    std::vector<Multiplier> family = xs;
    family.push_back(planted);
    const LemmaResult d = lemma_l(z, family, 8);
    REQUIRE(d.status == LemmaStatus::dependent);
    REQUIRE(d.relations.size() == 1);
    // expected relation: sum alpha_k x_k - planted = 0, scaled to a leading 1
    std::vector<Scalar> expected = alpha;
    expected.push_back(Scalar(-1));
    Scalar lead;
    for (const auto& c : expected)
      if (!c.is_zero()) {
        lead = c.inverse();
        break;
      }
    for (auto& c : expected) c *= lead;
    CHECK(d.alpha == expected);
  }
}
