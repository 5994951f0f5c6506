#include "dqg/builders.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <set>

#include "dqg/error.hpp"

namespace dqg {

// ---------------------------------------------------------------------------
// finite groups

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<int>> table, std::vector<std::string> labels)
    : name_(std::move(name)), table_(std::move(table)), labels_(std::move(labels)) {
  const int n = size();
  if (n == 0) throw ModelError("a group needs at least one element");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw ModelError("Cayley table must be square");
    for (int x : row) {
      if (x < 0 || x >= n) throw ModelError("Cayley table entry out of range");
    }
  }
  e_ = -1;
  for (int a = 0; a < n && e_ < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b) ok = table_[a][b] == b && table_[b][a] == b;
    if (ok) e_ = a;
  }
  if (e_ < 0) throw ModelError("Cayley table has no identity");
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table_[a][b] == e_ && table_[b][a] == e_) inv_[a] = b;
    }
    if (inv_[a] < 0) throw ModelError("element " + std::to_string(a) + " has no inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) throw ModelError("Cayley table is not associative");
      }
  if (labels_.empty()) {
    for (int a = 0; a < n; ++a) labels_.push_back(std::to_string(a));
  }
  if (static_cast<int>(labels_.size()) != n) throw ModelError("one label per group element required");
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw ModelError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup("Z/" + std::to_string(n), std::move(t));
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 5) throw ModelError("symmetric groups are supported for 1 <= n <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  const int m = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) index[perms[i]] = i;
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<std::string> labels;
  for (int a = 0; a < m; ++a) {
    std::string l;
    for (int x : perms[a]) l += std::to_string(x + 1);
    labels.push_back(l);
    for (int b = 0; b < m; ++b) {
      // (ab)(x) = a(b(x))
      std::vector<int> c(n);
      for (int x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = index.at(c);
    }
  }
  return FiniteGroup("S" + std::to_string(n), std::move(t), std::move(labels));
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != e_; x = mul(x, a)) ++k;
  return k;
}

int FiniteGroup::exponent() const {
  int e = 1;
  for (int a = 0; a < size(); ++a) e = std::lcm(e, element_order(a));
  return e;
}

std::vector<int> FiniteGroup::generators() const {
  std::vector<int> gens;
  std::set<int> sub{e_};
  for (int a = 0; a < size(); ++a) {
    if (sub.contains(a)) continue;
    gens.push_back(a);
    // close the subgroup under right multiplication by the generators
    std::vector<int> frontier(sub.begin(), sub.end());
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier) {
        for (int g : gens) {
          const int y = mul(x, g);
          if (sub.insert(y).second) next.push_back(y);
        }
      }
      frontier = std::move(next);
    }
  }
  return gens;
}

// ---------------------------------------------------------------------------
// splitting the regular representation

namespace {

using Vec = std::vector<Scalar>;

Scalar inner(const Vec& u, const Vec& v) {
  Scalar s(0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!u[i].is_zero() && !v[i].is_zero()) s += u[i].conj() * v[i];
  }
  return s;
}

/// rho(g) e_h = e_{gh}
Vec act(const FiniteGroup& g, int a, const Vec& v) {
  Vec w(v.size());
  for (int h = 0; h < g.size(); ++h) w[g.mul(a, h)] = v[h];
  return w;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

/// Orthogonal (not normalized) basis of the span of the given vectors.
std::vector<Vec> orthogonal_basis(const std::vector<Vec>& vs) {
  std::vector<Vec> out;
  std::vector<Scalar> norms;
  for (Vec v : vs) {
    for (std::size_t k = 0; k < out.size(); ++k) {
      const Scalar c = inner(out[k], v) / norms[k];
      if (c.is_zero()) continue;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * out[k][i];
    }
    if (is_zero(v)) continue;
    norms.push_back(inner(v, v));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vec> spin(const FiniteGroup& g, const Vec& v) {
  std::vector<Vec> images;
  for (int a = 0; a < g.size(); ++a) images.push_back(act(g, a, v));
  return orthogonal_basis(images);
}

std::vector<Scalar> character_of(const FiniteGroup& g, const std::vector<Vec>& basis) {
  std::vector<Scalar> chi;
  std::vector<Scalar> norms;
  for (const auto& b : basis) norms.push_back(inner(b, b));
  for (int a = 0; a < g.size(); ++a) {
    Scalar t(0);
    for (std::size_t k = 0; k < basis.size(); ++k) t += inner(basis[k], act(g, a, basis[k])) / norms[k];
    chi.push_back(t);
  }
  return chi;
}

Scalar character_inner(const FiniteGroup& g, const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
  Scalar s(0);
  for (int a = 0; a < g.size(); ++a) s += x[a] * y[a].conj();
  return s / Scalar(g.size());
}

/// Eigenvectors of rho(a) with eigenvalue lambda inside span(basis).
std::vector<Vec> eigenvectors(const FiniteGroup& g, int a, const Scalar& lambda, const std::vector<Vec>& basis) {
  const std::size_t n = static_cast<std::size_t>(g.size());
  Matrix m(n, basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Vec w = act(g, a, basis[k]);
    for (std::size_t i = 0; i < n; ++i) m(i, k) = w[i] - lambda * basis[k][i];
  }
  const Matrix ns = nullspace(m);
  std::vector<Vec> out;
  for (std::size_t c = 0; c < ns.cols(); ++c) {
    Vec v(n);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (ns(k, c).is_zero()) continue;
      for (std::size_t i = 0; i < n; ++i) v[i] += ns(k, c) * basis[k][i];
    }
    out.push_back(std::move(v));
  }
  return out;
}

/// A proper nonzero submodule of the (reducible) submodule spanned by basis.
std::vector<Vec> proper_submodule(const FiniteGroup& g, const std::vector<Vec>& basis) {
  // Rational eigenvalues first, so that bases stay rational where possible.
  std::vector<std::pair<int, int>> candidates;  // (element, k) meaning lambda = zeta_ord^k
  for (int pass = 0; pass < 2; ++pass) {
    for (int a = 0; a < g.size(); ++a) {
      if (a == g.identity()) continue;
      const int ord = g.element_order(a);
      for (int k = 0; k < ord; ++k) {
        const bool rational = 2 * k == ord || k == 0;
        if ((pass == 0) == rational) candidates.emplace_back(a, k);
      }
    }
  }
  for (const auto& [a, k] : candidates) {
    const Scalar lambda = Scalar::root_of_unity(static_cast<unsigned>(g.element_order(a)), k);
    const auto e = eigenvectors(g, a, lambda, basis);
    if (e.empty() || e.size() == basis.size()) continue;
    for (const auto& v : e) {
      auto s = spin(g, v);
      if (s.size() < basis.size()) return s;
    }
  }
  throw ModelError("could not split a representation of " + g.name() + " over a cyclotomic field");
}

Scalar positive_sqrt(const Scalar& x) {
  if (!x.is_rational() || sgn(x.rational_value()) <= 0) {
    throw ModelError("no orthonormal basis over a cyclotomic field for this representation");
  }
  const mpq_class& q = x.rational_value();
  const mpz_class num = q.get_num() * q.get_den();
  if (!num.fits_slong_p()) throw ModelError("norm too large to take a square root");
  return Scalar::sqrt_of_integer(num.get_si()) / Scalar(mpq_class(q.get_den()));
}

Irrep unitary_irrep(const FiniteGroup& g, const std::vector<Vec>& subspace) {
  const auto basis = orthogonal_basis(subspace);
  const std::size_t d = basis.size();
  std::vector<Scalar> norms;
  for (const auto& b : basis) norms.push_back(inner(b, b));
  // scale[i][j] = 1 / (sqrt(n_i) sqrt(n_j))
  std::vector<std::vector<Scalar>> scale(d, std::vector<Scalar>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) scale[i][j] = (i == j ? norms[i] : positive_sqrt(norms[i] * norms[j])).inverse();
  Irrep r;
  for (int a = 0; a < g.size(); ++a) {
    Matrix m(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      const Vec w = act(g, a, basis[j]);
      for (std::size_t i = 0; i < d; ++i) m(i, j) = inner(basis[i], w) * scale[i][j];
    }
    r.character.push_back(m.trace());
    r.images.push_back(std::move(m));
  }
  return r;
}

}  // namespace

std::vector<Irrep> irreducible_representations(const FiniteGroup& g) {
  const int n = g.size();
  std::vector<Vec> remaining;
  for (int i = 0; i < n; ++i) {
    Vec e(n);
    e[i] = Scalar(1);
    remaining.push_back(std::move(e));
  }
  std::vector<Irrep> irreps;
  std::size_t total = 0;
  while (!remaining.empty()) {
    std::vector<Vec> w = orthogonal_basis(remaining);
    while (true) {
      const auto chi = character_of(g, w);
      if (character_inner(g, chi, chi).is_one()) break;
      w = proper_submodule(g, w);
    }
    Irrep r = unitary_irrep(g, w);
    const std::size_t d = r.dim();
    // Remove the isotypic component: v -> v - e_chi v with e_chi = (d/|G|) sum conj(chi(a)) rho(a).
    std::vector<Vec> rest;
    for (const auto& v : remaining) {
      Vec p(n);
      for (int a = 0; a < n; ++a) {
        const Scalar c = r.character[a].conj() * Scalar(static_cast<long>(d)) / Scalar(n);
        if (c.is_zero()) continue;
        const Vec av = act(g, a, v);
        for (int i = 0; i < n; ++i) p[i] += c * av[i];
      }
      for (int i = 0; i < n; ++i) p[i] = v[i] - p[i];
      rest.push_back(std::move(p));
    }
    remaining = orthogonal_basis(rest);
    total += d * d;
    irreps.push_back(std::move(r));
  }
  if (total != static_cast<std::size_t>(n)) throw InternalError("irreducible dimensions do not add up");
  std::sort(irreps.begin(), irreps.end(), [](const Irrep& a, const Irrep& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    const bool ta = std::all_of(a.character.begin(), a.character.end(), [](const Scalar& s) { return s.is_one(); });
    const bool tb = std::all_of(b.character.begin(), b.character.end(), [](const Scalar& s) { return s.is_one(); });
    if (ta != tb) return ta;
    return a.character < b.character;
  });
  return irreps;
}

// ---------------------------------------------------------------------------
// models

ModelPtr function_algebra(const FiniteGroup& g) {
  const int n = g.size();
  const ShapePtr shape = BlockShape::finite(std::vector<std::size_t>(n, 1), g.labels());
  std::map<BlockPair, FusionData> fusion;
  std::map<BlockIndex, AntipodeEntry> antipode;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      fusion[{BlockIndex(a), BlockIndex(b)}] = FusionData{{{BlockIndex(g.mul(a, b)), 1}}, Matrix{{1}}, Matrix{{1}}};
    }
    antipode[BlockIndex(a)] = AntipodeEntry{BlockIndex(g.inv(a)), Matrix{{1}}, Matrix{{1}}};
  }
  const BlockIndex e(g.identity());
  return QuantumGroupModel::finite("C(" + g.name() + ")", shape, e, std::move(fusion), std::move(antipode),
                                   FiniteElement(shape, {{e, Matrix{{1}}}}));
}

ModelPtr group_dual(const FiniteGroup& g) {
  const auto irreps = irreducible_representations(g);
  const int n = g.size();
  const std::size_t r = irreps.size();
  std::vector<std::size_t> dims;
  std::vector<std::string> labels;
  std::map<std::size_t, int> seen;
  for (const auto& p : irreps) {
    dims.push_back(p.dim());
    labels.push_back("rho" + std::to_string(p.dim()) + (seen[p.dim()]++ == 0 ? "" : "_" + std::to_string(seen[p.dim()] - 1)));
  }
  const ShapePtr shape = BlockShape::finite(dims, labels);
  const auto gens = g.generators();

  // Intertwiners X with A(a) X = X B(a) for all generators a, as a nullspace.
  auto intertwiners = [&](const std::vector<Matrix>& lhs, const std::vector<Matrix>& rhs) {
    const std::size_t p = lhs.front().rows(), q = rhs.front().rows();
    Matrix eq(gens.size() * p * q, p * q);
    std::size_t row = 0;
    for (int a : gens) {
      const Matrix& A = lhs[a];
      const Matrix& B = rhs[a];
      for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t c = 0; c < q; ++c, ++row) {
          for (std::size_t k = 0; k < p; ++k) eq(row, k * q + c) += A(i, k);
          for (std::size_t k = 0; k < q; ++k) eq(row, i * q + k) -= B(k, c);
        }
      }
    }
    const Matrix ns = nullspace(eq);
    std::vector<Matrix> out;
    for (std::size_t s = 0; s < ns.cols(); ++s) {
      Matrix x(p, q);
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t c = 0; c < q; ++c) x(i, c) = ns(i * q + c, s);
      out.push_back(std::move(x));
    }
    return out;
  };

  std::map<BlockPair, FusionData> fusion;
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      std::vector<Matrix> tensor;
      for (int x = 0; x < n; ++x) tensor.push_back(kron(irreps[a].images[x], irreps[b].images[x]));
      FusionData f;
      std::vector<Matrix> columns;
      for (std::size_t t = 0; t < r; ++t) {
        Scalar m(0);
        for (int x = 0; x < n; ++x) m += irreps[a].character[x] * irreps[b].character[x] * irreps[t].character[x].conj();
        m /= Scalar(n);
        if (m.is_zero()) continue;
        if (!m.is_rational() || m.rational_value().get_den() != 1) throw InternalError("non-integral multiplicity");
        const auto mult = static_cast<std::size_t>(m.rational_value().get_num().get_ui());
        auto xs = intertwiners(tensor, irreps[t].images);
        if (xs.size() != mult) throw InternalError("intertwiner space has the wrong dimension");
        for (auto& x : xs) columns.push_back(std::move(x));
        f.summands.push_back({BlockIndex(static_cast<std::int32_t>(t)), mult});
      }
      const std::size_t dim = irreps[a].dim() * irreps[b].dim();
      f.u = Matrix(dim, dim);
      std::size_t col = 0;
      for (const auto& x : columns) {
        for (std::size_t c = 0; c < x.cols(); ++c, ++col)
          for (std::size_t i = 0; i < dim; ++i) f.u(i, col) = x(i, c);
      }
      fusion[{BlockIndex(static_cast<std::int32_t>(a)), BlockIndex(static_cast<std::int32_t>(b))}] = std::move(f);
    }
  }

  std::map<BlockIndex, AntipodeEntry> antipode;
  for (std::size_t a = 0; a < r; ++a) {
    // partner: the irrep with character chi(x^-1)
    std::size_t partner = r;
    for (std::size_t b = 0; b < r && partner == r; ++b) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) ok = irreps[b].character[x] == irreps[a].character[g.inv(x)];
      if (ok) partner = b;
    }
    if (partner == r) throw InternalError("contragredient representation not found");
    // R with partner(x^-1) R = R a(x)^T
    std::vector<Matrix> lhs, rhs;
    for (int x = 0; x < n; ++x) {
      lhs.push_back(irreps[partner].images[g.inv(x)]);
      rhs.push_back(irreps[a].images[x].transpose());
    }
    const auto rs = intertwiners(lhs, rhs);
    if (rs.size() != 1) throw InternalError("antipode intertwiner is not unique");
    antipode[BlockIndex(static_cast<std::int32_t>(a))] =
        AntipodeEntry{BlockIndex(static_cast<std::int32_t>(partner)), rs.front(), Matrix()};
  }
  const BlockIndex triv(0);
  return QuantumGroupModel::finite("dual(" + g.name() + ")", shape, triv, std::move(fusion), std::move(antipode),
                                   FiniteElement(shape, {{triv, Matrix{{1}}}}));
}

ModelPtr builtin_model(const std::string& name) {
  static const std::regex lattice_re(R"(Z(\^([1-4]))?)");
  static const std::regex group_re(R"((C|dual)\((Z/([0-9]+)|S([1-5]))\))");
  std::smatch m;
  if (std::regex_match(name, m, lattice_re)) {
    const unsigned rank = m[2].matched ? static_cast<unsigned>(std::stoi(m[2].str())) : 1;
    return QuantumGroupModel::lattice(rank, {}, name);
  }
  if (std::regex_match(name, m, group_re)) {
    const FiniteGroup g = m[3].matched ? FiniteGroup::cyclic(std::stoi(m[3].str()))
                                       : FiniteGroup::symmetric(std::stoi(m[4].str()));
    if (g.size() > 120) throw ModelError("group too large");
    return m[1].str() == "C" ? function_algebra(g) : group_dual(g);
  }
  throw ModelError("unknown builtin model '" + name + "'");
}

std::vector<std::string> builtin_model_names() {
  return {"Z", "Z^k (k <= 4)", "C(Z/n)", "C(Sn) (n <= 5)", "dual(Z/n)", "dual(Sn) (n <= 5)"};
}

}  // namespace dqg
