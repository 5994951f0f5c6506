#include "dqg/ap.hpp"

#include <algorithm>
#include <limits>

#include "dqg/error.hpp"

namespace dqg {

Matrix coefficient_matrix(const QuantumGroupModel& model, const Multiplier& x, const Window& f) {
  const BlockShape& shape = *model.shape();
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  for (const auto& b : f) {
    offset.push_back(total);
    total += shape.dim(b) * shape.dim(b);
  }
  Matrix c(total, total);
  for (std::size_t a = 0; a < f.size(); ++a) {
    const std::size_t na = shape.dim(f[a]);
    for (std::size_t b = 0; b < f.size(); ++b) {
      const std::size_t nb = shape.dim(f[b]);
      const Matrix z = model.coproduct_block(x, f[a], f[b]);
      if (z.is_zero()) continue;
      for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
          for (std::size_t p = 0; p < nb; ++p)
            for (std::size_t q = 0; q < nb; ++q)
              c(offset[a] + i * na + j, offset[b] + p * nb + q) = z(i * nb + p, j * nb + q);
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Ambient

namespace {

Scalar binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Scalar(mpq_class(r));
}

}  // namespace

Ambient::Ambient(ModelPtr model) : model_(std::move(model)) {
  const BlockShape& shape = *model_->shape();
  if (shape.is_finite()) {
    std::size_t total = 0;
    for (const auto& b : shape.blocks()) {
      offset_[b] = total;
      const std::size_t n = shape.dim(b);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) finite_keys_.emplace_back(b, i, j);
      total += n * n;
    }
  }
}

std::size_t Ambient::lattice_index(const LatticeKey& k) const {
  const auto [it, inserted] = lattice_index_.try_emplace(k, lattice_keys_.size());
  if (inserted) lattice_keys_.push_back(k);
  return it->second;
}

bool Ambient::representable(const Multiplier& x) const {
  return model_->is_finite() || x.explicit_blocks().empty();
}

SparseVector Ambient::coords(const Multiplier& x) const {
  SparseVector v;
  if (model_->is_finite()) {
    for (const auto& [b, m] : x.explicit_blocks()) {
      const std::size_t n = m.rows(), o = offset_.at(b);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!m(i, j).is_zero()) v[o + i * n + j] = m(i, j);
    }
    return v;
  }
  if (!x.explicit_blocks().empty())
    throw UnsupportedTailError("multiplier differs from its tail rule on " + std::to_string(x.explicit_blocks().size()) +
                               " blocks and has no closed-form coproduct");
  for (const auto& [lambda, exps] : x.tail().terms())
    for (const auto& [e, c] : exps) v[lattice_index({lambda, e})] = c;
  return v;
}

Multiplier Ambient::element(const SparseVector& v) const {
  const ShapePtr& shape = model_->shape();
  if (shape->is_finite()) {
    BlockMap blocks;
    for (const auto& [k, c] : v) {
      const auto& [b, i, j] = finite_keys_.at(k);
      auto it = blocks.find(b);
      if (it == blocks.end()) it = blocks.emplace(b, Matrix(shape->dim(b), shape->dim(b))).first;
      it->second(i, j) = c;
    }
    return Multiplier(shape, std::move(blocks));
  }
  const unsigned rank = shape->lattice_rank();
  TailRule t;
  for (const auto& [k, c] : v) {
    const auto& [lambda, e] = lattice_keys_.at(k);
    TailRule term = TailRule::character(lambda);
    for (unsigned i = 0; i < rank; ++i)
      if (e[i] > 0) term = term * TailRule::monomial(rank, i, e[i]);
    t += term * c;
  }
  return Multiplier::from_tail(shape, std::move(t));
}

Ambient::Tensor Ambient::coproduct(const Multiplier& x) const {
  Tensor out;
  auto add = [&out](std::size_t a, std::size_t b, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = out.try_emplace({a, b}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  const BlockShape& shape = *model_->shape();
  if (shape.is_finite()) {
    for (const auto& a : shape.blocks()) {
      const std::size_t na = shape.dim(a), oa = offset_.at(a);
      for (const auto& b : shape.blocks()) {
        const std::size_t nb = shape.dim(b), ob = offset_.at(b);
        const Matrix z = model_->coproduct_block(x, a, b);
        if (z.is_zero()) continue;
        for (std::size_t i = 0; i < na; ++i)
          for (std::size_t j = 0; j < na; ++j)
            for (std::size_t p = 0; p < nb; ++p)
              for (std::size_t q = 0; q < nb; ++q) add(oa + i * na + j, ob + p * nb + q, z(i * nb + p, j * nb + q));
      }
    }
    return out;
  }
  if (!model_->overrides().empty())
    throw UnsupportedTailError("closed-form coproduct is only available for uncorrupted lattice models");
  coords(x);  // validates representability
  const unsigned rank = shape.lattice_rank();
  for (const auto& [lambda, exps] : x.tail().terms())
    for (const auto& [e, c] : exps) {
      // enumerate a <= e coordinatewise
      std::array<std::uint8_t, BlockIndex::max_rank> a{};
      while (true) {
        Scalar coef = c;
        std::array<std::uint8_t, BlockIndex::max_rank> rest{};
        for (unsigned i = 0; i < rank; ++i) {
          coef *= binomial(e[i], a[i]);
          rest[i] = static_cast<std::uint8_t>(e[i] - a[i]);
        }
        add(lattice_index({lambda, a}), lattice_index({lambda, rest}), coef);
        unsigned i = 0;
        while (i < rank && a[i] == e[i]) a[i++] = 0;
        if (i == rank) break;
        ++a[i];
      }
    }
  return out;
}

Ambient::Tensor Ambient::tensor(const SparseVector& a, const SparseVector& b) const {
  Tensor out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) out.emplace(std::make_pair(i, j), x * y);
  return out;
}

std::string Ambient::key_str(std::size_t index) const {
  if (model_->is_finite()) {
    const auto& [b, i, j] = finite_keys_.at(index);
    return "(" + b.str() + "," + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return element(SparseVector{{index, Scalar(1)}}).tail().str();
}

std::vector<std::size_t> Ambient::ordered(const std::vector<std::size_t>& indices) const {
  std::vector<std::size_t> out = indices;
  if (model_->is_finite()) {
    std::sort(out.begin(), out.end());
  } else {
    std::sort(out.begin(), out.end(), [this](std::size_t a, std::size_t b) { return lattice_keys_[a] < lattice_keys_[b]; });
  }
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// ap_test

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

struct DenseTensor {
  std::vector<std::size_t> rows, cols;
  Matrix m;
};

DenseTensor densify(const Ambient& amb, const Ambient::Tensor& t) {
  std::vector<std::size_t> r, c;
  for (const auto& [k, v] : t) {
    r.push_back(k.first);
    c.push_back(k.second);
  }
  DenseTensor d{amb.ordered(r), amb.ordered(c), {}};
  std::map<std::size_t, std::size_t> ri, ci;
  for (std::size_t i = 0; i < d.rows.size(); ++i) ri[d.rows[i]] = i;
  for (std::size_t i = 0; i < d.cols.size(); ++i) ci[d.cols[i]] = i;
  d.m = Matrix(d.rows.size(), d.cols.size());
  for (const auto& [k, v] : t) d.m(ri[k.first], ci[k.second]) = v;
  return d;
}

}  // namespace

APVerdict ap_test(const ModelPtr& model, const Multiplier& x, unsigned horizon, std::optional<std::size_t> bound) {
  if (horizon < 2) throw ShapeError("horizon must be at least 2 window steps");
  if (!x.shape()->same_as(*model->shape())) throw ShapeError("element does not belong to the model");
  const BlockShape& shape = *model->shape();
  const Ambient amb(model);
  APVerdict v;

  // Closed-form rank of the tail (lattices) or of the whole element (finite models).
  const bool closed_form = shape.is_finite() || model->overrides().empty();
  std::optional<DenseTensor> tail_tensor;
  if (closed_form) {
    const Multiplier t = shape.is_finite() ? x : Multiplier::from_tail(x.shape(), x.tail());
    tail_tensor = densify(amb, amb.coproduct(t));
    v.certified = rank(tail_tensor->m);
  }
  if (bound) {
    v.bound = *bound;
  } else if (shape.is_finite()) {
    v.bound = shape.algebra_dimension();
  } else if (v.certified) {
    v.bound = *v.certified;
  } else {
    v.bound = std::numeric_limits<std::size_t>::max();
  }

  for (unsigned r = 0; r <= horizon; ++r) {
    if (shape.is_finite() && r > 0) {
      v.profile.push_back(v.profile.back());  // the window is already everything
      continue;
    }
    const Window w = shape.ball(r);
    const std::size_t k = rank(coefficient_matrix(*model, x, w));
    v.profile.push_back(k);
    // the first exceeding window is the witness; the profile still runs to the horizon
    if (k > v.bound && v.status != Verdict::no) {
      v.status = Verdict::no;
      v.rank = k;
      v.witness = w;
      v.reason = "rank " + std::to_string(k) + " on window radius " + std::to_string(r) + " exceeds bound " +
                 std::to_string(v.bound);
    }
  }
  if (v.status == Verdict::no) return v;

  const std::size_t n = v.profile.size();
  const bool stable = v.profile[n - 1] == v.profile[n - 2] && v.profile[n - 2] == v.profile[n - 3];
  if (!closed_form) {
    v.reason = "no closed-form coproduct for a corrupted lattice model";
    return v;
  }
  if (!amb.representable(x)) {
    v.reason = "explicit part differs from the tail on " + std::to_string(x.explicit_blocks().size()) +
               " blocks; window rank has not exceeded the bound within the horizon";
    return v;
  }
  if (!stable || v.profile.back() != *v.certified) {
    v.reason = "window rank has not reached the closed-form rank " + std::to_string(*v.certified) + " stably";
    return v;
  }
  v.status = Verdict::yes;
  v.rank = *v.certified;
  if (v.rank > 0) {
    const RankFactorization f = rank_factorize(tail_tensor->m);
    for (std::size_t k = 0; k < v.rank; ++k) {
      SparseVector xl, yl;
      for (std::size_t r = 0; r < tail_tensor->rows.size(); ++r)
        if (!f.left(r, k).is_zero()) xl[tail_tensor->rows[r]] = f.left(r, k);
      for (std::size_t c = 0; c < tail_tensor->cols.size(); ++c)
        if (!f.right(k, c).is_zero()) yl[tail_tensor->cols[c]] = f.right(k, c);
      v.x_legs.push_back(amb.element(xl));
      v.y_legs.push_back(amb.element(yl));
    }
  }
  v.reason = shape.is_finite() ? "finite model" : "closed-form tail factorization";
  return v;
}

// ---------------------------------------------------------------------------
// lemma_l

std::string lemma_status_str(LemmaStatus s) {
  switch (s) {
    case LemmaStatus::independent: return "independent";
    case LemmaStatus::dependent: return "dependent";
    case LemmaStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<BlockIndex> canonical_order(const BlockShape& shape, unsigned radius) {
  std::vector<BlockIndex> blocks;
  if (shape.is_finite()) {
    blocks = shape.blocks();
    return blocks;
  }
  for (const auto& b : shape.ball(radius)) blocks.push_back(b);
  auto key = [](const BlockIndex& b) {
    bool negative = false;
    for (std::size_t i = 0; i < b.size(); ++i) negative = negative || b[i] < 0;
    return std::make_tuple(negative, b.radius(), b);
  };
  std::sort(blocks.begin(), blocks.end(), [&](const BlockIndex& a, const BlockIndex& b) { return key(a) < key(b); });
  return blocks;
}

namespace {

// Value of sum_k v_k x_k on block b.
Matrix combination_block(const std::vector<Multiplier>& xs, const Matrix& basis, std::size_t col, const BlockIndex& b) {
  Matrix out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const Scalar& c = basis(k, col);
    if (c.is_zero()) continue;
    Matrix term = xs[k].block(b) * c;
    if (out.rows() == 0) {
      out = std::move(term);
    } else {
      out += term;
    }
  }
  return out;
}

// Scales a relation so that its first nonzero coordinate is 1.
std::vector<Scalar> normalized_column(const Matrix& m, std::size_t col) {
  std::vector<Scalar> v(m.rows());
  Scalar lead;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (lead.is_zero() && !m(r, col).is_zero()) lead = m(r, col).inverse();
    v[r] = m(r, col);
  }
  for (auto& c : v) c *= lead;
  return v;
}

}  // namespace

LemmaResult lemma_l(const ModelPtr& model, const std::vector<Multiplier>& xs, unsigned horizon) {
  if (xs.empty()) throw ShapeError("lemma_l needs at least one multiplier");
  const ShapePtr& shape = model->shape();
  for (const auto& x : xs)
    if (!x.shape()->same_as(*shape)) throw ShapeError("element does not belong to the model");
  const std::vector<BlockIndex> order = canonical_order(*shape, horizon);
  LemmaResult out;
  std::vector<BlockIndex> f{order.front()};
  std::vector<std::vector<Scalar>> rows;  // one row per matrix entry of the window
  auto add_block_rows = [&](const BlockIndex& b) {
    const std::size_t n = shape->dim(b);
    std::vector<Matrix> blocks;
    for (const auto& x : xs) blocks.push_back(x.block(b));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Scalar> row;
        for (const auto& m : blocks) row.push_back(m(i, j));
        rows.push_back(std::move(row));
      }
  };
  add_block_rows(f.front());

  while (true) {
    Matrix a(rows.size(), xs.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t k = 0; k < xs.size(); ++k) a(r, k) = rows[r][k];
    const Matrix kernel = nullspace(a);
    if (!out.kernels.empty()) {
      // V_F' must lie inside V_F for F inside F'
      const Matrix& prev = out.kernels.back();
      Matrix both(prev.rows(), prev.cols() + kernel.cols());
      for (std::size_t r = 0; r < prev.rows(); ++r) {
        for (std::size_t c = 0; c < prev.cols(); ++c) both(r, c) = prev(r, c);
        for (std::size_t c = 0; c < kernel.cols(); ++c) both(r, prev.cols() + c) = kernel(r, c);
      }
      if (rank(both) != prev.cols()) throw InternalError("Lemma L nesting violated");
    }
    out.windows.push_back(Window(f));
    out.kernels.push_back(kernel);
    out.window = Window(f);
    out.unit = central_idempotent(shape, out.window);
    if (kernel.cols() == 0) {
      out.status = LemmaStatus::independent;
      out.reason = "V_F = 0 on a window of " + std::to_string(f.size()) + " blocks";
      return out;
    }
    // first block in canonical order on which some element of V_F is nonzero
    std::optional<BlockIndex> next;
    for (const auto& b : order) {
      if (std::find(f.begin(), f.end(), b) != f.end()) continue;
      for (std::size_t c = 0; c < kernel.cols() && !next; ++c)
        if (!combination_block(xs, kernel, c, b).is_zero()) next = b;
      if (next) break;
    }
    if (next) {
      f.push_back(*next);
      add_block_rows(*next);
      continue;
    }
    // V_F stabilized inside the horizon: decide with the exact multipliers.
    bool all_zero = true;
    for (std::size_t c = 0; c < kernel.cols() && all_zero; ++c) {
      Multiplier sum(shape);
      for (std::size_t k = 0; k < xs.size(); ++k)
        if (!kernel(k, c).is_zero()) sum += xs[k] * kernel(k, c);
      all_zero = sum.is_zero();
    }
    if (all_zero) {
      out.status = LemmaStatus::dependent;
      for (std::size_t c = 0; c < kernel.cols(); ++c) out.relations.push_back(normalized_column(kernel, c));
      out.alpha = out.relations.front();
      out.reason = "relations hold exactly on explicit parts and tail rules";
    } else {
      out.status = LemmaStatus::inconclusive;
      out.reason = "V_F is nonzero on every window within the horizon but not identically zero";
    }
    return out;
  }
}

}  // namespace dqg
