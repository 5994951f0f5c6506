#include "dqg/functionals.hpp"

#include <sstream>

#include "dqg/error.hpp"
#include "dqg/sparse.hpp"

namespace dqg {

ReducedFunctional::ReducedFunctional(ShapePtr shape, BlockMap g) : shape_(std::move(shape)) {
  for (auto& [b, m] : g) {
    const std::size_t n = shape_->dim(b);
    if (m.rows() != n || m.cols() != n)
      throw ShapeError("functional weight at " + b.str() + " must be " + std::to_string(n) + "x" + std::to_string(n));
    if (!m.is_zero()) g_.emplace(b, std::move(m));
  }
}

ReducedFunctional ReducedFunctional::eval_at(ShapePtr shape, const BlockIndex& b) {
  const std::size_t n = shape->dim(b);
  return ReducedFunctional(shape, {{b, Matrix::identity(n)}});
}

ReducedFunctional ReducedFunctional::matrix_entry(ShapePtr shape, const BlockIndex& b, std::size_t i,
                                                  std::size_t j) {
  const std::size_t n = shape->dim(b);
  if (i >= n || j >= n) throw ShapeError("matrix entry outside block " + b.str());
  return ReducedFunctional(shape, {{b, Matrix::unit(n, j, i)}});
}

Window ReducedFunctional::support() const {
  std::vector<BlockIndex> s;
  for (const auto& [b, m] : g_) s.push_back(b);
  return Window(std::move(s));
}

Matrix ReducedFunctional::weight(const BlockIndex& b) const {
  const auto it = g_.find(b);
  if (it != g_.end()) return it->second;
  const std::size_t n = shape_->dim(b);
  return Matrix(n, n);
}

Scalar ReducedFunctional::operator()(const Multiplier& m) const {
  Scalar total(0);
  for (const auto& [b, g] : g_) total += (g * m.block(b)).trace();
  return total;
}

Scalar ReducedFunctional::operator()(const FiniteElement& a) const {
  Scalar total(0);
  for (const auto& [b, g] : g_) {
    const auto it = a.blocks().find(b);
    if (it != a.blocks().end()) total += (g * it->second).trace();
  }
  return total;
}

ReducedFunctional& ReducedFunctional::operator+=(const ReducedFunctional& o) {
  for (const auto& [b, m] : o.g_) {
    auto [it, inserted] = g_.try_emplace(b, m);
    if (!inserted) {
      it->second += m;
      if (it->second.is_zero()) g_.erase(it);
    }
  }
  return *this;
}

ReducedFunctional& ReducedFunctional::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    g_.clear();
    return *this;
  }
  for (auto& [b, m] : g_) m *= s;
  return *this;
}

std::string ReducedFunctional::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [b, m] : g_) {
    os << (first ? "" : ", ") << b.str() << ": " << m.str();
    first = false;
  }
  os << "}";
  return os.str();
}

RawFunctional RawFunctional::sum_of_entries(const ShapePtr& shape) {
  if (shape->is_lattice()) return RawFunctional(Multiplier::scalar(shape, Scalar(1)));
  BlockMap w;
  for (const auto& b : shape->blocks()) {
    const std::size_t n = shape->dim(b);
    Matrix j(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) j(r, c) = Scalar(1);
    w.emplace(b, std::move(j));
  }
  return RawFunctional(Multiplier(shape, std::move(w)));
}

Scalar RawFunctional::operator()(const FiniteElement& a) const {
  Scalar total(0);
  for (const auto& [b, x] : a.blocks()) total += (w_.block(b) * x).trace();
  return total;
}

ReducedFunctional reduce(const FiniteElement& a, const RawFunctional& f, const FiniteElement& b) {
  // f(b m a) = sum tr(W b m a) = sum tr((a W b) m)
  BlockMap g;
  for (const auto& [i, ai] : a.blocks()) {
    const auto it = b.blocks().find(i);
    if (it == b.blocks().end()) continue;
    g.emplace(i, ai * f.weight(i) * it->second);
  }
  return ReducedFunctional(a.shape(), std::move(g));
}

TensorFunctional::TensorFunctional(ReducedFunctional left, ReducedFunctional right)
    : l_(std::move(left)), r_(std::move(right)) {}

Matrix TensorFunctional::weight(const BlockIndex& b, const BlockIndex& i) const {
  return kron(l_.weight(b), r_.weight(i));
}

TensorFunctional tensor(const ReducedFunctional& zeta, const ReducedFunctional& xi) { return {zeta, xi}; }

namespace {

// Unknowns are the entries of W_beta for beta in the window, laid out block by block.
struct UnknownLayout {
  std::map<BlockIndex, std::size_t> offset;
  std::size_t total = 0;
  UnknownLayout(const BlockShape& shape, const Window& w) {
    for (const auto& b : w) {
      offset[b] = total;
      const std::size_t n = shape.dim(b);
      total += n * n;
    }
  }
  std::size_t at(const BlockIndex& b, std::size_t p, std::size_t q, std::size_t n) const {
    return offset.at(b) + p * n + q;
  }
};

// Solution space of the invariance equations restricted to the window. Only
// equations whose every unknown lives in the window are used.
Matrix invariant_solutions(const QuantumGroupModel& m, const Window& w, Side side) {
  const BlockShape& shape = *m.shape();
  const UnknownLayout layout(shape, w);
  SpanTracker tracker;
  std::vector<SparseVector> rows;
  for (const auto& iota : w) {
    const std::size_t ni = shape.dim(iota);
    for (const auto& outer : w) {  // alpha for left invariance, beta for right
      const std::vector<BlockIndex> inner = side == Side::left ? m.right_partners(outer, iota)
                                                               : m.left_partners(outer, iota);
      bool inside = true;
      for (const auto& b : inner) inside = inside && w.contains(b);
      if (!inside) continue;
      const std::size_t no = shape.dim(outer);
      for (std::size_t i = 0; i < ni; ++i)
        for (std::size_t j = 0; j < ni; ++j) {
          const FiniteElement e = matrix_unit(m.shape(), iota, i, j);
          // equation entries (r, c) of the no x no identity
          std::vector<SparseVector> eq(no * no);
          for (const auto& b : inner) {
            const std::size_t nb = shape.dim(b);
            const Matrix z = side == Side::left ? m.coproduct_block(e, outer, b) : m.coproduct_block(e, b, outer);
            for (std::size_t p = 0; p < nb; ++p)
              for (std::size_t q = 0; q < nb; ++q) {
                // tr(E_pq Y) = Y_qp
                const std::size_t u = layout.at(b, p, q, nb);
                for (std::size_t r = 0; r < no; ++r)
                  for (std::size_t c = 0; c < no; ++c) {
                    const Scalar& v = side == Side::left ? z(r * nb + q, c * nb + p) : z(q * no + r, p * no + c);
                    if (!v.is_zero()) axpy(eq[r * no + c], v, SparseVector{{u, Scalar(1)}});
                  }
              }
          }
          // minus phi(e) on the diagonal: phi(E_ij) = (W_iota)_ji
          const std::size_t u = layout.at(iota, j, i, ni);
          for (std::size_t r = 0; r < no; ++r) axpy(eq[r * no + r], Scalar(-1), SparseVector{{u, Scalar(1)}});
          for (auto& row : eq)
            if (!row.empty() && tracker.insert(row)) rows.push_back(std::move(row));
        }
    }
  }
  Matrix a(rows.size(), layout.total);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [k, v] : rows[r]) a(r, k) = v;
  if (rows.empty()) return Matrix::identity(layout.total);
  return nullspace(a);
}

std::size_t window_radius(const Window& w) {
  std::size_t r = 0;
  for (const auto& b : w) r = std::max<std::size_t>(r, b.radius());
  return r;
}

}  // namespace

InvariantFunctional solve_invariant(const ModelPtr& model, const Window& f, Side side) {
  if (f.empty()) throw ShapeError("empty window");
  for (const auto& b : f)
    if (!model->shape()->contains(b)) throw UnknownBlockError("block " + b.str() + " is not in the model");
  const ShapePtr& shape = model->shape();
  const BlockIndex& trivial = model->trivial_block();

  InvariantFunctional out;
  out.side = side;
  Window w = unite(f, Window({trivial}));
  const std::size_t r0 = window_radius(w);
  constexpr std::size_t max_growth = 6;
  Matrix sol;
  std::size_t stable = 0;
  for (std::size_t k = 0;; ++k) {
    sol = invariant_solutions(*model, w, side);
    out.nullity.push_back(sol.cols());
    if (sol.cols() == 0) throw ModelError("no nonzero invariant functional on window of " + std::to_string(w.size()) + " blocks");
    stable = sol.cols() == 1 ? stable + 1 : 0;
    // finite shapes have nothing to grow into
    if (shape->is_finite() || stable >= 2) break;
    if (k == max_growth)
      throw ModelError("invariant functional not determined after growing the window " + std::to_string(max_growth) + " times");
    w = unite(f, shape->ball(static_cast<int>(r0 + k + 1)));
  }
  if (sol.cols() != 1) throw ModelError("invariant functional is not unique (nullity " + std::to_string(sol.cols()) + ")");
  out.window = w;

  const UnknownLayout layout(*shape, w);
  const Scalar t = sol(layout.at(trivial, 0, 0, 1), 0);
  if (t.is_zero()) throw ModelError("invariant functional vanishes on the trivial block");
  const Scalar norm = t.inverse();
  BlockMap weights;
  for (const auto& b : w) {
    const std::size_t n = shape->dim(b);
    Matrix x(n, n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) x(p, q) = sol(layout.at(b, p, q, n), 0) * norm;
    weights.emplace(b, std::move(x));
  }
  if (shape->is_finite()) {
    out.weights = RawFunctional(Multiplier(shape, std::move(weights)));
    return out;
  }
  // Lattice: extend by the constant observed on the window.
  const Scalar c = weights.at(trivial)(0, 0);
  for (const auto& [b, x] : weights)
    if (x(0, 0) != c)
      throw UnsupportedTailError("invariant weights are not constant on the window (block " + b.str() + ")");
  out.weights = RawFunctional(Multiplier::scalar(shape, c));
  return out;
}

RawFunctional compose_antipode(const ModelPtr& model, const RawFunctional& phi) {
  const ShapePtr& shape = model->shape();
  const Multiplier& w = phi.weights();
  if (shape->is_lattice()) {
    BlockMap ex;
    for (const auto& [b, x] : w.explicit_blocks()) ex.emplace(-b, x);
    return RawFunctional(Multiplier(shape, std::move(ex), w.tail().reflect()));
  }
  BlockMap ex;
  for (const auto& iota : shape->blocks()) {
    const AntipodeEntry e = model->antipode_entry(iota);
    ex.emplace(iota, (e.r_inv * w.block(e.partner) * e.r).transpose());
  }
  return RawFunctional(Multiplier(shape, std::move(ex)));
}

ReducedFunctional dual_element(const InvariantFunctional& phi, const FiniteElement& a) {
  BlockMap g;
  for (const auto& [b, x] : a.blocks()) g.emplace(b, x * phi.weights.weight(b));
  return ReducedFunctional(a.shape(), std::move(g));
}

}  // namespace dqg
