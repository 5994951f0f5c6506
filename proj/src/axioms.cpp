#include "dqg/axioms.hpp"

#include <set>
#include <tuple>

#include "dqg/error.hpp"
#include "dqg/sparse.hpp"

namespace dqg {

bool AxiomReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const AxiomCheck& AxiomReport::get(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw Error("no axiom check named " + name);
}

Window default_window(const ModelPtr& model) {
  return model->shape()->ball(4);
}

Matrix partial_transpose_first(const Matrix& z, std::size_t n1, std::size_t n2) {
  Matrix r(n1 * n2, n1 * n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t p = 0; p < n2; ++p)
      for (std::size_t j = 0; j < n1; ++j)
        for (std::size_t q = 0; q < n2; ++q) r(j * n2 + p, i * n2 + q) = z(i * n2 + p, j * n2 + q);
  return r;
}

Matrix partial_transpose_second(const Matrix& z, std::size_t n1, std::size_t n2) {
  Matrix r(n1 * n2, n1 * n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t p = 0; p < n2; ++p)
      for (std::size_t j = 0; j < n1; ++j)
        for (std::size_t q = 0; q < n2; ++q) r(i * n2 + q, j * n2 + p) = z(i * n2 + p, j * n2 + q);
  return r;
}

namespace {

std::string unit_str(const BlockIndex& b, std::size_t i, std::size_t j) {
  return "E[" + b.str() + "](" + std::to_string(i) + "," + std::to_string(j) + ")";
}

Multiplier unit(const ShapePtr& s, const BlockIndex& b, std::size_t i, std::size_t j) {
  return embed(matrix_unit(s, b, i, j));
}

class Checker {
 public:
  explicit Checker(std::string name) { c_.name = std::move(name); }
  /// Records one identity; keeps the first witness.
  template <class W>
  void expect(bool ok, W&& witness) {
    ++c_.checks;
    if (!ok && c_.passed) {
      c_.passed = false;
      c_.witness = witness();
    }
  }
  AxiomCheck& result() { return c_; }

 private:
  AxiomCheck c_;
};

std::vector<BlockIndex> summand_blocks(const QuantumGroupModel& m, const BlockIndex& a, const BlockIndex& b) {
  std::vector<BlockIndex> out;
  for (const auto& s : m.fusion(a, b).summands) out.push_back(s.block);
  return out;
}

/// Index assignment for the coordinates (alpha, beta, row, col) of A (x) A.
class CoordinateIndex {
 public:
  std::size_t of(const BlockIndex& a, const BlockIndex& b, std::size_t r, std::size_t c) {
    const auto key = std::make_tuple(a, b, r, c);
    const auto [it, inserted] = index_.try_emplace(key, index_.size());
    return it->second;
  }
  SparseVector sparse(const BlockIndex& a, const BlockIndex& b, const Matrix& z) {
    SparseVector v;
    for (std::size_t r = 0; r < z.rows(); ++r)
      for (std::size_t c = 0; c < z.cols(); ++c) {
        if (!z(r, c).is_zero()) v.emplace(of(a, b, r, c), z(r, c));
      }
    return v;
  }

 private:
  std::map<std::tuple<BlockIndex, BlockIndex, std::size_t, std::size_t>, std::size_t> index_;
};

/// T1(a (x) b) = delta(a)(1 (x) b) and T2(a (x) b) = (a (x) 1) delta(b).
void check_bijectivity(const QuantumGroupModel& m, const Window& f, AxiomReport& report) {
  const auto& shape = m.shape();
  std::set<BlockIndex> inputs(f.begin(), f.end());
  for (const auto& a : f)
    for (const auto& b : f)
      for (const auto& s : summand_blocks(m, a, b)) inputs.insert(s);
  const std::string note = m.is_finite() ? "full space" : "window-surjectivity on " + std::to_string(f.size()) + " blocks";

  Checker chk("bijectivity");
  for (int side = 1; side <= 2; ++side) {
    const std::string tag = side == 1 ? "T1: " : "T2: ";
    CoordinateIndex idx;
    SpanTracker span;
    for (const auto& iota : inputs) {
      const std::size_t ni = shape->dim(iota);
      for (const auto& beta : f) {
        const std::size_t nb = shape->dim(beta);
        for (std::size_t i = 0; i < ni; ++i)
          for (std::size_t j = 0; j < ni; ++j)
            for (std::size_t p = 0; p < nb; ++p)
              for (std::size_t q = 0; q < nb; ++q) {
                SparseVector v;
                const Multiplier x = unit(shape, iota, i, j);
                if (side == 1) {
                  // input delta-leg at iota, right factor E[beta](p,q)
                  for (const auto& alpha : m.left_partners(beta, iota)) {
                    const std::size_t na = shape->dim(alpha);
                    const Matrix z = m.coproduct_block(x, alpha, beta) * kron(Matrix::identity(na), Matrix::unit(nb, p, q));
                    for (auto& [k, s] : idx.sparse(alpha, beta, z)) v.emplace(k, s);
                  }
                } else {
                  // left factor E[beta](p,q), delta-leg at iota
                  for (const auto& gamma : m.right_partners(beta, iota)) {
                    const std::size_t ng = shape->dim(gamma);
                    const Matrix z = kron(Matrix::unit(nb, p, q), Matrix::identity(ng)) * m.coproduct_block(x, beta, gamma);
                    for (auto& [k, s] : idx.sparse(beta, gamma, z)) v.emplace(k, s);
                  }
                }
                const bool independent = span.insert(v);
                chk.expect(independent, [&] {
                  return tag + "image of " + unit_str(iota, i, j) + " (x) " + unit_str(beta, p, q) +
                         " is dependent on earlier images (not injective)";
                });
              }
      }
    }
    for (const auto& a : f)
      for (const auto& b : f) {
        const std::size_t n = shape->dim(a) * shape->dim(b);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c) {
            const SparseVector target{{idx.of(a, b, r, c), Scalar(1)}};
            chk.expect(span.contains(target), [&] {
              return tag + "basis element (" + a.str() + "," + b.str() + ")[" + std::to_string(r) + "," + std::to_string(c) +
                     "] is not in the image";
            });
          }
      }
  }
  chk.result().note = note;
  report.checks.push_back(std::move(chk.result()));
}

void check_coassociativity(const QuantumGroupModel& m, const Window& f, AxiomReport& report) {
  Checker chk("coassociativity");
  const auto& shape = m.shape();
  if (shape->is_commutative()) {
    // One-dimensional blocks: delta(a)(x, y) = a(s(x, y)), so coassociativity is
    // the associativity of the summand map.
    auto s = [&](const BlockIndex& a, const BlockIndex& b) {
      return m.is_lattice() ? m.lattice_summand(a, b) : m.fusion_table().at({a, b}).summands.front().block;
    };
    for (const auto& a : f)
      for (const auto& b : f)
        for (const auto& c : f) {
          const BlockIndex l = s(s(a, b), c), r = s(a, s(b, c));
          chk.expect(l == r, [&] {
            return "triple (" + a.str() + "," + b.str() + "," + c.str() + "): (delta(x)id)delta picks block " + l.str() +
                   ", (id(x)delta)delta picks block " + r.str();
          });
        }
  } else {
    for (const auto& a : f)
      for (const auto& b : f)
        for (const auto& c : f) {
          std::set<BlockIndex> relevant;
          for (const auto& xi : summand_blocks(m, a, b))
            for (const auto& s : summand_blocks(m, xi, c)) relevant.insert(s);
          for (const auto& eta : summand_blocks(m, b, c))
            for (const auto& s : summand_blocks(m, a, eta)) relevant.insert(s);
          for (const auto& iota : relevant) {
            const std::size_t n = shape->dim(iota);
            for (std::size_t i = 0; i < n; ++i)
              for (std::size_t j = 0; j < n; ++j) {
                const Multiplier x = unit(shape, iota, i, j);
                auto blk = [&](const BlockIndex& u, const BlockIndex& v) { return m.coproduct_block(x, u, v); };
                const Matrix l = coproduct_left_leg(m, a, b, c, blk);
                const Matrix r = coproduct_right_leg(m, a, b, c, blk);
                chk.expect(l == r, [&] {
                  return "triple (" + a.str() + "," + b.str() + "," + c.str() + ") at " + unit_str(iota, i, j);
                });
              }
          }
        }
  }
  report.checks.push_back(std::move(chk.result()));
}

void check_counit(const QuantumGroupModel& m, const Window& f, AxiomReport& report) {
  Checker chk("counit");
  const auto& shape = m.shape();
  const BlockIndex& e = m.trivial_block();
  for (const auto& b : f) {
    for (int side = 0; side < 2; ++side) {
      const BlockIndex& l = side == 0 ? e : b;
      const BlockIndex& r = side == 0 ? b : e;
      const auto s = m.fusion(l, r).summands;
      const bool single = s.size() == 1 && s.front().block == b && s.front().multiplicity == 1;
      chk.expect(single, [&] {
        return std::string(side == 0 ? "(eps(x)id)" : "(id(x)eps)") + "delta at block " + b.str() +
               " does not reduce to the block itself";
      });
      if (!single) continue;
      const std::size_t n = shape->dim(b);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const Matrix z = m.coproduct_block(unit(shape, b, i, j), l, r);
          chk.expect(z == Matrix::unit(n, i, j), [&] {
            return std::string(side == 0 ? "(eps(x)id)" : "(id(x)eps)") + "delta differs at " + unit_str(b, i, j);
          });
        }
    }
  }
  report.checks.push_back(std::move(chk.result()));
}

void check_antipode(const QuantumGroupModel& m, const Window& f, AxiomReport& report) {
  Checker chk("antipode");
  const auto& shape = m.shape();
  const BlockIndex& e = m.trivial_block();
  // m[(id(x)kappa)((e_alpha (x) 1) delta(b))(1 (x) e_alpha)] = eps(b) e_alpha and its mirror.
  for (const auto& alpha : f) {
    const std::size_t na = shape->dim(alpha);
    const BlockIndex beta = m.antipode_source(alpha);
    const std::size_t nb = shape->dim(beta);
    const AntipodeEntry rb = m.antipode_entry(beta);
    for (int side = 0; side < 2; ++side) {
      std::set<BlockIndex> relevant{e};
      const auto sums = side == 0 ? summand_blocks(m, alpha, beta) : summand_blocks(m, beta, alpha);
      relevant.insert(sums.begin(), sums.end());
      for (const auto& iota : relevant) {
        const std::size_t ni = shape->dim(iota);
        for (std::size_t i = 0; i < ni; ++i)
          for (std::size_t j = 0; j < ni; ++j) {
            const Multiplier x = unit(shape, iota, i, j);
            const Scalar eps = m.counit(x);
            Matrix lhs;
            if (side == 0) {
              const Matrix z = partial_transpose_second(m.coproduct_block(x, alpha, beta), na, nb);
              const Matrix k = kron(Matrix::identity(na), rb.r) * z * kron(Matrix::identity(na), rb.r_inv);
              lhs = multiply_legs(k, na);
            } else {
              const Matrix z = partial_transpose_first(m.coproduct_block(x, beta, alpha), nb, na);
              const Matrix k = kron(rb.r, Matrix::identity(na)) * z * kron(rb.r_inv, Matrix::identity(na));
              lhs = multiply_legs(k, na);
            }
            chk.expect(lhs == Matrix::scalar(na, eps), [&] {
              return std::string(side == 0 ? "m(id(x)kappa)" : "m(kappa(x)id)") + " at block " + alpha.str() + " for b = " +
                     unit_str(iota, i, j);
            });
          }
      }
    }
  }
  // kappa is an antihomomorphism and kappa(kappa(a)^*)^* = a.
  for (const auto& b : f) {
    const std::size_t n = shape->dim(b);
    const BlockIndex p = m.antipode_entry(b).partner;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Matrix x = Matrix::unit(n, i, j);
        const Matrix kx = m.antipode_block(x, b);
        const Matrix back = m.antipode_block(kx.adjoint(), p).adjoint();
        chk.expect(back == x, [&] { return "kappa(kappa(a)^*)^* != a for a = " + unit_str(b, i, j); });
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l) {
            const Matrix y = Matrix::unit(n, k, l);
            chk.expect(m.antipode_block(x * y, b) == m.antipode_block(y, b) * kx, [&] {
              return "kappa(ab) != kappa(b)kappa(a) for a = " + unit_str(b, i, j) + ", b = " + unit_str(b, k, l);
            });
          }
      }
  }
  report.checks.push_back(std::move(chk.result()));
}

/// delta(kappa(a)) = (kappa (x) kappa) delta'(a), with delta' the flipped coproduct.
void check_antipode_flip(const QuantumGroupModel& m, const Window& f, AxiomReport& report) {
  Checker chk("antipode-flip");
  const auto& shape = m.shape();
  for (const auto& a : f)
    for (const auto& b : f) {
      const BlockIndex xi = m.antipode_source(a), eta = m.antipode_source(b);
      if (shape->is_commutative()) {
        // All blocks 1x1: compare the blocks each side reads.
        const auto l = summand_blocks(m, a, b);
        const auto r = summand_blocks(m, eta, xi);
        const BlockIndex lb = m.antipode_source(l.front());
        chk.expect(lb == r.front(), [&] {
          return "pair (" + a.str() + "," + b.str() + "): delta(kappa) reads block " + lb.str() +
                 ", (kappa(x)kappa)delta' reads block " + r.front().str();
        });
        continue;
      }
      const std::size_t na = shape->dim(a), nb = shape->dim(b);
      const AntipodeEntry rx = m.antipode_entry(xi), re = m.antipode_entry(eta);
      std::set<BlockIndex> relevant;
      for (const auto& s : summand_blocks(m, a, b)) relevant.insert(m.antipode_source(s));
      for (const auto& s : summand_blocks(m, eta, xi)) relevant.insert(s);
      for (const auto& iota : relevant) {
        const std::size_t ni = shape->dim(iota);
        for (std::size_t i = 0; i < ni; ++i)
          for (std::size_t j = 0; j < ni; ++j) {
            const Multiplier x = unit(shape, iota, i, j);
            const Matrix lhs = m.coproduct_block(m.antipode(x), a, b);
            const Matrix flipped = flip_factors(m.coproduct_block(x, eta, xi), nb, na);
            const Matrix rhs = kron(rx.r, re.r) * flipped.transpose() * kron(rx.r_inv, re.r_inv);
            chk.expect(lhs == rhs, [&] {
              return "pair (" + a.str() + "," + b.str() + ") at " + unit_str(iota, i, j);
            });
          }
      }
    }
  report.checks.push_back(std::move(chk.result()));
}

void check_cointegral(const QuantumGroupModel& m, const Window& f, AxiomReport& report) {
  Checker chk("cointegral");
  const auto& shape = m.shape();
  const FiniteElement& h = m.cointegral();
  std::set<BlockIndex> blocks(f.begin(), f.end());
  for (const auto& [b, x] : h.blocks()) blocks.insert(b);
  blocks.insert(m.trivial_block());
  for (const auto& b : blocks) {
    const std::size_t n = shape->dim(b);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const FiniteElement a = matrix_unit(shape, b, i, j);
        chk.expect(a * h == h * m.counit(a), [&] { return "a h != eps(a) h for a = " + unit_str(b, i, j); });
      }
  }
  report.checks.push_back(std::move(chk.result()));
}

}  // namespace

AxiomReport check_axioms(const ModelPtr& model, const Window& f) {
  if (f.empty()) throw Error("axiom window must be nonempty");
  for (const auto& b : f) {
    if (!model->shape()->contains(b)) throw UnknownBlockError("window block " + b.str() + " is not in the shape");
  }
  AxiomReport report;
  report.window = f;
  check_bijectivity(*model, f, report);
  check_coassociativity(*model, f, report);
  check_counit(*model, f, report);
  check_antipode(*model, f, report);
  check_antipode_flip(*model, f, report);
  check_cointegral(*model, f, report);
  return report;
}

}  // namespace dqg
