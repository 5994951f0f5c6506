#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dqg/model.hpp"
#include "dqg/sparse.hpp"

namespace dqg {

/// Rows (alpha, i, j), columns (beta, p, q) over the window; the entry is
/// coproduct_block(x, alpha, beta)((i, p), (j, q)). Its rank is the tensor rank
/// of delta(x) restricted to F x F.
Matrix coefficient_matrix(const QuantumGroupModel& model, const Multiplier& x, const Window& f);

/// Exact coordinates for multipliers with a closed-form coproduct.
/// Finite models use matrix-unit coordinates (block, i, j) in block order.
/// Lattice models use the functions g |-> g^e lambda^g; an element is
/// representable when it equals its tail rule, and delta is expanded with
/// (m + n)^e = sum binom(e, a) m^a n^(e - a).
class Ambient {
 public:
  using Tensor = std::map<std::pair<std::size_t, std::size_t>, Scalar>;

  explicit Ambient(ModelPtr model);

  const ModelPtr& model() const noexcept { return model_; }
  /// Throws UnsupportedTailError when x has no exact coordinates.
  SparseVector coords(const Multiplier& x) const;
  bool representable(const Multiplier& x) const;
  Multiplier element(const SparseVector& v) const;
  Tensor coproduct(const Multiplier& x) const;
  Tensor tensor(const SparseVector& a, const SparseVector& b) const;
  /// Human-readable name of a coordinate, e.g. "(2,0,1)" or "g*2^g".
  std::string key_str(std::size_t index) const;
  /// Indices in canonical key order.
  std::vector<std::size_t> ordered(const std::vector<std::size_t>& indices) const;

 private:
  using LatticeKey = std::pair<std::vector<Scalar>, std::array<std::uint8_t, BlockIndex::max_rank>>;
  std::size_t lattice_index(const LatticeKey& k) const;

  ModelPtr model_;
  // finite models
  std::map<BlockIndex, std::size_t> offset_;
  std::vector<std::tuple<BlockIndex, std::size_t, std::size_t>> finite_keys_;
  // lattice models: indices are assigned on first use
  mutable std::map<LatticeKey, std::size_t> lattice_index_;
  mutable std::vector<LatticeKey> lattice_keys_;
};

enum class Verdict { yes, no, inconclusive };
std::string verdict_str(Verdict v);

struct APVerdict {
  Verdict status = Verdict::inconclusive;
  std::vector<std::size_t> profile;       // rank on the window of radius r, r = 0..horizon
  std::size_t rank = 0;                   // N for yes; the exceeding rank for no
  std::size_t bound = 0;                  // rank cap that was applied
  std::optional<std::size_t> certified;   // closed-form rank when available
  Window witness;                         // no: window where the rank exceeds the bound
  std::vector<Multiplier> x_legs, y_legs; // yes: delta(x) = sum x_k (x) y_k
  std::string reason;
};

/// Decides whether delta(x) is a finite sum of elementary tensors. The bound
/// defaults to the closed-form rank of the tail (a larger window rank proves a
/// nonzero finitely supported deviation) or the algebra dimension for finite models.
APVerdict ap_test(const ModelPtr& model, const Multiplier& x, unsigned horizon,
                  std::optional<std::size_t> bound = std::nullopt);

enum class LemmaStatus { independent, dependent, inconclusive };
std::string lemma_status_str(LemmaStatus s);

struct LemmaResult {
  LemmaStatus status = LemmaStatus::inconclusive;
  Window window;                          // last explored window F
  FiniteElement unit{nullptr};            // e_F, the central idempotent of F
  std::vector<Window> windows;            // every explored window, in growth order
  std::vector<Matrix> kernels;            // V_F basis (columns) for each explored window
  std::vector<Scalar> alpha;              // dependent: sum alpha_k x_k = 0
  std::vector<std::vector<Scalar>> relations;  // dependent: a basis of all relations
  std::string reason;
};

/// Grows F one block at a time, always adding the first block (in canonical
/// order within the horizon) that shrinks V_F = {alpha : sum alpha_k x_k e_F = 0}.
LemmaResult lemma_l(const ModelPtr& model, const std::vector<Multiplier>& xs, unsigned horizon);

/// Blocks of the ball of the given radius in the order used by lemma_l:
/// blocks without negative coordinates first, then by radius, then lexicographically.
std::vector<BlockIndex> canonical_order(const BlockShape& shape, unsigned radius);

}  // namespace dqg
