#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dqg/element.hpp"

namespace dqg {

struct FusionSummand {
  BlockIndex block;
  std::size_t multiplicity = 1;
  friend bool operator==(const FusionSummand&, const FusionSummand&) = default;
};

/// Block (alpha, beta) of the coproduct: delta(a) e_alpha (x) e_beta =
/// U (a_iota_1 (+) ... (+) a_iota_r) U^-1, summands repeated by multiplicity.
struct FusionData {
  std::vector<FusionSummand> summands;
  Matrix u;
  Matrix u_inv;
};

/// kappa(a) at block `partner` equals R a^T R^-1, where a is the block this entry belongs to.
struct AntipodeEntry {
  BlockIndex partner;
  Matrix r;
  Matrix r_inv;
};

using BlockPair = std::pair<BlockIndex, BlockIndex>;

/// A discrete quantum group presented as a direct sum of matrix algebras with
/// fusion, counit, antipode and cointegral data. Immutable once built.
class QuantumGroupModel {
 public:
  /// Explicit finite presentation. Validates dimension counts and invertibility.
  static std::shared_ptr<const QuantumGroupModel> finite(std::string name, ShapePtr shape, BlockIndex trivial,
                                                         std::map<BlockPair, FusionData> fusion,
                                                         std::map<BlockIndex, AntipodeEntry> antipode,
                                                         FiniteElement cointegral);
  /// Function algebra of Z^k: delta(a)(m, n) = a(m + n). Entries of `overrides`
  /// replace the summand of individual pairs (used to plant corruptions).
  static std::shared_ptr<const QuantumGroupModel> lattice(unsigned rank,
                                                          std::map<BlockPair, BlockIndex> overrides = {},
                                                          std::string name = {});

  const std::string& name() const noexcept { return name_; }
  const ShapePtr& shape() const noexcept { return shape_; }
  bool is_finite() const noexcept { return shape_->is_finite(); }
  bool is_lattice() const noexcept { return shape_->is_lattice(); }
  /// Order n of the cyclotomic field Q(zeta_n) holding all structure data.
  unsigned field_order() const noexcept { return field_order_; }
  const BlockIndex& trivial_block() const noexcept { return trivial_; }
  const FiniteElement& cointegral() const noexcept { return cointegral_; }
  const std::map<BlockPair, BlockIndex>& overrides() const noexcept { return overrides_; }
  /// Finite models only.
  const std::map<BlockPair, FusionData>& fusion_table() const;
  const std::map<BlockIndex, AntipodeEntry>& antipode_table() const;

  /// Lattice models: the single summand of the pair (respects overrides).
  BlockIndex lattice_summand(const BlockIndex& a, const BlockIndex& b) const;
  FusionData fusion(const BlockIndex& a, const BlockIndex& b) const;
  AntipodeEntry antipode_entry(const BlockIndex& b) const;
  /// The block whose antipode partner is b.
  BlockIndex antipode_source(const BlockIndex& b) const;

  /// All beta with iota a summand of alpha (x) beta.
  std::vector<BlockIndex> right_partners(const BlockIndex& alpha, const BlockIndex& iota) const;
  /// All alpha with iota a summand of alpha (x) beta.
  std::vector<BlockIndex> left_partners(const BlockIndex& beta, const BlockIndex& iota) const;

  Matrix coproduct_block(const Multiplier& x, const BlockIndex& a, const BlockIndex& b) const;
  Matrix coproduct_block(const FiniteElement& x, const BlockIndex& a, const BlockIndex& b) const;
  Scalar counit(const Multiplier& x) const;
  Scalar counit(const FiniteElement& x) const;
  Multiplier antipode(const Multiplier& x) const;
  FiniteElement antipode(const FiniteElement& x) const;
  /// Antipode applied to a single block: returns kappa(x) at the partner of b.
  Matrix antipode_block(const Matrix& xb, const BlockIndex& b) const;

  std::string str() const;

 private:
  QuantumGroupModel() = default;
  void index_partners();

  std::string name_;
  ShapePtr shape_;
  unsigned field_order_ = 1;
  BlockIndex trivial_;
  FiniteElement cointegral_{nullptr};
  std::map<BlockPair, FusionData> fusion_;
  std::map<BlockIndex, AntipodeEntry> antipode_;
  std::map<BlockIndex, BlockIndex> antipode_source_;
  std::map<BlockPair, BlockIndex> overrides_;
  std::map<BlockPair, std::vector<BlockIndex>> right_partners_;  // (alpha, iota) -> betas
  std::map<BlockPair, std::vector<BlockIndex>> left_partners_;   // (beta, iota) -> alphas
};

using ModelPtr = std::shared_ptr<const QuantumGroupModel>;

}  // namespace dqg
