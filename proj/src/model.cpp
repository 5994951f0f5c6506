#include "dqg/model.hpp"

#include <algorithm>
#include <numeric>

#include "dqg/error.hpp"

namespace dqg {

namespace {

unsigned lcm_orders(unsigned n, const Matrix& m) {
  for (const auto& s : m.data()) n = std::lcm(n, s.order());
  return n;
}

}  // namespace

std::shared_ptr<const QuantumGroupModel> QuantumGroupModel::finite(std::string name, ShapePtr shape,
                                                                   BlockIndex trivial,
                                                                   std::map<BlockPair, FusionData> fusion,
                                                                   std::map<BlockIndex, AntipodeEntry> antipode,
                                                                   FiniteElement cointegral) {
  if (!shape->is_finite()) throw ModelError("explicit fusion tables need a finite block shape");
  if (!shape->contains(trivial) || shape->dim(trivial) != 1) {
    throw ModelError("the trivial block must exist and be one-dimensional");
  }
  std::shared_ptr<QuantumGroupModel> m(new QuantumGroupModel());
  m->name_ = std::move(name);
  m->shape_ = shape;
  m->trivial_ = trivial;
  unsigned order = 1;
  for (const auto& a : shape->blocks()) {
    for (const auto& b : shape->blocks()) {
      const auto it = fusion.find({a, b});
      if (it == fusion.end()) throw ModelError("fusion rule missing for pair (" + a.str() + "," + b.str() + ")");
      FusionData& f = it->second;
      const std::size_t n = shape->dim(a) * shape->dim(b);
      std::size_t count = 0;
      for (const auto& s : f.summands) {
        if (!shape->contains(s.block)) throw ModelError("fusion summand " + s.block.str() + " is not a block");
        if (s.multiplicity == 0) throw ModelError("fusion multiplicities must be positive");
        count += s.multiplicity * shape->dim(s.block);
      }
      if (count != n) {
        throw ModelError("dimension count violated for pair (" + a.str() + "," + b.str() + "): " +
                         std::to_string(count) + " != " + std::to_string(n));
      }
      if (f.u.rows() != n || f.u.cols() != n) throw ModelError("intertwiner has the wrong size");
      if (f.u_inv.rows() == 0) {
        try {
          f.u_inv = inverse(f.u);
        } catch (const SingularMatrixError&) {
          throw ModelError("intertwiner for pair (" + a.str() + "," + b.str() + ") is not invertible");
        }
      } else if (f.u * f.u_inv != Matrix::identity(n)) {
        throw ModelError("intertwiner inverse mismatch for pair (" + a.str() + "," + b.str() + ")");
      }
      order = lcm_orders(lcm_orders(order, f.u), f.u_inv);
    }
  }
  if (fusion.size() != shape->blocks().size() * shape->blocks().size()) {
    throw ModelError("fusion table has pairs outside the block shape");
  }
  for (const auto& b : shape->blocks()) {
    const auto it = antipode.find(b);
    if (it == antipode.end()) throw ModelError("antipode data missing for block " + b.str());
    AntipodeEntry& e = it->second;
    if (!shape->contains(e.partner) || shape->dim(e.partner) != shape->dim(b)) {
      throw ModelError("inconsistent antipode pairing at block " + b.str());
    }
    const std::size_t n = shape->dim(b);
    if (e.r.rows() != n || e.r.cols() != n) throw ModelError("antipode matrix has the wrong size");
    if (e.r_inv.rows() == 0) {
      try {
        e.r_inv = inverse(e.r);
      } catch (const SingularMatrixError&) {
        throw ModelError("antipode matrix at block " + b.str() + " is not invertible");
      }
    }
    if (!m->antipode_source_.emplace(e.partner, b).second) {
      throw ModelError("inconsistent antipode pairing: " + e.partner.str() + " is hit twice");
    }
    order = lcm_orders(lcm_orders(order, e.r), e.r_inv);
  }
  if (antipode.size() != shape->blocks().size()) throw ModelError("antipode data for unknown blocks");
  if (!cointegral.shape()->same_as(*shape)) throw ModelError("cointegral lives on another shape");
  if (cointegral.is_zero()) throw ModelError("the cointegral must be nonzero");
  for (const auto& [b, x] : cointegral.blocks()) order = lcm_orders(order, x);
  m->field_order_ = order;
  m->fusion_ = std::move(fusion);
  m->antipode_ = std::move(antipode);
  m->cointegral_ = std::move(cointegral);
  m->index_partners();
  return m;
}

std::shared_ptr<const QuantumGroupModel> QuantumGroupModel::lattice(unsigned rank,
                                                                    std::map<BlockPair, BlockIndex> overrides,
                                                                    std::string name) {
  std::shared_ptr<QuantumGroupModel> m(new QuantumGroupModel());
  m->shape_ = BlockShape::lattice(rank);
  m->name_ = name.empty() ? m->shape_->str() : std::move(name);
  m->trivial_ = BlockIndex::from_coords(std::vector<std::int32_t>(rank, 0));
  for (const auto& [pair, s] : overrides) {
    if (!m->shape_->contains(pair.first) || !m->shape_->contains(pair.second) || !m->shape_->contains(s)) {
      throw ModelError("fusion override outside the lattice");
    }
  }
  m->overrides_ = std::move(overrides);
  m->cointegral_ = FiniteElement(m->shape_, {{m->trivial_, Matrix{{1}}}});
  return m;
}

void QuantumGroupModel::index_partners() {
  for (const auto& [pair, f] : fusion_) {
    for (const auto& s : f.summands) {
      right_partners_[{pair.first, s.block}].push_back(pair.second);
      left_partners_[{pair.second, s.block}].push_back(pair.first);
    }
  }
}

const std::map<BlockPair, FusionData>& QuantumGroupModel::fusion_table() const {
  if (!is_finite()) throw Error("lattice models have a rule, not a table");
  return fusion_;
}

const std::map<BlockIndex, AntipodeEntry>& QuantumGroupModel::antipode_table() const {
  if (!is_finite()) throw Error("lattice models have a rule, not a table");
  return antipode_;
}

BlockIndex QuantumGroupModel::lattice_summand(const BlockIndex& a, const BlockIndex& b) const {
  if (!overrides_.empty()) {
    const auto it = overrides_.find({a, b});
    if (it != overrides_.end()) return it->second;
  }
  return a + b;
}

FusionData QuantumGroupModel::fusion(const BlockIndex& a, const BlockIndex& b) const {
  if (is_lattice()) {
    if (!shape_->contains(a) || !shape_->contains(b)) throw UnknownBlockError("unknown block pair");
    return FusionData{{{lattice_summand(a, b), 1}}, Matrix{{1}}, Matrix{{1}}};
  }
  const auto it = fusion_.find({a, b});
  if (it == fusion_.end()) throw UnknownBlockError("unknown block pair (" + a.str() + "," + b.str() + ")");
  return it->second;
}

AntipodeEntry QuantumGroupModel::antipode_entry(const BlockIndex& b) const {
  if (is_lattice()) {
    if (!shape_->contains(b)) throw UnknownBlockError("unknown block " + b.str());
    return AntipodeEntry{-b, Matrix{{1}}, Matrix{{1}}};
  }
  const auto it = antipode_.find(b);
  if (it == antipode_.end()) throw UnknownBlockError("unknown block " + b.str());
  return it->second;
}

BlockIndex QuantumGroupModel::antipode_source(const BlockIndex& b) const {
  if (is_lattice()) return -b;
  const auto it = antipode_source_.find(b);
  if (it == antipode_source_.end()) throw UnknownBlockError("unknown block " + b.str());
  return it->second;
}

std::vector<BlockIndex> QuantumGroupModel::right_partners(const BlockIndex& alpha, const BlockIndex& iota) const {
  if (is_finite()) {
    const auto it = right_partners_.find({alpha, iota});
    return it == right_partners_.end() ? std::vector<BlockIndex>{} : it->second;
  }
  std::vector<BlockIndex> out;
  const BlockIndex b = iota - alpha;
  if (lattice_summand(alpha, b) == iota) out.push_back(b);
  for (const auto& [pair, s] : overrides_) {
    if (pair.first == alpha && s == iota && pair.second != b) out.push_back(pair.second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BlockIndex> QuantumGroupModel::left_partners(const BlockIndex& beta, const BlockIndex& iota) const {
  if (is_finite()) {
    const auto it = left_partners_.find({beta, iota});
    return it == left_partners_.end() ? std::vector<BlockIndex>{} : it->second;
  }
  std::vector<BlockIndex> out;
  const BlockIndex a = iota - beta;
  if (lattice_summand(a, beta) == iota) out.push_back(a);
  for (const auto& [pair, s] : overrides_) {
    if (pair.second == beta && s == iota && pair.first != a) out.push_back(pair.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Matrix QuantumGroupModel::coproduct_block(const Multiplier& x, const BlockIndex& a, const BlockIndex& b) const {
  if (is_lattice()) {
    if (!shape_->contains(a) || !shape_->contains(b)) throw UnknownBlockError("unknown block pair");
    return x.block(lattice_summand(a, b));
  }
  const auto it = fusion_.find({a, b});
  if (it == fusion_.end()) throw UnknownBlockError("unknown block pair (" + a.str() + "," + b.str() + ")");
  const FusionData& f = it->second;
  std::vector<Matrix> parts;
  bool zero = true;
  for (const auto& s : f.summands) {
    Matrix xb = x.block(s.block);
    zero = zero && xb.is_zero();
    for (std::size_t k = 0; k < s.multiplicity; ++k) parts.push_back(xb);
  }
  const std::size_t n = f.u.rows();
  if (zero) return Matrix(n, n);
  if (n == 1) return parts.front();
  return f.u * direct_sum(parts) * f.u_inv;
}

Matrix QuantumGroupModel::coproduct_block(const FiniteElement& x, const BlockIndex& a, const BlockIndex& b) const {
  return coproduct_block(embed(x), a, b);
}

Scalar QuantumGroupModel::counit(const Multiplier& x) const { return x.block(trivial_)(0, 0); }

Scalar QuantumGroupModel::counit(const FiniteElement& x) const { return x.block(trivial_)(0, 0); }

Matrix QuantumGroupModel::antipode_block(const Matrix& xb, const BlockIndex& b) const {
  if (is_lattice()) return xb;
  const auto& e = antipode_.at(b);
  if (xb.rows() == 1) return xb;
  return e.r * xb.transpose() * e.r_inv;
}

Multiplier QuantumGroupModel::antipode(const Multiplier& x) const {
  BlockMap out;
  if (is_lattice()) {
    for (const auto& [b, m] : x.explicit_blocks()) out.emplace(-b, m);
    return Multiplier(shape_, std::move(out), x.tail().reflect());
  }
  for (const auto& b : shape_->blocks()) out.emplace(antipode_.at(b).partner, antipode_block(x.block(b), b));
  return Multiplier(shape_, std::move(out));
}

FiniteElement QuantumGroupModel::antipode(const FiniteElement& x) const {
  BlockMap out;
  for (const auto& [b, m] : x.blocks()) out.emplace(antipode_entry(b).partner, antipode_block(m, b));
  return FiniteElement(shape_, std::move(out));
}

std::string QuantumGroupModel::str() const {
  return name_ + " on " + shape_->str() + " over Q(zeta_" + std::to_string(field_order_) + ")";
}

}  // namespace dqg
