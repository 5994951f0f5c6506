#pragma once

#include <string>
#include <vector>

#include "dqg/model.hpp"

namespace dqg {

/// Finite group given by its Cayley table; elements are 0..n-1.
class FiniteGroup {
 public:
  /// Validates closure, associativity, identity and inverses.
  FiniteGroup(std::string name, std::vector<std::vector<int>> table, std::vector<std::string> labels = {});
  static FiniteGroup cyclic(int n);
  /// Permutations of {1..n} in lexicographic order, so the identity is element 0.
  static FiniteGroup symmetric(int n);

  const std::string& name() const noexcept { return name_; }
  int size() const noexcept { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const noexcept { return e_; }
  int element_order(int a) const;
  int exponent() const;
  /// Greedy generating set: each element is added if it is not yet generated.
  std::vector<int> generators() const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::vector<int>>& table() const noexcept { return table_; }

 private:
  std::string name_;
  std::vector<std::vector<int>> table_;
  std::vector<std::string> labels_;
  std::vector<int> inv_;
  int e_ = 0;
};

/// An irreducible unitary representation: one matrix per group element.
struct Irrep {
  std::vector<Matrix> images;
  std::vector<Scalar> character;
  std::size_t dim() const { return images.front().rows(); }
};

/// Irreducible unitary representations over a cyclotomic field, found by
/// splitting the regular representation. Sorted by dimension, trivial first,
/// then lexicographically by character.
std::vector<Irrep> irreducible_representations(const FiniteGroup& g);

/// C(G): one-dimensional blocks indexed by group elements, delta(f)(a, b) = f(ab).
ModelPtr function_algebra(const FiniteGroup& g);
/// The group algebra C[G] in block form, blocks indexed by irreducible representations.
ModelPtr group_dual(const FiniteGroup& g);

/// Named models: "Z", "Z^k", "C(Z/n)", "C(Sn)", "dual(Z/n)", "dual(Sn)".
ModelPtr builtin_model(const std::string& name);
std::vector<std::string> builtin_model_names();

}  // namespace dqg
