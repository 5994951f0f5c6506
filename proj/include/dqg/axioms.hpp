#pragma once

#include <string>
#include <vector>

#include "dqg/model.hpp"

namespace dqg {

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;   // number of exact identities evaluated
  std::string witness;      // first counterexample, reproducible by re-evaluation
  std::string note;         // scope qualifiers such as "window-surjectivity"
};

struct AxiomReport {
  Window window;
  std::vector<AxiomCheck> checks;
  bool all_passed() const;
  const AxiomCheck& get(const std::string& name) const;
};

/// The six axiom groups, checked exactly on F-supported elements:
/// bijectivity (T1/T2), coassociativity, counit, antipode, antipode-flip, cointegral.
AxiomReport check_axioms(const ModelPtr& model, const Window& f);

/// Default window: every block for finite models, the box of radius 4 otherwise.
Window default_window(const ModelPtr& model);

/// Partial transposes on M_n1 (x) M_n2.
Matrix partial_transpose_first(const Matrix& z, std::size_t n1, std::size_t n2);
Matrix partial_transpose_second(const Matrix& z, std::size_t n1, std::size_t n2);

/// (delta (x) id)(X) at the triple (alpha, beta, gamma), given X on pairs.
/// `x_block(xi, gamma)` returns the (xi, gamma) block of X.
template <class F>
Matrix coproduct_left_leg(const QuantumGroupModel& m, const BlockIndex& alpha, const BlockIndex& beta,
                          const BlockIndex& gamma, F&& x_block);
template <class F>
Matrix coproduct_right_leg(const QuantumGroupModel& m, const BlockIndex& alpha, const BlockIndex& beta,
                           const BlockIndex& gamma, F&& x_block);

}  // namespace dqg

#include "dqg/axioms_impl.hpp"
