#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dqg/ap.hpp"
#include "dqg/axioms.hpp"

namespace dqg {

/// N x N array of multipliers u[k][l] with (id (x) delta)u = u12 u13.
struct Corepresentation {
  std::vector<std::vector<Multiplier>> u;
  std::size_t size() const noexcept { return u.size(); }
};

struct CorepResult {
  bool valid = false;
  std::size_t checks = 0;
  std::string witness;                 // invalid: first failing coefficient and pair
  std::vector<Multiplier> coefficients;  // row-major u[k][l]
  std::vector<APVerdict> verdicts;     // ap_test of each coefficient
};

/// Checks delta(u_kl) = sum_p u_kp (x) u_pl blockwise on F x F, then runs
/// ap_test on every coefficient and requires yes with rank <= N.
CorepResult corep_check(const ModelPtr& model, const Corepresentation& u, const Window& f, unsigned horizon = 4);

/// u_kl = (omega_k (x) id) delta(b_l) for the matrix-unit basis b of a finite
/// model and the dual matrix-entry functionals omega.
Corepresentation regular_corepresentation(const ModelPtr& model);

/// m((kappa (x) id) delta(x)) = eps(x) 1 and m((id (x) kappa) delta(x)) = eps(x) 1
/// on F from the extracted legs, plus closure of the elements under products,
/// sums and adjoints. Groups: "almost-periodic", "antipode-left",
/// "antipode-right", "closure".
AxiomReport hopf_identity_suite(const ModelPtr& model, const std::vector<Multiplier>& elements, const Window& f,
                                unsigned horizon = 4);

using Coords = std::vector<Scalar>;
using TensorCoords = std::map<std::pair<std::size_t, std::size_t>, Scalar>;

/// Structure constants of a Hopf *-algebra on a finite basis. Products are
/// stored for the pairs whose product lies in the span; a degree-truncated
/// presentation leaves the others out.
struct HopfStructure {
  std::string name;
  std::vector<std::string> labels;
  std::size_t unit = 0;
  unsigned truncation_degree = 0;   // 0 when the span is closed under products
  std::map<std::pair<std::size_t, std::size_t>, Coords> product;
  std::vector<TensorCoords> coproduct;
  Coords counit;
  std::vector<Coords> antipode;
  std::vector<Coords> involution;

  std::size_t dimension() const noexcept { return labels.size(); }
  bool product_complete() const noexcept { return product.size() == dimension() * dimension(); }
  /// Product of two coordinate vectors if every needed basis product is known.
  std::optional<Coords> multiply(const Coords& a, const Coords& b) const;
};

/// Hopf identities checked on the structure constants alone. Identities that need
/// products missing from a truncated table are counted in the note as skipped.
AxiomReport verify_structure(const HopfStructure& s);

struct HopfPresentation {
  ModelPtr model;
  HopfStructure structure;
  std::vector<Multiplier> basis;
  std::vector<unsigned> degree;     // word degree of each basis element
  Window independence_window;       // lemma_l certificate that the basis is independent
};

/// Degree-truncated sub-Hopf-algebra generated by the corepresentation coefficients,
/// their adjoints and their antipodes. Throws ModelError when a coefficient set is
/// invalid or the span is not closed under delta, kappa or *.
HopfPresentation bohr_generate(const ModelPtr& model, const std::vector<Corepresentation>& coreps, unsigned degree);

/// verify_structure plus the identities that need products beyond the truncation,
/// evaluated exactly in M(A), and a blockwise re-check of every structure constant on F.
AxiomReport verify_presentation(const HopfPresentation& p, const Window& f);

// ---------------------------------------------------------------------------
// Universal property

/// A word is a product of generators (empty word = 1).
using Word = std::vector<std::size_t>;
struct WordTerm {
  Scalar coeff;
  Word word;
};
struct WordTensorTerm {
  Scalar coeff;
  Word left, right;
};

/// Compact-type Hopf algebra given by generators, relations and the values of
/// the structure maps on generators.
struct HopfGenerators {
  std::string name;
  std::vector<std::string> generators;
  std::vector<std::vector<WordTerm>> relations;     // each combination must vanish
  std::vector<std::vector<WordTensorTerm>> coproduct;  // per generator
  std::vector<Scalar> counit;
  std::vector<std::vector<WordTerm>> antipode;

  /// Laurent polynomials: t, t_inv with t t_inv = t_inv t = 1 and t group-like.
  static HopfGenerators laurent();
  /// The one-dimensional Hopf algebra C.
  static HopfGenerators trivial();
  /// Every basis element becomes a generator; the product table becomes relations.
  static HopfGenerators from_structure(const HopfStructure& s);
  std::size_t index(const std::string& generator) const;
};

struct FactorizationCheck {
  std::string name;     // "relations", "intertwining", "almost-periodic", "inclusion"
  bool passed = true;
  std::size_t checks = 0;
  std::string witness;
};

struct Factorization {
  bool success = false;
  std::vector<FactorizationCheck> checks;
  std::vector<Multiplier> images;      // Phi-bar of each generator, now with codomain AP
  std::vector<APVerdict> certificates; // ap_test of each image
  const FactorizationCheck& get(const std::string& name) const;
};

/// Checks that generator images define a Hopf morphism B -> M(A) through AP:
/// relations among images, (Phi (x) Phi) delta_B = delta Phi on F x F, every image
/// almost periodic, and Phi = chi o Phi-bar with chi the inclusion (rebuilt from legs).
Factorization factorize(const ModelPtr& model, const HopfGenerators& b, const std::map<std::string, Multiplier>& images,
                        const Window& f, unsigned horizon);

}  // namespace dqg
