#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "dqg/ap.hpp"
#include "dqg/bohr.hpp"
#include "dqg/model.hpp"

namespace dqg {

// Every format is JSON. Scalars are strings in the element-expression grammar
// ("3/4", "(1/2 + zeta(8,1))"), matrices are arrays of rows, elements are
// expression strings. Output is canonical: sorted keys, two-space indent.

/// Finite models: {name, field, blocks: [{label, dim}], trivial_block, fusion: [{pair,
/// summands, u, u_inv}], antipode: [{block, partner, r, r_inv}], cointegral: [{block, value}]}.
/// Lattice models: {name, field, generator: "Z^k", trivial_block, fusion: {rule: "sum",
/// overrides: [{pair, summand}]}, antipode: "negation", cointegral: "counting"}.
std::string model_to_json(const QuantumGroupModel& model);
/// Throws ParseError on malformed JSON and ModelError on inconsistent data.
ModelPtr model_from_json(std::string_view text);
/// FNV-1a 64 of the canonical JSON, as 16 hex digits.
std::string model_digest(const QuantumGroupModel& model);
/// A builtin name, or else a path to a model file.
ModelPtr load_model(const std::string& name_or_path);

/// {"size": N, "entries": [["char(2)", "poly(1)*char(2)"], ["0", "char(2)"]]}
Corepresentation corep_from_json(const ModelPtr& model, std::string_view text);
std::string corep_to_json(const Corepresentation& u);

/// {"element", "rank", "x_legs", "y_legs", "profile", "window"} for a yes verdict.
std::string decomposition_to_json(const Multiplier& x, const APVerdict& v, unsigned horizon);

/// Basis labels and dense structure constants; round-trips through structure_from_json,
/// which also accepts a presentation file.
std::string structure_to_json(const HopfStructure& s);
HopfStructure structure_from_json(std::string_view text);
/// structure_to_json plus the model digest and the basis elements as expressions.
std::string presentation_to_json(const HopfPresentation& p);

/// {"builtin": "laurent" | "trivial"}, a presentation file (its "structure" is used),
/// or explicit {"name", "generators", "relations": [[{"coeff", "word"}]],
/// "coproduct": [[{"coeff", "left", "right"}]], "counit", "antipode": [[{"coeff", "word"}]]}
/// with words given as lists of generator names.
HopfGenerators hopf_from_json(std::string_view text);

/// {"t": "char(2)", ...}
std::map<std::string, Multiplier> images_from_json(const ModelPtr& model, std::string_view text);

std::string read_file(const std::string& path);

}  // namespace dqg
