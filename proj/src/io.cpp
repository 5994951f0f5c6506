#include "dqg/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dqg/builders.hpp"
#include "dqg/error.hpp"
#include "dqg/expr.hpp"

namespace dqg {

using json = nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.byte, {}, std::string("malformed JSON: ") + e.what());
  }
}

[[noreturn]] void bad(const std::string& what) { throw ParseError(0, {}, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

long as_integer(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<long>();
}

json scalar_json(const Scalar& s) { return s.str(); }
Scalar scalar_of(const json& j) { return parse_scalar(as_string(j, "scalar")); }

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_of(const json& j) {
  if (!j.is_array() || j.empty()) bad("matrix must be a nonempty array of rows");
  const std::size_t n = j.size();
  const std::size_t c = j[0].is_array() ? j[0].size() : 0;
  Matrix m(n, c);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != c) bad("matrix rows must have equal length");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = scalar_of(j[i][k]);
  }
  return m;
}

json block_json(const BlockIndex& b, bool lattice) {
  if (!lattice) return b[0];
  json c = json::array();
  for (std::size_t k = 0; k < b.size(); ++k) c.push_back(b[k]);
  return c;
}

BlockIndex block_of(const json& j, bool lattice) {
  if (!lattice) return BlockIndex(static_cast<std::int32_t>(as_integer(j, "block")));
  if (!j.is_array()) bad("lattice block must be an array of coordinates");
  std::vector<std::int32_t> c;
  for (const auto& x : j) c.push_back(static_cast<std::int32_t>(as_integer(x, "block coordinate")));
  return BlockIndex::from_coords(c);
}

json coords_json(const Coords& c) {
  json a = json::array();
  for (const auto& s : c) a.push_back(scalar_json(s));
  return a;
}

Coords coords_of(const json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) bad("coordinate vector must have length " + std::to_string(n));
  Coords c;
  for (const auto& x : j) c.push_back(scalar_of(x));
  return c;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string model_to_json(const QuantumGroupModel& m) {
  json j;
  j["name"] = m.name();
  j["field"] = m.field_order();
  const BlockShape& shape = *m.shape();
  if (m.is_lattice()) {
    j["generator"] = "Z^" + std::to_string(shape.lattice_rank());
    j["trivial_block"] = block_json(m.trivial_block(), true);
    json overrides = json::array();
    for (const auto& [pair, summand] : m.overrides())
      overrides.push_back({{"pair", {block_json(pair.first, true), block_json(pair.second, true)}},
                           {"summand", block_json(summand, true)}});
    j["fusion"] = {{"rule", "sum"}, {"overrides", overrides}};
    j["antipode"] = "negation";
    j["cointegral"] = "counting";
    return dump(j);
  }
  json blocks = json::array();
  for (const auto& b : shape.blocks()) blocks.push_back({{"label", shape.label(b)}, {"dim", shape.dim(b)}});
  j["blocks"] = blocks;
  j["trivial_block"] = block_json(m.trivial_block(), false);
  json fusion = json::array();
  for (const auto& [pair, d] : m.fusion_table()) {
    json summands = json::array();
    for (const auto& s : d.summands) summands.push_back({block_json(s.block, false), s.multiplicity});
    fusion.push_back({{"pair", {block_json(pair.first, false), block_json(pair.second, false)}},
                      {"summands", summands},
                      {"u", matrix_json(d.u)},
                      {"u_inv", matrix_json(d.u_inv)}});
  }
  j["fusion"] = fusion;
  json antipode = json::array();
  for (const auto& [b, e] : m.antipode_table())
    antipode.push_back({{"block", block_json(b, false)},
                        {"partner", block_json(e.partner, false)},
                        {"r", matrix_json(e.r)},
                        {"r_inv", matrix_json(e.r_inv)}});
  j["antipode"] = antipode;
  json cointegral = json::array();
  for (const auto& [b, v] : m.cointegral().blocks())
    cointegral.push_back({{"block", block_json(b, false)}, {"value", matrix_json(v)}});
  j["cointegral"] = cointegral;
  return dump(j);
}

ModelPtr model_from_json(std::string_view text) {
  const json j = parse_json(text);
  const std::string name = as_string(field(j, "name"), "name");
  const long field_order = as_integer(field(j, "field"), "field");
  ModelPtr m;
  if (j.contains("generator")) {
    const std::string g = as_string(j.at("generator"), "generator");
    if (g.size() != 3 || g.compare(0, 2, "Z^") != 0 || g[2] < '1' || g[2] > '4') bad("generator must be Z^1 .. Z^4");
    const unsigned rank = static_cast<unsigned>(g[2] - '0');
    const json& fusion = field(j, "fusion");
    if (as_string(field(fusion, "rule"), "fusion rule") != "sum") bad("lattice fusion rule must be 'sum'");
    std::map<BlockPair, BlockIndex> overrides;
    for (const auto& o : field(fusion, "overrides")) {
      const json& p = field(o, "pair");
      if (!p.is_array() || p.size() != 2) bad("override pair must have two blocks");
      overrides[{block_of(p[0], true), block_of(p[1], true)}] = block_of(field(o, "summand"), true);
    }
    if (as_string(field(j, "antipode"), "antipode") != "negation") bad("lattice antipode must be 'negation'");
    if (as_string(field(j, "cointegral"), "cointegral") != "counting") bad("lattice cointegral must be 'counting'");
    m = QuantumGroupModel::lattice(rank, std::move(overrides), name);
    if (block_of(field(j, "trivial_block"), true) != m->trivial_block()) throw ModelError("lattice trivial block must be 0");
  } else {
    std::vector<std::size_t> dims;
    std::vector<std::string> labels;
    for (const auto& b : field(j, "blocks")) {
      const long d = as_integer(field(b, "dim"), "dim");
      if (d < 1) throw ModelError("block dimensions must be positive");
      dims.push_back(static_cast<std::size_t>(d));
      labels.push_back(as_string(field(b, "label"), "label"));
    }
    if (dims.empty()) throw ModelError("a model needs at least one block");
    const ShapePtr shape = BlockShape::finite(dims, labels);
    std::map<BlockPair, FusionData> fusion;
    for (const auto& f : field(j, "fusion")) {
      const json& p = field(f, "pair");
      if (!p.is_array() || p.size() != 2) bad("fusion pair must have two blocks");
      FusionData d;
      for (const auto& s : field(f, "summands")) {
        if (!s.is_array() || s.size() != 2) bad("summand must be [block, multiplicity]");
        const long mult = as_integer(s[1], "multiplicity");
        if (mult < 1) throw ModelError("multiplicities must be positive");
        d.summands.push_back({block_of(s[0], false), static_cast<std::size_t>(mult)});
      }
      d.u = matrix_of(field(f, "u"));
      d.u_inv = matrix_of(field(f, "u_inv"));
      fusion[{block_of(p[0], false), block_of(p[1], false)}] = std::move(d);
    }
    std::map<BlockIndex, AntipodeEntry> antipode;
    for (const auto& a : field(j, "antipode"))
      antipode[block_of(field(a, "block"), false)] = {block_of(field(a, "partner"), false), matrix_of(field(a, "r")),
                                                      matrix_of(field(a, "r_inv"))};
    BlockMap cointegral;
    for (const auto& c : field(j, "cointegral")) cointegral[block_of(field(c, "block"), false)] = matrix_of(field(c, "value"));
    try {
      m = QuantumGroupModel::finite(name, shape, block_of(field(j, "trivial_block"), false), std::move(fusion),
                                    std::move(antipode), FiniteElement(shape, std::move(cointegral)));
    } catch (const ModelError&) {
      throw;
    } catch (const Error& e) {
      throw ModelError(e.what());
    }
  }
  if (static_cast<long>(m->field_order()) != field_order)
    throw ModelError("field order " + std::to_string(field_order) + " does not match the data (" +
                     std::to_string(m->field_order()) + ")");
  return m;
}

std::string model_digest(const QuantumGroupModel& model) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : model_to_json(model)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ModelPtr load_model(const std::string& name_or_path) {
  try {
    return builtin_model(name_or_path);
  } catch (const ModelError&) {
    if (!std::filesystem::is_regular_file(name_or_path))
      throw ModelError("'" + name_or_path + "' is neither a builtin model nor a readable file");
  }
  return model_from_json(read_file(name_or_path));
}

Corepresentation corep_from_json(const ModelPtr& model, std::string_view text) {
  const json j = parse_json(text);
  const long n = as_integer(field(j, "size"), "size");
  const json& rows = field(j, "entries");
  if (n < 1 || !rows.is_array() || static_cast<long>(rows.size()) != n) bad("entries must have 'size' rows");
  Corepresentation u;
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<long>(row.size()) != n) bad("entries must have 'size' columns");
    std::vector<Multiplier> r;
    for (const auto& e : row) r.push_back(parse_element(model, as_string(e, "entry")));
    u.u.push_back(std::move(r));
  }
  return u;
}

std::string corep_to_json(const Corepresentation& u) {
  json rows = json::array();
  for (const auto& row : u.u) {
    json r = json::array();
    for (const auto& x : row) r.push_back(print_element(x));
    rows.push_back(std::move(r));
  }
  return dump({{"size", u.size()}, {"entries", rows}});
}

std::string decomposition_to_json(const Multiplier& x, const APVerdict& v, unsigned horizon) {
  json xl = json::array(), yl = json::array();
  for (const auto& l : v.x_legs) xl.push_back(print_element(l));
  for (const auto& l : v.y_legs) yl.push_back(print_element(l));
  return dump({{"element", print_element(x)},
               {"verdict", verdict_str(v.status)},
               {"rank", v.rank},
               {"horizon", horizon},
               {"profile", v.profile},
               {"x_legs", xl},
               {"y_legs", yl}});
}

namespace {

json structure_json(const HopfStructure& s) {
  const std::size_t n = s.dimension();
  json product = json::array();
  for (const auto& [ij, c] : s.product) product.push_back({{"pair", {ij.first, ij.second}}, {"value", coords_json(c)}});
  json coproduct = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json rows = json::array();
    for (std::size_t a = 0; a < n; ++a) {
      json row = json::array();
      for (std::size_t b = 0; b < n; ++b) {
        const auto it = s.coproduct[i].find({a, b});
        row.push_back(it == s.coproduct[i].end() ? "0" : it->second.str());
      }
      rows.push_back(std::move(row));
    }
    coproduct.push_back(std::move(rows));
  }
  json antipode = json::array(), involution = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    antipode.push_back(coords_json(s.antipode[i]));
    involution.push_back(coords_json(s.involution[i]));
  }
  return {{"name", s.name},
          {"labels", s.labels},
          {"unit", s.unit},
          {"truncation_degree", s.truncation_degree},
          {"product", product},
          {"coproduct", coproduct},
          {"counit", coords_json(s.counit)},
          {"antipode", antipode},
          {"involution", involution}};
}

HopfStructure structure_of(const json& j) {
  HopfStructure s;
  s.name = as_string(field(j, "name"), "name");
  for (const auto& l : field(j, "labels")) s.labels.push_back(as_string(l, "label"));
  const std::size_t n = s.labels.size();
  if (n == 0) bad("a structure needs at least one basis element");
  const long unit = as_integer(field(j, "unit"), "unit");
  if (unit < 0 || static_cast<std::size_t>(unit) >= n) bad("unit index out of range");
  s.unit = static_cast<std::size_t>(unit);
  const long t = as_integer(field(j, "truncation_degree"), "truncation_degree");
  if (t < 0) bad("truncation_degree must be nonnegative");
  s.truncation_degree = static_cast<unsigned>(t);
  auto index = [&](const json& x) {
    const long k = as_integer(x, "basis index");
    if (k < 0 || static_cast<std::size_t>(k) >= n) bad("basis index out of range");
    return static_cast<std::size_t>(k);
  };
  for (const auto& p : field(j, "product")) {
    const json& ij = field(p, "pair");
    if (!ij.is_array() || ij.size() != 2) bad("product pair must have two indices");
    s.product[{index(ij[0]), index(ij[1])}] = coords_of(field(p, "value"), n);
  }
  const json& cop = field(j, "coproduct");
  if (!cop.is_array() || cop.size() != n) bad("coproduct needs one matrix per basis element");
  for (const auto& m : cop) {
    const Matrix c = matrix_of(m);
    if (c.rows() != n || c.cols() != n) bad("coproduct matrices must be n x n");
    TensorCoords t;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (!c(a, b).is_zero()) t[{a, b}] = c(a, b);
    s.coproduct.push_back(std::move(t));
  }
  s.counit = coords_of(field(j, "counit"), n);
  for (const char* key : {"antipode", "involution"}) {
    const json& rows = field(j, key);
    if (!rows.is_array() || rows.size() != n) bad(std::string(key) + " needs one vector per basis element");
    for (const auto& r : rows) (std::string(key) == "antipode" ? s.antipode : s.involution).push_back(coords_of(r, n));
  }
  return s;
}

}  // namespace

std::string structure_to_json(const HopfStructure& s) { return dump(structure_json(s)); }

HopfStructure structure_from_json(std::string_view text) {
  const json j = parse_json(text);
  return structure_of(j.contains("structure") ? j.at("structure") : j);
}

std::string presentation_to_json(const HopfPresentation& p) {
  json basis = json::array(), degree = json::array();
  for (std::size_t i = 0; i < p.basis.size(); ++i) {
    basis.push_back(print_element(p.basis[i]));
    degree.push_back(p.degree[i]);
  }
  json window = json::array();
  for (const auto& b : p.independence_window) window.push_back(block_json(b, p.model->is_lattice()));
  return dump({{"model", p.model->name()},
               {"model_digest", model_digest(*p.model)},
               {"basis", basis},
               {"degree", degree},
               {"independence_window", window},
               {"structure", structure_json(p.structure)}});
}

HopfGenerators hopf_from_json(std::string_view text) {
  const json j = parse_json(text);
  if (j.contains("builtin")) {
    const std::string b = as_string(j.at("builtin"), "builtin");
    if (b == "laurent") return HopfGenerators::laurent();
    if (b == "trivial") return HopfGenerators::trivial();
    bad("unknown builtin Hopf algebra '" + b + "' (laurent, trivial)");
  }
  if (j.contains("structure")) return HopfGenerators::from_structure(structure_of(j.at("structure")));
  HopfGenerators h;
  h.name = as_string(field(j, "name"), "name");
  for (const auto& g : field(j, "generators")) h.generators.push_back(as_string(g, "generator"));
  const std::size_t n = h.generators.size();
  auto word = [&](const json& w) {
    if (!w.is_array()) bad("a word is a list of generator names");
    Word out;
    for (const auto& g : w) {
      try {
        out.push_back(h.index(as_string(g, "generator")));
      } catch (const ShapeError& e) {
        bad(e.what());
      }
    }
    return out;
  };
  auto combination = [&](const json& terms) {
    std::vector<WordTerm> out;
    for (const auto& t : terms) out.push_back({scalar_of(field(t, "coeff")), word(field(t, "word"))});
    return out;
  };
  for (const auto& r : field(j, "relations")) h.relations.push_back(combination(r));
  const json& cop = field(j, "coproduct");
  const json& ant = field(j, "antipode");
  if (!cop.is_array() || cop.size() != n || !ant.is_array() || ant.size() != n)
    bad("coproduct and antipode need one entry per generator");
  for (const auto& c : cop) {
    std::vector<WordTensorTerm> terms;
    for (const auto& t : c) terms.push_back({scalar_of(field(t, "coeff")), word(field(t, "left")), word(field(t, "right"))});
    h.coproduct.push_back(std::move(terms));
  }
  for (const auto& a : ant) h.antipode.push_back(combination(a));
  h.counit = coords_of(field(j, "counit"), n);
  return h;
}

std::map<std::string, Multiplier> images_from_json(const ModelPtr& model, std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) bad("images must be an object mapping generator names to expressions");
  std::map<std::string, Multiplier> out;
  for (const auto& [k, v] : j.items()) out.emplace(k, parse_element(model, as_string(v, "image")));
  return out;
}

}  // namespace dqg
