#include "support.hpp"

#include <json.hpp>

#include "dqg/builders.hpp"
#include "dqg/error.hpp"
#include "dqg/expr.hpp"
#include "dqg/io.hpp"

using namespace dqg;
using json = nlohmann::json;

TEST_CASE("model files round-trip bit-exactly") {
  for (const char* name : {"Z", "Z^2", "C(Z/2)", "C(Z/6)", "C(S3)", "dual(S3)", "dual(Z/3)", "dual(Z/4)"}) {
    INFO(name);
    const ModelPtr m = builtin_model(name);
    const std::string text = model_to_json(*m);
    const ModelPtr back = model_from_json(text);
    CHECK(model_to_json(*back) == text);
    CHECK(model_digest(*back) == model_digest(*m));
    CHECK(model_digest(*m).size() == 16);
    CHECK(back->field_order() == m->field_order());
    // the reloaded model computes the same coproducts
    const Multiplier x = parse_element(m, m->is_lattice() ? "char(2" + std::string(m->shape()->lattice_rank() == 2 ? ",3)" : ")") : "unit");
    const Multiplier y = parse_element(back, print_element(x));
    for (const auto& a : m->shape()->ball(1))
      for (const auto& b : m->shape()->ball(1)) CHECK(m->coproduct_block(x, a, b) == back->coproduct_block(y, a, b));
  }
  CHECK(model_digest(*builtin_model("C(S3)")) != model_digest(*builtin_model("dual(S3)")));

  // overrides survive the round trip
  const ModelPtr bent = QuantumGroupModel::lattice(1, {{{BlockIndex(1), BlockIndex(2)}, BlockIndex(0)}}, "bent");
  const ModelPtr back = model_from_json(model_to_json(*bent));
  CHECK(back->overrides() == bent->overrides());
  CHECK(model_digest(*back) != model_digest(*builtin_model("Z")));
}

TEST_CASE("malformed or inconsistent model files are rejected") {
  CHECK_THROWS_AS(model_from_json("{"), ParseError);
  CHECK_THROWS_AS(model_from_json("{\"name\": \"x\"}"), ParseError);

  json j = json::parse(model_to_json(*builtin_model("dual(S3)")));
  json wrong_field = j;
  wrong_field["field"] = 5;
  CHECK_THROWS_AS(model_from_json(wrong_field.dump()), ModelError);

  json singular = j;
  for (auto& f : singular["fusion"])
    if (f["u"].size() > 1) {
      for (auto& row : f["u"])
        for (auto& e : row) e = "0";
      break;
    }
  CHECK_THROWS_AS(model_from_json(singular.dump()), ModelError);

  json bad_dim = j;
  bad_dim["blocks"][2]["dim"] = 3;
  CHECK_THROWS_AS(model_from_json(bad_dim.dump()), ModelError);

  CHECK_THROWS_AS(load_model("/nonexistent/model.json"), ModelError);
}

TEST_CASE("corepresentation, structure and Hopf definitions") {
  const ModelPtr z = builtin_model("Z");
  const Corepresentation u = corep_from_json(z, R"j({"size": 2, "entries": [["char(2)", "poly(1)*char(2)"], ["0", "char(2)"]]})j");
  REQUIRE(u.size() == 2);
  CHECK(u.u[1][0].is_zero());
  const Corepresentation back = corep_from_json(z, corep_to_json(u));
  CHECK(back.u == u.u);
  CHECK_THROWS_AS(corep_from_json(z, R"j({"size": 2, "entries": [["char(2)"]]})j"), ParseError);
  CHECK_THROWS_AS(corep_from_json(z, R"j({"size": 1, "entries": [["char(2"]]})j"), ParseError);

  const HopfPresentation p = bohr_generate(z, {u}, 2);
  const HopfStructure s = structure_from_json(structure_to_json(p.structure));
  CHECK(structure_to_json(s) == structure_to_json(p.structure));
  CHECK(s.product == p.structure.product);
  CHECK(s.coproduct == p.structure.coproduct);
  const json pj = json::parse(presentation_to_json(p));
  CHECK(pj["model_digest"] == model_digest(*z));
  CHECK(pj["basis"].size() == p.basis.size());
  for (std::size_t i = 0; i < p.basis.size(); ++i) CHECK(parse_element(z, pj["basis"][i].get<std::string>()) == p.basis[i]);
  CHECK(hopf_from_json(presentation_to_json(p)).generators == p.structure.labels);

  const HopfGenerators explicit_laurent = hopf_from_json(R"j({
    "name": "C[t, t^-1]", "generators": ["t", "t_inv"],
    "relations": [[{"coeff": "1", "word": ["t", "t_inv"]}, {"coeff": "-1", "word": []}],
                  [{"coeff": "1", "word": ["t_inv", "t"]}, {"coeff": "-1", "word": []}]],
    "coproduct": [[{"coeff": "1", "left": ["t"], "right": ["t"]}], [{"coeff": "1", "left": ["t_inv"], "right": ["t_inv"]}]],
    "counit": ["1", "1"],
    "antipode": [[{"coeff": "1", "word": ["t_inv"]}], [{"coeff": "1", "word": ["t"]}]]})j");
  const HopfGenerators builtin = HopfGenerators::laurent();
  CHECK(explicit_laurent.generators == builtin.generators);
  CHECK(explicit_laurent.counit == builtin.counit);
  CHECK(explicit_laurent.relations.size() == builtin.relations.size());
  CHECK(hopf_from_json(R"j({"builtin": "trivial"})j").generators.empty());
  CHECK_THROWS_AS(hopf_from_json(R"j({"builtin": "sl2"})j"), ParseError);

  const auto images = images_from_json(z, R"j({"t": "char(2)"})j");
  CHECK(images.at("t") == Multiplier::character(z->shape(), {Scalar(2)}));
  CHECK_THROWS_AS(images_from_json(z, R"j(["char(2)"])j"), ParseError);
}
