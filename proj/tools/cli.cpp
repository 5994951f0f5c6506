#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <regex>
#include <sstream>

#include "dqg/ap.hpp"
#include "dqg/axioms.hpp"
#include "dqg/bohr.hpp"
#include "dqg/builders.hpp"
#include "dqg/error.hpp"
#include "dqg/expr.hpp"
#include "dqg/functionals.hpp"
#include "dqg/io.hpp"
#include "dqg/slices.hpp"

namespace dqg::cli {

namespace {

// Input problems detected after CLI11 has accepted the arguments.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}
  void line(const std::string& key, const std::string& value) { out_ << key << ": " << value << "\n"; }
  template <class T>
  void line(const std::string& key, const T& value) {
    out_ << key << ": " << value << "\n";
  }

 private:
  std::ostream& out_;
};

std::string echo(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) {
    if (!s.empty()) s += " ";
    s += a.find_first_of(" \t\"") == std::string::npos && !a.empty() ? a : "\"" + a + "\"";
  }
  return s;
}

std::string list(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + std::to_string(v[k]);
  return s + "]";
}

std::string list(const std::vector<Scalar>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + v[k].str();
  return s + "]";
}

ModelPtr open_model(const std::string& name) {
  try {
    return load_model(name);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::string slurp(const std::string& path) {
  try {
    return read_file(path);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw UsageError("cannot write " + path);
}

// "full", or a radius for lattice models
Window window_of(const ModelPtr& m, const std::string& spec) {
  if (spec.empty()) return default_window(m);
  if (spec == "full") {
    if (!m->is_finite()) throw UsageError("--window full needs a finite model");
    return default_window(m);
  }
  if (!std::regex_match(spec, std::regex("[0-9]{1,3}"))) throw UsageError("--window must be 'full' or a radius");
  return m->shape()->ball(std::stol(spec));
}

BlockIndex block_of(const ModelPtr& m, const std::string& text) {
  static const std::regex re(R"(\(?\s*(-?[0-9]{1,9}(\s*,\s*-?[0-9]{1,9})*)\s*\)?)");
  if (!std::regex_match(text, re)) throw UsageError("malformed block '" + text + "'");
  std::vector<std::int32_t> c;
  std::stringstream ss(std::regex_replace(text, std::regex(R"([(),])"), " "));
  for (long v; ss >> v;) c.push_back(static_cast<std::int32_t>(v));
  const BlockIndex b = BlockIndex::from_coords(c);
  if (!m->shape()->contains(b)) throw UsageError("block " + b.str() + " is not in the model");
  return b;
}

// eval@b or entry@b[i,j]
ReducedFunctional functional_of(const ModelPtr& m, const std::string& spec) {
  static const std::regex eval_re(R"(eval@(.+))");
  static const std::regex entry_re(R"(entry@(.+)\[\s*([0-9]{1,4})\s*,\s*([0-9]{1,4})\s*\])");
  std::smatch mt;
  if (std::regex_match(spec, mt, entry_re)) {
    const BlockIndex b = block_of(m, mt[1].str());
    const std::size_t i = std::stoul(mt[2].str()), j = std::stoul(mt[3].str());
    if (i >= m->shape()->dim(b) || j >= m->shape()->dim(b)) throw UsageError("matrix entry outside block " + b.str());
    return ReducedFunctional::matrix_entry(m->shape(), b, i, j);
  }
  if (std::regex_match(spec, mt, eval_re)) return ReducedFunctional::eval_at(m->shape(), block_of(m, mt[1].str()));
  throw UsageError("--functional must be eval@<block> or entry@<block>[i,j]");
}

void header(Report& r, const std::vector<std::string>& args, const ModelPtr& m) {
  r.line("command", echo(args));
  r.line("model", m->name());
  r.line("model_digest", model_digest(*m));
}

int status_of(Verdict v) { return v == Verdict::yes ? pass : v == Verdict::no ? negative : inconclusive; }

void print_verdict(Report& r, const std::string& prefix, const APVerdict& v) {
  r.line(prefix + "verdict", verdict_str(v.status));
  r.line(prefix + "rank", v.rank);
  r.line(prefix + "bound", v.bound);
  r.line(prefix + "certified_rank", v.certified ? std::to_string(*v.certified) : std::string("none"));
  r.line(prefix + "profile", list(v.profile));
  if (v.status == Verdict::no) r.line(prefix + "witness_window", v.witness.str());
  if (!v.reason.empty()) r.line(prefix + "reason", v.reason);
}

void print_checks(Report& r, const AxiomReport& a) {
  for (const auto& c : a.checks) {
    std::string s = c.passed ? "pass" : "FAIL";
    s += " (" + std::to_string(c.checks) + " checks)";
    if (!c.note.empty()) s += "; " + c.note;
    if (!c.passed) s += "; witness: " + c.witness;
    r.line("check " + c.name, s);
  }
}

struct Options {
  std::string model, window, expr, functional, side = "right", file, emit, hopf, images;
  std::vector<std::string> exprs, coreps;
  unsigned horizon = 8, degree = 2;
  std::optional<std::size_t> bound;
};

int check_axioms_cmd(const std::vector<std::string>& args, const Options& o, std::ostream& out) {
  const ModelPtr m = open_model(o.model);
  const Window f = window_of(m, o.window);
  Report r(out);
  header(r, args, m);
  r.line("window", f.str());
  const AxiomReport a = check_axioms(m, f);
  print_checks(r, a);
  r.line("result", a.all_passed() ? "pass" : "fail");
  return a.all_passed() ? pass : negative;
}

int ap_test_cmd(const std::vector<std::string>& args, const Options& o, std::ostream& out) {
  const ModelPtr m = open_model(o.model);
  const Multiplier x = parse_element(m, o.expr);
  Report r(out);
  header(r, args, m);
  r.line("element", print_element(x));
  r.line("horizon", o.horizon);
  try {
    const APVerdict v = ap_test(m, x, o.horizon, o.bound);
    print_verdict(r, "", v);
    if (v.status == Verdict::yes) {
      for (std::size_t k = 0; k < v.rank; ++k)
        r.line("leg " + std::to_string(k), print_element(v.x_legs[k]) + " (x) " + print_element(v.y_legs[k]));
      if (!o.emit.empty()) {
        write_file(o.emit, decomposition_to_json(x, v, o.horizon));
        r.line("emitted", o.emit);
      }
    } else if (!o.emit.empty()) {
      r.line("emitted", "none (no decomposition)");
    }
    return status_of(v.status);
  } catch (const UnsupportedTailError& e) {
    r.line("verdict", "inconclusive");
    r.line("reason", e.what());
    return inconclusive;
  }
}

int lemma_cmd(const std::vector<std::string>& args, const Options& o, std::ostream& out) {
  const ModelPtr m = open_model(o.model);
  std::vector<Multiplier> xs;
  for (const auto& e : o.exprs) xs.push_back(parse_element(m, e));
  Report r(out);
  header(r, args, m);
  for (std::size_t k = 0; k < xs.size(); ++k) r.line("element " + std::to_string(k), print_element(xs[k]));
  r.line("horizon", o.horizon);
  const LemmaResult l = lemma_l(m, xs, o.horizon);
  r.line("status", lemma_status_str(l.status));
  r.line("window", l.window.str());
  std::vector<std::size_t> dims;
  for (const auto& k : l.kernels) dims.push_back(k.cols());
  r.line("kernel_dimensions", list(dims));
  if (l.status == LemmaStatus::dependent) r.line("alpha", list(l.alpha));
  if (!l.reason.empty()) r.line("reason", l.reason);
  return l.status == LemmaStatus::independent ? pass : l.status == LemmaStatus::dependent ? negative : inconclusive;
}

int slice_cmd(const std::vector<std::string>& args, const Options& o, std::ostream& out) {
  const ModelPtr m = open_model(o.model);
  const Multiplier x = parse_element(m, o.expr);
  const ReducedFunctional f = functional_of(m, o.functional);
  if (o.side != "left" && o.side != "right") throw UsageError("--side must be left or right");
  Report r(out);
  header(r, args, m);
  r.line("element", print_element(x));
  r.line("functional", o.functional);
  r.line("side", o.side);
  const TensorMultiplier d = TensorMultiplier::coproduct(m, x);
  const Multiplier s = o.side == "right" ? right_slice(d, f) : left_slice(f, d);
  r.line("slice", print_element(s));
  return pass;
}

int haar_cmd(const std::vector<std::string>& args, const Options& o, std::ostream& out) {
  const ModelPtr m = open_model(o.model);
  const Window f = window_of(m, o.window);
  if (o.side != "left" && o.side != "right") throw UsageError("--side must be left or right");
  Report r(out);
  header(r, args, m);
  r.line("window", f.str());
  r.line("side", o.side);
  try {
    const InvariantFunctional phi = solve_invariant(m, f, o.side == "left" ? Side::left : Side::right);
    r.line("solved_window", phi.window.str());
    r.line("nullity", list(phi.nullity));
    if (m->is_lattice()) {
      r.line("weight", print_element(phi.weights.weights()));
    } else {
      for (const auto& b : f) r.line("weight " + b.str(), phi.weights.weight(b).str());
    }
    return pass;
  } catch (const ModelError& e) {
    r.line("result", "no invariant functional");
    r.line("reason", e.what());
    return negative;
  }
}

int corep_cmd(const std::vector<std::string>& args, const Options& o, std::ostream& out) {
  const ModelPtr m = open_model(o.model);
  const Corepresentation u = corep_from_json(m, slurp(o.file));
  const Window f = o.window.empty() ? (m->is_finite() ? default_window(m) : m->shape()->ball(3)) : window_of(m, o.window);
  Report r(out);
  header(r, args, m);
  r.line("size", u.size());
  r.line("window", f.str());
  r.line("horizon", o.horizon);
  const CorepResult c = corep_check(m, u, f, o.horizon);
  r.line("valid", c.valid ? "yes" : "no");
  r.line("checks", c.checks);
  if (!c.valid) r.line("witness", c.witness);
  for (std::size_t k = 0; k < c.verdicts.size(); ++k) {
    const std::string at = "u[" + std::to_string(k / u.size()) + "][" + std::to_string(k % u.size()) + "]";
    r.line("coefficient " + at, verdict_str(c.verdicts[k].status) + ", rank " + std::to_string(c.verdicts[k].rank));
  }
  return c.valid ? pass : negative;
}

int bohr_cmd(const std::vector<std::string>& args, const Options& o, std::ostream& out) {
  const ModelPtr m = open_model(o.model);
  std::vector<Corepresentation> us;
  for (const auto& file : o.coreps) us.push_back(corep_from_json(m, slurp(file)));
  if (o.degree == 0) throw UsageError("--degree must be positive");
  const Window f = o.window.empty() ? (m->is_finite() ? default_window(m) : m->shape()->ball(2)) : window_of(m, o.window);
  Report r(out);
  header(r, args, m);
  r.line("degree", o.degree);
  r.line("window", f.str());
  try {
    const HopfPresentation p = bohr_generate(m, us, o.degree);
    const HopfStructure& s = p.structure;
    r.line("dimension", s.dimension());
    r.line("truncation", s.truncation_degree == 0 ? std::string("none (closed under products)")
                                                  : "degree " + std::to_string(s.truncation_degree));
    r.line("known_products", std::to_string(s.product.size()) + " of " + std::to_string(s.dimension() * s.dimension()));
    r.line("independence_window", p.independence_window.str());
    for (std::size_t i = 0; i < s.dimension(); ++i) r.line("basis " + std::to_string(i), s.labels[i] + " = " + print_element(p.basis[i]));
    const AxiomReport v = verify_presentation(p, f);
    print_checks(r, v);
    if (!o.emit.empty()) {
      write_file(o.emit, presentation_to_json(p));
      r.line("emitted", o.emit);
    }
    r.line("result", v.all_passed() ? "pass" : "fail");
    return v.all_passed() ? pass : negative;
  } catch (const ModelError& e) {
    r.line("result", "fail");
    r.line("reason", e.what());
    return negative;
  }
}

int factorize_cmd(const std::vector<std::string>& args, const Options& o, std::ostream& out) {
  const ModelPtr m = open_model(o.model);
  const std::string btext = slurp(o.hopf);
  const HopfGenerators b = hopf_from_json(btext);
  const auto images = images_from_json(m, slurp(o.images));
  const Window f = o.window.empty() ? (m->is_finite() ? default_window(m) : m->shape()->ball(3)) : window_of(m, o.window);
  Report r(out);
  header(r, args, m);
  r.line("hopf_algebra", b.name);
  r.line("window", f.str());
  r.line("horizon", o.horizon);
  if (nlohmann::json::parse(btext).contains("structure")) {
    // the domain must be internally consistent before anything is factored
    const AxiomReport pre = verify_structure(structure_from_json(btext));
    print_checks(r, pre);
    if (!pre.all_passed()) {
      r.line("result", "inconsistent Hopf algebra");
      return negative;
    }
  }
  Factorization fz;
  try {
    fz = factorize(m, b, images, f, o.horizon);
  } catch (const ShapeError& e) {
    throw UsageError(e.what());
  }
  for (const auto& c : fz.checks) {
    std::string s = c.passed ? "pass" : "FAIL";
    s += " (" + std::to_string(c.checks) + " checks)";
    if (!c.passed) s += "; witness: " + c.witness;
    r.line("check " + c.name, s);
  }
  for (std::size_t g = 0; g < b.generators.size(); ++g)
    r.line("image " + b.generators[g],
           print_element(fz.images[g]) + " [" + verdict_str(fz.certificates[g].status) + ", rank " +
               std::to_string(fz.certificates[g].rank) + "]");
  r.line("result", fz.success ? "factors through AP" : "does not factor");
  if (fz.success) return pass;
  const bool definite = !fz.get("relations").passed || !fz.get("intertwining").passed || !fz.get("inclusion").passed ||
                        std::any_of(fz.certificates.begin(), fz.certificates.end(), [](const APVerdict& v) { return v.status == Verdict::no; });
  return definite ? negative : inconclusive;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact discrete quantum groups and their almost periodic elements", "dqg"};
  app.require_subcommand(1);
  Options o;
  auto model_arg = [&](CLI::App* c) { c->add_option("model", o.model, "builtin name or model file")->required(); };

  auto* axioms = app.add_subcommand("check-axioms", "check the six axiom groups on a window");
  model_arg(axioms);
  axioms->add_option("--window", o.window, "'full' or a lattice radius");

  auto* ap = app.add_subcommand("ap-test", "decide whether an element is almost periodic");
  model_arg(ap);
  ap->add_option("--expr", o.expr)->required();
  ap->add_option("--horizon", o.horizon)->check(CLI::Range(2u, 64u));
  ap->add_option("--bound", o.bound);
  ap->add_option("--emit", o.emit, "write the decomposition as JSON");

  auto* lemma = app.add_subcommand("lemma-l", "find a window on which the elements are independent");
  model_arg(lemma);
  lemma->add_option("--expr", o.exprs)->required();
  lemma->add_option("--horizon", o.horizon)->check(CLI::Range(0u, 64u));

  auto* slice = app.add_subcommand("slice", "slice the coproduct of an element with a reduced functional");
  model_arg(slice);
  slice->add_option("--expr", o.expr)->required();
  slice->add_option("--functional", o.functional, "eval@<block> or entry@<block>[i,j]")->required();
  slice->add_option("--side", o.side, "right: (id (x) f) delta(x); left: (f (x) id) delta(x)");

  auto* haar = app.add_subcommand("haar", "solve for the invariant functional");
  model_arg(haar);
  haar->add_option("--window", o.window);
  haar->add_option("--side", o.side);

  auto* corep = app.add_subcommand("corep-check", "validate a corepresentation file");
  model_arg(corep);
  corep->add_option("--file", o.file)->required();
  corep->add_option("--window", o.window);
  corep->add_option("--horizon", o.horizon)->check(CLI::Range(2u, 64u));

  auto* bohr = app.add_subcommand("bohr", "generate a truncated Hopf presentation from corepresentations");
  model_arg(bohr);
  bohr->add_option("--corep", o.coreps)->required();
  bohr->add_option("--degree", o.degree)->check(CLI::Range(1u, 16u));
  bohr->add_option("--window", o.window);
  bohr->add_option("--emit", o.emit, "write the presentation as JSON");

  auto* fact = app.add_subcommand("factorize", "factor a Hopf morphism through the almost periodic elements");
  model_arg(fact);
  fact->add_option("--hopf", o.hopf)->required();
  fact->add_option("--images", o.images)->required();
  fact->add_option("--window", o.window);
  fact->add_option("--horizon", o.horizon)->check(CLI::Range(2u, 64u));

  auto* models = app.add_subcommand("models", "list builtin models, or print one as a model file");
  std::string export_name;
  models->add_option("--export", export_name, "builtin model to print as JSON");

  std::vector<const char*> argv{"dqg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return pass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return pass;
  } catch (const CLI::ParseError& e) {
    err << "dqg: " << e.what() << "\n";
    return usage;
  }

  try {
    if (models->parsed()) {
      if (!export_name.empty()) {
        const std::string text = model_to_json(*open_model(export_name));
        out << text << (text.ends_with('\n') ? "" : "\n");
        return pass;
      }
      for (const auto& n : builtin_model_names()) out << n << "\n";
      return pass;
    }
    if (axioms->parsed()) return check_axioms_cmd(args, o, out);
    if (ap->parsed()) return ap_test_cmd(args, o, out);
    if (lemma->parsed()) return lemma_cmd(args, o, out);
    if (slice->parsed()) return slice_cmd(args, o, out);
    if (haar->parsed()) return haar_cmd(args, o, out);
    if (corep->parsed()) return corep_cmd(args, o, out);
    if (bohr->parsed()) return bohr_cmd(args, o, out);
    if (fact->parsed()) return factorize_cmd(args, o, out);
  } catch (const ParseError& e) {
    err << "dqg: " << e.what() << "\n";
    return usage;
  } catch (const UsageError& e) {
    err << "dqg: " << e.what() << "\n";
    return usage;
  } catch (const Error& e) {
    err << "dqg: " << e.what() << "\n";
    return negative;
  }
  return usage;
}

}  // namespace dqg::cli
