#include "dqg/bohr.hpp"
#include "dqg/error.hpp"
#include "dqg/slices.hpp"

namespace dqg {

CorepResult corep_check(const ModelPtr& model, const Corepresentation& u, const Window& f, unsigned horizon) {
  const std::size_t n = u.size();
  if (n == 0) throw ShapeError("corepresentation must be nonempty");
  for (const auto& row : u.u) {
    if (row.size() != n) throw ShapeError("corepresentation must be a square array");
    for (const auto& x : row)
      if (!x.shape()->same_as(*model->shape())) throw ShapeError("corepresentation entry does not belong to the model");
  }
  CorepResult out;
  out.valid = true;
  const BlockShape& shape = *model->shape();
  for (std::size_t k = 0; k < n && out.valid; ++k)
    for (std::size_t l = 0; l < n && out.valid; ++l)
      for (const auto& a : f) {
        for (const auto& b : f) {
          const std::size_t d = shape.dim(a) * shape.dim(b);
          Matrix rhs(d, d);
          for (std::size_t p = 0; p < n; ++p) rhs += kron(u.u[k][p].block(a), u.u[p][l].block(b));
          ++out.checks;
          if (model->coproduct_block(u.u[k][l], a, b) != rhs) {
            out.valid = false;
            out.witness = "u[" + std::to_string(k) + "][" + std::to_string(l) + "] at pair (" + a.str() + ", " + b.str() + ")";
            break;
          }
        }
        if (!out.valid) break;
      }
  if (!out.valid) return out;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      out.coefficients.push_back(u.u[k][l]);
      out.verdicts.push_back(ap_test(model, u.u[k][l], horizon));
      const APVerdict& v = out.verdicts.back();
      if (out.valid && (v.status != Verdict::yes || v.rank > n)) {
        out.valid = false;
        out.witness = "u[" + std::to_string(k) + "][" + std::to_string(l) + "] is not almost periodic with rank <= " +
                      std::to_string(n) + " (" + verdict_str(v.status) + ", rank " + std::to_string(v.rank) + ")";
      }
    }
  return out;
}

Corepresentation regular_corepresentation(const ModelPtr& model) {
  if (!model->is_finite()) throw ModelError("the regular corepresentation is only built for finite models");
  const ShapePtr& shape = model->shape();
  std::vector<std::tuple<BlockIndex, std::size_t, std::size_t>> keys;
  for (const auto& b : shape->blocks())
    for (std::size_t i = 0; i < shape->dim(b); ++i)
      for (std::size_t j = 0; j < shape->dim(b); ++j) keys.emplace_back(b, i, j);
  const std::size_t n = keys.size();
  Corepresentation u;
  u.u.assign(n, std::vector<Multiplier>(n, Multiplier(shape)));
  for (std::size_t l = 0; l < n; ++l) {
    const auto& [bl, il, jl] = keys[l];
    const TensorMultiplier d = TensorMultiplier::coproduct(model, embed(matrix_unit(shape, bl, il, jl)));
    for (std::size_t k = 0; k < n; ++k) {
      const auto& [bk, ik, jk] = keys[k];
      u.u[k][l] = left_slice(ReducedFunctional::matrix_entry(shape, bk, ik, jk), d);
    }
  }
  return u;
}

AxiomReport hopf_identity_suite(const ModelPtr& model, const std::vector<Multiplier>& elements, const Window& f,
                                unsigned horizon) {
  AxiomReport report;
  report.window = f;
  AxiomCheck ap{"almost-periodic", true, 0, "", ""};
  AxiomCheck left{"antipode-left", true, 0, "", "exact on the window and in M(A)"};
  AxiomCheck right{"antipode-right", true, 0, "", "exact on the window and in M(A)"};
  AxiomCheck closure{"closure", true, 0, "", "products, sums and adjoints"};
  auto fail = [](AxiomCheck& c, std::string w) {
    if (c.passed) c.witness = std::move(w);
    c.passed = false;
  };
  const Multiplier one = Multiplier::identity(model->shape());
  for (std::size_t e = 0; e < elements.size(); ++e) {
    const Multiplier& x = elements[e];
    const APVerdict v = ap_test(model, x, horizon);
    ++ap.checks;
    if (v.status != Verdict::yes) {
      fail(ap, "element " + std::to_string(e) + " is " + verdict_str(v.status));
      continue;
    }
    Multiplier lhs(model->shape()), rhs(model->shape());
    for (std::size_t k = 0; k < v.rank; ++k) {
      lhs += model->antipode(v.x_legs[k]) * v.y_legs[k];
      rhs += v.x_legs[k] * model->antipode(v.y_legs[k]);
    }
    const Multiplier target = one * model->counit(x);
    ++left.checks;
    if (!equal_on_window(lhs, target, f) || lhs != target) fail(left, "element " + std::to_string(e));
    ++right.checks;
    if (!equal_on_window(rhs, target, f) || rhs != target) fail(right, "element " + std::to_string(e));
  }
  auto closed = [&](const Multiplier& y, const std::string& what) {
    ++closure.checks;
    const APVerdict v = ap_test(model, y, horizon);
    if (v.status != Verdict::yes) fail(closure, what + " is " + verdict_str(v.status));
  };
  for (std::size_t i = 0; i < elements.size(); ++i) {
    closed(elements[i].adjoint(), "adj(element " + std::to_string(i) + ")");
    for (std::size_t j = i; j < elements.size(); ++j) {
      const std::string pair = std::to_string(i) + ", " + std::to_string(j);
      closed(elements[i] * elements[j], "product of elements " + pair);
      closed(elements[i] + elements[j], "sum of elements " + pair);
    }
  }
  report.checks = {ap, left, right, closure};
  return report;
}

}  // namespace dqg
