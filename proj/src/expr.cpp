#include "dqg/expr.hpp"

#include <cctype>
#include <limits>

#include "dqg/error.hpp"

namespace dqg {

namespace {

struct Token {
  enum class Type { number, name, punct, end };
  Type type;
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    const std::size_t col = i + 1;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Type::number, std::string(text.substr(i, j - i)), col});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Token::Type::name, std::string(text.substr(i, j - i)), col});
      i = j;
    } else if (std::string_view("+-*/(),{}").find(c) != std::string_view::npos) {
      out.push_back({Token::Type::punct, std::string(1, c), col});
      ++i;
    } else {
      throw ParseError(col, {}, "syntax error at column " + std::to_string(col) + ": unexpected character '" + std::string(1, c) + "'");
    }
  }
  out.push_back({Token::Type::end, "", text.size() + 1});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  ExprNode parse() {
    ExprNode n = expr();
    if (!at(Token::Type::end, "end of input")) fail();
    return n;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  void note(const std::string& what) {
    if (expected_at_ != pos_) {
      expected_.clear();
      expected_at_ = pos_;
    }
    expected_.insert(what);
  }
  bool at(Token::Type t, const std::string& what) {
    if (peek().type == t) return true;
    note(what);
    return false;
  }
  bool accept(const std::string& p) {
    if (peek().type == Token::Type::punct && peek().text == p) {
      ++pos_;
      return true;
    }
    note(p);
    return false;
  }
  void expect(const std::string& p) {
    if (!accept(p)) fail();
  }
  [[noreturn]] void fail() const {
    const Token& t = peek();
    std::string msg = "syntax error at column " + std::to_string(t.column) + ": expected ";
    const std::set<std::string> exp = expected_at_ == pos_ ? expected_ : std::set<std::string>{};
    std::size_t k = 0;
    for (const auto& e : exp) msg += (k++ ? ", " : "one of ") + (e.size() == 1 ? "'" + e + "'" : e);
    msg += "; found " + (t.type == Token::Type::end ? std::string("end of input") : "'" + t.text + "'");
    throw ParseError(t.column, exp, msg);
  }

  ExprNode expr() {
    ExprNode lhs = term();
    for (;;) {
      const std::size_t col = peek().column;
      ExprNode::Kind k;
      if (accept("+")) {
        k = ExprNode::Kind::add;
      } else if (accept("-")) {
        k = ExprNode::Kind::sub;
      } else {
        return lhs;
      }
      ExprNode n{k, col};
      n.args = {std::move(lhs), term()};
      lhs = std::move(n);
    }
  }

  ExprNode term() {
    ExprNode lhs = factor();
    for (;;) {
      const std::size_t col = peek().column;
      if (!accept("*")) return lhs;
      ExprNode n{ExprNode::Kind::mul, col};
      n.args = {std::move(lhs), factor()};
      lhs = std::move(n);
    }
  }

  ExprNode factor() {
    const std::size_t col = peek().column;
    if (accept("-")) {
      ExprNode n{ExprNode::Kind::neg, col};
      n.args.push_back(factor());
      return n;
    }
    if (accept("(")) {
      ExprNode n = expr();
      expect(")");
      return n;
    }
    if (at(Token::Type::number, "number")) return number();
    if (at(Token::Type::name, "name")) {
      ExprNode n{ExprNode::Kind::name, col};
      n.name = toks_[pos_++].text;
      if (!accept("(")) return n;
      n.kind = ExprNode::Kind::call;
      if (n.name == "e") {
        n.args.push_back(window());
        expect(")");
        return n;
      }
      if (accept(")")) return n;
      do {
        n.args.push_back(expr());
      } while (accept(","));
      expect(")");
      return n;
    }
    fail();
  }

  ExprNode number() {
    ExprNode n{ExprNode::Kind::number, peek().column};
    std::string text = toks_[pos_++].text;
    if (accept("/")) {
      if (!at(Token::Type::number, "number")) fail();
      if (toks_[pos_].text.find_first_not_of('0') == std::string::npos)
        throw ParseError(toks_[pos_].column, {}, "division by zero at column " + std::to_string(toks_[pos_].column));
      text += "/" + toks_[pos_++].text;
    }
    n.value = Scalar::parse_rational(text);
    return n;
  }

  std::int32_t integer() {
    const bool negative = accept("-");
    if (!at(Token::Type::number, "number")) fail();
    const Token& t = toks_[pos_];
    const long long v = t.text.size() > 9 ? std::numeric_limits<long long>::max() : std::stoll(t.text);
    if (v > std::numeric_limits<std::int32_t>::max())
      throw ParseError(t.column, {}, "block coordinate out of range at column " + std::to_string(t.column));
    ++pos_;
    return static_cast<std::int32_t>(negative ? -v : v);
  }

  ExprNode window() {
    ExprNode n{ExprNode::Kind::window, peek().column};
    expect("{");
    if (accept("}")) return n;
    do {
      std::vector<std::int32_t> b;
      if (accept("(")) {
        do {
          b.push_back(integer());
        } while (accept(","));
        expect(")");
      } else {
        b.push_back(integer());
      }
      n.blocks.push_back(std::move(b));
    } while (accept(","));
    expect("}");
    return n;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::set<std::string> expected_;
  std::size_t expected_at_ = std::numeric_limits<std::size_t>::max();
};

[[noreturn]] void semantic_error(const ExprNode& n, const std::string& what) {
  throw ParseError(n.column, {}, what + " at column " + std::to_string(n.column));
}

bool is_scalar(const ExprNode& n) {
  switch (n.kind) {
    case ExprNode::Kind::number:
      return true;
    case ExprNode::Kind::add:
    case ExprNode::Kind::sub:
    case ExprNode::Kind::mul:
    case ExprNode::Kind::neg:
      for (const auto& a : n.args)
        if (!is_scalar(a)) return false;
      return true;
    case ExprNode::Kind::call:
      return n.name == "zeta" || n.name == "sqrt";
    default:
      return false;
  }
}

Scalar eval_scalar(const ExprNode& n);

long integer_arg(const ExprNode& n) {
  const Scalar s = eval_scalar(n);
  if (!s.is_rational() || s.rational_value().get_den() != 1 || !s.rational_value().get_num().fits_slong_p())
    semantic_error(n, "expected an integer");
  return s.rational_value().get_num().get_si();
}

void arity(const ExprNode& n, std::size_t k) {
  if (n.args.size() != k)
    semantic_error(n, n.name + " takes " + std::to_string(k) + " argument" + (k == 1 ? "" : "s"));
}

Scalar eval_scalar(const ExprNode& n) {
  switch (n.kind) {
    case ExprNode::Kind::number:
      return n.value;
    case ExprNode::Kind::add:
      return eval_scalar(n.args[0]) + eval_scalar(n.args[1]);
    case ExprNode::Kind::sub:
      return eval_scalar(n.args[0]) - eval_scalar(n.args[1]);
    case ExprNode::Kind::mul:
      return eval_scalar(n.args[0]) * eval_scalar(n.args[1]);
    case ExprNode::Kind::neg:
      return -eval_scalar(n.args[0]);
    case ExprNode::Kind::call:
      if (n.name == "zeta") {
        arity(n, 2);
        const long order = integer_arg(n.args[0]);
        if (order < 1 || order > 1000) semantic_error(n, "root of unity order must lie in 1..1000");
        return Scalar::root_of_unity(static_cast<unsigned>(order), integer_arg(n.args[1]));
      }
      if (n.name == "sqrt") {
        arity(n, 1);
        const long d = integer_arg(n.args[0]);
        if (d < -1000000 || d > 1000000) semantic_error(n, "sqrt argument must lie in -10^6..10^6");
        return Scalar::sqrt_of_integer(d);
      }
      [[fallthrough]];
    default:
      semantic_error(n, "expected a scalar");
  }
}

BlockIndex block_arg(const ShapePtr& shape, const ExprNode& n, std::size_t first, std::size_t count) {
  std::vector<std::int32_t> c;
  for (std::size_t k = first; k < first + count; ++k) {
    const long v = integer_arg(n.args[k]);
    if (v < std::numeric_limits<std::int32_t>::min() || v > std::numeric_limits<std::int32_t>::max())
      semantic_error(n.args[k], "block coordinate out of range");
    c.push_back(static_cast<std::int32_t>(v));
  }
  const BlockIndex b = BlockIndex::from_coords(c);
  if (!shape->contains(b)) semantic_error(n, "block " + b.str() + " is not in the model");
  return b;
}

std::size_t block_coords(const BlockShape& s) { return s.is_lattice() ? s.lattice_rank() : 1; }

Multiplier eval_element(const ModelPtr& model, const ExprNode& n) {
  const ShapePtr& shape = model->shape();
  if (is_scalar(n)) return Multiplier::scalar(shape, eval_scalar(n));
  switch (n.kind) {
    case ExprNode::Kind::add:
      return eval_element(model, n.args[0]) + eval_element(model, n.args[1]);
    case ExprNode::Kind::sub:
      return eval_element(model, n.args[0]) - eval_element(model, n.args[1]);
    case ExprNode::Kind::mul:
      return eval_element(model, n.args[0]) * eval_element(model, n.args[1]);
    case ExprNode::Kind::neg:
      return -eval_element(model, n.args[0]);
    case ExprNode::Kind::name:
      if (n.name == "unit") return Multiplier::identity(shape);
      semantic_error(n, "unknown symbol '" + n.name + "'");
    case ExprNode::Kind::call:
      break;
    default:
      semantic_error(n, "expected an element");
  }

  const std::size_t k = block_coords(*shape);
  const std::string& f = n.name;
  if (f == "unit") {
    arity(n, 0);
    return Multiplier::identity(shape);
  }
  if (f == "delta") {
    arity(n, k);
    return embed(block_unit(shape, block_arg(shape, n, 0, k)));
  }
  if (f == "entry") {
    arity(n, k + 2);
    const BlockIndex b = block_arg(shape, n, 0, k);
    const long i = integer_arg(n.args[k]);
    const long j = integer_arg(n.args[k + 1]);
    const auto d = static_cast<long>(shape->dim(b));
    if (i < 0 || j < 0 || i >= d || j >= d) semantic_error(n, "matrix entry outside block " + b.str());
    return embed(matrix_unit(shape, b, static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
  }
  if (f == "e") {
    Window w;
    std::vector<BlockIndex> bs;
    for (const auto& c : n.args[0].blocks) {
      if (c.size() != k) semantic_error(n.args[0], "block needs " + std::to_string(k) + " coordinates");
      const BlockIndex b = BlockIndex::from_coords(c);
      if (!shape->contains(b)) semantic_error(n.args[0], "block " + b.str() + " is not in the model");
      bs.push_back(b);
    }
    if (bs.empty()) semantic_error(n.args[0], "empty window");
    return embed(central_idempotent(shape, Window(std::move(bs))));
  }
  if (f == "adj") {
    arity(n, 1);
    return eval_element(model, n.args[0]).adjoint();
  }
  if (f == "antipode") {
    arity(n, 1);
    return model->antipode(eval_element(model, n.args[0]));
  }
  if (f == "char" || f == "poly") {
    if (!shape->is_lattice()) semantic_error(n, "'" + f + "' needs a lattice model");
    if (f == "char") {
      arity(n, k);
      TailRule::Base lambda;
      for (const auto& a : n.args) {
        lambda.push_back(eval_scalar(a));
        if (lambda.back().is_zero()) semantic_error(a, "character base must be nonzero");
      }
      return Multiplier::character(shape, std::move(lambda));
    }
    if (n.args.size() == 1 && k == 1) {
      const long e = integer_arg(n.args[0]);
      if (e < 0 || e > 255) semantic_error(n, "exponent must lie in 0..255");
      return Multiplier::from_tail(shape, TailRule::monomial(1, 0, static_cast<unsigned>(e)));
    }
    arity(n, 2);
    const long i = integer_arg(n.args[0]);
    const long e = integer_arg(n.args[1]);
    if (i < 0 || i >= static_cast<long>(k)) semantic_error(n, "coordinate index out of range");
    if (e < 0 || e > 255) semantic_error(n, "exponent must lie in 0..255");
    return Multiplier::from_tail(shape, TailRule::monomial(static_cast<unsigned>(k), static_cast<unsigned>(i), static_cast<unsigned>(e)));
  }
  semantic_error(n, "unknown function '" + f + "'");
}

std::string times(const Scalar& c, const std::string& atom) {
  if (c == Scalar(1)) return atom;
  if (c == Scalar(-1)) return "-" + atom;
  return c.str() + "*" + atom;
}

std::string coords_str(const BlockIndex& b) {
  std::string s;
  for (std::size_t k = 0; k < b.size(); ++k) s += (k ? "," : "") + std::to_string(b[k]);
  return s;
}

}  // namespace

ExprNode parse_expression(std::string_view text) { return Parser(text).parse(); }

Multiplier evaluate(const ModelPtr& model, const ExprNode& node) {
  try {
    return eval_element(model, node);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(node.column, {}, e.what());
  }
}

Multiplier parse_element(const ModelPtr& model, std::string_view text) { return evaluate(model, parse_expression(text)); }

Scalar parse_scalar(std::string_view text) { return eval_scalar(parse_expression(text)); }

std::string print_element(const Multiplier& x) {
  std::vector<std::string> terms;
  const BlockShape& shape = *x.shape();
  const TailRule& tail = x.tail();
  const unsigned rank = tail.rank();
  for (const auto& [lambda, poly] : tail.terms()) {
    for (const auto& [e, c] : poly) {
      std::string atom;
      for (unsigned i = 0; i < rank; ++i) {
        if (e[i] == 0) continue;
        if (!atom.empty()) atom += "*";
        atom += rank == 1 ? "poly(" + std::to_string(e[i]) + ")" : "poly(" + std::to_string(i) + "," + std::to_string(e[i]) + ")";
      }
      if (std::any_of(lambda.begin(), lambda.end(), [](const Scalar& l) { return !l.is_one(); })) {
        std::string args;
        for (unsigned i = 0; i < rank; ++i) args += (i ? "," : "") + lambda[i].str();
        atom += (atom.empty() ? "" : "*") + ("char(" + args + ")");
      }
      terms.push_back(atom.empty() ? c.str() : times(c, atom));
    }
  }
  for (const auto& [b, m] : x.explicit_blocks()) {
    const Matrix d = shape.is_lattice() ? m - x.tail_block(b) : m;
    const std::string where = coords_str(b);
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j) {
        if (d(i, j).is_zero()) continue;
        const std::string atom = d.rows() == 1 ? "delta(" + where + ")"
                                               : "entry(" + where + "," + std::to_string(i) + "," + std::to_string(j) + ")";
        terms.push_back(times(d(i, j), atom));
      }
  }
  if (terms.empty()) return "0";
  std::string s = terms.front();
  for (std::size_t k = 1; k < terms.size(); ++k) s += " + " + terms[k];
  return s;
}

}  // namespace dqg
