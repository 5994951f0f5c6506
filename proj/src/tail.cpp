#include "dqg/tail.hpp"

#include "dqg/error.hpp"

namespace dqg {

namespace {

Scalar binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Scalar(mpq_class(r));
}

Scalar int_pow(std::int64_t base, unsigned e) {
  mpz_class b(static_cast<long>(base));
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return Scalar(mpq_class(r));
}

}  // namespace

void TailRule::check_rank(unsigned r) {
  if (rank_ == 0) {
    rank_ = r;
  } else if (r != 0 && r != rank_) {
    throw ShapeError("tail rules over lattices of different rank");
  }
}

void TailRule::add_term(const Base& lambda, const Exponent& e, const Scalar& c) {
  if (c.is_zero()) return;
  check_rank(static_cast<unsigned>(lambda.size()));
  auto& poly = terms_[lambda];
  auto [it, inserted] = poly.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) {
      poly.erase(it);
      if (poly.empty()) terms_.erase(lambda);
    }
  }
  if (terms_.empty()) rank_ = 0;
}

TailRule TailRule::constant(unsigned rank, const Scalar& c) {
  TailRule t;
  t.add_term(Base(rank, Scalar(1)), Exponent{}, c);
  return t;
}

TailRule TailRule::character(Base lambda) {
  for (const auto& l : lambda) {
    if (l.is_zero()) throw UnsupportedTailError("character base must be nonzero");
  }
  TailRule t;
  t.add_term(lambda, Exponent{}, Scalar(1));
  return t;
}

TailRule TailRule::monomial(unsigned rank, unsigned i, unsigned k) {
  if (i >= rank) throw ShapeError("monomial coordinate out of range");
  if (k > 255) throw UnsupportedTailError("monomial degree too large");
  Exponent e{};
  e[i] = static_cast<std::uint8_t>(k);
  TailRule t;
  t.add_term(Base(rank, Scalar(1)), e, Scalar(1));
  return t;
}

bool TailRule::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& [lambda, poly] = *terms_.begin();
  for (const auto& l : lambda) {
    if (!l.is_one()) return false;
  }
  return poly.size() == 1 && poly.begin()->first == Exponent{};
}

Scalar TailRule::evaluate(const BlockIndex& g) const {
  if (terms_.empty()) return Scalar(0);
  if (g.size() != rank_) throw ShapeError("tail rule evaluated at a block of wrong rank");
  Scalar total(0);
  for (const auto& [lambda, poly] : terms_) {
    Scalar lg(1);
    for (unsigned i = 0; i < rank_; ++i) {
      if (!lambda[i].is_one()) lg *= lambda[i].pow(g[i]);
    }
    Scalar p(0);
    for (const auto& [e, c] : poly) {
      Scalar m = c;
      for (unsigned i = 0; i < rank_; ++i) {
        if (e[i] != 0) m *= int_pow(g[i], e[i]);
      }
      p += m;
    }
    total += p * lg;
  }
  return total;
}

TailRule& TailRule::operator+=(const TailRule& o) {
  for (const auto& [lambda, poly] : o.terms_) {
    for (const auto& [e, c] : poly) add_term(lambda, e, c);
  }
  return *this;
}

TailRule& TailRule::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    rank_ = 0;
    return *this;
  }
  for (auto& [lambda, poly] : terms_) {
    for (auto& [e, c] : poly) c *= s;
  }
  return *this;
}

TailRule operator*(const TailRule& a, const TailRule& b) {
  TailRule r;
  if (a.is_zero() || b.is_zero()) return r;
  if (a.rank_ != b.rank_) throw ShapeError("tail rules over lattices of different rank");
  for (const auto& [la, pa] : a.terms_) {
    for (const auto& [lb, pb] : b.terms_) {
      TailRule::Base l(a.rank_);
      for (unsigned i = 0; i < a.rank_; ++i) l[i] = la[i] * lb[i];
      for (const auto& [ea, ca] : pa) {
        for (const auto& [eb, cb] : pb) {
          TailRule::Exponent e{};
          for (unsigned i = 0; i < a.rank_; ++i) {
            const unsigned s = ea[i] + eb[i];
            if (s > 255) throw UnsupportedTailError("polynomial degree too large");
            e[i] = static_cast<std::uint8_t>(s);
          }
          r.add_term(l, e, ca * cb);
        }
      }
    }
  }
  return r;
}

TailRule TailRule::operator-() const { return TailRule(*this) *= Scalar(-1); }

TailRule TailRule::conj() const {
  TailRule r;
  for (const auto& [lambda, poly] : terms_) {
    Base l;
    for (const auto& x : lambda) l.push_back(x.conj());
    for (const auto& [e, c] : poly) r.add_term(l, e, c.conj());
  }
  return r;
}

TailRule TailRule::reflect() const {
  TailRule r;
  for (const auto& [lambda, poly] : terms_) {
    Base l;
    for (const auto& x : lambda) l.push_back(x.inverse());
    for (const auto& [e, c] : poly) {
      unsigned deg = 0;
      for (auto k : e) deg += k;
      r.add_term(l, e, deg % 2 == 0 ? c : -c);
    }
  }
  return r;
}

TailRule TailRule::shift(const BlockIndex& h) const {
  if (terms_.empty()) return {};
  if (h.size() != rank_) throw ShapeError("shift by a block of wrong rank");
  TailRule r;
  for (const auto& [lambda, poly] : terms_) {
    Scalar lh(1);
    for (unsigned i = 0; i < rank_; ++i) lh *= lambda[i].pow(h[i]);
    for (const auto& [e, c] : poly) {
      // prod_i (g_i + h_i)^{e_i} expanded coordinate by coordinate.
      std::map<Exponent, Scalar> expansion{{Exponent{}, c * lh}};
      for (unsigned i = 0; i < rank_; ++i) {
        if (e[i] == 0) continue;
        std::map<Exponent, Scalar> next;
        for (const auto& [ex, cx] : expansion) {
          for (unsigned j = 0; j <= e[i]; ++j) {
            Exponent ey = ex;
            ey[i] = static_cast<std::uint8_t>(j);
            Scalar f = cx * binomial(e[i], j) * int_pow(h[i], e[i] - j);
            if (!f.is_zero()) next[ey] += f;
          }
        }
        expansion = std::move(next);
      }
      for (const auto& [ex, cx] : expansion) r.add_term(lambda, ex, cx);
    }
  }
  return r;
}

std::string TailRule::str() const {
  if (terms_.empty()) return "0";
  static const char* vars[] = {"g", "h", "k", "l"};
  std::string s;
  bool first = true;
  for (const auto& [lambda, poly] : terms_) {
    for (const auto& [e, c] : poly) {
      if (!first) s += " + ";
      first = false;
      std::string factors;
      for (unsigned i = 0; i < rank_; ++i) {
        const std::string var = rank_ == 1 ? "g" : vars[i];
        if (e[i] == 1) factors += "*" + var;
        if (e[i] > 1) factors += "*" + var + "^" + std::to_string(e[i]);
      }
      for (unsigned i = 0; i < rank_; ++i) {
        const std::string var = rank_ == 1 ? "g" : vars[i];
        if (!lambda[i].is_one()) factors += "*" + lambda[i].str() + "^" + var;
      }
      if (factors.empty()) {
        s += c.str();
      } else if (c.is_one()) {
        s += factors.substr(1);
      } else {
        s += c.str() + factors;
      }
    }
  }
  return s;
}

}  // namespace dqg
