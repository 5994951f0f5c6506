#include "dqg/scalar.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "dqg/error.hpp"

namespace dqg {

namespace {

using Poly = std::vector<mpq_class>;

// Reduces p modulo the monic cyclotomic polynomial of order n, in place.
void reduce_mod_cyclotomic(Poly& p, unsigned n) {
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = p.size(); i-- > deg;) {
    if (sgn(p[i]) == 0) continue;
    const mpq_class t = p[i];
    for (std::size_t j = 0; j <= deg; ++j) {
      if (sgn(phi[j]) != 0) p[i - deg + j] -= t * phi[j];
    }
  }
  p.resize(deg);
}

// Lifts coordinates from Q(zeta_from) to Q(zeta_to), from | to.
Poly lift(const Poly& c, unsigned from, unsigned to) {
  if (from == to) return c;
  const unsigned step = to / from;
  Poly p((c.size() - 1) * step + 1);
  for (std::size_t k = 0; k < c.size(); ++k) p[k * step] = c[k];
  if (p.size() < euler_phi(to)) p.resize(euler_phi(to));
  reduce_mod_cyclotomic(p, to);
  return p;
}

Poly multiply_in(const Poly& a, const Poly& b, unsigned n) {
  Poly p(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) != 0) p[i + j] += a[i] * b[j];
    }
  }
  reduce_mod_cyclotomic(p, n);
  return p;
}

// Solves A x = rhs for a square nonsingular rational system.
Poly solve_rational(std::vector<Poly> a, Poly rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a[piv][col]) == 0) ++piv;
    if (piv == n) throw SingularMatrixError("division by zero in cyclotomic field");
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      const mpq_class f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  Poly x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / a[i][i];
  return x;
}

long mod_pow(long b, long e, long m) {
  long r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<mpz_class>& cyclotomic_polynomial(unsigned n) {
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<std::vector<mpz_class>>> cache;
  if (n == 0) throw Error("cyclotomic order must be positive");
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<mpz_class> p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& q = cyclotomic_polynomial(d);
    const std::size_t dq = q.size() - 1;
    std::vector<mpz_class> quot(p.size() - dq);
    for (std::size_t i = p.size(); i-- > dq;) {
      const mpz_class t = p[i];  // q is monic
      quot[i - dq] = t;
      if (t == 0) continue;
      for (std::size_t j = 0; j <= dq; ++j) p[i - dq + j] -= t * q[j];
    }
    p = std::move(quot);
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::make_unique<std::vector<mpz_class>>(std::move(p)));
  return *it->second;
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw Error("zero denominator");
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::parse_rational(std::string_view text) {
  std::string s(text);
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) throw Error("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw Error("zero denominator in '" + s + "'");
  q.canonicalize();
  return Scalar(q);
}

Scalar Scalar::root_of_unity(unsigned n, long k) {
  if (n == 0) throw Error("root of unity of order 0");
  long e = k % static_cast<long>(n);
  if (e < 0) e += n;
  if (euler_phi(n) == 1) return Scalar(e == 0 ? 1 : -1);  // n = 1 or 2
  Poly p(std::max<std::size_t>(static_cast<std::size_t>(e) + 1, euler_phi(n)));
  p[static_cast<std::size_t>(e)] = 1;
  reduce_mod_cyclotomic(p, n);
  return from_coords(n, std::move(p));
}

Scalar Scalar::sqrt_of_integer(long d) {
  if (d == 0) return Scalar(0);
  Scalar result(1);
  if (d < 0) {
    result = root_of_unity(4, 1);
    d = -d;
  }
  for (long p = 2; p * p <= d; ++p) {
    while (d % (p * p) == 0) {
      result *= Scalar(p);
      d /= p * p;
    }
  }
  // d is now squarefree
  for (long p = 2; d > 1; ++p) {
    if (d % p != 0) continue;
    d /= p;
    if (p == 2) {
      result *= root_of_unity(8, 1) + root_of_unity(8, 7);
      continue;
    }
    // Quadratic Gauss sum: g^2 = (-1)^((p-1)/2) p.
    Scalar g(0);
    for (long a = 1; a < p; ++a) {
      const long legendre = mod_pow(a, (p - 1) / 2, p) == 1 ? 1 : -1;
      g += Scalar(legendre) * root_of_unity(static_cast<unsigned>(p), a);
    }
    if (p % 4 == 3) g *= -root_of_unity(4, 1);
    result *= g;
  }
  return result;
}

Scalar Scalar::from_coords(unsigned order, std::vector<mpq_class> coords) {
  if (order == 0) throw Error("cyclotomic order must be positive");
  if (coords.size() != euler_phi(order)) throw Error("coordinate count does not match field degree");
  Scalar s;
  if (order <= 2) {
    s.q_ = coords[0];
    s.q_.canonicalize();
    return s;
  }
  s.order_ = order;
  s.c_ = std::move(coords);
  for (auto& c : s.c_) c.canonicalize();
  s.normalize();
  return s;
}

void Scalar::normalize() {
  if (order_ == 1) return;
  for (std::size_t k = 1; k < c_.size(); ++k) {
    if (sgn(c_[k]) != 0) return;
  }
  q_ = c_[0];
  c_.clear();
  order_ = 1;
}

bool Scalar::is_zero() const { return order_ == 1 && sgn(q_) == 0; }

bool Scalar::is_one() const { return order_ == 1 && q_ == 1; }

const mpq_class& Scalar::rational_value() const {
  if (order_ != 1) throw Error("scalar " + str() + " is not rational");
  return q_;
}

std::vector<mpq_class> Scalar::coords_in(unsigned order) const {
  if (order % order_ != 0) throw Error("cannot lift scalar to a non-containing field");
  if (order_ == 1) {
    Poly p(euler_phi(order));
    p[0] = q_;
    return p;
  }
  return lift(c_, order_, order);
}

Scalar Scalar::conj() const {
  if (order_ == 1) return *this;
  const unsigned n = order_;
  Poly p(n);
  for (std::size_t k = 0; k < c_.size(); ++k) p[(n - k) % n] += c_[k];
  reduce_mod_cyclotomic(p, n);
  return from_coords(n, std::move(p));
}

Scalar Scalar::inverse() const {
  if (order_ == 1) {
    if (sgn(q_) == 0) throw SingularMatrixError("division by zero");
    return Scalar(1 / q_);
  }
  // Solve (multiplication-by-this) x = 1 in the power basis.
  const std::size_t d = c_.size();
  std::vector<Poly> a(d, Poly(d));
  Poly basis(d);
  for (std::size_t j = 0; j < d; ++j) {
    std::fill(basis.begin(), basis.end(), mpq_class(0));
    basis[j] = 1;
    const Poly col = multiply_in(c_, basis, order_);
    for (std::size_t i = 0; i < d; ++i) a[i][j] = col[i];
  }
  Poly rhs(d);
  rhs[0] = 1;
  return from_coords(order_, solve_rational(std::move(a), std::move(rhs)));
}

Scalar Scalar::pow(long e) const {
  Scalar base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Scalar r(1);
  while (k > 0) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (order_ == 1 && o.order_ == 1) {
    q_ += o.q_;
    return *this;
  }
  const unsigned n = std::lcm(order_, o.order_);
  Poly a = coords_in(n);
  const Poly b = o.coords_in(n);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return *this = from_coords(n, std::move(a));
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (order_ == 1 && o.order_ == 1) {
    q_ *= o.q_;
    return *this;
  }
  if (o.order_ == 1) {
    for (auto& c : c_) c *= o.q_;
    normalize();
    return *this;
  }
  if (order_ == 1) {
    const mpq_class f = q_;
    *this = o;
    for (auto& c : c_) c *= f;
    normalize();
    return *this;
  }
  const unsigned n = std::lcm(order_, o.order_);
  return *this = from_coords(n, multiply_in(coords_in(n), o.coords_in(n), n));
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (r.order_ == 1) {
    r.q_ = -r.q_;
  } else {
    for (auto& c : r.c_) c = -c;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.order_ == 1 && b.order_ == 1) return a.q_ == b.q_;
  if (a.order_ == 1 || b.order_ == 1) return false;  // normalized forms
  if (a.order_ == b.order_) return a.c_ == b.c_;
  const unsigned n = std::lcm(a.order_, b.order_);
  return a.coords_in(n) == b.coords_in(n);
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (a.order_ == 1 && b.order_ == 1) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  const unsigned n = std::lcm(a.order_, b.order_);
  const Poly x = a.coords_in(n);
  const Poly y = b.coords_in(n);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const int c = cmp(x[i], y[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Scalar::str() const {
  if (order_ == 1) return q_.get_str();
  std::string out = "(";
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (sgn(c_[k]) == 0) continue;
    if (!first) out += " + ";
    first = false;
    if (k == 0) {
      out += c_[k].get_str();
      continue;
    }
    const std::string root = "zeta(" + std::to_string(order_) + "," + std::to_string(k) + ")";
    if (c_[k] == 1) {
      out += root;
    } else if (c_[k] == -1) {
      out += "-" + root;
    } else {
      out += c_[k].get_str() + "*" + root;
    }
  }
  return out + ")";
}

}  // namespace dqg
