#include "wedderkit/cyclotomic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace wedderkit {

namespace {

// dense polynomial helpers over BigInt, ascending coefficients,
// normalized so the leading coefficient is nonzero (or the poly is empty)

void trim(std::vector<BigInt>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<BigInt> r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// exact division by a monic divisor
std::vector<BigInt> poly_div_exact(std::vector<BigInt> a, const std::vector<BigInt>& d) {
  if (d.empty() || d.back() != 1)
    throw InternalError("poly_div_exact needs a monic divisor");
  if (a.size() < d.size()) {
    trim(a);
    if (!a.empty()) throw InternalError("inexact polynomial division");
    return {};
  }
  std::vector<BigInt> q(a.size() - d.size() + 1);
  for (size_t i = q.size(); i-- > 0;) {
    BigInt c = a[i + d.size() - 1];
    q[i] = c;
    if (c == 0) continue;
    for (size_t j = 0; j < d.size(); ++j) a[i + j] -= c * d[j];
  }
  trim(a);
  if (!a.empty()) throw InternalError("inexact polynomial division");
  trim(q);
  return q;
}

}  // namespace

int euler_phi(int n) {
  if (n < 1) throw InvalidArgument("euler_phi requires n >= 1");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    result -= result / p;
    while (m % p == 0) m /= p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<BigInt>& cyclotomic_polynomial(int n) {
  static std::map<int, std::vector<BigInt>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 1) throw InvalidArgument("cyclotomic polynomial requires n >= 1");

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed by exact division
  std::function<const std::vector<BigInt>&(int)> get = [&](int m) -> const std::vector<BigInt>& {
    auto hit = cache.find(m);
    if (hit != cache.end()) return hit->second;
    std::vector<BigInt> num(m + 1);
    num[0] = -1;
    num[m] = 1;
    std::vector<BigInt> den{1};
    for (int d = 1; d < m; ++d)
      if (m % d == 0) den = poly_mul(den, get(d));
    return cache.emplace(m, poly_div_exact(std::move(num), den)).first->second;
  };
  return get(n);
}

// Shared per-conductor tables: phi(n) and x^e reduced mod Phi_n for
// every exponent that addition of basis exponents or a Galois twist can hit.
struct Cyclotomic::Context {
  int n;
  int phi;
  // pow_mod[e] has length phi: coordinates of x^e mod Phi_n
  std::vector<std::vector<Rational>> pow_mod;
};

std::shared_ptr<const Cyclotomic::Context> Cyclotomic::context(int n) {
  static std::map<int, std::shared_ptr<const Context>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  auto ctx = std::make_shared<Context>();
  ctx->n = n;
  ctx->phi = euler_phi(n);
  const auto& poly = cyclotomic_polynomial(n);
  const int phi = ctx->phi;
  int limit = std::max(n, 2 * phi - 1);
  ctx->pow_mod.resize(std::max(limit, 1));
  for (int e = 0; e < phi; ++e) {
    ctx->pow_mod[e].assign(phi, Rational(0));
    ctx->pow_mod[e][e] = 1;
  }
  // x^e = x * x^{e-1}, then cancel the leading term against the monic Phi_n
  for (int e = phi; e < limit; ++e) {
    std::vector<Rational> v(phi, Rational(0));
    const auto& prev = ctx->pow_mod[e - 1];
    for (int i = 0; i + 1 < phi; ++i) v[i + 1] = prev[i];
    Rational lead = prev[phi - 1];
    if (lead != 0)
      for (int i = 0; i < phi; ++i) v[i] -= lead * Rational(poly[i]);
    ctx->pow_mod[e] = std::move(v);
  }
  cache.emplace(n, ctx);
  return ctx;
}

Cyclotomic::Cyclotomic(std::shared_ptr<const Context> ctx, std::vector<Rational> c)
    : n_(ctx->n), ctx_(std::move(ctx)), c_(std::move(c)) {}

Cyclotomic::Cyclotomic(int conductor) {
  if (conductor < 1) throw InvalidArgument("conductor must be >= 1");
  ctx_ = context(conductor);
  n_ = conductor;
  c_.assign(ctx_->phi, Rational(0));
}

Cyclotomic Cyclotomic::from_rational(int conductor, const Rational& q) {
  Cyclotomic x(conductor);
  x.c_[0] = q;
  return x;
}

Cyclotomic Cyclotomic::root_of_unity(int conductor, long long e) {
  Cyclotomic x(conductor);
  long long r = e % conductor;
  if (r < 0) r += conductor;
  x.c_ = x.ctx_->pow_mod[static_cast<size_t>(r)];
  return x;
}

bool Cyclotomic::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::as_rational() const {
  if (!is_rational()) throw InvalidArgument("cyclotomic value is not rational: " + to_string());
  return c_[0];
}

Cyclotomic Cyclotomic::to_conductor(int m) const {
  if (m == n_) return *this;
  if (m < 1 || m % n_ != 0)
    throw InvalidArgument("conductor embedding requires a multiple of the source conductor");
  Cyclotomic r(m);
  long long step = m / n_;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& pw = r.ctx_->pow_mod[static_cast<size_t>(step * i) % m];
    for (int j = 0; j < r.ctx_->phi; ++j) r.c_[j] += c_[i] * pw[j];
  }
  return r;
}

static void require_same_conductor(int a, int b) {
  if (a != b)
    throw InvalidArgument("mixed cyclotomic conductors " + std::to_string(a) + " and " +
                          std::to_string(b) + "; embed explicitly first");
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  require_same_conductor(n_, o.n_);
  Cyclotomic r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  require_same_conductor(n_, o.n_);
  Cyclotomic r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  require_same_conductor(n_, o.n_);
  const int phi = ctx_->phi;
  std::vector<Rational> prod(2 * phi - 1, Rational(0));
  for (int i = 0; i < phi; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  std::vector<Rational> out(phi, Rational(0));
  for (int e = 0; e < 2 * phi - 1; ++e) {
    if (prod[e] == 0) continue;
    if (e < phi) {
      out[e] += prod[e];
    } else {
      const auto& pw = ctx_->pow_mod[e];
      for (int j = 0; j < phi; ++j) out[j] += prod[e] * pw[j];
    }
  }
  return Cyclotomic(ctx_, std::move(out));
}

Cyclotomic Cyclotomic::operator*(const Rational& q) const {
  Cyclotomic r = *this;
  for (auto& v : r.c_) v *= q;
  return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  require_same_conductor(n_, o.n_);
  return c_ == o.c_;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw InvalidArgument("cyclotomic division by zero");
  if (is_rational()) return from_rational(n_, Rational(1) / c_[0]);
  // extended Euclid over Q[x] against Phi_n, which is irreducible over Q
  using Poly = std::vector<Rational>;
  auto deg = [](const Poly& p) { return static_cast<int>(p.size()) - 1; };
  auto trimq = [](Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  auto divmod = [&](const Poly& a, const Poly& b) {
    Poly r = a;
    trimq(r);
    Poly q;
    const int db = deg(b);
    if (deg(r) >= db) q.assign(static_cast<size_t>(deg(r) - db) + 1, Rational(0));
    while (deg(r) >= db) {
      int d = deg(r) - db;
      Rational c = r.back() / b.back();
      q[d] = c;
      for (int j = 0; j <= db; ++j) r[d + j] -= c * b[j];
      trimq(r);
    }
    return std::make_pair(q, r);
  };
  const auto& phi_int = cyclotomic_polynomial(n_);
  Poly r0(phi_int.begin(), phi_int.end());
  Poly r1 = c_;
  trimq(r1);
  Poly s0{}, s1{Rational(1)};  // s tracks the coefficient of this element
  while (!r1.empty()) {
    auto [q, rem] = divmod(r0, r1);
    // s_next = s0 - q * s1
    Poly qs;
    if (!q.empty() && !s1.empty()) {
      qs.assign(q.size() + s1.size() - 1, Rational(0));
      for (size_t i = 0; i < q.size(); ++i)
        for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
    }
    Poly s2(std::max(s0.size(), qs.size()), Rational(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
    for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    trimq(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant gcd; inverse = s0 / r0
  if (r0.size() != 1)
    throw InternalError("cyclotomic inverse: unexpected gcd degree");
  std::vector<Rational> out(ctx_->phi, Rational(0));
  for (size_t i = 0; i < s0.size(); ++i) out[i] = s0[i] / r0[0];
  return Cyclotomic(ctx_, std::move(out));
}

Cyclotomic Cyclotomic::galois(long long k) const {
  long long r = k % n_;
  if (r < 0) r += n_;
  if (n_ == 1) return *this;
  if (std::gcd(r, static_cast<long long>(n_)) != 1)
    throw InvalidArgument("galois exponent " + std::to_string(k) + " is not a unit mod " +
                          std::to_string(n_));
  std::vector<Rational> out(ctx_->phi, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& pw = ctx_->pow_mod[static_cast<size_t>((r * static_cast<long long>(i)) % n_)];
    for (int j = 0; j < ctx_->phi; ++j) out[j] += c_[i] * pw[j];
  }
  return Cyclotomic(ctx_, std::move(out));
}

Cyclotomic Cyclotomic::conj() const { return n_ <= 2 ? *this : galois(n_ - 1); }

Rational Cyclotomic::trace_to_rationals() const {
  Cyclotomic acc(n_);
  for (int k = 1; k <= n_; ++k) {
    if (std::gcd(k, n_) != 1) continue;
    acc += galois(k);
  }
  return acc.as_rational();
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rational v = c_[i];
    if (first) {
      if (v < 0) {
        os << "-";
        v = -v;
      }
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    if (i == 0) {
      os << rational_to_string(v);
    } else {
      if (v != 1) os << rational_to_string(v) << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_ ? -1 : 1;
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace wedderkit
