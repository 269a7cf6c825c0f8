#include <algorithm>
#include <cmath>
#include <vector>

#include "wedderkit/characters.hpp"
#include "wedderkit/errors.hpp"

// Exact character table over a prime field F_p, p = 1 mod exp(G), p > 2*sqrt(|G|).
// The class-sum matrices commute and share k one-dimensional common eigenspaces,
// one per irreducible row; eigenvalue multiplicities of each element lift the
// modular values back to sums of roots of unity.

namespace wedderkit {

namespace {

using ll = long long;
using Vec = std::vector<ll>;
using Mat = std::vector<Vec>;  // row major

struct Fp {
  ll p;
  ll add(ll a, ll b) const { return (a + b) % p; }
  ll sub(ll a, ll b) const { return (a - b % p + p) % p; }
  ll mul(ll a, ll b) const { return (a % p) * (b % p) % p; }
  ll pow(ll a, ll e) const {
    a %= p;
    if (a < 0) a += p;
    ll r = 1;
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  ll inv(ll a) const { return pow(a, p - 2); }
};

bool is_prime(ll n) {
  if (n < 2) return false;
  for (ll d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

ll pick_prime(int exponent, int order) {
  ll lower = 2 * static_cast<ll>(std::sqrt(static_cast<double>(order))) + 2;
  for (ll t = 1;; ++t) {
    ll p = static_cast<ll>(exponent) * t + 1;
    if (p <= lower) continue;
    if (is_prime(p)) return p;
  }
}

ll primitive_root(const Fp& f) {
  ll p = f.p;
  std::vector<ll> prime_factors;
  ll m = p - 1;
  for (ll d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) prime_factors.push_back(m);
  for (ll r = 2; r < p; ++r) {
    bool ok = true;
    for (ll q : prime_factors)
      if (f.pow(r, (p - 1) / q) == 1) {
        ok = false;
        break;
      }
    if (ok) return r;
  }
  throw InternalError("no primitive root found");
}

// reduce rows to reduced row echelon form; returns pivot column per pivot row
std::vector<int> rref(Mat& m, const Fp& f, int cols) {
  std::vector<int> pivots;
  int rows = static_cast<int>(m.size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pr = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[rank], m[pr]);
    ll iv = f.inv(m[rank][col]);
    for (auto& x : m[rank]) x = f.mul(x, iv);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      ll c = m[r][col];
      for (size_t j = 0; j < m[r].size(); ++j) m[r][j] = f.sub(m[r][j], f.mul(c, m[rank][j]));
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

// restriction of the operator to the invariant span of the basis columns:
// solve basis * X = image, image[c] = operator applied to basis[c]
Mat restrict_operator(const std::vector<Vec>& basis, const std::vector<Vec>& image,
                      const Fp& f) {
  int k = static_cast<int>(basis[0].size());
  int r = static_cast<int>(basis.size());
  Mat aug(k, Vec(2 * r, 0));
  for (int i = 0; i < k; ++i) {
    for (int c = 0; c < r; ++c) {
      aug[i][c] = basis[c][i];
      aug[i][r + c] = image[c][i];
    }
  }
  std::vector<int> pivots = rref(aug, f, r);
  if (static_cast<int>(pivots.size()) != r)
    throw InternalError("basis not of full rank in eigenspace split");
  Mat x(r, Vec(r, 0));
  for (int t = 0; t < r; ++t)
    for (int j = 0; j < r; ++j) x[pivots[t]][j] = aug[t][r + j];
  // consistency: rows past the pivots must be zero
  for (int t = r; t < k; ++t)
    for (int j = 0; j < r; ++j)
      if (aug[t][r + j] != 0) throw InternalError("subspace not invariant in split");
  return x;
}

// characteristic polynomial via Hessenberg similarity reduction
Vec char_poly(Mat a, const Fp& f) {
  int n = static_cast<int>(a.size());
  for (int j = 0; j + 2 < n; ++j) {
    int piv = -1;
    for (int i = j + 1; i < n; ++i)
      if (a[i][j] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != j + 1) {
      std::swap(a[piv], a[j + 1]);
      for (int i = 0; i < n; ++i) std::swap(a[i][piv], a[i][j + 1]);
    }
    ll iv = f.inv(a[j + 1][j]);
    for (int i = j + 2; i < n; ++i) {
      if (a[i][j] == 0) continue;
      ll c = f.mul(a[i][j], iv);
      for (int col = 0; col < n; ++col) a[i][col] = f.sub(a[i][col], f.mul(c, a[j + 1][col]));
      for (int row = 0; row < n; ++row) a[row][j + 1] = f.add(a[row][j + 1], f.mul(c, a[row][i]));
    }
  }
  // p_i(x) = (x - a[i-1][i-1]) p_{i-1} - sum_k a[k-1][i-1] (prod subdiag) p_{k-1}
  std::vector<Vec> p(n + 1);
  p[0] = {1};
  for (int i = 1; i <= n; ++i) {
    Vec cur(i + 1, 0);
    for (int d = 0; d < i; ++d) {
      cur[d + 1] = f.add(cur[d + 1], p[i - 1][d]);
      cur[d] = f.sub(cur[d], f.mul(a[i - 1][i - 1], p[i - 1][d]));
    }
    ll prod = 1;
    for (int k = i - 1; k >= 1; --k) {
      prod = f.mul(prod, a[k][k - 1]);
      if (prod == 0) break;
      ll coef = f.mul(a[k - 1][i - 1], prod);
      if (coef == 0) continue;
      for (int d = 0; d < k; ++d) cur[d] = f.sub(cur[d], f.mul(coef, p[k - 1][d]));
    }
    p[i] = std::move(cur);
  }
  return p[n];
}

ll eval_poly(const Vec& poly, ll x, const Fp& f) {
  ll r = 0;
  for (int d = static_cast<int>(poly.size()) - 1; d >= 0; --d) r = f.add(f.mul(r, x), poly[d]);
  return r;
}

// nullspace basis of (a - lambda I), deterministic: free columns ascending
std::vector<Vec> eigen_kernel(const Mat& a, ll lambda, const Fp& f) {
  int n = static_cast<int>(a.size());
  Mat m = a;
  for (int i = 0; i < n; ++i) m[i][i] = f.sub(m[i][i], lambda);
  std::vector<int> pivots = rref(m, f, n);
  std::vector<char> is_pivot(n, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<Vec> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (size_t t = 0; t < pivots.size(); ++t) v[pivots[t]] = f.sub(0, m[t][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

CharacterTable character_table(const GroupPtr& g) {
  const int n = g->order();
  const ConjugacyClasses& cls = g->classes();
  const int k = static_cast<int>(cls.classes.size());
  const int e = g->exponent();

  CharacterTable t;
  t.group = g;
  t.conductor = e;
  if (n == 1) {
    t.degrees = {1};
    t.rows = {{Cyclotomic::one(1)}};
    return t;
  }

  Fp f{pick_prime(e, n)};
  const ll p = f.p;

  std::vector<ll> class_size(k), class_size_inv(k);
  for (int j = 0; j < k; ++j) {
    class_size[j] = static_cast<ll>(cls.classes[j].size());
    class_size_inv[j] = f.inv(class_size[j]);
  }
  std::vector<int> inv_class(k);
  for (int j = 0; j < k; ++j) inv_class[j] = cls.class_of[g->inv(cls.reps[j])];

  // class matrix for one class: entry [j][l] counts, for a fixed z in class l,
  // the pairs (x, y) with x in class i, y in class j, x y = z
  auto class_matrix = [&](int i) {
    Mat counts(k, Vec(k, 0));
    for (Elt x : cls.classes[i])
      for (Elt y = 0; y < n; ++y) counts[cls.class_of[y]][cls.class_of[g->mul(x, y)]]++;
    Mat a(k, Vec(k, 0));
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l) {
        if (counts[j][l] % class_size[l] != 0)
          throw InternalError("class product counts not class-constant");
        a[j][l] = (counts[j][l] / class_size[l]) % p;
      }
    return a;
  };

  // split the common eigenspaces, one class matrix at a time
  std::vector<std::vector<Vec>> spaces;
  {
    std::vector<Vec> whole;
    for (int i = 0; i < k; ++i) {
      Vec v(k, 0);
      v[i] = 1;
      whole.push_back(std::move(v));
    }
    spaces.push_back(std::move(whole));
  }
  for (int i = 1; i < k; ++i) {
    bool all_split = true;
    for (const auto& s : spaces)
      if (s.size() > 1) all_split = false;
    if (all_split) break;
    Mat a = class_matrix(i);
    std::vector<std::vector<Vec>> next;
    for (auto& s : spaces) {
      if (s.size() == 1) {
        next.push_back(std::move(s));
        continue;
      }
      int r = static_cast<int>(s.size());
      std::vector<Vec> image(s.size(), Vec(k, 0));
      for (int c = 0; c < r; ++c)
        for (int row = 0; row < k; ++row) {
          ll acc = 0;
          for (int col = 0; col < k; ++col) acc = f.add(acc, f.mul(a[row][col], s[c][col]));
          image[c][row] = acc;
        }
      Mat x = restrict_operator(s, image, f);
      Vec poly = char_poly(x, f);
      for (ll lambda = 0; lambda < p; ++lambda) {
        if (eval_poly(poly, lambda, f) != 0) continue;
        std::vector<Vec> kern = eigen_kernel(x, lambda, f);
        if (kern.empty()) continue;
        std::vector<Vec> sub;
        for (const Vec& w : kern) {
          Vec v(k, 0);
          for (int c = 0; c < r; ++c)
            for (int row = 0; row < k; ++row) v[row] = f.add(v[row], f.mul(s[c][row], w[c]));
          sub.push_back(std::move(v));
        }
        next.push_back(std::move(sub));
      }
    }
    spaces = std::move(next);
  }
  if (static_cast<int>(spaces.size()) != k) throw InternalError("eigenspace separation incomplete");

  // normalize so the identity-class coordinate is 1, recover degrees
  std::vector<Vec> omega(k);
  std::vector<ll> degree(k);
  for (int tindex = 0; tindex < k; ++tindex) {
    Vec v = spaces[tindex][0];
    if (v[0] == 0) throw InternalError("eigenvector vanishes on the identity class");
    ll scale = f.inv(v[0]);
    for (auto& x : v) x = f.mul(x, scale);
    ll s = 0;
    for (int j = 0; j < k; ++j) s = f.add(s, f.mul(f.mul(v[j], v[inv_class[j]]), class_size_inv[j]));
    ll dsq = f.mul(n % p, f.inv(s));
    ll d = 0;
    for (ll c = 1; c * c <= n; ++c)
      if (f.mul(c, c) == dsq) {
        d = c;
        break;
      }
    if (d == 0) throw InternalError("no degree matches the eigenvector");
    omega[tindex] = std::move(v);
    degree[tindex] = d;
  }
  {
    ll sum = 0;
    for (int i = 0; i < k; ++i) sum += degree[i] * degree[i];
    if (sum != n) throw InternalError("degree squares do not sum to the group order");
  }

  // lift each modular value by its root-of-unity multiplicities
  ll z = f.pow(primitive_root(f), (p - 1) / e);
  std::vector<ll> zpow(e);
  for (int i = 0; i < e; ++i) zpow[i] = f.pow(z, i);
  ll einv = f.inv(e % p);
  std::vector<std::vector<int>> pclass(k, std::vector<int>(e));
  for (int j = 0; j < k; ++j)
    for (int s = 0; s < e; ++s) pclass[j][s] = cls.class_of[g->power(cls.reps[j], s)];

  std::vector<std::pair<int, std::vector<Cyclotomic>>> rows;
  for (int tindex = 0; tindex < k; ++tindex) {
    std::vector<ll> theta(k);
    for (int j = 0; j < k; ++j)
      theta[j] = f.mul(f.mul(degree[tindex], omega[tindex][j]), class_size_inv[j]);
    std::vector<Cyclotomic> vals;
    vals.reserve(k);
    for (int j = 0; j < k; ++j) {
      Cyclotomic val(e);
      ll mult_total = 0;
      for (int tt = 0; tt < e; ++tt) {
        ll a = 0;
        for (int s = 0; s < e; ++s)
          a = f.add(a, f.mul(theta[pclass[j][s]], zpow[(e - (s * tt) % e) % e]));
        a = f.mul(a, einv);
        if (a == 0) continue;
        if (a > degree[tindex]) throw InternalError("eigenvalue multiplicity out of range");
        mult_total += a;
        val += Cyclotomic::root_of_unity(e, tt) * Rational(a);
      }
      if (mult_total != degree[tindex])
        throw InternalError("eigenvalue multiplicities do not sum to the degree");
      vals.push_back(std::move(val));
    }
    if (!vals[0].is_rational() || vals[0].as_rational() != Rational(degree[tindex]))
      throw InternalError("lifted identity value differs from the degree");
    rows.emplace_back(static_cast<int>(degree[tindex]), std::move(vals));
  }

  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    for (size_t j = 0; j < a.second.size(); ++j) {
      int c = Cyclotomic::compare(a.second[j], b.second[j]);
      if (c != 0) return c < 0;
    }
    return false;
  });

  for (auto& [d, vals] : rows) {
    t.degrees.push_back(d);
    t.rows.push_back(std::move(vals));
  }

  // exact orthogonality audit, skipped for very wide tables
  if (k <= 40) {
    for (int s = 0; s < k; ++s)
      for (int u = s; u < k; ++u) {
        Cyclotomic acc(e);
        for (int j = 0; j < k; ++j)
          acc += t.rows[s][j] * t.rows[u][j].conj() * Rational(class_size[j]);
        Cyclotomic expect = s == u ? Cyclotomic::from_rational(e, Rational(n)) : Cyclotomic(e);
        if (acc != expect) throw InternalError("character rows fail orthogonality");
      }
  }
  return t;
}

}  // namespace wedderkit
