#include "wedderkit/group.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace wedderkit {

std::string perm_to_cycles(const Permutation& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += ",";
      out += std::to_string(j + 1);  // 1-based in cycle notation
      first = false;
      j = p[j];
    }
    out += ")";
  }
  if (out.empty()) out = "()";
  return out;
}

bool Subgroup::contains(Elt x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

void FiniteGroup::finalize() {
  inv_.assign(n_, -1);
  for (Elt a = 0; a < n_; ++a) {
    for (Elt b = 0; b < n_; ++b) {
      if (mul(a, b) == 0) {
        if (mul(b, a) != 0) throw InvalidArgument("one-sided inverse in multiplication table");
        inv_[a] = b;
        break;
      }
    }
    if (inv_[a] < 0) throw InvalidArgument("element without inverse in multiplication table");
  }
  elt_order_.assign(n_, 1);
  exponent_ = 1;
  for (Elt a = 0; a < n_; ++a) {
    int ord = 1;
    Elt x = a;
    while (x != 0) {
      x = mul(x, a);
      ++ord;
    }
    elt_order_[a] = ord;
    exponent_ = std::lcm(exponent_, ord);
  }
  abelian_ = true;
  for (Elt a = 0; a < n_ && abelian_; ++a)
    for (Elt b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) {
        abelian_ = false;
        break;
      }
}

GroupPtr FiniteGroup::from_mul_table(std::vector<Elt> table, std::vector<std::string> labels,
                                     std::string name, bool validate_associativity) {
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  size_t n2 = table.size();
  int n = static_cast<int>(labels.size());
  if (n < 1 || n2 != static_cast<size_t>(n) * n)
    throw InvalidArgument("multiplication table size does not match label count");
  for (Elt v : table)
    if (v < 0 || v >= n) throw InvalidArgument("multiplication table entry out of range");
  g->n_ = n;
  g->table_ = std::move(table);
  g->labels_ = std::move(labels);
  g->name_ = std::move(name);
  for (Elt a = 0; a < n; ++a)
    if (g->mul(0, a) != a || g->mul(a, 0) != a)
      throw InvalidArgument("index 0 is not a two-sided identity");
  if (validate_associativity) {
    for (Elt a = 0; a < n; ++a)
      for (Elt b = 0; b < n; ++b)
        for (Elt c = 0; c < n; ++c)
          if (g->mul(g->mul(a, b), c) != g->mul(a, g->mul(b, c)))
            throw InvalidArgument("multiplication table is not associative");
  }
  g->finalize();
  return g;
}

GroupPtr FiniteGroup::from_permutation_generators(const std::vector<Permutation>& gens,
                                                  std::string name, int max_order) {
  if (gens.empty()) throw InvalidArgument("need at least one permutation generator");
  size_t degree = gens[0].size();
  for (const auto& p : gens) {
    if (p.size() != degree)
      throw InvalidArgument("permutation generators act on different point counts");
    std::vector<char> hit(degree, 0);
    for (int img : p) {
      if (img < 0 || img >= static_cast<int>(degree) || hit[img])
        throw InvalidArgument("generator is not a permutation");
      hit[img] = 1;
    }
  }

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  std::map<Permutation, Elt> index;
  std::vector<Permutation> elems;
  elems.push_back(perm_identity(static_cast<int>(degree)));
  index.emplace(elems[0], 0);
  // breadth-first, right-multiplying by generators in input order
  for (size_t qi = 0; qi < elems.size(); ++qi) {
    for (const auto& gen : gens) {
      Permutation next = perm_compose(elems[qi], gen);
      auto [it, inserted] = index.emplace(next, static_cast<Elt>(elems.size()));
      if (inserted) {
        elems.push_back(std::move(next));
        if (static_cast<int>(elems.size()) > max_order)
          throw GroupTooLarge("generated group exceeds the construction bound " +
                              std::to_string(max_order));
      }
    }
  }
  int n = static_cast<int>(elems.size());
  g->n_ = n;
  g->table_.resize(static_cast<size_t>(n) * n);
  for (Elt a = 0; a < n; ++a)
    for (Elt b = 0; b < n; ++b)
      g->table_[static_cast<size_t>(a) * n + b] = index.at(perm_compose(elems[a], elems[b]));
  g->labels_.reserve(n);
  for (const auto& p : elems) g->labels_.push_back(perm_to_cycles(p));
  g->name_ = std::move(name);
  g->perm_degree_ = static_cast<int>(degree);
  g->perms_ = std::move(elems);
  for (const auto& gen : gens) g->generators_.push_back(index.at(gen));
  g->finalize();
  return g;
}

std::optional<Elt> FiniteGroup::element_of_perm(const Permutation& p) const {
  if (perm_degree_ == 0 || p.size() != static_cast<size_t>(perm_degree_)) return std::nullopt;
  for (Elt a = 0; a < n_; ++a)
    if (perms_[a] == p) return a;
  return std::nullopt;
}

Elt FiniteGroup::power(Elt a, long long e) const {
  int ord = elt_order_[a];
  long long r = e % ord;
  if (r < 0) r += ord;
  Elt x = 0;
  for (long long i = 0; i < r; ++i) x = mul(x, a);
  return x;
}

GroupPtr FiniteGroup::cyclic(int n, int max_order) {
  if (n < 1) throw InvalidArgument("cyclic group needs order >= 1");
  if (n > max_order)
    throw GroupTooLarge("order " + std::to_string(n) + " exceeds bound " +
                        std::to_string(max_order));
  if (n == 1)
    return from_permutation_generators({perm_identity(1)}, "C1", max_order);
  Permutation cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return from_permutation_generators({cyc}, "C" + std::to_string(n), max_order);
}

GroupPtr FiniteGroup::dihedral(int order, int max_order) {
  if (order < 2 || order % 2)
    throw InvalidArgument("dihedral group needs an even order >= 2");
  if (order > max_order)
    throw GroupTooLarge("order " + std::to_string(order) + " exceeds bound " +
                        std::to_string(max_order));
  int n = order / 2;
  std::string name = "D" + std::to_string(n);
  if (n == 1) return cyclic(2, max_order);
  if (n == 2)
    return from_permutation_generators({{1, 0, 2, 3}, {0, 1, 3, 2}}, name, max_order);
  Permutation rot(n), ref(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    ref[i] = (n - i) % n;
  }
  return from_permutation_generators({rot, ref}, name, max_order);
}

GroupPtr FiniteGroup::symmetric(int n, int max_order) {
  if (n < 1) throw InvalidArgument("symmetric group needs n >= 1");
  std::string name = "S" + std::to_string(n);
  if (n == 1) return from_permutation_generators({perm_identity(1)}, name, max_order);
  Permutation cyc(n), swap01 = perm_identity(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  swap01[0] = 1;
  swap01[1] = 0;
  if (n == 2) return from_permutation_generators({swap01}, name, max_order);
  return from_permutation_generators({cyc, swap01}, name, max_order);
}

GroupPtr FiniteGroup::alternating(int n, int max_order) {
  if (n < 1) throw InvalidArgument("alternating group needs n >= 1");
  std::string name = "A" + std::to_string(n);
  if (n <= 2) return from_permutation_generators({perm_identity(std::max(n, 1))}, name, max_order);
  Permutation three = perm_identity(n);
  three[0] = 1;
  three[1] = 2;
  three[2] = 0;
  if (n == 3) return from_permutation_generators({three}, name, max_order);
  Permutation big = perm_identity(n);
  if (n % 2) {
    for (int i = 0; i < n; ++i) big[i] = (i + 1) % n;
  } else {
    for (int i = 1; i < n; ++i) big[i] = 1 + (i % (n - 1));
  }
  return from_permutation_generators({three, big}, name, max_order);
}

GroupPtr FiniteGroup::dicyclic(int order, int max_order) {
  if (order < 4 || order % 4)
    throw InvalidArgument("dicyclic group needs order divisible by 4");
  if (order > max_order)
    throw GroupTooLarge("order " + std::to_string(order) + " exceeds bound " +
                        std::to_string(max_order));
  int n = order / 4;
  int twon = 2 * n;
  auto idx = [&](int i, int j) { return j * twon + i; };
  std::vector<Elt> table(static_cast<size_t>(order) * order);
  for (int i1 = 0; i1 < twon; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < twon; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int i3, j3;
          if (j1 == 0) {
            i3 = (i1 + i2) % twon;
            j3 = j2;
          } else if (j2 == 0) {
            i3 = ((i1 - i2) % twon + twon) % twon;
            j3 = 1;
          } else {
            i3 = (((i1 - i2 + n) % twon) + twon) % twon;
            j3 = 0;
          }
          table[static_cast<size_t>(idx(i1, j1)) * order + idx(i2, j2)] = idx(i3, j3);
        }
  std::vector<std::string> labels(order);
  for (int i = 0; i < twon; ++i)
    for (int j = 0; j < 2; ++j) {
      std::string l;
      if (i) l += (i > 1) ? ("a" + std::to_string(i)) : "a";
      if (j) l += "b";
      if (l.empty()) l = "e";
      labels[idx(i, j)] = l;
    }
  return from_mul_table(std::move(table), std::move(labels), "Dic" + std::to_string(n), false);
}

GroupPtr FiniteGroup::semidirect_cyclic(int m, int k, int n, int max_order) {
  if (m < 1 || n < 1) throw InvalidArgument("semidirect factors need positive orders");
  long long order = static_cast<long long>(m) * n;
  if (order > max_order)
    throw GroupTooLarge("order " + std::to_string(order) + " exceeds bound " +
                        std::to_string(max_order));
  k = ((k % m) + m) % m;
  if (std::gcd(k, m) != 1) throw InvalidArgument("semidirect action exponent must be a unit");
  // k^n = 1 mod m so that b^n = identity is consistent with the action
  long long kn = 1;
  for (int i = 0; i < n; ++i) kn = (kn * k) % m;
  if (kn % m != 1 % m) throw InvalidArgument("semidirect action must have order dividing n");
  std::vector<long long> kpow(n);
  kpow[0] = 1 % m;
  for (int j = 1; j < n; ++j) kpow[j] = (kpow[j - 1] * k) % m;
  auto idx = [&](int i, int j) { return j * m + i; };
  std::vector<Elt> table(static_cast<size_t>(order) * order);
  for (int i1 = 0; i1 < m; ++i1)
    for (int j1 = 0; j1 < n; ++j1)
      for (int i2 = 0; i2 < m; ++i2)
        for (int j2 = 0; j2 < n; ++j2) {
          int i3 = static_cast<int>((i1 + i2 * kpow[j1]) % m);
          int j3 = (j1 + j2) % n;
          table[static_cast<size_t>(idx(i1, j1)) * order + idx(i2, j2)] = idx(i3, j3);
        }
  std::vector<std::string> labels(order);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      std::string l;
      if (i) l += (i > 1) ? ("a" + std::to_string(i)) : "a";
      if (j) l += (j > 1) ? ("b" + std::to_string(j)) : "b";
      if (l.empty()) l = "e";
      labels[idx(i, j)] = l;
    }
  std::string name = "C" + std::to_string(m) + ":" + std::to_string(k) + ":C" + std::to_string(n);
  return from_mul_table(std::move(table), std::move(labels), std::move(name), false);
}

const ConjugacyClasses& FiniteGroup::classes() const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (classes_cache_) return *classes_cache_;
  auto cc = std::make_unique<ConjugacyClasses>();
  std::vector<char> seen(n_, 0);
  for (Elt x = 0; x < n_; ++x) {
    if (seen[x]) continue;
    std::vector<Elt> cls;
    for (Elt g = 0; g < n_; ++g) {
      Elt y = conj(x, g);
      if (!seen[y]) {
        seen[y] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    cc->classes.push_back(std::move(cls));
  }
  std::sort(cc->classes.begin(), cc->classes.end(),
            [](const std::vector<Elt>& a, const std::vector<Elt>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a[0] < b[0];
            });
  cc->class_of.assign(n_, -1);
  for (size_t c = 0; c < cc->classes.size(); ++c) {
    cc->reps.push_back(cc->classes[c][0]);
    for (Elt x : cc->classes[c]) cc->class_of[x] = static_cast<int>(c);
  }
  classes_cache_ = std::move(cc);
  return *classes_cache_;
}

Subgroup FiniteGroup::full_subgroup() const {
  Subgroup s;
  s.parent = shared_from_this();
  s.members.resize(n_);
  std::iota(s.members.begin(), s.members.end(), 0);
  return s;
}

Subgroup FiniteGroup::trivial_subgroup() const {
  Subgroup s;
  s.parent = shared_from_this();
  s.members = {0};
  return s;
}

namespace {

// product closure of a seed set; identity always included
std::vector<Elt> close_under_products(const FiniteGroup& g, const std::vector<Elt>& seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elt> members;
  auto add = [&](Elt x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  add(0);
  for (Elt s : seed) add(s);
  for (size_t qi = 0; qi < members.size(); ++qi) {
    Elt x = members[qi];
    size_t cur = members.size();
    for (size_t mi = 0; mi < cur; ++mi) {
      Elt y = members[mi];
      add(g.mul(x, y));
      add(g.mul(y, x));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

const std::vector<Subgroup>& FiniteGroup::all_subgroups(int bound) const {
  if (n_ > bound)
    throw BoundExceeded("subgroup enumeration bound " + std::to_string(bound) +
                        " exceeded by group of order " + std::to_string(n_));
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (subgroups_cache_) return *subgroups_cache_;

  // layered growth: cyclic seeds, then extend each known subgroup by one
  // outside element and close, deduplicating by the canonical member list
  std::set<std::vector<Elt>> seen;
  std::vector<std::vector<Elt>> work;
  auto push = [&](std::vector<Elt> m) {
    if (seen.insert(m).second) work.push_back(std::move(m));
  };
  push({0});
  for (Elt x = 1; x < n_; ++x) push(close_under_products(*this, {x}));
  for (size_t wi = 0; wi < work.size(); ++wi) {
    std::vector<Elt> base = work[wi];  // copy: work may reallocate
    for (Elt x = 0; x < n_; ++x) {
      if (std::binary_search(base.begin(), base.end(), x)) continue;
      std::vector<Elt> seed = base;
      seed.push_back(x);
      push(close_under_products(*this, seed));
    }
  }
  auto out = std::make_unique<std::vector<Subgroup>>();
  out->reserve(seen.size());
  auto self = shared_from_this();
  for (const auto& m : seen) {
    Subgroup s;
    s.parent = self;
    s.members = m;
    out->push_back(std::move(s));
  }
  std::sort(out->begin(), out->end());
  subgroups_cache_ = std::move(out);
  return *subgroups_cache_;
}

DirectProduct direct_product(const GroupPtr& a, const GroupPtr& b, int max_order) {
  long long order = static_cast<long long>(a->order()) * b->order();
  if (order > max_order)
    throw GroupTooLarge("direct product order " + std::to_string(order) + " exceeds bound " +
                        std::to_string(max_order));
  int na = a->order(), nb = b->order();
  int n = static_cast<int>(order);
  auto idx = [&](Elt x, Elt y) { return x * nb + y; };
  std::vector<Elt> table(static_cast<size_t>(n) * n);
  for (Elt a1 = 0; a1 < na; ++a1)
    for (Elt b1 = 0; b1 < nb; ++b1)
      for (Elt a2 = 0; a2 < na; ++a2)
        for (Elt b2 = 0; b2 < nb; ++b2)
          table[static_cast<size_t>(idx(a1, b1)) * n + idx(a2, b2)] =
              idx(a->mul(a1, a2), b->mul(b1, b2));
  std::vector<std::string> labels(n);
  for (Elt x = 0; x < na; ++x)
    for (Elt y = 0; y < nb; ++y) labels[idx(x, y)] = "(" + a->label(x) + "," + b->label(y) + ")";
  std::string name = "(" + a->name() + " x " + b->name() + ")";
  auto g = FiniteGroup::from_mul_table(std::move(table), std::move(labels), std::move(name), false);
  DirectProduct dp;
  dp.group = g;
  dp.inject_a.resize(na);
  dp.inject_b.resize(nb);
  for (Elt x = 0; x < na; ++x) dp.inject_a[x] = idx(x, 0);
  for (Elt y = 0; y < nb; ++y) dp.inject_b[y] = idx(0, y);
  return dp;
}

GroupPtr read_cayley_table(const std::string& path, int max_order) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot open " + path);
  long long n;
  if (!(in >> n)) throw ParseError("missing order line in " + path);
  if (n < 1) throw ParseError("bad order in " + path);
  if (n > max_order)
    throw GroupTooLarge("order " + std::to_string(n) + " exceeds bound " +
                        std::to_string(max_order));
  std::vector<Elt> table;
  table.reserve(static_cast<size_t>(n) * n);
  for (long long i = 0; i < n * n; ++i) {
    long long v;
    if (!(in >> v)) throw ParseError("truncated multiplication table in " + path);
    if (v < 0 || v >= n) throw ParseError("table entry out of range in " + path);
    table.push_back(static_cast<Elt>(v));
  }
  std::vector<std::string> labels(n);
  for (long long i = 0; i < n; ++i) labels[i] = "g" + std::to_string(i);
  std::string name = path;
  auto slash = name.find_last_of('/');
  if (slash != std::string::npos) name = name.substr(slash + 1);
  auto dot = name.find_last_of('.');
  if (dot != std::string::npos) name = name.substr(0, dot);
  try {
    return FiniteGroup::from_mul_table(std::move(table), std::move(labels), std::move(name),
                                       n <= 512);
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("invalid group table in ") + path + ": " + e.what());
  }
}

void write_cayley_table(const GroupPtr& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IOError("cannot write " + path);
  int n = g->order();
  out << n << "\n";
  for (Elt a = 0; a < n; ++a) {
    for (Elt b = 0; b < n; ++b) {
      if (b) out << ' ';
      out << g->mul(a, b);
    }
    out << "\n";
  }
  if (!out) throw IOError("failed writing " + path);
}

}  // namespace wedderkit
