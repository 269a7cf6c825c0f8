#include "wedderkit/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "wedderkit/errors.hpp"

namespace wedderkit {

template <class Coeff>
void AlgebraElement<Coeff>::normalize() {
  for (auto& t : raw_) terms_.push_back(std::move(t));
  raw_.clear();
  std::sort(terms_.begin(), terms_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Elt, Coeff>> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      out.push_back(std::move(t));
    }
  }
  terms_.clear();
  for (auto& t : out) {
    if (!(t.second == zero_)) terms_.push_back(std::move(t));
  }
}

template <class Coeff>
AlgebraElement<Coeff> AlgebraElement<Coeff>::operator+(const AlgebraElement& o) const {
  if (g_ != o.g_) throw InvalidArgument("algebra elements over different groups");
  AlgebraElement r(g_, zero_);
  for (const auto& t : terms_) r.add_term(t.first, t.second);
  for (const auto& t : o.terms_) r.add_term(t.first, t.second);
  r.normalize();
  return r;
}

template <class Coeff>
AlgebraElement<Coeff> AlgebraElement<Coeff>::operator-(const AlgebraElement& o) const {
  if (g_ != o.g_) throw InvalidArgument("algebra elements over different groups");
  AlgebraElement r(g_, zero_);
  for (const auto& t : terms_) r.add_term(t.first, t.second);
  for (const auto& t : o.terms_) r.add_term(t.first, zero_ - t.second);
  r.normalize();
  return r;
}

template <class Coeff>
AlgebraElement<Coeff> AlgebraElement<Coeff>::operator*(const AlgebraElement& o) const {
  if (g_ != o.g_) throw InvalidArgument("algebra elements over different groups");
  // dense accumulator: supports are usually a sizable fraction of the group
  std::vector<Coeff> acc(static_cast<size_t>(g_->order()), zero_);
  std::vector<char> hit(static_cast<size_t>(g_->order()), 0);
  for (const auto& [x, cx] : terms_) {
    for (const auto& [y, cy] : o.terms_) {
      Elt z = g_->mul(x, y);
      acc[z] += cx * cy;
      hit[z] = 1;
    }
  }
  AlgebraElement r(g_, zero_);
  for (Elt z = 0; z < g_->order(); ++z) {
    if (hit[z] && !(acc[z] == zero_)) r.add_term(z, acc[z]);
  }
  r.normalize();
  return r;
}

template <class Coeff>
AlgebraElement<Coeff> AlgebraElement<Coeff>::scaled(const Coeff& c) const {
  AlgebraElement r(g_, zero_);
  if (c == zero_) return r;
  for (const auto& t : terms_) r.add_term(t.first, t.second * c);
  r.normalize();
  return r;
}

template <class Coeff>
AlgebraElement<Coeff> AlgebraElement<Coeff>::conjugate_by(Elt g) const {
  AlgebraElement r(g_, zero_);
  for (const auto& t : terms_) r.add_term(g_->conj(t.first, g), t.second);
  r.normalize();
  return r;
}

namespace {
std::string coeff_str(const Rational& c) { return rational_to_string(c); }
std::string coeff_str(const Cyclotomic& c) { return c.to_string(); }
int coeff_cmp(const Rational& a, const Rational& b) {
  return a < b ? -1 : (b < a ? 1 : 0);
}
int coeff_cmp(const Cyclotomic& a, const Cyclotomic& b) { return Cyclotomic::compare(a, b); }
}  // namespace

template <class Coeff>
std::string AlgebraElement<Coeff>::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [x, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << coeff_str(c) << ")*" << g_->label(x);
  }
  return os.str();
}

template <class Coeff>
int AlgebraElement<Coeff>::compare(const AlgebraElement& a, const AlgebraElement& b) {
  size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    if (a.terms_[i].first != b.terms_[i].first)
      return a.terms_[i].first < b.terms_[i].first ? -1 : 1;
    int c = coeff_cmp(a.terms_[i].second, b.terms_[i].second);
    if (c != 0) return c;
  }
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size() ? -1 : 1;
  return 0;
}

template class AlgebraElement<Rational>;
template class AlgebraElement<Cyclotomic>;

RationalElement algebra_unit(const GroupPtr& g) {
  RationalElement r = rational_element(g);
  r.add_term(0, Rational(1));
  r.normalize();
  return r;
}

RationalElement hat(const Subgroup& h) {
  RationalElement r = rational_element(h.parent);
  Rational c(1, static_cast<long>(h.order()));
  for (Elt x : h.members) r.add_term(x, c);
  r.normalize();
  return r;
}

RationalElement epsilon_idempotent(const Subgroup& h, const Subgroup& k) {
  if (!is_subset(k, h)) throw InvalidArgument("epsilon: K must lie inside H");
  if (!is_normal_in(k, h)) throw NotNormal("epsilon: K must be normal in H");
  if (h.members == k.members) return hat(k);
  RationalElement prod = rational_element(h.parent);
  bool first = true;
  for (const Subgroup& l : minimal_normal_over(h, k)) {
    RationalElement factor = hat(k) - hat(l);
    prod = first ? factor : prod * factor;
    first = false;
  }
  if (first) throw InternalError("no minimal subgroups over a proper subgroup");
  return prod;
}

RationalElement e_idempotent(const GroupPtr& g, const Subgroup& h, const Subgroup& k) {
  RationalElement eps = epsilon_idempotent(h, k);
  std::map<std::string, RationalElement> seen;
  for (Elt x = 0; x < g->order(); ++x) {
    RationalElement c = eps.conjugate_by(x);
    seen.emplace(element_key(c), std::move(c));
  }
  RationalElement sum = rational_element(g);
  for (const auto& [key, val] : seen) sum = sum + val;
  return sum;
}

template <class Coeff>
Subgroup centralizing_subgroup(const AlgebraElement<Coeff>& a, const Subgroup& within) {
  Subgroup r;
  r.parent = within.parent;
  for (Elt u : within.members) {
    if (a.conjugate_by(u) == a) r.members.push_back(u);
  }
  return r;
}
template Subgroup centralizing_subgroup<Rational>(const RationalElement&, const Subgroup&);
template Subgroup centralizing_subgroup<Cyclotomic>(const CyclotomicElement&, const Subgroup&);

template <class Coeff>
bool is_central(const AlgebraElement<Coeff>& a) {
  const GroupPtr& g = a.group();
  for (Elt x = 0; x < g->order(); ++x) {
    if (!(a.conjugate_by(x) == a)) return false;
  }
  return true;
}
template bool is_central<Rational>(const RationalElement&);
template bool is_central<Cyclotomic>(const CyclotomicElement&);

int ideal_dimension(const RationalElement& e) {
  if (!is_idempotent(e) || !is_central(e))
    throw NotCentralIdempotent("ideal dimension needs a central idempotent");
  const GroupPtr& g = e.group();
  int n = g->order();
  // rows: coefficient vectors of g*e for all g; rank by exact elimination
  std::vector<std::vector<Rational>> rows;
  rows.reserve(static_cast<size_t>(n));
  for (Elt x = 0; x < n; ++x) {
    std::vector<Rational> row(static_cast<size_t>(n), Rational(0));
    for (const auto& [y, c] : e.terms()) row[static_cast<size_t>(g->mul(x, y))] = c;
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r) {
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    Rational inv = Rational(1) / rows[rank][col];
    for (int c2 = col; c2 < n; ++c2) rows[rank][c2] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rational f = rows[r][col];
      for (int c2 = col; c2 < n; ++c2) rows[r][c2] -= f * rows[rank][c2];
    }
    ++rank;
  }
  return rank;
}

std::string element_key(const RationalElement& a) {
  std::ostringstream os;
  for (const auto& [x, c] : a.terms()) os << x << ":" << rational_to_string(c) << ";";
  return os.str();
}

}  // namespace wedderkit
