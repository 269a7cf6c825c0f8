#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wedderkit/cyclotomic.hpp"
#include "wedderkit/group.hpp"

namespace wedderkit {

// Sparse element of the group algebra over an exact coefficient ring.
// Terms are kept sorted by element index with zero coefficients dropped,
// so equal values have equal representations.
template <class Coeff>
class AlgebraElement {
public:
  AlgebraElement(GroupPtr g, Coeff zero) : g_(std::move(g)), zero_(std::move(zero)) {}

  const GroupPtr& group() const { return g_; }
  const Coeff& zero_coeff() const { return zero_; }
  const std::vector<std::pair<Elt, Coeff>>& terms() const { return terms_; }

  Coeff coeff(Elt x) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), x,
                               [](const auto& t, Elt v) { return t.first < v; });
    if (it != terms_.end() && it->first == x) return it->second;
    return zero_;
  }
  bool is_zero() const { return terms_.empty(); }

  // builder: accumulate then normalize once
  void add_term(Elt x, const Coeff& c) { raw_.emplace_back(x, c); }
  void normalize();

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement scaled(const Coeff& c) const;
  bool operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const AlgebraElement& o) const { return !(*this == o); }

  // coefficient of x in the result is the coefficient of g x g^{-1} here
  AlgebraElement conjugate_by(Elt g) const;

  std::string to_string() const;
  static int compare(const AlgebraElement& a, const AlgebraElement& b);

private:
  GroupPtr g_;
  Coeff zero_;
  std::vector<std::pair<Elt, Coeff>> terms_;
  std::vector<std::pair<Elt, Coeff>> raw_;
};

using RationalElement = AlgebraElement<Rational>;
using CyclotomicElement = AlgebraElement<Cyclotomic>;

inline RationalElement rational_element(GroupPtr g) {
  return RationalElement(std::move(g), Rational(0));
}
inline CyclotomicElement cyclotomic_element(GroupPtr g, int conductor) {
  return CyclotomicElement(std::move(g), Cyclotomic(conductor));
}
RationalElement algebra_unit(const GroupPtr& g);

// |H|^{-1} sum of the members of H
RationalElement hat(const Subgroup& h);

// hat(K) when H = K, otherwise the product of (hat(K) - hat(L)) over the
// minimal subgroups L normal in H with K < L <= H
RationalElement epsilon_idempotent(const Subgroup& h, const Subgroup& k);

// sum of the distinct conjugates of epsilon(H, K) under the whole group
RationalElement e_idempotent(const GroupPtr& g, const Subgroup& h, const Subgroup& k);

template <class Coeff>
bool is_idempotent(const AlgebraElement<Coeff>& a) {
  return a * a == a;
}
template <class Coeff>
bool are_orthogonal(const AlgebraElement<Coeff>& a, const AlgebraElement<Coeff>& b) {
  return (a * b).is_zero() && (b * a).is_zero();
}

// {u in within : a^u = a}
template <class Coeff>
Subgroup centralizing_subgroup(const AlgebraElement<Coeff>& a, const Subgroup& within);
template <class Coeff>
bool is_central(const AlgebraElement<Coeff>& a);

// Q-dimension of the left ideal generated by a central idempotent:
// the rank of {g * e : g in G} by exact elimination.
// Throws NotCentralIdempotent unless e is a central idempotent.
int ideal_dimension(const RationalElement& e);

// canonical string form used for deduplication keys
std::string element_key(const RationalElement& a);

extern template class AlgebraElement<Rational>;
extern template class AlgebraElement<Cyclotomic>;

}  // namespace wedderkit
