#pragma once

#include <memory>
#include <vector>

#include "wedderkit/rational.hpp"

namespace wedderkit {

// Coefficients of the n-th cyclotomic polynomial, ascending degree,
// length phi(n)+1, monic, integer.
const std::vector<BigInt>& cyclotomic_polynomial(int n);

int euler_phi(int n);

// An element of Q(zeta_n) in the power basis 1, z, ..., z^{phi(n)-1},
// reduced modulo the n-th cyclotomic polynomial. All arithmetic is exact.
// Mixed-conductor arithmetic is not implicit: operands must share a
// conductor, and embeddings into a larger conductor are explicit.
class Cyclotomic {
public:
  explicit Cyclotomic(int conductor);  // zero
  static Cyclotomic from_rational(int conductor, const Rational& q);
  static Cyclotomic one(int conductor) { return from_rational(conductor, 1); }
  // zeta_n^e, exponent taken mod n.
  static Cyclotomic root_of_unity(int conductor, long long e);

  int conductor() const { return n_; }
  // length phi(n), ascending power-basis coordinates
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational as_rational() const;  // throws unless is_rational()

  // embedding Q(zeta_n) -> Q(zeta_m) for n | m, zeta_n = zeta_m^{m/n}
  Cyclotomic to_conductor(int m) const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator*(const Rational& q) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // multiplicative inverse; throws InvalidArgument on zero
  Cyclotomic inverse() const;

  // Galois action zeta -> zeta^k; requires gcd(k, n) = 1
  Cyclotomic galois(long long k) const;
  // complex conjugation zeta -> zeta^{-1}
  Cyclotomic conj() const;
  // sum over the full Galois orbit; always rational
  Rational trace_to_rationals() const;

  std::string to_string() const;  // human-readable, z = zeta_n

  // total order usable as a canonical sort key (conductor, then coords)
  static int compare(const Cyclotomic& a, const Cyclotomic& b);

private:
  struct Context;
  static std::shared_ptr<const Context> context(int n);

  Cyclotomic(std::shared_ptr<const Context> ctx, std::vector<Rational> c);

  int n_;
  std::shared_ptr<const Context> ctx_;
  std::vector<Rational> c_;
};

inline Cyclotomic operator*(const Rational& q, const Cyclotomic& x) { return x * q; }

}  // namespace wedderkit
