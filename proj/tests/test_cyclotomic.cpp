#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wedderkit/cyclotomic.hpp"
#include "wedderkit/errors.hpp"

using namespace wedderkit;

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(36) == 12);
  CHECK(euler_phi(97) == 96);
}

TEST_CASE("cyclotomic polynomials by exact division") {
  // Phi_1 = x - 1
  CHECK(cyclotomic_polynomial(1) == std::vector<BigInt>{-1, 1});
  // Phi_2 = x + 1
  CHECK(cyclotomic_polynomial(2) == std::vector<BigInt>{1, 1});
  // Phi_4 = x^2 + 1
  CHECK(cyclotomic_polynomial(4) == std::vector<BigInt>{1, 0, 1});
  // Phi_6 = x^2 - x + 1
  CHECK(cyclotomic_polynomial(6) == std::vector<BigInt>{1, -1, 1});
  // Phi_12 = x^4 - x^2 + 1
  CHECK(cyclotomic_polynomial(12) == std::vector<BigInt>{1, 0, -1, 0, 1});
  // degree is phi(n)
  for (int n = 1; n <= 60; ++n) {
    CHECK(static_cast<int>(cyclotomic_polynomial(n).size()) == euler_phi(n) + 1);
  }
}

TEST_CASE("root of unity satisfies its minimal polynomial") {
  for (int n = 1; n <= 40; ++n) {
    Cyclotomic z = Cyclotomic::root_of_unity(n, 1);
    const auto& phi = cyclotomic_polynomial(n);
    Cyclotomic acc(n);
    Cyclotomic p = Cyclotomic::one(n);
    for (size_t i = 0; i < phi.size(); ++i) {
      acc += p * Rational(phi[i]);
      p = p * z;
    }
    CHECK(acc.is_zero());
  }
}

TEST_CASE("powers wrap modulo the order") {
  Cyclotomic z = Cyclotomic::root_of_unity(12, 1);
  Cyclotomic w = Cyclotomic::one(12);
  for (int i = 0; i < 12; ++i) w = w * z;
  CHECK(w == Cyclotomic::one(12));
  CHECK(Cyclotomic::root_of_unity(12, 13) == z);
  CHECK(Cyclotomic::root_of_unity(12, -1) == Cyclotomic::root_of_unity(12, 11));
}

TEST_CASE("ring axioms on sample values") {
  Cyclotomic a = Cyclotomic::root_of_unity(15, 2) + Cyclotomic::from_rational(15, Rational(3, 7));
  Cyclotomic b = Cyclotomic::root_of_unity(15, 7) - Cyclotomic::one(15);
  Cyclotomic c = Cyclotomic::root_of_unity(15, 11) * Rational(-2, 5);
  CHECK(a + b == b + a);
  CHECK(a * b == b * a);
  CHECK((a + b) + c == a + (b + c));
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
  CHECK(a - a == Cyclotomic(15));
}

TEST_CASE("inverse") {
  Cyclotomic a = Cyclotomic::root_of_unity(9, 2) + Cyclotomic::from_rational(9, Rational(1, 2));
  CHECK(a * a.inverse() == Cyclotomic::one(9));
  Cyclotomic z = Cyclotomic::root_of_unity(20, 3);
  CHECK(z.inverse() == Cyclotomic::root_of_unity(20, -3));
  CHECK_THROWS_AS(Cyclotomic(5).inverse(), InvalidArgument);
}

TEST_CASE("rational detection") {
  Cyclotomic z = Cyclotomic::root_of_unity(5, 1);
  Cyclotomic s = z + z.galois(2) + z.galois(3) + z.galois(4);
  CHECK(s.is_rational());
  CHECK(s.as_rational() == Rational(-1));
  CHECK(!z.is_rational());
}

TEST_CASE("conductor promotion") {
  Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
  Cyclotomic in12 = z3.to_conductor(12);
  CHECK(in12.conductor() == 12);
  CHECK(in12 == Cyclotomic::root_of_unity(12, 4));
  Cyclotomic r = Cyclotomic::from_rational(4, Rational(5, 3)).to_conductor(8);
  CHECK(r.as_rational() == Rational(5, 3));
}

TEST_CASE("galois action and conjugation") {
  Cyclotomic z = Cyclotomic::root_of_unity(7, 1);
  CHECK(z.galois(3) == Cyclotomic::root_of_unity(7, 3));
  CHECK(z.conj() == Cyclotomic::root_of_unity(7, 6));
  CHECK((z + z.conj()).conj() == z + z.conj());
  CHECK_THROWS_AS(z.galois(7), InvalidArgument);
}

TEST_CASE("trace to the rationals") {
  // trace of a rational is [Q(zeta_n):Q] times it
  Cyclotomic r = Cyclotomic::from_rational(12, Rational(3));
  CHECK(r.trace_to_rationals() == Rational(12));
  // trace of a primitive p-th root is -1
  CHECK(Cyclotomic::root_of_unity(11, 1).trace_to_rationals() == Rational(-1));
  CHECK(Cyclotomic::root_of_unity(12, 1).trace_to_rationals() == Rational(0));
}
