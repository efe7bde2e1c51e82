#include <random>

#include "doctest.h"
#include "fixtures.hpp"

using namespace pythsix;
using namespace fx;

TEST_CASE("hamilton relations") {
  Quaternion i = I, j = J, k = K;
  CHECK(i * i == Quaternion(-1L));
  CHECK(j * j == Quaternion(-1L));
  CHECK(k * k == Quaternion(-1L));
  CHECK(i * j == k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK(j * i == -k);
  Quaternion q(1L, 2L, 3L, 4L);
  CHECK(q.norm() == FieldElement(30L));
  CHECK(q * q.inverse() == Quaternion(1L));
}

TEST_CASE("ring operations") {
  QPoly p = (U() + qc(I)) * (V() + qc(J));
  QPoly expect = U() * V() + qc(I) * V() + qc(J) * U() + qc(K);
  CHECK(p == expect);
  CHECK((U() + qc(I)) * (U() - qc(I)) == U() * U() + QPoly(1L));
  CHECK((p * QPoly()).is_zero());
  CHECK(to_string(p) == "u*v + j*u + i*v + k");
  CHECK(p.degu() == 1);
  CHECK(QPoly().degu() == kZeroDegree);
  CHECK(p.in_space(1, 1));
  CHECK_FALSE(p.in_space(0, 1));
}

TEST_CASE("conjugation and norm") {
  CHECK(conj(U() + qc(I)) == U() - qc(I));
  QPoly q = beauregard_Q();
  QPoly u = U(), v = V();
  QPoly expect = u * u * v * v - QPoly(1L) - (u * u - v * v) * qc(I) - QPoly(2L) * u * v * qc(J);
  CHECK(conj(q) == expect);
  QPoly real = to_qpoly(Ur() * Ur() + Vr());
  CHECK(conj(real) == real);
  CHECK(norm(U() + qc(I)) == Ur() * Ur() + RPoly(1L));
  CHECK(norm(q) == beauregard_P() * beauregard_R());
  CHECK(eval(q, 0L, 0L) == Quaternion(-1L));
  CHECK(eval(U() + qc(I), 1L, 0L) == Quaternion(1L, 1L, 0L, 0L));
}

TEST_CASE("norm multiplicativity and conj anti-homomorphism") {
  std::mt19937_64 rng(3);
  for (int n = 0; n < 200; ++n) {
    QPoly a = random_qpoly(rng, 1, 1);
    QPoly b = random_qpoly(rng, 1, 2);
    CHECK(norm(a * b) == norm(a) * norm(b));
    CHECK(conj(a * b) == conj(b) * conj(a));
    if (!a.is_zero() && !b.is_zero()) {
      CHECK((a * b).degu() == a.degu() + b.degu());
      CHECK((a * b).degv() == a.degv() + b.degv());
    }
  }
}

TEST_CASE("evaluation homomorphism of the norm") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-5, 5);
  QPoly q = beauregard_Q();
  RPoly n = norm(q);
  for (int t = 0; t < 20; ++t) {
    FieldElement u0(d(rng), 3L), v0(d(rng), 2L);
    CHECK(eval(n, u0, v0) == eval(q, u0, v0).norm());
  }
}

TEST_CASE("divmod_by_real") {
  QPoly q = U() * U() + qc(I);
  RPoly r = Ur() * Ur() + RPoly(1L);
  QDivMod d = divmod_by_real(q, r, Var::U);
  CHECK(d.quotient == QPoly(1L));
  CHECK(d.remainder == qc(I) - QPoly(1L));
  QDivMod same = divmod_by_real(q, RPoly(1L), Var::U);
  CHECK(same.quotient == q);
  CHECK(same.remainder.is_zero());

  QPoly bq = beauregard_Q();
  RPoly br = quad_plus(Var::V);
  QDivMod e = divmod_by_real(bq, br, Var::V);
  CHECK(e.quotient * br + e.remainder == bq);
  CHECK(e.remainder.degv() < br.degv());
  CHECK_THROWS_AS(divmod_by_real(q, RPoly(), Var::U), Error);
  CHECK_THROWS_AS(divmod_by_real(bq, beauregard_R(), Var::V), Error);

  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) {
    QPoly a = random_qpoly(rng, 3, 2);
    RPoly b = random_rpoly(rng, 2, 0, 1, 3);
    QDivMod f = divmod_by_real(a, b, Var::U);
    CHECK(f.quotient * b + f.remainder == a);
    CHECK(f.remainder.degu() < b.degu());
  }
}

TEST_CASE("left and right division") {
  QPoly p = (U() + qc(I)) * (V() + qc(J));
  auto r = right_divide(p, V() + qc(J));
  REQUIRE(r);
  CHECK(*r == U() + qc(I));
  auto l = left_divide(p, U() + qc(I));
  REQUIRE(l);
  CHECK(*l == V() + qc(J));
  CHECK_FALSE(left_divide(p, U() + qc(J)));
  CHECK_THROWS_AS(left_divmod(p, U() * V() + QPoly(1L), Var::U), Error);
}

TEST_CASE("exact quotient by real polynomials") {
  RPoly g = Ur() * Ur() + RPoly(1L);
  QPoly q = to_qpoly(g) * (U() * V() + qc(K));
  auto e = exact_quotient(q, g);
  REQUIRE(e);
  CHECK(*e == U() * V() + qc(K));
  CHECK_FALSE(exact_quotient(q, Ur() + RPoly(1L)));
}
