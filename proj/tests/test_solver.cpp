#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "pythsix/errors.hpp"
#include "pythsix/solver.hpp"

using namespace pythsix;
using namespace fx;

namespace {

Triple beauregard_triple() { return {beauregard_P(), beauregard_Q(), beauregard_R()}; }

Triple from_pair(const QPoly& A, const QPoly& B, const RPoly& D) {
  return {norm(A) * D, A * B * D, norm(B) * D};
}

bool in_u(const QPoly& q) { return q.degv() <= 0; }

// Random (2,2) tuple of the shape a(u + x) * (v + y)(u + z) * (v + w) * d.
PythTuple random_22_tuple(std::mt19937_64& rng) {
  QPoly A = qc(random_nonzero_quaternion(rng)) * random_monic_linear(rng, Var::U);
  QPoly B = random_monic_linear(rng, Var::V) * random_monic_linear(rng, Var::U);
  if (rng() % 2) B = random_monic_linear(rng, Var::U) * random_monic_linear(rng, Var::V);
  QPoly C = random_monic_linear(rng, Var::V);
  std::uniform_int_distribution<long> d(1, 4);
  return tuple_from_ABCD(A, B, C, RPoly(d(rng)), true);
}

}  // namespace

TEST_CASE("transform by j turns the quartic into factored norms") {
  Triple t = transform(beauregard_triple(), qc(J));
  QPoly A = beauregard_A(), B = beauregard_B(), C = beauregard_C();
  CHECK(t.R == norm(B));
  CHECK(t.Q == A * B * C);
  CHECK(t.P == norm(A * C));
}

TEST_CASE("transform basics") {
  Triple t = beauregard_triple();
  CHECK(transform(t, QPoly()) == t);
  std::mt19937_64 rng(7);
  for (int n = 0; n < 50; ++n) {
    QPoly T = random_qpoly(rng, 1, 1, -2, 2);
    Triple s = transform(t, T);
    CHECK(s.holds());
    CHECK(transform(s, -T) == t);
  }
}

TEST_CASE("replay of swap and divide steps") {
  Triple t = beauregard_triple();
  CHECK(swap_pr(swap_pr(t)) == t);
  RPoly h = Ur() + RPoly(3L);
  Triple scaled{t.P * h, t.Q * h, t.R * h};
  CHECK(replay(scaled, {CertStep::divide(h, DivideMode::All)}) == t);
  Triple qr{t.P, t.Q * h, t.R * h * h};
  CHECK(replay(qr, {CertStep::divide(h, DivideMode::QR)}) == t);
  Triple pq{t.P * h * h, t.Q * h, t.R};
  CHECK(replay(pq, {CertStep::divide(h, DivideMode::PQ), CertStep::relabel()}) == t);
  CHECK_THROWS_AS(divide_common(t, h, DivideMode::All), Error);
}

TEST_CASE("tuple and triple conversions") {
  Triple t = beauregard_triple();
  PythTuple x = triple_to_tuple(t);
  CHECK(x.holds());
  CHECK(x.in_space(2, 2));
  CHECK(tuple_to_triple(x) == t);
  PythTuple bad = x;
  bad.X[0] = bad.X[0] + RPoly(1L);
  CHECK_THROWS_AS(tuple_to_triple(bad), Error);

  PythTuple y = tuple_from_ABCD(beauregard_A(), beauregard_B(), beauregard_C(), RPoly(1L), true);
  Triple ty = tuple_to_triple(y);
  CHECK(ty == triple_from_factors(beauregard_A(), beauregard_B(), beauregard_C(), RPoly(2L)));
  CHECK_THROWS_AS(tuple_from_ABCD(U() * U(), V(), QPoly(1L), RPoly(1L), true), Error);
}

TEST_CASE("solve_univariate on small cases") {
  SUBCASE("zero Q") {
    auto f = solve_univariate({Ur() * Ur() + RPoly(1L), QPoly(), RPoly()});
    CHECK(f.B.is_zero());
    CHECK(f.D == Ur() * Ur() + RPoly(1L));
  }
  SUBCASE("linear factor") {
    QPoly A = U() + qc(I);
    auto f = solve_univariate(from_pair(A, QPoly(1L), RPoly(1L)));
    CHECK(from_pair(f.A, f.B, f.D) == from_pair(A, QPoly(1L), RPoly(1L)));
  }
  SUBCASE("P of higher degree than Q needs relabeling") {
    Triple t{Ur() * Ur() + RPoly(1L), QPoly(1L), Ur() * Ur() + RPoly(1L)};
    t = {t.P * t.P, to_qpoly(t.P), RPoly(1L)};
    auto f = solve_univariate(t);
    CHECK(from_pair(f.A, f.B, f.D) == t);
  }
}

TEST_CASE("solve_univariate reproduces random triples") {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 100; ++n) {
    Var var = n % 2 ? Var::U : Var::V;
    QPoly A = qc(random_nonzero_quaternion(rng));
    for (int k = rng() % 3; k > 0; --k) A = A * random_monic_linear(rng, var);
    QPoly B = qc(random_nonzero_quaternion(rng));
    for (int k = rng() % 3; k > 0; --k) B = random_monic_linear(rng, var) * B;
    Triple t = from_pair(A, B, RPoly(long(1 + rng() % 3)));
    auto f = solve_univariate(t);
    CHECK(from_pair(f.A, f.B, f.D) == t);
  }
}

TEST_CASE("split_bilinear finds both orders") {
  SUBCASE("left order") {
    QPoly Q = (V() + qc(K)) * (U() + qc(I));
    BilinearSplit s = split_bilinear(Q, norm(V() + qc(K)), norm(U() + qc(I)));
    CHECK(s.order == SplitOrder::Left);
    CHECK(s.A1 == V() + qc(K));
    CHECK(s.B == U() + qc(I));
    CHECK(s.D == FieldElement(1L));
  }
  SUBCASE("right order") {
    QPoly Q = (U() + qc(I)) * (V() + qc(J));
    BilinearSplit s = split_bilinear(Q, norm(V() + qc(J)), norm(U() + qc(I)));
    CHECK(s.order == SplitOrder::Right);
    CHECK(s.B * s.A1 == Q);
  }
  SUBCASE("constant") {
    BilinearSplit s = split_bilinear(qc(0, 0, 3, 0), RPoly(3L), RPoly(3L));
    CHECK(s.A1 == qc(0, 0, 3, 0));
    CHECK(s.B == QPoly(1L));
    CHECK(s.D == FieldElement(3L));
  }
  SUBCASE("no split") {
    QPoly Q = U() * V() + qc(I);
    CHECK_THROWS_AS(split_bilinear(Q, norm(Q), RPoly(1L)), Error);
  }
}

TEST_CASE("solve_bilinear reproduces products of linear factors") {
  std::mt19937_64 rng(13);
  for (int n = 0; n < 60; ++n) {
    QPoly Bu = random_monic_linear(rng, Var::U);
    QPoly Av = qc(random_nonzero_quaternion(rng)) * random_monic_linear(rng, Var::V);
    QPoly Q = n % 2 ? Av * Bu : Bu * Av;
    Triple t{norm(Av), Q, norm(Bu)};
    PairFactors f = solve_bilinear(t);
    Triple got = from_pair(f.A, f.B, f.D);
    CHECK((f.swapped ? swap_pr(got) : got) == t);
  }
}

TEST_CASE("solve_linear_in_v examples") {
  QPoly A = U() + qc(I), B = V() + qc(J), C = U() + qc(K);
  SUBCASE("plain") {
    Triple t = triple_from_factors(A, B, C, RPoly(1L));
    SolveCertificate cert = solve_linear_in_v(t);
    CHECK(verify_certificate(t, cert));
    CHECK(in_u(cert.A));
    CHECK(in_u(cert.C));
    CHECK(cert.D.is_constant());
  }
  SUBCASE("with a common divisor") {
    RPoly h = Ur() * Ur() + RPoly(2L);
    Triple base = triple_from_factors(A, B, C, RPoly(1L));
    Triple t{base.P * h, base.Q * h, base.R * h};
    SolveCertificate cert = solve_linear_in_v(t);
    CHECK(verify_certificate(t, cert));
    CHECK(cert.transforms.front().kind == StepKind::DivideCommon);
  }
  SUBCASE("factors fold back") {
    RPoly g = Ur() + RPoly(1L);
    Triple base = triple_from_factors(A, B, C, RPoly(1L));
    Triple t{base.P, base.Q * g, base.R * g * g};
    TripleFactors f = factor_linear_in_v(t);
    Triple got = triple_from_factors(f.A, f.B, f.C, f.D);
    CHECK((f.swapped ? swap_pr(got) : got) == t);
  }
}

TEST_CASE("solve_linear_in_v on random products") {
  std::mt19937_64 rng(17);
  for (int n = 0; n < 40; ++n) {
    QPoly A = random_monic_linear(rng, Var::U);
    QPoly B = random_monic_linear(rng, Var::V);
    if (n % 3 == 0) B = B * random_monic_linear(rng, Var::U);
    QPoly C = random_monic_linear(rng, Var::U);
    Triple t = triple_from_factors(A, B, C, RPoly(long(1 + n % 3)));
    if (n % 2) t = swap_pr(t);
    SolveCertificate cert = solve_linear_in_v(t);
    CHECK(verify_certificate(t, cert));
  }
}

TEST_CASE("solve_22 on the quartic tuple") {
  PythTuple x = triple_to_tuple(beauregard_triple());
  SolveCertificate cert = solve_22(x);
  CHECK(verify_certificate(tuple_to_triple(x), cert));
  CHECK(cert.backend == Backend::Exact);
  for (const auto& s : cert.transforms) {
    if (s.kind == StepKind::ShiftByT) CHECK(s.T.is_constant());
  }
  CHECK(cert.A.in_space(1, 1));
  CHECK(cert.B.in_space(1, 1));
  CHECK(cert.C.in_space(1, 1));
}

TEST_CASE("solve_22 degenerate tuples") {
  PythTuple zero;
  zero.X[4] = Ur() * Vr();
  zero.X[5] = Ur() * Vr();
  SolveCertificate cert = solve_22(zero);
  CHECK(verify_certificate(tuple_to_triple(zero), cert));
  CHECK(cert.B.is_zero());

  PythTuple neg = zero;
  neg.X[4] = -neg.X[4];
  CHECK(verify_certificate(tuple_to_triple(neg), solve_22(neg)));

  PythTuple big;
  big.X[4] = Ur() * Ur() * Ur();
  big.X[5] = big.X[4];
  CHECK_THROWS_AS(solve_22(big), Error);
}

TEST_CASE("solve_22 on random tuples") {
  std::mt19937_64 rng(19);
  for (int n = 0; n < 60; ++n) {
    PythTuple x = random_22_tuple(rng);
    if (n % 4 == 1) std::swap(x.X[0], x.X[1]);
    if (n % 4 == 2) x.X[4] = -x.X[4];
    if (n % 4 == 3) {
      for (auto& c : x.X) c = c.swapped_vars();
    }
    SolveCertificate cert = solve_22(x);
    CHECK(verify_certificate(tuple_to_triple(x), cert));
    CHECK(cert.A.in_space(1, 1));
    CHECK(cert.B.in_space(1, 1));
    CHECK(cert.C.in_space(1, 1));
  }
}

TEST_CASE("reducibility of polynomials linear in v") {
  auto r1 = is_reducible_linear_v((U() + qc(I)) * (V() + qc(J)));
  CHECK(r1.kind == Reducibility::Reducible);
  REQUIRE(r1.factors.size() == 2);
  CHECK(r1.factors[0] * r1.factors[1] == (U() + qc(I)) * (V() + qc(J)));

  CHECK(is_reducible_linear_v(to_qpoly(Ur() * Ur() + RPoly(1L)) * qc(J)).kind ==
        Reducibility::RealTimesConstant);
  CHECK(is_reducible_linear_v(U() * V() + qc(I)).kind == Reducibility::Irreducible);

  auto r2 = is_reducible_linear_v(to_qpoly(Ur() + RPoly(2L)) * (V() + qc(I)));
  CHECK(r2.kind == Reducibility::Reducible);
  CHECK_THROWS_AS(is_reducible_linear_v(V() * V()), Error);
}

TEST_CASE("six linear factors multiply to (u^2 + 1) times the quartic") {
  QPoly prod(1L);
  for (const auto& f : six_linear_factors()) prod = prod * f;
  CHECK(prod == to_qpoly(Ur() * Ur() + RPoly(1L)) * beauregard_Q());
}

TEST_CASE("solve_22 with generic bilinear middle factor") {
  std::mt19937_64 rng(23);
  for (int n = 0; n < 100; ++n) {
    QPoly A = random_qpoly(rng, 1, 0);
    QPoly B = random_qpoly(rng, 1, 1);
    QPoly C = random_qpoly(rng, 0, 1);
    if (A.is_zero() || B.is_zero() || C.is_zero()) continue;
    PythTuple x = tuple_from_ABCD(A, B, C, RPoly(1L), true);
    SolveCertificate cert;
    REQUIRE_NOTHROW(cert = solve_22(x));
    CHECK(verify_certificate(tuple_to_triple(x), cert));
  }
}
