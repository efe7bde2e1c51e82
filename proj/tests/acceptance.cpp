// Acceptance run: one PASS/FAIL line per criterion; exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "fixtures.hpp"
#include "pythsix/errors.hpp"
#include "pythsix/realpoly.hpp"
#include "pythsix/solver.hpp"
#include "pythsix/surface.hpp"

using namespace pythsix;
using namespace fx;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

// Sum of X_n^2 for n < 5 minus X6^2, expanded term by term.
RPoly pythagorean_residual(const PythTuple& x) {
  RPoly lhs;
  for (int n = 0; n < 5; ++n) lhs = lhs + x.X[n] * x.X[n];
  return lhs - x.X[5] * x.X[5];
}

Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  for (;;) {
    double a = g(rng), b = g(rng), c = g(rng);
    double n = std::sqrt(a * a + b * b + c * c);
    if (n > 1e-6) return {a / n, b / n, c / n};
  }
}

double dist(const Vec3& a, const Vec3& b) { return std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]); }

// Projection of the unit quaternion p q from the pole 1, evaluated in long double
// with the denominator |w| - re(w) written as |im|^2 / (|w| + re(w)) when re > 0.
Vec3 stereo_of_product(const Vec3& p, const Vec3& q) {
  long double px = p[0], py = p[1], pz = p[2], qx = q[0], qy = q[1], qz = q[2];
  long double re = -(px * qx + py * qy + pz * qz);
  long double ix = py * qz - pz * qy, iy = pz * qx - px * qz, iz = px * qy - py * qx;
  long double im2 = ix * ix + iy * iy + iz * iz;
  long double w = std::sqrt(re * re + im2);
  long double den = re > 0 ? im2 / (w + re) : w - re;
  return {double(ix / den), double(iy / den), double(iz / den)};
}

Outcome criterion1() {
  RPoly lhs = norm(beauregard_Q());
  RPoly rhs = quad_minus(Var::U) * quad_minus(Var::V) * quad_plus(Var::U) * quad_plus(Var::V);
  bool exact = lhs.is_exact() && rhs.is_exact();
  return {exact && lhs == rhs, "norm of the quartic equals the four real quadratics"};
}

Outcome criterion2() {
  Triple t = transform({beauregard_P(), beauregard_Q(), beauregard_R()}, qc(J));
  QPoly A = beauregard_A(), B = beauregard_B(), C = beauregard_C();
  bool ok = t.R == norm(B) && t.Q == A * B * C && t.P == norm(A * C);
  return {ok, "shift by j gives (|B|^2, ABC, |AC|^2)"};
}

Outcome criterion3() {
  QPoly prod(1L);
  for (const auto& f : six_linear_factors()) prod = prod * f;
  QPoly expect = to_qpoly(Ur() * Ur() + RPoly(1L)) * beauregard_Q();
  return {prod.is_exact() && prod == expect, "six linear factors multiply to (u^2+1) Q"};
}

Outcome criterion4() {
  std::mt19937_64 rng(2024);
  int ok = 0;
  for (int n = 0; n < 100; ++n) {
    QPoly A, B, C;
    do A = random_qpoly(rng, 1, 0); while (A.is_zero());
    do B = random_qpoly(rng, 1, 1); while (B.is_zero());
    do C = random_qpoly(rng, 0, 1); while (C.is_zero());
    PythTuple x = tuple_from_ABCD(A, B, C, RPoly(1L));
    if (!pythagorean_residual(x).is_zero()) continue;
    try {
      SolveCertificate cert = solve_22(x);
      Triple start{x.X[5] - x.X[4], from_components({x.X[0], x.X[1], x.X[2], x.X[3]}), x.X[5] + x.X[4]};
      Triple end = replay(start, cert.transforms);
      Triple want{norm(cert.A * cert.C) * cert.D, cert.A * cert.B * cert.C * cert.D, norm(cert.B) * cert.D};
      ok += cert.backend == Backend::Exact && end == want;
    } catch (const Error&) {
    }
  }
  return {ok == 100, std::to_string(ok) + "/100 tuples solved with exact replay"};
}

Outcome criterion5() {
  std::mt19937_64 rng(5);
  int uni = 0;
  for (int n = 0; n < 100; ++n) {
    Var var = n % 2 ? Var::U : Var::V;
    QPoly A = qc(random_nonzero_quaternion(rng));
    for (int k = int(rng() % 3); k > 0; --k) A = A * random_monic_linear(rng, var);
    QPoly B = qc(random_nonzero_quaternion(rng));
    for (int k = int(rng() % 3); k > 0; --k) B = random_monic_linear(rng, var) * B;
    RPoly D(long(1 + rng() % 4));
    Triple t{norm(A) * D, A * B * D, norm(B) * D};
    try {
      UnivariateFactors f = solve_univariate(t);
      uni += norm(f.A) * f.D == t.P && f.A * f.B * f.D == t.Q && norm(f.B) * f.D == t.R;
    } catch (const Error&) {
    }
  }
  int split = 0;
  for (int n = 0; n < 100; ++n) {
    QPoly Av = qc(random_nonzero_quaternion(rng)) * random_monic_linear(rng, Var::V);
    QPoly Bu = qc(random_nonzero_quaternion(rng)) * random_monic_linear(rng, Var::U);
    QPoly Q = n % 2 ? Av * Bu : Bu * Av;
    RPoly Pp = norm(Av), R = norm(Bu);
    try {
      BilinearSplit s = split_bilinear(Q, Pp, R);
      QPoly prod = s.order == SplitOrder::Left ? s.A1 * s.B : s.B * s.A1;
      split += prod == Q && s.A1.degu() <= 0 && s.B.degv() <= 0 && norm(s.B) * RPoly(s.D) == R &&
               norm(s.A1) == Pp * RPoly(s.D);
    } catch (const Error&) {
    }
  }
  return {uni == 100 && split == 100,
          "univariate " + std::to_string(uni) + "/100, bilinear split " + std::to_string(split) + "/100"};
}

Outcome criterion6() {
  std::mt19937_64 rng(6);
  int ok = 0;
  for (int n = 0; n < 500; ++n) {
    QPoly A = random_qpoly(rng, 1, 1, -2, 2), B = random_qpoly(rng, 1, 1, -2, 2);
    Triple t{norm(A), A * B, norm(B)};
    QPoly T = random_qpoly(rng, 1, 1, -2, 2);
    QPoly Tc = conj(T);
    // Expanded independently of transform().
    QPoly Pn = to_qpoly(t.P) - T * conj(t.Q) - t.Q * Tc + T * t.R * Tc;
    QPoly Qn = t.Q - T * t.R;
    Triple s;
    try {
      s = transform(t, T);
    } catch (const Error&) {
      continue;
    }
    ok += is_real(Pn) && s.P == as_real(Pn) && s.Q == Qn && s.R == t.R && norm(s.Q) == s.P * s.R;
  }
  return {ok == 500, std::to_string(ok) + "/500 transformed triples keep Q conj(Q) = P R"};
}

Outcome criterion7() {
  std::mt19937_64 rng(7);
  double worst = 0;
  int used = 0;
  for (int n = 0; n < 10000; ++n) {
    Vec3 p = random_unit(rng), q = random_unit(rng);
    if (std::hypot(p[0] + q[0], p[1] + q[1], p[2] + q[2]) < 1e-4) continue;
    worst = std::max(worst, dist(clifford_point(p, q), stereo_of_product(p, q)));
    ++used;
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "max deviation %.3g over %d pairs", worst, used);
  return {worst <= 1e-12, buf};
}

Outcome criterion8() {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> d(-1, 1), r(0.5, 2), ang(0.3, 2.8);
  int good = 0, caught = 0, total = 0;
  auto perturbed_fails = [](SurfaceSample s) {
    s.points[s.index(17, 29)][0] += 1e-3;
    return !check_iso_circles(s, 1e-9).all_cocircular();
  };
  for (int n = 0; n < 5; ++n) {
    Circle3D a{{d(rng), d(rng), d(rng)}, r(rng), random_unit(rng)};
    Circle3D b{{d(rng), d(rng), d(rng)}, r(rng), random_unit(rng)};
    SurfaceSample e = gen_euclidean(a, b, 64, 64);
    good += check_iso_circles(e, 1e-9).all_cocircular();
    caught += perturbed_fails(e);
    CircleS2 p{random_unit(rng), ang(rng)}, q{random_unit(rng), ang(rng)};
    SurfaceSample c = gen_clifford(p, q, 64, 64);
    good += check_iso_circles(c, 1e-9).all_cocircular();
    caught += perturbed_fails(c);
    total += 2;
  }
  return {good == total && caught == total, std::to_string(good) + "/" + std::to_string(total) +
                                                " surfaces pass, " + std::to_string(caught) + "/" +
                                                std::to_string(total) + " perturbed samples rejected"};
}

Outcome criterion9() {
  DarbouxCyclide torus = DarbouxCyclide::torus(2, 1);
  SurfaceSample t = sample_cyclide(torus, {{-3.75, -3.75, -1.25}, {3.75, 3.75, 1.25}}, 48);
  double worst_q = 0;
  for (const auto& p : t.points) {
    // (t + R^2 - r^2)^2 - 4 R^2 (x^2 + y^2) with R = 2, r = 1.
    double s = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
    worst_q = std::max(worst_q, std::fabs((s + 3) * (s + 3) - 16 * (p[0] * p[0] + p[1] * p[1])));
  }
  SurfaceSample s = sample_cyclide(DarbouxCyclide::sphere({0, 0, 0}, 1), {{-1.25, -1.25, -1.25}, {1.25, 1.25, 1.25}}, 48);
  double worst_r = 0;
  for (const auto& p : s.points) worst_r = std::max(worst_r, std::fabs(std::hypot(p[0], p[1], p[2]) - 1));
  char buf[128];
  std::snprintf(buf, sizeof buf, "torus max |Q| %.3g over %zu points, sphere max ||p|-1| %.3g over %zu points", worst_q,
                t.points.size(), worst_r, s.points.size());
  return {worst_q <= 1e-6 && worst_r <= 1e-9 && !t.points.empty() && !s.points.empty(), buf};
}

// The norm of a product of nonconstant factors in H[u] and H[v] separates as
// N1(u) N2(v), so its coefficient matrix has rank one.
bool norm_separates(const QPoly& Q) {
  RPoly N = norm(Q);
  int m = N.degu(), n = N.degv();
  std::vector<std::vector<FieldElement>> M(m + 1, std::vector<FieldElement>(n + 1));
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= n; ++j) M[i][j] = N.coeff(i, j);
  }
  for (int a = 0; a <= m; ++a) {
    for (int b = a + 1; b <= m; ++b) {
      for (int c = 0; c <= n; ++c) {
        for (int d = c + 1; d <= n; ++d) {
          if (!(M[a][c] * M[b][d] - M[a][d] * M[b][c]).is_zero()) return false;
        }
      }
    }
  }
  return true;
}

Outcome criterion10() {
  QPoly red = (U() + qc(I)) * (V() + qc(J));
  ReducibilityResult r1 = is_reducible_linear_v(red);
  bool ok1 = r1.kind == Reducibility::Reducible && r1.factors.size() == 2 && r1.factors[0] * r1.factors[1] == red &&
             !r1.factors[0].is_constant() && !r1.factors[1].is_constant() && norm_separates(red);
  bool ok2 = is_reducible_linear_v(to_qpoly(Ur() * Ur() + RPoly(1L)) * qc(J)).kind == Reducibility::RealTimesConstant;
  QPoly irr = U() * V() + qc(I);
  bool ok3 = is_reducible_linear_v(irr).kind == Reducibility::Irreducible && !norm_separates(irr);
  // Every split attempt must fail for the irreducible fixture.
  RPoly N = norm(irr);
  for (const RPoly& R : {RPoly(1L), N, Ur() * Ur(), Vr() * Vr()}) {
    auto P = exact_quotient(N, R);
    if (!P) continue;
    try {
      split_bilinear(irr, *P, R);
      ok3 = false;
    } catch (const Error& e) {
      ok3 = ok3 && e.kind() == ErrorKind::NoSplit;
    }
  }
  return {ok1 && ok2 && ok3, std::string("reducible ") + (ok1 ? "ok" : "wrong") + ", real times constant " +
                                 (ok2 ? "ok" : "wrong") + ", irreducible " + (ok3 ? "ok" : "wrong")};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double budget;  // seconds, 0 for none
  };
  const std::vector<Criterion> criteria{
      {1, "quartic norm identity", criterion1, 1.0},
      {2, "shift by j factors the quartic", criterion2, 0},
      {3, "six linear factors", criterion3, 0},
      {4, "solver round-trip", criterion4, 30.0},
      {5, "lemma-level oracles", criterion5, 0},
      {6, "transformation invariance", criterion6, 0},
      {7, "Clifford/stereographic identity", criterion7, 0},
      {8, "iso-curves are circles", criterion8, 0},
      {9, "cyclide sampling", criterion9, 0},
      {10, "reducibility classification", criterion10, 0},
  };
  bool all = true;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = o.pass && (c.budget == 0 || secs < c.budget);
    all = all && pass;
    std::printf("%s %2d %s: %s (%.2f s)\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
  }
  return all ? 0 : 1;
}
