#pragma once

// Shared polynomial fixtures for the unit and acceptance tests.

#include <random>

#include "pythsix/poly.hpp"

namespace fx {

using namespace pythsix;

inline FieldElement s2() { return FieldElement::sqrt_of_integer(2); }
inline FieldElement r2() { return s2().inverse(); }  // 1/sqrt(2)

inline QPoly U() { return QPoly::u(); }
inline QPoly V() { return QPoly::v(); }
inline RPoly Ur() { return RPoly::u(); }
inline RPoly Vr() { return RPoly::v(); }

inline QPoly qc(const Quaternion& q) { return QPoly(q); }
inline QPoly qc(long w, long x, long y, long z) { return QPoly(Quaternion(w, x, y, z)); }

const Quaternion I = Quaternion::i();
const Quaternion J = Quaternion::j();
const Quaternion K = Quaternion::k();

/// (w + x i + y j + z k) / sqrt(2).
inline Quaternion over_s2(long w, long x, long y, long z) {
  return Quaternion(w, x, y, z) * r2();
}

// Beauregard's irreducible quartic and the real factors of its norm.
inline QPoly beauregard_Q() {
  QPoly u = U(), v = V();
  return u * u * v * v - QPoly(1L) + (u * u - v * v) * qc(I) + QPoly(2L) * u * v * qc(J);
}
inline RPoly quad_minus(Var var) {
  RPoly x = RPoly::variable(var);
  return x * x - RPoly(s2()) * x + RPoly(1L);
}
inline RPoly quad_plus(Var var) {
  RPoly x = RPoly::variable(var);
  return x * x + RPoly(s2()) * x + RPoly(1L);
}
inline RPoly beauregard_P() { return quad_minus(Var::U) * quad_minus(Var::V); }
inline RPoly beauregard_R() { return quad_plus(Var::U) * quad_plus(Var::V); }

// Factors turning the quartic into (|B|^2, ABC, |AC|^2) after the shift by j.
inline QPoly beauregard_A() { return qc(Quaternion(1L, 0L, -1L, 0L)) * (U() + qc(over_s2(0, -1, -1, 0))); }
inline QPoly beauregard_B() { return (V() + qc(over_s2(1, 0, 0, 1))) * (U() + qc(over_s2(1, 1, 0, 0))); }
inline QPoly beauregard_C() { return V() + qc(over_s2(0, 0, -1, -1)); }

// Six linear factors whose product is (u^2 + 1) times the quartic.
inline std::vector<QPoly> six_linear_factors() {
  return {U() + qc(over_s2(0, 0, -1, -1)), V() + qc(over_s2(1, -1, 0, 0)),
          U() + qc(over_s2(1, 0, 0, 1)),   U() + qc(over_s2(-1, 0, 0, 1)),
          V() + qc(over_s2(-1, 1, 0, 0)),  U() + qc(over_s2(0, 0, 1, -1))};
}

// --- random generators ----------------------------------------------------------

inline Quaternion random_quaternion(std::mt19937_64& rng, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<long> d(lo, hi);
  return {d(rng), d(rng), d(rng), d(rng)};
}

inline Quaternion random_nonzero_quaternion(std::mt19937_64& rng, int lo = -3, int hi = 3) {
  for (;;) {
    Quaternion q = random_quaternion(rng, lo, hi);
    if (!q.is_zero()) return q;
  }
}

/// Random element of H_{mn} with small integer coordinates.
inline QPoly random_qpoly(std::mt19937_64& rng, int m, int n, int lo = -3, int hi = 3) {
  QPoly out;
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= n; ++j) out.set({i, j}, random_quaternion(rng, lo, hi));
  }
  return out;
}

inline RPoly random_rpoly(std::mt19937_64& rng, int m, int n, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<long> d(lo, hi);
  RPoly out;
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= n; ++j) out.set({i, j}, FieldElement(d(rng)));
  }
  return out;
}

/// Random exact element of Q(sqrt 2, sqrt 3).
inline FieldElement random_field_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  FieldElement out(num(rng), den(rng));
  out += FieldElement(num(rng), den(rng)) * FieldElement::sqrt_of_integer(2);
  out += FieldElement(num(rng), den(rng)) * FieldElement::sqrt_of_integer(3);
  out += FieldElement(num(rng), den(rng)) * FieldElement::sqrt_of_integer(6);
  return out;
}

/// Monic u + q with q a small random quaternion.
inline QPoly random_monic_linear(std::mt19937_64& rng, Var var) {
  return QPoly::variable(var) + qc(random_quaternion(rng));
}

}  // namespace fx
