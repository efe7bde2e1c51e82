#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "pythsix/scalar.hpp"

namespace pythsix {

/// w + x*i + y*j + z*k over the exact field (or its float backend).
struct Quaternion {
  FieldElement w, x, y, z;

  Quaternion() = default;
  Quaternion(FieldElement w_) : w(std::move(w_)) {}  // NOLINT(google-explicit-constructor)
  Quaternion(long w_) : w(w_) {}                     // NOLINT(google-explicit-constructor)
  Quaternion(FieldElement w_, FieldElement x_, FieldElement y_, FieldElement z_)
      : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  static Quaternion i() { return {0L, 1L, 0L, 0L}; }
  static Quaternion j() { return {0L, 0L, 1L, 0L}; }
  static Quaternion k() { return {0L, 0L, 0L, 1L}; }

  const FieldElement& operator[](int n) const;
  FieldElement& operator[](int n);

  bool is_zero() const { return w.is_zero() && x.is_zero() && y.is_zero() && z.is_zero(); }
  bool is_real() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
  bool is_exact() const { return w.is_exact() && x.is_exact() && y.is_exact() && z.is_exact(); }

  Quaternion conj() const { return {w, -x, -y, -z}; }
  /// q * conj(q) = w^2 + x^2 + y^2 + z^2.
  FieldElement norm() const { return w * w + x * x + y * y + z * z; }
  Quaternion inverse() const;

  std::array<double, 4> to_double() const {
    return {w.to_double(), x.to_double(), y.to_double(), z.to_double()};
  }
  std::string to_string() const;

  Quaternion operator-() const { return {-w, -x, -y, -z}; }
  Quaternion& operator+=(const Quaternion& r);
  Quaternion& operator-=(const Quaternion& r);
  Quaternion& operator*=(const FieldElement& s);

  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator*(Quaternion a, const FieldElement& s) { return a *= s; }
  friend Quaternion operator*(const FieldElement& s, Quaternion a) { return a *= s; }
  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace pythsix
