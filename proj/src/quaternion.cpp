#include "pythsix/quaternion.hpp"

#include <ostream>

namespace pythsix {

const FieldElement& Quaternion::operator[](int n) const {
  switch (n) {
    case 0: return w;
    case 1: return x;
    case 2: return y;
    default: return z;
  }
}

FieldElement& Quaternion::operator[](int n) {
  switch (n) {
    case 0: return w;
    case 1: return x;
    case 2: return y;
    default: return z;
  }
}

Quaternion Quaternion::inverse() const {
  FieldElement n = norm();
  if (n.is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero quaternion");
  return conj() * n.inverse();
}

Quaternion& Quaternion::operator+=(const Quaternion& r) {
  w += r.w;
  x += r.x;
  y += r.y;
  z += r.z;
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& r) {
  w -= r.w;
  x -= r.x;
  y -= r.y;
  z -= r.z;
  return *this;
}

Quaternion& Quaternion::operator*=(const FieldElement& s) {
  w *= s;
  x *= s;
  y *= s;
  z *= s;
  return *this;
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  if (a.is_real()) return b * a.w;
  if (b.is_real()) return a * b.w;
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

std::string Quaternion::to_string() const {
  static constexpr const char* kUnits[] = {"", "i", "j", "k"};
  std::string out;
  for (int n = 0; n < 4; ++n) {
    const FieldElement& c = (*this)[n];
    if (c.is_zero()) continue;
    std::string text = c.to_string();
    bool compound = text.find(' ') != std::string::npos;
    if (!out.empty()) {
      if (!compound && text[0] == '-') {
        out += " - ";
        text.erase(0, 1);
      } else {
        out += " + ";
      }
    }
    if (n == 0) {
      out += text;
    } else if (text == "1") {
      out += kUnits[n];
    } else if (text == "-1") {
      out += std::string("-") + kUnits[n];
    } else {
      out += (compound ? "(" + text + ")" : text) + "*" + kUnits[n];
    }
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << q.to_string(); }

}  // namespace pythsix
