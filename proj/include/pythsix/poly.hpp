#pragma once

// Sparse polynomials in two commuting variables u, v. The variables commute
// with the coefficients, so (q u^a v^b)(r u^c v^d) = (q r) u^(a+c) v^(b+d)
// even for quaternion coefficients.

#include <algorithm>
#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "pythsix/quaternion.hpp"

namespace pythsix {

enum class Var { U, V };

inline Var other(Var v) { return v == Var::U ? Var::V : Var::U; }

/// Degree of the zero polynomial.
inline constexpr int kZeroDegree = -1;

struct Monomial {
  int u = 0;
  int v = 0;

  int exponent(Var var) const { return var == Var::U ? u : v; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend Monomial operator+(Monomial a, Monomial b) { return {a.u + b.u, a.v + b.v}; }
};

/// Graded lexicographic order with u > v.
inline bool grlex_less(const Monomial& a, const Monomial& b) {
  if (a.u + a.v != b.u + b.v) return a.u + a.v < b.u + b.v;
  return a.u < b.u;
}

template <class C>
class Poly {
 public:
  using Coeff = C;
  using Map = std::map<Monomial, C>;

  Poly() = default;
  Poly(C c) { set({0, 0}, std::move(c)); }  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(C(c)) {}              // NOLINT(google-explicit-constructor)

  static Poly monomial(C c, int u_exp, int v_exp) {
    Poly p;
    p.set({u_exp, v_exp}, std::move(c));
    return p;
  }
  static Poly u() { return monomial(C(1L), 1, 0); }
  static Poly v() { return monomial(C(1L), 0, 1); }
  static Poly variable(Var var) { return var == Var::U ? u() : v(); }

  const Map& coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  C coeff(Monomial m) const {
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? C() : it->second;
  }
  C coeff(int u_exp, int v_exp) const { return coeff(Monomial{u_exp, v_exp}); }

  /// Sets a coefficient; zero values erase the monomial (canonical form).
  void set(Monomial m, C c) {
    if (c.is_zero()) {
      coeffs_.erase(m);
    } else {
      coeffs_[m] = std::move(c);
    }
  }
  void add_to(Monomial m, const C& c) {
    auto it = coeffs_.find(m);
    if (it == coeffs_.end()) {
      if (!c.is_zero()) coeffs_.emplace(m, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const {
    return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == Monomial{0, 0});
  }

  int degu() const { return deg(Var::U); }
  int degv() const { return deg(Var::V); }
  int deg(Var var) const {
    int d = kZeroDegree;
    for (const auto& [m, c] : coeffs_) d = std::max(d, m.exponent(var));
    return d;
  }
  int total_degree() const {
    int d = kZeroDegree;
    for (const auto& [m, c] : coeffs_) d = std::max(d, m.u + m.v);
    return d;
  }
  /// Membership in the space of degree <= m in u and <= n in v.
  bool in_space(int m, int n) const { return degu() <= m && degv() <= n; }

  /// Coefficient of var^k, as a polynomial in the other variable.
  Poly coeff_in(Var var, int k) const {
    Poly out;
    for (const auto& [m, c] : coeffs_) {
      if (m.exponent(var) != k) continue;
      Monomial rest = var == Var::U ? Monomial{0, m.v} : Monomial{m.u, 0};
      out.coeffs_.emplace(rest, c);
    }
    return out;
  }

  Monomial leading_monomial() const {
    Monomial best{};
    bool first = true;
    for (const auto& [m, c] : coeffs_) {
      if (first || grlex_less(best, m)) best = m;
      first = false;
    }
    return best;
  }
  C leading_coefficient() const { return is_zero() ? C() : coeff(leading_monomial()); }

  Poly swapped_vars() const {
    Poly out;
    for (const auto& [m, c] : coeffs_) out.coeffs_.emplace(Monomial{m.v, m.u}, c);
    return out;
  }

  bool is_exact() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const auto& kv) { return kv.second.is_exact(); });
  }

  template <class F>
  Poly map_coeffs(F&& f) const {
    Poly out;
    for (const auto& [m, c] : coeffs_) out.set(m, f(c));
    return out;
  }

  Poly operator-() const {
    Poly out = *this;
    for (auto& [m, c] : out.coeffs_) c = -c;
    return out;
  }
  Poly& operator+=(const Poly& r) {
    for (const auto& [m, c] : r.coeffs_) add_to(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& r) {
    for (const auto& [m, c] : r.coeffs_) add_to(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a.coeffs_) {
      for (const auto& [mb, cb] : b.coeffs_) out.add_to(ma + mb, ca * cb);
    }
    return out;
  }
  Poly& operator*=(const Poly& r) { return *this = *this * r; }

  friend bool operator==(const Poly& a, const Poly& b) {
    // Maps are canonical for exact coefficients; compare by difference so the
    // approximate backend uses its tolerance.
    if (a.is_exact() && b.is_exact()) return a.coeffs_ == b.coeffs_;
    return (a - b).is_zero();
  }

 private:
  Map coeffs_;
};

using RPoly = Poly<FieldElement>;
using QPoly = Poly<Quaternion>;

// --- conversions ------------------------------------------------------------

QPoly to_qpoly(const RPoly& r);
/// Component n (0 = real, 1..3 = i, j, k) of a quaternion polynomial.
RPoly component(const QPoly& q, int n);
QPoly from_components(const std::array<RPoly, 4>& x);
/// Throws NonRealNorm when q has a nonzero imaginary part.
RPoly as_real(const QPoly& q);
bool is_real(const QPoly& q);

QPoly operator*(const QPoly& q, const RPoly& r);
QPoly operator*(const RPoly& r, const QPoly& q);

// --- algebra ------------------------------------------------------------------

QPoly conj(const QPoly& q);
/// q * conj(q); asserts the result is real.
RPoly norm(const QPoly& q);

/// Substitution u = u0, v = v0.
Quaternion eval(const QPoly& q, const FieldElement& u0, const FieldElement& v0);
FieldElement eval(const RPoly& r, const FieldElement& u0, const FieldElement& v0);
std::array<double, 4> eval_float(const QPoly& q, double u0, double v0);
double eval_float(const RPoly& r, double u0, double v0);

struct QDivMod {
  QPoly quotient;
  QPoly remainder;
};

/// Componentwise division with remainder: q = T * r + rem, deg_var(rem) < deg_var(r).
/// The leading coefficient of r in `var` must be a nonzero constant.
QDivMod divmod_by_real(const QPoly& q, const RPoly& r, Var var);

/// q = f * g + rem (left) or q = g * f + rem (right) with deg_var(rem) < deg_var(f).
/// Throws LeadingCoefficientNotInvertible if f's leading coefficient in var is
/// not a constant quaternion.
QDivMod left_divmod(const QPoly& q, const QPoly& f, Var var);
QDivMod right_divmod(const QPoly& q, const QPoly& f, Var var);

/// Exact division g with q = f * g; nullopt when the remainder is nonzero. The
/// division variable is u if f involves u, else v.
std::optional<QPoly> left_divide(const QPoly& q, const QPoly& f);
std::optional<QPoly> right_divide(const QPoly& q, const QPoly& f);

/// Exact quotient by a real polynomial, or nullopt if it does not divide.
std::optional<RPoly> exact_quotient(const RPoly& a, const RPoly& b);
std::optional<QPoly> exact_quotient(const QPoly& a, const RPoly& b);

/// Scales so the grlex-leading coefficient is 1.
RPoly make_monic(const RPoly& r);

std::string to_string(const RPoly& r);
std::string to_string(const QPoly& q);

}  // namespace pythsix
