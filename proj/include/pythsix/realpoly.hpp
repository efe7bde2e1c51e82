#pragma once

// Real-polynomial support: bivariate gcd for common-divisor cancellation and
// factorization of univariate real polynomials into factors of degree <= 2.

#include <complex>
#include <vector>

#include "pythsix/poly.hpp"

namespace pythsix {

/// Dense univariate polynomial c[0] + c[1] x + ... over the exact field.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<FieldElement> coeffs);
  UPoly(FieldElement c);  // NOLINT(google-explicit-constructor)

  static UPoly x();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_exact() const;
  const std::vector<FieldElement>& coeffs() const { return c_; }
  FieldElement operator[](int n) const;
  const FieldElement& lead() const { return c_.back(); }

  UPoly monic() const;
  UPoly derivative() const;
  FieldElement eval(const FieldElement& x0) const;
  UPoly conjugate(std::uint32_t prime) const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return (a - b).is_zero(); }

 private:
  void trim();
  std::vector<FieldElement> c_;
};

struct UDivMod {
  UPoly quotient;
  UPoly remainder;
};

UDivMod divmod(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

/// Throws InvariantViolated when r involves the other variable.
UPoly to_upoly(const RPoly& r, Var var);
RPoly to_rpoly(const UPoly& p, Var var);

/// Monic gcd (grlex-leading coefficient 1) of two bivariate real polynomials,
/// via content/primitive-part and a primitive pseudo-remainder sequence in v
/// over K[u]. gcd(0, 0) = 0.
RPoly gcd(const RPoly& a, const RPoly& b);

/// Monic real gcd of the four components of q together with r.
RPoly gcd_with_components(const QPoly& q, const RPoly& r);

struct RealFactor {
  RPoly factor;  // monic, degree 1 or 2; degree-2 factors have negative discriminant
  int multiplicity = 1;
};

struct RealFactorization {
  std::vector<RealFactor> factors;
  FieldElement scale;
  Backend backend = Backend::Exact;
  Var var = Var::U;

  /// scale * prod factor^multiplicity.
  RPoly product() const;
};

/// Complete factorization over the reals into monic linear and irreducible
/// quadratic factors. Exact when every factor lives in a tower of depth <= 4;
/// otherwise the float backend is used and `backend` says so.
RealFactorization factor_real_univariate(const RPoly& r);

/// Numeric roots of a polynomial with double coefficients (low to high).
std::vector<std::complex<double>> numeric_roots(const std::vector<double>& coeffs);

/// Best rational approximation p/q with q <= max_den within tol*max(1,|x|).
std::optional<Rational> rational_reconstruct(double x, double tol = 1e-9,
                                             long max_den = 10'000'000);

}  // namespace pythsix
