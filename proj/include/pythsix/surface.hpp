#pragma once

// Double-precision geometry for the three families of doubly circled surfaces:
// translational surfaces of circles in R^3, Clifford translational surfaces,
// and Darboux cyclides. Also stereographic and inversion maps and a numerical
// checker for circular iso-curves.

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "pythsix/solver.hpp"

namespace pythsix {

using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;  // quaternion w + x i + y j + z k

struct Circle3D {
  Vec3 center{};
  double radius = 1;
  Vec3 normal{0, 0, 1};

  /// Throws ConstraintViolated unless radius > 0 and |normal| = 1.
  void validate() const;
  /// Point at angle theta, measured from a fixed in-plane basis.
  Vec3 point(double theta) const;
};

struct CircleS2 {
  Vec3 axis{0, 0, 1};
  double angular_radius = 1;

  void validate() const;
  Vec3 point(double theta) const;
};

/// Q(x, y, z, t) of total degree <= 2, evaluated at t = x^2 + y^2 + z^2.
struct DarbouxCyclide {
  struct Term {
    std::array<int, 4> exponents{};  // x, y, z, t
    double coeff = 0;
  };
  std::vector<Term> terms;

  int degree() const;
  double scale() const;  // largest |coefficient|
  /// Throws ConstraintViolated unless the degree is 1 or 2.
  void validate() const;

  static DarbouxCyclide sphere(const Vec3& center, double radius);
  /// Torus of revolution about the z axis with radii big > small > 0.
  static DarbouxCyclide torus(double big, double small);
};

enum class Family { E, C, D, Phi };

/// Grid samples; point (i, j) sits at index i * nv + j. Cyclide samples are
/// point clouds with empty parameter lists and no iso-curves.
struct SurfaceSample {
  Family family = Family::E;
  std::size_t nu = 0, nv = 0;
  std::vector<double> us, vs;
  std::vector<Vec3> points;
  std::vector<bool> valid;  // false where a sample was dropped
  std::vector<std::vector<std::size_t>> iso_u;  // curve i: u = us[i], v varies
  std::vector<std::vector<std::size_t>> iso_v;  // curve j: v = vs[j], u varies

  std::size_t index(std::size_t i, std::size_t j) const { return i * nv + j; }
};

struct BoundingBox {
  Vec3 lo{-1, -1, -1};
  Vec3 hi{1, 1, 1};
};

// --- generators ------------------------------------------------------------------

/// p(u) + q(v) with p on alpha and q on beta.
SurfaceSample gen_euclidean(const Circle3D& alpha, const Circle3D& beta, std::size_t nu, std::size_t nv);
/// beta shrunk to the point c: nv identical copies of alpha + c.
SurfaceSample gen_euclidean(const Circle3D& alpha, const Vec3& c, std::size_t nu, std::size_t nv);

/// 2 (p x q) / |p + q|^2 with p on alpha, q on beta. Pairs with |p + q| < 1e-8
/// are dropped; throws AntipodalDegeneracy when an iso-curve keeps < 2 points.
SurfaceSample gen_clifford(const CircleS2& alpha, const CircleS2& beta, std::size_t nu, std::size_t nv);
Vec3 clifford_point(const Vec3& p, const Vec3& q);

double eval_cyclide(const DarbouxCyclide& c, const Vec3& point);
/// Zero set by bisection along sign-changing grid edges. Throws EmptyIntersection.
SurfaceSample sample_cyclide(const DarbouxCyclide& c, const BoundingBox& box, std::size_t resolution);

/// conj(A)^-1 B conj(C)^-1 on [u0, u1] x [v0, v1], read in Im H = R^3. Throws
/// ConstraintViolated when a sample has a real part above 1e-9.
SurfaceSample sample_phi(const QPoly& A, const QPoly& B, const QPoly& C, std::array<double, 2> urange,
                         std::array<double, 2> vrange, std::size_t nu, std::size_t nv);

// --- maps ------------------------------------------------------------------------

Vec4 qmul(const Vec4& a, const Vec4& b);
Vec4 qconj(const Vec4& a);
/// Throws PoleSingularity for (near) zero input.
Vec4 qinverse(const Vec4& a);

/// Im(w) / (1 - Re(w)) for unit w; other w are normalized first. Throws
/// PoleSingularity at the positive real axis.
Vec3 stereo_from_one(const Vec4& w);

/// (X1 + i X2 + j X3 + k X4) / (X6 - X5) at (u0, v0). Throws PoleSingularity.
Vec4 stereo_project_tuple(const PythTuple& x, double u0, double v0);
/// conj(A)^-1 B conj(C)^-1 at (u0, v0). Throws PoleSingularity.
Vec4 phi_eval(const QPoly& A, const QPoly& B, const QPoly& C, double u0, double v0);

/// center + radius^2 (p - center) / |p - center|^2. Throws CenterSingularity.
Vec3 invert(const Vec3& point, const Vec3& center, double radius);
SurfaceSample invert(const SurfaceSample& s, const Vec3& center, double radius);

// --- circle checks ---------------------------------------------------------------

struct CircleFit {
  Vec3 center{};
  Vec3 normal{};
  double radius = 0;
  double max_residual = 0;  // largest distance of a sample to the fitted circle
};

/// Plane through the centroid along the smallest principal direction, then an
/// algebraic circle fit refined by one Gauss-Newton step. Throws DegenerateCurve.
CircleFit fit_circle(const std::vector<Vec3>& pts);

struct CurveReport {
  char direction = 'u';  // 'u': u fixed, 'v': v fixed
  std::size_t index = 0;
  CircleFit fit;
  bool cocircular = false;
};

struct CrossingReport {
  std::size_t i = 0, j = 0;  // u-curve i meets v-curve j
  double angle = 0;          // radians in [0, pi/2]
  bool transversal = false;
};

struct CosphericReport {
  std::size_t i = 0, j = 0;
  double determinant = 0;  // largest normalized 5-point determinant
  bool cospheric = false;
};

struct IsoCircleReport {
  double tol = 0;
  std::vector<CurveReport> curves;
  std::vector<CrossingReport> crossings;
  std::vector<CosphericReport> cospheric;

  bool all_cocircular() const;
};

/// Residuals are compared against tol * max(1, radius).
IsoCircleReport check_iso_circles(const SurfaceSample& s, double tol);

/// det of rows (|p|^2, x, y, z, 1) after centering and scaling the points.
double sphere_determinant(const std::array<Vec3, 5>& pts);

// --- export ----------------------------------------------------------------------

void write_obj(std::ostream& os, const SurfaceSample& s);
void write_csv(std::ostream& os, const SurfaceSample& s);

std::string to_string(Family f);

}  // namespace pythsix
