#include "pythsix/surface.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

namespace pythsix {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

Vec3 add(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 mul(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double len(const Vec3& a) { return std::sqrt(dot(a, a)); }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Eigen::Vector3d to_eigen(const Vec3& a) { return {a[0], a[1], a[2]}; }
Vec3 from_eigen(const Eigen::Vector3d& a) { return {a[0], a[1], a[2]}; }

// Orthonormal e1, e2 spanning the plane orthogonal to the unit vector n.
std::pair<Vec3, Vec3> plane_basis(const Vec3& n) {
  Vec3 a = std::fabs(n[0]) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  Vec3 e1 = sub(a, mul(dot(a, n), n));
  e1 = mul(1 / len(e1), e1);
  return {e1, cross(n, e1)};
}

void check_unit(const Vec3& n, const char* what) {
  if (std::fabs(len(n) - 1) > 1e-12) {
    throw Error(ErrorKind::ConstraintViolated, std::string(what) + " must be a unit vector");
  }
}

void check_grid(std::size_t nu, std::size_t nv) {
  if (nu < 2 || nv < 2) throw Error(ErrorKind::ConstraintViolated, "grid needs at least 2 x 2 samples");
}

std::vector<double> angles(std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = kTwoPi * double(k) / double(n);
  return out;
}

std::vector<double> linspace(std::array<double, 2> range, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = range[0] + (range[1] - range[0]) * double(k) / double(n - 1);
  return out;
}

// Iso-curve index lists over the valid samples of a full grid.
void fill_iso(SurfaceSample& s) {
  s.iso_u.assign(s.nu, {});
  s.iso_v.assign(s.nv, {});
  for (std::size_t i = 0; i < s.nu; ++i) {
    for (std::size_t j = 0; j < s.nv; ++j) {
      std::size_t idx = s.index(i, j);
      if (!s.valid[idx]) continue;
      s.iso_u[i].push_back(idx);
      s.iso_v[j].push_back(idx);
    }
  }
}

SurfaceSample grid(Family f, std::vector<double> us, std::vector<double> vs) {
  SurfaceSample s;
  s.family = f;
  s.nu = us.size();
  s.nv = vs.size();
  s.us = std::move(us);
  s.vs = std::move(vs);
  s.points.assign(s.nu * s.nv, Vec3{});
  s.valid.assign(s.nu * s.nv, true);
  return s;
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

// --- types -----------------------------------------------------------------------

void Circle3D::validate() const {
  if (!(radius > 0)) throw Error(ErrorKind::ConstraintViolated, "circle radius must be positive");
  check_unit(normal, "circle normal");
}

Vec3 Circle3D::point(double theta) const {
  auto [e1, e2] = plane_basis(normal);
  return add(center, add(mul(radius * std::cos(theta), e1), mul(radius * std::sin(theta), e2)));
}

void CircleS2::validate() const {
  check_unit(axis, "circle axis");
  if (!(angular_radius > 0 && angular_radius < std::numbers::pi)) {
    throw Error(ErrorKind::ConstraintViolated, "angular radius must lie in (0, pi)");
  }
}

Vec3 CircleS2::point(double theta) const {
  auto [e1, e2] = plane_basis(axis);
  double s = std::sin(angular_radius);
  return add(mul(std::cos(angular_radius), axis), add(mul(s * std::cos(theta), e1), mul(s * std::sin(theta), e2)));
}

int DarbouxCyclide::degree() const {
  int d = -1;
  for (const auto& t : terms) {
    if (t.coeff == 0) continue;
    d = std::max(d, t.exponents[0] + t.exponents[1] + t.exponents[2] + t.exponents[3]);
  }
  return d;
}

double DarbouxCyclide::scale() const {
  double m = 0;
  for (const auto& t : terms) m = std::max(m, std::fabs(t.coeff));
  return m;
}

void DarbouxCyclide::validate() const {
  for (const auto& t : terms) {
    if (std::any_of(t.exponents.begin(), t.exponents.end(), [](int e) { return e < 0; })) {
      throw Error(ErrorKind::ConstraintViolated, "negative exponent in cyclide");
    }
  }
  int d = degree();
  if (d != 1 && d != 2) throw Error(ErrorKind::ConstraintViolated, "cyclide polynomial must have degree 1 or 2");
}

DarbouxCyclide DarbouxCyclide::sphere(const Vec3& c, double radius) {
  return {{{{0, 0, 0, 1}, 1},
           {{1, 0, 0, 0}, -2 * c[0]},
           {{0, 1, 0, 0}, -2 * c[1]},
           {{0, 0, 1, 0}, -2 * c[2]},
           {{0, 0, 0, 0}, dot(c, c) - radius * radius}}};
}

DarbouxCyclide DarbouxCyclide::torus(double big, double small) {
  double k = big * big - small * small;
  return {{{{0, 0, 0, 2}, 1},
           {{0, 0, 0, 1}, 2 * k},
           {{0, 0, 0, 0}, k * k},
           {{2, 0, 0, 0}, -4 * big * big},
           {{0, 2, 0, 0}, -4 * big * big}}};
}

// --- generators ------------------------------------------------------------------

SurfaceSample gen_euclidean(const Circle3D& alpha, const Circle3D& beta, std::size_t nu, std::size_t nv) {
  alpha.validate();
  beta.validate();
  check_grid(nu, nv);
  SurfaceSample s = grid(Family::E, angles(nu), angles(nv));
  for (std::size_t i = 0; i < nu; ++i) {
    Vec3 p = alpha.point(s.us[i]);
    for (std::size_t j = 0; j < nv; ++j) s.points[s.index(i, j)] = add(p, beta.point(s.vs[j]));
  }
  fill_iso(s);
  return s;
}

SurfaceSample gen_euclidean(const Circle3D& alpha, const Vec3& c, std::size_t nu, std::size_t nv) {
  alpha.validate();
  check_grid(nu, nv);
  SurfaceSample s = grid(Family::E, angles(nu), std::vector<double>(nv, 0.0));
  for (std::size_t i = 0; i < nu; ++i) {
    Vec3 p = add(alpha.point(s.us[i]), c);
    for (std::size_t j = 0; j < nv; ++j) s.points[s.index(i, j)] = p;
  }
  fill_iso(s);
  s.iso_u.clear();  // u = const collapses to a point
  return s;
}

Vec3 clifford_point(const Vec3& p, const Vec3& q) {
  Vec3 sum = add(p, q);
  return mul(2 / dot(sum, sum), cross(p, q));
}

SurfaceSample gen_clifford(const CircleS2& alpha, const CircleS2& beta, std::size_t nu, std::size_t nv) {
  alpha.validate();
  beta.validate();
  check_grid(nu, nv);
  SurfaceSample s = grid(Family::C, angles(nu), angles(nv));
  for (std::size_t i = 0; i < nu; ++i) {
    Vec3 p = alpha.point(s.us[i]);
    for (std::size_t j = 0; j < nv; ++j) {
      Vec3 q = beta.point(s.vs[j]);
      std::size_t idx = s.index(i, j);
      if (len(add(p, q)) < 1e-8) {
        s.valid[idx] = false;
        continue;
      }
      s.points[idx] = clifford_point(p, q);
    }
  }
  fill_iso(s);
  for (const auto* curves : {&s.iso_u, &s.iso_v}) {
    for (const auto& c : *curves) {
      if (c.size() < 2) throw Error(ErrorKind::AntipodalDegeneracy, "an iso-curve collapses onto p + q = 0");
    }
  }
  return s;
}

double eval_cyclide(const DarbouxCyclide& c, const Vec3& x) {
  std::array<double, 4> base{x[0], x[1], x[2], dot(x, x)};
  double out = 0;
  for (const auto& t : c.terms) {
    double m = t.coeff;
    for (int k = 0; k < 4; ++k) {
      for (int e = 0; e < t.exponents[k]; ++e) m *= base[k];
    }
    out += m;
  }
  return out;
}

SurfaceSample sample_cyclide(const DarbouxCyclide& c, const BoundingBox& box, std::size_t resolution) {
  c.validate();
  if (resolution < 2) throw Error(ErrorKind::ConstraintViolated, "resolution must be at least 2");
  const std::size_t n = resolution + 1;
  auto coord = [&](int axis, std::size_t k) {
    return box.lo[axis] + (box.hi[axis] - box.lo[axis]) * double(k) / double(resolution);
  };
  auto at = [&](std::size_t a, std::size_t b, std::size_t d) { return Vec3{coord(0, a), coord(1, b), coord(2, d)}; };
  std::vector<double> f(n * n * n);
  auto id = [&](std::size_t a, std::size_t b, std::size_t d) { return (a * n + b) * n + d; };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t d = 0; d < n; ++d) f[id(a, b, d)] = eval_cyclide(c, at(a, b, d));
    }
  }

  SurfaceSample s;
  s.family = Family::D;
  auto bisect = [&](Vec3 lo, Vec3 hi, double flo) {
    for (int it = 0; it < 200; ++it) {
      Vec3 mid = mul(0.5, add(lo, hi));
      if (mid == lo || mid == hi) break;
      double fm = eval_cyclide(c, mid);
      if (fm == 0) return mid;
      if ((fm < 0) == (flo < 0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    return std::fabs(eval_cyclide(c, lo)) <= std::fabs(eval_cyclide(c, hi)) ? lo : hi;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t d = 0; d < n; ++d) {
        double f0 = f[id(a, b, d)];
        if (f0 == 0) {
          s.points.push_back(at(a, b, d));
          continue;
        }
        const std::array<std::array<std::size_t, 3>, 3> next{{{a + 1, b, d}, {a, b + 1, d}, {a, b, d + 1}}};
        for (const auto& m : next) {
          if (m[0] >= n || m[1] >= n || m[2] >= n) continue;
          double f1 = f[id(m[0], m[1], m[2])];
          if (f1 != 0 && (f0 < 0) != (f1 < 0)) s.points.push_back(bisect(at(a, b, d), at(m[0], m[1], m[2]), f0));
        }
      }
    }
  }
  if (s.points.empty()) throw Error(ErrorKind::EmptyIntersection, "no sign change of the cyclide in the box");
  s.valid.assign(s.points.size(), true);
  return s;
}

SurfaceSample sample_phi(const QPoly& A, const QPoly& B, const QPoly& C, std::array<double, 2> urange,
                         std::array<double, 2> vrange, std::size_t nu, std::size_t nv) {
  check_grid(nu, nv);
  SurfaceSample s = grid(Family::Phi, linspace(urange, nu), linspace(vrange, nv));
  for (std::size_t i = 0; i < nu; ++i) {
    for (std::size_t j = 0; j < nv; ++j) {
      std::size_t idx = s.index(i, j);
      Vec4 w;
      try {
        w = phi_eval(A, B, C, s.us[i], s.vs[j]);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::PoleSingularity) throw;
        s.valid[idx] = false;
        continue;
      }
      Vec3 im{w[1], w[2], w[3]};
      if (std::fabs(w[0]) > 1e-9 * std::max(1.0, len(im))) {
        throw Error(ErrorKind::ConstraintViolated, "surface leaves the imaginary quaternions");
      }
      s.points[idx] = im;
    }
  }
  fill_iso(s);
  return s;
}

// --- maps ------------------------------------------------------------------------

Vec4 qmul(const Vec4& a, const Vec4& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

Vec4 qconj(const Vec4& a) { return {a[0], -a[1], -a[2], -a[3]}; }

Vec4 qinverse(const Vec4& a) {
  double n = a[0] * a[0] + a[1] * a[1] + a[2] * a[2] + a[3] * a[3];
  if (!(n > 1e-28)) throw Error(ErrorKind::PoleSingularity, "quaternion is not invertible");
  Vec4 c = qconj(a);
  return {c[0] / n, c[1] / n, c[2] / n, c[3] / n};
}

Vec3 stereo_from_one(const Vec4& w) {
  // Projects w / |w|; |w| - w0 is rewritten as |im|^2 / (|w| + w0) when w0 > 0.
  double im2 = w[1] * w[1] + w[2] * w[2] + w[3] * w[3];
  double norm = std::sqrt(w[0] * w[0] + im2);
  if (!(norm > 0) || (w[0] > 0 && im2 <= 1e-30 * norm * norm)) {
    throw Error(ErrorKind::PoleSingularity, "stereographic projection of the pole");
  }
  if (w[0] > 0) {
    double s = (norm + w[0]) / im2;
    return {w[1] * s, w[2] * s, w[3] * s};
  }
  double den = norm - w[0];
  return {w[1] / den, w[2] / den, w[3] / den};
}

Vec4 stereo_project_tuple(const PythTuple& x, double u0, double v0) {
  std::array<double, 6> X;
  for (int n = 0; n < 6; ++n) X[n] = eval_float(x.X[n], u0, v0);
  double den = X[5] - X[4];
  if (std::fabs(den) <= 1e-14 * std::max(1.0, std::fabs(X[5]) + std::fabs(X[4]))) {
    throw Error(ErrorKind::PoleSingularity, "X6 - X5 vanishes at the sample point");
  }
  return {X[0] / den, X[1] / den, X[2] / den, X[3] / den};
}

Vec4 phi_eval(const QPoly& A, const QPoly& B, const QPoly& C, double u0, double v0) {
  Vec4 a = eval_float(A, u0, v0), b = eval_float(B, u0, v0), c = eval_float(C, u0, v0);
  return qmul(qmul(qinverse(qconj(a)), b), qinverse(qconj(c)));
}

Vec3 invert(const Vec3& point, const Vec3& center, double radius) {
  Vec3 d = sub(point, center);
  double n2 = dot(d, d);
  if (std::sqrt(n2) <= 1e-14 * std::max(1.0, radius)) {
    throw Error(ErrorKind::CenterSingularity, "inversion of the center");
  }
  return add(center, mul(radius * radius / n2, d));
}

SurfaceSample invert(const SurfaceSample& s, const Vec3& center, double radius) {
  SurfaceSample out = s;
  for (std::size_t k = 0; k < out.points.size(); ++k) {
    if (!out.valid[k]) continue;
    try {
      out.points[k] = invert(out.points[k], center, radius);
    } catch (const Error&) {
      out.valid[k] = false;
      out.points[k] = Vec3{};
    }
  }
  auto keep = [&](std::vector<std::vector<std::size_t>>& curves) {
    for (auto& c : curves) std::erase_if(c, [&](std::size_t k) { return !out.valid[k]; });
  };
  keep(out.iso_u);
  keep(out.iso_v);
  return out;
}

// --- circle checks ---------------------------------------------------------------

CircleFit fit_circle(const std::vector<Vec3>& pts) {
  const std::size_t n = pts.size();
  if (n < 5) throw Error(ErrorKind::DegenerateCurve, "a curve needs at least 5 points");
  Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
  for (const auto& p : pts) centroid += to_eigen(p);
  centroid /= double(n);
  Eigen::Matrix3d scatter = Eigen::Matrix3d::Zero();
  double extent = 0;
  for (const auto& p : pts) {
    Eigen::Vector3d d = to_eigen(p) - centroid;
    scatter += d * d.transpose();
    extent = std::max(extent, d.norm());
  }
  if (!(extent > 1e-12 * std::max(1.0, centroid.norm()))) {
    throw Error(ErrorKind::DegenerateCurve, "all points coincide");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(scatter);
  const Eigen::Vector3d& ev = eig.eigenvalues();
  if (std::sqrt(std::max(ev[1], 0.0) / ev[2]) < 1e-9) throw Error(ErrorKind::DegenerateCurve, "points are collinear");
  Eigen::Vector3d normal = eig.eigenvectors().col(0);
  Eigen::Vector3d e1 = eig.eigenvectors().col(2), e2 = eig.eigenvectors().col(1);

  // Work in units of the extent so the normal equations stay balanced.
  Eigen::MatrixXd M(n, 3);
  Eigen::VectorXd rhs(n);
  std::vector<Eigen::Vector2d> flat(n);
  for (std::size_t k = 0; k < n; ++k) {
    Eigen::Vector3d d = (to_eigen(pts[k]) - centroid) / extent;
    flat[k] = {d.dot(e1), d.dot(e2)};
    M.row(k) << flat[k].x(), flat[k].y(), 1;
    rhs[k] = -flat[k].squaredNorm();
  }
  Eigen::Vector3d kasa = M.colPivHouseholderQr().solve(rhs);
  Eigen::Vector2d c(-kasa[0] / 2, -kasa[1] / 2);
  double r2 = c.squaredNorm() - kasa[2];
  if (!(r2 > 0) || !std::isfinite(r2)) throw Error(ErrorKind::DegenerateCurve, "no circle fits the points");
  double r = std::sqrt(r2);

  Eigen::MatrixXd J(n, 3);
  Eigen::VectorXd res(n);
  for (std::size_t k = 0; k < n; ++k) {
    Eigen::Vector2d d = flat[k] - c;
    double dist = d.norm();
    if (dist == 0) throw Error(ErrorKind::DegenerateCurve, "a point sits at the fitted center");
    J.row(k) << -d.x() / dist, -d.y() / dist, -1;
    res[k] = dist - r;
  }
  Eigen::Vector3d step = J.colPivHouseholderQr().solve(-res);
  if (step.allFinite()) {
    c += step.head<2>();
    r += step[2];
  }

  CircleFit fit;
  Eigen::Vector3d center = centroid + extent * (c.x() * e1 + c.y() * e2);
  fit.center = from_eigen(center);
  fit.normal = from_eigen(normal);
  fit.radius = extent * r;
  for (const auto& p : pts) {
    Eigen::Vector3d d = to_eigen(p) - center;
    double h = d.dot(normal);
    double rho = (d - h * normal).norm();
    fit.max_residual = std::max(fit.max_residual, std::hypot(h, rho - fit.radius));
  }
  return fit;
}

double sphere_determinant(const std::array<Vec3, 5>& pts) {
  Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
  for (const auto& p : pts) centroid += to_eigen(p);
  centroid /= 5;
  double extent = 0;
  for (const auto& p : pts) extent = std::max(extent, (to_eigen(p) - centroid).norm());
  if (extent == 0) return 0;
  Eigen::Matrix<double, 5, 5> m;
  for (int k = 0; k < 5; ++k) {
    Eigen::Vector3d d = (to_eigen(pts[k]) - centroid) / extent;
    m.row(k) << d.squaredNorm(), d.x(), d.y(), d.z(), 1;
  }
  return m.determinant();
}

bool IsoCircleReport::all_cocircular() const {
  return std::all_of(curves.begin(), curves.end(), [](const CurveReport& c) { return c.cocircular; });
}

IsoCircleReport check_iso_circles(const SurfaceSample& s, double tol) {
  if (!(tol > 0)) throw Error(ErrorKind::ConstraintViolated, "tolerance must be positive");
  IsoCircleReport rep;
  rep.tol = tol;
  auto points_of = [&](const std::vector<std::size_t>& idx) {
    std::vector<Vec3> out;
    out.reserve(idx.size());
    for (std::size_t k : idx) out.push_back(s.points[k]);
    return out;
  };
  std::vector<CircleFit> fu, fv;
  for (std::size_t i = 0; i < s.iso_u.size(); ++i) {
    CircleFit f = fit_circle(points_of(s.iso_u[i]));
    rep.curves.push_back({'u', i, f, f.max_residual <= tol * std::max(1.0, f.radius)});
    fu.push_back(f);
  }
  for (std::size_t j = 0; j < s.iso_v.size(); ++j) {
    CircleFit f = fit_circle(points_of(s.iso_v[j]));
    rep.curves.push_back({'v', j, f, f.max_residual <= tol * std::max(1.0, f.radius)});
    fv.push_back(f);
  }
  if (fu.empty() || fv.empty()) return rep;

  auto tangent = [](const CircleFit& f, const Vec3& p) { return cross(f.normal, sub(p, f.center)); };
  auto spread = [&](const std::vector<std::size_t>& idx) {
    std::size_t m = idx.size();
    return std::array<Vec3, 3>{s.points[idx[0]], s.points[idx[m / 3]], s.points[idx[(2 * m) / 3]]};
  };
  for (std::size_t i = 0; i < s.iso_u.size(); ++i) {
    for (std::size_t j = 0; j < s.iso_v.size(); ++j) {
      std::size_t idx = s.index(i, j);
      if (idx < s.valid.size() && s.valid[idx]) {
        Vec3 a = tangent(fu[i], s.points[idx]), b = tangent(fv[j], s.points[idx]);
        double c = std::fabs(dot(a, b)) / (len(a) * len(b));
        double angle = std::acos(std::clamp(c, 0.0, 1.0));
        rep.crossings.push_back({i, j, angle, std::sin(angle) > tol});
      }
      auto pi = spread(s.iso_u[i]);
      auto pj = spread(s.iso_v[j]);
      double worst = 0;
      for (auto [x, y] : {std::pair{0, 1}, {0, 2}, {1, 2}}) {
        worst = std::max(worst, std::fabs(sphere_determinant({pi[0], pi[1], pi[2], pj[x], pj[y]})));
      }
      rep.cospheric.push_back({i, j, worst, worst <= tol});
    }
  }
  return rep;
}

// --- export ----------------------------------------------------------------------

void write_obj(std::ostream& os, const SurfaceSample& s) {
  os << "# family " << to_string(s.family) << " grid " << s.nu << "x" << s.nv << "\n";
  std::vector<std::size_t> id(s.points.size(), 0);
  std::size_t next = 1;
  for (std::size_t k = 0; k < s.points.size(); ++k) {
    if (!s.valid[k]) continue;
    id[k] = next++;
    const Vec3& p = s.points[k];
    os << "v " << fmt17(p[0]) << " " << fmt17(p[1]) << " " << fmt17(p[2]) << "\n";
  }
  if (s.nu < 2 || s.nv < 2) return;
  for (std::size_t i = 0; i + 1 < s.nu; ++i) {
    for (std::size_t j = 0; j + 1 < s.nv; ++j) {
      std::array<std::size_t, 4> q{s.index(i, j), s.index(i + 1, j), s.index(i + 1, j + 1), s.index(i, j + 1)};
      if (std::any_of(q.begin(), q.end(), [&](std::size_t k) { return !s.valid[k]; })) continue;
      os << "f " << id[q[0]] << " " << id[q[1]] << " " << id[q[2]] << " " << id[q[3]] << "\n";
    }
  }
}

void write_csv(std::ostream& os, const SurfaceSample& s) {
  os << "u,v,x,y,z\n";
  bool gridded = s.nu * s.nv == s.points.size() && s.nu > 0;
  for (std::size_t k = 0; k < s.points.size(); ++k) {
    if (!s.valid[k]) continue;
    const Vec3& p = s.points[k];
    if (gridded) os << fmt17(s.us[k / s.nv]) << "," << fmt17(s.vs[k % s.nv]);
    else os << ",";
    os << "," << fmt17(p[0]) << "," << fmt17(p[1]) << "," << fmt17(p[2]) << "\n";
  }
}

std::string to_string(Family f) {
  switch (f) {
    case Family::E: return "E";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::Phi: return "Phi";
  }
  return "?";
}

}  // namespace pythsix
