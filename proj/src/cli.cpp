#include "pythsix/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <iostream>
#include <random>
#include <sstream>

#include "pythsix/io.hpp"
#include "pythsix/solver.hpp"
#include "pythsix/surface.hpp"

namespace pythsix::cli {

namespace {

void emit(const Config& c, std::ostream& out, const std::string& text) {
  if (c.out.empty()) {
    out << text << "\n";
  } else {
    write_file(c.out, text);
  }
}

const std::string& input(const Config& c, std::size_t k, const char* what) {
  if (c.inputs.size() <= k) throw Error(ErrorKind::ParseError, std::string("missing ") + what + " file");
  return c.inputs[k];
}

SolveOptions options(const Config& c) { return {c.approx, c.tol}; }

std::vector<double> numbers(const std::string& text, std::size_t count, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, std::string("bad number in ") + what + ": " + item);
    }
  }
  if (out.size() != count) {
    throw Error(ErrorKind::ParseError, std::string(what) + " needs " + std::to_string(count) + " numbers");
  }
  return out;
}

Vec3 unit(double x, double y, double z) {
  double n = std::sqrt(x * x + y * y + z * z);
  if (!(n > 0)) throw Error(ErrorKind::ParseError, "direction must be nonzero");
  return {x / n, y / n, z / n};
}

Circle3D circle3d(const std::string& text, std::mt19937_64& rng) {
  if (text.empty()) {
    std::uniform_real_distribution<double> d(-1, 1), r(0.5, 2);
    return {{d(rng), d(rng), d(rng)}, r(rng), unit(d(rng), d(rng), d(rng) + 1e-3)};
  }
  auto v = numbers(text, 7, "circle (cx,cy,cz,r,nx,ny,nz)");
  return {{v[0], v[1], v[2]}, v[3], unit(v[4], v[5], v[6])};
}

CircleS2 circle_s2(const std::string& text, std::mt19937_64& rng) {
  if (text.empty()) {
    std::uniform_real_distribution<double> d(-1, 1), a(0.3, 2.8);
    return {unit(d(rng), d(rng), d(rng) + 1e-3), a(rng)};
  }
  auto v = numbers(text, 4, "spherical circle (ax,ay,az,angle)");
  return {unit(v[0], v[1], v[2]), v[3]};
}

QPoly random_poly(std::mt19937_64& rng, int m, int n) {
  std::uniform_int_distribution<long> d(-3, 3);
  for (;;) {
    QPoly out;
    for (int i = 0; i <= m; ++i) {
      for (int j = 0; j <= n; ++j) out += QPoly::monomial(Quaternion(d(rng), d(rng), d(rng), d(rng)), i, j);
    }
    if (!out.is_zero()) return out;
  }
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::ConstraintViolated: return kParse;
    case ErrorKind::IoError: return kIo;
    case ErrorKind::DegreeOutOfRange: return kDegree;
    case ErrorKind::InvariantViolated: return kVerificationFailed;
    default: return kHypothesis;
  }
}

int cmd_verify(const Config& c, std::ostream& out) {
  PythTuple x = tuple_from_json(read_file(input(c, 0, "tuple")));
  RPoly res = x.residual();
  bool ok = res.is_zero();
  if (!ok && c.approx) {
    double worst = 0;
    for (const auto& [m, v] : res.coeffs()) worst = std::max(worst, std::fabs(v.to_double()));
    ok = worst <= c.tol;
  }
  if (ok) {
    out << "ok\n";
    return kOk;
  }
  out << "residual: " << to_string(res) << "\n";
  return kVerificationFailed;
}

int cmd_solve(const Config& c, std::ostream& out) {
  PythTuple x = tuple_from_json(read_file(input(c, 0, "tuple")));
  SolveCertificate cert = solve_22(x, options(c));
  std::string text = certificate_to_json(cert);
  // Re-verify what will be written, after a trip through the file format.
  SolveCertificate back = certificate_from_json(text);
  if (!verify_certificate(tuple_to_triple(x), back, {c.approx || back.backend == Backend::Approx, c.tol})) {
    throw Error(ErrorKind::HypothesisViolated, "certificate failed to replay after serialization");
  }
  emit(c, out, text);
  return kOk;
}

int cmd_make(const Config& c, std::ostream& out) {
  FactorSet f = factors_from_json(read_file(input(c, 0, "factor")));
  emit(c, out, tuple_to_json(tuple_from_ABCD(f.A, f.B, f.C, f.D)));
  return kOk;
}

int cmd_replay(const Config& c, std::ostream& out) {
  SolveCertificate cert = certificate_from_json(read_file(input(c, 0, "certificate")));
  PythTuple x = tuple_from_json(read_file(input(c, 1, "tuple")));
  bool ok = verify_certificate(tuple_to_triple(x), cert, {c.approx || cert.backend == Backend::Approx, c.tol});
  out << (ok ? "ok" : "certificate does not replay") << "\n";
  return ok ? kOk : kVerificationFailed;
}

int cmd_surface(const Config& c, std::ostream& out) {
  std::mt19937_64 rng(c.seed);
  SurfaceSample s;
  if (c.family == "E") {
    Circle3D a = circle3d(c.alpha, rng);
    Circle3D b = circle3d(c.beta, rng);
    s = gen_euclidean(a, b, c.nu, c.nv);
  } else if (c.family == "C") {
    CircleS2 a = circle_s2(c.alpha, rng);
    CircleS2 b = circle_s2(c.beta, rng);
    s = gen_clifford(a, b, c.nu, c.nv);
  } else if (c.family == "D") {
    if (c.cyclide == "sphere") {
      auto v = numbers(c.params.empty() ? "0,0,0,1" : c.params, 4, "sphere (cx,cy,cz,r)");
      double m = 1.25 * v[3];
      s = sample_cyclide(DarbouxCyclide::sphere({v[0], v[1], v[2]}, v[3]),
                         {{v[0] - m, v[1] - m, v[2] - m}, {v[0] + m, v[1] + m, v[2] + m}}, c.nu);
    } else if (c.cyclide == "torus") {
      auto v = numbers(c.params.empty() ? "2,1" : c.params, 2, "torus (R,r)");
      double m = 1.25 * (v[0] + v[1]), h = 1.25 * v[1];
      s = sample_cyclide(DarbouxCyclide::torus(v[0], v[1]), {{-m, -m, -h}, {m, m, h}}, c.nu);
    } else {
      throw Error(ErrorKind::ParseError, "unknown cyclide " + c.cyclide);
    }
  } else {
    throw Error(ErrorKind::ParseError, "unknown family " + c.family);
  }

  IsoCircleReport rep = check_iso_circles(s, c.tol);
  std::string report = report_to_json(rep);
  if (c.out.empty()) {
    out << report << "\n";
  } else {
    std::ostringstream obj;
    write_obj(obj, s);
    write_file(c.out, obj.str());
    write_file(c.report.empty() ? c.out + ".report.json" : c.report, report);
  }
  if (!c.csv.empty()) {
    std::ostringstream csv;
    write_csv(csv, s);
    write_file(c.csv, csv.str());
  }
  std::size_t pass = 0;
  for (const auto& cr : rep.curves) pass += cr.cocircular;
  if (!c.out.empty()) {
    out << "family " << c.family << ": " << s.points.size() << " points, " << pass << "/" << rep.curves.size()
        << " iso-curves circular at tol " << c.tol << "\n";
  }
  return rep.all_cocircular() ? kOk : kVerificationFailed;
}

int cmd_selftest(const Config& c, std::ostream& out) {
  std::mt19937_64 rng(c.seed);
  int solved = 0;
  for (int n = 0; n < c.count; ++n) {
    QPoly A = random_poly(rng, 1, 0), B = random_poly(rng, 1, 1), C = random_poly(rng, 0, 1);
    PythTuple x = tuple_from_ABCD(A, B, C, RPoly(1L));
    bool ok = tuple_from_json(tuple_to_json(x)) == x && x.holds();
    if (ok) {
      SolveCertificate cert = solve_22(x, options(c));
      std::string text = certificate_to_json(cert);
      ok = certificate_to_json(certificate_from_json(text)) == text &&
           verify_certificate(tuple_to_triple(x), certificate_from_json(text), options(c));
    }
    solved += ok;
  }
  out << (solved == c.count ? "PASS" : "FAIL") << " solve round-trip " << solved << "/" << c.count << "\n";

  Circle3D a = circle3d("", rng), b = circle3d("", rng);
  bool circles = check_iso_circles(gen_euclidean(a, b, 16, 16), 1e-9).all_cocircular();
  out << (circles ? "PASS" : "FAIL") << " euclidean iso-circles\n";
  return solved == c.count && circles ? kOk : kVerificationFailed;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Pythagorean 6-tuples of bivariate polynomials: solve, verify, and sample surfaces"};
  app.require_subcommand(1);
  std::string backend = "exact", res;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--backend", backend, "exact or approx")->check(CLI::IsMember({"exact", "approx"}));
    sub->add_option("--tol", c.tol, "tolerance for approximate checks")->check(CLI::PositiveNumber);
    sub->add_option("--out", c.out, "output path (default stdout)");
  };
  auto* verify = app.add_subcommand("verify", "check X1^2 + ... + X5^2 = X6^2 for a tuple file");
  verify->add_option("tuple", c.inputs)->required();
  auto* solve = app.add_subcommand("solve", "write a certificate (A, B, C, D, transforms) for a tuple file");
  solve->add_option("tuple", c.inputs)->required();
  auto* make = app.add_subcommand("make", "build the tuple 2ABCD, (|B|^2 -+ |AC|^2) D from a factor file");
  make->add_option("factors", c.inputs)->required();
  auto* replay = app.add_subcommand("replay", "re-verify a certificate against a tuple file");
  replay->add_option("files", c.inputs, "certificate then tuple")->required()->expected(2);
  auto* surface = app.add_subcommand("surface", "sample a surface family and check its iso-circles");
  surface->add_option("family", c.family, "E, C or D")->check(CLI::IsMember({"E", "C", "D"}));
  surface->add_option("--alpha", c.alpha, "first circle: cx,cy,cz,r,nx,ny,nz (E) or ax,ay,az,angle (C)");
  surface->add_option("--beta", c.beta, "second circle, same format");
  surface->add_option("--cyclide", c.cyclide, "sphere or torus (D)");
  surface->add_option("--params", c.params, "sphere cx,cy,cz,r or torus R,r");
  surface->add_option("--res", res, "grid resolution NUxNV");
  surface->add_option("--seed", c.seed, "seed for circles not given explicitly");
  surface->add_option("--csv", c.csv, "also write u,v,x,y,z rows");
  surface->add_option("--report", c.report, "report path (default <out>.report.json)");
  auto* selftest = app.add_subcommand("selftest", "seeded random round-trips");
  selftest->add_option("--seed", c.seed);
  selftest->add_option("--count", c.count)->check(CLI::PositiveNumber);
  for (auto* sub : {verify, solve, make, replay, surface, selftest}) common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }
  c.approx = backend == "approx";
  c.subcommand = app.get_subcommands().front()->get_name();

  try {
    if (!res.empty()) {
      auto x = res.find('x');
      if (x == std::string::npos) throw Error(ErrorKind::ParseError, "--res expects NUxNV");
      try {
        long nu = std::stol(res.substr(0, x)), nv = std::stol(res.substr(x + 1));
        if (nu < 2 || nv < 2) throw Error(ErrorKind::ParseError, "resolutions must be at least 2");
        c.nu = std::size_t(nu);
        c.nv = std::size_t(nv);
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::ParseError, "--res expects NUxNV");
      }
    }
    if (c.subcommand == "verify") return cmd_verify(c, out);
    if (c.subcommand == "solve") return cmd_solve(c, out);
    if (c.subcommand == "make") return cmd_make(c, out);
    if (c.subcommand == "replay") return cmd_replay(c, out);
    if (c.subcommand == "surface") return cmd_surface(c, out);
    return cmd_selftest(c, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

}  // namespace pythsix::cli
