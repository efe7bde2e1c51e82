#include "pythsix/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace pythsix {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    parse_error(e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_error(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

FieldElement scalar(const json& j) {
  if (!j.is_string()) parse_error("coefficients must be strings");
  try {
    return FieldElement::parse(j.get<std::string>());
  } catch (const Error& e) {
    parse_error(e.what());
  }
}

int integer(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) parse_error(std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

json qpoly_json(const QPoly& q) {
  json coeffs = json::array();
  // Grlex order, highest first.
  std::vector<std::pair<Monomial, Quaternion>> terms(q.coeffs().begin(), q.coeffs().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return grlex_less(b.first, a.first); });
  for (const auto& [m, c] : terms) {
    coeffs.push_back({{"i", m.u}, {"j", m.v}, {"q", {c.w.to_string(), c.x.to_string(), c.y.to_string(), c.z.to_string()}}});
  }
  return {{"degu", std::max(q.degu(), 0)}, {"degv", std::max(q.degv(), 0)}, {"coeffs", coeffs}};
}

QPoly qpoly_parse(const json& j) {
  int m = integer(j, "degu"), n = integer(j, "degv");
  const json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array()) parse_error("\"coeffs\" must be an array");
  QPoly out;
  for (const auto& c : coeffs) {
    int i = integer(c, "i"), k = integer(c, "j");
    if (i < 0 || k < 0 || i > m || k > n) parse_error("monomial exponent outside the declared degrees");
    const json& q = field(c, "q");
    if (!q.is_array() || q.size() != 4) parse_error("\"q\" must list four components");
    out += QPoly::monomial(Quaternion(scalar(q[0]), scalar(q[1]), scalar(q[2]), scalar(q[3])), i, k);
  }
  return out;
}

RPoly rpoly_parse(const json& j) {
  QPoly q = qpoly_parse(j);
  if (!is_real(q)) parse_error("expected a real polynomial");
  return as_real(q);
}

json step_json(const CertStep& s) {
  json out{{"kind", to_string(s.kind)}};
  if (s.kind == StepKind::ShiftByT) out["T"] = qpoly_json(s.T);
  if (s.kind == StepKind::DivideCommon) {
    out["D"] = qpoly_json(to_qpoly(s.D));
    out["mode"] = to_string(s.mode);
  }
  return out;
}

CertStep step_parse(const json& j) {
  const json& kind = field(j, "kind");
  if (!kind.is_string()) parse_error("step kind must be a string");
  std::string k = kind.get<std::string>();
  if (k == "shift") return CertStep::shift(qpoly_parse(field(j, "T")));
  if (k == "swap") return CertStep::swap();
  if (k == "relabel") return CertStep::relabel();
  if (k == "divide") {
    std::string mode = field(j, "mode").get<std::string>();
    DivideMode m = mode == "all"  ? DivideMode::All
                   : mode == "qr" ? DivideMode::QR
                   : mode == "pq" ? DivideMode::PQ
                                  : (parse_error("unknown divide mode " + mode), DivideMode::All);
    return CertStep::divide(rpoly_parse(field(j, "D")), m);
  }
  parse_error("unknown step kind " + k);
}

json vec_json(const Vec3& v) { return {v[0], v[1], v[2]}; }

}  // namespace

std::string qpoly_to_json(const QPoly& q) { return qpoly_json(q).dump(); }
QPoly qpoly_from_json(const std::string& text) { return qpoly_parse(parse(text)); }
std::string rpoly_to_json(const RPoly& r) { return qpoly_json(to_qpoly(r)).dump(); }
RPoly rpoly_from_json(const std::string& text) { return rpoly_parse(parse(text)); }

std::string tuple_to_json(const PythTuple& x) {
  json arr = json::array();
  for (const auto& p : x.X) arr.push_back(qpoly_json(to_qpoly(p)));
  return json{{"tuple", arr}}.dump(2);
}

PythTuple tuple_from_json(const std::string& text) {
  json j = parse(text);
  const json& arr = field(j, "tuple");
  if (!arr.is_array() || arr.size() != 6) parse_error("\"tuple\" must list six polynomials");
  PythTuple out;
  for (int n = 0; n < 6; ++n) out.X[n] = rpoly_parse(arr[n]);
  return out;
}

std::string factors_to_json(const FactorSet& f) {
  return json{{"A", qpoly_json(f.A)}, {"B", qpoly_json(f.B)}, {"C", qpoly_json(f.C)}, {"D", qpoly_json(to_qpoly(f.D))}}
      .dump(2);
}

FactorSet factors_from_json(const std::string& text) {
  json j = parse(text);
  return {qpoly_parse(field(j, "A")), qpoly_parse(field(j, "B")), qpoly_parse(field(j, "C")), rpoly_parse(field(j, "D"))};
}

std::string certificate_to_json(const SolveCertificate& c) {
  json steps = json::array();
  for (const auto& s : c.transforms) steps.push_back(step_json(s));
  return json{{"A", qpoly_json(c.A)},
              {"B", qpoly_json(c.B)},
              {"C", qpoly_json(c.C)},
              {"D", qpoly_json(to_qpoly(c.D))},
              {"backend", c.backend == Backend::Exact ? "exact" : "approx"},
              {"transforms", steps}}
      .dump(2);
}

SolveCertificate certificate_from_json(const std::string& text) {
  json j = parse(text);
  SolveCertificate c;
  c.A = qpoly_parse(field(j, "A"));
  c.B = qpoly_parse(field(j, "B"));
  c.C = qpoly_parse(field(j, "C"));
  c.D = rpoly_parse(field(j, "D"));
  const json& backend = field(j, "backend");
  if (backend == "exact") {
    c.backend = Backend::Exact;
  } else if (backend == "approx") {
    c.backend = Backend::Approx;
  } else {
    parse_error("backend must be exact or approx");
  }
  const json& steps = field(j, "transforms");
  if (!steps.is_array()) parse_error("\"transforms\" must be an array");
  for (const auto& s : steps) c.transforms.push_back(step_parse(s));
  return c;
}

std::string report_to_json(const IsoCircleReport& r) {
  json curves = json::array(), crossings = json::array(), cospheric = json::array();
  for (const auto& c : r.curves) {
    curves.push_back({{"direction", std::string(1, c.direction)},
                      {"index", c.index},
                      {"center", vec_json(c.fit.center)},
                      {"normal", vec_json(c.fit.normal)},
                      {"radius", c.fit.radius},
                      {"max_residual", c.fit.max_residual},
                      {"cocircular", c.cocircular}});
  }
  for (const auto& x : r.crossings) {
    crossings.push_back({{"i", x.i}, {"j", x.j}, {"angle", x.angle}, {"transversal", x.transversal}});
  }
  for (const auto& x : r.cospheric) {
    cospheric.push_back({{"i", x.i}, {"j", x.j}, {"determinant", x.determinant}, {"cospheric", x.cospheric}});
  }
  return json{{"tol", r.tol},
              {"all_cocircular", r.all_cocircular()},
              {"curves", curves},
              {"crossings", crossings},
              {"cospheric", cospheric}}
      .dump(2);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
  if (!out) throw Error(ErrorKind::IoError, "write failed for " + path);
}

}  // namespace pythsix
