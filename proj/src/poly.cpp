#include "pythsix/poly.hpp"

#include <cmath>
#include <vector>

namespace pythsix {

namespace {

template <class P>
P shift(const P& p, Var var, int k) {
  if (k == 0) return p;
  P out;
  for (const auto& [m, c] : p.coeffs()) {
    Monomial s = var == Var::U ? Monomial{m.u + k, m.v} : Monomial{m.u, m.v + k};
    out.set(s, c);
  }
  return out;
}

// Drops every coefficient whose var-exponent equals k. Exact arithmetic already
// cancels them; this keeps the approximate backend from looping on residue.
template <class P>
void drop_degree(P& p, Var var, int k) {
  std::vector<Monomial> doomed;
  for (const auto& [m, c] : p.coeffs()) {
    if (m.exponent(var) == k) doomed.push_back(m);
  }
  for (const auto& m : doomed) p.set(m, typename P::Coeff());
}

Quaternion constant_leading(const QPoly& f, Var var) {
  if (f.is_zero()) throw Error(ErrorKind::DivisorZero, "division by the zero polynomial");
  QPoly lead = f.coeff_in(var, f.deg(var));
  if (!lead.is_constant()) {
    throw Error(ErrorKind::LeadingCoefficientNotInvertible,
                "leading coefficient " + to_string(lead) + " is not a constant");
  }
  return lead.coeff(0, 0);
}

QDivMod divmod_impl(const QPoly& q, const QPoly& f, Var var, bool left) {
  Quaternion lead_inv = constant_leading(f, var).inverse();
  int n = f.deg(var);
  QDivMod out;
  out.remainder = q;
  while (out.remainder.deg(var) >= n) {
    int m = out.remainder.deg(var);
    QPoly top = out.remainder.coeff_in(var, m);
    QPoly scaled = left ? top.map_coeffs([&](const Quaternion& c) { return lead_inv * c; })
                        : top.map_coeffs([&](const Quaternion& c) { return c * lead_inv; });
    QPoly term = shift(scaled, var, m - n);
    out.quotient += term;
    out.remainder -= left ? f * term : term * f;
    drop_degree(out.remainder, var, m);
  }
  return out;
}

template <class P>
std::optional<P> exact_quotient_impl(const P& a, const RPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisorZero, "exact_quotient by zero");
  Monomial lb = b.leading_monomial();
  FieldElement lc_inv = b.leading_coefficient().inverse();
  P rem = a;
  P quot;
  while (!rem.is_zero()) {
    Monomial lm = rem.leading_monomial();
    if (lm.u < lb.u || lm.v < lb.v) return std::nullopt;
    auto c = rem.coeff(lm) * lc_inv;
    P t = P::monomial(c, lm.u - lb.u, lm.v - lb.v);
    quot += t;
    rem -= t * b;
    rem.set(lm, typename P::Coeff());
  }
  return quot;
}

std::string monomial_text(const Monomial& m) {
  std::string out;
  auto append = [&](const char* name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += name;
    if (e > 1) out += "^" + std::to_string(e);
  };
  append("u", m.u);
  append("v", m.v);
  return out;
}

template <class P>
std::string poly_text(const P& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, std::string>> terms;
  for (const auto& [m, c] : p.coeffs()) terms.emplace_back(m, c.to_string());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return grlex_less(b.first, a.first); });
  std::string out;
  for (const auto& [m, cs] : terms) {
    std::string ms = monomial_text(m);
    bool compound = cs.find(' ') != std::string::npos;
    std::string term;
    if (ms.empty()) {
      term = compound && !out.empty() ? "(" + cs + ")" : cs;
    } else if (cs == "1") {
      term = ms;
    } else if (cs == "-1") {
      term = "-" + ms;
    } else {
      term = (compound ? "(" + cs + ")" : cs) + "*" + ms;
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace

QPoly to_qpoly(const RPoly& r) {
  QPoly out;
  for (const auto& [m, c] : r.coeffs()) out.set(m, Quaternion(c));
  return out;
}

RPoly component(const QPoly& q, int n) {
  RPoly out;
  for (const auto& [m, c] : q.coeffs()) out.set(m, c[n]);
  return out;
}

QPoly from_components(const std::array<RPoly, 4>& x) {
  QPoly out;
  for (int n = 0; n < 4; ++n) {
    for (const auto& [m, c] : x[n].coeffs()) {
      Quaternion unit;
      unit[n] = c;
      out.add_to(m, unit);
    }
  }
  return out;
}

bool is_real(const QPoly& q) {
  return std::all_of(q.coeffs().begin(), q.coeffs().end(),
                     [](const auto& kv) { return kv.second.is_real(); });
}

RPoly as_real(const QPoly& q) {
  if (!is_real(q)) throw Error(ErrorKind::NonRealNorm, "polynomial is not real: " + to_string(q));
  return component(q, 0);
}

QPoly operator*(const QPoly& q, const RPoly& r) {
  QPoly out;
  for (const auto& [mq, cq] : q.coeffs()) {
    for (const auto& [mr, cr] : r.coeffs()) out.add_to(mq + mr, cq * cr);
  }
  return out;
}

QPoly operator*(const RPoly& r, const QPoly& q) { return q * r; }

QPoly conj(const QPoly& q) {
  return q.map_coeffs([](const Quaternion& c) { return c.conj(); });
}

RPoly norm(const QPoly& q) { return as_real(q * conj(q)); }

Quaternion eval(const QPoly& q, const FieldElement& u0, const FieldElement& v0) {
  Quaternion out;
  for (const auto& [m, c] : q.coeffs()) {
    FieldElement s(1L);
    for (int e = 0; e < m.u; ++e) s *= u0;
    for (int e = 0; e < m.v; ++e) s *= v0;
    out += c * s;
  }
  return out;
}

FieldElement eval(const RPoly& r, const FieldElement& u0, const FieldElement& v0) {
  FieldElement out;
  for (const auto& [m, c] : r.coeffs()) {
    FieldElement s = c;
    for (int e = 0; e < m.u; ++e) s *= u0;
    for (int e = 0; e < m.v; ++e) s *= v0;
    out += s;
  }
  return out;
}

std::array<double, 4> eval_float(const QPoly& q, double u0, double v0) {
  std::array<double, 4> out{};
  for (const auto& [m, c] : q.coeffs()) {
    double s = std::pow(u0, m.u) * std::pow(v0, m.v);
    auto cd = c.to_double();
    for (int n = 0; n < 4; ++n) out[n] += cd[n] * s;
  }
  return out;
}

double eval_float(const RPoly& r, double u0, double v0) {
  double out = 0;
  for (const auto& [m, c] : r.coeffs()) out += c.to_double() * std::pow(u0, m.u) * std::pow(v0, m.v);
  return out;
}

QDivMod divmod_by_real(const QPoly& q, const RPoly& r, Var var) {
  if (r.is_zero()) throw Error(ErrorKind::DivisorZero, "divmod_by_real by zero");
  return divmod_impl(q, to_qpoly(r), var, true);
}

QDivMod left_divmod(const QPoly& q, const QPoly& f, Var var) { return divmod_impl(q, f, var, true); }

QDivMod right_divmod(const QPoly& q, const QPoly& f, Var var) {
  return divmod_impl(q, f, var, false);
}

std::optional<QPoly> left_divide(const QPoly& q, const QPoly& f) {
  Var var = f.degu() > 0 ? Var::U : Var::V;
  QDivMod d = left_divmod(q, f, var);
  if (!d.remainder.is_zero()) return std::nullopt;
  return d.quotient;
}

std::optional<QPoly> right_divide(const QPoly& q, const QPoly& f) {
  Var var = f.degu() > 0 ? Var::U : Var::V;
  QDivMod d = right_divmod(q, f, var);
  if (!d.remainder.is_zero()) return std::nullopt;
  return d.quotient;
}

std::optional<RPoly> exact_quotient(const RPoly& a, const RPoly& b) {
  return exact_quotient_impl(a, b);
}

std::optional<QPoly> exact_quotient(const QPoly& a, const RPoly& b) {
  return exact_quotient_impl(a, b);
}

RPoly make_monic(const RPoly& r) {
  if (r.is_zero()) return r;
  FieldElement inv = r.leading_coefficient().inverse();
  return r.map_coeffs([&](const FieldElement& c) { return c * inv; });
}

std::string to_string(const RPoly& r) { return poly_text(r); }
std::string to_string(const QPoly& q) { return poly_text(q); }

}  // namespace pythsix
