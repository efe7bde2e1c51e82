#include "pythsix/solver.hpp"

#include <algorithm>
#include <cmath>

#include "pythsix/realpoly.hpp"

namespace pythsix {

namespace {

[[noreturn]] void hypothesis(const std::string& what) {
  throw Error(ErrorKind::HypothesisViolated, what);
}

bool is_exact(const Triple& t) { return t.P.is_exact() && t.Q.is_exact() && t.R.is_exact(); }

double max_abs_coeff(const RPoly& r) {
  double m = 0;
  for (const auto& [mono, c] : r.coeffs()) m = std::max(m, std::fabs(c.to_double()));
  return m;
}

double max_abs_coeff(const QPoly& q) {
  double m = 0;
  for (const auto& [mono, c] : q.coeffs()) {
    for (double x : c.to_double()) m = std::max(m, std::fabs(x));
  }
  return m;
}

template <class P>
bool close(const P& a, const P& b, double tol) {
  double scale = std::max({1.0, max_abs_coeff(a), max_abs_coeff(b)});
  return max_abs_coeff(a - b) <= tol * scale;
}

bool same(const Triple& a, const Triple& b, const SolveOptions& opt) {
  if (!opt.approx && is_exact(a) && is_exact(b)) return a == b;
  return close(a.P, b.P, opt.tol) && close(a.Q, b.Q, opt.tol) && close(a.R, b.R, opt.tol);
}

bool nonconstant(const RPoly& r) { return !r.is_zero() && r.total_degree() > 0; }

Var univariate_var(const Triple& t) {
  bool has_u = t.P.degu() > 0 || t.Q.degu() > 0 || t.R.degu() > 0;
  bool has_v = t.P.degv() > 0 || t.Q.degv() > 0 || t.R.degv() > 0;
  if (has_u && has_v) throw Error(ErrorKind::InvariantViolated, "triple is not univariate");
  return has_v ? Var::V : Var::U;
}

Triple swap_vars(const Triple& t) { return {t.P.swapped_vars(), t.Q.swapped_vars(), t.R.swapped_vars()}; }

CertStep swap_vars(CertStep s) {
  s.T = s.T.swapped_vars();
  s.D = s.D.swapped_vars();
  return s;
}

QPoly scaled(const QPoly& q, const FieldElement& s) {
  return q.map_coeffs([&](const Quaternion& c) { return c * s; });
}

}  // namespace

// --- triples and tuples ------------------------------------------------------------

bool Triple::holds() const {
  RPoly lhs = norm(Q);
  RPoly rhs = P * R;
  if (lhs.is_exact() && rhs.is_exact()) return lhs == rhs;
  return close(lhs, rhs, kApproxTolerance);
}

void Triple::validate() const {
  if (!holds()) {
    throw Error(ErrorKind::InvariantViolated, "Q conj(Q) != P R for Q = " + to_string(Q));
  }
}

RPoly PythTuple::residual() const {
  RPoly out;
  for (int n = 0; n < 5; ++n) out += X[n] * X[n];
  return out - X[5] * X[5];
}

bool PythTuple::in_space(int m, int n) const {
  return std::all_of(X.begin(), X.end(), [&](const RPoly& x) { return x.in_space(m, n); });
}

Triple tuple_to_triple(const PythTuple& x) {
  if (!x.holds()) {
    throw Error(ErrorKind::InvariantViolated, "tuple residual " + to_string(x.residual()));
  }
  return {x.X[5] - x.X[4], from_components({x.X[0], x.X[1], x.X[2], x.X[3]}), x.X[5] + x.X[4]};
}

PythTuple triple_to_tuple(const Triple& t) {
  t.validate();
  PythTuple out;
  for (int n = 0; n < 4; ++n) out.X[n] = component(t.Q, n);
  RPoly half(FieldElement(1L, 2L));
  out.X[4] = (t.R - t.P) * half;
  out.X[5] = (t.R + t.P) * half;
  return out;
}

PythTuple tuple_from_ABCD(const QPoly& A, const QPoly& B, const QPoly& C, const RPoly& D,
                          bool require_22) {
  QPoly q = QPoly(2L) * A * B * C * D;
  RPoly nb = norm(B) * D;
  RPoly nac = norm(A * C) * D;
  PythTuple out;
  for (int n = 0; n < 4; ++n) out.X[n] = component(q, n);
  out.X[4] = nb - nac;
  out.X[5] = nb + nac;
  if (require_22 && !out.in_space(2, 2)) {
    throw Error(ErrorKind::ConstraintViolated, "tuple leaves R_22");
  }
  if (!out.holds()) throw Error(ErrorKind::NonRealNorm, "tuple from factors fails the identity");
  return out;
}

Triple triple_from_factors(const QPoly& A, const QPoly& B, const QPoly& C, const RPoly& D) {
  return {norm(A * C) * D, A * B * C * D, norm(B) * D};
}

// --- transformations ------------------------------------------------------------------

Triple transform(const Triple& t, const QPoly& T) {
  if (T.is_zero()) return t;
  QPoly Tc = conj(T);
  QPoly shifted = to_qpoly(t.P) - T * conj(t.Q) - t.Q * Tc + T * t.R * Tc;
  Triple out{as_real(shifted), t.Q - T * t.R, t.R};
  if (!out.holds()) throw Error(ErrorKind::InvariantViolated, "transform broke Q conj(Q) = P R");
  return out;
}

Triple swap_pr(const Triple& t) { return {t.R, t.Q, t.P}; }

Triple divide_common(const Triple& t, const RPoly& D, DivideMode mode) {
  auto need = [&](auto q, const char* what) {
    if (!q) throw Error(ErrorKind::ConstraintViolated, std::string(what) + " not divisible by " + to_string(D));
    return *q;
  };
  RPoly D2 = D * D;
  switch (mode) {
    case DivideMode::All:
      return {need(exact_quotient(t.P, D), "P"), need(exact_quotient(t.Q, D), "Q"),
              need(exact_quotient(t.R, D), "R")};
    case DivideMode::QR:
      return {t.P, need(exact_quotient(t.Q, D), "Q"), need(exact_quotient(t.R, D2), "R")};
    case DivideMode::PQ:
      return {need(exact_quotient(t.P, D2), "P"), need(exact_quotient(t.Q, D), "Q"), t.R};
  }
  return t;
}

Triple apply_step(const Triple& t, const CertStep& step) {
  switch (step.kind) {
    case StepKind::ShiftByT: return transform(t, step.T);
    case StepKind::SwapPR: return swap_pr(t);
    case StepKind::DivideCommon: return divide_common(t, step.D, step.mode);
    case StepKind::Relabel: return t;
  }
  return t;
}

Triple replay(const Triple& t, const std::vector<CertStep>& steps) {
  Triple out = t;
  for (const auto& s : steps) out = apply_step(out, s);
  return out;
}

bool verify_certificate(const Triple& t, const SolveCertificate& cert, const SolveOptions& opt) {
  Triple end;
  try {
    end = replay(t, cert.transforms);
  } catch (const Error&) {
    return false;
  }
  return same(end, triple_from_factors(cert.A, cert.B, cert.C, cert.D), opt);
}

// --- univariate ---------------------------------------------------------------------------

namespace {

UnivariateFactors solve_univariate_rec(const Triple& t, Var var) {
  if (t.Q.is_zero()) {
    if (t.R.is_zero()) return {QPoly(1L), QPoly(), t.P, false};
    if (!t.P.is_zero()) hypothesis("Q = 0 but P R != 0");
    return {QPoly(), QPoly(1L), t.R, false};
  }
  if (t.P.is_zero() || t.R.is_zero()) hypothesis("Q != 0 but P R = 0");
  if (t.R.deg(var) > t.Q.deg(var)) {
    // (R, conj Q, P) = (A' conj A' D, A' B' D, B' conj B' D) gives A = conj B', B = conj A'.
    UnivariateFactors sub = solve_univariate_rec({t.R, conj(t.Q), t.P}, var);
    return {conj(sub.B), conj(sub.A), sub.D, true};
  }
  QDivMod d = divmod_by_real(t.Q, t.R, var);
  UnivariateFactors sub = solve_univariate_rec(transform(t, d.quotient), var);
  return {sub.A + d.quotient * conj(sub.B), sub.B, sub.D, false};
}

}  // namespace

UnivariateFactors solve_univariate(const Triple& t) {
  Var var = univariate_var(t);
  UnivariateFactors out = solve_univariate_rec(t, var);
  Triple check{norm(out.A) * out.D, out.A * out.B * out.D, norm(out.B) * out.D};
  if (!same(check, t, {!is_exact(t), kApproxTolerance})) hypothesis("univariate factors do not reproduce the triple");
  return out;
}

// --- bilinear ------------------------------------------------------------------------------

BilinearSplit split_bilinear(const QPoly& Qp, const RPoly& Pp, const RPoly& R) {
  if (Qp.is_zero()) throw Error(ErrorKind::NoSplit, "cannot split the zero polynomial");
  if (!Qp.in_space(1, 1)) throw Error(ErrorKind::NoSplit, "split needs Q' in H_11");
  if (R.degv() > 0) throw Error(ErrorKind::NoSplit, "split needs R in R[u]");
  const Quaternion q00 = Qp.coeff(0, 0), q10 = Qp.coeff(1, 0), q01 = Qp.coeff(0, 1), q11 = Qp.coeff(1, 1);
  const QPoly u = QPoly::u(), v = QPoly::v();

  auto accept = [&](const QPoly& A1, const QPoly& B, SplitOrder order) -> std::optional<BilinearSplit> {
    QPoly prod = order == SplitOrder::Left ? A1 * B : B * A1;
    if (!(prod == Qp)) return std::nullopt;
    auto d = exact_quotient(R, norm(B));
    if (!d || d->is_zero() || !d->is_constant()) return std::nullopt;
    FieldElement D = d->coeff(0, 0);
    if (!(norm(A1) == Pp * RPoly(D))) return std::nullopt;
    return BilinearSplit{A1, B, order, D};
  };
  // For a pair (x, y) return x^{-1} y (left) or y x^{-1} (right) from whichever
  // of the two equations has an invertible coefficient.
  auto solve_for = [](const Quaternion& a0, const Quaternion& b0, const Quaternion& a1,
                      const Quaternion& b1, bool left) -> std::optional<Quaternion> {
    if (!a0.is_zero()) return left ? a0.inverse() * b0 : b0 * a0.inverse();
    if (!a1.is_zero()) return left ? a1.inverse() * b1 : b1 * a1.inverse();
    return std::nullopt;
  };

  if (Qp.is_constant()) {
    if (auto s = accept(Qp, QPoly(1L), SplitOrder::Left)) return *s;
  }
  // Q' = (q10 + q11 v)(u + beta)
  if (auto beta = solve_for(q10, q00, q11, q01, true)) {
    if (auto s = accept(QPoly(q10) + QPoly(q11) * v, u + QPoly(*beta), SplitOrder::Left)) return *s;
  }
  // Q' = (q01 + q11 u)(v + alpha)
  if (auto alpha = solve_for(q01, q00, q11, q10, true)) {
    if (auto s = accept(v + QPoly(*alpha), QPoly(q01) + QPoly(q11) * u, SplitOrder::Right)) return *s;
  }
  // Q' = (u + beta)(q10 + q11 v)
  if (auto beta = solve_for(q10, q00, q11, q01, false)) {
    if (auto s = accept(QPoly(q10) + QPoly(q11) * v, u + QPoly(*beta), SplitOrder::Right)) return *s;
  }
  // Q' = (v + alpha)(q01 + q11 u)
  if (auto alpha = solve_for(q01, q00, q11, q10, false)) {
    if (auto s = accept(v + QPoly(*alpha), QPoly(q01) + QPoly(q11) * u, SplitOrder::Left)) return *s;
  }
  if (Qp.degu() <= 0) {
    if (auto s = accept(Qp, QPoly(1L), SplitOrder::Left)) return *s;
  }
  throw Error(ErrorKind::NoSplit, "no linear split of " + to_string(Qp));
}

PairFactors solve_bilinear(const Triple& t) {
  if (t.R.degv() > 0 || t.R.degu() > 2) {
    throw Error(ErrorKind::DegreeOutOfRange, "bilinear step needs R in R_20");
  }
  if (t.Q.degv() > 1) throw Error(ErrorKind::DegreeOutOfRange, "bilinear step needs Q in H_*1");
  if (t.R.is_zero()) return {QPoly(1L), QPoly(), t.P, false};
  QDivMod d = divmod_by_real(t.Q, t.R, Var::U);
  const QPoly& T = d.quotient;
  Triple shifted = transform(t, T);
  if (shifted.Q.is_zero()) return {T, QPoly(1L), t.R, false};
  BilinearSplit s = split_bilinear(shifted.Q, shifted.P, t.R);
  FieldElement Dinv = s.D.inverse();
  QPoly A = scaled(s.A1, Dinv);
  if (s.order == SplitOrder::Left) return {A + T * conj(s.B), s.B, RPoly(s.D), false};
  return {s.B, A + conj(s.B) * T, RPoly(s.D), true};
}

// --- linear in v ---------------------------------------------------------------------------

namespace {

struct Reduction {
  Triple reduced;
  std::vector<CertStep> steps;
};

// Cancels common real divisors of Q with R and with P.
Reduction cancel_common(const Triple& t) {
  Reduction out{t, {}};
  if (t.Q.is_zero()) return out;
  for (bool changed = true; changed;) {
    changed = false;
    for (bool with_r : {true, false}) {
      Triple& cur = out.reduced;
      RPoly g = gcd_with_components(cur.Q, with_r ? cur.R : cur.P);
      if (!nonconstant(g)) continue;
      RPoly h = gcd(g, with_r ? cur.P : cur.R);
      CertStep step = nonconstant(h) ? CertStep::divide(h, DivideMode::All)
                                     : CertStep::divide(g, with_r ? DivideMode::QR : DivideMode::PQ);
      try {
        cur = apply_step(cur, step);
      } catch (const Error& e) {
        hypothesis(std::string("common divisor cancellation failed: ") + e.what());
      }
      out.steps.push_back(std::move(step));
      changed = true;
      break;
    }
  }
  return out;
}

// R in R[u], Q in H_*1 coprime to R: (R, Q, P) = (|AC|^2 D, ABCD, |B|^2 D), D constant.
TripleFactors linear_core(const Triple& t, const SolveOptions& opt) {
  if (t.R.degu() <= 2) {
    PairFactors pf = solve_bilinear(t);
    if (!pf.D.is_constant()) hypothesis("bilinear step left a nonconstant divisor");
    if (!pf.swapped) return {QPoly(1L), pf.A, pf.B, pf.D, true};
    return {pf.A, pf.B, QPoly(1L), pf.D, true};
  }
  RealFactorization fac = factor_real_univariate(t.R);
  if (fac.backend == Backend::Approx && !opt.approx) {
    throw Error(ErrorKind::InexactFactorization, "real factors of " + to_string(t.R) + " leave every tower");
  }
  const RPoly& Rp = fac.factors.front().factor;
  RPoly Rpp;
  if (auto q = exact_quotient(t.R, Rp)) {
    Rpp = *q;
  } else {
    hypothesis("real factor does not divide R");
  }
  PairFactors pf = solve_bilinear({t.P * Rpp, t.Q, Rp});
  if (!pf.D.is_constant()) hypothesis("bilinear step left a nonconstant divisor");
  FieldElement d = pf.D.coeff(0, 0);
  // Q' carries the norm R', Q'' the rest; Q = Q''Q' unless swapped.
  QPoly Qp = pf.swapped ? pf.A : pf.B;
  QPoly Qpp = scaled(pf.swapped ? pf.B : pf.A, d);
  TripleFactors sub = linear_core({t.P, Qpp, Rpp * RPoly(d)}, opt);
  if (pf.swapped) {
    sub.A = Qp * sub.A;
  } else {
    sub.C = sub.C * Qp;
  }
  return sub;
}

struct Oriented {
  TripleFactors f;
  bool relabeled = false;
};

// Q coprime to both P and R.
Oriented solve_reduced(const Triple& t, bool prefer_swapped, const SolveOptions& opt) {
  if (t.Q.is_zero()) {
    if (t.R.is_zero()) return {{QPoly(1L), QPoly(), QPoly(1L), t.P, false}};
    return {{QPoly(1L), QPoly(), QPoly(1L), t.R, true}};
  }
  if (t.Q.degv() > 1) throw Error(ErrorKind::DegreeOutOfRange, "Q must have degree <= 1 in v");
  if (t.Q.degv() <= 0) {
    UnivariateFactors uf = solve_univariate(t);
    if (prefer_swapped) return {{QPoly(1L), uf.A, uf.B, uf.D, true}, uf.relabeled};
    return {{uf.A, uf.B, QPoly(1L), uf.D, false}, uf.relabeled};
  }
  if (t.R.degv() <= 0) return {linear_core(t, opt)};
  if (t.P.degv() <= 0) {
    TripleFactors f = linear_core(swap_pr(t), opt);
    f.swapped = false;
    return {f};
  }
  hypothesis("neither P nor R lies in R[u] after cancelling common divisors");
}

Triple oriented_triple(const TripleFactors& f) {
  Triple t = triple_from_factors(f.A, f.B, f.C, f.D);
  return f.swapped ? swap_pr(t) : t;
}

}  // namespace

SolveCertificate solve_linear_in_v(const Triple& t, const SolveOptions& opt) {
  t.validate();
  if (t.Q.degv() > 1) throw Error(ErrorKind::DegreeOutOfRange, "Q must have degree <= 1 in v");
  Reduction red = cancel_common(t);
  Oriented o = solve_reduced(red.reduced, false, opt);
  SolveCertificate cert;
  cert.transforms = std::move(red.steps);
  if (o.relabeled) cert.transforms.push_back(CertStep::relabel());
  if (o.f.swapped) cert.transforms.push_back(CertStep::swap());
  cert.A = o.f.A;
  cert.B = o.f.B;
  cert.C = o.f.C;
  cert.D = o.f.D;
  cert.backend = cert.A.is_exact() && cert.B.is_exact() && cert.C.is_exact() && cert.D.is_exact()
                     ? Backend::Exact
                     : Backend::Approx;
  if (!verify_certificate(t, cert, {opt.approx || cert.backend == Backend::Approx, opt.tol})) {
    hypothesis("certificate replay failed");
  }
  return cert;
}

TripleFactors factor_linear_in_v(const Triple& t, bool prefer_swapped, const SolveOptions& opt) {
  if (t.Q.degv() > 1) throw Error(ErrorKind::DegreeOutOfRange, "Q must have degree <= 1 in v");
  Reduction red = cancel_common(t);
  // Divisors involving v can only be folded into B, so they fix the orientation.
  bool want_plain = false, want_swapped = false;
  for (const auto& s : red.steps) {
    if (s.D.degv() <= 0) continue;
    if (s.mode == DivideMode::QR) want_plain = true;
    if (s.mode == DivideMode::PQ) want_swapped = true;
  }
  bool prefer = want_swapped ? true : want_plain ? false : prefer_swapped;
  TripleFactors f = solve_reduced(red.reduced, prefer, opt).f;
  for (auto it = red.steps.rbegin(); it != red.steps.rend(); ++it) {
    const RPoly& g = it->D;
    if (it->mode == DivideMode::All) {
      f.D = f.D * g;
      continue;
    }
    bool to_b = (it->mode == DivideMode::QR) != f.swapped;
    if (to_b) {
      f.B = g * f.B;
    } else {
      if (g.degv() > 0) hypothesis("a divisor involving v cannot join the u-only factors");
      f.A = g * f.A;
    }
  }
  if (!same(oriented_triple(f), t, {opt.approx || !is_exact(t), opt.tol})) {
    hypothesis("folded factors do not reproduce the triple");
  }
  return f;
}

// --- degree (2,2) -------------------------------------------------------------------------

namespace {

SolveCertificate finish(const Triple& t0, SolveCertificate cert, const SolveOptions& opt) {
  cert.backend = cert.A.is_exact() && cert.B.is_exact() && cert.C.is_exact() && cert.D.is_exact()
                     ? Backend::Exact
                     : Backend::Approx;
  for (const auto& s : cert.transforms) {
    if (s.kind == StepKind::ShiftByT && !s.T.is_constant()) hypothesis("certificate shift is not constant");
  }
  if (!verify_certificate(t0, cert, {opt.approx || cert.backend == Backend::Approx, opt.tol})) {
    hypothesis("certificate replay failed");
  }
  if (!cert.A.in_space(1, 1) || !cert.B.in_space(1, 1) || !cert.C.in_space(1, 1) ||
      !cert.D.in_space(2, 2)) {
    hypothesis("factors leave H_11");
  }
  return cert;
}

}  // namespace

SolveCertificate solve_22(const PythTuple& x, const SolveOptions& opt) {
  if (!x.in_space(2, 2)) throw Error(ErrorKind::DegreeOutOfRange, "tuple must lie in R_22");
  const Triple t0 = tuple_to_triple(x);
  SolveCertificate cert;
  Triple t = t0;

  if (t.Q.is_zero()) {
    if (t.R.is_zero()) {
      cert.D = t.P;
    } else {
      cert.transforms.push_back(CertStep::swap());
      cert.D = t.R;
    }
    cert.A = QPoly(1L);
    cert.C = QPoly(1L);
    return finish(t0, cert, opt);
  }

  RPoly h = gcd_with_components(t.Q, gcd(t.P, t.R));
  if (nonconstant(h)) {
    cert.transforms.push_back(CertStep::divide(h, DivideMode::All));
    t = divide_common(t, h, DivideMode::All);
  }

  auto adopt = [&](const SolveCertificate& sub, bool swap_back) {
    for (const auto& s : sub.transforms) cert.transforms.push_back(swap_back ? swap_vars(s) : s);
    cert.A = swap_back ? sub.A.swapped_vars() : sub.A;
    cert.B = swap_back ? sub.B.swapped_vars() : sub.B;
    cert.C = swap_back ? sub.C.swapped_vars() : sub.C;
    cert.D = swap_back ? sub.D.swapped_vars() : sub.D;
  };
  if (t.Q.degv() <= 1) {
    adopt(solve_linear_in_v(t, opt), false);
    return finish(t0, cert, opt);
  }
  if (t.Q.degu() <= 1) {
    adopt(solve_linear_in_v(swap_vars(t), opt), true);
    return finish(t0, cert, opt);
  }

  // Kill the leading term of the v^2 coefficient with a constant shift.
  QPoly Q2 = t.Q.coeff_in(Var::V, 2);
  if (Q2.degu() == 2) {
    FieldElement r22 = t.R.coeff(2, 2);
    if (r22.is_zero()) hypothesis("leading coefficient of R vanishes");
    QPoly T(Q2.coeff(2, 0) * r22.inverse());
    cert.transforms.push_back(CertStep::shift(T));
    t = transform(t, T);
  }
  if (t.R.coeff_in(Var::V, 2).degu() > 1) {
    cert.transforms.push_back(CertStep::swap());
    t = swap_pr(t);
  }
  Q2 = t.Q.coeff_in(Var::V, 2);
  RPoly P2 = t.P.coeff_in(Var::V, 2);
  RPoly R2 = t.R.coeff_in(Var::V, 2);
  if (R2.degu() > 1) hypothesis("both P and R have quadratic v^2 coefficients");

  // T in H_10 with Q2 = T R2.
  QPoly T;
  if (!Q2.is_zero()) {
    UnivariateFactors uf = solve_univariate({P2, Q2, R2});
    if (!uf.B.is_constant() || uf.B.is_zero()) hypothesis("Q2 is not a multiple of R2");
    Quaternion b = uf.B.coeff(0, 0);
    T = uf.A * QPoly(b * b.norm().inverse());
    if (!(T * R2 == Q2)) hypothesis("Q2 is not a multiple of R2");
  }
  Triple shifted = transform(t, T);
  TripleFactors f = factor_linear_in_v(shifted, false, opt);
  if (f.swapped) hypothesis("R is not the norm side after the shift");

  Quaternion Tp;
  if (T.is_zero()) {
    // Q already factors; nothing to absorb.
  } else if (f.A.degu() <= 1) {
    QDivMod d = left_divmod(T, f.A, Var::U);
    if (!d.remainder.is_constant()) hypothesis("left remainder is not constant");
    Tp = d.remainder.coeff(0, 0);
    f.C = f.C + conj(f.B) * d.quotient;
  } else if (f.C.degu() <= 1) {
    QDivMod d = right_divmod(T, f.C, Var::U);
    if (!d.remainder.is_constant()) hypothesis("right remainder is not constant");
    Tp = d.remainder.coeff(0, 0);
    f.A = f.A + d.quotient * conj(f.B);
  } else {
    hypothesis("neither A nor C has degree <= 1");
  }
  if (!Tp.is_zero()) cert.transforms.push_back(CertStep::shift(QPoly(Tp)));
  cert.A = f.A;
  cert.B = f.B;
  cert.C = f.C;
  cert.D = f.D;
  return finish(t0, cert, opt);
}

// --- reducibility --------------------------------------------------------------------------

ReducibilityResult is_reducible_linear_v(const QPoly& Q) {
  if (Q.is_zero()) throw Error(ErrorKind::DegreeOutOfRange, "reducibility of the zero polynomial");
  if (Q.degv() > 1) throw Error(ErrorKind::DegreeOutOfRange, "Q must have degree <= 1 in v");
  ReducibilityResult out;

  Quaternion q0 = Q.leading_coefficient();
  QPoly normalized = Q * QPoly(q0.inverse());
  if (is_real(normalized)) {
    out.kind = Reducibility::RealTimesConstant;
    return out;
  }
  RPoly g = gcd_with_components(Q, RPoly());
  if (nonconstant(g)) {
    out.kind = Reducibility::Reducible;
    out.factors = {to_qpoly(g), *exact_quotient(Q, g)};
    return out;
  }
  // A nontrivial factorization has a factor in H[u], whose norm divides the
  // content of |Q|^2 over K[u].
  RPoly N = norm(Q);
  RPoly content;
  for (int k = 0; k <= N.degv(); ++k) content = gcd(content, N.coeff_in(Var::V, k));
  if (!nonconstant(content)) return out;
  RealFactorization fac = factor_real_univariate(content);
  for (const auto& rf : fac.factors) {
    auto rest = exact_quotient(N, rf.factor);
    if (!rest) continue;
    try {
      Triple t{*rest, Q, rf.factor};
      PairFactors pf = Q.degv() <= 0 ? [&] {
        UnivariateFactors uf = solve_univariate(t);
        return PairFactors{uf.A, uf.B, uf.D, false};
      }()
                                     : solve_bilinear(t);
      if (!pf.D.is_constant()) continue;
      QPoly left = pf.A;
      QPoly right = pf.B * pf.D;
      if (left.is_constant() || right.is_constant()) continue;
      if (!(left * right == Q)) continue;
      out.kind = Reducibility::Reducible;
      out.factors = {left, right};
      return out;
    } catch (const Error&) {
    }
  }
  return out;
}

std::string to_string(StepKind kind) {
  switch (kind) {
    case StepKind::ShiftByT: return "shift";
    case StepKind::SwapPR: return "swap";
    case StepKind::DivideCommon: return "divide";
    case StepKind::Relabel: return "relabel";
  }
  return "?";
}

std::string to_string(DivideMode mode) {
  switch (mode) {
    case DivideMode::All: return "all";
    case DivideMode::QR: return "qr";
    case DivideMode::PQ: return "pq";
  }
  return "?";
}

std::string to_string(Reducibility kind) {
  switch (kind) {
    case Reducibility::Reducible: return "Reducible";
    case Reducibility::RealTimesConstant: return "RealTimesConstant";
    case Reducibility::Irreducible: return "Irreducible";
  }
  return "?";
}

}  // namespace pythsix
