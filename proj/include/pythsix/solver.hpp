#pragma once

// Solving Q * conj(Q) = P * R: elementary transformations, the univariate,
// bilinear and linear-in-v factorization steps, and the degree-(2,2) solver
// for Pythagorean 6-tuples with a replayable certificate.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pythsix/poly.hpp"

namespace pythsix {

struct Triple {
  RPoly P;
  QPoly Q;
  RPoly R;

  /// Q * conj(Q) == P * R (tolerance-aware when coefficients are approximate).
  bool holds() const;
  /// Throws InvariantViolated when the equation fails.
  void validate() const;
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Six real polynomials X1..X6; index 0 holds X1.
struct PythTuple {
  std::array<RPoly, 6> X;

  /// X1^2 + X2^2 + X3^2 + X4^2 + X5^2 - X6^2.
  RPoly residual() const;
  bool holds() const { return residual().is_zero(); }
  bool in_space(int m, int n) const;
  friend bool operator==(const PythTuple&, const PythTuple&) = default;
};

enum class StepKind { ShiftByT, SwapPR, DivideCommon, Relabel };

/// How DivideCommon divides: All -> (P, Q, R) / D; QR -> (P, Q / D, R / D^2);
/// PQ -> (P / D^2, Q / D, R).
enum class DivideMode { All, QR, PQ };

struct CertStep {
  StepKind kind = StepKind::Relabel;
  QPoly T;  // ShiftByT
  RPoly D;  // DivideCommon
  DivideMode mode = DivideMode::All;

  static CertStep shift(QPoly t) { return {StepKind::ShiftByT, std::move(t), {}, DivideMode::All}; }
  static CertStep swap() { return {StepKind::SwapPR, {}, {}, DivideMode::All}; }
  static CertStep divide(RPoly d, DivideMode m) { return {StepKind::DivideCommon, {}, std::move(d), m}; }
  static CertStep relabel() { return {StepKind::Relabel, {}, {}, DivideMode::All}; }
  friend bool operator==(const CertStep&, const CertStep&) = default;
};

/// Replaying `transforms` on the input triple gives (|AC|^2 D, ABCD, |B|^2 D).
struct SolveCertificate {
  QPoly A, B, C;
  RPoly D;
  std::vector<CertStep> transforms;
  Backend backend = Backend::Exact;
};

struct SolveOptions {
  /// Accept float-backend real factorizations and check identities to `tol`.
  bool approx = false;
  double tol = 1e-9;
};

// --- transformations -----------------------------------------------------------

/// (P, Q, R) -> (P - T conj(Q) - Q conj(T) + T R conj(T), Q - T R, R).
Triple transform(const Triple& t, const QPoly& T);
Triple swap_pr(const Triple& t);
/// Throws ConstraintViolated when D does not divide as the mode requires.
Triple divide_common(const Triple& t, const RPoly& D, DivideMode mode);
Triple apply_step(const Triple& t, const CertStep& step);
Triple replay(const Triple& t, const std::vector<CertStep>& steps);

/// (|AC|^2 D, ABCD, |B|^2 D).
Triple triple_from_factors(const QPoly& A, const QPoly& B, const QPoly& C, const RPoly& D);

/// True when replaying the certificate on t reproduces its factors.
bool verify_certificate(const Triple& t, const SolveCertificate& cert, const SolveOptions& opt = {});

// --- tuples --------------------------------------------------------------------

/// Q = X1 + i X2 + j X3 + k X4, P = X6 - X5, R = X6 + X5. Throws InvariantViolated.
Triple tuple_to_triple(const PythTuple& x);
PythTuple triple_to_tuple(const Triple& t);

/// X1 + i X2 + j X3 + k X4 = 2ABCD, X5 = (|B|^2 - |AC|^2) D, X6 = (|B|^2 + |AC|^2) D.
/// With require_22 set, throws ConstraintViolated unless every X lies in R_22.
PythTuple tuple_from_ABCD(const QPoly& A, const QPoly& B, const QPoly& C, const RPoly& D,
                          bool require_22 = false);

// --- lemma-level solvers ---------------------------------------------------------

struct UnivariateFactors {
  QPoly A, B;
  RPoly D;
  bool relabeled = false;  // the top-level division went through P
};

/// (P, Q, R) = (A conj(A) D, A B D, B conj(B) D) for univariate inputs.
UnivariateFactors solve_univariate(const Triple& t);

enum class SplitOrder { Left, Right };  // Left: Q' = A' B, Right: Q' = B A'

struct BilinearSplit {
  QPoly A1;  // in v
  QPoly B;   // in u
  SplitOrder order = SplitOrder::Left;
  FieldElement D;  // R / |B|^2
};

/// Q' in H_11 with Q' conj(Q') = P' R, R in R[u] of degree <= 2. Throws NoSplit.
BilinearSplit split_bilinear(const QPoly& Qp, const RPoly& Pp, const RPoly& R);

/// Factors (A, B, D) with (P, Q, R) = (A conj(A) D, A B D, B conj(B) D) when
/// `swapped` is false, and (R, Q, P) equal to it otherwise.
struct PairFactors {
  QPoly A, B;
  RPoly D;
  bool swapped = false;
};

/// Q in H_*1, R in R[u] with deg R <= 2.
PairFactors solve_bilinear(const Triple& t);

/// Factors (A, B, C, D) with (P, Q, R) = (|AC|^2 D, ABCD, |B|^2 D) when
/// `swapped` is false, and (R, Q, P) equal to it otherwise.
struct TripleFactors {
  QPoly A, B, C;
  RPoly D;
  bool swapped = false;
};

/// Certificate for Q in H_*1: DivideCommon steps, optional SwapPR, and
/// A, C in H[u], B in H[u, v].
SolveCertificate solve_linear_in_v(const Triple& t, const SolveOptions& opt = {});

/// Factorization of the triple itself (common divisors folded back into the
/// factors). `prefer_swapped` breaks ties when both orientations work.
TripleFactors factor_linear_in_v(const Triple& t, bool prefer_swapped = false,
                                 const SolveOptions& opt = {});

/// Degree-(2,2) Pythagorean 6-tuples: certificate with constant shifts,
/// SwapPR and DivideCommon only; A, B, C in H_11.
SolveCertificate solve_22(const PythTuple& x, const SolveOptions& opt = {});

// --- reducibility ----------------------------------------------------------------

enum class Reducibility { Reducible, RealTimesConstant, Irreducible };

struct ReducibilityResult {
  Reducibility kind = Reducibility::Irreducible;
  std::vector<QPoly> factors;  // nontrivial factors with product Q when Reducible
};

/// Decides reducibility of Q in H_*1 through the factorization of its norm.
ReducibilityResult is_reducible_linear_v(const QPoly& Q);

std::string to_string(StepKind kind);
std::string to_string(DivideMode mode);
std::string to_string(Reducibility kind);

}  // namespace pythsix
