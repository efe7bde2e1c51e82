#pragma once

// Exact arithmetic in Q(sqrt(p1), ..., sqrt(pk)) for at most four primes,
// with a binary64 fallback for values that leave every such tower.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pythsix/errors.hpp"

namespace pythsix {

using BigInt = mpz_class;
using Rational = mpq_class;

enum class Backend { Exact, Approx };

/// Absolute tolerance used by the approximate backend for zero tests.
inline constexpr double kApproxTolerance = 1e-9;

/// A multi-quadratic extension of the rationals, generated by square roots of
/// distinct primes. Any square-free radicand d is a product of generators, so
/// the basis {sqrt(d) : d | p1...pk} is linearly independent over Q.
class FieldTower {
 public:
  static constexpr std::size_t kMaxDepth = 4;

  FieldTower() = default;
  explicit FieldTower(std::vector<std::uint32_t> primes);

  const std::vector<std::uint32_t>& primes() const noexcept { return primes_; }
  std::size_t depth() const noexcept { return primes_.size(); }
  bool is_rational() const noexcept { return primes_.empty(); }

  /// True when `other` embeds in this tower.
  bool contains(const FieldTower& other) const;

  /// Smallest tower containing both; throws `on_overflow` beyond kMaxDepth.
  static FieldTower join(const FieldTower& a, const FieldTower& b,
                         ErrorKind on_overflow = ErrorKind::IncompatibleTowers);

  friend bool operator==(const FieldTower&, const FieldTower&) = default;

 private:
  std::vector<std::uint32_t> primes_;
};

class FieldElement {
 public:
  /// (square-free radicand, rational coefficient), sorted by radicand; the
  /// radicand 1 carries the rational part.
  using Term = std::pair<std::uint64_t, Rational>;

  FieldElement() = default;
  FieldElement(long value);  // NOLINT(google-explicit-constructor)
  FieldElement(const Rational& value);  // NOLINT(google-explicit-constructor)
  FieldElement(long num, long den);

  /// sqrt(n) for a positive integer n, reduced to c*sqrt(squarefree).
  static FieldElement sqrt_of_integer(const BigInt& n);
  static FieldElement approx(double value);
  /// Parses the canonical text form, e.g. "1/2 - 3*sqrt(2)" or "~0.25".
  static FieldElement parse(std::string_view text);

  std::string to_string() const;

  Backend backend() const noexcept { return approx_ ? Backend::Approx : Backend::Exact; }
  bool is_exact() const noexcept { return !approx_; }
  const FieldTower& tower() const noexcept { return tower_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Rational part (coefficient of sqrt(1)).
  Rational rational_part() const;
  /// Coefficient of sqrt(d); zero when absent.
  Rational coefficient(std::uint64_t radicand) const;

  /// Exact sign by interval refinement (tolerance-based for the approx backend).
  int sign() const;
  /// Correctly rounded binary64 value.
  double to_double() const;

  FieldElement inverse() const;
  /// Galois conjugate negating sqrt(prime).
  FieldElement conjugate(std::uint32_t prime) const;
  /// Same value viewed in a larger tower.
  FieldElement promoted(const FieldTower& tower) const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  /// Structural for exact values; tolerance comparison if either is approximate.
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  FieldTower tower_;
  std::vector<Term> terms_;
  bool approx_ = false;
  double value_ = 0.0;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

/// Square root in the smallest tower extending a's tower. No extension happens
/// when a is already a square there.
/// Throws NegativeRadicand, TowerDepthExceeded, or NotRepresentable.
FieldElement sqrt_adjoin(const FieldElement& a);

inline double to_float(const FieldElement& a) { return a.to_double(); }

/// n = s^2 * m with m square-free; `primes` are the prime factors of m.
struct SquarefreeSplit {
  BigInt square_root;
  std::uint64_t squarefree = 1;
  std::vector<std::uint32_t> primes;
};

/// Throws NotRepresentable when n has a large factor that cannot be classified.
SquarefreeSplit squarefree_split(const BigInt& n);

}  // namespace pythsix
