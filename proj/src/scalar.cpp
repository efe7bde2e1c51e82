#include "pythsix/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace pythsix {

namespace {

constexpr std::uint32_t kTrialDivisionLimit = 1u << 20;

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// [lo, hi] enclosing sum c_d sqrt(d), using sqrt(d) known to `bits` bits.
std::pair<Rational, Rational> enclose(const std::vector<FieldElement::Term>& terms,
                                      unsigned long bits) {
  Rational lo = 0;
  Rational hi = 0;
  BigInt scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits);
  for (const auto& [d, c] : terms) {
    if (d == 1) {
      lo += c;
      hi += c;
      continue;
    }
    BigInt n = d;
    mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), 2 * bits);
    BigInt s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    Rational r_lo(s, scale);
    Rational r_hi(s + 1, scale);
    r_lo.canonicalize();
    r_hi.canonicalize();
    if (sgn(c) > 0) {
      lo += c * r_lo;
      hi += c * r_hi;
    } else {
      lo += c * r_hi;
      hi += c * r_lo;
    }
  }
  return {lo, hi};
}

double nearest_double(const Rational& target) {
  double d = target.get_d();
  double best = d;
  Rational best_err = abs(Rational(d) - target);
  for (double cand : {std::nextafter(d, -INFINITY), std::nextafter(d, INFINITY)}) {
    if (!std::isfinite(cand)) continue;
    Rational err = abs(Rational(cand) - target);
    if (err < best_err) {
      best_err = err;
      best = cand;
    }
  }
  return best;
}

std::string rational_text(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// --- text parsing -----------------------------------------------------------

class TermParser {
 public:
  explicit TermParser(std::string_view s) : s_(s) {}

  FieldElement parse() {
    skip_ws();
    if (at_end()) fail("empty field element");
    if (peek() == '~') {
      ++pos_;
      std::string rest(s_.substr(pos_));
      try {
        std::size_t used = 0;
        double v = std::stod(rest, &used);
        pos_ += used;
        skip_ws();
        if (!at_end()) fail("trailing characters");
        return FieldElement::approx(v);
      } catch (const std::logic_error&) {
        fail("bad approximate literal");
      }
    }
    FieldElement sum;
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      FieldElement term = parse_term();
      sum += sign < 0 ? -term : term;
      first = false;
    }
    if (first) fail("empty field element");
    return sum;
  }

 private:
  FieldElement parse_term() {
    if (match_word("sqrt")) return parse_sqrt_body();
    Rational coef = parse_rational();
    skip_ws();
    if (!at_end() && peek() == '*') {
      ++pos_;
      skip_ws();
      if (!match_word("sqrt")) fail("expected sqrt after '*'");
      return FieldElement(coef) * parse_sqrt_body();
    }
    return FieldElement(coef);
  }

  FieldElement parse_sqrt_body() {
    skip_ws();
    expect('(');
    skip_ws();
    BigInt n = parse_integer();
    skip_ws();
    expect(')');
    if (sgn(n) <= 0) fail("sqrt of a non-positive integer");
    return FieldElement::sqrt_of_integer(n);
  }

  Rational parse_rational() {
    BigInt num = parse_integer();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      BigInt den = parse_integer();
      if (den == 0) fail("zero denominator");
      Rational q(num, den);
      q.canonicalize();
      return q;
    }
    return Rational(num);
  }

  BigInt parse_integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  bool match_word(std::string_view w) {
    if (s_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError,
                msg + " in \"" + std::string(s_) + "\" at offset " + std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::optional<FieldElement> sqrt_exact(const FieldElement& a, int depth = 0);

}  // namespace

// --- FieldTower ---------------------------------------------------------------

FieldTower::FieldTower(std::vector<std::uint32_t> primes) : primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
  if (primes_.size() > kMaxDepth) {
    throw Error(ErrorKind::TowerDepthExceeded,
                "tower needs " + std::to_string(primes_.size()) + " radicals");
  }
  for (auto p : primes_) {
    if (p < 2 || !mpz_probab_prime_p(BigInt(p).get_mpz_t(), 25)) {
      throw Error(ErrorKind::InvariantViolated,
                  "tower generator " + std::to_string(p) + " is not prime");
    }
  }
}

bool FieldTower::contains(const FieldTower& other) const {
  return std::includes(primes_.begin(), primes_.end(), other.primes_.begin(),
                       other.primes_.end());
}

FieldTower FieldTower::join(const FieldTower& a, const FieldTower& b, ErrorKind on_overflow) {
  if (a.contains(b)) return a;
  if (b.contains(a)) return b;
  std::vector<std::uint32_t> merged;
  std::set_union(a.primes_.begin(), a.primes_.end(), b.primes_.begin(), b.primes_.end(),
                 std::back_inserter(merged));
  if (merged.size() > kMaxDepth) {
    throw Error(on_overflow, "joined tower would need " + std::to_string(merged.size()) +
                                 " radicals (max " + std::to_string(kMaxDepth) + ")");
  }
  FieldTower out;
  out.primes_ = std::move(merged);
  return out;
}

// --- squarefree decomposition ---------------------------------------------------

SquarefreeSplit squarefree_split(const BigInt& n_in) {
  if (sgn(n_in) <= 0) throw Error(ErrorKind::NegativeRadicand, "squarefree_split of " + n_in.get_str());
  SquarefreeSplit out;
  out.square_root = 1;
  BigInt n = n_in;
  BigInt squarefree = 1;
  for (std::uint32_t p = 2; p < kTrialDivisionLimit; p += (p == 2 ? 1 : 2)) {
    if (BigInt(p) * p > n) break;
    unsigned mult = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++mult;
    }
    for (unsigned k = 0; k + 1 < mult; k += 2) out.square_root *= p;
    if (mult % 2 == 1) {
      squarefree *= p;
      out.primes.push_back(p);
    }
  }
  if (n > 1) {
    if (mpz_perfect_square_p(n.get_mpz_t())) {
      BigInt r;
      mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
      out.square_root *= r;
    } else if (n < BigInt(1u << 31) * 2 && mpz_probab_prime_p(n.get_mpz_t(), 25)) {
      squarefree *= n;
      out.primes.push_back(static_cast<std::uint32_t>(n.get_ui()));
    } else {
      throw Error(ErrorKind::NotRepresentable,
                  "cannot classify large cofactor " + n.get_str() + " of " + n_in.get_str());
    }
  }
  if (!squarefree.fits_ulong_p()) {
    throw Error(ErrorKind::NotRepresentable, "radicand too large: " + squarefree.get_str());
  }
  out.squarefree = squarefree.get_ui();
  std::sort(out.primes.begin(), out.primes.end());
  return out;
}

// --- FieldElement ---------------------------------------------------------------

FieldElement::FieldElement(long value) {
  if (value != 0) terms_.emplace_back(1, Rational(value));
}

FieldElement::FieldElement(const Rational& value) {
  if (sgn(value) != 0) terms_.emplace_back(1, value);
}

FieldElement::FieldElement(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  if (sgn(q) != 0) terms_.emplace_back(1, q);
}

FieldElement FieldElement::sqrt_of_integer(const BigInt& n) {
  if (sgn(n) < 0) throw Error(ErrorKind::NegativeRadicand, "sqrt(" + n.get_str() + ")");
  FieldElement out;
  if (sgn(n) == 0) return out;
  SquarefreeSplit split = squarefree_split(n);
  out.tower_ = FieldTower(split.primes);
  out.terms_.emplace_back(split.squarefree, Rational(split.square_root));
  return out;
}

FieldElement FieldElement::approx(double value) {
  FieldElement out;
  out.approx_ = true;
  out.value_ = value;
  return out;
}

FieldElement FieldElement::parse(std::string_view text) { return TermParser(text).parse(); }

std::string FieldElement::to_string() const {
  if (approx_) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "~%.17g", value_);
    return buf;
  }
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    bool neg = sgn(c) < 0;
    Rational mag = abs(c);
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (d == 1) {
      out += rational_text(mag);
    } else {
      if (mag != 1) out += rational_text(mag) + "*";
      out += "sqrt(" + std::to_string(d) + ")";
    }
  }
  return out;
}

bool FieldElement::is_zero() const {
  if (approx_) return std::abs(value_) <= kApproxTolerance;
  return terms_.empty();
}

bool FieldElement::is_one() const {
  if (approx_) return std::abs(value_ - 1.0) <= kApproxTolerance;
  return terms_.size() == 1 && terms_[0].first == 1 && terms_[0].second == 1;
}

bool FieldElement::is_rational() const {
  return !approx_ && (terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1));
}

Rational FieldElement::rational_part() const { return coefficient(1); }

Rational FieldElement::coefficient(std::uint64_t radicand) const {
  for (const auto& [d, c] : terms_) {
    if (d == radicand) return c;
  }
  return Rational(0);
}

int FieldElement::sign() const {
  if (approx_) {
    if (value_ > kApproxTolerance) return 1;
    if (value_ < -kApproxTolerance) return -1;
    return 0;
  }
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return sgn(terms_[0].second);
  // Nonzero since the sqrt(d) basis is independent; refinement terminates.
  for (unsigned long bits = 32;; bits *= 2) {
    auto [lo, hi] = enclose(terms_, bits);
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
  }
}

double FieldElement::to_double() const {
  if (approx_) return value_;
  if (terms_.empty()) return 0.0;
  if (is_rational()) return nearest_double(terms_[0].second);
  for (unsigned long bits = 64;; bits *= 2) {
    auto [lo, hi] = enclose(terms_, bits);
    Rational mid = (lo + hi) / 2;
    Rational width = hi - lo;
    // Enclosure well under a quarter ulp: rounding mid is rounding the value.
    if (sgn(mid) != 0 && width * (Rational(1) << 60) < abs(mid)) return nearest_double(mid);
  }
}

FieldElement FieldElement::conjugate(std::uint32_t prime) const {
  FieldElement out = *this;
  if (approx_) return out;
  for (auto& [d, c] : out.terms_) {
    if (d % prime == 0) c = -c;
  }
  return out;
}

FieldElement FieldElement::promoted(const FieldTower& tower) const {
  FieldElement out = *this;
  out.tower_ = FieldTower::join(tower_, tower);
  return out;
}

FieldElement FieldElement::inverse() const {
  if (approx_) {
    if (std::abs(value_) <= kApproxTolerance) throw Error(ErrorKind::DivisionByZero, "inverse of ~0");
    return approx(1.0 / value_);
  }
  if (terms_.empty()) throw Error(ErrorKind::DivisionByZero, "inverse of 0");
  // Multiply by conjugates until the element is rational.
  FieldElement x = *this;
  FieldElement num(1L);
  num.tower_ = tower_;
  for (auto p : tower_.primes()) {
    bool involves = std::any_of(x.terms_.begin(), x.terms_.end(),
                                [p](const Term& t) { return t.first % p == 0; });
    if (!involves) continue;
    FieldElement c = x.conjugate(p);
    num *= c;
    x *= c;
  }
  Rational r = x.rational_part();
  FieldElement out = num * FieldElement(Rational(1) / r);
  out.tower_ = tower_;
  return out;
}

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  out.value_ = -value_;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  if (approx_ || rhs.approx_) {
    *this = approx(to_double() + rhs.to_double());
    return *this;
  }
  tower_ = FieldTower::join(tower_, rhs.tower_);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Rational s = a->second + b->second;
      if (sgn(s) != 0) merged.emplace_back(a->first, s);
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) { return *this += -rhs; }

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  if (approx_ || rhs.approx_) {
    *this = approx(to_double() * rhs.to_double());
    return *this;
  }
  tower_ = FieldTower::join(tower_, rhs.tower_);
  if (terms_.empty() || rhs.terms_.empty()) {
    terms_.clear();
    return *this;
  }
  if (terms_.size() == 1 && rhs.terms_.size() == 1 && terms_[0].first == 1 &&
      rhs.terms_[0].first == 1) {
    terms_[0].second *= rhs.terms_[0].second;
    return *this;
  }
  std::map<std::uint64_t, Rational> acc;
  for (const auto& [d1, c1] : terms_) {
    for (const auto& [d2, c2] : rhs.terms_) {
      std::uint64_t g = gcd_u64(d1, d2);
      std::uint64_t d = (d1 / g) * (d2 / g);
      acc[d] += c1 * c2 * Rational(static_cast<unsigned long>(g));
    }
  }
  terms_.clear();
  for (auto& [d, c] : acc) {
    if (sgn(c) != 0) terms_.emplace_back(d, std::move(c));
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) { return *this *= rhs.inverse(); }

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (a.approx_ || b.approx_) {
    double x = a.to_double();
    double y = b.to_double();
    double scale = std::max({1.0, std::abs(x), std::abs(y)});
    return std::abs(x - y) <= kApproxTolerance * scale;
  }
  return a.terms_ == b.terms_;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.to_string(); }

// --- square roots -------------------------------------------------------------

namespace {

// Each level removes one generator but the inner roots may adjoin new ones;
// 2 * kMaxDepth levels is more than any representable root needs.
constexpr int kMaxSqrtDepth = 2 * static_cast<int>(FieldTower::kMaxDepth);

std::optional<FieldElement> sqrt_exact(const FieldElement& a, int depth) {
  if (depth > kMaxSqrtDepth) return std::nullopt;
  int s = a.sign();
  if (s < 0) throw Error(ErrorKind::NegativeRadicand, "sqrt of negative " + a.to_string());
  if (s == 0) return FieldElement();
  if (a.is_rational()) {
    Rational q = a.rational_part();
    BigInt nd = q.get_num() * q.get_den();
    SquarefreeSplit split = squarefree_split(nd);
    FieldTower extra(split.primes);
    FieldTower::join(a.tower(), extra, ErrorKind::TowerDepthExceeded);
    Rational coef(split.square_root, q.get_den());
    coef.canonicalize();
    FieldElement root = split.squarefree == 1
                            ? FieldElement(coef)
                            : FieldElement(coef) * FieldElement::sqrt_of_integer(split.squarefree);
    return root.promoted(a.tower());
  }
  // a = x + y*sqrt(p), where p is the largest prime in a's support.
  std::uint32_t p = 0;
  for (auto prime : a.tower().primes()) {
    for (const auto& [d, c] : a.terms()) {
      if (d % prime == 0) p = std::max(p, prime);
    }
  }
  FieldElement x;
  FieldElement y;
  for (const auto& [d, c] : a.terms()) {
    FieldElement term = d == 1 ? FieldElement(c) : FieldElement(c) * FieldElement::sqrt_of_integer(d);
    if (d % p == 0) {
      y += FieldElement(c) * (d / p == 1 ? FieldElement(1L) : FieldElement::sqrt_of_integer(d / p));
    } else {
      x += term;
    }
  }
  FieldElement norm = x * x - FieldElement(static_cast<long>(p)) * y * y;
  if (norm.sign() < 0) return std::nullopt;
  auto n = sqrt_exact(norm, depth + 1);
  if (!n) return std::nullopt;
  FieldElement sqrt_p = FieldElement::sqrt_of_integer(p);
  for (const FieldElement& s2 : {(x + *n) / FieldElement(2L), (x - *n) / FieldElement(2L)}) {
    if (s2.sign() <= 0) continue;
    auto root_s = sqrt_exact(s2, depth + 1);
    if (!root_s || root_s->is_zero()) continue;
    FieldElement t = y / (FieldElement(2L) * *root_s);
    FieldElement cand = *root_s + t * sqrt_p;
    if (cand * cand == a) {
      if (cand.sign() < 0) cand = -cand;
      FieldTower::join(a.tower(), cand.tower(), ErrorKind::TowerDepthExceeded);
      return cand.promoted(a.tower());
    }
  }
  return std::nullopt;
}

}  // namespace

FieldElement sqrt_adjoin(const FieldElement& a) {
  if (!a.is_exact()) {
    double v = a.to_double();
    if (v < -kApproxTolerance) throw Error(ErrorKind::NegativeRadicand, "sqrt of " + a.to_string());
    return FieldElement::approx(std::sqrt(std::max(v, 0.0)));
  }
  std::optional<FieldElement> root;
  try {
    root = sqrt_exact(a);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::IncompatibleTowers) throw;
    throw Error(ErrorKind::TowerDepthExceeded, e.what());
  }
  if (!root) {
    throw Error(ErrorKind::NotRepresentable,
                "sqrt(" + a.to_string() + ") is not in any tower of depth <= 4");
  }
  return *root;
}

}  // namespace pythsix
