#include "pythsix/realpoly.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace pythsix {

// --- UPoly ------------------------------------------------------------------

UPoly::UPoly(std::vector<FieldElement> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(FieldElement c) {
  c_.push_back(std::move(c));
  trim();
}

UPoly UPoly::x() { return UPoly(std::vector<FieldElement>{0L, 1L}); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool UPoly::is_exact() const {
  return std::all_of(c_.begin(), c_.end(), [](const FieldElement& c) { return c.is_exact(); });
}

FieldElement UPoly::operator[](int n) const {
  return n >= 0 && n < static_cast<int>(c_.size()) ? c_[n] : FieldElement();
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  FieldElement inv = lead().inverse();
  std::vector<FieldElement> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c * inv);
  out.back() = FieldElement(1L);
  return UPoly(std::move(out));
}

UPoly UPoly::derivative() const {
  std::vector<FieldElement> out;
  for (std::size_t n = 1; n < c_.size(); ++n) out.push_back(c_[n] * FieldElement(static_cast<long>(n)));
  return UPoly(std::move(out));
}

FieldElement UPoly::eval(const FieldElement& x0) const {
  FieldElement out;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * x0 + *it;
  return out;
}

UPoly UPoly::conjugate(std::uint32_t prime) const {
  std::vector<FieldElement> out;
  for (const auto& c : c_) out.push_back(c.conjugate(prime));
  return UPoly(std::move(out));
}

UPoly UPoly::operator-() const {
  std::vector<FieldElement> out;
  for (const auto& c : c_) out.push_back(-c);
  return UPoly(std::move(out));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<FieldElement> out(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t n = 0; n < out.size(); ++n) out[n] = a[static_cast<int>(n)] + b[static_cast<int>(n)];
  return UPoly(std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<FieldElement> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(out));
}

UDivMod divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisorZero, "univariate division by zero");
  FieldElement inv = b.lead().inverse();
  int db = b.degree();
  std::vector<FieldElement> rem = a.coeffs();
  std::vector<FieldElement> quot(std::max(0, a.degree() - db + 1));
  for (int n = a.degree(); n >= db; --n) {
    if (rem[n].is_zero()) continue;
    FieldElement t = rem[n] * inv;
    quot[n - db] = t;
    for (int k = 0; k <= db; ++k) rem[n - db + k] -= t * b.coeffs()[k];
    rem[n] = FieldElement();
  }
  rem.resize(std::max(0, db));
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly to_upoly(const RPoly& r, Var var) {
  std::vector<FieldElement> out(std::max(0, r.deg(var) + 1));
  for (const auto& [m, c] : r.coeffs()) {
    if (m.exponent(other(var)) != 0) {
      throw Error(ErrorKind::InvariantViolated, "polynomial is not univariate: " + to_string(r));
    }
    out[m.exponent(var)] = c;
  }
  return UPoly(std::move(out));
}

RPoly to_rpoly(const UPoly& p, Var var) {
  RPoly out;
  for (int n = 0; n <= p.degree(); ++n) {
    out.set(var == Var::U ? Monomial{n, 0} : Monomial{0, n}, p.coeffs()[n]);
  }
  return out;
}

// --- bivariate gcd ------------------------------------------------------------

namespace {

// Polynomial in v whose coefficients are polynomials in u.
using UVPoly = std::vector<UPoly>;

void trim(UVPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UVPoly to_uv(const RPoly& r) {
  UVPoly out(std::max(0, r.degv() + 1));
  std::vector<std::vector<FieldElement>> dense(out.size(),
                                               std::vector<FieldElement>(std::max(0, r.degu() + 1)));
  for (const auto& [m, c] : r.coeffs()) dense[m.v][m.u] = c;
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = UPoly(std::move(dense[j]));
  trim(out);
  return out;
}

RPoly from_uv(const UVPoly& p) {
  RPoly out;
  for (std::size_t j = 0; j < p.size(); ++j) {
    for (int i = 0; i <= p[j].degree(); ++i) out.set({i, static_cast<int>(j)}, p[j].coeffs()[i]);
  }
  return out;
}

UPoly content(const UVPoly& p) {
  UPoly g;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

UVPoly primitive_part(const UVPoly& p) {
  UPoly c = content(p);
  UVPoly out;
  for (const auto& x : p) {
    UDivMod d = divmod(x, c);
    out.push_back(d.quotient);
  }
  trim(out);
  return out;
}

// Pseudo-remainder of a by b as polynomials in v.
UVPoly prem(UVPoly a, const UVPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const UPoly& lb = b.back();
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    int da = static_cast<int>(a.size()) - 1;
    UPoly la = a.back();
    for (auto& x : a) x = lb * x;
    for (int k = 0; k <= db; ++k) a[da - db + k] = a[da - db + k] - la * b[k];
    a.back() = UPoly();
    trim(a);
  }
  return a;
}

}  // namespace

RPoly gcd(const RPoly& a, const RPoly& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  UVPoly x = to_uv(a);
  UVPoly y = to_uv(b);
  UPoly c = gcd(content(x), content(y));
  x = primitive_part(x);
  y = primitive_part(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    UVPoly r = prem(x, y);
    x = std::move(y);
    y = r.empty() ? r : primitive_part(r);
  }
  x = primitive_part(x);
  for (auto& coeff : x) coeff = coeff * c;
  return make_monic(from_uv(x));
}

RPoly gcd_with_components(const QPoly& q, const RPoly& r) {
  RPoly g = make_monic(r);
  for (int n = 0; n < 4; ++n) {
    if (!g.is_zero() && g.total_degree() == 0) return g;
    g = gcd(g, component(q, n));
  }
  return g;
}

// --- numerics -----------------------------------------------------------------

std::vector<std::complex<double>> numeric_roots(const std::vector<double>& coeffs) {
  int n = static_cast<int>(coeffs.size()) - 1;
  while (n > 0 && coeffs[n] == 0.0) --n;
  if (n <= 0) return {};
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -coeffs[i] / coeffs[n];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  std::vector<std::complex<double>> roots;
  for (int i = 0; i < n; ++i) roots.push_back(solver.eigenvalues()[i]);

  // Newton polish in extended precision.
  using LC = std::complex<long double>;
  for (auto& z : roots) {
    LC x(z.real(), z.imag());
    for (int it = 0; it < 8; ++it) {
      LC f = 0;
      LC df = 0;
      for (int k = n; k >= 0; --k) {
        df = df * x + f;
        f = f * x + static_cast<long double>(coeffs[k]);
      }
      if (std::abs(df) == 0) break;
      LC step = f / df;
      x -= step;
      if (std::abs(step) <= 1e-19L * std::max<long double>(1, std::abs(x))) break;
    }
    z = {static_cast<double>(x.real()), static_cast<double>(x.imag())};
  }
  return roots;
}

std::optional<Rational> rational_reconstruct(double x, double tol, long max_den) {
  if (!std::isfinite(x) || std::fabs(x) > 1e15) return std::nullopt;
  const double bound = tol * std::max(1.0, std::fabs(x));
  double a = std::floor(x);
  double frac = x - a;
  BigInt h_prev = 1, h = BigInt(a), k_prev = 0, k = 1;
  for (int it = 0; it < 64; ++it) {
    Rational cand(h, k);
    cand.canonicalize();
    if (std::fabs(cand.get_d() - x) <= bound) return cand;
    if (frac < 1e-300) break;
    double y = 1.0 / frac;
    a = std::floor(y);
    frac = y - a;
    BigInt ai(a);
    BigInt h_next = ai * h + h_prev;
    BigInt k_next = ai * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return std::nullopt;
}

// --- factorization ------------------------------------------------------------

namespace {

using Dense = std::vector<double>;  // monic factor coefficients, low to high

Dense to_dense(const UPoly& p) {
  Dense out;
  for (const auto& c : p.coeffs()) out.push_back(c.to_double());
  return out;
}

struct NumericFactors {
  std::vector<Dense> linear;
  std::vector<Dense> quadratic;  // complex pairs and pairs of real roots
  std::vector<Dense> irreducible;  // real-irreducible split: linears + complex-pair quadratics
};

NumericFactors numeric_factors(const UPoly& p, bool real_pairs) {
  auto roots = numeric_roots(to_dense(p));
  NumericFactors out;
  std::vector<double> real;
  std::vector<std::complex<double>> upper;
  for (const auto& z : roots) {
    double scale = std::max(1.0, std::abs(z));
    if (std::fabs(z.imag()) <= 1e-7 * scale) {
      real.push_back(z.real());
    } else if (z.imag() > 0) {
      upper.push_back(z);
    }
  }
  std::sort(real.begin(), real.end());
  std::sort(upper.begin(), upper.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  for (double r : real) {
    out.linear.push_back({-r, 1.0});
    out.irreducible.push_back({-r, 1.0});
  }
  for (const auto& z : upper) {
    Dense q{std::norm(z), -2.0 * z.real(), 1.0};
    out.quadratic.push_back(q);
    out.irreducible.push_back(q);
  }
  if (real_pairs) {
    for (std::size_t a = 0; a < real.size(); ++a) {
      for (std::size_t b = a + 1; b < real.size(); ++b) {
        out.quadratic.push_back({real[a] * real[b], -(real[a] + real[b]), 1.0});
      }
    }
  }
  return out;
}

std::vector<std::uint32_t> support_primes(const UPoly& p) {
  std::set<std::uint32_t> primes;
  for (const auto& c : p.coeffs()) primes.insert(c.tower().primes().begin(), c.tower().primes().end());
  return {primes.begin(), primes.end()};
}

UPoly conjugate_by_mask(UPoly p, const std::vector<std::uint32_t>& primes, unsigned mask) {
  for (std::size_t b = 0; b < primes.size(); ++b) {
    if (mask & (1u << b)) p = p.conjugate(primes[b]);
  }
  return p;
}

// Element of Q(sqrt(primes)) from its numeric images under all sign patterns.
std::optional<FieldElement> reconstruct_element(const std::vector<double>& images,
                                                const std::vector<std::uint32_t>& primes) {
  const unsigned nsig = 1u << primes.size();
  FieldElement out;
  for (unsigned subset = 0; subset < nsig; ++subset) {
    BigInt d = 1;
    for (std::size_t b = 0; b < primes.size(); ++b) {
      if (subset & (1u << b)) d *= primes[b];
    }
    double acc = 0;
    for (unsigned sig = 0; sig < nsig; ++sig) {
      double sign = (__builtin_popcount(sig & subset) % 2) ? -1.0 : 1.0;
      acc += sign * images[sig];
    }
    acc /= nsig * std::sqrt(d.get_d());
    auto coord = rational_reconstruct(acc);
    if (!coord) return std::nullopt;
    if (*coord != 0) out += FieldElement(*coord) * FieldElement::sqrt_of_integer(d);
  }
  return out;
}

std::optional<UPoly> exact_cofactor(const UPoly& s, const UPoly& f) {
  UDivMod d = divmod(s, f);
  if (!d.remainder.is_zero()) return std::nullopt;
  return d.quotient;
}

constexpr std::size_t kMaxAssignments = 4096;

// A factor of s over its own tower whose real image is one of the numeric
// candidates, found by matching conjugate images and reading off coordinates.
std::optional<UPoly> guided_factor(const UPoly& s) {
  auto primes = support_primes(s);
  const unsigned nsig = 1u << primes.size();
  std::vector<NumericFactors> images;
  for (unsigned sig = 0; sig < nsig; ++sig) {
    images.push_back(numeric_factors(conjugate_by_mask(s, primes, sig), true));
  }

  auto try_family = [&](auto pick) -> std::optional<UPoly> {
    const std::vector<Dense>& base = pick(images[0]);
    for (const Dense& f : base) {
      std::vector<std::size_t> choice(nsig, 0);
      std::size_t combos = 1;
      bool empty = false;
      for (unsigned sig = 1; sig < nsig; ++sig) {
        std::size_t n = pick(images[sig]).size();
        if (n == 0) empty = true;
        combos *= std::max<std::size_t>(n, 1);
        if (combos > kMaxAssignments) break;
      }
      if (empty || combos > kMaxAssignments) continue;
      for (std::size_t combo = 0; combo < combos; ++combo) {
        std::size_t rest = combo;
        for (unsigned sig = 1; sig < nsig; ++sig) {
          std::size_t n = pick(images[sig]).size();
          choice[sig] = rest % n;
          rest /= n;
        }
        std::vector<FieldElement> coeffs;
        bool ok = true;
        for (std::size_t c = 0; c + 1 < f.size() && ok; ++c) {
          std::vector<double> vals(nsig);
          vals[0] = f[c];
          for (unsigned sig = 1; sig < nsig; ++sig) vals[sig] = pick(images[sig])[choice[sig]][c];
          auto e = reconstruct_element(vals, primes);
          if (!e) ok = false;
          else coeffs.push_back(*e);
        }
        if (!ok) continue;
        coeffs.emplace_back(1L);
        UPoly cand(std::move(coeffs));
        if (exact_cofactor(s, cand)) return cand;
      }
    }
    return std::nullopt;
  };

  if (auto f = try_family([](const NumericFactors& n) -> const std::vector<Dense>& { return n.linear; })) {
    return f;
  }
  return try_family([](const NumericFactors& n) -> const std::vector<Dense>& { return n.quadratic; });
}

// A rational quartic irreducible over Q that splits into two quadratics
// conjugate over Q(sqrt(delta)).
std::optional<std::pair<UPoly, UPoly>> conjugate_quadratic_split(const UPoly& s) {
  if (s.degree() != 4) return std::nullopt;
  for (const auto& c : s.coeffs()) {
    if (!c.is_rational()) return std::nullopt;
  }
  auto roots = numeric_roots(to_dense(s));
  if (roots.size() != 4) return std::nullopt;
  static constexpr int kPairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  for (const auto& pr : kPairings) {
    auto z0 = roots[pr[0]], z1 = roots[pr[1]], z2 = roots[pr[2]], z3 = roots[pr[3]];
    std::complex<double> f1[2] = {z0 * z1, -(z0 + z1)};
    std::complex<double> f2[2] = {z2 * z3, -(z2 + z3)};
    bool real = true;
    for (int c = 0; c < 2; ++c) {
      if (std::fabs(f1[c].imag()) > 1e-7 || std::fabs(f2[c].imag()) > 1e-7) real = false;
    }
    if (!real) continue;
    int pivot = std::fabs(f1[0].real() - f2[0].real()) > std::fabs(f1[1].real() - f2[1].real()) ? 0 : 1;
    double diff = f1[pivot].real() - f2[pivot].real();
    if (std::fabs(diff) < 1e-6) continue;
    auto delta = rational_reconstruct(diff * diff);
    auto s0 = rational_reconstruct(f1[0].real() + f2[0].real());
    auto s1 = rational_reconstruct(f1[1].real() + f2[1].real());
    auto r_other = rational_reconstruct((f1[1 - pivot].real() - f2[1 - pivot].real()) / diff);
    if (!delta || !s0 || !s1 || !r_other || *delta <= 0) continue;
    try {
      FieldElement e = sqrt_adjoin(FieldElement(*delta));
      if (diff < 0) e = -e;
      Rational half(1, 2);
      std::vector<FieldElement> d(2);
      d[pivot] = e;
      d[1 - pivot] = FieldElement(*r_other) * e;
      UPoly a({FieldElement(*s0 * half) + d[0] * FieldElement(half),
               FieldElement(*s1 * half) + d[1] * FieldElement(half), FieldElement(1L)});
      UPoly b({FieldElement(*s0 * half) - d[0] * FieldElement(half),
               FieldElement(*s1 * half) - d[1] * FieldElement(half), FieldElement(1L)});
      if (a * b == s) return std::make_pair(a, b);
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

std::optional<std::vector<UPoly>> split_exact(const UPoly& s);

std::optional<std::vector<UPoly>> split_all(const std::vector<UPoly>& parts) {
  std::vector<UPoly> out;
  for (const auto& p : parts) {
    auto sub = split_exact(p);
    if (!sub) return std::nullopt;
    out.insert(out.end(), sub->begin(), sub->end());
  }
  return out;
}

std::optional<FieldElement> rational_root(const UPoly& s) {
  for (const auto& c : s.coeffs()) {
    if (!c.is_rational()) return std::nullopt;
  }
  if (s[0].is_zero()) return FieldElement();
  // Clear denominators, then test p/q with p | a0 and q | an.
  BigInt den = 1;
  for (const auto& c : s.coeffs()) {
    Rational r = c.rational_part();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den_mpz_t());
  }
  auto int_coeff = [&](int n) {
    Rational r = s[n].rational_part() * Rational(den);
    return BigInt(r.get_num());
  };
  auto divisors = [](BigInt n) -> std::optional<std::vector<BigInt>> {
    n = abs(n);
    std::vector<BigInt> out{1};
    for (unsigned long p = 2; BigInt(p) * p <= n; ++p) {
      if (p > 100000) return std::nullopt;
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      std::size_t base = out.size();
      BigInt pk = 1;
      for (int k = 1; k <= e; ++k) {
        pk *= p;
        for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
      }
      if (out.size() > 2000) return std::nullopt;
    }
    if (n > 1) {
      std::size_t base = out.size();
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * n);
    }
    return out;
  };
  auto ps = divisors(int_coeff(0));
  auto qs = divisors(int_coeff(s.degree()));
  if (!ps || !qs || ps->size() * qs->size() > 200000) return std::nullopt;
  for (const auto& p : *ps) {
    for (const auto& q : *qs) {
      for (int sign : {1, -1}) {
        Rational cand(BigInt(p * sign), q);
        cand.canonicalize();
        FieldElement x(cand);
        if (s.eval(x).is_zero()) return x;
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<UPoly>> split_quadratic(const UPoly& s) {
  const FieldElement& b = s.coeffs()[1];
  const FieldElement& c = s.coeffs()[0];
  FieldElement disc = b * b - FieldElement(4L) * c;
  if (disc.sign() < 0) return std::vector<UPoly>{s};
  try {
    FieldElement root = sqrt_adjoin(disc);
    FieldElement half(1L, 2L);
    FieldElement r1 = (-b + root) * half;
    FieldElement r2 = (-b - root) * half;
    return std::vector<UPoly>{UPoly({-r2, FieldElement(1L)}), UPoly({-r1, FieldElement(1L)})};
  } catch (const Error&) {
    return std::nullopt;
  }
}

// x^4 + a x^2 + b.
std::optional<std::vector<UPoly>> split_biquadratic(const UPoly& s) {
  if (s.degree() != 4 || !s[1].is_zero() || !s[3].is_zero()) return std::nullopt;
  const FieldElement a = s[2];
  const FieldElement b = s[0];
  const FieldElement one(1L);
  try {
    FieldElement disc = a * a - FieldElement(4L) * b;
    if (disc.sign() >= 0) {
      FieldElement root = sqrt_adjoin(disc);
      FieldElement half(1L, 2L);
      FieldElement w1 = (-a + root) * half;
      FieldElement w2 = (-a - root) * half;
      return split_all({UPoly({-w1, 0L, one}), UPoly({-w2, 0L, one})});
    }
    // Complex w: (x^2 + s x + t)(x^2 - s x + t) with t = sqrt(b), s^2 = 2t - a.
    FieldElement t = sqrt_adjoin(b);
    FieldElement sq = sqrt_adjoin(FieldElement(2L) * t - a);
    return std::vector<UPoly>{UPoly({t, -sq, one}), UPoly({t, sq, one})};
  } catch (const Error&) {
    return std::nullopt;
  }
}

// x^4 + a x^3 + b x^2 + a x + 1 = (x^2 - z1 x + 1)(x^2 - z2 x + 1), z = x + 1/x.
std::optional<std::vector<UPoly>> split_palindromic(const UPoly& s) {
  if (s.degree() != 4 || !s[0].is_one() || !(s[1] == s[3])) return std::nullopt;
  const FieldElement a = s[3];
  const FieldElement b = s[2];
  const FieldElement one(1L);
  try {
    FieldElement disc = a * a - FieldElement(4L) * (b - FieldElement(2L));
    if (disc.sign() < 0) return std::nullopt;
    FieldElement root = sqrt_adjoin(disc);
    FieldElement half(1L, 2L);
    FieldElement z1 = (-a + root) * half;
    FieldElement z2 = (-a - root) * half;
    return split_all({UPoly({one, -z1, one}), UPoly({one, -z2, one})});
  } catch (const Error&) {
    return std::nullopt;
  }
}

// Monic square-free s with exact coefficients -> monic real-irreducible factors.
std::optional<std::vector<UPoly>> split_exact(const UPoly& s) {
  if (s.degree() <= 1) return std::vector<UPoly>{s};
  if (s.degree() == 2) return split_quadratic(s);
  try {
    if (auto r = rational_root(s)) {
      UPoly lin({-*r, FieldElement(1L)});
      auto rest = exact_cofactor(s, lin);
      if (rest) {
        auto sub = split_exact(*rest);
        if (sub) {
          sub->insert(sub->begin(), lin);
          return sub;
        }
      }
    }
    if (auto f = split_biquadratic(s)) return f;
    if (auto f = split_palindromic(s)) return f;
    if (auto f = guided_factor(s)) {
      auto rest = exact_cofactor(s, *f);
      if (rest && rest->degree() >= 1) return split_all({*f, *rest});
      if (rest) return split_exact(*f);
    }
    if (auto pr = conjugate_quadratic_split(s)) return split_all({pr->first, pr->second});
  } catch (const Error&) {
  }
  return std::nullopt;
}

std::vector<UPoly> split_float(const UPoly& s) {
  std::vector<UPoly> out;
  for (const Dense& f : numeric_factors(s, false).irreducible) {
    std::vector<FieldElement> coeffs;
    for (std::size_t c = 0; c + 1 < f.size(); ++c) coeffs.push_back(FieldElement::approx(f[c]));
    coeffs.emplace_back(1L);
    out.emplace_back(std::move(coeffs));
  }
  return out;
}

// Yun's square-free decomposition of a monic polynomial: f = prod a_i^i.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f) {
  std::vector<std::pair<UPoly, int>> out;
  UPoly df = f.derivative();
  UPoly a0 = gcd(f, df);
  UPoly b = divmod(f, a0).quotient;
  UPoly c = divmod(df, a0).quotient;
  UPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    UPoly a = gcd(b, d);
    b = divmod(b, a).quotient;
    c = divmod(d, a).quotient;
    d = c - b.derivative();
    if (a.degree() > 0) out.emplace_back(a.monic(), i);
  }
  return out;
}

bool dense_less(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int n = a.degree(); n >= 0; --n) {
    double x = a[n].to_double(), y = b[n].to_double();
    if (x != y) return x < y;
  }
  return false;
}

}  // namespace

RPoly RealFactorization::product() const {
  RPoly out(scale);
  for (const auto& f : factors) {
    for (int k = 0; k < f.multiplicity; ++k) out *= f.factor;
  }
  return out;
}

RealFactorization factor_real_univariate(const RPoly& r) {
  if (r.is_zero()) throw Error(ErrorKind::InvariantViolated, "cannot factor the zero polynomial");
  RealFactorization out;
  out.var = r.degu() > 0 ? Var::U : Var::V;
  UPoly p = to_upoly(r, out.var);
  out.scale = p.lead();
  if (p.degree() == 0) return out;
  UPoly m = p.monic();

  std::vector<std::pair<UPoly, int>> parts;
  if (m.is_exact()) {
    parts = squarefree_decomposition(m);
  } else {
    parts.emplace_back(m, 1);
  }
  std::vector<std::pair<UPoly, int>> pieces;
  for (const auto& [s, k] : parts) {
    std::optional<std::vector<UPoly>> split;
    if (s.is_exact()) split = split_exact(s);
    if (!split) {
      split = split_float(s);
      out.backend = Backend::Approx;
    }
    for (auto& f : *split) pieces.emplace_back(std::move(f), k);
  }
  std::stable_sort(pieces.begin(), pieces.end(),
                   [](const auto& a, const auto& b) { return dense_less(a.first, b.first); });
  for (const auto& [f, k] : pieces) out.factors.push_back({to_rpoly(f, out.var), k});
  return out;
}

}  // namespace pythsix
