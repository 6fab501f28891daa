#include "blockprod/runge.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "blockprod/errors.hpp"

namespace blockprod {

namespace {

MPInt iroot(const MPInt& n, unsigned long k) {
  MPInt r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

long double to_ld(const MPInt& v) {
  // get_d would lose range long before the values used here; long double
  // covers them comfortably.
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp));
}

std::size_t effective_degree(std::span<const MPInt> ascending) {
  std::size_t n = ascending.size();
  while (n > 0 && sgn(ascending[n - 1]) == 0) --n;
  return n == 0 ? 0 : n - 1;
}

template <std::size_t N>
MPInt horner(const std::array<MPInt, N>& ascending, const MPInt& x) {
  MPInt acc = 0;
  for (std::size_t i = N; i-- > 0;) acc = acc * x + ascending[i];
  return acc;
}

MPInt horner(std::span<const MPInt> ascending, const MPInt& x) {
  MPInt acc = 0;
  for (std::size_t i = ascending.size(); i-- > 0;) acc = acc * x + ascending[i];
  return acc;
}

}  // namespace

long double fujiwara_bound(std::span<const MPInt> ascending) {
  if (ascending.size() < 2 || sgn(ascending.back()) == 0) {
    throw ZeroLeadingCoefficient("fujiwara_bound needs degree >= 1 and a nonzero leading coefficient");
  }
  std::size_t n = ascending.size() - 1;
  long double lead = std::fabs(to_ld(ascending[n]));
  long double best = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    long double ratio = std::fabs(to_ld(ascending[n - i])) / lead;
    if (i == n) ratio /= 2;
    best = std::max(best, std::pow(ratio, 1.0L / static_cast<long double>(i)));
  }
  return 2 * best;
}

MPInt fujiwara_bound_floor(std::span<const MPInt> ascending) {
  if (ascending.size() < 2 || sgn(ascending.back()) == 0) {
    throw ZeroLeadingCoefficient("fujiwara_bound needs degree >= 1 and a nonzero leading coefficient");
  }
  std::size_t n = ascending.size() - 1;
  MPInt lead = abs(ascending[n]);
  MPInt best = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    // floor(2 * (r)^(1/i)) = floor((2^i r)^(1/i)) = iroot(floor(2^i r), i)
    MPInt num = abs(ascending[n - i]) << i;
    MPInt den = i == n ? MPInt(lead * 2) : lead;
    best = std::max(best, iroot(floor_div(num, den), i));
  }
  return best;
}

ScaledPuiseux ScaledPuiseux::make(const MPInt& b, const MPInt& k) {
  ScaledPuiseux p{b, k, {}};
  p.ascending[3] = 16;
  p.ascending[2] = 24 * k;
  p.ascending[1] = 6 * k * k - 16 * b * b;
  p.ascending[0] = -8 * b * b * k - k * k * k;
  return p;
}

MPInt ScaledPuiseux::operator()(const MPInt& x) const { return horner(ascending, x); }

MPInt z2_product(const MPInt& b, const MPInt& k, const MPInt& x) {
  MPInt y = x + k;
  return (x - b) * x * (x + b) * (y - b) * y * (y + b);
}

std::array<MPInt, 3> z2_square_gap(const MPInt& b, const MPInt& k) {
  // 256F - (16P)^2 = 12k^2(k^2-16b^2) x(x+k) - k^2 (k^2+8b^2)^2
  MPInt k2 = k * k;
  MPInt b2 = b * b;
  MPInt g = 12 * k2 * (k2 - 16 * b2);
  MPInt h = k2 * (k2 + 8 * b2) * (k2 + 8 * b2);
  return {-h, g * k, g};
}

std::array<std::array<MPInt, 4>, 2> z2_aux_cubics(const MPInt& b, const MPInt& k) {
  // 256F - (16P - s)^2 = gap + 2s*16P - 1, s = +1 (minus variant) / -1
  auto gap = z2_square_gap(b, k);
  auto p = ScaledPuiseux::make(b, k);
  std::array<std::array<MPInt, 4>, 2> out;
  for (int v = 0; v < 2; ++v) {
    int s = v == 0 ? 1 : -1;
    for (int i = 0; i < 4; ++i) out[v][i] = 2 * s * p.ascending[i];
    for (int i = 0; i < 3; ++i) out[v][i] += gap[i];
    out[v][0] -= 1;
  }
  return out;
}

BoundSet z2_bounds(const MPInt& b, const MPInt& k) {
  BoundSet out;
  out.b = b;
  out.k = k;
  const MPInt b2 = b * b;
  const MPInt k2 = k * k;
  const MPInt k3 = k2 * k;

  // B1 = 2|-6b^2k^2 + 3/8 k^4 +- 3/2 k|           = |N1| / 4
  // B2 = 2|-6b^2k^3 + 3/8 k^5 -+ b^2 +- 3/8 k^2|^(1/2) = 2 (|N2| / 8)^(1/2)
  // B3 = 2|-b^4k^2 - 1/4 b^2k^4 - 1/64 k^6 +- 1/4 b^2 k +- 1/32 k^3 - 1/64|^(1/3)
  //    = 2 (|N3| / 64)^(1/3)
  MPInt floor_max = 0;
  long double b1 = 0;
  long double b2v = 0;
  long double b3 = 0;
  for (int s1 : {1, -1}) {
    MPInt n1 = abs(-48 * b2 * k2 + 3 * k2 * k2 + s1 * 12 * k);
    b1 = std::max(b1, to_ld(n1) / 4);
    floor_max = std::max(floor_max, floor_div(n1, 4));
    for (int s2 : {1, -1}) {
      MPInt n2 = abs(-48 * b2 * k3 + 3 * k3 * k2 - s1 * 8 * b2 + s2 * 3 * k2);
      b2v = std::max(b2v, 2 * std::sqrt(to_ld(n2) / 8));
      // floor(2 sqrt(n/8)) = isqrt(floor(n/2))
      floor_max = std::max(floor_max, isqrt(floor_div(n2, 2)));
      MPInt n3 = abs(-64 * b2 * b2 * k2 - 16 * b2 * k2 * k2 - k3 * k3 + s1 * 16 * b2 * k + s2 * 2 * k3 - 1);
      b3 = std::max(b3, 2 * std::cbrt(to_ld(n3) / 64));
      // floor(2 cbrt(n/64)) = icbrt(floor(n/8))
      floor_max = std::max(floor_max, icbrt(floor_div(n3, 8)));
    }
  }
  out.B1 = b1;
  out.B2 = b2v;
  out.B3 = b3;
  out.Bmax = floor_max;
  out.exact_candidates = z2_exact_solutions(b, k);
  return out;
}

std::vector<MPInt> integer_roots(std::span<const MPInt> ascending) {
  std::size_t deg = effective_degree(ascending);
  if (deg == 0) {
    if (ascending.empty() || sgn(ascending[0]) == 0) {
      throw DomainError("integer_roots of the zero polynomial");
    }
    return {};
  }
  std::vector<MPInt> coeffs(ascending.begin(), ascending.begin() + static_cast<long>(deg) + 1);
  std::set<MPInt> roots;
  std::size_t low = 0;
  while (sgn(coeffs[low]) == 0) ++low;
  if (low > 0) roots.insert(0);
  std::span<const MPInt> reduced(coeffs.data() + low, coeffs.size() - low);
  if (reduced.size() > 1) {
    // Every nonzero integer root divides the lowest nonzero coefficient.
    MPInt c = abs(reduced[0]);
    std::vector<std::pair<MPInt, unsigned>> factors;
    MPInt rest = c;
    for (unsigned long p = 2; MPInt(p) * p <= rest; p += (p == 2 ? 1 : 2)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++e;
      }
      if (e > 0) factors.emplace_back(MPInt(p), e);
    }
    if (rest > 1) factors.emplace_back(rest, 1);
    std::vector<MPInt> divisors{1};
    for (const auto& [p, e] : factors) {
      std::size_t existing = divisors.size();
      MPInt pk = 1;
      for (unsigned i = 1; i <= e; ++i) {
        pk *= p;
        for (std::size_t j = 0; j < existing; ++j) divisors.push_back(divisors[j] * pk);
      }
    }
    for (const auto& d : divisors) {
      for (const MPInt& cand : {MPInt(d), MPInt(-d)}) {
        if (sgn(horner(reduced, cand)) == 0) roots.insert(cand);
      }
    }
  }
  return {roots.begin(), roots.end()};
}

std::vector<MPInt> z2_exact_solutions(const MPInt& b, const MPInt& k) {
  std::set<MPInt> found;
  auto accept = [&](const MPInt& x) {
    if (x < 1) return;
    MPInt p16 = ScaledPuiseux::make(b, k)(x);
    if (256 * z2_product(b, k, x) == p16 * p16) found.insert(x);
  };
  const MPInt den = 6 * (16 * b * b - k * k);
  if (sgn(den) == 0) {
    auto gap = z2_square_gap(b, k);
    for (const auto& x : integer_roots(gap)) accept(x);
    return {found.begin(), found.end()};
  }
  const MPInt disc = 3 * k * k - 48 * b * b;
  if (sgn(disc) < 0) return {};
  auto root = exact_sqrt(disc);
  if (!root) return {};
  const MPInt lin = 48 * b * b * k - 3 * k * k * k;
  const MPInt rad = 2 * (4 * b * b - k * k) * *root;
  for (const MPInt& num : {MPInt(-(lin + rad)), MPInt(-(lin - rad))}) {
    if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) accept(num / den);
  }
  return {found.begin(), found.end()};
}

bool z2_straddles(const MPInt& b, const MPInt& k, const MPInt& x) {
  MPInt f = 256 * z2_product(b, k, x);
  MPInt p = ScaledPuiseux::make(b, k)(x);
  MPInt lo = (p - 1) * (p - 1);
  MPInt hi = (p + 1) * (p + 1);
  return (lo < f && f < hi) || (hi < f && f < lo);
}

MPoly z2_product_poly() {
  const MPoly x = MPoly::var("x");
  const MPoly b = MPoly::var("b");
  const MPoly k = MPoly::var("k");
  return (x - b) * x * (x + b) * (x + k - b) * (x + k) * (x + k + b);
}

MPoly scaled_puiseux_poly() {
  const MPoly x = MPoly::var("x");
  const MPoly b = MPoly::var("b");
  const MPoly k = MPoly::var("k");
  return 16 * x.pow(3) + 24 * k * x * x + (6 * k * k - 16 * b * b) * x - 8 * b * b * k - k.pow(3);
}

AuxIdentityReport aux_identity_check() {
  const MPoly x = MPoly::var("x");
  const MPoly b = MPoly::var("b");
  const MPoly k = MPoly::var("k");
  const MPoly F = z2_product_poly();
  const MPoly P16 = scaled_puiseux_poly();

  const MPoly printed_minus =
      32 * x.pow(3) + (-192 * b * b * k * k + 12 * k.pow(4) + 48 * k) * x * x +
      (-192 * b * b * k.pow(3) + 12 * k.pow(5) - 32 * b * b + 12 * k * k) * x - 64 * b.pow(4) * k * k -
      16 * b * b * k.pow(4) - k.pow(6) - 16 * b * b * k - 2 * k.pow(3) - 1;
  const MPoly printed_plus =
      -32 * x.pow(3) + (-192 * b * b * k * k + 12 * k.pow(4) - 48 * k) * x * x +
      (-192 * b * b * k.pow(3) + 12 * k.pow(5) + 32 * b * b - 12 * k * k) * x - 64 * b.pow(4) * k * k -
      16 * b * b * k.pow(4) - k.pow(6) + 16 * b * b * k + 2 * k.pow(3) - 1;

  AuxIdentityReport report;
  report.minus_variant = 256 * F - (P16 - 1).pow(2) == printed_minus;
  report.plus_variant = 256 * F - (P16 + 1).pow(2) == printed_plus;
  return report;
}

long double fib_bound_real(const MPInt& k) {
  long double kk = to_ld(k);
  return -kk / 2 + std::sqrt(3 * kk * kk + 2 * kk * std::sqrt(kk * kk + 4) + 4) / 2;
}

namespace {

// m >= -k/2 + sqrt(3k^2 + 2k sqrt(k^2+4) + 4)/2, decided over the integers.
bool at_or_above_fib_bound(const MPInt& k, const MPInt& m) {
  MPInt a = 2 * m + k;
  if (sgn(a) <= 0) return false;
  MPInt l = a * a - 3 * k * k - 4;
  if (sgn(l) < 0) return false;
  return l * l >= 4 * k * k * (k * k + 4);
}

}  // namespace

MPInt fib_bound(const MPInt& k) {
  MPInt m(static_cast<long>(std::ceil(fib_bound_real(k))));
  while (!at_or_above_fib_bound(k, m)) ++m;
  while (at_or_above_fib_bound(k, m - 1)) --m;
  return m;
}

MPInt z3_b1_product(const MPInt& k, const MPInt& x) { return z2_product(1, k, x); }

bool z3_cube_straddles(const MPInt& k, const MPInt& x) {
  MPInt f = z3_b1_product(k, x);
  MPInt base = x * x + k * x;
  MPInt lo = base - 1;
  return lo * lo * lo < f && f < base * base * base;
}

}  // namespace blockprod
