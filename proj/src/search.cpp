#include "blockprod/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "blockprod/errors.hpp"
#include "blockprod/runge.hpp"

namespace blockprod {

// ---------------------------------------------------------------- sharding

void run_sharded(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& shard) {
  unsigned workers = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::size_t>(count, 1U << 16))));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) shard(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      try {
        for (std::size_t i = next++; i < count; i = next++) shard(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

template <class T>
std::vector<T> flatten(std::vector<std::vector<T>>& parts) {
  std::vector<T> out;
  for (auto& p : parts) {
    out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  }
  return out;
}

// ---------------------------------------------------------------- residues

template <std::uint32_t M>
constexpr std::array<bool, M> power_residues(unsigned power) {
  std::array<bool, M> table{};
  for (std::uint64_t r = 0; r < M; ++r) {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < power; ++i) v = v * r % M;
    table[v] = true;
  }
  return table;
}

constexpr auto kSq64 = power_residues<64>(2);
constexpr auto kSq63 = power_residues<63>(2);
constexpr auto kSq65 = power_residues<65>(2);
constexpr auto kSq11 = power_residues<11>(2);
constexpr auto kCube63 = power_residues<63>(3);
constexpr auto kCube13 = power_residues<13>(3);
constexpr auto kCube19 = power_residues<19>(3);
constexpr auto kCube37 = power_residues<37>(3);

// Combined modulus for the square screen; 64*63*65*11 < 2^22.
constexpr std::uint64_t kSqMod = 64ULL * 63 * 65 * 11;
// 63*13*19*37 < 2^20.
constexpr std::uint64_t kCubeMod = 63ULL * 13 * 19 * 37;

inline bool square_residue_ok(std::uint64_t r) {
  return kSq64[r & 63] && kSq63[r % 63] && kSq65[r % 65] && kSq11[r % 11];
}

inline bool cube_residue_ok(std::uint64_t r) {
  return kCube63[r % 63] && kCube13[r % 13] && kCube19[r % 19] && kCube37[r % 37];
}

inline bool is_square_u128(u128 n, u128* root = nullptr) {
  u128 r = isqrt_u128(n);
  if (root != nullptr) *root = r;
  return r * r == n;
}

}  // namespace

bool maybe_square(u128 n) { return square_residue_ok(static_cast<std::uint64_t>(n % kSqMod)); }

bool maybe_cube(u128 n) { return cube_residue_ok(static_cast<std::uint64_t>(n % kCubeMod)); }

std::optional<MPInt> invert_shape(Shape shape, const MPInt& N) {
  switch (shape) {
    case Shape::square:
      if (sgn(N) < 0) throw DomainError("square root of a negative value");
      return exact_sqrt(N);
    case Shape::cube:
      return exact_cbrt(N);
    case Shape::oblong: {
      if (sgn(N) < 0) throw DomainError("oblong inverse of a negative value");
      auto s = exact_sqrt(4 * N + 1);
      if (!s) return std::nullopt;
      return MPInt((*s - 1) / 2);
    }
    case Shape::triple: {
      if (sgn(N) == 0) return MPInt(1);
      MPInt a = abs(N);
      // (z-1)^3 < z^3 - z < z^3 for z >= 2
      MPInt z = icbrt(a) + 1;
      if ((z - 1) * z * (z + 1) != a) return std::nullopt;
      return sgn(N) < 0 ? MPInt(-z) : z;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- z2

namespace {

inline MPInt fdiv(const MPInt& a, const MPInt& b) { return floor_div(a, b); }
inline MPInt root_floor(const MPInt& a) { return isqrt(a); }
inline int sign_of(const MPInt& a) { return sgn(a); }
inline MPInt to_mp(const MPInt& a) { return a; }

inline i128 fdiv(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline i128 root_floor(i128 a) { return static_cast<i128>(isqrt_u128(static_cast<u128>(a))); }
inline int sign_of(i128 a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }
inline MPInt to_mp(i128 a) { return to_mpint(a); }

// Integer roots in [lo, hi] of c3 x^3 + c2 x^2 + c1 x + c0. Critical points
// are located exactly (to within one unit) so that every remaining segment
// is monotone and can be bisected with exact sign evaluations.
template <class T>
void cubic_roots_in_range(const std::array<T, 4>& c, T lo, T hi, std::vector<MPInt>& out) {
  if (lo > hi) return;
  auto eval = [&](const T& x) { return ((c[3] * x + c[2]) * x + c[1]) * x + c[0]; };
  int deg = 3;
  while (deg > 0 && sign_of(c[deg]) == 0) --deg;
  if (deg == 0) {
    if (sign_of(c[0]) == 0) throw DomainError("identically zero polynomial in root search");
    return;
  }
  std::vector<std::pair<T, T>> windows;  // inclusive, checked point by point
  if (deg == 3) {
    T disc = 4 * c[2] * c[2] - 12 * c[3] * c[1];
    if (sign_of(disc) >= 0) {
      T sq = root_floor(disc);
      for (const T& num : {T(-2 * c[2] - sq), T(-2 * c[2] + sq)}) {
        T crit = fdiv(num, T(6 * c[3]));
        windows.emplace_back(crit - 2, crit + 3);
      }
    }
  } else if (deg == 2) {
    T crit = fdiv(T(-c[1]), T(2 * c[2]));
    windows.emplace_back(crit - 1, crit + 2);
  }
  for (auto& w : windows) {
    w.first = std::max(w.first, lo);
    w.second = std::min(w.second, hi);
  }
  windows.erase(std::remove_if(windows.begin(), windows.end(), [](const auto& w) { return w.first > w.second; }),
                windows.end());
  std::sort(windows.begin(), windows.end());

  std::vector<T> hits;
  auto check_segment = [&](T a, T b) {
    if (a > b) return;
    int sa = sign_of(eval(a));
    int sb = sign_of(eval(b));
    if (sa == 0) hits.push_back(a);
    if (sb == 0) hits.push_back(b);
    if (sa == 0 || sb == 0 || sa == sb) return;
    // Monotone here: exactly one crossing between a and b.
    while (b - a > 1) {
      T mid = a + fdiv(T(b - a), T(2));
      int sm = sign_of(eval(mid));
      if (sm == 0) {
        hits.push_back(mid);
        return;
      }
      if (sm == sa) {
        a = mid;
      } else {
        b = mid;
      }
    }
  };

  T cursor = lo;
  for (const auto& [wa, wb] : windows) {
    if (wb < cursor) continue;
    T start = std::max(wa, cursor);
    check_segment(cursor, start - 1);
    for (T x = start; x <= wb; x = x + 1) {
      if (sign_of(eval(x)) == 0) hits.push_back(x);
    }
    cursor = wb + 1;
  }
  check_segment(cursor, hi);
  for (const auto& h : hits) out.push_back(to_mp(h));
}

long double magnitude(const MPInt& v) {
  long exp = 0;
  double m = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::fabs(std::ldexp(static_cast<long double>(m), static_cast<int>(exp)));
}

void cubic_roots_dispatch(const std::array<MPInt, 4>& c, const MPInt& lo, const MPInt& hi,
                          std::vector<MPInt>& out) {
  long double h = std::max(magnitude(hi), magnitude(lo)) + 1;
  long double worst = 0;
  for (int i = 0; i < 4; ++i) worst += magnitude(c[i]) * std::pow(h, static_cast<long double>(i));
  worst = std::max({worst, 16 * magnitude(c[2]) * magnitude(c[2]), 16 * magnitude(c[3]) * magnitude(c[1])});
  if (worst < std::ldexp(1.0L, 120)) {
    std::array<i128, 4> ci{};
    for (int i = 0; i < 4; ++i) ci[i] = *to_i128(c[i]);
    cubic_roots_in_range<i128>(ci, *to_i128(lo), *to_i128(hi), out);
  } else {
    cubic_roots_in_range<MPInt>(c, lo, hi, out);
  }
}

// Square test of (x-b)x(x+b)(y-b)y(y+b) for x in [lo, hi] with machine
// integers. Caller guarantees hi + k + b < 2^21.
void z2_brute_fast(std::uint64_t b, std::uint64_t k, std::uint64_t lo, std::uint64_t hi, bool prefilter,
                   std::vector<MPInt>& out) {
  const std::uint64_t b2 = b * b;
  for (std::uint64_t x = lo; x <= hi; ++x) {
    std::uint64_t y = x + k;
    std::uint64_t left = x * (x * x - b2);
    std::uint64_t right = y * (y * y - b2);
    if (prefilter && !square_residue_ok((left % kSqMod) * (right % kSqMod) % kSqMod)) continue;
    if (is_square_u128(static_cast<u128>(left) * right)) out.emplace_back(static_cast<unsigned long>(x));
  }
}

void z2_brute_mp(const MPInt& b, const MPInt& k, const MPInt& lo, const MPInt& hi, std::vector<MPInt>& out) {
  for (MPInt x = lo; x <= hi; ++x) {
    if (is_square(z2_product(b, k, x))) out.push_back(x);
  }
}

constexpr long kBruteFactor = 8;  // brute-force x <= kBruteFactor * k^2
constexpr long kMpBruteSpan = 1000;

}  // namespace

std::vector<SolutionRecord> search_z2_single(const MPInt& b, const MPInt& k, const SearchOptions& opts) {
  if (b < 1 || k < 1) throw PreconditionFailed("search_z2 needs b >= 1 and k >= 1");
  BoundSet bounds = z2_bounds(b, k);
  const MPInt limit = bounds.Bmax * std::max(1U, opts.bound_scale);
  const MPInt first = b + 1;  // x <= b makes a factor zero or the product negative

  std::vector<MPInt> hits = bounds.exact_candidates;

  // Small x: direct square test.
  MPInt brute_end = std::min<MPInt>(limit, std::max<MPInt>(kBruteFactor * k * k, first));
  const MPInt fast_end = MPInt(1UL << 21) - k - b - 1;
  if (brute_end > fast_end) brute_end = std::max<MPInt>(fast_end, std::min<MPInt>(limit, first + kMpBruteSpan));
  if (brute_end >= first) {
    if (brute_end <= fast_end) {
      z2_brute_fast(b.get_ui(), k.get_ui(), first.get_ui(), brute_end.get_ui(), opts.prefilter, hits);
    } else {
      z2_brute_mp(b, k, first, brute_end, hits);
    }
  }

  // Large x: write 16z = 16P(x) + e. Then e(32P(x) + e) = G(x) with
  // G = 256F - (16P)^2 quadratic, so |e| <= |G(x)|/16P(x) is small and each
  // admissible e leaves a cubic in x whose integer roots are the candidates.
  const MPInt start = brute_end + 1;
  if (start <= limit) {
    const MPInt b2 = b * b;
    const MPInt k2 = k * k;
    const MPInt g = 12 * k2 * (k2 - 16 * b2);
    const MPInt h = k2 * (k2 + 8 * b2) * (k2 + 8 * b2);
    const MPInt c = 3 * k2 + 8 * b2;
    const MPInt s1 = 2 * start + k;
    if (2 * s1 * s1 <= c) throw InvariantViolation("z2 enumeration start too small");
    const MPInt e_max = floor_div(abs(g) * s1 * s1 + 4 * h, 4 * s1 * (2 * s1 * s1 - c));

    const auto p = ScaledPuiseux::make(b, k).ascending;
    const auto gap = z2_square_gap(b, k);
    std::vector<MPInt> roots;
    for (MPInt e = -e_max; e <= e_max; ++e) {
      std::array<MPInt, 4> coeffs{
          2 * e * p[0] + e * e - gap[0],
          2 * e * p[1] - gap[1],
          2 * e * p[2] - gap[2],
          2 * e * p[3],
      };
      cubic_roots_dispatch(coeffs, start, limit, roots);
    }
    for (const auto& x : roots) {
      if (is_square(z2_product(b, k, x))) hits.push_back(x);
    }
  }

  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());

  std::vector<SolutionRecord> out;
  for (const auto& x : hits) {
    if (x <= b) continue;
    MPInt y = x + k;
    if (mpz_divisible_p(x.get_mpz_t(), b.get_mpz_t()) && mpz_divisible_p(y.get_mpz_t(), b.get_mpz_t())) {
      continue;  // trivial
    }
    SolutionRecord rec;
    rec.eq = EquationId::z2;
    rec.b = b;
    rec.k = k;
    rec.x = x;
    rec.y = y;
    rec.z = isqrt(z2_product(b, k, x));
    if (!verify_record(rec)) throw InvariantViolation("z2 record failed re-verification: " + to_jsonl(rec));
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<SolutionRecord> search_z2(const std::vector<MPInt>& b_set, const MPInt& k_max, const SearchOptions& opts) {
  std::vector<std::pair<MPInt, MPInt>> shards;
  for (const auto& b : b_set) {
    if (b < 1) throw PreconditionFailed("search_z2 needs b >= 1");
    for (MPInt k = 2 * b + 1; k <= k_max; ++k) shards.emplace_back(b, k);
  }
  std::stable_sort(shards.begin(), shards.end(), [](const auto& l, const auto& r) { return l.second > r.second; });
  std::vector<std::vector<SolutionRecord>> parts(shards.size());
  run_sharded(shards.size(), opts.jobs,
              [&](std::size_t i) { parts[i] = search_z2_single(shards[i].first, shards[i].second, opts); });
  auto out = flatten(parts);
  sort_records(out);
  return out;
}

// ---------------------------------------------------------------- z3, b = 1

MPInt fibonacci(unsigned n) {
  MPInt f;
  mpz_fib_ui(f.get_mpz_t(), n);
  return f;
}

SolutionRecord fib_family(unsigned n) {
  if (n < 1) throw PreconditionFailed("fib_family needs n >= 1");
  SolutionRecord rec;
  rec.eq = EquationId::z3;
  rec.b = 1;
  rec.k = fibonacci(2 * n);
  rec.x = fibonacci(2 * n - 1);
  rec.y = fibonacci(2 * n + 1);
  rec.z = rec.k * rec.k;
  rec.add_tag("fibonacci");
  if (sgn(z3_b1_product(rec.k, rec.x)) == 0) rec.add_tag("degenerate");
  return rec;
}

std::optional<unsigned> fib_index_for_k(const MPInt& k) {
  if (k < 1 || !is_square(5 * k * k + 4)) return std::nullopt;
  for (unsigned n = 1;; ++n) {
    MPInt f = fibonacci(2 * n);
    if (f == k) return n;
    if (f > k) return std::nullopt;
  }
}

namespace {

void tag_fibonacci(SolutionRecord& rec) {
  if (auto n = fib_index_for_k(rec.k)) {
    SolutionRecord fam = fib_family(*n);
    if (fam.x == rec.x && fam.y == rec.y && fam.z == rec.z) rec.add_tag("fibonacci");
  }
}

std::vector<SolutionRecord> z3_b1_single(const MPInt& k) {
  std::vector<SolutionRecord> out;
  const MPInt bound = fib_bound(k);
  auto emit = [&](const MPInt& x, const MPInt& z) {
    SolutionRecord rec;
    rec.eq = EquationId::z3;
    rec.b = 1;
    rec.k = k;
    rec.x = x;
    rec.y = x + k;
    rec.z = z;
    tag_fibonacci(rec);
    if (!verify_record(rec)) throw InvariantViolation("z3 record failed re-verification");
    out.push_back(std::move(rec));
  };
  if (bound + k + 1 < (1UL << 21)) {
    const std::uint64_t kk = k.get_ui();
    for (std::uint64_t x = 2; x <= bound.get_ui(); ++x) {
      std::uint64_t y = x + kk;
      u128 f = static_cast<u128>(x * (x * x - 1)) * (y * (y * y - 1));
      u128 z = icbrt_u128(f) + 1;
      if ((z - 1) * z * (z + 1) == f) emit(MPInt(static_cast<unsigned long>(x)), to_mpint(z));
    }
  } else {
    for (MPInt x = 2; x <= bound; ++x) {
      auto z = invert_shape(Shape::triple, z3_b1_product(k, x));
      if (z && *z >= 2) emit(x, *z);
    }
  }
  return out;
}

}  // namespace

std::vector<SolutionRecord> search_z3_b1(const MPInt& k_min, const MPInt& k_max, const SearchOptions& opts) {
  if (k_min < 4 || k_min > k_max) throw PreconditionFailed("search_z3_b1 needs 4 <= k_min <= k_max");
  std::vector<MPInt> ks;
  for (MPInt k = k_min; k <= k_max; ++k) ks.push_back(k);
  std::vector<std::vector<SolutionRecord>> parts(ks.size());
  run_sharded(ks.size(), opts.jobs, [&](std::size_t i) { parts[i] = z3_b1_single(ks[i]); });
  auto out = flatten(parts);
  sort_records(out);
  return out;
}

// ---------------------------------------------------------------- ratio

std::vector<SolutionRecord> search_ratio(const MPInt& x_max, const MPInt& y_max, const SearchOptions& opts) {
  if (x_max < 1 || y_max < 1) throw PreconditionFailed("search_ratio needs x_max, y_max >= 1");
  if (x_max >= (1UL << 40) || y_max >= (1UL << 21)) throw PreconditionFailed("search_ratio window too large");
  const std::uint64_t xm = x_max.get_ui();
  const std::uint64_t ym = y_max.get_ui();
  std::vector<std::uint64_t> ytab(ym + 1);
  for (std::uint64_t y = 1; y <= ym; ++y) ytab[y] = y * (y + 1) * (y + 2);

  const std::size_t stripes = std::max<std::size_t>(1, std::min<std::uint64_t>(xm, 256));
  std::vector<std::vector<SolutionRecord>> parts(stripes);
  run_sharded(stripes, opts.jobs, [&](std::size_t s) {
    for (std::uint64_t x = 1 + s; x <= xm; x += stripes) {
      u128 big = static_cast<u128>(x) * (x + 1) * (x + 2);
      // The quotient is >= 1 only for y < x.
      std::uint64_t top = std::min(ym, x - 1);
      for (std::uint64_t y = 1; y <= top; ++y) {
        u128 q;
        if (big <= UINT64_MAX) {
          auto small = static_cast<std::uint64_t>(big);
          if (small % ytab[y] != 0) continue;
          q = small / ytab[y];
        } else {
          if (big % ytab[y] != 0) continue;
          q = big / ytab[y];
        }
        if (opts.prefilter && !maybe_square(q)) continue;
        u128 z;
        if (!is_square_u128(q, &z) || z == 0) continue;
        SolutionRecord rec;
        rec.eq = EquationId::ratio;
        rec.x = static_cast<unsigned long>(x);
        rec.y = static_cast<unsigned long>(y);
        rec.z = to_mpint(z);
        if (!verify_record(rec)) throw InvariantViolation("ratio record failed re-verification");
        parts[s].push_back(std::move(rec));
      }
    }
  });
  auto out = flatten(parts);
  sort_records(out);
  return out;
}

// ---------------------------------------------------------------- pair cube

std::vector<SolutionRecord> search_pair_cube(const MPInt& y_max, const SearchOptions& opts) {
  if (y_max < 2) throw PreconditionFailed("search_pair_cube needs y_max >= 2");
  if (y_max >= (1UL << 30)) throw PreconditionFailed("search_pair_cube window too large");
  const std::uint64_t ym = y_max.get_ui();
  std::vector<std::uint64_t> oblong(ym + 1);
  std::vector<std::uint32_t> residue(ym + 1);
  for (std::uint64_t v = 1; v <= ym; ++v) {
    oblong[v] = v * (v + 1);
    residue[v] = static_cast<std::uint32_t>(oblong[v] % kCubeMod);
  }
  const std::size_t stripes = std::max<std::size_t>(1, std::min<std::uint64_t>(ym, 256));
  std::vector<std::vector<SolutionRecord>> parts(stripes);
  run_sharded(stripes, opts.jobs, [&](std::size_t s) {
    for (std::uint64_t x = 1 + s; x <= ym; x += stripes) {
      for (std::uint64_t y = x; y <= ym; ++y) {
        if (opts.prefilter &&
            !cube_residue_ok(static_cast<std::uint64_t>(residue[x]) * residue[y] % kCubeMod)) {
          continue;
        }
        u128 n = static_cast<u128>(oblong[x]) * oblong[y];
        u128 z = icbrt_u128(n);
        if (z * z * z != n) continue;
        SolutionRecord rec;
        rec.eq = EquationId::paircube;
        rec.x = static_cast<unsigned long>(x);
        rec.y = static_cast<unsigned long>(y);
        rec.z = to_mpint(z);
        if (!verify_record(rec)) throw InvariantViolation("paircube record failed re-verification");
        parts[s].push_back(std::move(rec));
      }
    }
  });
  auto out = flatten(parts);
  sort_records(out);
  return out;
}

// ---------------------------------------------------------------- triple cube

TripleCubeResult search_triple_cube(const MPInt& n_max, const SearchOptions& opts) {
  if (n_max < 5) throw PreconditionFailed("search_triple_cube needs n_max >= 5");
  if (n_max >= (1UL << 24)) throw PreconditionFailed("search_triple_cube window too large");
  // x + 1 < y < z - 1 < n_max, so z <= n_max.
  const auto top = static_cast<std::uint32_t>(n_max.get_ui());
  const SpfSieve sieve(top + 1);

  std::vector<CubeSignature> sig(top + 1);
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> by_key;
  std::uint64_t max_key = 0;
  for (std::uint32_t n = 1; n <= top; ++n) {
    sig[n] = cubefree_signature(n, sieve).combine(cubefree_signature(n + 1, sieve));
    std::uint64_t key = *sig[n].value();
    max_key = std::max(max_key, key);
    by_key[key].push_back(n);  // ascending n
  }

  std::vector<std::vector<SolutionRecord>> parts(top + 1);
  run_sharded(top + 1, opts.jobs, [&](std::size_t xi) {
    auto x = static_cast<std::uint32_t>(xi);
    if (x < 1) return;
    for (std::uint32_t y = x + 2; y + 2 <= top; ++y) {
      auto want = sig[x].combine(sig[y]).complement().value(max_key);
      if (!want) continue;
      auto it = by_key.find(*want);
      if (it == by_key.end()) continue;
      const auto& zs = it->second;
      for (auto z = std::upper_bound(zs.begin(), zs.end(), y + 1); z != zs.end(); ++z) {
        u128 prod = static_cast<u128>(static_cast<std::uint64_t>(x) * (x + 1)) *
                    (static_cast<std::uint64_t>(y) * (y + 1)) * (static_cast<std::uint64_t>(*z) * (*z + 1));
        u128 t = icbrt_u128(prod);
        if (t * t * t != prod) throw InvariantViolation("signature match is not a cube");
        SolutionRecord rec;
        rec.eq = EquationId::triplecube;
        rec.x = static_cast<unsigned long>(x);
        rec.y = static_cast<unsigned long>(y);
        rec.z = static_cast<unsigned long>(*z);
        rec.t = to_mpint(t);
        if (!verify_record(rec)) throw InvariantViolation("triplecube record failed re-verification");
        parts[xi].push_back(std::move(rec));
      }
    }
  });
  TripleCubeResult result;
  result.records = flatten(parts);
  sort_records(result.records);
  result.count = result.records.size();
  return result;
}

}  // namespace blockprod
