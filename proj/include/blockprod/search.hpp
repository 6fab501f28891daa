#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "blockprod/mpint.hpp"
#include "blockprod/records.hpp"
#include "blockprod/sieve.hpp"

namespace blockprod {

struct SearchOptions {
  unsigned jobs = 1;
  // Residue filters in front of the exact root tests. Results never depend
  // on this flag.
  bool prefilter = true;
  // z2 only: the x-window is [1, bound_scale * Bmax].
  unsigned bound_scale = 1;
};

enum class Shape { square, cube, oblong, triple };

/// square: z >= 0 with z^2 = N; cube: z^3 = N; oblong: z >= 0 with
/// z(z+1) = N; triple: the largest z with (z-1)z(z+1) = N. Throws
/// DomainError for negative N with square/oblong.
std::optional<MPInt> invert_shape(Shape shape, const MPInt& N);

/// Residue screens: false means "certainly not a square/cube".
bool maybe_square(u128 n);
bool maybe_cube(u128 n);

/// Nontrivial positive solutions of (x-b)x(x+b)(y-b)y(y+b) = z^2 with
/// y = x + k, for each b and 2b < k <= k_max.
std::vector<SolutionRecord> search_z2(const std::vector<MPInt>& b_set, const MPInt& k_max,
                                      const SearchOptions& opts = {});

/// Same for one (b, k); exposed for tests and sharding.
std::vector<SolutionRecord> search_z2_single(const MPInt& b, const MPInt& k, const SearchOptions& opts = {});

/// Positive solutions of (x-1)x(x+1)(y-1)y(y+1) = (z-1)z(z+1), z >= 2,
/// with y = x + k, x <= fib_bound(k), for k_min <= k <= k_max.
std::vector<SolutionRecord> search_z3_b1(const MPInt& k_min, const MPInt& k_max, const SearchOptions& opts = {});

/// (F_{2n-1}, F_{2n+1}, F_{2n}^2) with k = F_{2n}.
SolutionRecord fib_family(unsigned n);
/// n with k = F_{2n}, if any (decided by 5k^2 + 4 being a square).
std::optional<unsigned> fib_index_for_k(const MPInt& k);
MPInt fibonacci(unsigned n);

/// x(x+1)(x+2) = z^2 y(y+1)(y+2), x != y, z >= 1.
std::vector<SolutionRecord> search_ratio(const MPInt& x_max, const MPInt& y_max, const SearchOptions& opts = {});

/// x(x+1)y(y+1) = z^3 with 1 <= x <= y <= y_max.
std::vector<SolutionRecord> search_pair_cube(const MPInt& y_max, const SearchOptions& opts = {});

struct TripleCubeResult {
  std::size_t count = 0;
  std::vector<SolutionRecord> records;
};

/// x(x+1)y(y+1)z(z+1) = t^3 with 1 <= x, x+1 < y < z-1 < n_max, through a
/// cube-free signature index over n(n+1).
TripleCubeResult search_triple_cube(const MPInt& n_max, const SearchOptions& opts = {});

/// Runs shard(i) for i in [0, count) on up to `jobs` threads.
void run_sharded(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& shard);

}  // namespace blockprod
