#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "blockprod/mpint.hpp"

namespace blockprod {

/// Smallest-prime-factor table for [0, limit].
class SpfSieve {
 public:
  explicit SpfSieve(std::uint32_t limit);

  std::uint32_t limit() const { return limit_; }
  // Precondition: 2 <= n <= limit.
  std::uint32_t spf(std::uint32_t n) const { return spf_[n]; }
  /// (prime, exponent) pairs in increasing prime order. Throws
  /// OutOfSieveRange.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> factor(std::uint64_t n) const;

 private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
};

/// Exponent vector of n reduced mod 3, zero entries dropped. Two positive
/// integers multiply to a cube iff their signatures are complementary.
struct CubeSignature {
  std::vector<std::pair<std::uint32_t, std::uint8_t>> factors;  // exponent in {1,2}

  bool empty() const { return factors.empty(); }
  CubeSignature complement() const;
  /// Signature of the product of the two underlying integers.
  CubeSignature combine(const CubeSignature& other) const;
  /// prod p^e; nullopt once it exceeds `cap`.
  std::optional<std::uint64_t> value(std::uint64_t cap = UINT64_MAX) const;
  MPInt value_mp() const;

  bool operator==(const CubeSignature&) const = default;
};

/// Throws OutOfSieveRange when n is 0 or outside the sieve.
CubeSignature cubefree_signature(std::uint64_t n, const SpfSieve& sieve);

}  // namespace blockprod
