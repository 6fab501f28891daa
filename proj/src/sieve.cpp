#include "blockprod/sieve.hpp"

#include <numeric>
#include <optional>

#include "blockprod/errors.hpp"

namespace blockprod {

SpfSieve::SpfSieve(std::uint32_t limit) : limit_(limit), spf_(static_cast<std::size_t>(limit) + 1, 0) {
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (spf_[i] != 0) continue;
    spf_[i] = i;
    for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit; j += i) {
      if (spf_[j] == 0) spf_[j] = i;
    }
  }
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> SpfSieve::factor(std::uint64_t n) const {
  if (n == 0 || n > limit_) {
    throw OutOfSieveRange("cannot factor " + std::to_string(n) + " with sieve limit " + std::to_string(limit_));
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  auto m = static_cast<std::uint32_t>(n);
  while (m > 1) {
    std::uint32_t p = spf_[m];
    std::uint32_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  return out;
}

CubeSignature CubeSignature::complement() const {
  CubeSignature out;
  out.factors.reserve(factors.size());
  for (const auto& [p, e] : factors) out.factors.emplace_back(p, static_cast<std::uint8_t>(3 - e));
  return out;
}

CubeSignature CubeSignature::combine(const CubeSignature& other) const {
  CubeSignature out;
  out.factors.reserve(factors.size() + other.factors.size());
  auto a = factors.begin();
  auto b = other.factors.begin();
  while (a != factors.end() || b != other.factors.end()) {
    if (b == other.factors.end() || (a != factors.end() && a->first < b->first)) {
      out.factors.push_back(*a++);
    } else if (a == factors.end() || b->first < a->first) {
      out.factors.push_back(*b++);
    } else {
      auto e = static_cast<std::uint8_t>((a->second + b->second) % 3);
      if (e != 0) out.factors.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  return out;
}

std::optional<std::uint64_t> CubeSignature::value(std::uint64_t cap) const {
  u128 v = 1;
  for (const auto& [p, e] : factors) {
    for (int i = 0; i < e; ++i) {
      v *= p;
      if (v > cap) return std::nullopt;
    }
  }
  return static_cast<std::uint64_t>(v);
}

MPInt CubeSignature::value_mp() const {
  MPInt v = 1;
  for (const auto& [p, e] : factors) {
    for (int i = 0; i < e; ++i) v *= static_cast<unsigned long>(p);
  }
  return v;
}

CubeSignature cubefree_signature(std::uint64_t n, const SpfSieve& sieve) {
  CubeSignature sig;
  for (const auto& [p, e] : sieve.factor(n)) {
    if (e % 3 != 0) sig.factors.emplace_back(p, static_cast<std::uint8_t>(e % 3));
  }
  return sig;
}

}  // namespace blockprod
