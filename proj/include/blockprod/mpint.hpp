#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace blockprod {

// Arbitrary precision signed integer. GMP's C++ wrapper is used directly;
// everything above this header treats it as an exact value type.
using MPInt = mpz_class;

MPInt mpint_from_string(const std::string& text);
std::string to_string(const MPInt& v);

// floor(sqrt(n)) for n >= 0.
MPInt isqrt(const MPInt& n);
// floor(cbrt(n)) for any n (rounds toward -inf).
MPInt icbrt(const MPInt& n);

bool is_square(const MPInt& n);
std::optional<MPInt> exact_sqrt(const MPInt& n);
std::optional<MPInt> exact_cbrt(const MPInt& n);

MPInt ceil_div(const MPInt& a, const MPInt& b);
MPInt floor_div(const MPInt& a, const MPInt& b);

// 128-bit helpers for the hot search loops. All of them are exact.
using u128 = unsigned __int128;
using i128 = __int128;

std::uint64_t isqrt_u64(std::uint64_t n);
u128 isqrt_u128(u128 n);
std::uint64_t icbrt_u64(std::uint64_t n);
u128 icbrt_u128(u128 n);

MPInt to_mpint(u128 v);
MPInt to_mpint(i128 v);
// Returns nullopt if v does not fit.
std::optional<i128> to_i128(const MPInt& v);
std::string to_string(i128 v);

}  // namespace blockprod
