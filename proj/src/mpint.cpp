#include "blockprod/mpint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace blockprod {

MPInt mpint_from_string(const std::string& text) {
  MPInt v;
  if (text.empty() || v.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a decimal integer: '" + text + "'");
  }
  return v;
}

std::string to_string(const MPInt& v) { return v.get_str(10); }

MPInt isqrt(const MPInt& n) {
  if (sgn(n) < 0) throw std::domain_error("isqrt of negative value");
  MPInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

MPInt icbrt(const MPInt& n) {
  MPInt r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3);  // truncates toward zero
  if (sgn(n) < 0 && r * r * r != n) r -= 1;
  return r;
}

bool is_square(const MPInt& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::optional<MPInt> exact_sqrt(const MPInt& n) {
  if (!is_square(n)) return std::nullopt;
  return isqrt(n);
}

std::optional<MPInt> exact_cbrt(const MPInt& n) {
  MPInt r;
  if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3) == 0) return std::nullopt;
  return r;
}

MPInt floor_div(const MPInt& a, const MPInt& b) {
  MPInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

MPInt ceil_div(const MPInt& a, const MPInt& b) {
  MPInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::uint64_t isqrt_u64(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

u128 isqrt_u128(u128 n) {
  auto r = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
  r = std::min<u128>(r, UINT64_MAX);
  // r < 2^64 so r*r cannot overflow; r+1 may reach 2^64 only for n near 2^128.
  while (r > 0 && r * r > n) --r;
  while ((r + 1) <= (static_cast<u128>(1) << 64) - 1 && (r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::uint64_t icbrt_u64(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::cbrt(static_cast<long double>(n)));
  auto cube = [](std::uint64_t v) { return static_cast<u128>(v) * v * v; };
  while (r > 0 && cube(r) > n) --r;
  while (cube(r + 1) <= n) ++r;
  return r;
}

u128 icbrt_u128(u128 n) {
  auto r = static_cast<u128>(std::cbrt(static_cast<long double>(n)));
  // r <= 2^43, so (r+1)^3 stays far below 2^128.
  auto cube = [](u128 v) { return v * v * v; };
  while (r > 0 && cube(r) > n) --r;
  while (cube(r + 1) <= n) ++r;
  return r;
}

MPInt to_mpint(u128 v) {
  MPInt hi = static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64));
  MPInt lo = static_cast<unsigned long>(static_cast<std::uint64_t>(v));
  return (hi << 64) + lo;
}

MPInt to_mpint(i128 v) {
  if (v >= 0) return to_mpint(static_cast<u128>(v));
  return -to_mpint(static_cast<u128>(-(v + 1)) + 1);
}

std::optional<i128> to_i128(const MPInt& v) {
  if (mpz_sizeinbase(v.get_mpz_t(), 2) > 126) return std::nullopt;
  MPInt a = abs(v);
  MPInt hi = a >> 64;
  MPInt lo = a - (hi << 64);
  u128 m = (static_cast<u128>(hi.get_ui()) << 64) | lo.get_ui();
  auto r = static_cast<i128>(m);
  return sgn(v) < 0 ? -r : r;
}

std::string to_string(i128 v) { return to_string(to_mpint(v)); }

}  // namespace blockprod
