#include <doctest.h>

#include <random>

#include "blockprod/errors.hpp"
#include "blockprod/mpoly.hpp"

using namespace blockprod;

namespace {

const MPoly t = MPoly::var("t");
const MPoly u = MPoly::var("u");
const MPoly v = MPoly::var("v");

MPoly f3(const MPoly& a) { return rising_product(a, 3); }
MPoly f4(const MPoly& a) { return rising_product(a, 4); }

MPoly random_poly(std::mt19937& rng, const std::vector<MPoly>& vars) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> expo(0, 3);
  MPoly p;
  for (int i = 0; i < 4; ++i) {
    MPoly term = coef(rng);
    unsigned budget = 3;
    for (const auto& var : vars) {
      unsigned e = std::min<unsigned>(expo(rng), budget);
      budget -= e;
      term *= var.pow(e);
    }
    p += term;
  }
  return p;
}

}  // namespace

TEST_CASE("mpint helpers") {
  CHECK(isqrt(MPInt(129600)) == 360);
  CHECK(isqrt(MPInt(129599)) == 359);
  CHECK(icbrt(MPInt(-9)) == -3);
  CHECK(icbrt(MPInt(-8)) == -2);
  CHECK(icbrt(MPInt(7762392)) == 198);
  CHECK(floor_div(MPInt(-7), MPInt(2)) == -4);
  CHECK(ceil_div(MPInt(-7), MPInt(2)) == -3);
  CHECK(isqrt_u128(static_cast<u128>(UINT64_MAX) * UINT64_MAX) == UINT64_MAX);
  u128 big = static_cast<u128>(1) << 126;
  CHECK(isqrt_u128(big) == (static_cast<u128>(1) << 63));
  CHECK(icbrt_u128(static_cast<u128>(1) << 120) == (static_cast<u128>(1) << 40));
  CHECK(icbrt_u128((static_cast<u128>(1) << 120) - 1) == (static_cast<u128>(1) << 40) - 1);
  MPInt huge = mpint_from_string("-123456789012345678901234567890123");
  CHECK(to_string(*to_i128(huge)) == "-123456789012345678901234567890123");
  CHECK_FALSE(to_i128(huge * huge).has_value());
}

TEST_CASE("add") {
  MPoly p = t.pow(2) + 1;
  CHECK(MPoly() + p == p);
  CHECK((t.pow(2) + 1) + (-t.pow(2)) == MPoly(1));
  CHECK(((t.pow(2) + 1) + (-t.pow(2))).terms().size() == 1);
  MPoly sum = add(t.pow(4) + 3 * t.pow(2) + 1, t * f3(t.pow(2) + 1));
  // term-by-term: t f3(t^2+1) = t^7 + 6t^5 + 11t^3 + 6t
  CHECK(sum == MPoly::parse("1*t^7 + 6*t^5 + 1*t^4 + 11*t^3 + 3*t^2 + 6*t + 1"));
}

TEST_CASE("mul") {
  MPoly p = 3 * t.pow(2) - u;
  CHECK(p * 1 == p);
  MPoly x = 8 * t.pow(4) + 6 * t.pow(2);
  CHECK(mul(2 * t.pow(2) + 1, 4 * t.pow(2) + 1) == x + 1);
  CHECK(f4(t) == t.pow(4) + 6 * t.pow(3) + 11 * t.pow(2) + 6 * t);
}

TEST_CASE("substitute") {
  CHECK(substitute(t.pow(2) + 3 * t + 1, "t", 0) == MPoly(1));
  CHECK(substitute(t.pow(4) + 3 * t.pow(2) + 1, "t", 2 * t) == 16 * t.pow(4) + 12 * t.pow(2) + 1);
  MPoly alpha = MPoly::var("alpha");
  CHECK(substitute(u * v, "u", 2 * alpha + 1) == 2 * alpha * v + v);
}

TEST_CASE("exact_div") {
  CHECK(exact_div(t.pow(2) - 1, t - 1) == t + 1);
  MPoly P1 = 2 * t.pow(2) + 4 * t + 1;
  MPoly Y1 = 2 * t + 3;
  CHECK(exact_div(P1 - Y1, 2 * (t.pow(2) + t - 1)) == MPoly(1));
  CHECK_THROWS_AS(exact_div(t.pow(2) + 1, t), NotDivisible);
  CHECK_THROWS_AS(exact_div(t + 1, MPoly()), PreconditionFailed);
}

TEST_CASE("eval_at") {
  CHECK(eval_at(t.pow(2) + 3 * t + 1, {{"t", 0}}) == 1);
  CHECK(eval_at(f4(t), {{"t", 1}}) == 24);
  MPoly xv = MPoly::var("x");
  MPoly yv = MPoly::var("y");
  MPoly lhs = xv * (xv + 1) * rising_product(yv, 3);
  MPInt l = eval_at(lhs, {{"x", 8 + 6}, {"y", 4 + 1}});
  // z of the eq23square family at t = 1: 64 + 96 + 44 + 6
  CHECK(l == MPInt(210) * 210);
  CHECK_THROWS_AS(eval_at(xv * yv, {{"x", 1}}), MissingVariable);
}

TEST_CASE("parity_reduce") {
  CHECK(parity_reduce(16 * t.pow(4) + 12 * t.pow(2) + 1) == MPoly(1));
  CHECK(parity_reduce(2 * (t.pow(3) - 5 * u + 7)).is_zero());
  MPoly X0 = 2 * t.pow(4) + 12 * t.pow(3) + 20 * t.pow(2) + 6 * t - 1;
  CHECK(parity_reduce(substitute(X0, "t", 2 * t + 1)) == MPoly(1));
  CHECK(parity_reduce(MPoly(-3) * t) == t);
}

TEST_CASE("canonical text") {
  CHECK(MPoly().to_string() == "0");
  CHECK((3 * t.pow(2) - t + 5).to_string() == "3*t^2 + -1*t + 5");
  MPoly p = 2 * u.pow(2) * v - 7 * t * u + v.pow(3) - 4;
  CHECK(MPoly::parse(p.to_string()) == p);
  CHECK(add(p, MPoly()).to_string() == p.to_string());
  // graded first, then lexicographic
  CHECK((t + u.pow(2) + u * t).to_string() == "1*t*u + 1*u^2 + 1*t");
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(20240611);
  const std::vector<MPoly> one{t};
  const std::vector<MPoly> two{t, u};
  for (int trial = 0; trial < 300; ++trial) {
    const auto& vars = trial % 2 == 0 ? one : two;
    MPoly a = random_poly(rng, vars), b = random_poly(rng, vars), c = random_poly(rng, vars);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == MPoly());
    CHECK(substitute(a, "t", t) == a);
    if (!b.is_zero()) CHECK(exact_div(a * b, b) == a);
  }
}
