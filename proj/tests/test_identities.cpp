#include <doctest.h>

#include "blockprod/errors.hpp"
#include "blockprod/identities.hpp"

using namespace blockprod;

namespace {
const MPoly t = MPoly::var("t");
const MPoly A = MPoly::var("A");
const MPoly d = MPoly::var("d");
}  // namespace

TEST_CASE("explicit family counts") {
  CHECK(explicit_families(EquationId::eq25square).size() == 2);
  CHECK(explicit_families(EquationId::curveC).size() == 6);
  CHECK(explicit_families(EquationId::remark223).size() == 4);
  CHECK(explicit_families(EquationId::eq23triangle).size() == 4);
  CHECK(all_explicit_families().size() == 16);
  CHECK_THROWS_AS(explicit_families(EquationId::z2), UnknownEquation);
}

TEST_CASE("printed families") {
  auto e25 = explicit_families(EquationId::eq25square)[0].assignment;
  MPoly x = 2 * t * (t + 1) * (2 * t - 1) * (2 * t + 3);
  MPoly y = 4 * t * t + 4 * t - 3;
  CHECK(e25.at("x") == x);
  CHECK(e25.at("y") == y);
  CHECK(e25.at("z") == 2 * x * (y + 2) * (2 * t + 1) * (2 * t * t + 2 * t - 1));

  auto c1 = explicit_families(EquationId::curveC)[0].assignment;
  CHECK(c1.at("x") == A * d * d - d);
  CHECK(c1.at("y") == -(A * A * d.pow(3)));

  auto r2 = explicit_families(EquationId::remark223)[1].assignment;
  CHECK(r2.at("x") == t);
  CHECK(r2.at("y") == t * t + t + 1);
  CHECK(r2.at("z") == t * (t + 1));
}

TEST_CASE("verify_family") {
  for (const auto& f : all_explicit_families()) {
    CAPTURE(f.label);
    CHECK(verify_family(f));
  }
  auto r1 = explicit_families(EquationId::remark223)[0];
  MPoly both = t * (t + 1) * (t + 2) * (t - 1) * (t * t + t - 1);
  auto sides = equation_sides(r1.equation, r1.assignment);
  CHECK(sides[0].lhs == both);
  CHECK(sides[0].rhs == both);

  auto corrupted = explicit_families(EquationId::curveC)[0];
  corrupted.assignment["y"] += 1;
  CHECK_FALSE(verify_family(corrupted));
  auto corrupted2 = explicit_families(EquationId::eq25square)[1];
  corrupted2.assignment["z"] += 1;
  CHECK_FALSE(verify_family(corrupted2));
}

TEST_CASE("integer spot checks agree with symbolic verification") {
  for (const auto& f : all_explicit_families()) {
    CAPTURE(f.label);
    bool over_ad = f.equation == EquationId::curveC;
    std::vector<Assignment> points;
    if (over_ad) {
      for (long a = 1; a <= 3; ++a)
        for (long dd = 1; dd <= 3; ++dd) points.push_back({{"A", a}, {"d", dd}});
    } else {
      for (long tv = -3; tv <= 3; ++tv) points.push_back({{"t", tv}});
    }
    for (const auto& pt : points) {
      Assignment vals = pt;
      for (const auto& [name, poly] : f.assignment) vals[name] = eval_at(poly, pt);
      CHECK(verify_equation(f.equation, constant_assignment(vals)).holds);
    }
  }
}
