#include "blockprod/identities.hpp"

#include "blockprod/errors.hpp"

namespace blockprod {

namespace {

std::vector<ExplicitFamily> eq25square_families() {
  const MPoly t = MPoly::var("t");
  std::vector<ExplicitFamily> out;
  {
    MPoly x = 2 * t * (t + 1) * (2 * t - 1) * (2 * t + 3);
    MPoly y = 4 * t * t + 4 * t - 3;
    MPoly z = 2 * x * (y + 2) * (2 * t + 1) * (2 * t * t + 2 * t - 1);
    out.push_back({"eq25square#1", EquationId::eq25square, {{"x", x}, {"y", y}, {"z", z}}});
  }
  {
    MPoly x = (2 * t * t + 2 * t + 1) * (4 * t * t + 4 * t + 5);
    MPoly y = (2 * t + 1).pow(2);
    MPoly z = 4 * x * (y + 2) * (2 * t + 1) * (t * t + t + 1);
    out.push_back({"eq25square#2", EquationId::eq25square, {{"x", x}, {"y", y}, {"z", z}}});
  }
  return out;
}

std::vector<ExplicitFamily> curve_c_families() {
  const MPoly A = MPoly::var("A");
  const MPoly d = MPoly::var("d");
  struct Row {
    MPoly x, y;
  };
  const std::vector<Row> rows{
      {A * d * d - d, -(A * A * d.pow(3))},
      {A * d * d - d, A * A * d.pow(3) - d},
      {4 * A * d * d + d, 8 * A * A * d.pow(3) + 6 * A * d * d},
      {4 * A * d * d + d, -8 * A * A * d.pow(3) - 6 * A * d * d - d},
      {4 * A * d * d - 3 * d, 8 * A * A * d.pow(3) - 6 * A * d * d},
      {4 * A * d * d - 3 * d, -8 * A * A * d.pow(3) + 6 * A * d * d - d},
  };
  std::vector<ExplicitFamily> out;
  int i = 1;
  for (const auto& row : rows) {
    out.push_back({"curveC#" + std::to_string(i++), EquationId::curveC,
                   {{"x", row.x}, {"y", row.y}, {"A", A}, {"d", d}}});
  }
  return out;
}

std::vector<ExplicitFamily> remark223_families() {
  const MPoly t = MPoly::var("t");
  struct Row {
    MPoly x, y, z;
  };
  const std::vector<Row> rows{
      {t, t * t + t - 2, (t - 1) * (t + 2)},
      {t, t * t + t + 1, t * (t + 1)},
      {8 * t + 3, 8 * t * t + 7 * t + 1, 2 * (8 * t * t + 7 * t + 1)},
      {8 * t + 4, 8 * t * t + 9 * t + 2, 2 * (8 * t * t + 9 * t + 2)},
  };
  std::vector<ExplicitFamily> out;
  int i = 1;
  for (const auto& row : rows) {
    out.push_back({"remark223#" + std::to_string(i++), EquationId::remark223,
                   {{"x", row.x}, {"y", row.y}, {"z", row.z}}});
  }
  return out;
}

std::vector<ExplicitFamily> eq23triangle_extras() {
  const MPoly t = MPoly::var("t");
  struct Row {
    MPoly x, y, z;
  };
  const std::vector<Row> rows{
      {t, t * t + t - 1, (t * t + t - 1) * (t * t + t + 1)},
      {t, (2 * t + 1).pow(2) - 4, 2 * t * (t + 1) * (2 * t - 1) * (2 * t + 3)},
      {t, (2 * t + 1).pow(2), 2 * t * (t + 1) * (4 * t * t + 4 * t + 3)},
      {t * (8 * t.pow(3) - 6 * t - 1), 4 * t * t - 3,
       (2 * t - 1) * (2 * t + 1) * (2 * t * t - 1) * (8 * t.pow(3) - 6 * t - 1)},
  };
  std::vector<ExplicitFamily> out;
  int i = 1;
  for (const auto& row : rows) {
    out.push_back({"eq23triangle-extra#" + std::to_string(i++), EquationId::eq23triangle,
                   {{"x", row.x}, {"y", row.y}, {"z", row.z}}});
  }
  return out;
}

}  // namespace

std::vector<ExplicitFamily> explicit_families(EquationId eq) {
  switch (eq) {
    case EquationId::eq25square:
      return eq25square_families();
    case EquationId::curveC:
      return curve_c_families();
    case EquationId::remark223:
      return remark223_families();
    case EquationId::eq23triangle:
      return eq23triangle_extras();
    default:
      throw UnknownEquation("no explicit families for " + std::string(equation_name(eq)));
  }
}

std::vector<ExplicitFamily> all_explicit_families() {
  std::vector<ExplicitFamily> out;
  for (EquationId eq : {EquationId::eq25square, EquationId::curveC, EquationId::remark223,
                        EquationId::eq23triangle}) {
    auto part = explicit_families(eq);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

bool verify_family(const ExplicitFamily& fam) {
  return verify_equation(fam.equation, fam.assignment).holds;
}

}  // namespace blockprod
