#include "blockprod/equations.hpp"

#include <array>
#include <utility>

#include "blockprod/errors.hpp"

namespace blockprod {

namespace {

constexpr std::array<std::pair<EquationId, std::string_view>, 14> kNames{{
    {EquationId::eq23square, "eq23square"},
    {EquationId::eq24square, "eq24square"},
    {EquationId::eq25square, "eq25square"},
    {EquationId::eq23triangle, "eq23triangle"},
    {EquationId::eq24triangle, "eq24triangle"},
    {EquationId::eq224, "eq224"},
    {EquationId::multsys, "multsys"},
    {EquationId::curveC, "curveC"},
    {EquationId::z2, "z2"},
    {EquationId::z3, "z3"},
    {EquationId::remark223, "remark223"},
    {EquationId::ratio, "ratio"},
    {EquationId::paircube, "paircube"},
    {EquationId::triplecube, "triplecube"},
}};

const MPoly& need(const PolyAssignment& a, std::string_view name) {
  auto it = a.find(name);
  if (it == a.end()) throw MissingVariable("assignment lacks '" + std::string(name) + "'");
  return it->second;
}

bool has_all(const PolyAssignment& a, std::initializer_list<std::string_view> names) {
  for (auto n : names) {
    if (a.find(n) == a.end()) return false;
  }
  return true;
}

MPoly oblong(const MPoly& v) { return v * (v + 1); }

MPoly centered_block(const MPoly& v, const MPoly& b) { return (v - b) * v * (v + b); }

}  // namespace

std::string_view equation_name(EquationId id) {
  for (const auto& [eq, name] : kNames) {
    if (eq == id) return name;
  }
  return "?";
}

std::optional<EquationId> parse_equation(std::string_view name) {
  for (const auto& [eq, n] : kNames) {
    if (n == name) return eq;
  }
  return std::nullopt;
}

const std::vector<EquationId>& all_equations() {
  static const std::vector<EquationId> ids = [] {
    std::vector<EquationId> v;
    for (const auto& [eq, name] : kNames) v.push_back(eq);
    return v;
  }();
  return ids;
}

std::vector<EquationSides> equation_sides(EquationId id, const PolyAssignment& a) {
  switch (id) {
    case EquationId::eq23square:
    case EquationId::eq24square:
    case EquationId::eq25square: {
      unsigned len = id == EquationId::eq23square ? 3 : id == EquationId::eq24square ? 4 : 5;
      const MPoly& z = need(a, "z");
      return {{oblong(need(a, "x")) * rising_product(need(a, "y"), len), z * z}};
    }
    case EquationId::eq23triangle:
    case EquationId::eq24triangle: {
      unsigned len = id == EquationId::eq23triangle ? 3 : 4;
      return {{oblong(need(a, "x")) * rising_product(need(a, "y"), len), oblong(need(a, "z"))}};
    }
    case EquationId::eq224:
      return {{oblong(need(a, "x")) * oblong(need(a, "y")), rising_product(need(a, "z"), 4)}};
    case EquationId::multsys: {
      std::vector<EquationSides> out;
      if (has_all(a, {"x", "y", "p"})) {
        out.push_back({oblong(need(a, "x")) * oblong(need(a, "y")), oblong(need(a, "p"))});
      }
      if (has_all(a, {"y", "z", "q"})) {
        out.push_back({oblong(need(a, "y")) * oblong(need(a, "z")), oblong(need(a, "q"))});
      }
      if (has_all(a, {"z", "x", "r"})) {
        out.push_back({oblong(need(a, "z")) * oblong(need(a, "x")), oblong(need(a, "r"))});
      }
      if (out.empty()) throw MissingVariable("multsys needs one of (x,y,p), (y,z,q), (z,x,r)");
      return out;
    }
    case EquationId::curveC: {
      const MPoly& x = need(a, "x");
      const MPoly& y = need(a, "y");
      const MPoly& A = need(a, "A");
      const MPoly& d = need(a, "d");
      return {{A * x * (x + d) * (x + d + d), y * (y + d)}};
    }
    case EquationId::z2:
    case EquationId::z3: {
      const MPoly& b = need(a, "b");
      const MPoly& z = need(a, "z");
      MPoly lhs = centered_block(need(a, "x"), b) * centered_block(need(a, "y"), b);
      return {{lhs, id == EquationId::z2 ? z * z : centered_block(z, b)}};
    }
    case EquationId::remark223:
      return {{oblong(need(a, "x")) * oblong(need(a, "y")), rising_product(need(a, "z"), 3)}};
    case EquationId::ratio: {
      const MPoly& z = need(a, "z");
      return {{rising_product(need(a, "x"), 3), z * z * rising_product(need(a, "y"), 3)}};
    }
    case EquationId::paircube:
      return {{oblong(need(a, "x")) * oblong(need(a, "y")), need(a, "z").pow(3)}};
    case EquationId::triplecube:
      return {{oblong(need(a, "x")) * oblong(need(a, "y")) * oblong(need(a, "z")), need(a, "t").pow(3)}};
  }
  throw UnknownEquation("unhandled equation id");
}

VerifyReport verify_equation(EquationId id, const PolyAssignment& a) {
  VerifyReport report;
  report.holds = true;
  report.degenerate = true;
  for (const auto& sides : equation_sides(id, a)) {
    MPoly diff = sides.lhs - sides.rhs;
    if (!diff.is_zero() && report.holds) {
      report.holds = false;
      report.residual = diff;
    }
    if (!sides.lhs.is_zero() || !sides.rhs.is_zero()) report.degenerate = false;
  }
  return report;
}

PolyAssignment constant_assignment(const Assignment& values) {
  PolyAssignment out;
  for (const auto& [name, v] : values) out.emplace(name, MPoly(v));
  return out;
}

}  // namespace blockprod
