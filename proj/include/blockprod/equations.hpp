#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blockprod/mpoly.hpp"

namespace blockprod {

enum class EquationId {
  eq23square,    // x(x+1) y(y+1)(y+2) = z^2
  eq24square,    // x(x+1) y..(y+3) = z^2
  eq25square,    // x(x+1) y..(y+4) = z^2
  eq23triangle,  // x(x+1) y(y+1)(y+2) = z(z+1)
  eq24triangle,  // x(x+1) y..(y+3) = z(z+1)
  eq224,         // x(x+1) y(y+1) = z(z+1)(z+2)(z+3)
  multsys,       // x(x+1)y(y+1) = p(p+1), y(y+1)z(z+1) = q(q+1), z(z+1)x(x+1) = r(r+1)
  curveC,        // A x(x+d)(x+2d) = y(y+d)
  z2,            // (x-b)x(x+b)(y-b)y(y+b) = z^2
  z3,            // (x-b)x(x+b)(y-b)y(y+b) = (z-b)z(z+b)
  remark223,     // x(x+1) y(y+1) = z(z+1)(z+2)
  ratio,         // x(x+1)(x+2) = z^2 y(y+1)(y+2)
  paircube,      // x(x+1) y(y+1) = z^3
  triplecube,    // x(x+1) y(y+1) z(z+1) = t^3
};

std::string_view equation_name(EquationId id);
std::optional<EquationId> parse_equation(std::string_view name);
const std::vector<EquationId>& all_equations();

/// Symbolic solution: each unknown of an equation mapped to a ring element.
/// Integer solutions are the constant case.
using PolyAssignment = std::map<std::string, MPoly, std::less<>>;

/// The sides of one equation as polynomials in whatever the assignment
/// substitutes. `multsys` yields one entry per sub-equation whose unknowns
/// are all assigned.
struct EquationSides {
  MPoly lhs;
  MPoly rhs;
};

/// Throws MissingVariable when a required unknown is absent.
std::vector<EquationSides> equation_sides(EquationId id, const PolyAssignment& a);

struct VerifyReport {
  bool holds = false;
  MPoly residual;  // lhs - rhs of the first failing sub-equation
  bool degenerate = false;  // every sub-equation has both sides identically zero
};

VerifyReport verify_equation(EquationId id, const PolyAssignment& a);

/// Convenience for integer data: values become constant polynomials.
PolyAssignment constant_assignment(const Assignment& values);

}  // namespace blockprod
