#pragma once

#include <string>
#include <vector>

#include "blockprod/equations.hpp"

namespace blockprod {

/// A closed-form (non-recursive) polynomial solution.
struct ExplicitFamily {
  std::string label;
  EquationId equation;
  PolyAssignment assignment;
};

/// Supported: eq25square (2), curveC (6, over Z[A,d]), remark223 (4),
/// eq23triangle (the 4 solutions outside the Pell family). Anything else
/// throws UnknownEquation.
std::vector<ExplicitFamily> explicit_families(EquationId eq);

/// Every built-in explicit family, in a fixed order.
std::vector<ExplicitFamily> all_explicit_families();

bool verify_family(const ExplicitFamily& fam);

}  // namespace blockprod
