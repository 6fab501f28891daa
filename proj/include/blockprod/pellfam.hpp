#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blockprod/equations.hpp"
#include "blockprod/mpoly.hpp"

namespace blockprod {

/// One solution (Z, X) of Z^2 - A X^2 = B. Integer families use constant
/// polynomials, so a single engine serves both rings.
struct PellPair {
  MPoly Z;
  MPoly X;
  bool operator==(const PellPair&) const = default;
};

enum class Ring { integer, polynomial };

/// var = (z_coef*Z + x_coef*X + offset) / (halve ? 2 : 1)
struct OutputExpr {
  std::string var;
  long z_coef = 0;
  long x_coef = 0;
  long offset = 0;
  bool halve = true;
};

/// A parity claim on the (pre-substituted) pair: Z, X or Z*X reduces to
/// `expected` modulo 2 as a polynomial.
struct ParityClaim {
  enum class Of { Z, X, ZX } of;
  int expected;
};

struct OutputTransform {
  std::size_t index_step = 1;
  std::size_t index_offset = 0;
  std::optional<std::pair<std::string, MPoly>> pre_substitution;
  std::vector<OutputExpr> outputs;
  // Solution components that do not depend on n (e.g. y = t^2+1). The
  // pre-substitution is applied to these as well.
  PolyAssignment fixed;
  std::vector<ParityClaim> parity;
};

struct PellFamily {
  std::string id;
  Ring ring = Ring::polynomial;
  MPoly A;
  MPoly B;
  PellPair base;
  PellPair unit;
  OutputTransform transform;
  EquationId equation = EquationId::eq23square;
};

/// Z^2 - A X^2 - B; zero exactly when the pair lies on the family's conic.
MPoly pell_defect(const PellFamily& fam, const PellPair& pair);
MPoly unit_defect(const PellFamily& fam);

/// One composition with the family's unit. Throws InvariantViolation if the
/// result leaves the conic.
PellPair pell_step(const PellPair& prev, const PellFamily& fam);

/// The first `count` pairs, starting at the base.
std::vector<PellPair> pell_generate(const PellFamily& fam, std::size_t count);

const std::vector<PellFamily>& family_catalog();
/// Throws std::out_of_range for unknown ids.
const PellFamily& find_family(const std::string& id);

bool passes_index_filter(const PellFamily& fam, std::size_t n);

/// Applies the pre-substitution to the pair.
PellPair substituted_pair(const PellFamily& fam, const PellPair& pair);

/// Checks the family's parity claims at this pair. Throws ParityViolation.
void check_parity(const PellFamily& fam, const PellPair& pair, std::size_t n);

/// Maps the n-th pair to a solution of the family's equation. Throws
/// ParityViolation when a halving is not exact and PreconditionFailed when
/// n is filtered out.
PolyAssignment apply_transform(const PellFamily& fam, const PellPair& pair, std::size_t n);

struct FamilySolution {
  std::size_t index = 0;  // raw recurrence index
  PolyAssignment values;
  bool degenerate = false;  // both sides of the target equation vanish
};

/// First `count` emitted solutions (after the index filter), each verified
/// against the family's equation. Throws EquationMismatch on failure.
std::vector<FamilySolution> generate_solutions(const PellFamily& fam, std::size_t count);

struct MultChainEntry {
  std::size_t index = 0;
  PolyAssignment values;  // x, y, z, p, q, r
};

/// Polynomial solutions of the multiplicative system with x = t. Every entry
/// is verified against all three equations.
std::vector<MultChainEntry> mult_chain(std::size_t count);

/// Halves every coefficient; throws ParityViolation if one is odd.
MPoly halve_exact(const MPoly& p, const std::string& what);

}  // namespace blockprod
