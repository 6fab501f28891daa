#include "blockprod/pellfam.hpp"

#include <stdexcept>

#include "blockprod/errors.hpp"

namespace blockprod {

namespace {

const MPoly t = MPoly::var("t");

PellFamily make_eq23square() {
  MPoly y = t * t + 1;
  MPoly A = rising_product(y, 3);
  PellFamily fam;
  fam.id = "eq23square";
  fam.A = A;
  fam.B = -A;
  fam.base = {t * A, t.pow(4) + 3 * t * t + 1};
  fam.unit = {t.pow(4) + 3 * t * t + 1, t};
  fam.transform.pre_substitution = {{"t", 2 * t}};
  fam.transform.outputs = {{"x", 0, 1, -1, true}, {"z", 1, 0, 0, true}};
  fam.transform.fixed = {{"y", y}};
  fam.transform.parity = {{ParityClaim::Of::X, 1}, {ParityClaim::Of::Z, 0}};
  fam.equation = EquationId::eq23square;
  return fam;
}

PellFamily make_eq24square() {
  MPoly A = rising_product(t, 4);
  PellFamily fam;
  fam.id = "eq24square";
  fam.A = A;
  fam.B = -A;
  fam.base = {A, t * t + 3 * t + 1};
  fam.unit = {t * t + 3 * t + 1, 1};
  fam.transform.pre_substitution = {{"t", 2 * t}};
  fam.transform.outputs = {{"x", 0, 1, -1, true}, {"z", 1, 0, 0, true}};
  fam.transform.fixed = {{"y", t}};
  fam.transform.parity = {{ParityClaim::Of::X, 1}, {ParityClaim::Of::Z, 0}};
  fam.equation = EquationId::eq24square;
  return fam;
}

PellFamily make_eq23triangle() {
  MPoly y = 4 * t * t + 1;
  MPoly A = rising_product(y, 3);
  PellFamily fam;
  fam.id = "eq23triangle";
  fam.A = A;
  fam.B = 1 - A;
  fam.base = {128 * t.pow(7) + 192 * t.pow(5) - 16 * t.pow(4) + 88 * t.pow(3) - 12 * t * t + 12 * t - 1,
              16 * t.pow(4) + 12 * t * t - 2 * t + 1};
  fam.unit = {16 * t.pow(4) + 12 * t * t + 1, 2 * t};
  fam.transform.outputs = {{"x", 0, 1, -1, true}, {"z", 1, 0, -1, true}};
  fam.transform.fixed = {{"y", y}};
  fam.transform.parity = {{ParityClaim::Of::ZX, 1}};
  fam.equation = EquationId::eq23triangle;
  return fam;
}

PellFamily make_eq24triangle() {
  MPoly A = rising_product(t, 4);
  PellFamily fam;
  fam.id = "eq24triangle";
  fam.A = A;
  fam.B = 1 - A;
  fam.base = {2 * t.pow(6) + 18 * t.pow(5) + 58 * t.pow(4) + 78 * t.pow(3) + 36 * t * t - 1,
              2 * t.pow(4) + 12 * t.pow(3) + 20 * t * t + 6 * t - 1};
  fam.unit = {t * t + 3 * t + 1, 1};
  fam.transform.index_step = 2;
  fam.transform.pre_substitution = {{"t", 2 * t + 1}};
  fam.transform.outputs = {{"x", 0, 1, -1, true}, {"z", 1, 0, -1, true}};
  fam.transform.fixed = {{"y", t}};
  fam.transform.parity = {{ParityClaim::Of::ZX, 1}};
  fam.equation = EquationId::eq24triangle;
  return fam;
}

PellFamily make_mult_first() {
  MPoly A = t * (t + 1);
  PellFamily fam;
  fam.id = "mult_first";
  fam.A = A;
  fam.B = 1 - A;
  fam.base = {1, 1};
  fam.unit = {2 * t + 1, 2};
  // Z plays P = 2p+1, X plays Y = 2y+1.
  fam.transform.outputs = {{"p", 1, 0, -1, true}, {"y", 0, 1, -1, true}};
  fam.transform.fixed = {{"x", t}};
  fam.transform.parity = {{ParityClaim::Of::ZX, 1}};
  fam.equation = EquationId::multsys;
  return fam;
}

PellFamily make_t224(bool second) {
  PellFamily fam;
  fam.ring = Ring::integer;
  fam.base = {1, 1};
  fam.equation = EquationId::eq224;
  fam.transform.parity = {{ParityClaim::Of::Z, 1}, {ParityClaim::Of::X, 1}};
  if (!second) {
    // U^2 - 3V^2 = -2, U = 2z - 4x + 1, V = 2x + 1
    fam.id = "t224_C1";
    fam.A = 3;
    fam.B = -2;
    fam.unit = {2, 1};
    fam.transform.outputs = {{"x", 0, 1, -1, true}, {"y", 4, 7, -1, true}, {"z", 1, 2, -3, true}};
  } else {
    // U'^2 - 5V'^2 = -4, U' = 2z + 4x + 5, V' = 2x + 1
    fam.id = "t224_C2";
    fam.A = 5;
    fam.B = -4;
    fam.unit = {9, 4};
    fam.transform.outputs = {{"x", 0, 1, -1, true}, {"y", -4, 9, -1, true}, {"z", 1, -2, -3, true}};
  }
  return fam;
}

MPoly apply_pre_substitution(const PellFamily& fam, const MPoly& p) {
  const auto& sub = fam.transform.pre_substitution;
  return sub ? substitute(p, sub->first, sub->second) : p;
}

}  // namespace

MPoly pell_defect(const PellFamily& fam, const PellPair& pair) {
  return pair.Z * pair.Z - fam.A * pair.X * pair.X - fam.B;
}

MPoly unit_defect(const PellFamily& fam) {
  return fam.unit.Z * fam.unit.Z - fam.A * fam.unit.X * fam.unit.X - 1;
}

PellPair pell_step(const PellPair& prev, const PellFamily& fam) {
  PellPair next{fam.unit.Z * prev.Z + fam.A * fam.unit.X * prev.X,
                fam.unit.X * prev.Z + fam.unit.Z * prev.X};
  if (!pell_defect(fam, next).is_zero()) {
    throw InvariantViolation(fam.id + ": Pell invariant broken after composition");
  }
  return next;
}

std::vector<PellPair> pell_generate(const PellFamily& fam, std::size_t count) {
  if (count == 0) throw PreconditionFailed("pell_generate needs count >= 1");
  if (!pell_defect(fam, fam.base).is_zero()) {
    throw InvariantViolation(fam.id + ": base pair is not on Z^2 - A X^2 = B");
  }
  if (!unit_defect(fam).is_zero() || fam.unit.X.is_zero()) {
    throw InvariantViolation(fam.id + ": unit pair is not a nontrivial solution of Z^2 - A X^2 = 1");
  }
  std::vector<PellPair> out;
  out.reserve(count);
  out.push_back(fam.base);
  while (out.size() < count) out.push_back(pell_step(out.back(), fam));
  return out;
}

const std::vector<PellFamily>& family_catalog() {
  static const std::vector<PellFamily> catalog{
      make_eq23square(), make_eq24square(), make_eq23triangle(), make_eq24triangle(),
      make_mult_first(), make_t224(false),  make_t224(true),
  };
  return catalog;
}

const PellFamily& find_family(const std::string& id) {
  for (const auto& fam : family_catalog()) {
    if (fam.id == id) return fam;
  }
  throw std::out_of_range("unknown family '" + id + "'");
}

bool passes_index_filter(const PellFamily& fam, std::size_t n) {
  const auto& tr = fam.transform;
  return n >= tr.index_offset && (n - tr.index_offset) % tr.index_step == 0;
}

PellPair substituted_pair(const PellFamily& fam, const PellPair& pair) {
  return {apply_pre_substitution(fam, pair.Z), apply_pre_substitution(fam, pair.X)};
}

void check_parity(const PellFamily& fam, const PellPair& pair, std::size_t n) {
  PellPair sub = substituted_pair(fam, pair);
  for (const auto& claim : fam.transform.parity) {
    MPoly value = claim.of == ParityClaim::Of::Z   ? sub.Z
                  : claim.of == ParityClaim::Of::X ? sub.X
                                                   : sub.Z * sub.X;
    if (parity_reduce(value) != MPoly(claim.expected)) {
      throw ParityViolation(fam.id + ": parity claim fails at n = " + std::to_string(n));
    }
  }
}

MPoly halve_exact(const MPoly& p, const std::string& what) {
  MPoly out;
  for (const auto& [mono, c] : p.terms()) {
    if (mpz_odd_p(c.get_mpz_t())) throw ParityViolation(what + ": odd coefficient, cannot halve");
    out += MPoly::term(c / 2, mono);
  }
  return out;
}

PolyAssignment apply_transform(const PellFamily& fam, const PellPair& pair, std::size_t n) {
  if (!passes_index_filter(fam, n)) {
    throw PreconditionFailed(fam.id + ": index " + std::to_string(n) + " is filtered out");
  }
  PellPair sub = substituted_pair(fam, pair);
  PolyAssignment out;
  for (const auto& o : fam.transform.outputs) {
    MPoly value = MPoly(o.z_coef) * sub.Z + MPoly(o.x_coef) * sub.X + MPoly(o.offset);
    if (o.halve) value = halve_exact(value, fam.id + " n=" + std::to_string(n) + " " + o.var);
    out.emplace(o.var, std::move(value));
  }
  for (const auto& [var, value] : fam.transform.fixed) {
    out.emplace(var, apply_pre_substitution(fam, value));
  }
  return out;
}

std::vector<FamilySolution> generate_solutions(const PellFamily& fam, std::size_t count) {
  const auto& tr = fam.transform;
  std::size_t raw = tr.index_offset + tr.index_step * (count - 1) + 1;
  auto pairs = pell_generate(fam, raw);
  std::vector<FamilySolution> out;
  for (std::size_t n = 0; n < pairs.size(); ++n) {
    if (!passes_index_filter(fam, n)) continue;
    FamilySolution sol;
    sol.index = n;
    sol.values = apply_transform(fam, pairs[n], n);
    VerifyReport report = verify_equation(fam.equation, sol.values);
    if (!report.holds) {
      throw EquationMismatch(fam.id + ": solution " + std::to_string(n) + " does not satisfy " +
                             std::string(equation_name(fam.equation)));
    }
    sol.degenerate = report.degenerate;
    out.push_back(std::move(sol));
  }
  return out;
}

std::vector<MultChainEntry> mult_chain(std::size_t count) {
  if (count == 0) throw PreconditionFailed("mult_chain needs count >= 1");
  const PellFamily& fam = find_family("mult_first");
  auto pairs = pell_generate(fam, count + 1);
  const MPoly divisor2 = 2 * (t * t + t - 1);
  const MPoly divisor4 = 2 * divisor2;

  std::vector<MultChainEntry> out;
  for (std::size_t i = 0; i < count; ++i) {
    const MPoly& P = pairs[i].Z;
    const MPoly& Y = pairs[i].X;
    std::string tag = "mult_chain i=" + std::to_string(i);
    MPoly y = halve_exact(Y - 1, tag + " y");
    MPoly p = halve_exact(P - 1, tag + " p");
    MPoly z = halve_exact(pairs[i + 1].X - 1, tag + " z");
    MPoly r = halve_exact(pairs[i + 1].Z - 1, tag + " r");
    // Throws NotDivisible if P_i - Y_i is not a multiple of 2(t^2+t-1).
    exact_div(P - Y, divisor2);
    MPoly q = exact_div((P - Y) * ((2 * t * t + 4 * t + 1) * Y + (2 * t + 3) * P), divisor4);

    MultChainEntry entry;
    entry.index = i;
    entry.values = {{"x", t}, {"y", y}, {"z", z}, {"p", p}, {"q", q}, {"r", r}};
    auto sides = equation_sides(EquationId::multsys, entry.values);
    if (sides.size() != 3) throw EquationMismatch(tag + ": system incomplete");
    for (const auto& s : sides) {
      if (s.lhs != s.rhs) throw EquationMismatch(tag + ": system equation fails");
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace blockprod
