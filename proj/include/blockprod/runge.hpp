#pragma once

#include <array>
#include <span>
#include <vector>

#include "blockprod/mpint.hpp"
#include "blockprod/mpoly.hpp"

namespace blockprod {

/// Fujiwara's bound on the moduli of the roots of sum a_i z^i:
/// 2 * max(|a_{n-1}/a_n|, |a_{n-2}/a_n|^(1/2), ..., |a_0/(2 a_n)|^(1/n)).
/// `ascending` holds a_0..a_n. Throws ZeroLeadingCoefficient.
long double fujiwara_bound(std::span<const MPInt> ascending);

/// floor() of the same quantity, computed exactly with integer roots.
MPInt fujiwara_bound_floor(std::span<const MPInt> ascending);

/// 16*P(x), the scaled polynomial part of sqrt(F) at infinity for
/// F(x) = (x-b)x(x+b)(x+k-b)(x+k)(x+k+b).
struct ScaledPuiseux {
  MPInt b;
  MPInt k;
  std::array<MPInt, 4> ascending;  // constant term first

  static ScaledPuiseux make(const MPInt& b, const MPInt& k);
  MPInt operator()(const MPInt& x) const;
};

/// F(x) for the z2 problem, evaluated exactly.
MPInt z2_product(const MPInt& b, const MPInt& k, const MPInt& x);

/// 256 F(x) - (16 P(x))^2 is a quadratic in x; its coefficients, constant
/// term first.
std::array<MPInt, 3> z2_square_gap(const MPInt& b, const MPInt& k);

/// The two auxiliary cubics 256F - (16P -/+ 1)^2 at given (b, k),
/// constant term first. index 0: minus variant, index 1: plus variant.
std::array<std::array<MPInt, 4>, 2> z2_aux_cubics(const MPInt& b, const MPInt& k);

struct BoundSet {
  MPInt b;
  MPInt k;
  long double B1 = 0;
  long double B2 = 0;
  long double B3 = 0;
  MPInt Bmax;  // exact floor(max(B1, B2, B3))
  std::vector<MPInt> exact_candidates;
};

/// Search window for nontrivial solutions of the z2 equation. Every sign
/// choice in the three bounds is evaluated and the maximum taken.
BoundSet z2_bounds(const MPInt& b, const MPInt& k);

/// Positive integer x with F(x) = P(x)^2 (the solutions Runge's argument
/// cannot exclude). k = 4b is solved through the integer roots of
/// 256F - (16P)^2.
std::vector<MPInt> z2_exact_solutions(const MPInt& b, const MPInt& k);

/// Integer roots of an integer polynomial (constant term first) by divisor
/// search on the lowest nonzero coefficient. An identically zero
/// polynomial throws DomainError.
std::vector<MPInt> integer_roots(std::span<const MPInt> ascending);

/// True iff 256F(x) lies strictly between (16P(x)-1)^2 and (16P(x)+1)^2.
bool z2_straddles(const MPInt& b, const MPInt& k, const MPInt& x);

struct AuxIdentityReport {
  bool minus_variant = false;
  bool plus_variant = false;
  bool holds() const { return minus_variant && plus_variant; }
};

/// Expands 256F - (16P -/+ 1)^2 in Z[x,b,k] and compares with the printed
/// cubics.
AuxIdentityReport aux_identity_check();

/// Symbolic F and 16P in Z[x,b,k].
MPoly z2_product_poly();
MPoly scaled_puiseux_poly();

/// Real value of -k/2 + sqrt(3k^2 + 2k sqrt(k^2+4) + 4)/2.
long double fib_bound_real(const MPInt& k);
/// Smallest integer >= fib_bound_real(k), decided with exact integer
/// comparisons.
MPInt fib_bound(const MPInt& k);

/// F(x) = (x-1)x(x+1)(x+k-1)(x+k)(x+k+1).
MPInt z3_b1_product(const MPInt& k, const MPInt& x);
/// (x^2+kx-1)^3 < F(x) < (x^2+kx)^3
bool z3_cube_straddles(const MPInt& k, const MPInt& x);

}  // namespace blockprod
