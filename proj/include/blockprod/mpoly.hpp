#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blockprod/mpint.hpp"

namespace blockprod {

/// A power product of named variables. Factors are kept sorted by variable
/// name and never carry a zero exponent, so the empty monomial is 1.
class Monomial {
 public:
  using Factor = std::pair<std::string, std::uint32_t>;

  Monomial() = default;
  static Monomial of(std::string var, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  std::uint32_t exponent(std::string_view var) const;
  std::uint64_t degree() const;
  bool is_one() const { return factors_.empty(); }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  // Precondition: divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial without(std::string_view var) const;

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Factor> factors_;
};

/// Graded lexicographic order, variables ranked alphabetically (a > b > ...).
/// Returns true when lhs sorts strictly before rhs in canonical (descending)
/// order, i.e. lhs is the larger monomial.
struct GrlexDescending {
  bool operator()(const Monomial& lhs, const Monomial& rhs) const;
};

/// Exact sparse multivariate polynomial over MPInt. Immutable in spirit: all
/// operations return new values; no stored coefficient is ever zero.
class MPoly {
 public:
  using Terms = std::map<Monomial, MPInt, GrlexDescending>;

  MPoly() = default;
  MPoly(long v);  // NOLINT(google-explicit-constructor)
  MPoly(const MPInt& v);  // NOLINT(google-explicit-constructor)

  static MPoly var(const std::string& name);
  static MPoly term(const MPInt& coef, Monomial mono);
  // Parses the canonical text form produced by to_string().
  static MPoly parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (zero if absent).
  MPInt constant_term() const;
  MPInt coefficient(const Monomial& mono) const;
  std::uint64_t degree() const;
  std::uint32_t degree(std::string_view var) const;
  std::set<std::string> variables() const;
  // Precondition: !is_zero().
  const std::pair<const Monomial, MPInt>& leading_term() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const MPoly& other);
  MPoly pow(std::uint32_t e) const;

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  bool operator==(const MPoly&) const = default;

  std::string to_string() const;

 private:
  void add_term(const Monomial& mono, const MPInt& coef);
  Terms terms_;
};

MPoly add(const MPoly& p, const MPoly& q);
MPoly mul(const MPoly& p, const MPoly& q);
MPoly substitute(const MPoly& p, const std::string& var, const MPoly& s);

/// Returns r with p = q*r, or throws NotDivisible. Multivariate division by
/// leading terms; over Z it fails as soon as a leading coefficient or
/// monomial does not divide.
MPoly exact_div(const MPoly& p, const MPoly& q);

using Assignment = std::map<std::string, MPInt, std::less<>>;
/// Throws MissingVariable when the assignment omits a variable of p.
MPInt eval_at(const MPoly& p, const Assignment& values);

/// Coefficients reduced into {0,1}.
MPoly parity_reduce(const MPoly& p);

/// x(x+1)...(x+k-1)
MPoly rising_product(const MPoly& x, unsigned k);

}  // namespace blockprod
