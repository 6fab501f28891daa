#include "blockprod/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "blockprod/errors.hpp"

namespace blockprod {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(std::string var, std::uint32_t exponent) {
  Monomial m;
  if (exponent != 0) m.factors_.emplace_back(std::move(var), exponent);
  return m;
}

std::uint32_t Monomial::exponent(std::string_view var) const {
  for (const auto& [name, e] : factors_) {
    if (name == var) return e;
  }
  return 0;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  for (const auto& [name, e] : factors_) {
    if (other.exponent(name) < e) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial out;
  for (const auto& [name, e] : other.factors_) {
    std::uint32_t mine = exponent(name);
    if (e > mine) out.factors_.emplace_back(name, e - mine);
  }
  return out;
}

Monomial Monomial::without(std::string_view var) const {
  Monomial out;
  for (const auto& f : factors_) {
    if (f.first != var) out.factors_.push_back(f);
  }
  return out;
}

bool GrlexDescending::operator()(const Monomial& lhs, const Monomial& rhs) const {
  auto dl = lhs.degree();
  auto dr = rhs.degree();
  if (dl != dr) return dl > dr;
  const auto& a = lhs.factors();
  const auto& b = rhs.factors();
  std::size_t i = 0;
  for (; i < a.size() && i < b.size(); ++i) {
    if (a[i].first != b[i].first) {
      // The side holding the alphabetically earlier variable has a positive
      // exponent where the other has zero.
      return a[i].first < b[i].first;
    }
    if (a[i].second != b[i].second) return a[i].second > b[i].second;
  }
  // Equal total degree and equal prefix means both are exhausted together.
  return false;
}

// ---------------------------------------------------------------- MPoly

MPoly::MPoly(long v) : MPoly(MPInt(v)) {}

MPoly::MPoly(const MPInt& v) {
  if (sgn(v) != 0) terms_.emplace(Monomial{}, v);
}

MPoly MPoly::var(const std::string& name) { return term(1, Monomial::of(name)); }

MPoly MPoly::term(const MPInt& coef, Monomial mono) {
  MPoly p;
  if (sgn(coef) != 0) p.terms_.emplace(std::move(mono), coef);
  return p;
}

void MPoly::add_term(const Monomial& mono, const MPInt& coef) {
  if (sgn(coef) == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, coef);
  if (!inserted) {
    it->second += coef;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

MPInt MPoly::constant_term() const { return coefficient(Monomial{}); }

MPInt MPoly::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? MPInt(0) : it->second;
}

std::uint64_t MPoly::degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

std::uint32_t MPoly::degree(std::string_view var) const {
  std::uint32_t d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, mono.exponent(var));
  return d;
}

std::set<std::string> MPoly::variables() const {
  std::set<std::string> vars;
  for (const auto& [mono, c] : terms_) {
    for (const auto& f : mono.factors()) vars.insert(f.first);
  }
  return vars;
}

const std::pair<const Monomial, MPInt>& MPoly::leading_term() const {
  return *terms_.begin();
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [mono, c] : out.terms_) c = -c;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  MPInt prod;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      mpz_mul(prod.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      out.add_term(ma * mb, prod);
    }
  }
  return out;
}

MPoly& MPoly::operator*=(const MPoly& other) { return *this = *this * other; }

MPoly MPoly::pow(std::uint32_t e) const {
  MPoly result = 1;
  MPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    out += c.get_str();
    for (const auto& [name, e] : mono.factors()) {
      out += '*';
      out += name;
      if (e != 1) {
        out += '^';
        out += std::to_string(e);
      }
    }
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool looks_numeric(std::string_view s) {
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

MPoly MPoly::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw std::invalid_argument("empty polynomial text");
  MPoly out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(" + ", pos);
    std::string_view chunk = trim(text.substr(pos, next == std::string_view::npos ? text.npos : next - pos));
    MPInt coef = 1;
    Monomial mono;
    std::size_t p = 0;
    bool first_factor = true;
    while (p <= chunk.size()) {
      std::size_t star = chunk.find('*', p);
      std::string_view item = trim(chunk.substr(p, star == std::string_view::npos ? chunk.npos : star - p));
      if (first_factor && looks_numeric(item)) {
        coef = mpint_from_string(std::string(item[0] == '+' ? item.substr(1) : item));
      } else {
        std::size_t caret = item.find('^');
        std::string name(trim(item.substr(0, caret)));
        std::uint32_t e = 1;
        if (caret != std::string_view::npos) {
          e = static_cast<std::uint32_t>(std::stoul(std::string(item.substr(caret + 1))));
        }
        if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
          throw std::invalid_argument("bad polynomial factor: '" + std::string(item) + "'");
        }
        mono = mono * Monomial::of(name, e);
      }
      first_factor = false;
      if (star == std::string_view::npos) break;
      p = star + 1;
    }
    out.add_term(mono, coef);
    if (next == std::string_view::npos) break;
    pos = next + 3;
  }
  return out;
}

// ---------------------------------------------------------------- free ops

MPoly add(const MPoly& p, const MPoly& q) { return p + q; }

MPoly mul(const MPoly& p, const MPoly& q) { return p * q; }

MPoly substitute(const MPoly& p, const std::string& var, const MPoly& s) {
  std::map<std::uint32_t, MPoly> powers;
  MPoly out;
  for (const auto& [mono, c] : p.terms()) {
    std::uint32_t e = mono.exponent(var);
    MPoly rest = MPoly::term(c, mono.without(var));
    if (e == 0) {
      out += rest;
      continue;
    }
    auto it = powers.find(e);
    if (it == powers.end()) it = powers.emplace(e, s.pow(e)).first;
    out += rest * it->second;
  }
  return out;
}

MPoly exact_div(const MPoly& p, const MPoly& q) {
  if (q.is_zero()) throw PreconditionFailed("exact_div by zero polynomial");
  const auto& [lead_mono, lead_coef] = q.leading_term();
  MPoly remainder = p;
  MPoly quotient;
  MPInt qc;
  MPInt rem;
  while (!remainder.is_zero()) {
    const auto& [rm, rc] = remainder.leading_term();
    if (!lead_mono.divides(rm)) {
      throw NotDivisible("leading monomial does not divide: " + p.to_string() + " / " + q.to_string());
    }
    mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), rc.get_mpz_t(), lead_coef.get_mpz_t());
    if (sgn(rem) != 0) {
      throw NotDivisible("leading coefficient does not divide: " + p.to_string() + " / " + q.to_string());
    }
    MPoly step = MPoly::term(qc, lead_mono.quotient_of(rm));
    quotient += step;
    remainder -= step * q;
  }
  return quotient;
}

MPInt eval_at(const MPoly& p, const Assignment& values) {
  MPInt total = 0;
  MPInt term;
  MPInt power;
  for (const auto& [mono, c] : p.terms()) {
    term = c;
    for (const auto& [name, e] : mono.factors()) {
      auto it = values.find(name);
      if (it == values.end()) throw MissingVariable("no value for variable '" + name + "'");
      mpz_pow_ui(power.get_mpz_t(), it->second.get_mpz_t(), e);
      term *= power;
    }
    total += term;
  }
  return total;
}

MPoly parity_reduce(const MPoly& p) {
  MPoly out;
  for (const auto& [mono, c] : p.terms()) {
    if (mpz_odd_p(c.get_mpz_t())) out += MPoly::term(1, mono);
  }
  return out;
}

MPoly rising_product(const MPoly& x, unsigned k) {
  MPoly out = 1;
  for (unsigned i = 0; i < k; ++i) out *= x + MPoly(static_cast<long>(i));
  return out;
}

}  // namespace blockprod
