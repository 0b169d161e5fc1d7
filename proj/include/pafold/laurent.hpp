#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pafold/errors.hpp"

namespace pafold {

using Int = boost::multiprecision::cpp_int;

// Exponent vector keyed on the polynomial's ordered variable list.  Negative
// entries are allowed everywhere: these are Laurent polynomials throughout.
using Exps = std::vector<std::int64_t>;

// Integer Laurent polynomial in k >= 1 named variables.  Immutable in spirit:
// every operation returns a fresh value.  Stored terms never have coefficient
// zero; the zero polynomial has an empty term map.
class IntLaurentPoly {
 public:
  IntLaurentPoly() : vars_{"t"} {}
  explicit IntLaurentPoly(std::vector<std::string> vars);

  static IntLaurentPoly zero(std::vector<std::string> vars);
  static IntLaurentPoly constant(Int c, std::vector<std::string> vars = {"t"});
  // Single term c * prod(vars[i]^exps[i]).
  static IntLaurentPoly monomial(Int c, Exps exps,
                                 std::vector<std::string> vars);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Exps, Int>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Adds c * x^e into the term map, erasing the entry if the sum cancels.
  void add_term(const Exps& e, const Int& c);

  const Int& coeff(const Exps& e) const;  // 0 if absent

  // Sum of exponents, maximized / minimized over terms.  DomainError on zero.
  std::int64_t total_degree() const;

  bool operator==(const IntLaurentPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }
  bool operator!=(const IntLaurentPoly& o) const { return !(*this == o); }

  IntLaurentPoly operator+(const IntLaurentPoly& o) const;
  IntLaurentPoly operator-(const IntLaurentPoly& o) const;
  IntLaurentPoly operator-() const;
  IntLaurentPoly operator*(const IntLaurentPoly& o) const;

 private:
  void require_same_vars(const IntLaurentPoly& o) const;

  std::vector<std::string> vars_;
  std::map<Exps, Int> terms_;
};

// Grammar: terms separated by + / -; a term is [integer][*]var[^integer]
// factors (further factors chained with optional *), or a bare integer;
// whitespace is ignored; variables are ASCII identifiers.  Variables are
// collected from the text and ordered alphabetically; text with no variables
// parses into the ring over {"t"}.
IntLaurentPoly parse_poly(const std::string& text);

// Canonical form: terms sorted by descending total degree (ties broken by
// descending lexicographic exponent order), every non-leading term preceded
// by an explicit sign.  format/parse round-trip to the same value.
std::string format_poly(const IntLaurentPoly& p);

IntLaurentPoly add(const IntLaurentPoly& p, const IntLaurentPoly& q);
IntLaurentPoly sub(const IntLaurentPoly& p, const IntLaurentPoly& q);
IntLaurentPoly mul(const IntLaurentPoly& p, const IntLaurentPoly& q);

// Exact quotient r with r*q == p in the Laurent ring.  Monomial content of
// both operands is cleared first, so unit (monomial) factors never cause a
// spurious failure.  DivisionError if q does not divide p.
IntLaurentPoly exact_div(const IntLaurentPoly& p, const IntLaurentPoly& q);

// p(t^{m_1},...,t^{m_k}) as a univariate Laurent polynomial in t; colliding
// exponents are summed.
IntLaurentPoly specialize(const IntLaurentPoly& p,
                          const std::vector<std::int64_t>& m);

// Palindromic (up to global sign) coefficient sequence after clearing the
// monomial content.  Univariate, non-zero input required.
bool is_reciprocal(const IntLaurentPoly& p);

// t^{2b} - t^{b+a} - t^b - t^{b-a} + 1 for 0 <= a < b; exponent collisions
// at a = 0 merge into t^{2b} - 3t^b + 1.
IntLaurentPoly lt_polynomial(std::int64_t a, std::int64_t b);

// "lehmer", "smyth", "sigma", or "pn(N)" with N >= 2.
IntLaurentPoly named_polynomial(const std::string& name);

// --- univariate views (used heavily by the root-location code) ---

// Returns (lowest exponent, coefficients ascending from that exponent, with a
// non-zero first and last entry).  DomainError on zero input or if more than
// one variable occurs with a non-zero exponent.
std::pair<std::int64_t, std::vector<Int>> univariate_coeffs(
    const IntLaurentPoly& p);

// Degree after clearing monomial content (univariate input).
std::int64_t reduced_degree(const IntLaurentPoly& p);

// Builds sum_i coeffs[i] * t^i (ascending, coeffs[0] is the constant term).
IntLaurentPoly poly_from_coeffs(const std::vector<Int>& coeffs,
                                const std::string& var = "t");

}  // namespace pafold
