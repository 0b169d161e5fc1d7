#pragma once

#include <string>

#include "pafold/laurent.hpp"

namespace pafold {

// Certified real interval: lo <= true value <= hi with hi - lo <= tol.
// Every enclosure returned by this module is validated by outward-rounded
// interval arithmetic end to end; no uncertified floating-point estimate is
// ever promoted to a bound.
struct RootEnclosure {
  double lo = 0.0;
  double hi = 0.0;
  double tol = 0.0;

  double mid() const { return lo + (hi - lo) / 2; }
  bool contains(double x) const { return lo <= x && x <= hi; }
};

// Three-valued certified answer.  Indeterminate means the requested fact
// could be neither certified nor refuted at the given tolerance.
enum class Cert { False, True, Indeterminate };

inline const char* to_string(Cert c) {
  switch (c) {
    case Cert::False: return "false";
    case Cert::True: return "true";
    default: return "indeterminate";
  }
}

// B = 1 + max|a_i| / |a_d| over the content-cleared coefficients; every root
// modulus is <= B.  DomainError on constant input.
double cauchy_bound(const IntLaurentPoly& p);

// Enclosure of the maximum root modulus (the house |p|), width <= tol.
// Certification: outward-rounded Graeffe iteration; the upper bound is a
// Cauchy bound of the iterated polynomial, the lower bound comes from
// elementary-symmetric-function inequalities on the same iterate, and both
// converge to the house as the iteration deepens.
RootEnclosure house(const IntLaurentPoly& p, double tol = 1e-10);

// Enclosure of M(p) = |a_d| * prod max(1, |root|), width <= tol, via the
// Graeffe identity M(p)^(2^k) = M(p_k) with Landau's inequality above and a
// binomial coefficient bound below.
RootEnclosure mahler_measure(const IntLaurentPoly& p, double tol = 1e-10);

// True iff the dominant root is real, > 1, simple, and certified to strictly
// exceed every other root modulus; False when refuted (no real root > 1,
// dominant root multiple, or a paired root of equal modulus); Indeterminate
// when separation cannot be certified at the given tol.
Cert is_perron_poly(const IntLaurentPoly& p, double tol = 1e-10);

// [lo^k (down), hi^k (up)] with directed rounding; requires lo >= 0.
RootEnclosure pow_enclosure(const RootEnclosure& e, unsigned k);

// Exact count of real roots of p in the open-closed interval (a, b], where a
// and b are dyadic rationals a_num/2^a_exp2, b_num/2^b_exp2.  Counts each
// distinct root once (multiplicity ignored).  Exposed for the dual-route
// checks in the test suite.
int count_real_roots_in(const IntLaurentPoly& p, double a, double b);

}  // namespace pafold
