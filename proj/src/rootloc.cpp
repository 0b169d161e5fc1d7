#include "pafold/rootloc.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "boost/multiprecision/cpp_int.hpp"

namespace pafold {

namespace {

using boost::multiprecision::cpp_int;

// ------------------------------------------------------------------
// Outward-rounded interval arithmetic on mpfr.  Everything here rounds the
// lower endpoint down and the upper endpoint up, so any real the interval
// claims to contain really is contained.
// ------------------------------------------------------------------

class Ival {
 public:
  explicit Ival(mpfr_prec_t prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }
  Ival(const Ival& o) {
    mpfr_init2(lo_, mpfr_get_prec(o.lo_));
    mpfr_init2(hi_, mpfr_get_prec(o.hi_));
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  Ival& operator=(const Ival& o) {
    if (this != &o) {
      mpfr_set(lo_, o.lo_, MPFR_RNDD);
      mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
  }
  ~Ival() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }

  void set_int(const cpp_int& v) {
    const std::string s = v.str();
    mpfr_set_str(lo_, s.c_str(), 10, MPFR_RNDD);
    mpfr_set_str(hi_, s.c_str(), 10, MPFR_RNDU);
  }

  void set_zero() {
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }

  void negate() {
    mpfr_swap(lo_, hi_);
    mpfr_neg(lo_, lo_, MPFR_RNDD);
    mpfr_neg(hi_, hi_, MPFR_RNDU);
  }

  void scale2(long e) {  // exact
    mpfr_mul_2si(lo_, lo_, e, MPFR_RNDD);
    mpfr_mul_2si(hi_, hi_, e, MPFR_RNDU);
  }

  // this += a * b (8 directed multiplications; scratch provided by caller)
  void add_mul(const Ival& a, const Ival& b, mpfr_t t1, mpfr_t t2) {
    // lower endpoint
    mpfr_mul(t1, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(t2, a.lo_, b.hi_, MPFR_RNDD);
    if (mpfr_cmp(t2, t1) < 0) mpfr_swap(t1, t2);
    mpfr_mul(t2, a.hi_, b.lo_, MPFR_RNDD);
    if (mpfr_cmp(t2, t1) < 0) mpfr_swap(t1, t2);
    mpfr_mul(t2, a.hi_, b.hi_, MPFR_RNDD);
    if (mpfr_cmp(t2, t1) < 0) mpfr_swap(t1, t2);
    mpfr_add(lo_, lo_, t1, MPFR_RNDD);
    // upper endpoint
    mpfr_mul(t1, a.lo_, b.lo_, MPFR_RNDU);
    mpfr_mul(t2, a.lo_, b.hi_, MPFR_RNDU);
    if (mpfr_cmp(t2, t1) > 0) mpfr_swap(t1, t2);
    mpfr_mul(t2, a.hi_, b.lo_, MPFR_RNDU);
    if (mpfr_cmp(t2, t1) > 0) mpfr_swap(t1, t2);
    mpfr_mul(t2, a.hi_, b.hi_, MPFR_RNDU);
    if (mpfr_cmp(t2, t1) > 0) mpfr_swap(t1, t2);
    mpfr_add(hi_, hi_, t1, MPFR_RNDU);
  }

  void add(const Ival& o) {
    mpfr_add(lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(hi_, hi_, o.hi_, MPFR_RNDU);
  }

  void sub(const Ival& o) {
    mpfr_sub(lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(hi_, hi_, o.lo_, MPFR_RNDU);
  }

  bool contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
  }

  // |x| bounded below / above over the interval
  void abs_lo(mpfr_t out) const {
    if (contains_zero()) {
      mpfr_set_zero(out, 1);
    } else if (mpfr_sgn(lo_) > 0) {
      mpfr_set(out, lo_, MPFR_RNDD);
    } else {
      mpfr_neg(out, hi_, MPFR_RNDD);
    }
  }
  void abs_hi(mpfr_t out) const {
    mpfr_t tmp;
    mpfr_init2(tmp, mpfr_get_prec(out));
    mpfr_abs(out, lo_, MPFR_RNDU);
    mpfr_abs(tmp, hi_, MPFR_RNDU);
    if (mpfr_cmp(tmp, out) > 0) mpfr_set(out, tmp, MPFR_RNDU);
    mpfr_clear(tmp);
  }

  long max_exp() const {
    long e = LONG_MIN;
    if (!mpfr_zero_p(lo_)) e = std::max(e, static_cast<long>(mpfr_get_exp(lo_)));
    if (!mpfr_zero_p(hi_)) e = std::max(e, static_cast<long>(mpfr_get_exp(hi_)));
    return e;
  }

  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpfr_ptr lo() { return lo_; }
  mpfr_ptr hi() { return hi_; }

 private:
  mpfr_t lo_, hi_;
};

cpp_int binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  cpp_int r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// ------------------------------------------------------------------
// Graeffe iteration with interval coefficients.  After k steps the roots of
// the held polynomial are the 2^k-th powers of the original roots; the
// bounds below are classical inequalities evaluated with directed rounding,
// hence certified for the original polynomial.
// ------------------------------------------------------------------

class Graeffe {
 public:
  Graeffe(const std::vector<Int>& coeffs, mpfr_prec_t prec)
      : prec_(prec), d_(coeffs.size() - 1) {
    c_.reserve(coeffs.size());
    for (const auto& x : coeffs) {
      c_.emplace_back(prec_);
      c_.back().set_int(x);
    }
    mpfr_init2(t1_, prec_);
    mpfr_init2(t2_, prec_);
    mpfr_init2(a1_, prec_);
    mpfr_init2(a2_, prec_);
  }
  ~Graeffe() {
    mpfr_clear(t1_);
    mpfr_clear(t2_);
    mpfr_clear(a1_);
    mpfr_clear(a2_);
  }

  unsigned long K() const { return 1ul << k_; }
  std::size_t degree() const { return d_; }

  // One root-squaring step: c'_k = (-1)^d sum_i (-1)^i c_i c_{2k-i}.
  void step() {
    std::vector<Ival> next(d_ + 1, Ival(prec_));
    for (std::size_t k = 0; k <= d_; ++k) {
      Ival acc(prec_);
      // paired terms i < k < j=2k-i contribute twice
      std::size_t i_min = (2 * k > d_) ? 2 * k - d_ : 0;
      for (std::size_t i = i_min; i < k; ++i) {
        const std::size_t j = 2 * k - i;
        Ival prod(prec_);
        prod.add_mul(c_[i], c_[j], t1_, t2_);
        prod.scale2(1);
        if (i % 2 == 0)
          acc.add(prod);
        else
          acc.sub(prod);
      }
      // center term
      {
        Ival sq(prec_);
        sq.add_mul(c_[k], c_[k], t1_, t2_);
        if (k % 2 == 0)
          acc.add(sq);
        else
          acc.sub(sq);
      }
      if (d_ % 2 == 1) acc.negate();
      next[k] = acc;
    }
    c_ = std::move(next);
    ++k_;
    normalize();
  }

  // Certified bounds on max |root| of the ORIGINAL polynomial.
  void house_bounds(double& lo_out, double& hi_out) const {
    const unsigned long kk = K();
    // upper: Cauchy bound of the iterate
    c_[d_].abs_lo(a1_);
    if (mpfr_zero_p(a1_)) {
      lo_out = 0;
      hi_out = std::numeric_limits<double>::infinity();
      return;
    }
    mpfr_set_zero(t1_, 1);
    for (std::size_t i = 0; i < d_; ++i) {
      c_[i].abs_hi(a2_);
      mpfr_div(a2_, a2_, a1_, MPFR_RNDU);
      if (mpfr_cmp(a2_, t1_) > 0) mpfr_set(t1_, a2_, MPFR_RNDU);
    }
    mpfr_add_ui(t1_, t1_, 1, MPFR_RNDU);
    mpfr_rootn_ui(t1_, t1_, kk, MPFR_RNDU);
    hi_out = mpfr_get_d(t1_, MPFR_RNDU);

    // lower: |e_i| <= C(d,i) M^i for each i, with e_i = c_{d-i}/c_d
    c_[d_].abs_hi(a1_);
    double best = 0;
    for (std::size_t i = 1; i <= d_; ++i) {
      c_[d_ - i].abs_lo(a2_);
      if (mpfr_zero_p(a2_)) continue;
      mpfr_div(a2_, a2_, a1_, MPFR_RNDD);
      const std::string b = binomial(static_cast<unsigned>(d_),
                                     static_cast<unsigned>(i))
                                .str();
      mpfr_set_str(t2_, b.c_str(), 10, MPFR_RNDU);
      mpfr_div(a2_, a2_, t2_, MPFR_RNDD);
      if (mpfr_sgn(a2_) <= 0) continue;
      mpfr_rootn_ui(a2_, a2_, i * kk, MPFR_RNDD);
      const double v = mpfr_get_d(a2_, MPFR_RNDD);
      best = std::max(best, v);
    }
    lo_out = best;
  }

  // Certified bounds on the Mahler measure of the ORIGINAL polynomial.
  void mahler_bounds(double& lo_out, double& hi_out) const {
    const unsigned long kk = K();
    // upper: Landau, M(q) <= l2 norm of q
    mpfr_set_zero(t1_, 1);
    for (std::size_t i = 0; i <= d_; ++i) {
      c_[i].abs_hi(a1_);
      mpfr_sqr(a1_, a1_, MPFR_RNDU);
      mpfr_add(t1_, t1_, a1_, MPFR_RNDU);
    }
    mpfr_sqrt(t1_, t1_, MPFR_RNDU);
    mpfr_rootn_ui(t1_, t1_, kk, MPFR_RNDU);
    hi_out = mpfr_get_d(t1_, MPFR_RNDU);

    // lower: |c_{d-j}| <= C(d,j) M(q)
    double best = 0;
    for (std::size_t j = 0; j <= d_; ++j) {
      c_[d_ - j].abs_lo(a1_);
      if (mpfr_zero_p(a1_)) continue;
      const std::string b = binomial(static_cast<unsigned>(d_),
                                     static_cast<unsigned>(j))
                                .str();
      mpfr_set_str(t2_, b.c_str(), 10, MPFR_RNDU);
      mpfr_div(a1_, a1_, t2_, MPFR_RNDD);
      if (mpfr_sgn(a1_) <= 0) continue;
      mpfr_rootn_ui(a1_, a1_, kk, MPFR_RNDD);
      const double v = mpfr_get_d(a1_, MPFR_RNDD);
      best = std::max(best, v);
    }
    lo_out = best;
  }

  // Upper bound on the modulus of every root other than one simple real root
  // enclosed in [rlo, rhi]: divide the iterate by (z - rho^K) with interval
  // synthetic division, then take a Cauchy bound of the quotient.  Returns
  // +inf when the division loses certification.
  double deflated_bound(double rlo, double rhi) const {
    const unsigned long kk = K();
    Ival nu(prec_);
    mpfr_set_d(nu.lo(), rlo, MPFR_RNDD);
    mpfr_set_d(nu.hi(), rhi, MPFR_RNDU);
    mpfr_pow_ui(nu.lo(), nu.lo(), kk, MPFR_RNDD);
    mpfr_pow_ui(nu.hi(), nu.hi(), kk, MPFR_RNDU);

    std::vector<Ival> b(d_, Ival(prec_));
    b[d_ - 1] = c_[d_];
    for (std::size_t i = d_ - 1; i >= 1; --i) {
      Ival v(prec_);
      v = c_[i];
      v.add_mul(nu, b[i], t1_, t2_);
      b[i - 1] = v;
    }
    Ival rem(prec_);
    rem = c_[0];
    rem.add_mul(nu, b[0], t1_, t2_);
    if (!rem.contains_zero())
      return std::numeric_limits<double>::infinity();

    b[d_ - 1].abs_lo(a1_);
    if (mpfr_zero_p(a1_)) return std::numeric_limits<double>::infinity();
    mpfr_set_zero(t1_, 1);
    for (std::size_t i = 0; i + 1 < d_; ++i) {
      b[i].abs_hi(a2_);
      mpfr_div(a2_, a2_, a1_, MPFR_RNDU);
      if (mpfr_cmp(a2_, t1_) > 0) mpfr_set(t1_, a2_, MPFR_RNDU);
    }
    mpfr_add_ui(t1_, t1_, 1, MPFR_RNDU);
    mpfr_rootn_ui(t1_, t1_, kk, MPFR_RNDU);
    return mpfr_get_d(t1_, MPFR_RNDU);
  }

 private:
  void normalize() {
    long e = LONG_MIN;
    for (const auto& iv : c_) e = std::max(e, iv.max_exp());
    if (e == LONG_MIN || e == 0) return;
    for (auto& iv : c_) iv.scale2(-e);
  }

  mpfr_prec_t prec_;
  std::size_t d_;
  unsigned k_ = 0;
  std::vector<Ival> c_;
  mutable mpfr_t t1_, t2_, a1_, a2_;
};

// ------------------------------------------------------------------
// Exact integer polynomial utilities (coefficient vectors, ascending order,
// non-zero leading coefficient) and a Sturm chain over dyadic rationals.
// ------------------------------------------------------------------

using ZPoly = std::vector<cpp_int>;  // ascending coefficients

void strip_lead(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree_of(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

ZPoly derivative(const ZPoly& p) {
  ZPoly r;
  for (std::size_t i = 1; i < p.size(); ++i) r.push_back(cpp_int(i) * p[i]);
  strip_lead(r);
  return r;
}

cpp_int content_of(const ZPoly& p) {
  cpp_int g = 0;
  for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
  return g == 0 ? cpp_int(1) : g;
}

void primitivize(ZPoly& p) {
  cpp_int g = content_of(p);
  if (g > 1)
    for (auto& c : p) c /= g;
}

// Pseudo-remainder lc(B)^(degA-degB+1) * A mod B, sign-corrected so the
// result is a positive multiple of (A mod B).
ZPoly signed_prem(ZPoly a, const ZPoly& b) {
  const int db = degree_of(b);
  const cpp_int lead = b.back();
  int da = degree_of(a);
  const int steps = da - db + 1;
  for (int s = 0; s < steps && degree_of(a) >= db; ++s) {
    da = degree_of(a);
    const cpp_int q = a.back();
    for (auto& c : a) c *= lead;
    for (int i = 0; i <= db; ++i)
      a[static_cast<std::size_t>(da - db + i)] -= q * b[static_cast<std::size_t>(i)];
    strip_lead(a);
    if (degree_of(a) < db) {
      // fewer multiplications applied than the sign budget expects
      int remaining = steps - s - 1;
      if (remaining % 2 == 1 && lead < 0)
        for (auto& c : a) c = -c;
      break;
    }
  }
  // total multiplier lead^steps: flip if it was negative
  if (lead < 0 && steps % 2 == 1)
    for (auto& c : a) c = -c;
  return a;
}

// Sturm chain of a squarefree polynomial.
std::vector<ZPoly> sturm_chain(const ZPoly& p) {
  std::vector<ZPoly> chain;
  chain.push_back(p);
  ZPoly d = derivative(p);
  if (d.empty()) return chain;
  chain.push_back(d);
  while (degree_of(chain.back()) > 0) {
    ZPoly r = signed_prem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    primitivize(r);
    chain.push_back(std::move(r));
  }
  return chain;
}

// Dyadic rational num / 2^e with e >= 0.
struct Dyadic {
  cpp_int num;
  long e = 0;
};

Dyadic dyadic_from_double(double x) {
  Dyadic d;
  if (x == 0) return d;
  int ex;
  double m = std::frexp(x, &ex);  // x = m * 2^ex, |m| in [0.5, 1)
  long long mant = static_cast<long long>(std::ldexp(m, 53));
  long shift = ex - 53;
  if (shift >= 0) {
    d.num = cpp_int(mant) << shift;
    d.e = 0;
  } else {
    d.num = mant;
    d.e = -shift;
  }
  // normalize: strip common factors of two
  while (d.e > 0 && d.num != 0 && (d.num & 1) == 0) {
    d.num >>= 1;
    --d.e;
  }
  return d;
}

// Exact sign of p(num/2^e): sign of sum c_i num^i 2^{e(d-i)}.
int sign_at(const ZPoly& p, const Dyadic& x) {
  const int d = degree_of(p);
  cpp_int acc = 0;
  cpp_int pw = 1;
  for (int i = 0; i <= d; ++i) {
    acc += p[static_cast<std::size_t>(i)] * pw * (cpp_int(1) << (x.e * (d - i)));
    pw *= x.num;
  }
  if (acc == 0) return 0;
  return acc > 0 ? 1 : -1;
}

// Fast certified path: interval Horner at modest precision, falling back to
// the exact big-integer evaluation only when the interval straddles zero.
int sign_at_fast(const ZPoly& p, double x) {
  static thread_local mpfr_t lo, hi, xx, t;
  static thread_local bool init = false;
  if (!init) {
    mpfr_init2(lo, 192);
    mpfr_init2(hi, 192);
    mpfr_init2(xx, 192);
    mpfr_init2(t, 192);
    init = true;
  }
  mpfr_set_d(xx, x, MPFR_RNDN);  // doubles are exact in 192 bits
  mpfr_set_zero(lo, 1);
  mpfr_set_zero(hi, 1);
  for (std::size_t i = p.size(); i-- > 0;) {
    // [lo,hi] = [lo,hi]*x + c_i ; x >= 0 in every caller here
    mpfr_mul(lo, lo, xx, MPFR_RNDD);
    mpfr_mul(hi, hi, xx, MPFR_RNDU);
    const std::string s = p[i].str();
    mpfr_set_str(t, s.c_str(), 10, MPFR_RNDD);
    mpfr_add(lo, lo, t, MPFR_RNDD);
    mpfr_set_str(t, s.c_str(), 10, MPFR_RNDU);
    mpfr_add(hi, hi, t, MPFR_RNDU);
  }
  if (mpfr_sgn(lo) > 0) return 1;
  if (mpfr_sgn(hi) < 0) return -1;
  return sign_at(p, dyadic_from_double(x));
}

int variations_at(const std::vector<ZPoly>& chain, double x) {
  int v = 0, prev = 0;
  for (const auto& q : chain) {
    const int s = sign_at_fast(q, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

// Exact division of integer polynomials (exact by construction at call
// sites; throws DomainError otherwise via the laurent layer).
ZPoly zpoly_div(const ZPoly& a, const ZPoly& b) {
  IntLaurentPoly pa = poly_from_coeffs(std::vector<Int>(a.begin(), a.end()));
  IntLaurentPoly pb = poly_from_coeffs(std::vector<Int>(b.begin(), b.end()));
  IntLaurentPoly q = exact_div(pa, pb);
  auto [lo, c] = univariate_coeffs(q);
  ZPoly r(c.begin(), c.end());
  return r;
}

ZPoly int_gcd(ZPoly a, ZPoly b) {
  primitivize(a);
  primitivize(b);
  if (degree_of(a) < degree_of(b)) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = signed_prem(a, b);
    primitivize(r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() < 0)
    for (auto& c : a) c = -c;
  return a;
}

ZPoly squarefree_part(const ZPoly& p) {
  ZPoly g = int_gcd(p, derivative(p));
  if (degree_of(g) <= 0) return p;
  ZPoly r = zpoly_div(p, g);
  primitivize(r);
  return r;
}

// Removes one exact dyadic root x (which must be a root) from p.
ZPoly deflate_exact_root(const ZPoly& p, const Dyadic& x) {
  // divide by (2^e t - num), an exact primitive linear factor
  ZPoly lin;
  lin.push_back(-x.num);
  lin.push_back(cpp_int(1) << x.e);
  ZPoly q = zpoly_div(p, lin);
  primitivize(q);
  return q;
}

struct RootCounter {
  ZPoly ps;                     // squarefree
  std::vector<ZPoly> chain;

  explicit RootCounter(const ZPoly& p) : ps(squarefree_part(p)) {
    chain = sturm_chain(ps);
  }

  bool is_root(double x) const {
    return sign_at_fast(ps, x) == 0;
  }

  // distinct roots in the open interval (a, b); requires non-root endpoints
  int count_open(double a, double b) const {
    if (a >= b) return 0;
    return variations_at(chain, a) - variations_at(chain, b);
  }
};

ZPoly to_zpoly(const IntLaurentPoly& p) {
  auto [lo, c] = univariate_coeffs(p);
  return ZPoly(c.begin(), c.end());
}

double dtol_next_up(double x) {
  return std::nextafter(x, std::numeric_limits<double>::infinity());
}

}  // namespace

// ------------------------------------------------------------------
// public operations
// ------------------------------------------------------------------

double cauchy_bound(const IntLaurentPoly& p) {
  auto [lo, c] = univariate_coeffs(p);
  if (c.size() < 2) throw DomainError("cauchy_bound of a constant polynomial");
  mpfr_t m, t;
  mpfr_init2(m, 128);
  mpfr_init2(t, 128);
  mpfr_set_zero(m, 1);
  const std::string lead = boost::multiprecision::abs(c.back()).str();
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    const std::string s = boost::multiprecision::abs(c[i]).str();
    mpfr_set_str(t, s.c_str(), 10, MPFR_RNDU);
    if (mpfr_cmp(t, m) > 0) mpfr_set(m, t, MPFR_RNDU);
  }
  mpfr_set_str(t, lead.c_str(), 10, MPFR_RNDD);
  mpfr_div(m, m, t, MPFR_RNDU);
  mpfr_add_ui(m, m, 1, MPFR_RNDU);
  const double b = mpfr_get_d(m, MPFR_RNDU);
  mpfr_clear(m);
  mpfr_clear(t);
  return b;
}

namespace {

enum class BoundKind { House, Mahler };

RootEnclosure graeffe_enclosure(const IntLaurentPoly& p, double tol,
                                BoundKind kind) {
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  auto [shift, c] = univariate_coeffs(p);
  if (c.size() < 2)
    throw DomainError("root enclosure of a constant polynomial");

  const unsigned kmax = 48;
  for (mpfr_prec_t prec : {mpfr_prec_t(768), mpfr_prec_t(1536),
                           mpfr_prec_t(3072)}) {
    Graeffe g(c, prec);
    for (unsigned k = 1; k <= kmax; ++k) {
      g.step();
      if (k < 5) continue;
      double lo = 0, hi = 0;
      if (kind == BoundKind::House)
        g.house_bounds(lo, hi);
      else
        g.mahler_bounds(lo, hi);
      if (std::isfinite(hi) && hi - lo <= tol && lo <= hi)
        return RootEnclosure{lo, hi, tol};
    }
  }
  throw DomainError("internal: certified enclosure did not converge");
}

}  // namespace

RootEnclosure house(const IntLaurentPoly& p, double tol) {
  return graeffe_enclosure(p, tol, BoundKind::House);
}

RootEnclosure mahler_measure(const IntLaurentPoly& p, double tol) {
  return graeffe_enclosure(p, tol, BoundKind::Mahler);
}

RootEnclosure pow_enclosure(const RootEnclosure& e, unsigned k) {
  if (e.lo < 0) throw DomainError("pow_enclosure requires lo >= 0");
  mpfr_t lo, hi;
  mpfr_init2(lo, 256);
  mpfr_init2(hi, 256);
  mpfr_set_d(lo, e.lo, MPFR_RNDD);
  mpfr_set_d(hi, e.hi, MPFR_RNDU);
  mpfr_pow_ui(lo, lo, k, MPFR_RNDD);
  mpfr_pow_ui(hi, hi, k, MPFR_RNDU);
  RootEnclosure r;
  r.lo = mpfr_get_d(lo, MPFR_RNDD);
  r.hi = mpfr_get_d(hi, MPFR_RNDU);
  r.tol = dtol_next_up(r.hi - r.lo);
  mpfr_clear(lo);
  mpfr_clear(hi);
  return r;
}

int count_real_roots_in(const IntLaurentPoly& p, double a, double b) {
  if (a >= b) return 0;
  ZPoly z = to_zpoly(p);
  if (degree_of(z) < 1) return 0;
  ZPoly ps = squarefree_part(z);
  while (!ps.empty() && degree_of(ps) >= 1 &&
         sign_at(ps, dyadic_from_double(a)) == 0)
    ps = deflate_exact_root(ps, dyadic_from_double(a));
  int add_b = 0;
  while (!ps.empty() && degree_of(ps) >= 1 &&
         sign_at(ps, dyadic_from_double(b)) == 0) {
    add_b = 1;
    ps = deflate_exact_root(ps, dyadic_from_double(b));
  }
  if (ps.empty() || degree_of(ps) < 1) return add_b;
  std::vector<ZPoly> chain = sturm_chain(ps);
  return variations_at(chain, a) - variations_at(chain, b) + add_b;
}

Cert is_perron_poly(const IntLaurentPoly& p, double tol) {
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  auto [shift, c0] = univariate_coeffs(p);
  if (c0.size() < 2) throw DomainError("constant polynomial");
  ZPoly P(c0.begin(), c0.end());
  if (P.back() < 0)
    for (auto& x : P) x = -x;

  ZPoly deriv = derivative(P);
  ZPoly g = int_gcd(P, deriv);
  ZPoly pstar = degree_of(g) > 0 ? zpoly_div(P, g) : P;
  primitivize(pstar);

  const double B =
      cauchy_bound(poly_from_coeffs(std::vector<Int>(P.begin(), P.end())));
  std::vector<ZPoly> chain = sturm_chain(pstar);
  auto count_above = [&](double x, double y) {
    // distinct roots of pstar in (x, y]; y is never a root at call sites
    int add = 0;
    if (sign_at_fast(pstar, x) == 0) {
      // x itself is a root: shrink the left endpoint just above x
      // (handled by the exact-root paths below instead)
    }
    return variations_at(chain, x) - variations_at(chain, y);
  };

  const double top = dtol_next_up(B);
  if (count_above(1.0, top) == 0) return Cert::False;

  // isolate the largest real root in (a, b], exact dyadic hits handled apart
  double a = 1.0, b = top;
  bool exact_root = false;
  double exact_at = 0;
  while (count_above(a, b) > 1 || (b - a) > 0.25) {
    const double mid = a + (b - a) / 2;
    if (sign_at_fast(pstar, mid) == 0) {
      if (count_above(mid, b) == 0) {
        exact_root = true;
        exact_at = mid;
        break;
      }
      a = mid;
      continue;
    }
    if (count_above(mid, b) >= 1)
      a = mid;
    else
      b = mid;
  }

  auto refine_to = [&](double width) {
    while (b - a > width) {
      const double mid = a + (b - a) / 2;
      if (sign_at_fast(pstar, mid) == 0) {
        exact_root = true;
        exact_at = mid;
        return;
      }
      if (count_above(mid, b) >= 1)
        a = mid;
      else
        b = mid;
    }
  };

  auto root_hits = [&](const ZPoly& q) -> bool {
    // does q vanish at the isolated dominant root?
    if (degree_of(q) < 1) return false;
    if (exact_root) return sign_at(q, dyadic_from_double(exact_at)) == 0;
    RootCounter rc(q);
    // refine until the interval cleanly contains or excludes a root of q
    for (int iter = 0; iter < 200; ++iter) {
      if (rc.is_root(a) || rc.is_root(b)) {
        refine_to((b - a) / 4);
        continue;
      }
      const int n = rc.count_open(a, b);
      if (n == 0) return false;
      // q has a root in (a,b); is it OUR root?  q | pstar at call sites,
      // so any root of q inside the isolating interval is the root.
      return true;
    }
    return true;  // conservative
  };

  if (degree_of(g) > 0) {
    ZPoly shared = int_gcd(pstar, g);
    if (degree_of(shared) > 0 && root_hits(shared)) return Cert::False;
  }

  // paired root of equal modulus at -rho?
  {
    ZPoly mirror = pstar;
    for (std::size_t i = 1; i < mirror.size(); i += 2) mirror[i] = -mirror[i];
    ZPoly shared = int_gcd(pstar, mirror);
    if (degree_of(shared) > 0 && root_hits(shared)) return Cert::False;
  }

  if (exact_root) {
    a = exact_at;
    b = exact_at;
  }

  // separation via deflated Graeffe bounds at increasing depth
  const std::size_t d = P.size() - 1;
  const unsigned kmax = static_cast<unsigned>(std::clamp(
      std::ceil(std::log2(4.0 * static_cast<double>(d) / tol)), 14.0, 40.0));
  Graeffe gr(std::vector<Int>(P.begin(), P.end()), 1024);
  for (unsigned k = 1; k <= kmax; ++k) {
    gr.step();
    if (k < 8 || k % 2 != 0) continue;
    if (!exact_root) {
      const double target =
          std::max(std::ldexp(a, -static_cast<int>(k) - 14), 0x1p-48);
      refine_to(target);
    }
    const double rlo = exact_root ? exact_at : a;
    const double rhi = exact_root ? exact_at : b;
    const double b2 = gr.deflated_bound(rlo, rhi);
    if (b2 < rlo) return Cert::True;
  }
  return Cert::Indeterminate;
}

}  // namespace pafold

