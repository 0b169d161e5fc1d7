#include "pafold/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace pafold {

IntLaurentPoly::IntLaurentPoly(std::vector<std::string> vars)
    : vars_(std::move(vars)) {
  if (vars_.empty()) throw DomainError("polynomial needs at least one variable");
}

IntLaurentPoly IntLaurentPoly::zero(std::vector<std::string> vars) {
  return IntLaurentPoly(std::move(vars));
}

IntLaurentPoly IntLaurentPoly::constant(Int c, std::vector<std::string> vars) {
  IntLaurentPoly p(std::move(vars));
  p.add_term(Exps(p.vars_.size(), 0), c);
  return p;
}

IntLaurentPoly IntLaurentPoly::monomial(Int c, Exps exps,
                                        std::vector<std::string> vars) {
  IntLaurentPoly p(std::move(vars));
  if (exps.size() != p.vars_.size())
    throw DomainError("exponent vector length does not match variable count");
  p.add_term(exps, c);
  return p;
}

void IntLaurentPoly::add_term(const Exps& e, const Int& c) {
  if (c == 0) return;
  if (e.size() != vars_.size())
    throw DomainError("exponent vector length does not match variable count");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

const Int& IntLaurentPoly::coeff(const Exps& e) const {
  static const Int kZero = 0;
  auto it = terms_.find(e);
  return it == terms_.end() ? kZero : it->second;
}

std::int64_t IntLaurentPoly::total_degree() const {
  if (terms_.empty()) throw DomainError("total degree of the zero polynomial");
  std::int64_t best = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::int64_t d = 0;
    for (auto x : e) d += x;
    if (first || d > best) best = d;
    first = false;
  }
  return best;
}

void IntLaurentPoly::require_same_vars(const IntLaurentPoly& o) const {
  if (vars_ != o.vars_)
    throw DomainError("operands have different variable lists");
}

IntLaurentPoly IntLaurentPoly::operator+(const IntLaurentPoly& o) const {
  require_same_vars(o);
  IntLaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

IntLaurentPoly IntLaurentPoly::operator-(const IntLaurentPoly& o) const {
  require_same_vars(o);
  IntLaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

IntLaurentPoly IntLaurentPoly::operator-() const {
  IntLaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

IntLaurentPoly IntLaurentPoly::operator*(const IntLaurentPoly& o) const {
  require_same_vars(o);
  IntLaurentPoly r(vars_);
  Exps e(vars_.size());
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

IntLaurentPoly add(const IntLaurentPoly& p, const IntLaurentPoly& q) {
  return p + q;
}
IntLaurentPoly sub(const IntLaurentPoly& p, const IntLaurentPoly& q) {
  return p - q;
}
IntLaurentPoly mul(const IntLaurentPoly& p, const IntLaurentPoly& q) {
  return p * q;
}

// ---------------------------------------------------------------- parsing

namespace {

struct RawTerm {
  Int coeff;
  std::map<std::string, std::int64_t> exps;
};

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  std::vector<RawTerm> run() {
    std::vector<RawTerm> terms;
    skip_ws();
    if (eof()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (!eof()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-' between terms", pos_);
      }
      terms.push_back(term(sign));
      skip_ws();
      first = false;
    }
    return terms;
  }

 private:
  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Int integer_literal() {
    std::size_t start = pos_;
    std::string digits;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits.push_back(peek());
      ++pos_;
    }
    if (digits.empty()) throw ParseError("expected an integer", start);
    return Int(digits);
  }

  std::int64_t exponent_literal() {
    skip_ws();
    bool neg = false;
    if (!eof() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos_;
      skip_ws();
    }
    std::size_t start = pos_;
    Int v = integer_literal();
    if (v > Int(1) << 40) throw ParseError("exponent too large", start);
    auto x = static_cast<std::int64_t>(v);
    return neg ? -x : x;
  }

  std::string identifier() {
    std::size_t start = pos_;
    std::string name;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                      peek() == '_')) {
      name.push_back(peek());
      ++pos_;
    }
    if (name.empty() ||
        std::isdigit(static_cast<unsigned char>(name.front())))
      throw ParseError("expected a variable name", start);
    return name;
  }

  RawTerm term(int sign) {
    RawTerm t;
    t.coeff = sign;
    skip_ws();
    if (eof()) throw ParseError("dangling sign", pos_);
    bool have_any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff *= integer_literal();
      have_any = true;
      skip_ws();
      if (!eof() && peek() == '*') {
        ++pos_;
        skip_ws();
        factor(t);
      } else if (!eof() && (std::isalpha(static_cast<unsigned char>(peek())) ||
                            peek() == '_')) {
        factor(t);
      }
    } else {
      factor(t);
      have_any = true;
    }
    // further factors: "*x^2" or juxtaposed identifier
    while (true) {
      skip_ws();
      if (!eof() && peek() == '*') {
        ++pos_;
        skip_ws();
        factor(t);
      } else if (!eof() && (std::isalpha(static_cast<unsigned char>(peek())) ||
                            peek() == '_')) {
        factor(t);
      } else {
        break;
      }
    }
    if (!have_any) throw ParseError("empty term", pos_);
    return t;
  }

  void factor(RawTerm& t) {
    skip_ws();
    if (eof() || (!std::isalpha(static_cast<unsigned char>(peek())) &&
                  peek() != '_'))
      throw ParseError("expected a variable name", pos_);
    std::string name = identifier();
    std::int64_t e = 1;
    skip_ws();
    if (!eof() && peek() == '^') {
      ++pos_;
      e = exponent_literal();
    }
    t.exps[name] += e;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

IntLaurentPoly parse_poly(const std::string& text) {
  Parser parser(text);
  std::vector<RawTerm> raw = parser.run();

  std::set<std::string> names;
  for (const auto& t : raw)
    for (const auto& [n, e] : t.exps) names.insert(n);
  std::vector<std::string> vars(names.begin(), names.end());
  if (vars.empty()) vars = {"t"};

  IntLaurentPoly p(vars);
  Exps e(vars.size());
  for (const auto& t : raw) {
    std::fill(e.begin(), e.end(), 0);
    for (const auto& [n, x] : t.exps) {
      auto it = std::lower_bound(vars.begin(), vars.end(), n);
      e[static_cast<std::size_t>(it - vars.begin())] = x;
    }
    p.add_term(e, t.coeff);
  }
  return p;
}

std::string format_poly(const IntLaurentPoly& p) {
  if (p.is_zero()) return "0";

  struct Entry {
    std::int64_t total;
    Exps e;
    Int c;
  };
  std::vector<Entry> entries;
  for (const auto& [e, c] : p.terms()) {
    std::int64_t tot = 0;
    for (auto x : e) tot += x;
    entries.push_back({tot, e, c});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.total != b.total) return a.total > b.total;
    return a.e > b.e;
  });

  std::ostringstream out;
  bool first = true;
  for (const auto& ent : entries) {
    Int mag = ent.c < 0 ? Int(-ent.c) : ent.c;
    if (first) {
      if (ent.c < 0) out << "-";
      first = false;
    } else {
      out << (ent.c < 0 ? " - " : " + ");
    }
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < ent.e.size(); ++i) {
      if (ent.e[i] == 0) continue;
      std::string f = p.vars()[i];
      if (ent.e[i] != 1) f += "^" + std::to_string(ent.e[i]);
      factors.push_back(f);
    }
    if (factors.empty()) {
      out << mag.str();
    } else {
      bool coeff_printed = false;
      if (mag != 1) {
        out << mag.str();
        coeff_printed = true;
      }
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (coeff_printed || i > 0) out << "*";
        out << factors[i];
      }
    }
  }
  return out.str();
}

// ----------------------------------------------------------- exact_div

namespace {

// Componentwise minimum exponent per variable over all terms.
Exps content_exps(const IntLaurentPoly& p) {
  Exps lo(p.vars().size(), 0);
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (first) {
      lo = e;
      first = false;
    } else {
      for (std::size_t i = 0; i < lo.size(); ++i) lo[i] = std::min(lo[i], e[i]);
    }
  }
  return lo;
}

IntLaurentPoly shift_exps(const IntLaurentPoly& p, const Exps& delta) {
  IntLaurentPoly r(p.vars());
  Exps e(p.vars().size());
  for (const auto& [ep, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + delta[i];
    r.add_term(e, c);
  }
  return r;
}

}  // namespace

IntLaurentPoly exact_div(const IntLaurentPoly& p, const IntLaurentPoly& q) {
  if (p.vars() != q.vars())
    throw DomainError("operands have different variable lists");
  if (q.is_zero()) throw DivisionError("division by the zero polynomial");
  if (p.is_zero()) return IntLaurentPoly::zero(p.vars());

  const std::size_t k = p.vars().size();
  Exps cp = content_exps(p), cq = content_exps(q);
  Exps neg_cp(k), neg_cq(k), delta(k);
  for (std::size_t i = 0; i < k; ++i) {
    neg_cp[i] = -cp[i];
    neg_cq[i] = -cq[i];
    delta[i] = cp[i] - cq[i];
  }
  IntLaurentPoly rem = shift_exps(p, neg_cp);
  IntLaurentPoly div = shift_exps(q, neg_cq);

  const auto& dlead = *div.terms().rbegin();
  IntLaurentPoly quot(p.vars());
  Exps d(k);
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms().rbegin();
    if (rlead.first < dlead.first)
      throw DivisionError("non-zero remainder in exact division");
    bool ok = true;
    for (std::size_t i = 0; i < k; ++i) {
      d[i] = rlead.first[i] - dlead.first[i];
      if (d[i] < 0) ok = false;
    }
    if (!ok || rlead.second % dlead.second != 0)
      throw DivisionError("non-zero remainder in exact division");
    Int c = rlead.second / dlead.second;
    quot.add_term(d, c);
    IntLaurentPoly piece = IntLaurentPoly::monomial(c, d, p.vars()) * div;
    rem = rem - piece;
  }
  IntLaurentPoly result = shift_exps(quot, delta);
  if (result * q != p)
    throw DivisionError("non-zero remainder in exact division");
  return result;
}

// --------------------------------------------------------- specialization

IntLaurentPoly specialize(const IntLaurentPoly& p,
                          const std::vector<std::int64_t>& m) {
  if (m.size() != p.vars().size())
    throw DomainError("exponent map length does not match variable count");
  IntLaurentPoly r((std::vector<std::string>{"t"}));
  Exps e(1);
  for (const auto& [ep, c] : p.terms()) {
    std::int64_t x = 0;
    for (std::size_t i = 0; i < m.size(); ++i) x += m[i] * ep[i];
    e[0] = x;
    r.add_term(e, c);
  }
  return r;
}

// ------------------------------------------------------- univariate views

std::pair<std::int64_t, std::vector<Int>> univariate_coeffs(
    const IntLaurentPoly& p) {
  if (p.is_zero()) throw DomainError("zero polynomial has no coefficients");
  const std::size_t k = p.vars().size();
  std::size_t active = k;  // index of the single active variable
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < k; ++i) {
      if (e[i] == 0) continue;
      if (active == k) {
        active = i;
      } else if (active != i) {
        throw DomainError("polynomial is not univariate");
      }
    }
  }
  if (active == k) return {0, {p.terms().begin()->second}};  // constant

  std::int64_t lo = 0, hi = 0;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (first) {
      lo = hi = e[active];
      first = false;
    } else {
      lo = std::min(lo, e[active]);
      hi = std::max(hi, e[active]);
    }
  }
  std::vector<Int> coeffs(static_cast<std::size_t>(hi - lo + 1), Int(0));
  for (const auto& [e, c] : p.terms())
    coeffs[static_cast<std::size_t>(e[active] - lo)] = c;
  return {lo, coeffs};
}

std::int64_t reduced_degree(const IntLaurentPoly& p) {
  auto [lo, coeffs] = univariate_coeffs(p);
  return static_cast<std::int64_t>(coeffs.size()) - 1;
}

IntLaurentPoly poly_from_coeffs(const std::vector<Int>& coeffs,
                                const std::string& var) {
  IntLaurentPoly p((std::vector<std::string>{var}));
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    p.add_term({static_cast<std::int64_t>(i)}, coeffs[i]);
  return p;
}

// ---------------------------------------------------------- reciprocity

bool is_reciprocal(const IntLaurentPoly& p) {
  if (p.is_zero()) throw DomainError("zero polynomial");
  auto [lo, c] = univariate_coeffs(p);
  const std::size_t d = c.size() - 1;
  bool plus = true, minus = true;
  for (std::size_t i = 0; i <= d; ++i) {
    if (c[i] != c[d - i]) plus = false;
    if (c[i] != -c[d - i]) minus = false;
  }
  return plus || minus;
}

// ------------------------------------------------------ named families

IntLaurentPoly lt_polynomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b <= 0 || a >= b)
    throw DomainError("lt_polynomial requires 0 <= a < b");
  IntLaurentPoly p((std::vector<std::string>{"t"}));
  p.add_term({2 * b}, 1);
  p.add_term({b + a}, -1);
  p.add_term({b}, -1);
  p.add_term({b - a}, -1);
  p.add_term({0}, 1);
  return p;
}

IntLaurentPoly named_polynomial(const std::string& name) {
  if (name == "lehmer")
    return poly_from_coeffs({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
  if (name == "smyth") return poly_from_coeffs({-1, -1, 0, 1});
  if (name == "sigma") return poly_from_coeffs({1, -1, 1});
  if (name.size() > 4 && name.rfind("pn(", 0) == 0 && name.back() == ')') {
    const std::string inner = name.substr(3, name.size() - 4);
    if (!inner.empty() &&
        std::all_of(inner.begin(), inner.end(), [](unsigned char ch) {
          return std::isdigit(ch);
        })) {
      long n = std::stol(inner);
      if (n < 2) throw DomainError("pn(n) requires n >= 2");
      IntLaurentPoly p((std::vector<std::string>{"t"}));
      p.add_term({n}, 1);
      p.add_term({1}, -1);
      p.add_term({0}, -1);
      return p;
    }
  }
  throw DomainError("unknown polynomial name: " + name);
}

}  // namespace pafold
