#include "fplab/exactalg.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace fplab {

namespace {

Int int_gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Int div_exact(const Int& a, const Int& b) {
  Int r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Dense polynomial helpers for gcd computation. Coefficient of t^i at
// index i; invariant: no trailing zero (empty vector = zero polynomial).
using Dense = std::vector<Int>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Dense to_dense(const LaurentPolynomial& p) {
  Dense out;
  if (p.is_zero()) return out;
  assert(p.min_exp() >= 0);
  out.assign(static_cast<size_t>(p.max_exp()) + 1, Int(0));
  for (const auto& [e, c] : p.terms()) out[static_cast<size_t>(e)] = c;
  return out;
}

LaurentPolynomial from_dense(const Dense& p) {
  LaurentPolynomial out;
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) out.add_term(static_cast<std::int64_t>(i), p[i]);
  return out;
}

Int dense_content(const Dense& p) {
  Int g = 0;
  for (const auto& c : p) {
    g = int_gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

Dense divide_by_int(Dense p, const Int& d) {
  for (auto& c : p) c = div_exact(c, d);
  return p;
}

Dense primitive_part(const Dense& p) {
  if (p.empty()) return p;
  Int c = dense_content(p);
  Dense out = divide_by_int(p, c);
  if (out.back() < 0)
    for (auto& x : out) x = -x;
  return out;
}

// Pseudo-remainder of f by g: lc(g)^(deg f - deg g + 1) * f mod g.
Dense pseudo_remainder(Dense f, const Dense& g) {
  assert(!g.empty());
  const Int& lg = g.back();
  while (f.size() >= g.size()) {
    Int lead = f.back();
    size_t shift = f.size() - g.size();
    for (auto& c : f) c *= lg;
    for (size_t i = 0; i < g.size(); ++i)
      f[shift + i] -= lead * g[i];
    trim(f);
    if (f.empty()) break;
  }
  return f;
}

// Primitive gcd via the primitive pseudo-remainder sequence; leading
// coefficient normalized positive. Degrees here stay small, so the plain
// primitive PRS is exact and fast enough.
Dense primitive_gcd(Dense f, Dense g) {
  f = primitive_part(f);
  g = primitive_part(g);
  if (f.empty()) return g;
  if (g.empty()) return f;
  if (f.size() < g.size()) std::swap(f, g);
  while (!g.empty()) {
    Dense r = pseudo_remainder(f, g);
    f = std::move(g);
    g = primitive_part(r);
  }
  return f;
}

// Exact division of dense polynomials; the caller guarantees divisibility.
Dense divide_exact_poly(Dense f, const Dense& g) {
  assert(!g.empty());
  Dense q(f.size() >= g.size() ? f.size() - g.size() + 1 : 0, Int(0));
  while (f.size() >= g.size()) {
    size_t shift = f.size() - g.size();
    Int c = div_exact(f.back(), g.back());
    q[shift] = c;
    for (size_t i = 0; i < g.size(); ++i)
      f[shift + i] -= c * g[i];
    trim(f);
    if (f.empty()) break;
  }
  assert(f.empty());
  return q;
}

}  // namespace

LaurentPolynomial LaurentPolynomial::constant(Int c) {
  LaurentPolynomial p;
  p.add_term(0, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::monomial(Int c, std::int64_t exp) {
  LaurentPolynomial p;
  p.add_term(exp, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::one_minus_power(std::int64_t w) {
  LaurentPolynomial p;
  p.add_term(0, 1);
  p.add_term(w, -1);
  return p;
}

void LaurentPolynomial::add_term(std::int64_t exp, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(exp);
  if (it == terms_.end()) {
    terms_.emplace(exp, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Int LaurentPolynomial::coeff(std::int64_t exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Int(0) : it->second;
}

std::int64_t LaurentPolynomial::min_exp() const {
  assert(!terms_.empty());
  return terms_.begin()->first;
}

std::int64_t LaurentPolynomial::max_exp() const {
  assert(!terms_.empty());
  return terms_.rbegin()->first;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  LaurentPolynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  LaurentPolynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  LaurentPolynomial out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPolynomial LaurentPolynomial::shifted(std::int64_t k) const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

Int LaurentPolynomial::content() const {
  Int g = 0;
  for (const auto& [e, c] : terms_) {
    g = int_gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

std::string LaurentPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

RationalFunction::RationalFunction()
    : num_(), den_(LaurentPolynomial::constant(1)) {}

RationalFunction::RationalFunction(LaurentPolynomial num, LaurentPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("zero denominator");
  normalize();
}

RationalFunction RationalFunction::from_integer(const Int& c) {
  return RationalFunction(LaurentPolynomial::constant(c),
                          LaurentPolynomial::constant(1));
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPolynomial::constant(1);
    return;
  }
  // Shift so both parts are honest polynomials with no common power of t.
  std::int64_t m = std::min(num_.min_exp(), den_.min_exp());
  if (m != 0) {
    num_ = num_.shifted(-m);
    den_ = den_.shifted(-m);
  }
  Dense nf = to_dense(num_);
  Dense df = to_dense(den_);
  Int c = int_gcd(dense_content(nf), dense_content(df));
  if (c > 1) {
    nf = divide_by_int(nf, c);
    df = divide_by_int(df, c);
  }
  Dense g = primitive_gcd(nf, df);
  if (g.size() > 1) {
    nf = divide_exact_poly(std::move(nf), g);
    df = divide_exact_poly(std::move(df), g);
  }
  // Sign convention: lowest nonzero denominator coefficient positive.
  size_t low = 0;
  while (low < df.size() && df[low] == 0) ++low;
  if (low < df.size() && df[low] < 0) {
    for (auto& x : nf) x = -x;
    for (auto& x : df) x = -x;
  }
  num_ = from_dense(nf);
  den_ = from_dense(df);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

std::optional<Rat> RationalFunction::constant_value() const {
  if (num_.is_zero()) return Rat(0);
  if (num_.max_exp() != 0 || den_.max_exp() != 0) return std::nullopt;
  Rat v(num_.coeff(0), den_.coeff(0));
  v.canonicalize();
  return v;
}

std::vector<Rat> RationalFunction::series(std::int64_t degree_bound) const {
  Int d0 = den_.coeff(0);
  if (d0 == 0)
    throw NotExpandable("denominator has zero constant term, no power series");
  std::vector<Rat> out(static_cast<size_t>(degree_bound) + 1, Rat(0));
  for (std::int64_t k = 0; k <= degree_bound; ++k) {
    Rat acc(num_.coeff(k));
    for (std::int64_t j = 1; j <= k; ++j) {
      Int dj = den_.coeff(j);
      if (dj != 0) acc -= Rat(dj) * out[static_cast<size_t>(k - j)];
    }
    acc /= Rat(d0);
    acc.canonicalize();
    out[static_cast<size_t>(k)] = acc;
  }
  return out;
}

std::string RationalFunction::str() const {
  if (den_ == LaurentPolynomial::constant(1)) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

LaurentPolynomial elementary_symmetric_powers(const std::vector<std::int64_t>& weights,
                                              int sym_degree) {
  if (sym_degree < 0 || sym_degree > static_cast<int>(weights.size()))
    throw std::invalid_argument("symmetric degree out of range");
  std::vector<LaurentPolynomial> e(static_cast<size_t>(sym_degree) + 1);
  e[0] = LaurentPolynomial::constant(1);
  int seen = 0;
  for (std::int64_t w : weights) {
    ++seen;
    for (int j = std::min(sym_degree, seen); j >= 1; --j) {
      e[j] = e[j] + e[j - 1].shifted(w);
    }
  }
  return e[static_cast<size_t>(sym_degree)];
}

RationalFunction genus_term(const std::vector<std::int64_t>& weights, int sym_degree) {
  for (std::int64_t w : weights)
    if (w == 0) throw InvalidWeight("weights must be nonzero");
  LaurentPolynomial num = elementary_symmetric_powers(weights, sym_degree);
  LaurentPolynomial den = LaurentPolynomial::constant(1);
  for (std::int64_t w : weights) den = den * LaurentPolynomial::one_minus_power(w);
  return RationalFunction(std::move(num), std::move(den));
}

std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace fplab
