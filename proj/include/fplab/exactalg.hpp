#ifndef FPLAB_EXACTALG_HPP
#define FPLAB_EXACTALG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace fplab {

using Int = mpz_class;
using Rat = mpq_class;

struct InvalidWeight : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotExpandable : std::domain_error {
  using std::domain_error::domain_error;
};

/// Sparse Laurent polynomial in one indeterminate t with exact integer
/// coefficients. Invariant: no stored coefficient is zero; the zero
/// polynomial is the empty map.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;

  static LaurentPolynomial constant(Int c);
  // c * t^exp
  static LaurentPolynomial monomial(Int c, std::int64_t exp);
  // 1 - t^w, w any nonzero integer
  static LaurentPolynomial one_minus_power(std::int64_t w);

  bool is_zero() const { return terms_.empty(); }
  const std::map<std::int64_t, Int>& terms() const { return terms_; }
  Int coeff(std::int64_t exp) const;
  std::int64_t min_exp() const;  // requires nonzero
  std::int64_t max_exp() const;  // requires nonzero

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-() const;
  // multiply by t^k
  LaurentPolynomial shifted(std::int64_t k) const;

  bool operator==(const LaurentPolynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPolynomial& o) const { return !(*this == o); }

  // gcd of all coefficients (nonnegative); 0 for the zero polynomial
  Int content() const;

  std::string str() const;

  void add_term(std::int64_t exp, const Int& c);

 private:
  std::map<std::int64_t, Int> terms_;
};

/// Quotient of two integer polynomials (no negative exponents), kept in a
/// normal form that makes equality bit-exact:
///   - denominator nonzero,
///   - numerator and denominator share no nonconstant factor and no
///     integer content,
///   - the denominator's lowest-degree nonzero coefficient is positive.
/// Denominators built from products of 1-t^w stay primitive with constant
/// coefficient +1 under every operation here.
class RationalFunction {
 public:
  RationalFunction();  // zero: 0/1
  RationalFunction(LaurentPolynomial num, LaurentPolynomial den);

  static RationalFunction from_integer(const Int& c);

  const LaurentPolynomial& numerator() const { return num_; }
  const LaurentPolynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-() const;
  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  /// The constant c when the function reduces to one, std::nullopt otherwise.
  std::optional<Rat> constant_value() const;

  /// Power-series coefficients [c_0..c_D]; requires a denominator with
  /// nonzero constant term, else throws NotExpandable.
  std::vector<Rat> series(std::int64_t degree_bound) const;

  std::string str() const;

 private:
  void normalize();
  LaurentPolynomial num_, den_;
};

inline RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b) {
  return a + b;
}

/// sigma_i(t^{w_1},...,t^{w_n}) / prod_j (1 - t^{w_j}) rewritten with
/// positive exponents only, via 1/(1-t^-w) = -t^w/(1-t^w).
RationalFunction genus_term(const std::vector<std::int64_t>& weights, int sym_degree);

/// i-th elementary symmetric polynomial evaluated at (t^{w_1},...,t^{w_n}).
LaurentPolynomial elementary_symmetric_powers(const std::vector<std::int64_t>& weights,
                                              int sym_degree);

std::string rat_str(const Rat& q);

}  // namespace fplab

#endif
