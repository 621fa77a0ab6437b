#pragma once

// Multivariate Laurent polynomials in x_1..x_d over Q(q), fractions whose
// denominators are products of binomials (x_i - c x_j), theta factors and
// truncated one-variable series.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qaff/qcoeff.hpp"

namespace qaff {

inline constexpr int kMaxVars = 16;

// A permutation of {0..d-1}; perm[k] is the image of k.
using Perm = std::vector<int>;

Perm identity_perm(int d);
Perm transposition(int d, int a, int b);
Perm compose_perm(const Perm& outer, const Perm& inner);  // outer o inner
Perm inverse_perm(const Perm& p);
void check_perm(const Perm& p, int d);  // throws PreconditionError

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars);
  Monomial(int nvars, const std::vector<int>& exponents);
  static Monomial var(int nvars, int i, int power = 1);

  int nvars() const { return n_; }
  int operator[](int i) const { return e_[i]; }
  void set(int i, int e) { e_[i] = static_cast<int16_t>(e); }
  bool is_one() const;
  int degree() const;  // sum of exponents

  Monomial operator*(const Monomial& o) const;
  Monomial inverse() const;
  // x^e with x_k replaced by x_{perm[k]}.
  Monomial permuted(const Perm& perm) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.e_ <=> b.e_;
  }

 private:
  std::array<int16_t, kMaxVars> e_{};
  int n_ = 0;
};

enum class PolyOp { add, sub, mul };

class LaurentPoly {
 public:
  using Term = std::pair<Monomial, QRat>;

  explicit LaurentPoly(int nvars = 0) : n_(nvars) {}
  static LaurentPoly constant(int nvars, const QRat& c);
  static LaurentPoly monomial(const Monomial& m, const QRat& c = QRat(1));
  static LaurentPoly var(int nvars, int i);
  // Sums up repeated monomials and drops zeros.
  static LaurentPoly from_terms(int nvars, std::vector<Term> terms);

  int nvars() const { return n_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }
  bool is_constant() const;
  QRat coeff(const Monomial& m) const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
  LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }
  LaurentPoly scaled(const QRat& c) const;
  LaurentPoly times(const Monomial& m) const;
  LaurentPoly permuted(const Perm& perm) const;
  LaurentPoly pow(int e) const;  // e >= 0, or e < 0 for a single monomial

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  Rational evaluate(const std::vector<Rational>& x, const Rational& q) const;

  // "coef * x1^e1 ... xd^ed" terms joined by " + ", coefficients in QRat text
  // form; "0" for the zero polynomial.
  std::string to_string() const;
  // Accepts the canonical form and lighter hand-written forms such as
  // "x1^2 x2 + 3 * x3^-1" (coefficient may be a rational or QRat text).
  static LaurentPoly parse(std::string_view text, int nvars);

 private:
  void check_same(const LaurentPoly& o) const;
  int n_;
  std::vector<Term> t_;  // sorted by monomial, no zero coefficients
};

LaurentPoly poly_arith(const LaurentPoly& a, const LaurentPoly& b, PolyOp op);

// c * q^e, the only q-dependence allowed inside a binomial.
struct QMono {
  Rational coef{1};
  int qexp = 0;

  QRat value() const { return QRat::monomial(coef, qexp); }
  QMono operator*(const QMono& o) const { return {coef * o.coef, qexp + o.qexp}; }
  QMono inverse() const { return {1 / coef, -qexp}; }
  friend bool operator==(const QMono&, const QMono&) = default;
};

// The binomial x_i - c x_j with i < j and c = coef*q^qexp nonzero.
struct Binomial {
  int i = 0;
  int j = 1;
  QMono c;

  // Writes a x_i - b x_j as unit * Binomial with i < j.
  static Binomial normalize(const QMono& a, int i, const QMono& b, int j, QMono& unit);
  LaurentPoly as_poly(int nvars) const;
  Binomial permuted(const Perm& perm, QMono& unit) const;
  Rational evaluate(const std::vector<Rational>& x, const Rational& q) const;
  std::string to_string() const;

  friend bool operator==(const Binomial& a, const Binomial& b) = default;
  friend bool operator<(const Binomial& a, const Binomial& b);
};

// Exact division of p by the binomial; returns false (leaving quot
// unspecified) when the binomial does not divide p.
bool divide_exact(const LaurentPoly& p, const Binomial& b, LaurentPoly& quot);

// numerator / prod binomial^mult. Monomial and scalar denominators are
// absorbed into the Laurent numerator.
class StructuredFraction {
 public:
  using Factor = std::pair<Binomial, int>;

  explicit StructuredFraction(int nvars = 0) : num_(nvars) {}
  StructuredFraction(LaurentPoly num);  // NOLINT: polynomials are fractions
  StructuredFraction(LaurentPoly num, std::vector<Factor> den);

  int nvars() const { return num_.nvars(); }
  const LaurentPoly& numerator() const { return num_; }
  const std::vector<Factor>& denominator() const { return den_; }
  bool is_polynomial() const { return den_.empty(); }
  bool is_zero() const { return num_.is_zero(); }

  StructuredFraction scaled(const QRat& c) const;
  StructuredFraction times(const LaurentPoly& p) const;
  StructuredFraction permuted(const Perm& perm) const;
  friend StructuredFraction operator*(const StructuredFraction& a, const StructuredFraction& b);
  friend StructuredFraction operator+(const StructuredFraction& a, const StructuredFraction& b);
  friend StructuredFraction operator-(const StructuredFraction& a, const StructuredFraction& b);
  StructuredFraction operator-() const { return scaled(QRat(-1)); }

  // Cancels every binomial that divides the numerator exactly.
  StructuredFraction reduced() const;
  // The polynomial value; throws NotPolynomialError naming a leftover factor.
  LaurentPoly to_poly() const;

  // Value equality via the common denominator.
  static bool equal(const StructuredFraction& a, const StructuredFraction& b);
  Rational evaluate(const std::vector<Rational>& x, const Rational& q) const;
  std::string to_string() const;

 private:
  LaurentPoly num_;
  std::vector<Factor> den_;  // sorted, multiplicities > 0
};

StructuredFraction frac_product(const std::vector<StructuredFraction>& fs, int nvars);
// Sum over the least common denominator, reduced once at the end.
StructuredFraction frac_sum(const std::vector<StructuredFraction>& fs, int nvars);

// c * q^e * x_var.
struct VarTerm {
  QMono c;
  int var = 0;
};
inline VarTerm qx(int var, int qexp = 0, Rational coef = Rational(1)) {
  return {{std::move(coef), qexp}, var};
}

// theta_m(A/B) = (q^m A - B) / (A - q^m B). When A and B involve the same
// variable the value is a scalar; a vanishing denominator throws.
StructuredFraction theta_ratio(int nvars, int m, const VarTerm& a, const VarTerm& b);

// Truncated power series in an auxiliary variable y with Laurent coefficients;
// s[l] is the coefficient of y^l.
using Series = std::vector<LaurentPoly>;

enum class Expansion { at_infinity, at_zero };

// theta_m(coef * q^qexp * xmon * z^zpow) with zpow = +1 or -1.
struct ThetaFactor {
  int m = 1;
  QMono c;
  Monomial xmon;
  int zpow = 1;
};

// Coefficients of z^{-l} (at_infinity) or z^{l} (at_zero), l = 0..order, of
// the product of the factors.
Series expand_theta_series(int nvars, const std::vector<ThetaFactor>& factors,
                           Expansion direction, int order);

Series series_mul(const Series& a, const Series& b, int order);
// a[0] must be a nonzero constant.
Series series_inverse(const Series& a, int order);
// a[0] must equal 1.
Series series_log(const Series& a, int order);

}  // namespace qaff
