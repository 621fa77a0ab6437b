#pragma once

// Exact arithmetic in the field Q(q) of rational functions in one formal
// variable q, plus quantum integers [k], quantum factorials and the Gaussian
// scalar q^{ab}[a+b]!/([a]![b]!).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qaff/errors.hpp"

namespace qaff {

using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(std::string_view text);

// Dense univariate polynomial over Q, coefficients stored lowest degree first.
// The zero polynomial has no coefficients; the leading coefficient is never 0.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(Rational constant);
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly monomial(Rational c, int degree);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int i) const { return c_[i]; }
  const Rational& lead() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  // Number of leading zero coefficients from degree 0 up (the power of q
  // dividing the polynomial).
  int low_order() const;

  UPoly shifted_down(int k) const;  // divide by q^k, requires k <= low_order()
  UPoly shifted_up(int k) const;    // multiply by q^k
  UPoly scaled(const Rational& s) const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly operator-() const;
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  // Quotient and remainder; divisor must be nonzero.
  static void divmod(const UPoly& a, const UPoly& b, UPoly& quot, UPoly& rem);
  static UPoly gcd(UPoly a, UPoly b);  // monic, gcd(0,0) = 0

  Rational eval(const Rational& t) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// An element q^shift * num / den of Q(q) in canonical form:
//   * num == 0 implies den == 1 and shift == 0;
//   * num(0) != 0 and den(0) != 0 (powers of q live in `shift`);
//   * den is monic and gcd(num, den) == 1.
// Laurent polynomials in q are exactly the values with den == 1.
class QRat {
 public:
  QRat() = default;
  QRat(long c);  // NOLINT: implicit integer constants are convenient here
  QRat(const Rational& c);  // NOLINT
  static QRat q();
  static QRat q_pow(int e);
  static QRat monomial(const Rational& c, int e);
  static QRat laurent(const UPoly& poly, int shift);
  static QRat fraction(const UPoly& num, const UPoly& den, int shift = 0);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_laurent() const { return den_.is_one(); }
  // True when the value is c*q^e for some rational c and integer e.
  bool is_monomial() const { return den_.is_one() && num_.degree() == 0; }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  int shift() const { return shift_; }

  // Coefficient of q^e; only meaningful for Laurent values.
  Rational laurent_coeff(int e) const;
  int min_exponent() const { return shift_; }
  int max_exponent() const { return shift_ + num_.degree(); }

  QRat operator-() const;
  QRat inverse() const;
  QRat pow(int e) const;
  friend QRat operator+(const QRat& a, const QRat& b);
  friend QRat operator-(const QRat& a, const QRat& b);
  friend QRat operator*(const QRat& a, const QRat& b);
  friend QRat operator/(const QRat& a, const QRat& b);
  QRat& operator+=(const QRat& b) { return *this = *this + b; }
  QRat& operator-=(const QRat& b) { return *this = *this - b; }
  QRat& operator*=(const QRat& b) { return *this = *this * b; }
  QRat& operator/=(const QRat& b) { return *this = *this / b; }

  friend bool operator==(const QRat& a, const QRat& b) = default;
  // Equality decided by cross-multiplication, independent of canonical form.
  static bool cross_equal(const QRat& a, const QRat& b);
  // Arbitrary total order, used to key containers.
  static int compare(const QRat& a, const QRat& b);

  // Canonical text form "(c*q^e + ...)/(c*q^e + ...)", descending exponents.
  std::string to_string() const;
  static QRat parse(std::string_view text);

 private:
  void normalize();

  UPoly num_;
  UPoly den_{Rational(1)};
  int shift_ = 0;
};

std::ostream& operator<<(std::ostream& os, const QRat& r);

enum class QOp { add, sub, mul, div };
QRat qrat_arith(const QRat& a, const QRat& b, QOp op);

// [k] = (q^k - q^{-k}) / (q - q^{-1}); defined for every integer k.
QRat qint(int k);
// [k]! = [k][k-1]...[1]; k >= 0.
QRat qfact(int k);
// q^{ab} [a+b]! / ([a]! [b]!); a, b >= 0.
QRat gauss_p(int a, int b);

// m-th cyclotomic polynomial Phi_m(q), m >= 1.
UPoly cyclotomic(int m);

inline constexpr int kDefaultCyclotomicBound = 64;

// Specialize q to the nonzero rational t. Throws PoleError naming the
// vanishing denominator factor (a cyclotomic Phi_m with m <= bound when one
// vanishes, otherwise the linear factor q - t).
Rational eval_q(const QRat& r, const Rational& t, int cyclotomic_bound = kDefaultCyclotomicBound);

// Smallest m <= bound with Phi_m(t) == 0, or 0 when t is not such a root.
int root_of_unity_order(const Rational& t, int bound = kDefaultCyclotomicBound);

}  // namespace qaff
