#include "qaff/qcoeff.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <sstream>

namespace qaff {

Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
          s.end());
  if (s.empty()) throw ParseError("empty rational");
  if (s.front() == '+') s.erase(s.begin());
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParseError("bad rational '" + std::string(text) + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------- UPoly

UPoly::UPoly(Rational constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(Rational c, int degree) {
  UPoly p;
  if (c == 0) return p;
  p.c_.assign(degree + 1, Rational(0));
  p.c_[degree] = std::move(c);
  return p;
}

bool UPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int UPoly::low_order() const {
  int k = 0;
  while (k < static_cast<int>(c_.size()) && c_[k] == 0) ++k;
  return k;
}

UPoly UPoly::shifted_down(int k) const {
  if (k == 0 || is_zero()) return *this;
  UPoly p;
  p.c_.assign(c_.begin() + k, c_.end());
  return p;
}

UPoly UPoly::shifted_up(int k) const {
  if (k == 0 || is_zero()) return *this;
  UPoly p;
  p.c_.assign(k, Rational(0));
  p.c_.insert(p.c_.end(), c_.begin(), c_.end());
  return p;
}

UPoly UPoly::scaled(const Rational& s) const {
  if (s == 0) return {};
  UPoly p = *this;
  for (auto& x : p.c_) x *= s;
  return p;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  UPoly r;
  const auto& big = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
  const auto& small = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
  r.c_ = big;
  for (std::size_t i = 0; i < small.size(); ++i) r.c_[i] += small[i];
  r.trim();
  return r;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& quot, UPoly& rem) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  rem = a;
  quot = UPoly();
  if (a.degree() < b.degree()) return;
  quot.c_.assign(a.degree() - b.degree() + 1, Rational(0));
  const Rational inv_lead = 1 / b.lead();
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const int shift = rem.degree() - b.degree();
    Rational f = rem.lead() * inv_lead;
    for (int i = 0; i <= b.degree(); ++i) rem.c_[i + shift] -= f * b.c_[i];
    quot.c_[shift] = std::move(f);
    rem.trim();
  }
  quot.trim();
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly qt, r;
    divmod(a, b, qt, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a = a.scaled(1 / a.lead());
  return a;
}

Rational UPoly::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

// ---------------------------------------------------------------- QRat

QRat::QRat(long c) : num_(Rational(c)) {}
QRat::QRat(const Rational& c) : num_(c) {}

QRat QRat::q() { return q_pow(1); }

QRat QRat::q_pow(int e) { return monomial(Rational(1), e); }

QRat QRat::monomial(const Rational& c, int e) {
  QRat r;
  if (c == 0) return r;
  r.num_ = UPoly(c);
  r.shift_ = e;
  return r;
}

QRat QRat::laurent(const UPoly& poly, int shift) {
  QRat r;
  r.num_ = poly;
  r.shift_ = shift;
  r.normalize();
  return r;
}

QRat QRat::fraction(const UPoly& num, const UPoly& den, int shift) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  QRat r;
  r.num_ = num;
  r.den_ = den;
  r.shift_ = shift;
  r.normalize();
  return r;
}

bool QRat::is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }

void QRat::normalize() {
  if (num_.is_zero()) {
    den_ = UPoly(Rational(1));
    shift_ = 0;
    return;
  }
  if (const int k = num_.low_order(); k > 0) {
    num_ = num_.shifted_down(k);
    shift_ += k;
  }
  if (const int k = den_.low_order(); k > 0) {
    den_ = den_.shifted_down(k);
    shift_ -= k;
  }
  if (den_.degree() > 0) {
    UPoly g = UPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      UPoly qt, r;
      UPoly::divmod(num_, g, qt, r);
      num_ = std::move(qt);
      UPoly::divmod(den_, g, qt, r);
      den_ = std::move(qt);
    }
  }
  if (den_.lead() != 1) {
    const Rational s = 1 / den_.lead();
    num_ = num_.scaled(s);
    den_ = den_.scaled(s);
  }
}

Rational QRat::laurent_coeff(int e) const {
  const int i = e - shift_;
  if (i < 0 || i > num_.degree()) return Rational(0);
  return num_[i];
}

QRat QRat::operator-() const {
  QRat r = *this;
  r.num_ = -r.num_;
  return r;
}

QRat QRat::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(q)");
  QRat r;
  r.num_ = den_;
  r.den_ = num_;
  r.shift_ = -shift_;
  if (r.den_.lead() != 1) {
    const Rational s = 1 / r.den_.lead();
    r.num_ = r.num_.scaled(s);
    r.den_ = r.den_.scaled(s);
  }
  return r;
}

QRat QRat::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  QRat result(1);
  QRat base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

QRat operator+(const QRat& a, const QRat& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int s = std::min(a.shift_, b.shift_);
  QRat r;
  r.shift_ = s;
  if (a.den_ == b.den_) {
    r.num_ = a.num_.shifted_up(a.shift_ - s) + b.num_.shifted_up(b.shift_ - s);
    r.den_ = a.den_;
  } else {
    r.num_ = a.num_.shifted_up(a.shift_ - s) * b.den_ + b.num_.shifted_up(b.shift_ - s) * a.den_;
    r.den_ = a.den_ * b.den_;
  }
  r.normalize();
  return r;
}

QRat operator-(const QRat& a, const QRat& b) { return a + (-b); }

QRat operator*(const QRat& a, const QRat& b) {
  if (a.is_zero() || b.is_zero()) return QRat();
  QRat r;
  r.shift_ = a.shift_ + b.shift_;
  r.num_ = a.num_ * b.num_;
  if (a.den_.is_one() && b.den_.is_one()) return r;  // already canonical
  r.den_ = a.den_ * b.den_;
  r.normalize();
  return r;
}

QRat operator/(const QRat& a, const QRat& b) {
  if (b.is_zero()) throw DivisionByZero("division by zero in Q(q)");
  return a * b.inverse();
}

bool QRat::cross_equal(const QRat& a, const QRat& b) {
  const int s = std::min(a.shift_, b.shift_);
  return a.num_.shifted_up(a.shift_ - s) * b.den_ == b.num_.shifted_up(b.shift_ - s) * a.den_;
}

namespace {
int compare_poly(const UPoly& a, const UPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = a.degree(); i >= 0; --i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

void append_terms(std::ostringstream& os, const UPoly& p, int shift) {
  if (p.is_zero()) {
    os << "0";
    return;
  }
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    if (p[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << p[i].get_str() << "*q^" << (i + shift);
  }
}

// Parses "c*q^e + c*q^e ..." into a map exponent -> coefficient.
std::map<int, Rational> parse_terms(std::string_view text) {
  std::map<int, Rational> out;
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
          s.end());
  if (s == "0") return out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    // A term ends at the next '+' that is not the sign of an exponent or coefficient.
    std::size_t end = pos;
    while (end < s.size()) {
      if (s[end] == '+' && end > pos && s[end - 1] != '^' && s[end - 1] != '*') break;
      ++end;
    }
    const std::string term = s.substr(pos, end - pos);
    const auto star = term.find("*q^");
    if (star == std::string::npos) throw ParseError("bad q-term '" + term + "'");
    const Rational c = parse_rational(term.substr(0, star));
    int e = 0;
    try {
      e = std::stoi(term.substr(star + 3));
    } catch (const std::exception&) {
      throw ParseError("bad exponent in '" + term + "'");
    }
    out[e] += c;
    pos = end + 1;
  }
  return out;
}

UPoly terms_to_poly(const std::map<int, Rational>& terms, int& shift) {
  if (terms.empty()) {
    shift = 0;
    return {};
  }
  shift = terms.begin()->first;
  std::vector<Rational> c(terms.rbegin()->first - shift + 1, Rational(0));
  for (const auto& [e, v] : terms) c[e - shift] = v;
  return UPoly(std::move(c));
}
}  // namespace

int QRat::compare(const QRat& a, const QRat& b) {
  if (a.shift_ != b.shift_) return a.shift_ < b.shift_ ? -1 : 1;
  if (int c = compare_poly(a.num_, b.num_); c != 0) return c;
  return compare_poly(a.den_, b.den_);
}

std::string QRat::to_string() const {
  std::ostringstream os;
  os << "(";
  append_terms(os, num_, shift_);
  os << ")/(";
  append_terms(os, den_, 0);
  os << ")";
  return os.str();
}

QRat QRat::parse(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
          s.end());
  const auto mid = s.find(")/(");
  if (s.size() < 5 || s.front() != '(' || s.back() != ')' || mid == std::string::npos)
    throw ParseError("QRat must look like '(num)/(den)', got '" + std::string(text) + "'");
  int ns = 0, ds = 0;
  const UPoly num = terms_to_poly(parse_terms(s.substr(1, mid - 1)), ns);
  const UPoly den = terms_to_poly(parse_terms(s.substr(mid + 3, s.size() - mid - 4)), ds);
  if (den.is_zero()) throw ParseError("QRat with zero denominator");
  return fraction(num, den, ns - ds);
}

std::ostream& operator<<(std::ostream& os, const QRat& r) { return os << r.to_string(); }

QRat qrat_arith(const QRat& a, const QRat& b, QOp op) {
  switch (op) {
    case QOp::add: return a + b;
    case QOp::sub: return a - b;
    case QOp::mul: return a * b;
    case QOp::div: return a / b;
  }
  throw AlgebraError("unknown operation");
}

// ---------------------------------------------------------------- quantum integers

QRat qint(int k) {
  if (k == 0) return QRat();
  const int sign = k < 0 ? -1 : 1;
  const int m = k < 0 ? -k : k;
  // q^{1-m} + q^{3-m} + ... + q^{m-1}
  std::vector<Rational> c(2 * m - 1, Rational(0));
  for (int i = 0; i < m; ++i) c[2 * i] = sign;
  return QRat::laurent(UPoly(std::move(c)), 1 - m);
}

QRat qfact(int k) {
  if (k < 0) throw PreconditionError("qfact: negative argument " + std::to_string(k));
  QRat r(1);
  for (int i = 2; i <= k; ++i) r *= qint(i);
  return r;
}

QRat gauss_p(int a, int b) {
  if (a < 0 || b < 0) throw PreconditionError("gauss_p: arguments must be non-negative");
  return QRat::q_pow(a * b) * qfact(a + b) / (qfact(a) * qfact(b));
}

UPoly cyclotomic(int m) {
  if (m < 1) throw PreconditionError("cyclotomic index must be >= 1");
  // q^m - 1 divided by Phi_d for every proper divisor d of m.
  UPoly p = UPoly::monomial(Rational(1), m) - UPoly(Rational(1));
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    UPoly qt, r;
    UPoly::divmod(p, cyclotomic(d), qt, r);
    p = std::move(qt);
  }
  return p;
}

int root_of_unity_order(const Rational& point, int bound) {
  Rational t = point;
  t.canonicalize();
  for (int m = 1; m <= bound; ++m)
    if (cyclotomic(m).eval(t) == 0) return m;
  return 0;
}

Rational eval_q(const QRat& r, const Rational& point, int cyclotomic_bound) {
  Rational t = point;
  t.canonicalize();
  if (t == 0) throw PoleError("cannot specialize q at 0: q is a Laurent variable");
  const Rational den = r.den().eval(t);
  if (den == 0) {
    std::string factor;
    for (int m = 1; m <= cyclotomic_bound && factor.empty(); ++m) {
      if (cyclotomic(m).eval(t) != 0) continue;
      UPoly qt, rem;
      UPoly::divmod(r.den(), cyclotomic(m), qt, rem);
      if (rem.is_zero()) factor = "Phi_" + std::to_string(m) + "(q)";
    }
    if (factor.empty()) factor = "(q - " + t.get_str() + ")";
    throw PoleError("pole at q=" + t.get_str() + ": denominator factor " + factor + " vanishes");
  }
  Rational tp = 1;
  const int s = r.shift();
  for (int i = 0; i < (s < 0 ? -s : s); ++i) tp *= t;
  if (s < 0) tp = 1 / tp;
  return tp * r.num().eval(t) / den;
}

}  // namespace qaff
