#include "qaff/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace qaff {

// ---------------------------------------------------------------- permutations

Perm identity_perm(int d) {
  Perm p(d);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm transposition(int d, int a, int b) {
  Perm p = identity_perm(d);
  std::swap(p[a], p[b]);
  return p;
}

Perm compose_perm(const Perm& outer, const Perm& inner) {
  Perm p(inner.size());
  for (std::size_t k = 0; k < inner.size(); ++k) p[k] = outer[inner[k]];
  return p;
}

Perm inverse_perm(const Perm& p) {
  Perm inv(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) inv[p[k]] = static_cast<int>(k);
  return inv;
}

void check_perm(const Perm& p, int d) {
  if (static_cast<int>(p.size()) != d)
    throw PreconditionError("permutation has length " + std::to_string(p.size()) +
                            ", expected " + std::to_string(d));
  std::vector<bool> seen(d, false);
  for (int x : p) {
    if (x < 0 || x >= d || seen[x]) throw PreconditionError("not a permutation");
    seen[x] = true;
  }
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(int nvars) : n_(nvars) {
  if (nvars < 0 || nvars > kMaxVars)
    throw PreconditionError("number of variables must be in [0, " + std::to_string(kMaxVars) +
                            "]");
}

Monomial::Monomial(int nvars, const std::vector<int>& exponents) : Monomial(nvars) {
  if (static_cast<int>(exponents.size()) != nvars)
    throw PreconditionError("exponent vector has wrong length");
  for (int i = 0; i < nvars; ++i) e_[i] = static_cast<int16_t>(exponents[i]);
}

Monomial Monomial::var(int nvars, int i, int power) {
  Monomial m(nvars);
  if (i < 0 || i >= nvars) throw PreconditionError("variable index out of range");
  m.e_[i] = static_cast<int16_t>(power);
  return m;
}

bool Monomial::is_one() const {
  for (int i = 0; i < n_; ++i)
    if (e_[i] != 0) return false;
  return true;
}

int Monomial::degree() const {
  int s = 0;
  for (int i = 0; i < n_; ++i) s += e_[i];
  return s;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m = *this;
  for (int i = 0; i < n_; ++i) m.e_[i] = static_cast<int16_t>(e_[i] + o.e_[i]);
  return m;
}

Monomial Monomial::inverse() const {
  Monomial m = *this;
  for (int i = 0; i < n_; ++i) m.e_[i] = static_cast<int16_t>(-e_[i]);
  return m;
}

Monomial Monomial::permuted(const Perm& perm) const {
  Monomial m(n_);
  for (int k = 0; k < n_; ++k) m.e_[perm[k]] = e_[k];
  return m;
}

// ---------------------------------------------------------------- LaurentPoly

namespace {
// Sorts and merges equal monomials, dropping zero sums.
void canonicalize_terms(std::vector<LaurentPoly::Term>& t) {
  std::sort(t.begin(), t.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t k = 0; k < t.size();) {
    std::size_t l = k + 1;
    QRat c = std::move(t[k].second);
    while (l < t.size() && t[l].first == t[k].first) c += t[l++].second;
    if (!c.is_zero()) {
      t[out].first = t[k].first;
      t[out].second = std::move(c);
      ++out;
    }
    k = l;
  }
  t.resize(out);
}
}  // namespace

LaurentPoly LaurentPoly::constant(int nvars, const QRat& c) {
  LaurentPoly p(nvars);
  if (!c.is_zero()) p.t_.emplace_back(Monomial(nvars), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const QRat& c) {
  LaurentPoly p(m.nvars());
  if (!c.is_zero()) p.t_.emplace_back(m, c);
  return p;
}

LaurentPoly LaurentPoly::var(int nvars, int i) { return monomial(Monomial::var(nvars, i)); }

LaurentPoly LaurentPoly::from_terms(int nvars, std::vector<Term> terms) {
  LaurentPoly p(nvars);
  for (const auto& [m, c] : terms)
    if (m.nvars() != nvars) throw PreconditionError("monomial has wrong number of variables");
  canonicalize_terms(terms);
  p.t_ = std::move(terms);
  return p;
}

bool LaurentPoly::is_constant() const {
  return t_.empty() || (t_.size() == 1 && t_[0].first.is_one());
}

QRat LaurentPoly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(t_.begin(), t_.end(), m,
                             [](const Term& t, const Monomial& x) { return t.first < x; });
  if (it != t_.end() && it->first == m) return it->second;
  return QRat();
}

void LaurentPoly::check_same(const LaurentPoly& o) const {
  if (n_ != o.n_)
    throw PreconditionError("variable count mismatch: " + std::to_string(n_) + " vs " +
                            std::to_string(o.n_));
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

namespace {
LaurentPoly merge_add(const LaurentPoly& a, const LaurentPoly& b, bool negate_b) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size() || (i < ta.size() && ta[i].first < tb[j].first)) {
      out.push_back(ta[i++]);
    } else if (i == ta.size() || tb[j].first < ta[i].first) {
      out.emplace_back(tb[j].first, negate_b ? -tb[j].second : tb[j].second);
      ++j;
    } else {
      QRat c = negate_b ? ta[i].second - tb[j].second : ta[i].second + tb[j].second;
      if (!c.is_zero()) out.emplace_back(ta[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return LaurentPoly::from_terms(a.nvars(), std::move(out));
}
}  // namespace

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same(b);
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  return merge_add(a, b, false);
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same(b);
  if (b.is_zero()) return a;
  return merge_add(a, b, true);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_same(b);
  LaurentPoly r(a.n_);
  if (a.is_zero() || b.is_zero()) return r;
  r.t_.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) r.t_.emplace_back(ma * mb, ca * cb);
  canonicalize_terms(r.t_);
  return r;
}

LaurentPoly LaurentPoly::scaled(const QRat& c) const {
  if (c.is_zero()) return LaurentPoly(n_);
  if (c.is_one()) return *this;
  LaurentPoly r = *this;
  for (auto& [m, x] : r.t_) x *= c;
  return r;
}

LaurentPoly LaurentPoly::times(const Monomial& m) const {
  LaurentPoly r = *this;
  for (auto& [x, c] : r.t_) x = x * m;  // order preserved: translation is monotone
  return r;
}

LaurentPoly LaurentPoly::permuted(const Perm& perm) const {
  LaurentPoly r(n_);
  r.t_.reserve(t_.size());
  for (const auto& [m, c] : t_) r.t_.emplace_back(m.permuted(perm), c);
  std::sort(r.t_.begin(), r.t_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) {
    if (t_.size() != 1) throw PreconditionError("negative power of a non-monomial");
    return monomial(t_[0].first.inverse(), t_[0].second.inverse()).pow(-e);
  }
  LaurentPoly r = constant(n_, QRat(1));
  for (int k = 0; k < e; ++k) r *= *this;
  return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  return a.n_ == b.n_ && a.t_ == b.t_;
}

Rational LaurentPoly::evaluate(const std::vector<Rational>& x, const Rational& q) const {
  if (static_cast<int>(x.size()) != n_) throw PreconditionError("wrong number of points");
  Rational total = 0;
  for (const auto& [m, c] : t_) {
    Rational v = eval_q(c, q);
    for (int i = 0; i < n_; ++i) {
      const int e = m[i];
      if (e == 0) continue;
      if (x[i] == 0 && e < 0) throw PoleError("negative power of x" + std::to_string(i + 1) + " at 0");
      Rational p = 1;
      for (int k = 0; k < std::abs(e); ++k) p *= x[i];
      v *= e > 0 ? p : Rational(1 / p);
    }
    total += v;
  }
  return total;
}

std::string LaurentPoly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << c.to_string() << " *";
    for (int i = 0; i < n_; ++i) os << " x" << (i + 1) << "^" << m[i];
  }
  return os.str();
}

namespace {

std::string strip(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Splits at top-level '+'/'-' that separate terms; a '-' stays with its term.
std::vector<std::string> split_terms(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  char prev = 0;  // last non-space character at depth 0
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    const bool sep = depth == 0 && (ch == '+' || ch == '-') && prev != 0 && prev != '^' &&
                     prev != '*' && prev != '/' && prev != '+' && prev != '-';
    if (sep) {
      out.push_back(cur);
      cur = ch == '-' ? "-" : "";
      prev = ch;
      continue;
    }
    cur += ch;
    if (!std::isspace(static_cast<unsigned char>(ch)) && depth == 0) prev = ch;
    if (ch == ')' && depth == 0) prev = ch;
  }
  out.push_back(cur);
  return out;
}

// Splits a term into factors at top-level '*' and whitespace.
std::vector<std::string> split_factors(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && (ch == '*' || std::isspace(static_cast<unsigned char>(ch)))) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
      continue;
    }
    cur += ch;
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int parse_int(const std::string& s, const std::string& context) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw ParseError("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + s + "' in '" + context + "'");
  }
}

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, int nvars) {
  const std::string s = strip(text);
  if (s.empty()) throw ParseError("empty polynomial");
  std::vector<Term> terms;
  for (const std::string& raw : split_terms(s)) {
    std::string term = strip(raw);
    QRat coef(1);
    if (!term.empty() && term[0] == '-') {
      coef = QRat(-1);
      term = strip(term.substr(1));
    }
    if (term.empty()) throw ParseError("empty term in '" + s + "'");
    Monomial mon(nvars);
    for (const std::string& f : split_factors(term)) {
      if (f[0] == 'x') {
        const auto caret = f.find('^');
        const int idx = parse_int(f.substr(1, caret == std::string::npos ? f.npos : caret - 1), f);
        const int e = caret == std::string::npos ? 1 : parse_int(f.substr(caret + 1), f);
        if (idx < 1 || idx > nvars)
          throw ParseError("variable " + f + " out of range for d=" + std::to_string(nvars));
        mon.set(idx - 1, mon[idx - 1] + e);
      } else if (f[0] == '(') {
        coef *= QRat::parse(f);
      } else if (f[0] == 'q') {
        const auto caret = f.find('^');
        if (f.size() > 1 && caret != 1) throw ParseError("bad factor '" + f + "'");
        coef *= QRat::q_pow(caret == std::string::npos ? 1 : parse_int(f.substr(2), f));
      } else {
        coef *= QRat(parse_rational(f));
      }
    }
    terms.emplace_back(mon, coef);
  }
  return from_terms(nvars, std::move(terms));
}

LaurentPoly poly_arith(const LaurentPoly& a, const LaurentPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
  }
  throw AlgebraError("unknown operation");
}

// ---------------------------------------------------------------- Binomial

Binomial Binomial::normalize(const QMono& a, int i, const QMono& b, int j, QMono& unit) {
  if (i == j) throw PreconditionError("binomial needs two distinct variables");
  if (a.coef == 0 || b.coef == 0) throw PreconditionError("binomial with zero coefficient");
  if (i < j) {
    unit = a;
    return {i, j, b * a.inverse()};
  }
  unit = {-b.coef, b.qexp};
  return {j, i, a * b.inverse()};
}

LaurentPoly Binomial::as_poly(int nvars) const {
  return LaurentPoly::var(nvars, i) -
         LaurentPoly::monomial(Monomial::var(nvars, j), c.value());
}

Binomial Binomial::permuted(const Perm& perm, QMono& unit) const {
  return normalize(QMono{}, perm[i], c, perm[j], unit);
}

Rational Binomial::evaluate(const std::vector<Rational>& x, const Rational& q) const {
  return x[i] - eval_q(c.value(), q) * x[j];
}

std::string Binomial::to_string() const {
  std::ostringstream os;
  os << "(x" << (i + 1) << " - " << c.coef.get_str() << "*q^" << c.qexp << " * x" << (j + 1)
     << ")";
  return os.str();
}

bool operator<(const Binomial& a, const Binomial& b) {
  if (a.i != b.i) return a.i < b.i;
  if (a.j != b.j) return a.j < b.j;
  if (a.c.qexp != b.c.qexp) return a.c.qexp < b.c.qexp;
  return a.c.coef < b.c.coef;
}

bool divide_exact(const LaurentPoly& p, const Binomial& b, LaurentPoly& quot) {
  const int n = p.nvars();
  const int bi = b.i, bj = b.j;
  // Group by the exponents of the other variables and e_i + e_j; inside a
  // group, p is x_j^s * R(x_i/x_j) and we divide R(y) by (y - c).
  std::map<Monomial, std::map<int, QRat>> groups;
  for (const auto& [m, c] : p.terms()) {
    Monomial key = m;
    key.set(bi, 0);
    key.set(bj, m[bi] + m[bj]);
    groups[key].emplace(m[bi], c);
  }
  const QRat cval = b.c.value();
  std::vector<LaurentPoly::Term> out;
  for (const auto& [key, row] : groups) {
    const int kmin = row.begin()->first;
    const int kmax = row.rbegin()->first;
    if (kmin == kmax) return false;  // a single term is never divisible
    const int s = key[bj];
    // Synthetic division: r(y) = sum r_t y^t, t = 0..D; quotient q_{t-1}.
    const int D = kmax - kmin;
    std::vector<QRat> r(D + 1);
    for (const auto& [k, c] : row) r[k - kmin] = c;
    QRat carry;  // q_t as we go down
    std::vector<QRat> qc(D);
    for (int t = D; t >= 1; --t) {
      carry = r[t] + (t == D ? QRat() : cval * carry);
      qc[t - 1] = carry;
    }
    if (!(r[0] + cval * carry).is_zero()) return false;
    for (int t = 0; t < D; ++t) {
      if (qc[t].is_zero()) continue;
      Monomial m = key;
      m.set(bi, kmin + t);
      m.set(bj, s - 1 - (kmin + t));
      out.emplace_back(m, std::move(qc[t]));
    }
  }
  quot = LaurentPoly::from_terms(n, std::move(out));
  return true;
}

// ---------------------------------------------------------------- StructuredFraction

namespace {
void merge_factors(std::vector<StructuredFraction::Factor>& den) {
  std::sort(den.begin(), den.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t k = 0; k < den.size();) {
    std::size_t l = k + 1;
    int mult = den[k].second;
    while (l < den.size() && den[l].first == den[k].first) mult += den[l++].second;
    if (mult > 0) den[out++] = {den[k].first, mult};
    k = l;
  }
  den.resize(out);
}
}  // namespace

StructuredFraction::StructuredFraction(LaurentPoly num) : num_(std::move(num)) {}

StructuredFraction::StructuredFraction(LaurentPoly num, std::vector<Factor> den)
    : num_(std::move(num)), den_(std::move(den)) {
  for (const auto& [b, m] : den_)
    if (b.i < 0 || b.j >= num_.nvars() || b.i >= b.j || m < 0)
      throw PreconditionError("malformed binomial factor " + b.to_string());
  merge_factors(den_);
  if (num_.is_zero()) den_.clear();
}

StructuredFraction StructuredFraction::scaled(const QRat& c) const {
  StructuredFraction r = *this;
  r.num_ = num_.scaled(c);
  if (r.num_.is_zero()) r.den_.clear();
  return r;
}

StructuredFraction StructuredFraction::times(const LaurentPoly& p) const {
  StructuredFraction r = *this;
  r.num_ = num_ * p;
  if (r.num_.is_zero()) r.den_.clear();
  return r;
}

StructuredFraction StructuredFraction::permuted(const Perm& perm) const {
  StructuredFraction r(num_.permuted(perm));
  QRat scale(1);
  for (const auto& [b, m] : den_) {
    QMono unit;
    Binomial nb = b.permuted(perm, unit);
    scale *= unit.value().pow(m);
    r.den_.emplace_back(nb, m);
  }
  merge_factors(r.den_);
  if (!scale.is_one()) r.num_ = r.num_.scaled(scale.inverse());
  return r;
}

StructuredFraction operator*(const StructuredFraction& a, const StructuredFraction& b) {
  StructuredFraction r(a.num_ * b.num_);
  if (r.num_.is_zero()) return r;
  r.den_ = a.den_;
  r.den_.insert(r.den_.end(), b.den_.begin(), b.den_.end());
  merge_factors(r.den_);
  return r;
}

StructuredFraction operator+(const StructuredFraction& a, const StructuredFraction& b) {
  return frac_sum({a, b}, a.nvars());
}

StructuredFraction operator-(const StructuredFraction& a, const StructuredFraction& b) {
  return frac_sum({a, -b}, a.nvars());
}

StructuredFraction StructuredFraction::reduced() const {
  StructuredFraction r(num_);
  if (num_.is_zero()) return r;
  for (const auto& [b, m] : den_) {
    int left = m;
    LaurentPoly quot;
    while (left > 0 && divide_exact(r.num_, b, quot)) {
      r.num_ = std::move(quot);
      --left;
    }
    if (left > 0) r.den_.emplace_back(b, left);
  }
  return r;
}

LaurentPoly StructuredFraction::to_poly() const {
  if (den_.empty()) return num_;
  StructuredFraction r = reduced();
  if (!r.den_.empty()) throw NotPolynomialError(r.den_.front().first.to_string());
  return r.num_;
}

bool StructuredFraction::equal(const StructuredFraction& a, const StructuredFraction& b) {
  return (a - b).is_zero();
}

Rational StructuredFraction::evaluate(const std::vector<Rational>& x, const Rational& q) const {
  Rational den = 1;
  for (const auto& [b, m] : den_) {
    const Rational v = b.evaluate(x, q);
    if (v == 0) throw PoleError("denominator factor " + b.to_string() + " vanishes");
    for (int k = 0; k < m; ++k) den *= v;
  }
  return num_.evaluate(x, q) / den;
}

std::string StructuredFraction::to_string() const {
  std::string s = "(" + num_.to_string() + ")";
  if (den_.empty()) return s;
  s += " / (";
  bool first = true;
  for (const auto& [b, m] : den_) {
    if (!first) s += " ";
    first = false;
    s += b.to_string();
    if (m != 1) s += "^" + std::to_string(m);
  }
  return s + ")";
}

StructuredFraction frac_product(const std::vector<StructuredFraction>& fs, int nvars) {
  StructuredFraction r(LaurentPoly::constant(nvars, QRat(1)));
  for (const auto& f : fs) r = r * f;
  return r;
}

StructuredFraction frac_sum(const std::vector<StructuredFraction>& fs, int nvars) {
  std::vector<StructuredFraction::Factor> lcd;
  for (const auto& f : fs) {
    if (f.nvars() != nvars) throw PreconditionError("variable count mismatch in sum");
    for (const auto& [b, m] : f.denominator()) {
      auto it = std::find_if(lcd.begin(), lcd.end(), [&](const auto& x) { return x.first == b; });
      if (it == lcd.end())
        lcd.emplace_back(b, m);
      else
        it->second = std::max(it->second, m);
    }
  }
  LaurentPoly num(nvars);
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    LaurentPoly term = f.numerator();
    for (const auto& [b, m] : lcd) {
      int have = 0;
      for (const auto& [fb, fm] : f.denominator())
        if (fb == b) have = fm;
      if (m > have) term *= b.as_poly(nvars).pow(m - have);
    }
    num += term;
  }
  return StructuredFraction(std::move(num), std::move(lcd)).reduced();
}

StructuredFraction theta_ratio(int nvars, int m, const VarTerm& a, const VarTerm& b) {
  const QMono qm{Rational(1), m};
  if (a.var == b.var) {
    const QRat ca = a.c.value(), cb = b.c.value(), qv = QRat::q_pow(m);
    const QRat den = ca - qv * cb;
    if (den.is_zero()) throw DivisionByZero("theta factor with identically zero denominator");
    return StructuredFraction(LaurentPoly::constant(nvars, (qv * ca - cb) / den));
  }
  const LaurentPoly num =
      LaurentPoly::monomial(Monomial::var(nvars, a.var), (qm * a.c).value()) -
      LaurentPoly::monomial(Monomial::var(nvars, b.var), b.c.value());
  QMono unit;
  const Binomial den = Binomial::normalize(a.c, a.var, qm * b.c, b.var, unit);
  return StructuredFraction(num.scaled(unit.value().inverse()), {{den, 1}}).reduced();
}

// ---------------------------------------------------------------- series

Series expand_theta_series(int nvars, const std::vector<ThetaFactor>& factors,
                           Expansion direction, int order) {
  if (order < 0) throw PreconditionError("series order must be non-negative");
  Series acc(order + 1, LaurentPoly(nvars));
  acc[0] = LaurentPoly::constant(nvars, QRat(1));
  for (const ThetaFactor& f : factors) {
    if (f.zpow != 1 && f.zpow != -1) throw PreconditionError("theta factor needs z or 1/z");
    if (f.xmon.nvars() != nvars) throw PreconditionError("theta factor variable count");
    const bool u_large = (direction == Expansion::at_infinity) == (f.zpow == 1);
    // u = U y^{-1} when u is large, u = U y when u is small.
    const LaurentPoly U = LaurentPoly::monomial(f.xmon, f.c.value());
    const LaurentPoly step = u_large ? LaurentPoly::monomial(f.xmon.inverse(), f.c.inverse().value())
                                     : U;
    const int m = f.m;
    Series s(order + 1, LaurentPoly(nvars));
    LaurentPoly power = LaurentPoly::constant(nvars, QRat(1));
    for (int r = 0; r <= order; ++r) {
      QRat c;
      if (u_large)
        c = r == 0 ? QRat::q_pow(m) : QRat::q_pow(m * (r - 1)) * (QRat::q_pow(2 * m) - QRat(1));
      else
        c = r == 0 ? QRat::q_pow(-m) : QRat::q_pow(-m * (r + 1)) * (QRat(1) - QRat::q_pow(2 * m));
      s[r] = power.scaled(c);
      power *= step;
    }
    acc = series_mul(acc, s, order);
  }
  return acc;
}

Series series_mul(const Series& a, const Series& b, int order) {
  const int n = a.empty() ? (b.empty() ? 0 : b[0].nvars()) : a[0].nvars();
  Series r(order + 1, LaurentPoly(n));
  for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

Series series_inverse(const Series& a, int order) {
  if (a.empty() || !a[0].is_constant() || a[0].is_zero())
    throw PreconditionError("series inverse needs a nonzero constant term");
  const int n = a[0].nvars();
  const QRat b0 = a[0].terms()[0].second.inverse();
  Series b(order + 1, LaurentPoly(n));
  b[0] = LaurentPoly::constant(n, b0);
  for (int r = 1; r <= order; ++r) {
    LaurentPoly s(n);
    for (int j = 1; j <= r && j < static_cast<int>(a.size()); ++j) s += a[j] * b[r - j];
    b[r] = s.scaled(-b0);
  }
  return b;
}

Series series_log(const Series& a, int order) {
  if (a.empty() || !(a[0] == LaurentPoly::constant(a[0].nvars(), QRat(1))))
    throw PreconditionError("series log needs constant term 1");
  const int n = a[0].nvars();
  auto at = [&](int k) { return k < static_cast<int>(a.size()) ? a[k] : LaurentPoly(n); };
  Series L(order + 1, LaurentPoly(n));
  for (int r = 1; r <= order; ++r) {
    LaurentPoly s(n);
    for (int j = 1; j < r; ++j) s += (L[j] * at(r - j)).scaled(QRat(j));
    L[r] = at(r) - s.scaled(QRat(make_rational(1, r)));
  }
  return L;
}

}  // namespace qaff
