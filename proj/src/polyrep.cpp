#include "qaff/polyrep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <tuple>

#include "qaff/symmetrize.hpp"

namespace qaff {

namespace {

QRat q_minus_qinv() { return QRat::q() - QRat::q_pow(-1); }

void check_weight(const Composition& v, const LaurentPoly& f) {
  check_composition(v);
  if (f.nvars() != total(v)) throw PreconditionError("polynomial has the wrong number of variables");
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> r;
  for (int m = lo; m < hi; ++m) r.push_back(m);
  return r;
}

ThetaFactor z_over_x(int d, int m, int theta, int qexp) {
  return {theta, QMono{Rational(1), qexp}, Monomial::var(d, m, -1), 1};
}

}  // namespace

void WeightVector::add(const Composition& v, const LaurentPoly& f, const QRat& c) {
  if (f.is_zero() || c.is_zero()) return;
  auto it = c_.find(v);
  if (it == c_.end()) {
    c_.emplace(v, f.scaled(c));
    return;
  }
  it->second += f.scaled(c);
  if (it->second.is_zero()) c_.erase(it);
}

void WeightVector::add(const WeightVector& o, const QRat& c) {
  for (const auto& [v, f] : o.c_) add(v, f, c);
}

void WeightVector::check_invariant() const {
  for (const auto& [v, f] : c_)
    if (!is_invariant(f, segments(v)))
      throw PreconditionError("component is not symmetric in its segments");
}

std::string WeightVector::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, f] : c_) {
    if (!first) os << "; ";
    first = false;
    os << "(";
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
    os << "): " << f.to_string();
  }
  return os.str();
}

Component apply_E(int i, int k, const Composition& v, const LaurentPoly& f) {
  check_weight(v, f);
  const int n = static_cast<int>(v.size()), d = total(v);
  if (i < 0 || i + 1 >= n) throw PreconditionError("E index out of range");
  if (v[i + 1] == 0) return {{}, LaurentPoly(d)};
  const auto pre = prefix_sums(v);
  const int p = pre[i + 1];
  Composition target = v;
  ++target[i];
  --target[i + 1];
  const StructuredFraction term =
      theta_product(d, range(pre[i], pre[i + 1]), qx(p, 1)).times(f.times(Monomial::var(d, p, k)));
  const LaurentPoly out = symmetrize(term, segments(v), segments(target), false).to_poly();
  return {target, out.scaled(q_minus_qinv())};
}

Component apply_F(int i, int k, const Composition& v, const LaurentPoly& f) {
  check_weight(v, f);
  const int n = static_cast<int>(v.size()), d = total(v);
  if (i < 0 || i + 1 >= n) throw PreconditionError("F index out of range");
  if (v[i] == 0) return {{}, LaurentPoly(d)};
  const auto pre = prefix_sums(v);
  const int p = pre[i + 1] - 1;
  Composition target = v;
  --target[i];
  ++target[i + 1];
  const StructuredFraction term = theta_product(d, range(pre[i + 1], pre[i + 2]), qx(p, -1), -1)
                                      .times(f.times(Monomial::var(d, p, k)));
  const LaurentPoly out = symmetrize(term, segments(v), segments(target), false).to_poly();
  return {target, out.scaled(q_minus_qinv())};
}

std::vector<ThetaFactor> K_factors(int i, const Composition& v) {
  check_composition(v);
  const int n = static_cast<int>(v.size()), d = total(v);
  if (i < 0 || i >= n) throw PreconditionError("K index out of range");
  const auto pre = prefix_sums(v);
  std::vector<ThetaFactor> fs;
  for (int m = 0; m < pre[i]; ++m) fs.push_back(z_over_x(d, m, 1, 1));       // theta_1(q z / x_m)
  for (int m = pre[i + 1]; m < d; ++m) fs.push_back(z_over_x(d, m, 1, -1));  // theta_1(z / (q x_m))
  return fs;
}

Series K_series(int i, bool plus, const Composition& v, int order) {
  return expand_theta_series(total(v), K_factors(i, v),
                             plus ? Expansion::at_infinity : Expansion::at_zero, order);
}

LaurentPoly K_coeff(int i, bool plus, int l, const Composition& v) {
  if (l < 0) throw PreconditionError("K mode index must be non-negative");
  return K_series(i, plus, v, l)[l];
}

Series K_ratio_series(int i, bool plus, const Composition& v, int order) {
  check_composition(v);
  const int n = static_cast<int>(v.size()), d = total(v);
  if (i < 0 || i + 1 >= n) throw PreconditionError("K ratio index out of range");
  const auto pre = prefix_sums(v);
  std::vector<ThetaFactor> fs;
  for (int m = pre[i]; m < pre[i + 1]; ++m) fs.push_back(z_over_x(d, m, 1, 1));
  for (int m = pre[i + 1]; m < pre[i + 2]; ++m) fs.push_back(z_over_x(d, m, -1, -1));
  return expand_theta_series(d, fs, plus ? Expansion::at_infinity : Expansion::at_zero, order);
}

LaurentPoly H_poly(int i, int k, const Composition& v) {
  check_composition(v);
  if (k == 0) throw PreconditionError("H mode must be nonzero");
  const int n = static_cast<int>(v.size()), d = total(v);
  if (i < 0 || i >= n) throw PreconditionError("H index out of range");
  const auto pre = prefix_sums(v);
  LaurentPoly low(d), high(d);
  for (int m = 0; m < pre[i]; ++m) low += LaurentPoly::monomial(Monomial::var(d, m, k));
  for (int m = pre[i + 1]; m < d; ++m) high += LaurentPoly::monomial(Monomial::var(d, m, k));
  const int a = std::abs(k);
  const QRat scale = qint(a) / QRat(a);
  return (low.scaled(QRat::q_pow(-k)) + high.scaled(QRat::q_pow(k))).scaled(scale);
}

std::vector<std::vector<QRat>> power_sum_matrix(int n, int k) {
  std::vector<std::vector<QRat>> m(n, std::vector<QRat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j < i)
        m[i][j] = QRat::q_pow(-k);
      else if (j > i)
        m[i][j] = QRat::q_pow(k);
  return m;
}

QRat determinant(std::vector<std::vector<QRat>> m) {
  const int n = static_cast<int>(m.size());
  QRat det(1);
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) return QRat();
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    const QRat inv = m[c][c].inverse();
    for (int r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      const QRat f = m[r][c] * inv;
      for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

std::vector<LaurentPoly> sample_polys(const Composition& v, int count, std::uint64_t seed) {
  check_composition(v);
  const int d = total(v);
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed),
                                   static_cast<std::uint32_t>(seed >> 32)};
  for (int x : v) words.push_back(static_cast<std::uint32_t>(x));
  std::seed_seq seq(words.begin(), words.end());
  std::mt19937_64 rng(seq);
  auto uniform = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned long long>(hi - lo + 1));
  };
  SegPartition points{d, {}};
  for (int m = 0; m < d; ++m) points.pieces.push_back({m});
  const std::vector<Perm> group = coset_reps(points, segments(v));
  auto orbit_sum = [&]() {
    Monomial mono(d);
    for (int m = 0; m < d; ++m) mono.set(m, uniform(-2, 2));
    std::set<Monomial> orbit;
    for (const Perm& s : group) orbit.insert(mono.permuted(s));
    std::vector<LaurentPoly::Term> terms;
    for (const Monomial& m : orbit) terms.emplace_back(m, QRat(1));
    return LaurentPoly::from_terms(d, std::move(terms));
  };

  std::vector<LaurentPoly> out;
  if (count > 0) out.push_back(LaurentPoly::constant(d, QRat(1)));
  const int plain = (count + 1) / 2;
  while (static_cast<int>(out.size()) < plain) out.push_back(orbit_sum());
  while (static_cast<int>(out.size()) < count) {
    LaurentPoly f(d);
    for (int t = 0; t < 2; ++t) {
      int c = uniform(-2, 2);
      if (c == 0) c = 1;
      f += orbit_sum().scaled(QRat::monomial(Rational(c), uniform(-1, 1)));
    }
    if (!f.is_zero()) out.push_back(f);
  }
  return out;
}

int worker_count() {
  if (const char* env = std::getenv("QA_THREADS")) {
    const int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

enum class Kind { E, F, Kplus, Kminus };

struct Current {
  Kind kind;
  int idx;
};

// c * z^rz * w^rw.
struct Shift {
  QRat c;
  int rz = 0, rw = 0;
};
using Linear = std::vector<Shift>;

// Mode computations for one task, memoized.
class Modes {
 public:
  explicit Modes(int order) : order_(order) {}

  WeightVector apply(const Current& cur, int a, const WeightVector& x) {
    WeightVector out;
    for (const auto& [v, f] : x.components()) {
      switch (cur.kind) {
        case Kind::E:
        case Kind::F: {
          const Component& r = op(cur, a, v, f);
          if (!r.f.is_zero()) out.add(r.v, r.f);
          break;
        }
        case Kind::Kplus:
          if (a >= 0) out.add(v, f * k_series(cur.idx, true, v)[a]);
          break;
        case Kind::Kminus:
          if (a <= 0) out.add(v, f * k_series(cur.idx, false, v)[-a]);
          break;
      }
    }
    return out;
  }

  const Series& ratio(int i, bool plus, const Composition& v) {
    auto key = std::make_tuple(i, plus, v);
    auto it = ratio_.find(key);
    if (it == ratio_.end()) it = ratio_.emplace(key, K_ratio_series(i, plus, v, order_)).first;
    return it->second;
  }

 private:
  const Component& op(const Current& cur, int a, const Composition& v, const LaurentPoly& f) {
    auto key = std::make_tuple(cur.kind == Kind::E, cur.idx, a, v, f.to_string());
    auto it = ops_.find(key);
    if (it == ops_.end()) {
      Component r = cur.kind == Kind::E ? apply_E(cur.idx, a, v, f) : apply_F(cur.idx, a, v, f);
      it = ops_.emplace(std::move(key), std::move(r)).first;
    }
    return it->second;
  }

  const Series& k_series(int i, bool plus, const Composition& v) {
    auto key = std::make_tuple(i, plus, v);
    auto it = k_.find(key);
    if (it == k_.end()) it = k_.emplace(key, K_series(i, plus, v, order_)).first;
    return it->second;
  }

  int order_;
  std::map<std::tuple<bool, int, int, Composition, std::string>, Component> ops_;
  std::map<std::tuple<int, bool, Composition>, Series> k_, ratio_;
};

struct TaskResult {
  long checks = 0;
  std::vector<RelationFailure> failures;
};

class Checker {
 public:
  Checker(Modes& modes, const Composition& v, const LaurentPoly& f, int sample, int window,
          TaskResult& out)
      : m_(modes), v_(v), x_(v, f), sample_(sample), w_(window), out_(out) {}

  void expect(const WeightVector& lhs, const WeightVector& rhs, std::vector<int> indices,
              std::vector<int> modes) {
    ++out_.checks;
    if (lhs == rhs) return;
    out_.failures.push_back({v_, std::move(indices), std::move(modes), sample_, lhs.to_string(),
                             rhs.to_string()});
  }

  // L(z, w) X(z) Y(w) = R(z, w) Y(w) X(z), coefficient by coefficient.
  void exchange(const Current& x, const Current& y, const Linear& l, const Linear& r,
                const std::vector<int>& indices) {
    for (int a = -w_; a <= w_; ++a)
      for (int b = -w_; b <= w_; ++b) {
        WeightVector lhs, rhs;
        for (const Shift& s : l) lhs.add(m_.apply(x, a + s.rz, m_.apply(y, b + s.rw, x_)), s.c);
        for (const Shift& s : r) rhs.add(m_.apply(y, b + s.rw, m_.apply(x, a + s.rz, x_)), s.c);
        expect(lhs, rhs, indices, {a, b});
      }
  }

  // L(z, w) X1(z) Y1(w) = R(z, w) Y2(w) X2(z).
  void exchange2(const Current& x1, const Current& y1, const Current& x2, const Current& y2,
                 const Linear& l, const Linear& r, const std::vector<int>& indices) {
    for (int a = -w_; a <= w_; ++a)
      for (int b = -w_; b <= w_; ++b) {
        WeightVector lhs, rhs;
        for (const Shift& s : l) lhs.add(m_.apply(x1, a + s.rz, m_.apply(y1, b + s.rw, x_)), s.c);
        for (const Shift& s : r) rhs.add(m_.apply(y2, b + s.rw, m_.apply(x2, a + s.rz, x_)), s.c);
        expect(lhs, rhs, indices, {a, b});
      }
  }

  void commutator_ef(int i, int j) {
    const QRat k = q_minus_qinv();
    for (int a = -w_; a <= w_; ++a)
      for (int b = -w_; b <= w_; ++b) {
        const Current e{Kind::E, i}, f{Kind::F, j};
        WeightVector lhs = m_.apply(e, a, m_.apply(f, b, x_));
        lhs.add(m_.apply(f, b, m_.apply(e, a, x_)), QRat(-1));
        WeightVector rhs;
        const int t = a + b;
        if (i == j) {
          const LaurentPoly& g = x_.components().empty() ? LaurentPoly() : x_.components().begin()->second;
          if (t >= 0) rhs.add(v_, g * m_.ratio(i, true, v_)[t], k);
          if (t <= 0) rhs.add(v_, g * m_.ratio(i, false, v_)[-t], -k);
        }
        expect(lhs, rhs, {i, j}, {a, b});
      }
  }

  void serre(Kind kind, int i, int j) {
    const Current xi{kind, i}, xj{kind, j};
    const QRat two = qint(2);
    for (int a = -w_; a <= w_; ++a)
      for (int b = -w_; b <= w_; ++b)
        for (int c = -w_; c <= w_; ++c) {
          WeightVector lhs;
          for (const auto& [s, t] : {std::pair{a, b}, std::pair{b, a}}) {
            lhs.add(m_.apply(xi, s, m_.apply(xi, t, m_.apply(xj, c, x_))));
            lhs.add(m_.apply(xi, s, m_.apply(xj, c, m_.apply(xi, t, x_))), -two);
            lhs.add(m_.apply(xj, c, m_.apply(xi, s, m_.apply(xi, t, x_))));
          }
          expect(lhs, WeightVector(), {i, j}, {a, b, c});
        }
  }

  void inverse_pair(int i) {
    const WeightVector lhs =
        m_.apply({Kind::Kplus, i}, 0, m_.apply({Kind::Kminus, i}, 0, x_));
    expect(lhs, x_, {i}, {0, 0});
  }

 private:
  Modes& m_;
  Composition v_;
  WeightVector x_;
  int sample_, w_;
  TaskResult& out_;
};

Linear lin(std::initializer_list<Shift> s) { return Linear(s); }
Shift z(const QRat& c) { return {c, 1, 0}; }
Shift w(const QRat& c) { return {c, 0, 1}; }
const Linear kOne{{QRat(1), 0, 0}};

void run_relation(char rel, int n, Checker& ch) {
  const CartanData cd(n);
  const QRat one(1);
  auto qp = [](int e) { return QRat::q_pow(e); };
  switch (rel) {
    case 'a':
      for (int i = 0; i < n; ++i) {
        ch.inverse_pair(i);
        for (int j = 0; j < n; ++j)
          for (Kind s : {Kind::Kplus, Kind::Kminus}) ch.exchange({s, i}, {s, j}, kOne, kOne, {i, j});
        ch.exchange({Kind::Kplus, i}, {Kind::Kminus, i}, kOne, kOne, {i, i});
      }
      break;
    case 'b':
      // theta_1(q^{-1} z / w) cleared: (q^{-1} z - q w) on both sides.
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (auto [s, t] : {std::pair{Kind::Kplus, Kind::Kminus}, std::pair{Kind::Kminus, Kind::Kplus}}) {
            const Linear l = lin({z(qp(-1)), w(-qp(1))});
            ch.exchange({s, i}, {t, j}, l, l, {i, j});
          }
      break;
    case 'c':
    case 'd':
      for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j < n; ++j)
          for (Kind s : {Kind::Kplus, Kind::Kminus}) {
            Linear l = kOne, r = kOne;
            if (rel == 'c' && j == i) {
              l = lin({w(qp(-1)), z(-qp(1))});  // (q^{-1} w - q z) E_i(z) K_i(w)
              r = lin({w(one), z(-one)});        //   = (w - z) K_i(w) E_i(z)
            } else if (rel == 'c' && j == i + 1) {
              l = lin({w(qp(1)), z(-qp(-1))});  // (q w - q^{-1} z) E_i(z) K_{i+1}(w)
              r = lin({w(one), z(-one)});
            } else if (rel == 'd' && j == i) {
              l = lin({w(one), z(-one)});        // (w - z) F_i(z) K_i(w)
              r = lin({w(qp(-1)), z(-qp(1))});  //   = (q^{-1} w - q z) K_i(w) F_i(z)
            } else if (rel == 'd' && j == i + 1) {
              l = lin({w(qp(1)), z(-qp(1))});   // q (w - z) F_i(z) K_{i+1}(w)
              r = lin({w(qp(2)), z(-one)});     //   = (q^2 w - z) K_{i+1}(w) F_i(z)
            }
            ch.exchange({rel == 'c' ? Kind::E : Kind::F, i}, {s, j}, l, r, {i, j});
          }
      break;
    case 'C':
      // (c) with the subscripts exactly as printed:
      // (q^c z - q^c w) K_j(z) E_i(w) = (q^{2c} z - w) E_j(w) K_i(z), c = c_ij.
      for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j + 1 < n; ++j)
          for (Kind s : {Kind::Kplus, Kind::Kminus}) {
            const int c = cd.c(i, j);
            ch.exchange2({s, j}, {Kind::E, i}, {s, i}, {Kind::E, j}, lin({z(qp(c)), w(-qp(c))}),
                         lin({z(qp(2 * c)), w(-one)}), {i, j});
          }
      break;
    case 'e':
      for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j + 1 < n; ++j) ch.commutator_ef(i, j);
      break;
    case 'f':
    case 'g':
      for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j + 1 < n; ++j) {
          // theta_m(q^s z / w) = (q^{m+s} z - w) / (q^s z - q^m w).
          const int m = rel == 'f' ? cd.m(i, j) : -cd.m(i, j), s = i - j;
          const Kind k = rel == 'f' ? Kind::E : Kind::F;
          ch.exchange({k, i}, {k, j}, lin({z(qp(s)), w(-qp(m))}), lin({z(qp(m + s)), w(-one)}),
                      {i, j});
        }
      break;
    case 'h':
    case 'i':
      for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j + 1 < n; ++j)
          if (std::abs(i - j) == 1) ch.serre(rel == 'h' ? Kind::E : Kind::F, i, j);
      break;
    case 'j':
      for (int i = 0; i + 1 < n; ++i)
        for (int j = 0; j + 1 < n; ++j)
          if (std::abs(i - j) > 1)
            for (Kind k : {Kind::E, Kind::F}) ch.exchange({k, i}, {k, j}, kOne, kOne, {i, j});
      break;
    default:
      throw PreconditionError(std::string("unknown relation '") + rel + "'");
  }
}

}  // namespace

Report verify_relation(char relation, int n, int d, int window, int samples, std::uint64_t seed) {
  if (n < 2 || d < 1) throw PreconditionError("verify needs n >= 2 and d >= 1");
  if (window < 0 || samples < 1) throw PreconditionError("window >= 0 and samples >= 1 required");
  if ((relation < 'a' || relation > 'j') && relation != 'C')
    throw PreconditionError(std::string("unknown relation '") + relation + "'");
  Report rep;
  rep.relation = relation;
  rep.n = n;
  rep.d = d;
  rep.window = window;
  rep.samples = samples;
  rep.seed = seed;

  struct Task {
    Composition v;
    int sample;
    LaurentPoly f;
  };
  std::vector<Task> tasks;
  for (const auto& v : compositions(d, n)) {
    const auto fs = sample_polys(v, samples, seed);
    for (int s = 0; s < static_cast<int>(fs.size()); ++s) tasks.push_back({v, s, fs[s]});
  }
  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::exception_ptr err;
  auto worker = [&] {
    for (std::size_t t; (t = next++) < tasks.size();) {
      try {
        Modes modes(2 * window + 2);
        Checker ch(modes, tasks[t].v, tasks[t].f, tasks[t].sample, window, results[t]);
        run_relation(relation, n, ch);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
      }
    }
  };
  const int nthreads = std::min<int>(worker_count(), static_cast<int>(tasks.size()));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < nthreads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (err) std::rethrow_exception(err);
  for (auto& r : results) {
    rep.checks += r.checks;
    for (auto& f : r.failures) rep.failures.push_back(std::move(f));
  }
  return rep;
}

}  // namespace qaff
