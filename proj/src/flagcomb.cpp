#include "qaff/flagcomb.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qaff {

void check_composition(const Composition& v) {
  if (v.empty()) throw PreconditionError("composition must have at least one part");
  for (int x : v)
    if (x < 0) throw PreconditionError("composition parts must be non-negative");
}

int total(const Composition& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

std::vector<int> prefix_sums(const Composition& v) {
  std::vector<int> p(v.size() + 1, 0);
  for (std::size_t i = 0; i < v.size(); ++i) p[i + 1] = p[i] + v[i];
  return p;
}

std::vector<Composition> compositions(int d, int n) {
  std::vector<Composition> out;
  Composition cur(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int x = left; x >= 0; --x) {
      cur[i] = x;
      rec(i + 1, left - x);
    }
  };
  if (n > 0) rec(0, d);
  return out;
}

std::vector<int> SegPartition::labels() const {
  std::vector<int> lab(d, -1);
  for (std::size_t p = 0; p < pieces.size(); ++p)
    for (int x : pieces[p]) lab[x] = static_cast<int>(p);
  return lab;
}

SegPartition segments(const Composition& v) {
  check_composition(v);
  SegPartition s;
  s.d = total(v);
  int next = 0;
  for (int part : v) {
    std::vector<int> piece;
    for (int k = 0; k < part; ++k) piece.push_back(next++);
    s.pieces.push_back(std::move(piece));
  }
  return s;
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(int n, std::vector<int> entries) : n_(n), a_(std::move(entries)) {
  if (static_cast<int>(a_.size()) != n * n) throw PreconditionError("matrix needs n*n entries");
  for (int x : a_)
    if (x < 0) throw PreconditionError("matrix entries must be non-negative");
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> e;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n) throw PreconditionError("matrix must be square");
    e.insert(e.end(), r.begin(), r.end());
  }
  return IntMatrix(n, std::move(e));
}

IntMatrix IntMatrix::diag(const Composition& v) {
  check_composition(v);
  IntMatrix m(static_cast<int>(v.size()));
  for (int i = 0; i < m.n_; ++i) m(i, i) = v[i];
  return m;
}

IntMatrix IntMatrix::elementary(const Composition& v, int i, int j, int a) {
  IntMatrix m = diag(v);
  if (i < 0 || j < 0 || i >= m.n_ || j >= m.n_ || i == j || a < 0)
    throw PreconditionError("bad elementary matrix data");
  m(i, j) += a;
  return m;
}

Composition IntMatrix::row_sums() const {
  Composition r(n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[i] += (*this)(i, j);
  return r;
}

Composition IntMatrix::col_sums() const {
  Composition c(n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) c[j] += (*this)(i, j);
  return c;
}

int IntMatrix::total() const {
  int s = 0;
  for (int x : a_) s += x;
  return s;
}

bool IntMatrix::is_diagonal() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

std::vector<std::vector<int>> IntMatrix::rows() const {
  std::vector<std::vector<int>> r(n_);
  for (int i = 0; i < n_; ++i) r[i].assign(a_.begin() + i * n_, a_.begin() + (i + 1) * n_);
  return r;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < n_; ++j) os << (j ? "," : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

std::vector<IntMatrix> all_matrices(int n, int d) {
  std::vector<IntMatrix> out;
  for (const auto& e : compositions(d, n * n)) out.emplace_back(n, e);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- ThreeArray

IntMatrix ThreeArray::m12() const {
  IntMatrix m(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k) m(i, j) += (*this)(i, j, k);
  return m;
}

IntMatrix ThreeArray::m23() const {
  IntMatrix m(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k) m(j, k) += (*this)(i, j, k);
  return m;
}

IntMatrix ThreeArray::m13() const {
  IntMatrix m(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k) m(i, k) += (*this)(i, j, k);
  return m;
}

std::string ThreeArray::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) {
    IntMatrix slice(n_);
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k) slice(j, k) = (*this)(i, j, k);
    os << (i ? "," : "") << slice.to_string();
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------- orders

IntMatrix perm_to_matrix(const Perm& sigma, const Composition& v, const Composition& w) {
  check_composition(v);
  check_composition(w);
  if (v.size() != w.size()) throw PreconditionError("compositions of different lengths");
  const int d = total(v);
  if (total(w) != d) throw PreconditionError("compositions of different totals");
  check_perm(sigma, d);
  const auto rl = segments(v).labels();
  const auto cl = segments(w).labels();
  IntMatrix m(static_cast<int>(v.size()));
  for (int a = 0; a < d; ++a) m(rl[a], cl[sigma[a]]) += 1;
  return m;
}

bool order_leq(const IntMatrix& a, const IntMatrix& b) {
  if (a.n() != b.n() || a.row_sums() != b.row_sums() || a.col_sums() != b.col_sums())
    return false;
  const int n = a.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int ua = 0, ub = 0, la = 0, lb = 0;
      for (int r = 0; r <= i; ++r)
        for (int s = j; s < n; ++s) {
          ua += a(r, s);
          ub += b(r, s);
        }
      for (int r = i; r < n; ++r)
        for (int s = 0; s <= j; ++s) {
          la += a(r, s);
          lb += b(r, s);
        }
      if (ua > ub || la > lb) return false;
    }
  return true;
}

bool bruhat_leq(const Perm& sigma, const Perm& tau) {
  const int d = static_cast<int>(sigma.size());
  check_perm(sigma, d);
  check_perm(tau, d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      int cs = 0, ct = 0;
      for (int a = 0; a <= i; ++a) {
        cs += sigma[a] >= k;
        ct += tau[a] >= k;
      }
      if (cs > ct) return false;
    }
  return true;
}

// ---------------------------------------------------------------- 3-arrays

namespace {

// All n x n non-negative tables with the given row and column sums.
std::vector<std::vector<int>> contingency_tables(const std::vector<int>& rows,
                                                 const std::vector<int>& cols) {
  const int n = static_cast<int>(rows.size());
  std::vector<std::vector<int>> out;
  if (total(rows) != total(cols)) return out;
  std::vector<int> cell(n * n, 0), rrem = rows, crem = cols;
  std::function<void(int)> rec = [&](int pos) {
    if (pos == n * n) {
      for (int c : crem)
        if (c != 0) return;
      out.push_back(cell);
      return;
    }
    const int i = pos / n, j = pos % n;
    if (j == n - 1) {
      const int x = rrem[i];
      if (x > crem[j]) return;
      cell[pos] = x;
      rrem[i] -= x;
      crem[j] -= x;
      rec(pos + 1);
      rrem[i] += x;
      crem[j] += x;
      return;
    }
    const int hi = std::min(rrem[i], crem[j]);
    for (int x = 0; x <= hi; ++x) {
      cell[pos] = x;
      rrem[i] -= x;
      crem[j] -= x;
      rec(pos + 1);
      rrem[i] += x;
      crem[j] += x;
    }
    cell[pos] = 0;
  };
  rec(0);
  return out;
}

}  // namespace

std::vector<ThreeArray> enumerate_3arrays(const IntMatrix& a, const IntMatrix& b) {
  std::vector<ThreeArray> out;
  if (a.n() != b.n() || a.col_sums() != b.row_sums()) return out;
  const int n = a.n();
  // For fixed j, the slice t_{. j .} has row sums a_{. j} and column sums b_{j .}.
  std::vector<std::vector<std::vector<int>>> slices(n);
  for (int j = 0; j < n; ++j) {
    std::vector<int> r(n), c(n);
    for (int i = 0; i < n; ++i) r[i] = a(i, j);
    for (int k = 0; k < n; ++k) c[k] = b(j, k);
    slices[j] = contingency_tables(r, c);
    if (slices[j].empty()) return out;
  }
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    ThreeArray t(n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) t(i, j, k) = slices[j][idx[j]][i * n + k];
    out.push_back(std::move(t));
    int j = 0;
    while (j < n && ++idx[j] == slices[j].size()) idx[j++] = 0;
    if (j == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool as_elementary(const IntMatrix& m, Elementary& out) {
  const int n = m.n();
  int found = 0;
  Elementary e;
  e.v.assign(n, 0);
  for (int i = 0; i < n; ++i) e.v[i] = m(i, i);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || m(i, j) == 0) continue;
      if (std::abs(i - j) != 1) return false;
      ++found;
      e.h = i;
      e.dir = j - i;
      e.a = m(i, j);
    }
  if (found > 1) return false;
  out = e;
  return true;
}

std::vector<RowTupleEntry> lemma9_tuples(const IntMatrix& a, const IntMatrix& b, int h) {
  Elementary e;
  if (!as_elementary(a, e) || (e.a > 0 && e.dir != 1))
    throw PreconditionError("lemma9_tuples: A must be diag(v) + a E_{h,h+1}");
  const int n = a.n();
  if (e.a == 0) {
    if (h < 0 || h + 1 >= n) throw PreconditionError("lemma9_tuples: diagonal A needs a row h");
    e.h = h;
  } else if (h >= 0 && h != e.h) {
    throw PreconditionError("lemma9_tuples: supplied row does not match A");
  }
  if (b.n() != n || a.col_sums() != b.row_sums())
    throw PreconditionError("lemma9_tuples: column sums of A must equal row sums of B");
  std::vector<RowTupleEntry> out;
  std::vector<int> s(n, 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == n) {
      if (left != 0) return;
      ThreeArray t(n);
      for (int i = 0; i < n; ++i)
        for (int kk = 0; kk < n; ++kk)
          if (i != e.h + 1) t(i, i, kk) = b(i, kk);
      for (int kk = 0; kk < n; ++kk) {
        t(e.h + 1, e.h + 1, kk) = b(e.h + 1, kk) - s[kk];
        t(e.h, e.h + 1, kk) = s[kk];
      }
      out.push_back({s, t});
      return;
    }
    for (int x = 0; x <= std::min(left, b(e.h + 1, k)); ++x) {
      s[k] = x;
      rec(k + 1, left - x);
    }
    s[k] = 0;
  };
  rec(0, e.a);
  return out;
}

// ---------------------------------------------------------------- composition

IntMatrix compose_bruteforce(const IntMatrix& a, const IntMatrix& b) {
  if (a.n() != b.n() || a.col_sums() != b.row_sums())
    throw PreconditionError("compose: column sums of A must equal row sums of B");
  const auto arrays = enumerate_3arrays(a, b);
  if (arrays.empty()) throw PreconditionError("compose: no 3-array with the given marginals");
  std::vector<IntMatrix> cands;
  for (const auto& t : arrays) cands.push_back(t.m13());
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  for (const auto& c : cands) {
    bool top = true;
    for (const auto& o : cands)
      if (!order_leq(o, c)) {
        top = false;
        break;
      }
    if (top) return c;
  }
  throw AlgebraError("compose: marginals " + a.to_string() + ", " + b.to_string() +
                     " have no unique maximal composition");
}

bool compose_closed_form(const IntMatrix& a, const IntMatrix& b, IntMatrix& out) {
  if (a.n() != b.n() || a.col_sums() != b.row_sums()) return false;
  if (a.is_diagonal()) {
    out = b;
    return true;
  }
  Elementary e;
  if (!as_elementary(a, e)) return false;
  const int n = a.n();
  const int src = e.h + e.dir;  // row of B losing the entries
  int l = -1;
  if (e.dir == 1) {
    for (int k = 0; k < n; ++k)
      if (b(src, k) != 0) l = k;
  } else {
    for (int k = n - 1; k >= 0; --k)
      if (b(src, k) != 0) l = k;
  }
  if (l < 0 || b(src, l) < e.a) return false;
  out = b;
  out(e.h, l) += e.a;
  out(src, l) -= e.a;
  return true;
}

IntMatrix compose(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix c;
  if (compose_closed_form(a, b, c)) return c;
  return compose_bruteforce(a, b);
}

// ---------------------------------------------------------------- blocks

std::vector<std::vector<std::vector<int>>> blocks(const IntMatrix& a) {
  const int n = a.n();
  std::vector<std::vector<std::vector<int>>> bl(n, std::vector<std::vector<int>>(n));
  int next = 0;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < a(i, j); ++k) bl[i][j].push_back(next++);
  return bl;
}

SegPartition block_partition(const IntMatrix& a) {
  SegPartition p;
  p.d = a.total();
  for (auto& row : blocks(a))
    for (auto& piece : row) p.pieces.push_back(std::move(piece));
  return p;
}

SegPartition row_partition(const IntMatrix& a) {
  SegPartition p;
  p.d = a.total();
  for (const auto& row : blocks(a)) {
    std::vector<int> piece;
    for (const auto& b : row) piece.insert(piece.end(), b.begin(), b.end());
    std::sort(piece.begin(), piece.end());
    p.pieces.push_back(std::move(piece));
  }
  return p;
}

SegPartition col_partition(const IntMatrix& a) {
  const auto bl = blocks(a);
  const int n = a.n();
  SegPartition p;
  p.d = a.total();
  for (int j = 0; j < n; ++j) {
    std::vector<int> piece;
    for (int i = 0; i < n; ++i) piece.insert(piece.end(), bl[i][j].begin(), bl[i][j].end());
    std::sort(piece.begin(), piece.end());
    p.pieces.push_back(std::move(piece));
  }
  return p;
}

int length(const IntMatrix& c) {
  int l = 0;
  for (int i = 0; i < c.n(); ++i)
    for (int j = 0; j < c.n(); ++j) {
      if (i == j) continue;
      const int k = std::abs(i - j) + 1;
      l += k * (k - 1) / 2 * c(i, j);
    }
  return l;
}

// ---------------------------------------------------------------- decomposition

std::vector<DecompositionStep> decomposition_steps(const IntMatrix& c0) {
  std::vector<DecompositionStep> steps;
  IntMatrix c = c0;
  const int n = c.n();
  Elementary e;
  while (!as_elementary(c, e)) {
    int h = -1, l = -1;
    // Largest (row, col) with row < col in right-lexicographic order.
    for (int j = n - 1; j >= 0 && h < 0; --j)
      for (int i = j - 1; i >= 0; --i)
        if (c(i, j) != 0) {
          h = i;
          l = j;
          break;
        }
    IntMatrix a, b = c;
    Composition v = c.row_sums();
    if (h >= 0) {
      const int x = c(h, l);
      b(h + 1, l) += x;
      b(h, l) -= x;
      v[h] -= x;
      a = IntMatrix::elementary(v, h, h + 1, x);
    } else {
      // Lower-triangular: smallest column, then smallest row below the diagonal.
      for (int j = 0; j < n && h < 0; ++j)
        for (int i = j + 1; i < n; ++i)
          if (c(i, j) != 0) {
            h = i;
            l = j;
            break;
          }
      const int x = c(h, l);
      b(h - 1, l) += x;
      b(h, l) -= x;
      v[h] -= x;
      a = IntMatrix::elementary(v, h, h - 1, x);
    }
    steps.push_back({c, a, b});
    c = b;
  }
  return steps;
}

std::vector<IntMatrix> split_elementary(const IntMatrix& m) {
  Elementary e;
  if (!as_elementary(m, e)) throw PreconditionError("split_elementary: not elementary");
  if (e.a <= 1) return {m};
  Composition first = e.v;
  first[e.h] += e.a - 1;
  Composition rest = e.v;
  rest[e.h + e.dir] += 1;
  std::vector<IntMatrix> out{IntMatrix::elementary(first, e.h, e.h + e.dir, 1)};
  auto tail = split_elementary(IntMatrix::elementary(rest, e.h, e.h + e.dir, e.a - 1));
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

std::vector<IntMatrix> generator_decomposition(const IntMatrix& c) {
  std::vector<IntMatrix> out;
  const auto steps = decomposition_steps(c);
  for (const auto& s : steps) {
    auto f = split_elementary(s.a);
    out.insert(out.end(), f.begin(), f.end());
  }
  auto last = split_elementary(steps.empty() ? c : steps.back().b);
  out.insert(out.end(), last.begin(), last.end());
  return out;
}

IntMatrix recompose(const std::vector<IntMatrix>& factors) {
  if (factors.empty()) throw PreconditionError("recompose: empty factor list");
  IntMatrix acc = factors.back();
  for (auto it = factors.rbegin() + 1; it != factors.rend(); ++it) acc = compose(*it, acc);
  return acc;
}

}  // namespace qaff
