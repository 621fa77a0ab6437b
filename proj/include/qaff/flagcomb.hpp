#pragma once

// Compositions, segment partitions, integer matrices with fixed margins,
// 3-arrays, the corner-sum order, the generic composition A o B and the
// decomposition of a matrix into elementary factors.
//
// Indices are 0-based throughout: row/column i here is row i+1 in the usual
// 1-based notation, and [d] = {0, ..., d-1}.

#include <string>
#include <vector>

#include "qaff/laurent.hpp"

namespace qaff {

using Composition = std::vector<int>;

void check_composition(const Composition& v);  // non-negative parts
int total(const Composition& v);
// v_bar_0 = 0, v_bar_i = v_1 + ... + v_i; size n + 1.
std::vector<int> prefix_sums(const Composition& v);
// All compositions of d into n parts, lexicographically decreasing.
std::vector<Composition> compositions(int d, int n);

// Ordered list of disjoint subsets of [d] covering [d]; pieces may be empty.
struct SegPartition {
  int d = 0;
  std::vector<std::vector<int>> pieces;

  // Label of the piece containing each element.
  std::vector<int> labels() const;
  friend bool operator==(const SegPartition&, const SegPartition&) = default;
};

// Piece i is the interval [v_bar_{i-1}, v_bar_i).
SegPartition segments(const Composition& v);

class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}
  IntMatrix(int n, std::vector<int> entries);
  static IntMatrix from_rows(const std::vector<std::vector<int>>& rows);
  static IntMatrix diag(const Composition& v);
  // diag(v) + a * E_ij.
  static IntMatrix elementary(const Composition& v, int i, int j, int a);

  int n() const { return n_; }
  int operator()(int i, int j) const { return a_[i * n_ + j]; }
  int& operator()(int i, int j) { return a_[i * n_ + j]; }
  const std::vector<int>& entries() const { return a_; }

  Composition row_sums() const;
  Composition col_sums() const;
  int total() const;
  bool is_diagonal() const;
  std::vector<std::vector<int>> rows() const;
  std::string to_string() const;  // "[[1,1],[0,1]]"

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<int> a_;
};

// Every n x n non-negative matrix with entry total d, sorted.
std::vector<IntMatrix> all_matrices(int n, int d);

class ThreeArray {
 public:
  ThreeArray() = default;
  explicit ThreeArray(int n) : n_(n), t_(static_cast<std::size_t>(n) * n * n, 0) {}

  int n() const { return n_; }
  int operator()(int i, int j, int k) const { return t_[(i * n_ + j) * n_ + k]; }
  int& operator()(int i, int j, int k) { return t_[(i * n_ + j) * n_ + k]; }

  IntMatrix m12() const;  // sum over k
  IntMatrix m23() const;  // sum over i
  IntMatrix m13() const;  // sum over j
  std::string to_string() const;

  friend bool operator==(const ThreeArray&, const ThreeArray&) = default;
  friend auto operator<=>(const ThreeArray&, const ThreeArray&) = default;

 private:
  int n_ = 0;
  std::vector<int> t_;
};

// m_ij = #{a in [v]_i : sigma(a) in [w]_j}.
IntMatrix perm_to_matrix(const Perm& sigma, const Composition& v, const Composition& w);

// Corner-sum order; matrices with different margins are incomparable.
bool order_leq(const IntMatrix& a, const IntMatrix& b);

// Bruhat order on permutations by the rank-matrix criterion.
bool bruhat_leq(const Perm& sigma, const Perm& tau);

// All 3-arrays with T_12 = a and T_23 = b, sorted.
std::vector<ThreeArray> enumerate_3arrays(const IntMatrix& a, const IntMatrix& b);

// Shape data of diag(v) + a E_{h,h+dir} with dir = +1 or -1 (a may be 0 when
// the caller fixes h).
struct Elementary {
  int h = 0;
  int dir = 1;
  int a = 0;
  Composition v;
};
// True when m - diag is zero or a single entry next to the diagonal.
bool as_elementary(const IntMatrix& m, Elementary& out);

struct RowTupleEntry {
  std::vector<int> s;
  ThreeArray t;
};
// Tuples s with 0 <= s_k <= b_{h+1,k}, sum s = a, and their arrays T(s), for
// A = diag(v) + a E_{h,h+1}. When A is diagonal the row h must be supplied.
std::vector<RowTupleEntry> lemma9_tuples(const IntMatrix& a, const IntMatrix& b, int h = -1);

// Unique maximum of {T_13 : T in T(A,B)}; throws when T(A,B) is empty or no
// maximum exists.
IntMatrix compose_bruteforce(const IntMatrix& a, const IntMatrix& b);
// Closed forms for diagonal and elementary A when they apply, else brute force.
IntMatrix compose(const IntMatrix& a, const IntMatrix& b);
// The closed form when it applies: diagonal A gives B, elementary A with the
// row condition gives B + a(E_hl - E_{h+dir,l}). Returns false otherwise.
bool compose_closed_form(const IntMatrix& a, const IntMatrix& b, IntMatrix& out);

// blocks[i][j] = [A]_ij, consecutive intervals in right-lexicographic order
// (column-major).
std::vector<std::vector<std::vector<int>>> blocks(const IntMatrix& a);
SegPartition block_partition(const IntMatrix& a);  // pieces indexed i*n + j
SegPartition row_partition(const IntMatrix& a);    // A_1
SegPartition col_partition(const IntMatrix& a);    // A_2

int length(const IntMatrix& c);

struct DecompositionStep {
  IntMatrix c;  // C = A o B
  IntMatrix a;  // elementary, possibly with a > 1
  IntMatrix b;
};
// The induction: each step peels an elementary factor off C.
std::vector<DecompositionStep> decomposition_steps(const IntMatrix& c);
// Factors G_1, ..., G_m, each diagonal or elementary with a = 1, such that
// G_1 o (G_2 o (... o G_m)) = C.
std::vector<IntMatrix> generator_decomposition(const IntMatrix& c);
// Splits diag(u) + a E_{h,h+dir} into a factors with a = 1.
std::vector<IntMatrix> split_elementary(const IntMatrix& e);
// Right-nested composition of a factor list.
IntMatrix recompose(const std::vector<IntMatrix>& factors);

}  // namespace qaff
