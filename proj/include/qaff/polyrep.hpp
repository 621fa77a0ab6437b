#pragma once

// The polynomial representation on K = sum over v of R^(v): Fourier modes of
// the currents E_i(z), F_i(z), K_i^{+-}(z), the Cartan-type modes H_{i,k}, and a
// mode-by-mode verifier for the defining relations (a)-(j).
//
// Indices are 0-based: E_i, F_i for 0 <= i <= n-2 and K_j for 0 <= j <= n-1.
// Variables x_1..x_d are 0..d-1 and [v]_i is the i-th segment of v.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qaff/flagcomb.hpp"
#include "qaff/laurent.hpp"

namespace qaff {

struct CartanData {
  int n = 0;
  explicit CartanData(int n_) : n(n_) {}
  // Upper bidiagonal: -1 on the diagonal, +1 just above it.
  int c(int i, int j) const { return i == j ? -1 : (j == i + 1 ? 1 : 0); }
  int m(int i, int j) const { return -c(i, j) - c(j, i); }
};

// A vector in one weight space; a zero polynomial means the zero vector.
struct Component {
  Composition v;
  LaurentPoly f;
};

class WeightVector {
 public:
  WeightVector() = default;
  WeightVector(const Composition& v, const LaurentPoly& f) { add(v, f); }

  void add(const Composition& v, const LaurentPoly& f, const QRat& c = QRat(1));
  void add(const WeightVector& o, const QRat& c = QRat(1));
  const std::map<Composition, LaurentPoly>& components() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // Throws PreconditionError unless every component is S_v-invariant.
  void check_invariant() const;
  std::string to_string() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::map<Composition, LaurentPoly> c_;  // no zero entries
};

// E_{i,k}: R^(v) -> R^(v + e_i - e_{i+1}); the zero vector when v_{i+1} = 0.
Component apply_E(int i, int k, const Composition& v, const LaurentPoly& f);
// F_{i,k}: R^(v) -> R^(v - e_i + e_{i+1}); the zero vector when v_i = 0.
Component apply_F(int i, int k, const Composition& v, const LaurentPoly& f);

// The rational function K_{i,v}(z) as theta factors in z.
std::vector<ThetaFactor> K_factors(int i, const Composition& v);
// Coefficients of z^{-l} (plus, expansion at infinity) or z^{l} (minus,
// expansion at zero), l = 0..order.
Series K_series(int i, bool plus, const Composition& v, int order);
LaurentPoly K_coeff(int i, bool plus, int l, const Composition& v);
// K_{i+1,v}(z) / K_{i,v}(z) expanded the same way.
Series K_ratio_series(int i, bool plus, const Composition& v, int order);

// H_{i,k} for k != 0: [|k|]/|k| (q^{-k} sum_{m < vbar_i} x_m^k + q^{k} sum_{m >= vbar_{i+1}} x_m^k),
// with the sign fixed by K^{+-}(z) = K^{+-1} exp(+-(q - q^{-1}) sum_{k>0} H_{+-k} z^{-+k}).
LaurentPoly H_poly(int i, int k, const Composition& v);

// Row i: the coefficients of H_{i,k} in the segment power sums p_j = sum over
// [v]_j of x^k (up to the common factor [k]/k), and its determinant.
std::vector<std::vector<QRat>> power_sum_matrix(int n, int k);
QRat determinant(std::vector<std::vector<QRat>> m);

// Deterministic sample polynomials in R^(v): the constant 1, orbit sums of
// monomials with exponents in [-2, 2], then sparse sums of orbit sums with
// q-dependent coefficients.
std::vector<LaurentPoly> sample_polys(const Composition& v, int count, std::uint64_t seed);

struct RelationFailure {
  Composition v;
  std::vector<int> indices;
  std::vector<int> modes;
  int sample = 0;
  std::string lhs, rhs;
};

struct Report {
  char relation = 'a';
  int n = 0, d = 0, window = 0, samples = 0;
  std::uint64_t seed = 0;
  long checks = 0;
  std::vector<RelationFailure> failures;
  bool passed() const { return failures.empty(); }
};

// Thread count from QA_THREADS, else the hardware concurrency (at least 1).
int worker_count();

// Checks the cleared, mode-by-mode form of one relation on every weight v of
// d with n parts, every admissible index pair, all modes in [-window, window]
// and `samples` sample polynomials per weight. Relation 'C' is (c) with the
// subscripts as printed (K_j against E_i on the left, E_j and K_i on the
// right); it is kept as a control and fails whenever n >= 3.
Report verify_relation(char relation, int n, int d, int window, int samples, std::uint64_t seed);

}  // namespace qaff
