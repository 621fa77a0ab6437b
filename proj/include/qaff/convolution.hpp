#pragma once

// The product on the associated graded of the convolution algebra, in the
// cases with closed formulas: pull-back and push-forward along the two
// projections, diagonal and elementary left factors, and the Grassmannian
// product of two elementary classes.

#include <vector>

#include "qaff/flagcomb.hpp"
#include "qaff/laurent.hpp"

namespace qaff {

// An element of R^(A): a polynomial invariant under S_A.
struct GradedClass {
  IntMatrix matrix;
  LaurentPoly value;

  // Throws PreconditionError unless value is S_A-invariant in d variables.
  static GradedClass make(IntMatrix a, LaurentPoly value);
  friend bool operator==(const GradedClass&, const GradedClass&) = default;
};

// f in R^(A_i) viewed in R^(A). side is 1 (rows) or 2 (columns).
GradedClass pullback(const LaurentPoly& f, const IntMatrix& a, int side);

// The factor prod (1 - x_s/x_t)^{-1} over the couples of the fibre of the
// projection on side 1 or 2.
StructuredFraction fibre_kernel(const IntMatrix& a, int side);

// Symmetrizes f times the fibre kernel from S_A to S_{A_i}; throws
// NotPolynomialError if the sum does not clear.
LaurentPoly pushforward(const GradedClass& f, int side);

// w sending the index i of [v] increasingly onto the i-th row set of B, so
// that f.permuted(w) lies in R^(B_1) whenever f lies in R^(v).
Perm segments_to_rows(const IntMatrix& b);

// Diagonal left factor: f in R^(v) with v the row sums of B.
GradedClass star_diag(const LaurentPoly& f, const Composition& v, const GradedClass& g);

// Minimal-length relabeling w for A = E_{h,h+dir}(v,a) and C = A o B: it maps
// [A]_hh increasingly onto the union of [C]_hj (j != l), [A]_{h,h+dir} onto
// [C]_hl and [A]_ii onto the union of row i of C. Checks the preconditions of
// the closed form (l extremal in row h+dir of B, b_{h+dir,l} >= a, b_hl = 0,
// matching margins) and names the failing one.
Perm elementary_relabeling(const IntMatrix& a, const IntMatrix& b, IntMatrix& c);

// Elementary left factor: f.permuted(w) * g on A o B.
GradedClass star_elem(const GradedClass& f, const GradedClass& g);
// Same with an explicit relabeling (any w with the block conditions).
GradedClass star_elem_with(const GradedClass& f, const GradedClass& g, const Perm& w);

// Index sets I_1..I_4 of the Grassmannian product for A = E_{i,i+1}(v + b e_i, a),
// B = E_{i,i+1}(v + a e_{i+1}, b) (0-based i).
std::vector<std::vector<int>> grassmann_segments(const Composition& v, int i, int a, int b);

// prod over s in I_2, t in I_3 of (q^2 x_t - x_s)/(x_t - x_s); with
// `normalized` false, of (1 - q^2 x_t/x_s)/(1 - x_s/x_t) instead.
StructuredFraction grassmann_kernel(int nvars, const std::vector<int>& i2,
                                    const std::vector<int>& i3, bool normalized = true);

// f * g on A o B = E_{i,i+1}(v, a + b): the symmetrization of f g times the
// normalized kernel from S_{I_2} x S_{I_3} to S_{I_2 u I_3}.
GradedClass star_grassmann(const LaurentPoly& f, int a, const LaurentPoly& g, int b,
                           const Composition& v, int i = 0);

}  // namespace qaff
