#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qaff/convolution.hpp"
#include "qaff/symmetrize.hpp"
#include "support.hpp"

using namespace qaff;
using namespace qaff::testing;

namespace {

IntMatrix M(std::vector<std::vector<int>> rows) { return IntMatrix::from_rows(rows); }
LaurentPoly X(int d, int i) { return LaurentPoly::var(d, i); }
LaurentPoly one(int d) { return LaurentPoly::constant(d, QRat(1)); }

LaurentPoly sum_vars(int d) {
  LaurentPoly s(d);
  for (int i = 0; i < d; ++i) s += X(d, i);
  return s;
}

}  // namespace

TEST_CASE("pullback") {
  const IntMatrix a = M({{1, 1}, {0, 0}});
  CHECK(pullback(one(2), a, 1).value == one(2));
  CHECK(pullback(X(2, 0) + X(2, 1), a, 1).value == X(2, 0) + X(2, 1));
  CHECK_THROWS_AS(pullback(X(2, 0), a, 1), PreconditionError);
  CHECK(pullback(X(2, 0), a, 2).value == X(2, 0));
  const IntMatrix dg = IntMatrix::diag({2, 1});
  CHECK(pullback(X(3, 0) * X(3, 1), dg, 1).matrix == dg);
}

TEST_CASE("pushforward examples") {
  const IntMatrix a = M({{1, 1}, {0, 0}});
  CHECK(pushforward(GradedClass::make(a, one(2)), 1) == one(2));
  CHECK(pushforward(GradedClass::make(a, X(2, 0)), 1) == X(2, 0) + X(2, 1));
  CHECK(pushforward(GradedClass::make(a, X(2, 1)), 1) == LaurentPoly(2));
  // Along the other side the fibre is a point.
  CHECK(pushforward(GradedClass::make(a, X(2, 1)), 2) == X(2, 1));
}

TEST_CASE("pushforward after pullback on diagonal matrices") {
  std::mt19937_64 rng(5);
  for (const auto& v : compositions(3, 3)) {
    const IntMatrix dg = IntMatrix::diag(v);
    for (int side = 1; side <= 2; ++side) {
      const LaurentPoly f = random_invariant(rng, segments(v), 3, 2, true);
      CHECK(pushforward(pullback(f, dg, side), side) == f);
    }
  }
}

TEST_CASE("pushforward is polynomial on elementary matrices") {
  std::mt19937_64 rng(17);
  int done = 0;
  for (int d = 1; d <= 3; ++d)
    for (int n = 2; n <= 3; ++n)
      for (const auto& a : all_matrices(n, d)) {
        Elementary e;
        if (!as_elementary(a, e)) continue;
        for (int side = 1; side <= 2; ++side) {
          const LaurentPoly f = random_invariant(rng, block_partition(a), 3, 2, true);
          const LaurentPoly p = pushforward(GradedClass::make(a, f), side);
          CHECK(is_invariant(p, side == 1 ? row_partition(a) : col_partition(a)));
          ++done;
        }
      }
  CHECK(done > 20);
}

TEST_CASE("diagonal product") {
  const IntMatrix b = M({{1, 1}, {1, 0}});
  const GradedClass g = GradedClass::make(b, X(3, 0) * X(3, 1) * X(3, 2) + X(3, 1));
  CHECK(star_diag(one(3), {2, 1}, g) == g);
  CHECK(star_diag(sum_vars(3), {2, 1}, g).value == sum_vars(3) * g.value);
  // f in R^(2,1) is relabeled onto the rows {1,3}, {2} of B.
  CHECK(segments_to_rows(b) == Perm{0, 2, 1});
  CHECK(star_diag(X(3, 0) + X(3, 1), {2, 1}, GradedClass::make(b, one(3))).value ==
        X(3, 0) + X(3, 2));
  const GradedClass low = GradedClass::make(M({{1, 0}, {1, 0}}), one(2));
  CHECK_THROWS_AS(star_diag(one(2), {2, 0}, low), PreconditionError);
  CHECK(star_diag(one(2), {1, 1}, low) == low);

  // Unit law on random classes.
  std::mt19937_64 rng(3);
  for (const auto& bb : all_matrices(3, 3)) {
    const GradedClass c = GradedClass::make(bb, random_invariant(rng, block_partition(bb)));
    CHECK(star_diag(one(3), bb.row_sums(), c) == c);
  }
}

TEST_CASE("elementary product examples") {
  const IntMatrix a = M({{1, 1}, {0, 1}}), b = M({{1, 0}, {1, 1}});
  const GradedClass f1 = GradedClass::make(a, one(3));
  const GradedClass g1 = GradedClass::make(b, one(3));
  const GradedClass r = star_elem(f1, g1);
  CHECK(r.matrix == M({{1, 1}, {1, 0}}));
  CHECK(r.value == one(3));
  CHECK(star_elem(f1, GradedClass::make(b, sum_vars(3))).value == sum_vars(3));
  IntMatrix c;
  CHECK(elementary_relabeling(a, b, c) == Perm{0, 2, 1});
  // The variable of the block [A]_12 goes to the block [C]_12.
  CHECK(star_elem(GradedClass::make(a, X(3, 1)), g1).value == X(3, 2));

  CHECK_THROWS_AS(star_elem(GradedClass::make(IntMatrix::diag({1, 2}), one(3)), g1),
                  PreconditionError);
  // b_hl != 0.
  CHECK_THROWS_AS(star_elem(f1, GradedClass::make(M({{0, 1}, {1, 1}}), one(3))),
                  PreconditionError);
}

TEST_CASE("elementary product grading and relabeling independence") {
  std::mt19937_64 rng(23);
  int applied = 0;
  for (int n = 2; n <= 3; ++n)
    for (int d = 1; d <= 4; ++d) {
      const auto all = all_matrices(n, d);
      for (const auto& a : all) {
        Elementary e;
        if (!as_elementary(a, e) || e.a == 0) continue;
        for (const auto& b : all) {
          IntMatrix c;
          Perm w;
          try {
            w = elementary_relabeling(a, b, c);
          } catch (const PreconditionError&) {
            continue;
          }
          ++applied;
          CHECK(c == compose(a, b));
          if (applied % 7) continue;
          const GradedClass f = GradedClass::make(a, random_invariant(rng, block_partition(a)));
          const GradedClass g = GradedClass::make(b, random_invariant(rng, block_partition(b)));
          const GradedClass base = star_elem(f, g);
          // Other valid relabelings: w s with s in S_A, and t w with t in S_C.
          for (int k = 0; k < 3; ++k) {
            Perm s = identity_perm(d), t = identity_perm(d);
            for (const auto& p : block_partition(a).pieces)
              if (p.size() > 1) {
                const int x = uniform_int(rng, 0, static_cast<int>(p.size()) - 2);
                std::swap(s[p[x]], s[p[x + 1]]);
              }
            for (const auto& p : block_partition(c).pieces)
              if (p.size() > 1) {
                const int x = uniform_int(rng, 0, static_cast<int>(p.size()) - 2);
                std::swap(t[p[x]], t[p[x + 1]]);
              }
            CHECK(star_elem_with(f, g, compose_perm(t, compose_perm(w, s))) == base);
          }
        }
      }
    }
  CHECK(applied > 50);
}

TEST_CASE("grassmannian product") {
  CHECK(star_grassmann(one(2), 1, one(2), 1, {0, 0}).value ==
        LaurentPoly::constant(2, QRat::q_pow(2) + QRat(1)));
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; a + b <= 4; ++b) {
      const GradedClass r = star_grassmann(one(a + b), a, one(a + b), b, {0, 0});
      CHECK(r.matrix == M({{0, a + b}, {0, 0}}));
      CHECK(r.value == LaurentPoly::constant(a + b, gauss_p(a, b)));
      // Oracle: q^{ab} [a+b]! / ([a]! [b]!).
      CHECK(r.value.coeff(Monomial(a + b)) ==
            QRat::q_pow(a * b) * qfact(a + b) / (qfact(a) * qfact(b)));
    }
  // Other layouts: n = 3, i = 1 with outer segments.
  const Composition v{1, 1, 1};
  const auto seg = grassmann_segments(v, 1, 1, 2);
  CHECK(seg == std::vector<std::vector<int>>{{1}, {2, 3}, {4}, {5}});
  const GradedClass r = star_grassmann(one(6), 1, one(6), 2, v, 1);
  CHECK(r.value == LaurentPoly::constant(6, gauss_p(1, 2)));
  CHECK(r.matrix == M({{1, 0, 0}, {0, 1, 3}, {0, 0, 1}}));
}

TEST_CASE("grassmannian product with a symmetric factor") {
  std::mt19937_64 rng(8);
  const Composition v{1, 1};
  const int a = 1, b = 2, d = 5;
  const auto seg = grassmann_segments(v, 0, a, b);
  // Invariant under S_{I1 u I2 u I3} x S_{I4}, hence in R^(A) and R^(I2 u I3).
  SegPartition part{d, {{0, 1, 2, 3}, {4}}};
  for (int trial = 0; trial < 4; ++trial) {
    const LaurentPoly f = random_invariant(rng, part, 2, 1, true);
    const GradedClass r = star_grassmann(f, a, one(d), b, v);
    CHECK(r.value == f.scaled(gauss_p(a, b)));
  }
  CHECK_THROWS_AS(star_grassmann(X(d, 0), a, one(d), b, v), PreconditionError);
  (void)seg;
}

TEST_CASE("grassmann kernels") {
  const std::vector<int> i2{0, 1}, i3{2};
  const StructuredFraction norm = grassmann_kernel(3, i2, i3, true);
  const StructuredFraction disp = grassmann_kernel(3, i2, i3, false);
  // normalized = prod (-x_s/x_t) * displayed.
  Monomial m(3);
  m.set(0, 1);
  m.set(1, 1);
  m.set(2, -2);
  CHECK(StructuredFraction::equal(norm, disp.times(LaurentPoly::monomial(m, QRat(1)))));
  // Pointwise check of the displayed form.
  std::mt19937_64 rng(4);
  for (int k = 0; k < 5; ++k) {
    const auto x = random_point(rng, 3);
    const Rational q = random_q_point(rng);
    Rational expect(1);
    for (int s : i2)
      for (int t : i3) expect *= (1 - q * q * x[t] / x[s]) / (1 - x[s] / x[t]);
    CHECK(disp.evaluate(x, q) == expect);
  }
}
