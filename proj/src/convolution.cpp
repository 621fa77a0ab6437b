#include "qaff/convolution.hpp"

#include <algorithm>
#include <string>

#include "qaff/symmetrize.hpp"

namespace qaff {

namespace {

std::vector<int> sorted_union(const std::vector<std::vector<int>>& sets) {
  std::vector<int> out;
  for (const auto& s : sets) out.insert(out.end(), s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

// x_t / (x_t - x_s) = (1 - x_s/x_t)^{-1}.
StructuredFraction inverse_one_minus(int nvars, int s, int t) {
  QMono unit;
  const Binomial b = Binomial::normalize(QMono{}, t, QMono{}, s, unit);
  return StructuredFraction(LaurentPoly::var(nvars, t).scaled(unit.inverse().value()), {{b, 1}});
}

SegPartition side_partition(const IntMatrix& a, int side) {
  if (side == 1) return row_partition(a);
  if (side == 2) return col_partition(a);
  throw PreconditionError("side must be 1 or 2");
}

}  // namespace

GradedClass GradedClass::make(IntMatrix a, LaurentPoly value) {
  if (value.nvars() != a.total())
    throw PreconditionError("class on " + a.to_string() + " needs " + std::to_string(a.total()) +
                            " variables");
  if (!is_invariant(value, block_partition(a)))
    throw PreconditionError("value is not invariant under S_A for A = " + a.to_string());
  return {std::move(a), std::move(value)};
}

GradedClass pullback(const LaurentPoly& f, const IntMatrix& a, int side) {
  if (!is_invariant(f, side_partition(a, side)))
    throw PreconditionError("pullback: input is not invariant under S_{A_" +
                            std::to_string(side) + "}");
  return GradedClass::make(a, f);
}

StructuredFraction fibre_kernel(const IntMatrix& a, int side) {
  const int n = a.n(), d = a.total();
  if (side != 1 && side != 2) throw PreconditionError("side must be 1 or 2");
  const auto bl = blocks(a);
  std::vector<StructuredFraction> fs;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = k + 1; l < n; ++l) {
        const auto& ss = side == 1 ? bl[j][l] : bl[l][j];
        const auto& ts = side == 1 ? bl[j][k] : bl[k][j];
        for (int s : ss)
          for (int t : ts) fs.push_back(inverse_one_minus(d, s, t));
      }
  return frac_product(fs, d);
}

LaurentPoly pushforward(const GradedClass& f, int side) {
  const StructuredFraction integrand = fibre_kernel(f.matrix, side).times(f.value);
  const SegPartition target = side_partition(f.matrix, side);
  const LaurentPoly out = symmetrize(integrand, block_partition(f.matrix), target).to_poly();
  if (!is_invariant(out, target))
    throw AlgebraError("pushforward produced a non-invariant polynomial");
  return out;
}

Perm segments_to_rows(const IntMatrix& b) {
  const SegPartition rows = row_partition(b);
  const SegPartition seg = segments(b.row_sums());
  Perm w(b.total());
  for (std::size_t i = 0; i < rows.pieces.size(); ++i)
    for (std::size_t k = 0; k < rows.pieces[i].size(); ++k) w[seg.pieces[i][k]] = rows.pieces[i][k];
  return w;
}

GradedClass star_diag(const LaurentPoly& f, const Composition& v, const GradedClass& g) {
  check_composition(v);
  if (v != g.matrix.row_sums())
    throw PreconditionError("star_diag: row sums of B are not v");
  if (!is_invariant(f, segments(v))) throw PreconditionError("star_diag: f is not in R^(v)");
  return GradedClass::make(g.matrix, f.permuted(segments_to_rows(g.matrix)) * g.value);
}

Perm elementary_relabeling(const IntMatrix& a, const IntMatrix& b, IntMatrix& c) {
  Elementary e;
  if (!as_elementary(a, e) || e.a == 0)
    throw PreconditionError("star_elem: A is not elementary off the diagonal");
  const int n = a.n();
  if (b.n() != n) throw PreconditionError("star_elem: size mismatch");
  if (a.col_sums() != b.row_sums())
    throw PreconditionError("star_elem: column sums of A differ from row sums of B");
  const int h = e.h, r = h + e.dir;
  int l = -1;
  for (int k = 0; k < n; ++k)
    if (b(r, k) != 0 && (l < 0 || e.dir > 0)) l = k;
  if (l < 0) throw PreconditionError("star_elem: row h+dir of B is zero");
  if (b(r, l) < e.a) throw PreconditionError("star_elem: b_{h+dir,l} < a");
  if (b(h, l) != 0) throw PreconditionError("star_elem: b_{h,l} != 0");
  c = b;
  c(h, l) += e.a;
  c(r, l) -= e.a;

  const auto ba = blocks(a), bc = blocks(c);
  Perm w(a.total(), -1);
  auto send = [&](const std::vector<int>& src, const std::vector<int>& dst) {
    if (src.size() != dst.size()) throw AlgebraError("star_elem: block sizes disagree");
    for (std::size_t k = 0; k < src.size(); ++k) w[src[k]] = dst[k];
  };
  for (int i = 0; i < n; ++i) {
    if (i == h) {
      std::vector<std::vector<int>> rest;
      for (int j = 0; j < n; ++j)
        if (j != l) rest.push_back(bc[h][j]);
      send(ba[h][h], sorted_union(rest));
      send(ba[h][r], bc[h][l]);
    } else {
      send(ba[i][i], sorted_union(bc[i]));
    }
  }
  return w;
}

GradedClass star_elem_with(const GradedClass& f, const GradedClass& g, const Perm& w) {
  IntMatrix c;
  elementary_relabeling(f.matrix, g.matrix, c);
  check_perm(w, f.matrix.total());
  return GradedClass::make(c, f.value.permuted(w) * g.value);
}

GradedClass star_elem(const GradedClass& f, const GradedClass& g) {
  IntMatrix c;
  const Perm w = elementary_relabeling(f.matrix, g.matrix, c);
  return GradedClass::make(c, f.value.permuted(w) * g.value);
}

std::vector<std::vector<int>> grassmann_segments(const Composition& v, int i, int a, int b) {
  check_composition(v);
  if (i < 0 || i + 1 >= static_cast<int>(v.size()))
    throw PreconditionError("grassmann: index out of range");
  if (a < 1 || b < 1) throw PreconditionError("grassmann: a and b must be positive");
  int o = prefix_sums(v)[i];
  std::vector<std::vector<int>> out;
  for (int len : {v[i], b, a, v[i + 1]}) {
    std::vector<int> s;
    for (int k = 0; k < len; ++k) s.push_back(o++);
    out.push_back(s);
  }
  return out;
}

StructuredFraction grassmann_kernel(int nvars, const std::vector<int>& i2,
                                    const std::vector<int>& i3, bool normalized) {
  std::vector<StructuredFraction> fs;
  for (int s : i2)
    for (int t : i3) {
      // (q^2 x_t - x_s)/(x_t - x_s) = q theta_1(q x_t / x_s).
      StructuredFraction k = theta_ratio(nvars, 1, qx(t, 1), qx(s)).scaled(QRat::q());
      if (!normalized) {
        Monomial m(nvars);
        m.set(t, 1);
        m.set(s, -1);
        k = k.times(LaurentPoly::monomial(m, QRat(-1)));
      }
      fs.push_back(k);
    }
  return frac_product(fs, nvars);
}

GradedClass star_grassmann(const LaurentPoly& f, int a, const LaurentPoly& g, int b,
                           const Composition& v, int i) {
  const auto seg = grassmann_segments(v, i, a, b);
  Composition va = v, vb = v;
  va[i] += b;
  vb[i + 1] += a;
  const GradedClass fa = GradedClass::make(IntMatrix::elementary(va, i, i + 1, a), f);
  const GradedClass gb = GradedClass::make(IntMatrix::elementary(vb, i, i + 1, b), g);
  const IntMatrix c = IntMatrix::elementary(v, i, i + 1, a + b);
  const int d = c.total();

  SegPartition target = block_partition(c);
  const int mid = i * c.n() + i + 1;  // the block [C]_{i,i+1} = I_2 u I_3
  SegPartition source = target;
  source.pieces[mid] = seg[1];
  source.pieces.push_back(seg[2]);
  const StructuredFraction integrand =
      grassmann_kernel(d, seg[1], seg[2]).times(fa.value * gb.value);
  return GradedClass::make(c, symmetrize(integrand, source, target).to_poly());
}

}  // namespace qaff
