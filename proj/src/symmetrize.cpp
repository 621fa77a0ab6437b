#include "qaff/symmetrize.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace qaff {

SegPartition meet(const SegPartition& i, const SegPartition& j) {
  if (i.d != j.d) throw PreconditionError("partitions of different sets");
  const auto li = i.labels();
  SegPartition m;
  m.d = i.d;
  for (const auto& piece : j.pieces) {
    std::vector<std::vector<int>> sub(i.pieces.size());
    for (int x : piece) sub[li[x]].push_back(x);
    for (auto& s : sub)
      if (!s.empty()) {
        std::sort(s.begin(), s.end());
        m.pieces.push_back(std::move(s));
      }
  }
  return m;
}

std::vector<Perm> coset_reps(const SegPartition& i, const SegPartition& j) {
  const int d = i.d;
  const SegPartition m = meet(i, j);
  const auto lm = m.labels();
  for (int x : lm)
    if (x < 0) throw PreconditionError("partition does not cover [d]");
  // For each J-piece, the list of meet pieces it contains.
  std::vector<std::vector<int>> sub(j.pieces.size());
  const auto lj = j.labels();
  for (std::size_t p = 0; p < m.pieces.size(); ++p) sub[lj[m.pieces[p][0]]].push_back(static_cast<int>(p));

  std::vector<Perm> out;
  Perm cur = identity_perm(d);
  std::vector<bool> used(d, false);
  // Walk the meet pieces J-block by J-block, choosing image sets inside the block.
  std::vector<std::pair<int, int>> order;  // (J-block, meet piece)
  for (std::size_t b = 0; b < sub.size(); ++b)
    for (int p : sub[b]) order.emplace_back(static_cast<int>(b), p);

  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == order.size()) {
      out.push_back(cur);
      return;
    }
    const auto& [b, p] = order[idx];
    const auto& block = j.pieces[b];
    const auto& piece = m.pieces[p];
    const int need = static_cast<int>(piece.size());
    std::vector<int> avail;
    for (int x : block)
      if (!used[x]) avail.push_back(x);
    std::sort(avail.begin(), avail.end());
    // Choose `need` of the available elements, increasing.
    std::vector<int> pick;
    std::function<void(std::size_t)> choose = [&](std::size_t start) {
      if (static_cast<int>(pick.size()) == need) {
        for (int k = 0; k < need; ++k) {
          cur[piece[k]] = pick[k];
          used[pick[k]] = true;
        }
        rec(idx + 1);
        for (int k = 0; k < need; ++k) used[pick[k]] = false;
        return;
      }
      for (std::size_t s = start; s < avail.size(); ++s) {
        if (avail.size() - s < need - pick.size()) break;
        pick.push_back(avail[s]);
        choose(s + 1);
        pick.pop_back();
      }
    };
    choose(0);
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Perm> coset_reps_randomized(const SegPartition& i, const SegPartition& j,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const SegPartition m = meet(i, j);
  std::vector<Perm> out;
  for (const Perm& s : coset_reps(i, j)) {
    Perm h = identity_perm(i.d);
    for (const auto& piece : m.pieces) {
      std::vector<int> img = piece;
      for (std::size_t k = img.size(); k > 1; --k) std::swap(img[k - 1], img[rng() % k]);
      for (std::size_t k = 0; k < piece.size(); ++k) h[piece[k]] = img[k];
    }
    out.push_back(compose_perm(s, h));
  }
  return out;
}

namespace {
template <class F, class Eq>
bool invariant_impl(const F& f, const SegPartition& part, int d, Eq eq) {
  for (const auto& piece : part.pieces) {
    std::vector<int> p = piece;
    std::sort(p.begin(), p.end());
    for (std::size_t k = 0; k + 1 < p.size(); ++k)
      if (!eq(f.permuted(transposition(d, p[k], p[k + 1])), f)) return false;
  }
  return true;
}
}  // namespace

bool is_invariant(const LaurentPoly& f, const SegPartition& part) {
  return invariant_impl(f, part, f.nvars(),
                        [](const LaurentPoly& a, const LaurentPoly& b) { return a == b; });
}

bool is_invariant(const StructuredFraction& f, const SegPartition& part) {
  return invariant_impl(f, part, f.nvars(), StructuredFraction::equal);
}

StructuredFraction symmetrize_with(const StructuredFraction& f, const std::vector<Perm>& reps) {
  std::vector<StructuredFraction> terms;
  terms.reserve(reps.size());
  for (const Perm& s : reps) terms.push_back(f.permuted(s));
  return frac_sum(terms, f.nvars());
}

StructuredFraction symmetrize(const StructuredFraction& f, const SegPartition& i,
                              const SegPartition& j, bool check) {
  if (i.d != f.nvars() || j.d != f.nvars())
    throw PreconditionError("symmetrize: partitions do not match the number of variables");
  if (check && !is_invariant(f, meet(i, j)))
    throw PreconditionError("symmetrize: input is not invariant under S_I cap S_J");
  return symmetrize_with(f, coset_reps(i, j));
}

StructuredFraction theta_product(int nvars, const std::vector<int>& set, const VarTerm& z,
                                 int k) {
  StructuredFraction r(LaurentPoly::constant(nvars, QRat(1)));
  for (int m : set) r = r * theta_ratio(nvars, k, z, qx(m));
  return r;
}

}  // namespace qaff
