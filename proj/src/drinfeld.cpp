#include "qaff/drinfeld.hpp"

#include <numeric>

#include "qaff/errors.hpp"

namespace qaff {

namespace {

Rational rpow(const Rational& t, int e) {
  Rational r(1), b = e >= 0 ? t : Rational(1) / t;
  for (int k = 0; k < std::abs(e); ++k) r *= b;
  return r;
}

void check_lengths(const JordanData& j, const SemisimpleParam& s) {
  j.validate();
  s.validate();
  if (s.alphas.size() != j.lambda.size())
    throw PreconditionError("need one semisimple parameter per Jordan block (" +
                            std::to_string(j.lambda.size()) + "), got " +
                            std::to_string(s.alphas.size()));
}

}  // namespace

int JordanData::d() const { return std::accumulate(lambda.begin(), lambda.end(), 0); }

void JordanData::validate() const {
  if (n < 1) throw PreconditionError("n must be positive");
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    if (lambda[k] <= 0) throw PreconditionError("partition parts must be positive");
    if (k > 0 && lambda[k] > lambda[k - 1])
      throw PreconditionError("partition parts must be weakly decreasing");
    if (lambda[k] > n) throw PreconditionError("partition part exceeds n");
  }
}

void SemisimpleParam::validate(int cyclotomic_bound) const {
  for (const auto& a : alphas)
    if (a == 0) throw PreconditionError("semisimple parameters must be nonzero");
  if (t == 0) throw PreconditionError("t must be nonzero");
  if (const int m = root_of_unity_order(t, cyclotomic_bound))
    throw PreconditionError("t is a root of unity (root of Phi_" + std::to_string(m) + ")");
}

std::vector<int> dual_partition(const JordanData& j) {
  j.validate();
  std::vector<int> out(j.n, 0);
  for (int part : j.lambda)
    for (int i = 0; i < part; ++i) ++out[i];
  return out;
}

std::vector<UPoly> drinfeld_polys(const JordanData& j, const SemisimpleParam& s) {
  check_lengths(j, s);
  const auto dual = dual_partition(j);
  auto dual_at = [&](int i) { return i <= j.n ? dual[i - 1] : 0; };
  std::vector<UPoly> out;
  for (int i = 1; i < j.n; ++i) {
    UPoly p(Rational(1));
    for (int k = dual_at(i + 1) + 1; k <= dual_at(i); ++k) {
      const Rational root = rpow(s.t, i - 2) / s.alphas[k - 1];
      p = p * UPoly({-root, Rational(1)});
    }
    out.push_back(p);
  }
  return out;
}

std::vector<FundamentalFactor> fundamental_factors(const JordanData& j,
                                                   const SemisimpleParam& s) {
  check_lengths(j, s);
  std::vector<FundamentalFactor> out;
  for (std::size_t k = 0; k < j.lambda.size(); ++k) {
    if (j.lambda[k] >= j.n)
      throw PreconditionError("fundamental factors need every part below n");
    out.push_back({j.lambda[k], rpow(s.t, j.lambda[k] - 2) / s.alphas[k]});
  }
  return out;
}

std::vector<UPoly> polys_of_factors(const std::vector<FundamentalFactor>& fs, int n) {
  std::vector<UPoly> out(std::max(n - 1, 0), UPoly(Rational(1)));
  for (const auto& f : fs) {
    if (f.omega < 1 || f.omega >= n) throw PreconditionError("fundamental weight out of range");
    out[f.omega - 1] = out[f.omega - 1] * UPoly({-f.param, Rational(1)});
  }
  return out;
}

bool dominance(const std::vector<int>& v, const std::vector<int>& mu) {
  const std::size_t len = std::max(v.size(), mu.size());
  long sv = 0, sm = 0;
  for (std::size_t k = 0; k < len; ++k) {
    sv += k < v.size() ? v[k] : 0;
    sm += k < mu.size() ? mu[k] : 0;
  }
  if (sv != sm) throw PreconditionError("dominance needs equal totals");
  sv = sm = 0;
  for (std::size_t k = 0; k < len; ++k) {
    sv += k < v.size() ? v[k] : 0;
    sm += k < mu.size() ? mu[k] : 0;
    if (sv > sm) return false;
  }
  return true;
}

std::vector<Rational> build_semisimple(const JordanData& j, const SemisimpleParam& s) {
  check_lengths(j, s);
  std::vector<Rational> diag;
  const Rational t2 = s.t * s.t;
  for (std::size_t k = 0; k < j.lambda.size(); ++k) {
    const std::size_t start = diag.size();
    for (int i = 0; i < j.lambda[k]; ++i) diag.push_back(s.alphas[k] * rpow(s.t, -2 * i));
    // x has ones just above the diagonal of each block; (s x s^{-1})_{a,a+1}
    // = s_a / s_{a+1} must be t^2.
    for (std::size_t a = start; a + 1 < diag.size(); ++a)
      if (diag[a] / diag[a + 1] != t2) throw AlgebraError("s x s^{-1} != t^2 x");
  }
  return diag;
}

std::vector<std::vector<int>> partitions(int d, int max_part) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int cap) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, d, max_part);
  return out;
}

}  // namespace qaff
