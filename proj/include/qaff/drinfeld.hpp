#pragma once

// Jordan types, dual partitions and the Drinfeld polynomials attached to a
// nilpotent x of type lambda and a semisimple s with s x s^{-1} = t^2 x.
// Indices of partitions and of P_i are 1-based here, as in the usual
// notation: lambda[0] is lambda_1 and polys[0] is P_1.

#include <string>
#include <utility>
#include <vector>

#include "qaff/qcoeff.hpp"

namespace qaff {

struct JordanData {
  std::vector<int> lambda;  // weakly decreasing, positive
  int n = 0;

  int d() const;
  // Throws PreconditionError unless lambda is a partition with parts <= n.
  void validate() const;
};

struct SemisimpleParam {
  std::vector<Rational> alphas;  // one per Jordan block
  Rational t;

  // Nonzero alphas and t; t must not be a root of Phi_m for m <= bound.
  void validate(int cyclotomic_bound = kDefaultCyclotomicBound) const;
};

// lambda^vee_i = #{j : lambda_j >= i}, i = 1..n.
std::vector<int> dual_partition(const JordanData& j);

// P_1..P_{n-1} in z: P_i = prod over lambda^vee_{i+1} < k <= lambda^vee_i of
// (z - t^{i-2} s_k^{-1}).
std::vector<UPoly> drinfeld_polys(const JordanData& j, const SemisimpleParam& s);

struct FundamentalFactor {
  int omega = 0;  // index of the fundamental weight
  Rational param;
  friend bool operator==(const FundamentalFactor&, const FundamentalFactor&) = default;
};
// (omega_{lambda_k}, alpha_k^{-1} t^{lambda_k - 2}) for each block; needs all
// parts < n.
std::vector<FundamentalFactor> fundamental_factors(const JordanData& j, const SemisimpleParam& s);
// Drinfeld polynomials of a tensor product of fundamental modules:
// V(omega_i)_a contributes (z - a) to P_i.
std::vector<UPoly> polys_of_factors(const std::vector<FundamentalFactor>& fs, int n);

// Prefix sums of v bounded by those of mu (shorter vectors padded by 0).
bool dominance(const std::vector<int>& v, const std::vector<int>& mu);

// Diagonal of the direct sum of alpha_k D(lambda_k), D(m) = diag(1, t^{-2}, ..., t^{-2(m-1)}).
std::vector<Rational> build_semisimple(const JordanData& j, const SemisimpleParam& s);

// Every partition of d with parts <= max_part, in decreasing lex order.
std::vector<std::vector<int>> partitions(int d, int max_part);

}  // namespace qaff
