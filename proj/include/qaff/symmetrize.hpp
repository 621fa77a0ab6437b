#pragma once

// Coset symmetrizers f -> sum over S_J / (S_I cap S_J) of sigma(f), and
// invariance tests.

#include <cstdint>
#include <vector>

#include "qaff/flagcomb.hpp"
#include "qaff/laurent.hpp"

namespace qaff {

// Common refinement: the nonempty pieces I_a cap J_b, ordered by (b, a).
SegPartition meet(const SegPartition& i, const SegPartition& j);

// One representative per left coset sigma (S_I cap S_J) in S_J. Each
// representative maps every piece of the meet increasingly onto its image,
// which makes it the lexicographically smallest word in its coset. Sorted;
// the identity comes first.
std::vector<Perm> coset_reps(const SegPartition& i, const SegPartition& j);

// The same cosets with each representative multiplied on the right by a
// seeded random element of S_I cap S_J.
std::vector<Perm> coset_reps_randomized(const SegPartition& i, const SegPartition& j,
                                        std::uint64_t seed);

// Fixed by every transposition of consecutive elements inside each piece.
bool is_invariant(const LaurentPoly& f, const SegPartition& part);
bool is_invariant(const StructuredFraction& f, const SegPartition& part);

// Sum of sigma(f) over the representatives. When `check` is set, throws
// PreconditionError unless f is invariant under S_I cap S_J.
StructuredFraction symmetrize(const StructuredFraction& f, const SegPartition& i,
                              const SegPartition& j, bool check = true);
StructuredFraction symmetrize_with(const StructuredFraction& f, const std::vector<Perm>& reps);

// Product over m in S of theta_k(z / x_m) for z = c q^e x_p (p not in S).
// With k = 1 this is Theta_S(z); k = -1 gives its reciprocal.
StructuredFraction theta_product(int nvars, const std::vector<int>& set, const VarTerm& z,
                                 int k = 1);

}  // namespace qaff
