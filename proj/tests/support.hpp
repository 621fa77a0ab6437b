#pragma once

// Shared generators for property tests. Only mt19937_64 output and integer
// modulo are used so that sequences are identical across standard libraries.

#include <random>
#include <vector>

#include "qaff/laurent.hpp"
#include "qaff/symmetrize.hpp"

namespace qaff::testing {

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

// Small nonzero Laurent polynomial in q.
inline QRat random_q_coeff(std::mt19937_64& rng) {
  QRat c;
  while (c.is_zero()) {
    const int nterms = uniform_int(rng, 1, 2);
    for (int k = 0; k < nterms; ++k)
      c += QRat::monomial(Rational(uniform_int(rng, -3, 3)), uniform_int(rng, -2, 2));
  }
  return c;
}

inline LaurentPoly random_poly(std::mt19937_64& rng, int nvars, int max_terms, int max_exp,
                               bool q_coeffs = true) {
  std::vector<LaurentPoly::Term> terms;
  const int nterms = uniform_int(rng, 1, max_terms);
  for (int k = 0; k < nterms; ++k) {
    Monomial m(nvars);
    for (int i = 0; i < nvars; ++i) m.set(i, uniform_int(rng, -max_exp, max_exp));
    terms.emplace_back(m, q_coeffs ? random_q_coeff(rng) : QRat(uniform_int(rng, -4, 4)));
  }
  return LaurentPoly::from_terms(nvars, std::move(terms));
}

inline Perm random_perm(std::mt19937_64& rng, int d) {
  Perm p = identity_perm(d);
  for (int k = d - 1; k > 0; --k) std::swap(p[k], p[uniform_int(rng, 0, k)]);
  return p;
}

// Distinct nonzero rationals, so that no binomial (x_i - c x_j) with a
// small q-monomial c is likely to vanish.
inline std::vector<Rational> random_point(std::mt19937_64& rng, int nvars) {
  std::vector<Rational> x;
  while (static_cast<int>(x.size()) < nvars) {
    Rational r = make_rational(uniform_int(rng, 1, 97), uniform_int(rng, 1, 13));
    if (rng() % 2) r = -r;
    bool fresh = true;
    for (const auto& y : x) fresh = fresh && y != r;
    if (fresh) x.push_back(r);
  }
  return x;
}

inline Rational random_q_point(std::mt19937_64& rng) {
  return make_rational(uniform_int(rng, 2, 29), uniform_int(rng, 1, 7) * 2 + 1);
}

inline SegPartition singletons(int d) {
  SegPartition s{d, {}};
  for (int i = 0; i < d; ++i) s.pieces.push_back({i});
  return s;
}

// Orbit sum of a random polynomial: invariant under S_part.
inline LaurentPoly random_invariant(std::mt19937_64& rng, const SegPartition& part,
                                    int max_terms = 2, int max_exp = 1, bool q_coeffs = false) {
  const LaurentPoly p = random_poly(rng, part.d, max_terms, max_exp, q_coeffs);
  return symmetrize(StructuredFraction(p), singletons(part.d), part).to_poly();
}

}  // namespace qaff::testing
