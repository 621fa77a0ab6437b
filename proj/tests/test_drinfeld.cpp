#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qaff/drinfeld.hpp"
#include "qaff/errors.hpp"

using namespace qaff;

namespace {

Rational R(long a, long b = 1) { return make_rational(a, b); }
UPoly lin(const Rational& root) { return UPoly({-root, Rational(1)}); }
const UPoly kOne(Rational(1));

std::vector<int> strip(std::vector<int> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

TEST_CASE("dual partitions") {
  CHECK(dual_partition({{1, 1, 1}, 3}) == std::vector<int>{3, 0, 0});
  CHECK(dual_partition({{2, 1}, 3}) == std::vector<int>{2, 1, 0});
  CHECK(dual_partition({{3}, 4}) == std::vector<int>{1, 1, 1, 0});
  CHECK_THROWS_AS(dual_partition({{1, 2}, 3}), PreconditionError);
  CHECK_THROWS_AS(dual_partition({{4}, 3}), PreconditionError);
  for (int d = 1; d <= 6; ++d)
    for (int n = 1; n <= 6; ++n)
      for (const auto& lam : partitions(d, n)) {
        if (static_cast<int>(lam.size()) > n) continue;
        const auto dual = dual_partition({lam, n});
        int sum = 0;
        for (std::size_t k = 0; k < dual.size(); ++k) {
          sum += dual[k];
          if (k) CHECK(dual[k] <= dual[k - 1]);
        }
        CHECK(sum == d);
        CHECK(strip(dual_partition({strip(dual), n})) == lam);
      }
}

TEST_CASE("drinfeld polynomials") {
  const Rational t = R(5), a = R(2), b = R(3);
  // lambda = (d), n > d.
  for (int d = 1; d <= 4; ++d) {
    const auto p = drinfeld_polys({{d}, d + 1}, {{a}, t});
    REQUIRE(p.size() == static_cast<std::size_t>(d));
    for (int i = 1; i < d; ++i) CHECK(p[i - 1] == kOne);
    Rational root(1);
    for (int k = 0; k < d - 2; ++k) root *= t;
    for (int k = 0; k > d - 2; --k) root /= t;
    CHECK(p[d - 1] == lin(root / a));
  }
  const auto p = drinfeld_polys({{2, 1}, 3}, {{a, b}, t});
  CHECK(p[0] == lin(1 / (t * b)));
  CHECK(p[1] == lin(1 / a));
  CHECK(drinfeld_polys({{1, 1}, 3}, {{a, b}, t})[1] == kOne);
  CHECK_THROWS_AS(drinfeld_polys({{2, 1}, 3}, {{a}, t}), PreconditionError);

  // Degrees are the jumps of the dual partition and telescope to lambda^vee_1.
  for (int d = 1; d <= 5; ++d)
    for (const auto& lam : partitions(d, 4)) {
      const JordanData jd{lam, 4};
      std::vector<Rational> al;
      for (std::size_t k = 0; k < lam.size(); ++k) al.push_back(R(static_cast<long>(k) + 2));
      const auto ps = drinfeld_polys(jd, {al, R(7, 2)});
      const auto dual = dual_partition(jd);
      int deg_sum = 0;
      for (int i = 1; i < 4; ++i) {
        CHECK(ps[i - 1].degree() == dual[i - 1] - dual[i]);
        deg_sum += ps[i - 1].degree();
      }
      CHECK(deg_sum == dual[0] - dual[3]);
    }
}

TEST_CASE("fundamental factors") {
  const Rational t = R(5), a = R(2), b = R(3);
  auto f = fundamental_factors({{1}, 2}, {{a}, t});
  CHECK(f == std::vector<FundamentalFactor>{{1, 1 / (a * t)}});
  f = fundamental_factors({{2, 1}, 3}, {{a, b}, t});
  CHECK(f == std::vector<FundamentalFactor>{{2, 1 / a}, {1, 1 / (b * t)}});
  CHECK_THROWS_AS(fundamental_factors({{3}, 3}, {{a}, t}), PreconditionError);

  // Under V(omega_i)_c -> P_j = (z - c)^{delta_ij} both descriptions agree.
  for (int d = 1; d <= 5; ++d)
    for (int n = 2; n <= 5; ++n)
      for (const auto& lam : partitions(d, n - 1)) {
        std::vector<Rational> al;
        for (std::size_t k = 0; k < lam.size(); ++k) al.push_back(R(static_cast<long>(k) + 2, 3));
        const SemisimpleParam s{al, R(-3, 2)};
        CHECK(polys_of_factors(fundamental_factors({lam, n}, s), n) ==
              drinfeld_polys({lam, n}, s));
      }
}

TEST_CASE("dominance") {
  CHECK(dominance({2, 1, 0}, {2, 1, 0}));
  CHECK(dominance({1, 1, 1}, {2, 1, 0}));
  CHECK_FALSE(dominance({3, 0, 0}, {2, 1, 0}));
  CHECK_THROWS_AS(dominance({1, 1}, {3}), PreconditionError);
  std::vector<std::vector<int>> all;
  for (const auto& lam : partitions(5, 5)) {
    auto v = lam;
    v.resize(5, 0);
    all.push_back(v);
  }
  all.push_back({0, 2, 3, 0, 0});
  for (const auto& x : all)
    for (const auto& y : all) {
      CHECK(dominance(x, x));
      if (dominance(x, y) && dominance(y, x)) CHECK(x == y);
      if (!dominance(x, y)) continue;
      for (const auto& z : all)
        if (dominance(y, z)) CHECK(dominance(x, z));
    }
}

TEST_CASE("semisimple element") {
  const Rational t = R(5), a = R(2), b = R(3);
  CHECK(build_semisimple({{1}, 1}, {{a}, t}) == std::vector<Rational>{a});
  CHECK(build_semisimple({{2}, 2}, {{a}, t}) == std::vector<Rational>{a, a / (t * t)});
  CHECK(build_semisimple({{2, 1}, 2}, {{a, b}, t}) == std::vector<Rational>{a, a / (t * t), b});
  const auto s = build_semisimple({{3, 2}, 3}, {{a, b}, R(2, 7)});
  CHECK(s[0] / s[1] == R(4, 49));
  CHECK(s[3] / s[4] == R(4, 49));
}

TEST_CASE("root of unity guard") {
  CHECK_THROWS_AS(drinfeld_polys({{1}, 2}, {{R(1)}, R(1)}), PreconditionError);
  CHECK_THROWS_AS(drinfeld_polys({{1}, 2}, {{R(1)}, R(-1)}), PreconditionError);
  CHECK_THROWS_AS(drinfeld_polys({{1}, 2}, {{R(1)}, R(0)}), PreconditionError);
  CHECK_THROWS_AS(drinfeld_polys({{1}, 2}, {{R(0)}, R(2)}), PreconditionError);
  CHECK_NOTHROW(drinfeld_polys({{1}, 2}, {{R(1)}, R(2)}));
}
