#include <doctest.h>

#include <random>

#include "grlab/linalg.hpp"

using namespace grlab;

namespace {

Vec sv(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Vec combine(const ScalarRing& R, const std::vector<Vec>& gens, const Vec& c) {
  Vec out(gens.empty() ? 0 : gens[0].size(), Scalar(0));
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = 0; j < out.size(); ++j)
      out[j] = R.add(out[j], R.mul(c[i], gens[i][j]));
  return out;
}

}  // namespace

TEST_CASE("echelon over Q solves and detects non-membership") {
  auto Q = ScalarRing::rationals();
  Mat m = Mat::from_rows(Q, {sv({1, 2, 3}), sv({0, 1, 1}), sv({1, 3, 4})});
  Echelon e(m);
  CHECK(e.rank() == 2);
  CHECK(e.contains(sv({2, 5, 7})));
  CHECK(!e.contains(sv({0, 0, 1})));
  auto c = e.coordinates(sv({2, 5, 7}));
  REQUIRE(c.has_value());
  CHECK(combine(Q, {sv({1, 2, 3}), sv({0, 1, 1}), sv({1, 3, 4})}, *c) ==
        sv({2, 5, 7}));
  auto k = e.kernel();
  REQUIRE(k.size() == 1);
  CHECK(vec_is_zero(Q, combine(Q, {sv({1, 2, 3}), sv({0, 1, 1}), sv({1, 3, 4})},
                               k[0])));
}

TEST_CASE("membership over Z/4 needs valuation-aware pivoting") {
  auto R = ScalarRing::truncated_padic(2, 2);
  // span{(2,1)} over Z/4: contains (0,2) = 2*(2,1) and not (2,0).
  Echelon e(Mat::from_rows(R, {sv({2, 1})}));
  CHECK(e.contains(sv({0, 2})));
  CHECK(!e.contains(sv({2, 0})));
}

TEST_CASE("torsion kernel over Z/p^k") {
  auto R = ScalarRing::truncated_padic(2, 3);  // mod 8
  // single generator (4, 0): annihilated exactly by multiples of 2.
  Echelon e(Mat::from_rows(R, {sv({4, 0})}));
  auto k = e.kernel();
  REQUIRE(k.size() == 1);
  CHECK(k[0] == sv({2}));
}

TEST_CASE("solve over Z/p^k with divisibility obstruction") {
  auto R = ScalarRing::truncated_padic(3, 3);  // mod 27
  Mat a = Mat::from_rows(R, {sv({3, 0}), sv({0, 1})});
  CHECK(solve(a, sv({6, 5})).has_value());
  CHECK(!solve(a, sv({1, 0})).has_value());  // 3x = 1 unsolvable mod 27
  auto x = solve(a, sv({6, 5}));
  CHECK(a.apply(*x) == sv({6, 5}));
}

TEST_CASE("randomized: reconstructed membership and kernel over Z/p^k") {
  std::mt19937_64 rng(7);
  auto R = ScalarRing::truncated_padic(2, 5);  // mod 32
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Vec> gens;
    int ng = 2 + static_cast<int>(rng() % 3), dim = 4 + static_cast<int>(rng() % 3);
    for (int i = 0; i < ng; ++i) {
      Vec v(dim);
      for (int j = 0; j < dim; ++j) v[j] = R.canon(Scalar((long)(rng() % 32)));
      gens.push_back(v);
    }
    Echelon e(Mat::from_rows(R, gens));
    // Random combinations are members, and coordinates reproduce them.
    Vec c(ng);
    for (int i = 0; i < ng; ++i) c[i] = R.canon(Scalar((long)(rng() % 32)));
    Vec v = combine(R, gens, c);
    CHECK(e.contains(v));
    auto coords = e.coordinates(v);
    REQUIRE(coords.has_value());
    CHECK(combine(R, gens, *coords) == v);
    // Kernel relations annihilate the generators.
    for (const auto& rel : e.kernel())
      CHECK(vec_is_zero(R, combine(R, gens, rel)));
  }
}

TEST_CASE("span intersection") {
  auto Q = ScalarRing::rationals();
  auto inter = span_intersection(
      Q, {sv({1, 0, 0}), sv({0, 1, 0})}, {sv({0, 1, 1}), sv({1, 0, 1})});
  // Both spans are 2-dim in Q^3, intersection is the line through (1,1,-? )
  Echelon e(Mat::from_rows(Q, inter));
  CHECK(e.rank() == 1);
  // (1,1,0)? must satisfy membership in both spans
  Echelon u(Mat::from_rows(Q, {sv({1, 0, 0}), sv({0, 1, 0})}));
  Echelon w(Mat::from_rows(Q, {sv({0, 1, 1}), sv({1, 0, 1})}));
  for (const auto& v : inter) {
    CHECK(u.contains(v));
    CHECK(w.contains(v));
  }
}

TEST_CASE("prime field behaves as a field") {
  auto F = ScalarRing::prime_field(3);
  Mat a = Mat::from_rows(F, {sv({1, 2}), sv({2, 2})});
  Echelon e(a);
  CHECK(e.rank() == 2);
  CHECK(e.unit_rank() == 2);
  auto x = solve(a, sv({1, 1}));
  REQUIRE(x.has_value());
  CHECK(a.apply(*x) == sv({1, 1}));
  // [[1,2],[2,1]] is singular mod 3: rank drops and some systems fail
  Mat s = Mat::from_rows(F, {sv({1, 2}), sv({2, 1})});
  CHECK(Echelon(s).rank() == 1);
  CHECK(!solve(s, sv({1, 1})).has_value());
}
