#include <doctest.h>

#include <set>

#include "grlab/subalgebra.hpp"

using namespace grlab;
using GRE = GroupRingElement;

namespace {

int element_of_order(const GroupPtr& g, int n) {
  for (int i = 0; i < g->order(); ++i)
    if (g->element_order(i) == n) return i;
  REQUIRE(false);
  return -1;
}

int conjugation_orbit_count(const GroupPtr& g, int x) {
  std::set<int> seen;
  int orbits = 0;
  for (int i = 0; i < g->order(); ++i) {
    if (seen.count(i)) continue;
    ++orbits;
    int y = i;
    do {
      seen.insert(y);
      y = g->conj(y, x);
    } while (y != i);
  }
  return orbits;
}

}  // namespace

TEST_CASE("fixed points of the trivial and central units are everything") {
  auto s3 = preset_group("S3").group;
  auto Q = ScalarRing::rationals();
  CHECK(fixed_point_subring(GRE::one(s3, Q)).dim() == 6);
  auto q8 = preset_group("Q8").group;
  int z = element_of_order(q8, 2);  // the central involution
  CHECK(fixed_point_subring(GRE::basis(q8, Q, z)).dim() == 8);
}

TEST_CASE("fixed points of conjugation by (123) in S3") {
  auto s3 = preset_group("S3").group;
  auto R = ScalarRing::truncated_padic(3, 6);
  int x = element_of_order(s3, 3);
  auto a = fixed_point_subring(GRE::basis(s3, R, x));
  CHECK(a.dim() == 4);
  CHECK(a.is_unital());
  CHECK(a.is_free());

  // Independent oracle: orbit sums of <x>-conjugation on the group basis.
  std::vector<GRE> orbit_sums;
  std::set<int> seen;
  for (int i = 0; i < 6; ++i) {
    if (seen.count(i)) continue;
    Vec v(6, Scalar(0));
    int y = i;
    do {
      seen.insert(y);
      v[y] = Scalar(1);
      y = s3->conj(y, x);
    } while (y != i);
    orbit_sums.emplace_back(s3, R, v);
  }
  CHECK(orbit_sums.size() == 4);
  for (const auto& b : orbit_sums) CHECK(a.contains_element(b));
  Subalgebra oracle(s3, R, orbit_sums);
  for (const auto& b : a.basis()) CHECK(oracle.contains_element(b));
}

TEST_CASE("dim of the fixed ring equals the orbit count across the corpus") {
  auto R = ScalarRing::truncated_padic(2, 4);
  for (const char* name : {"S3", "D4", "Q8", "A4"}) {
    auto g = preset_group(name).group;
    for (int x = 0; x < g->order(); ++x) {
      if (g->element_order(x) % 2 != 0 || g->element_order(x) == 1) continue;
      auto a = fixed_point_subring(GRE::basis(g, R, x));
      CHECK(a.dim() == conjugation_orbit_count(g, x));
    }
  }
}

TEST_CASE("relative trace basics") {
  auto s3 = preset_group("S3").group;
  auto R = ScalarRing::truncated_padic(3, 6);
  int x = element_of_order(s3, 3);
  GroupElement xe{s3, x};

  // a fixed by x: trace is p*a
  auto one = GRE::one(s3, R);
  CHECK(relative_trace(one, xe, 3) == one.scaled(Scalar(3)));
  auto xb = GRE::basis(s3, R, x);
  CHECK(relative_trace(xb, xe, 3) == xb.scaled(Scalar(3)));

  // basis element with trivial stabilizer: the orbit sum
  int t = element_of_order(s3, 2);
  auto traced = relative_trace(GRE::basis(s3, R, t), xe, 3);
  GRE orbit = GRE::zero(s3, R);
  int y = t;
  for (int i = 0; i < 3; ++i) {
    orbit = orbit + GRE::basis(s3, R, y);
    y = s3->conj(y, x);
  }
  CHECK(traced == orbit);

  // result is fixed by x
  CHECK(traced.conjugated_by(x) == traced);

  // not defined on elements that x^p does not fix: order 9 would be needed
  CHECK_THROWS(relative_trace(one, GroupElement{s3, t}, 3));  // t not a 3-element
}

TEST_CASE("trace ideal for x central of order p is p*RG") {
  auto c4 = preset_group("C4").group;
  auto R = ScalarRing::truncated_padic(2, 6);
  int x = element_of_order(c4, 2);  // central in abelian C4
  auto t = trace_ideal(GroupElement{c4, x}, 2, R);
  CHECK(t.dim() == 4);
  CHECK(t.unit_rank() == 0);  // every generator is divisible by p
  for (const auto& b : t.basis())
    for (const auto& c : b.coeffs())
      CHECK((R.is_zero(c) || R.valuation(c) >= 1));
  // p*1 has a membership witness
  auto p1 = GRE::one(c4, R).scaled(Scalar(2));
  auto coords = t.contains(p1);
  REQUIRE(coords.has_value());
  CHECK(t.from_coords(*coords) == p1);
}

TEST_CASE("S3 trace ideal at p = 3") {
  auto s3 = preset_group("S3").group;
  auto R = ScalarRing::truncated_padic(3, 6);
  int x = element_of_order(s3, 3);
  GroupElement xe{s3, x};
  auto a = fixed_point_subring(GRE::basis(s3, R, x));
  auto t = trace_ideal(xe, 3, R);

  // Oracle: T is spanned by {3*1, 3x, 3x^2, that} (that = transposition sum).
  auto three = [&](int g) { return GRE::basis(s3, R, g).scaled(Scalar(3)); };
  GRE that = GRE::zero(s3, R);
  for (int i = 0; i < 6; ++i)
    if (s3->element_order(i) == 2) that = that + GRE::basis(s3, R, i);
  std::vector<GRE> oracle_gens{three(s3->identity()), three(x),
                               three(s3->power(x, 2)), that};
  Subalgebra oracle(s3, R, oracle_gens, false);
  for (const auto& b : t.basis()) CHECK(oracle.contains_element(b));
  for (const auto& b : oracle_gens) CHECK(t.contains_element(b));

  CHECK(t.is_ideal_of(a));

  // |A/T| = p^{|C_G(x)|}: length of A minus length of T = |H| = 3.
  CHECK(a.module_length() - t.module_length() == 3);
}

TEST_CASE("A = RH + T and RH cap T = pRH") {
  // Instances (G, x, p) small enough to check exactly.
  struct Inst { const char* name; int order_x; std::int64_t p; };
  for (auto [name, ox, p] : {Inst{"S3", 3, 3}, Inst{"D4", 2, 2},
                             Inst{"Q8", 4, 2}, Inst{"A4", 2, 2},
                             Inst{"D6", 3, 3}}) {
    auto g = preset_group(name).group;
    auto R = ScalarRing::truncated_padic(p, 6);
    int x = element_of_order(g, ox);
    GroupElement xe{g, x};
    auto a = fixed_point_subring(GRE::basis(g, R, x));
    auto t = trace_ideal(xe, p, R);
    auto h = centralizer(g, x);
    auto hgrp = subgroup_group(h);

    // RH embeds in A
    std::vector<GRE> rh_basis;
    for (int i = 0; i < hgrp.group->order(); ++i)
      rh_basis.push_back(embed_from_subgroup(
          g, hgrp, GRE::basis(hgrp.group, R, i)));
    for (const auto& b : rh_basis) CHECK(a.contains_element(b));

    // A = RH + T as spans
    std::vector<GRE> combined = rh_basis;
    for (const auto& b : t.basis()) combined.push_back(b);
    Subalgebra sum(g, R, combined, false);
    CHECK(sum.dim() == a.dim());
    CHECK(sum.unit_rank() == a.unit_rank());
    for (const auto& b : a.basis()) CHECK(sum.contains_element(b));

    // RH cap T = pRH
    std::vector<Vec> rh_rows, t_rows;
    for (const auto& b : rh_basis) rh_rows.push_back(b.coeffs());
    for (const auto& b : t.basis()) t_rows.push_back(b.coeffs());
    auto inter = span_intersection(R, rh_rows, t_rows);
    std::vector<Vec> prh_rows;
    for (const auto& b : rh_basis)
      prh_rows.push_back(b.scaled(Scalar(p)).coeffs());
    Echelon prh(Mat::from_rows(R, prh_rows), false);
    for (const auto& v : inter) CHECK(prh.contains(v));
    Echelon inter_ech(Mat::from_rows(R, inter), false);
    for (const auto& v : prh_rows) CHECK(inter_ech.contains(v));
  }
}

TEST_CASE("contains on unital subalgebras") {
  auto s3 = preset_group("S3").group;
  auto R = ScalarRing::truncated_padic(3, 6);
  int x = element_of_order(s3, 3);
  auto a = fixed_point_subring(GRE::basis(s3, R, x));
  // basis vectors get unit coordinate vectors
  for (int i = 0; i < a.dim(); ++i) {
    auto c = a.contains(a.basis()[i]);
    REQUIRE(c.has_value());
    for (int j = 0; j < a.dim(); ++j)
      CHECK((*c)[j] == (i == j ? R.one() : R.zero()));
  }
  auto z = a.contains(GRE::zero(s3, R));
  REQUIRE(z.has_value());
  CHECK(vec_is_zero(R, *z));
  // a transposition alone is not x-fixed
  int t = element_of_order(s3, 2);
  CHECK(!a.contains(GRE::basis(s3, R, t)).has_value());
}
