#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "grlab/group.hpp"

using namespace grlab;

namespace {

// Brute-force conjugation orbits, independent of FiniteGroup's cached data.
std::vector<std::set<int>> brute_classes(const GroupPtr& g) {
  std::vector<std::set<int>> out;
  std::set<int> seen;
  for (int i = 0; i < g->order(); ++i) {
    if (seen.count(i)) continue;
    std::set<int> orbit;
    for (int h = 0; h < g->order(); ++h) orbit.insert(g->conj(i, h));
    for (int x : orbit) seen.insert(x);
    out.push_back(orbit);
  }
  return out;
}

std::multiset<size_t> class_sizes(const GroupPtr& g) {
  std::multiset<size_t> s;
  for (const auto& c : g->conjugacy_classes()) s.insert(c.size());
  return s;
}

}  // namespace

TEST_CASE("C2 from a table") {
  auto g = FiniteGroup::from_table("C2", {{0, 1}, {1, 0}});
  CHECK(g->order() == 2);
  CHECK(g->identity() == 0);
  CHECK(g->element_order(1) == 2);
}

TEST_CASE("invalid tables are rejected") {
  CHECK_THROWS(FiniteGroup::from_table("bad", {{0, 0}, {1, 1}}));
  CHECK_THROWS(FiniteGroup::from_table("bad", {{0, 1}, {1, 2}}));
  // Latin square without identity: no e with e*x = x = x*e everywhere.
  CHECK_THROWS(FiniteGroup::from_table(
      "bad", {{1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}, {0, 1, 2, 3}}));
}

TEST_CASE("S3 from generators has order 6") {
  auto g = FiniteGroup::from_permutations("S3", 3, {{1, 0, 2}, {1, 2, 0}});
  CHECK(g->order() == 6);
  CHECK(class_sizes(g) == std::multiset<size_t>{1, 2, 3});
}

TEST_CASE("closure cap is enforced") {
  CHECK_THROWS(FiniteGroup::from_permutations("S3", 3, {{1, 0, 2}, {1, 2, 0}}, 5));
}

TEST_CASE("Q8 preset: order census") {
  auto q8 = preset_group("Q8").group;
  CHECK(q8->order() == 8);
  int order2 = 0;
  for (int i = 0; i < 8; ++i)
    if (q8->element_order(i) == 2) ++order2;
  CHECK(order2 == 1);
  CHECK(class_sizes(q8) == std::multiset<size_t>{1, 1, 2, 2, 2});
}

TEST_CASE("conjugacy classes match brute force on all presets") {
  for (const auto& name : preset_names()) {
    auto g = preset_group(name).group;
    auto brute = brute_classes(g);
    const auto& fast = g->conjugacy_classes();
    REQUIRE(fast.size() == brute.size());
    for (const auto& c : fast) {
      std::set<int> cs(c.begin(), c.end());
      CHECK(std::find(brute.begin(), brute.end(), cs) != brute.end());
    }
    // canonical order by minimal element
    for (size_t i = 1; i < fast.size(); ++i)
      CHECK(fast[i - 1].front() < fast[i].front());
    // abelian groups: all singletons
    if (g->is_abelian())
      for (const auto& c : fast) CHECK(c.size() == 1);
  }
}

TEST_CASE("orbit-stabilizer across the corpus") {
  for (const auto& name : preset_names()) {
    auto g = preset_group(name).group;
    for (int x = 0; x < g->order(); ++x) {
      auto c = centralizer(g, x);
      CHECK(c.order() *
                static_cast<int>(g->conjugacy_classes()[g->class_of(x)].size()) ==
            g->order());
      CHECK(c.contains(x));
    }
  }
}

TEST_CASE("centralizer examples") {
  auto s3 = preset_group("S3").group;
  CHECK(centralizer(s3, s3->identity()).order() == 6);
  for (int i = 0; i < 6; ++i)
    if (s3->element_order(i) == 3) CHECK(centralizer(s3, i).order() == 3);
}

TEST_CASE("p-decomposition properties on every corpus element") {
  for (const auto& name : preset_names()) {
    auto g = preset_group(name).group;
    for (std::int64_t p : {2, 3}) {
      for (int x = 0; x < g->order(); ++x) {
        auto [gp, gpp] = p_decomposition(GroupElement{g, x}, p);
        CHECK(g->mul(gp.index, gpp.index) == x);
        CHECK(g->mul(gpp.index, gp.index) == x);
        int op = g->element_order(gp.index);
        while (op % p == 0) op /= static_cast<int>(p);
        CHECK(op == 1);
        CHECK(g->element_order(gpp.index) % p != 0);
      }
    }
  }
}

TEST_CASE("p-decomposition examples") {
  auto d6 = preset_group("D6").group;
  int r = -1;
  for (int i = 0; i < d6->order(); ++i)
    if (d6->element_order(i) == 6) { r = i; break; }
  REQUIRE(r >= 0);
  auto [gp, gpp] = p_decomposition(GroupElement{d6, r}, 2);
  CHECK(gp.index == d6->power(r, 3));
  CHECK(gpp.index == d6->power(r, 4));
  auto c4 = preset_group("C4").group;
  int x = -1;
  for (int i = 0; i < 4; ++i)
    if (c4->element_order(i) == 4) { x = i; break; }
  auto [xp, xpp] = p_decomposition(GroupElement{c4, x}, 2);
  CHECK(xp.index == x);
  CHECK(xpp.index == c4->identity());
  auto [ip, ipp] = p_decomposition(GroupElement{c4, c4->identity()}, 2);
  CHECK(ip.index == c4->identity());
  CHECK(ipp.index == c4->identity());
}

TEST_CASE("right transversal") {
  auto preset = preset_group("S3");
  auto s3 = preset.group;
  auto whole = SubgroupHandle::whole(s3);
  auto triv = SubgroupHandle::trivial(s3);
  CHECK(right_transversal(whole, whole) == std::vector<int>{s3->identity()});
  CHECK(right_transversal(triv, whole).size() == 6);
  const auto& a3 = *preset.normal_subgroup;
  auto reps = right_transversal(a3, whole);
  CHECK(reps.size() == 2);
  CHECK(reps[0] == s3->identity());
  CHECK_THROWS(right_transversal(whole, a3));
}

TEST_CASE("quotients") {
  auto preset = preset_group("S3");
  auto s3 = preset.group;
  auto n = preset.normal_subgroup;
  auto q = quotient_group(s3, *n);
  CHECK(q.group->order() == 2);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      CHECK(q.projection[s3->mul(a, b)] ==
            q.group->mul(q.projection[a], q.projection[b]));

  auto d4 = preset_group("D4").group;
  auto z = SubgroupHandle::center(d4);
  auto q2 = quotient_group(d4, z);
  CHECK(q2.group->order() == 4);
  CHECK(q2.group->is_abelian());

  auto whole = SubgroupHandle::whole(s3);
  CHECK(quotient_group(s3, whole).group->order() == 1);

  // transpositions do not form a normal subgroup
  int t = -1;
  for (int i = 0; i < 6; ++i)
    if (s3->element_order(i) == 2) { t = i; break; }
  auto h = SubgroupHandle::generated(s3, {t});
  CHECK(!h.is_normal());
  CHECK_THROWS(quotient_group(s3, h));
}

TEST_CASE("p-regular classes") {
  auto s3 = preset_group("S3").group;
  CHECK(p_regular_classes(s3, 3).size() == 2);
  CHECK(p_regular_classes(s3, 5).size() == 3);  // p does not divide |G|
  auto q8 = preset_group("Q8").group;
  CHECK(p_regular_classes(q8, 2).size() == 1);
}

TEST_CASE("designated normal subgroups of the presets") {
  for (const auto& name : preset_names()) {
    auto preset = preset_group(name);
    REQUIRE(preset.normal_subgroup.has_value());
    const auto& n = *preset.normal_subgroup;
    CHECK(n.is_normal());
    // N is a p-group for the designated prime.
    for (int x : n.elements()) {
      int o = preset.group->element_order(x);
      while (o % preset.normal_prime == 0) o /= static_cast<int>(preset.normal_prime);
      CHECK(o == 1);
    }
  }
  CHECK(preset_group("A4").normal_subgroup->order() == 4);
  CHECK(preset_group("S4").normal_subgroup->order() == 4);
  CHECK(preset_group("D4").normal_subgroup->order() == 2);
  CHECK(preset_group("Q8").normal_subgroup->order() == 2);
  CHECK(preset_group("S3").normal_subgroup->order() == 3);
  CHECK(preset_group("SL(2,3)").normal_subgroup->order() == 8);
  CHECK_THROWS(preset_group("nope"));
}

TEST_CASE("subgroup as its own group") {
  auto s4 = preset_group("S4");
  auto sub = subgroup_group(*s4.normal_subgroup);
  CHECK(sub.group->order() == 4);
  CHECK(sub.group->is_abelian());
  for (int i = 0; i < sub.group->order(); ++i)
    for (int j = 0; j < sub.group->order(); ++j)
      CHECK(sub.to_parent[sub.group->mul(i, j)] ==
            s4.group->mul(sub.to_parent[i], sub.to_parent[j]));
}

TEST_CASE("group JSON input") {
  auto g = group_from_json(R"({"name":"C2","order":2,"table":[[0,1],[1,0]]})");
  CHECK(g->order() == 2);
  auto h = group_from_json(
      R"({"name":"S3","degree":3,"generators":[[1,0,2],[1,2,0]]})");
  CHECK(h->order() == 6);
  CHECK_THROWS(group_from_json(R"({"name":"x"})"));
  CHECK_THROWS(group_from_json(R"({"name":"x","order":3,"table":[[0,1],[1,0]]})"));
}

TEST_CASE("preset group orders") {
  std::map<std::string, int> expect{
      {"C2", 2}, {"C3", 3}, {"C4", 4}, {"C2xC2", 4}, {"S3", 6}, {"D4", 8},
      {"Q8", 8}, {"C3:C4", 12}, {"A4", 12}, {"D6", 12}, {"S4", 24},
      {"SL(2,3)", 24}};
  for (const auto& [name, order] : expect)
    CHECK(preset_group(name).group->order() == order);
}
