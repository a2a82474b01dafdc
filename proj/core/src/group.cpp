#include "grlab/group.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace grlab {

namespace {

std::string cycle_notation(const std::vector<int>& perm) {
  std::string s;
  std::vector<bool> seen(perm.size(), false);
  for (size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    s += "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) s += " ";
      s += std::to_string(j);
      first = false;
      j = static_cast<size_t>(perm[j]);
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

}  // namespace

GroupPtr FiniteGroup::from_table(std::string name,
                                 std::vector<std::vector<int>> table,
                                 std::vector<std::string> labels) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw std::invalid_argument("group table empty");
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->name_ = std::move(name);
  g->order_ = n;
  g->table_.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw std::invalid_argument("group table not square");
    for (int j = 0; j < n; ++j) {
      int v = table[i][j];
      if (v < 0 || v >= n)
        throw std::invalid_argument("group table entry out of range");
      g->table_[static_cast<size_t>(i) * n + j] = v;
    }
  }

  // Latin square.
  for (int i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (int j = 0; j < n; ++j) {
      if (row[g->mul(i, j)]) throw std::invalid_argument("table row not a permutation");
      row[g->mul(i, j)] = true;
      if (col[g->mul(j, i)]) throw std::invalid_argument("table column not a permutation");
      col[g->mul(j, i)] = true;
    }
  }

  // Two-sided identity.
  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j)
      ok = g->mul(e, j) == j && g->mul(j, e) == j;
    if (ok) { id = e; break; }
  }
  if (id < 0) throw std::invalid_argument("table has no identity");
  g->identity_ = id;

  // Associativity: exhaustive at small order, seeded sample above.
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (g->mul(g->mul(a, b), c) != g->mul(a, g->mul(b, c)))
            throw std::invalid_argument("table not associative");
  } else {
    std::mt19937_64 rng(0xA55A);
    for (int t = 0; t < 20000; ++t) {
      int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n),
          c = static_cast<int>(rng() % n);
      if (g->mul(g->mul(a, b), c) != g->mul(a, g->mul(b, c)))
        throw std::invalid_argument("table not associative (sampled)");
    }
  }

  if (labels.empty()) {
    for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
  }
  if (static_cast<int>(labels.size()) != n)
    throw std::invalid_argument("label count mismatch");
  g->labels_ = std::move(labels);
  g->finalize();
  return g;
}

GroupPtr FiniteGroup::from_permutations(std::string name, int degree,
                                        const std::vector<std::vector<int>>& gens,
                                        int max_order) {
  for (const auto& p : gens) {
    if (static_cast<int>(p.size()) != degree)
      throw std::invalid_argument("generator degree mismatch");
    std::vector<bool> seen(degree, false);
    for (int v : p) {
      if (v < 0 || v >= degree || seen[v])
        throw std::invalid_argument("generator is not a permutation");
      seen[v] = true;
    }
  }
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);

  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
    // (a*b)(x) = b(a(x)): apply a, then b — consistent with table order below.
    std::vector<int> r(degree);
    for (int x = 0; x < degree; ++x) r[x] = b[a[x]];
    return r;
  };
  for (size_t head = 0; head < elems.size(); ++head) {
    for (const auto& gperm : gens) {
      auto prod = compose(elems[head], gperm);
      if (!index.count(prod)) {
        if (static_cast<int>(elems.size()) >= max_order)
          throw std::invalid_argument("generator closure exceeds max order");
        index[prod] = static_cast<int>(elems.size());
        elems.push_back(prod);
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = index.at(compose(elems[i], elems[j]));
  std::vector<std::string> labels;
  for (const auto& e : elems) labels.push_back(cycle_notation(e));
  return from_table(std::move(name), std::move(table), std::move(labels));
}

void FiniteGroup::finalize() {
  const int n = order_;
  inverse_.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (mul(i, j) == identity_) { inverse_[i] = j; break; }

  elem_order_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    int x = i, k = 1;
    while (x != identity_) { x = mul(x, i); ++k; }
    elem_order_[i] = k;
  }

  class_of_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (class_of_[i] >= 0) continue;
    std::set<int> orbit;
    for (int h = 0; h < n; ++h) orbit.insert(conj(i, h));
    int c = static_cast<int>(classes_.size());
    classes_.emplace_back(orbit.begin(), orbit.end());
    for (int x : classes_.back()) class_of_[x] = c;
  }
  // Canonical order: by minimal element index (orbits found in index order
  // already satisfy this, but keep it explicit).
  std::vector<int> order_idx(classes_.size());
  std::iota(order_idx.begin(), order_idx.end(), 0);
  std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
    return classes_[a].front() < classes_[b].front();
  });
  std::vector<std::vector<int>> sorted;
  for (int c : order_idx) sorted.push_back(classes_[c]);
  classes_ = std::move(sorted);
  for (int c = 0; c < static_cast<int>(classes_.size()); ++c)
    for (int x : classes_[c]) class_of_[x] = c;
}

int FiniteGroup::power(int g, long e) const {
  long n = elem_order_[g];
  long r = e % n;
  if (r < 0) r += n;
  int acc = identity_, base = g;
  while (r > 0) {
    if (r & 1) acc = mul(acc, base);
    base = mul(base, base);
    r >>= 1;
  }
  return acc;
}

bool FiniteGroup::is_abelian() const {
  for (int i = 0; i < order_; ++i)
    for (int j = i + 1; j < order_; ++j)
      if (mul(i, j) != mul(j, i)) return false;
  return true;
}

std::vector<int> FiniteGroup::center_elements() const {
  std::vector<int> z;
  for (int i = 0; i < order_; ++i) {
    bool central = true;
    for (int j = 0; j < order_ && central; ++j) central = mul(i, j) == mul(j, i);
    if (central) z.push_back(i);
  }
  return z;
}

// ---- SubgroupHandle ---------------------------------------------------------

SubgroupHandle::SubgroupHandle(GroupPtr group, std::vector<int> elements)
    : group_(std::move(group)) {
  std::set<int> s(elements.begin(), elements.end());
  if (!s.count(group_->identity()))
    throw std::invalid_argument("subgroup must contain the identity");
  for (int a : s) {
    if (!s.count(group_->inv(a)))
      throw std::invalid_argument("subgroup not closed under inverse");
    for (int b : s)
      if (!s.count(group_->mul(a, b)))
        throw std::invalid_argument("subgroup not closed under product");
  }
  elems_.assign(s.begin(), s.end());
  normal_ = true;
  for (int g = 0; g < group_->order() && normal_; ++g)
    for (int a : elems_)
      if (!s.count(group_->conj(a, g))) { normal_ = false; break; }
}

SubgroupHandle SubgroupHandle::generated(const GroupPtr& group,
                                         const std::vector<int>& gens) {
  std::set<int> s{group->identity()};
  std::vector<int> frontier{group->identity()};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier)
      for (int g : gens) {
        for (int prod : {group->mul(a, g), group->mul(a, group->inv(g))})
          if (!s.count(prod)) { s.insert(prod); next.push_back(prod); }
      }
    frontier = std::move(next);
  }
  return SubgroupHandle(group, std::vector<int>(s.begin(), s.end()));
}

SubgroupHandle SubgroupHandle::whole(const GroupPtr& group) {
  std::vector<int> all(group->order());
  std::iota(all.begin(), all.end(), 0);
  return SubgroupHandle(group, all);
}

SubgroupHandle SubgroupHandle::trivial(const GroupPtr& group) {
  return SubgroupHandle(group, {group->identity()});
}

SubgroupHandle SubgroupHandle::normal_closure(const GroupPtr& group, int g) {
  return generated(group, group->conjugacy_classes()[group->class_of(g)]);
}

SubgroupHandle SubgroupHandle::center(const GroupPtr& group) {
  return SubgroupHandle(group, group->center_elements());
}

bool SubgroupHandle::contains(int g) const {
  return std::binary_search(elems_.begin(), elems_.end(), g);
}

bool SubgroupHandle::contains_subgroup(const SubgroupHandle& k) const {
  for (int g : k.elements())
    if (!contains(g)) return false;
  return true;
}

// ---- operations -------------------------------------------------------------

SubgroupHandle centralizer(const GroupPtr& g, int elem) {
  std::vector<int> c;
  for (int h = 0; h < g->order(); ++h)
    if (g->mul(h, elem) == g->mul(elem, h)) c.push_back(h);
  return SubgroupHandle(g, c);
}

std::pair<GroupElement, GroupElement> p_decomposition(const GroupElement& g,
                                                      std::int64_t p) {
  const auto& G = g.group;
  long n = G->element_order(g.index);
  long pa = 1;
  while (n % p == 0) { n /= p; pa *= p; }
  const long m = n;  // coprime-to-p part of the order
  // Exponent CRT: e_p = 1 mod pa, 0 mod m and e_p' = 0 mod pa, 1 mod m.
  auto crt_exponent = [](long one_mod, long zero_mod) {
    if (one_mod == 1) return 0L;
    for (long t = 1; t < one_mod; ++t)
      if ((t * zero_mod) % one_mod == 1) return t * zero_mod;
    throw std::logic_error("p_decomposition: moduli not coprime");
  };
  GroupElement gp{G, G->power(g.index, crt_exponent(pa, m))};
  GroupElement gpp{G, G->power(g.index, crt_exponent(m, pa))};
  return {gp, gpp};
}

std::vector<int> right_transversal(const SubgroupHandle& k,
                                   const SubgroupHandle& h) {
  if (k.group() != h.group())
    throw std::invalid_argument("transversal: mismatched groups");
  if (!h.contains_subgroup(k))
    throw std::invalid_argument("transversal: K not contained in H");
  const auto& G = h.group();
  std::vector<int> reps;
  std::set<int> covered;
  std::vector<int> scan{G->identity()};
  scan.insert(scan.end(), h.elements().begin(), h.elements().end());
  for (int g : scan) {
    if (covered.count(g)) continue;
    reps.push_back(g);
    for (int a : k.elements()) covered.insert(G->mul(a, g));
  }
  return reps;
}

Quotient quotient_group(const GroupPtr& g, const SubgroupHandle& n) {
  if (!n.is_normal()) throw std::invalid_argument("quotient: N not normal");
  std::vector<int> coset_of(g->order(), -1);
  std::vector<std::vector<int>> cosets;
  for (int x = 0; x < g->order(); ++x) {
    if (coset_of[x] >= 0) continue;
    std::vector<int> coset;
    for (int a : n.elements()) coset.push_back(g->mul(a, x));
    std::sort(coset.begin(), coset.end());
    int c = static_cast<int>(cosets.size());
    for (int y : coset) coset_of[y] = c;
    cosets.push_back(std::move(coset));
  }
  const int q = static_cast<int>(cosets.size());
  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      table[a][b] = coset_of[g->mul(cosets[a][0], cosets[b][0])];
  std::vector<std::string> labels;
  for (const auto& c : cosets) labels.push_back(g->label(c[0]) + "N");
  auto qg = FiniteGroup::from_table(g->name() + "/N", std::move(table),
                                    std::move(labels));
  return Quotient{qg, coset_of};
}

SubgroupGroup subgroup_group(const SubgroupHandle& h) {
  const auto& G = h.group();
  const auto& elems = h.elements();
  const int m = static_cast<int>(elems.size());
  std::vector<int> from_parent(G->order(), -1);
  for (int i = 0; i < m; ++i) from_parent[elems[i]] = i;
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) {
    labels.push_back(G->label(elems[i]));
    for (int j = 0; j < m; ++j)
      table[i][j] = from_parent[G->mul(elems[i], elems[j])];
  }
  auto sub = FiniteGroup::from_table(G->name() + ".sub", std::move(table),
                                     std::move(labels));
  return SubgroupGroup{sub, elems, from_parent};
}

std::vector<int> p_regular_classes(const GroupPtr& g, std::int64_t p) {
  std::vector<int> out;
  const auto& classes = g->conjugacy_classes();
  for (int c = 0; c < static_cast<int>(classes.size()); ++c)
    if (g->element_order(classes[c][0]) % p != 0) out.push_back(c);
  return out;
}

// ---- presets ----------------------------------------------------------------

namespace {

GroupPtr make_q8() {
  // Elements 1,-1,i,-i,j,-j,k,-k as (axis, sign) with quaternion relations.
  struct Qu { int axis; int sign; };  // axis 0=1, 1=i, 2=j, 3=k
  auto idx = [](const Qu& q) { return 2 * q.axis + (q.sign < 0 ? 1 : 0); };
  auto qmul = [](const Qu& a, const Qu& b) {
    static const int axis_table[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign_table[4][4] = {
        {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    return Qu{axis_table[a.axis][b.axis],
              a.sign * b.sign * sign_table[a.axis][b.axis]};
  };
  std::vector<Qu> elems;
  for (int axis = 0; axis < 4; ++axis)
    for (int sign : {1, -1}) elems.push_back({axis, sign});
  static const char* names[8] = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  std::vector<std::string> labels(names, names + 8);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) table[a][b] = idx(qmul(elems[a], elems[b]));
  return FiniteGroup::from_table("Q8", std::move(table), std::move(labels));
}

GroupPtr make_dic3() {
  // <a, b | a^6 = 1, b^2 = a^3, b a b^-1 = a^-1>, elements a^m b^t.
  auto idx = [](int m, int t) { return ((m % 6) + 6) % 6 + 6 * t; };
  std::vector<std::vector<int>> table(12, std::vector<int>(12));
  std::vector<std::string> labels;
  for (int i = 0; i < 12; ++i) {
    int m1 = i % 6, t1 = i / 6;
    labels.push_back((t1 ? "a^" + std::to_string(m1) + "b"
                         : "a^" + std::to_string(m1)));
    for (int j = 0; j < 12; ++j) {
      int m2 = j % 6, t2 = j / 6;
      int m, t;
      if (t1 == 0) { m = m1 + m2; t = t2; }
      else if (t2 == 0) { m = m1 - m2; t = 1; }
      else { m = m1 - m2 + 3; t = 0; }
      table[i][j] = idx(m, t);
    }
  }
  return FiniteGroup::from_table("C3:C4", std::move(table), std::move(labels));
}

GroupPtr make_sl23() {
  // 2x2 matrices over F_3 with determinant 1, generated by BFS.
  using M = std::array<int, 4>;
  auto mmul = [](const M& a, const M& b) {
    auto r = [](int x) { return ((x % 3) + 3) % 3; };
    return M{r(a[0] * b[0] + a[1] * b[2]), r(a[0] * b[1] + a[1] * b[3]),
             r(a[2] * b[0] + a[3] * b[2]), r(a[2] * b[1] + a[3] * b[3])};
  };
  M id{1, 0, 0, 1};
  std::vector<M> gens{{1, 1, 0, 1}, {0, 2, 1, 0}};
  std::vector<M> elems{id};
  std::map<M, int> index{{id, 0}};
  for (size_t head = 0; head < elems.size(); ++head)
    for (const auto& g : gens) {
      auto prod = mmul(elems[head], g);
      if (!index.count(prod)) {
        index[prod] = static_cast<int>(elems.size());
        elems.push_back(prod);
      }
    }
  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    const auto& m = elems[i];
    labels.push_back("[" + std::to_string(m[0]) + std::to_string(m[1]) +
                     std::to_string(m[2]) + std::to_string(m[3]) + "]");
    for (int j = 0; j < n; ++j) table[i][j] = index.at(mmul(elems[i], elems[j]));
  }
  return FiniteGroup::from_table("SL(2,3)", std::move(table), std::move(labels));
}

int first_element_of_order(const GroupPtr& g, int n) {
  for (int i = 0; i < g->order(); ++i)
    if (g->element_order(i) == n) return i;
  throw std::logic_error("preset: no element of required order");
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"C2", "C3", "C4", "C2xC2", "S3", "D4", "Q8", "C3:C4", "A4", "D6",
          "S4", "SL(2,3)"};
}

Preset preset_group(const std::string& name) {
  Preset p;
  if (name == "C2") {
    p.group = FiniteGroup::from_permutations("C2", 2, {{1, 0}});
    p.normal_subgroup = SubgroupHandle::whole(p.group);
    p.normal_prime = 2;
  } else if (name == "C3") {
    p.group = FiniteGroup::from_permutations("C3", 3, {{1, 2, 0}});
    p.normal_subgroup = SubgroupHandle::whole(p.group);
    p.normal_prime = 3;
  } else if (name == "C4") {
    p.group = FiniteGroup::from_permutations("C4", 4, {{1, 2, 3, 0}});
    int r2 = first_element_of_order(p.group, 2);
    p.normal_subgroup = SubgroupHandle::generated(p.group, {r2});
    p.normal_prime = 2;
  } else if (name == "C2xC2") {
    p.group = FiniteGroup::from_permutations("C2xC2", 4, {{1, 0, 2, 3}, {0, 1, 3, 2}});
    p.normal_subgroup = SubgroupHandle::whole(p.group);
    p.normal_prime = 2;
  } else if (name == "S3") {
    p.group = FiniteGroup::from_permutations("S3", 3, {{1, 0, 2}, {1, 2, 0}});
    p.normal_subgroup =
        SubgroupHandle::normal_closure(p.group, first_element_of_order(p.group, 3));
    p.normal_prime = 3;
  } else if (name == "D4") {
    p.group = FiniteGroup::from_permutations("D4", 4, {{1, 2, 3, 0}, {0, 3, 2, 1}});
    p.normal_subgroup = SubgroupHandle::center(p.group);
    p.normal_prime = 2;
  } else if (name == "Q8") {
    p.group = make_q8();
    p.normal_subgroup = SubgroupHandle::center(p.group);
    p.normal_prime = 2;
  } else if (name == "C3:C4") {
    p.group = make_dic3();
    int a2 = first_element_of_order(p.group, 3);
    p.normal_subgroup = SubgroupHandle::normal_closure(p.group, a2);
    p.normal_prime = 3;
  } else if (name == "A4") {
    p.group = FiniteGroup::from_permutations("A4", 4, {{1, 0, 3, 2}, {1, 2, 0, 3}});
    p.normal_subgroup =
        SubgroupHandle::normal_closure(p.group, first_element_of_order(p.group, 2));
    p.normal_prime = 2;
  } else if (name == "D6") {
    p.group = FiniteGroup::from_permutations(
        "D6", 6, {{1, 2, 3, 4, 5, 0}, {0, 5, 4, 3, 2, 1}});
    p.normal_subgroup =
        SubgroupHandle::normal_closure(p.group, first_element_of_order(p.group, 3));
    p.normal_prime = 3;
  } else if (name == "S4") {
    p.group = FiniteGroup::from_permutations("S4", 4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
    // V4 = identity plus the double transpositions.
    int dt = -1;
    for (int i = 0; i < p.group->order(); ++i) {
      if (p.group->element_order(i) != 2) continue;
      if (static_cast<int>(
              p.group->conjugacy_classes()[p.group->class_of(i)].size()) == 3) {
        dt = i;
        break;
      }
    }
    p.normal_subgroup = SubgroupHandle::normal_closure(p.group, dt);
    p.normal_prime = 2;
  } else if (name == "SL(2,3)") {
    p.group = make_sl23();
    p.normal_subgroup =
        SubgroupHandle::normal_closure(p.group, first_element_of_order(p.group, 4));
    p.normal_prime = 2;
  } else {
    throw std::invalid_argument("unknown group preset: " + name);
  }
  return p;
}

GroupPtr group_from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  std::string name = j.value("name", "anonymous");
  if (j.contains("table")) {
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    if (j.contains("order") &&
        j.at("order").get<int>() != static_cast<int>(table.size()))
      throw std::invalid_argument("group file: order does not match table");
    return FiniteGroup::from_table(name, std::move(table));
  }
  if (j.contains("generators")) {
    int degree = j.at("degree").get<int>();
    auto gens = j.at("generators").get<std::vector<std::vector<int>>>();
    return FiniteGroup::from_permutations(name, degree, gens);
  }
  throw std::invalid_argument("group file: need \"table\" or \"generators\"");
}

}  // namespace grlab
