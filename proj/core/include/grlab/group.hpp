#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace grlab {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Finite group stored as a dense multiplication table of element indices.
/// Immutable after construction; conjugacy classes, inverses and element
/// orders are precomputed. Classes are ordered by minimal element index and
/// sorted internally, so all derived data is reproducible.
class FiniteGroup : public std::enable_shared_from_this<FiniteGroup> {
 public:
  /// Validates the table: Latin square, two-sided identity, associativity
  /// (exhaustive for order <= 64, seeded sampling above).
  static GroupPtr from_table(std::string name,
                             std::vector<std::vector<int>> table,
                             std::vector<std::string> labels = {});

  /// Closure of permutation generators (images of 0..degree-1) by
  /// breadth-first products. Throws if the closure exceeds max_order.
  static GroupPtr from_permutations(std::string name, int degree,
                                    const std::vector<std::vector<int>>& gens,
                                    int max_order = 1024);

  const std::string& name() const { return name_; }
  int order() const { return order_; }
  int identity() const { return identity_; }

  int mul(int g, int h) const { return table_[static_cast<size_t>(g) * order_ + h]; }
  int inv(int g) const { return inverse_[g]; }
  int conj(int g, int h) const { return mul(mul(inv(h), g), h); }  // h^-1 g h
  int power(int g, long e) const;
  int element_order(int g) const { return elem_order_[g]; }

  int class_count() const { return static_cast<int>(classes_.size()); }
  const std::vector<std::vector<int>>& conjugacy_classes() const { return classes_; }
  int class_of(int g) const { return class_of_[g]; }

  const std::string& label(int g) const { return labels_[g]; }

  bool is_abelian() const;
  std::vector<int> center_elements() const;

 private:
  FiniteGroup() = default;
  void finalize();  // inverses, orders, classes

  std::string name_;
  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;  // row-major
  std::vector<int> inverse_;
  std::vector<int> elem_order_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
  std::vector<std::string> labels_;
};

/// Element of a FiniteGroup, carried with its parent for API-level safety.
struct GroupElement {
  GroupPtr group;
  int index = 0;
};

/// Subset of element indices closed under product and inverse.
class SubgroupHandle {
 public:
  /// Validates closure and identity membership; determines normality.
  SubgroupHandle(GroupPtr group, std::vector<int> elements);

  /// Subgroup generated by the given elements.
  static SubgroupHandle generated(const GroupPtr& group,
                                  const std::vector<int>& gens);
  static SubgroupHandle whole(const GroupPtr& group);
  static SubgroupHandle trivial(const GroupPtr& group);
  /// Smallest normal subgroup containing g (closure of its conjugacy class).
  static SubgroupHandle normal_closure(const GroupPtr& group, int g);
  static SubgroupHandle center(const GroupPtr& group);

  const GroupPtr& group() const { return group_; }
  const std::vector<int>& elements() const { return elems_; }  // sorted
  int order() const { return static_cast<int>(elems_.size()); }
  bool is_normal() const { return normal_; }
  bool contains(int g) const;
  bool contains_subgroup(const SubgroupHandle& k) const;

 private:
  GroupPtr group_;
  std::vector<int> elems_;
  bool normal_ = false;
};

// ---- operations -----------------------------------------------------------

SubgroupHandle centralizer(const GroupPtr& g, int elem);

/// g = g_p * g_p' with g_p of p-power order, g_p' of order coprime to p,
/// both powers of g (exponent CRT).
std::pair<GroupElement, GroupElement> p_decomposition(const GroupElement& g,
                                                      std::int64_t p);

/// Right coset representatives of K in H (K <= H required); the first
/// representative is the identity.
std::vector<int> right_transversal(const SubgroupHandle& k,
                                   const SubgroupHandle& h);

struct Quotient {
  GroupPtr group;
  std::vector<int> projection;  // element index -> coset index
};
Quotient quotient_group(const GroupPtr& g, const SubgroupHandle& n);

/// The subgroup as a group in its own right, with index translation maps.
struct SubgroupGroup {
  GroupPtr group;
  std::vector<int> to_parent;    // subgroup index -> parent index
  std::vector<int> from_parent;  // parent index -> subgroup index or -1
};
SubgroupGroup subgroup_group(const SubgroupHandle& h);

/// Indices of conjugacy classes whose elements have order coprime to p.
std::vector<int> p_regular_classes(const GroupPtr& g, std::int64_t p);

// ---- presets ----------------------------------------------------------------

struct Preset {
  GroupPtr group;
  /// Designated normal p-subgroup for Theorem-2 style instances, if any.
  std::optional<SubgroupHandle> normal_subgroup;
  std::int64_t normal_prime = 0;
};

std::vector<std::string> preset_names();
Preset preset_group(const std::string& name);

/// Parse {"name":..,"order":..,"table":[[..]]} or
/// {"name":..,"degree":..,"generators":[[..]]} from JSON text.
GroupPtr group_from_json(const std::string& json_text);

}  // namespace grlab
