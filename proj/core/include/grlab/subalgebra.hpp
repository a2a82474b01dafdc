#pragma once

#include <optional>
#include <vector>

#include "grlab/group_ring.hpp"

namespace grlab {

/// A linear subspace of RG given by canonical (echelonized) generators,
/// optionally verified to be closed under multiplication. Over Z/p^k the
/// generators may carry p-power pivots (the trace ideal T is not a free
/// module); unit_rank() counts the mod-p-independent ones.
class Subalgebra {
 public:
  /// Echelonizes the generators; checks multiplicative closure when asked.
  Subalgebra(GroupPtr group, ScalarRing ring,
             const std::vector<GroupRingElement>& generators,
             bool check_closure = true);

  const GroupPtr& group() const { return group_; }
  const ScalarRing& ring() const { return ring_; }
  const std::vector<GroupRingElement>& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int unit_rank() const { return unit_rank_; }
  bool is_free() const { return unit_rank_ == dim(); }
  bool is_unital() const { return unital_; }
  const std::vector<int>& pivot_valuations() const { return pivot_vals_; }

  bool contains_element(const GroupRingElement& a) const;
  /// Coordinates of a in basis(), if representable over the ring.
  std::optional<Vec> contains(const GroupRingElement& a) const;

  GroupRingElement from_coords(const Vec& coords) const;

  bool is_closed_under_multiplication() const;
  /// T is an ideal of A: both products of any T generator with any
  /// A generator land back in T.
  bool is_ideal_of(const Subalgebra& ambient) const;

  /// log_p of the submodule size: sum over pivots of (k - val).
  long module_length() const;

 private:
  GroupPtr group_;
  ScalarRing ring_;
  std::vector<GroupRingElement> basis_;
  std::optional<Echelon> ech_;
  std::vector<int> pivot_vals_;
  int unit_rank_ = 0;
  bool unital_ = false;
};

/// Fixed points of conjugation by the unit u: {m : um = mu}. The result is
/// a unital subring of RG. Throws if the solution module is not free
/// (cannot happen for u conjugate to a group element).
Subalgebra fixed_point_subring(const GroupRingElement& u);

/// Tr over the transversal {x^i, 0 <= i < p} of <x^p> in <x>:
/// a must commute with x^p; the result commutes with x.
GroupRingElement relative_trace(const GroupRingElement& a, const GroupElement& x,
                                std::int64_t p);

/// T = Tr(RG^<x^p>) as a subspace of A = RG^<x>; verified to be an ideal.
Subalgebra trace_ideal(const GroupElement& x, std::int64_t p,
                       const ScalarRing& ring);

}  // namespace grlab
