#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grlab/group.hpp"
#include "grlab/linalg.hpp"
#include "grlab/scalar.hpp"

namespace grlab {

/// Element of RG as a dense coefficient vector indexed by group elements.
/// Immutable value semantics; all arithmetic returns fresh elements with
/// canonical coefficients.
class GroupRingElement {
 public:
  GroupRingElement(GroupPtr group, ScalarRing ring);
  GroupRingElement(GroupPtr group, ScalarRing ring, Vec coeffs);

  static GroupRingElement zero(const GroupPtr& g, const ScalarRing& r);
  static GroupRingElement one(const GroupPtr& g, const ScalarRing& r);
  static GroupRingElement basis(const GroupPtr& g, const ScalarRing& r, int elem);
  /// Sum of all powers of h (the "hat" element).
  static GroupRingElement subgroup_sum_of_powers(const GroupPtr& g,
                                                 const ScalarRing& r, int h);

  const GroupPtr& group() const { return group_; }
  const ScalarRing& ring() const { return ring_; }
  const Vec& coeffs() const { return coeffs_; }
  const Scalar& coeff(int g) const { return coeffs_[g]; }

  bool is_zero() const;
  bool operator==(const GroupRingElement& o) const;
  bool operator!=(const GroupRingElement& o) const { return !(*this == o); }

  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement operator-(const GroupRingElement& o) const;
  GroupRingElement operator*(const GroupRingElement& o) const;  // convolution
  GroupRingElement operator-() const;
  GroupRingElement scaled(const Scalar& c) const;
  GroupRingElement pow(long e) const;  // e >= 0

  /// Conjugate by a group element: g^-1 * a * g.
  GroupRingElement conjugated_by(int g) const;

  /// Left/right multiplication matrices of the regular representation.
  Mat left_mult_matrix() const;
  Mat right_mult_matrix() const;

  GroupRingElement convert_to(const ScalarRing& target) const;

  std::string to_string() const;  // literal syntax, e.g. "3*(0) - 1/2*(4)"

 private:
  void check_compatible(const GroupRingElement& o) const;

  GroupPtr group_;
  ScalarRing ring_;
  Vec coeffs_;
};

/// Class-indexed sums of coefficients, in the group's canonical class order.
struct PartialAugmentationVector {
  GroupPtr group;
  Vec values;
};

GroupRingElement star(const GroupRingElement& a);
Scalar augmentation(const GroupRingElement& a);
PartialAugmentationVector partial_augmentations(const GroupRingElement& a);
bool in_commutator_space(const GroupRingElement& a);
std::vector<int> support(const GroupRingElement& a);

/// Inverse via the regular representation, if a is a unit.
std::optional<GroupRingElement> try_invert(const GroupRingElement& a);
bool is_unit(const GroupRingElement& a);

/// Image in R[G/N]; coefficient of a coset is the sum over the coset.
GroupRingElement quotient_image(const GroupRingElement& a, const Quotient& q);
GroupRingElement quotient_image(const GroupRingElement& a, const SubgroupHandle& n);

/// Least n <= bound with u^n = 1, if any.
std::optional<long> unit_order(const GroupRingElement& u, long bound = 0);

/// Parse "3*(0) + 1*(4) - 2/5*(5)" (indices in parentheses).
GroupRingElement parse_element(const GroupPtr& g, const ScalarRing& r,
                               const std::string& text);

/// Zero-extension of an element of R[H] (H given as a SubgroupGroup) to RG.
GroupRingElement embed_from_subgroup(const GroupPtr& g, const SubgroupGroup& h,
                                     const GroupRingElement& a);
/// Restriction along the embedding; requires support inside H.
GroupRingElement restrict_to_subgroup(const SubgroupGroup& h,
                                      const GroupRingElement& a);

}  // namespace grlab
