#include "grlab/subalgebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace grlab {

Subalgebra::Subalgebra(GroupPtr group, ScalarRing ring,
                       const std::vector<GroupRingElement>& generators,
                       bool check_closure)
    : group_(std::move(group)), ring_(std::move(ring)) {
  std::vector<Vec> rows;
  for (const auto& g : generators) {
    if (g.group() != group_ || g.ring() != ring_)
      throw std::invalid_argument("Subalgebra: generator over wrong (G, R)");
    rows.push_back(g.coeffs());
  }
  Echelon raw(Mat::from_rows(ring_, rows), /*track_transform=*/false);
  std::vector<Vec> canonical = raw.basis();
  for (const auto& row : canonical) basis_.emplace_back(group_, ring_, row);
  ech_.emplace(Mat::from_rows(ring_, canonical), /*track_transform=*/true);
  for (const auto& p : ech_->pivots()) pivot_vals_.push_back(p.val);
  std::sort(pivot_vals_.begin(), pivot_vals_.end());
  unit_rank_ = ech_->unit_rank();
  unital_ = contains_element(GroupRingElement::one(group_, ring_));
  if (check_closure && !is_closed_under_multiplication())
    throw std::invalid_argument("Subalgebra: span not closed under product");
}

bool Subalgebra::contains_element(const GroupRingElement& a) const {
  return ech_->contains(a.coeffs());
}

std::optional<Vec> Subalgebra::contains(const GroupRingElement& a) const {
  if (a.group() != group_ || a.ring() != ring_)
    throw std::invalid_argument("Subalgebra::contains: wrong (G, R)");
  return ech_->coordinates(a.coeffs());
}

GroupRingElement Subalgebra::from_coords(const Vec& coords) const {
  if (coords.size() != basis_.size())
    throw std::invalid_argument("from_coords: wrong length");
  Vec out(group_->order(), Scalar(0));
  for (size_t i = 0; i < coords.size(); ++i)
    for (int j = 0; j < group_->order(); ++j)
      out[j] = ring_.add(out[j], ring_.mul(coords[i], basis_[i].coeff(j)));
  return GroupRingElement(group_, ring_, std::move(out));
}

bool Subalgebra::is_closed_under_multiplication() const {
  for (const auto& a : basis_)
    for (const auto& b : basis_)
      if (!contains_element(a * b)) return false;
  return true;
}

bool Subalgebra::is_ideal_of(const Subalgebra& ambient) const {
  for (const auto& t : basis_) {
    if (!ambient.contains_element(t)) return false;
    for (const auto& a : ambient.basis())
      if (!contains_element(a * t) || !contains_element(t * a)) return false;
  }
  return true;
}

long Subalgebra::module_length() const {
  if (!ring_.modular())
    throw std::logic_error("module_length: modular rings only");
  long len = 0;
  for (int v : pivot_vals_) len += ring_.precision() - v;
  return len;
}

Subalgebra fixed_point_subring(const GroupRingElement& u) {
  const auto& G = u.group();
  const auto& R = u.ring();
  // um = mu <=> (L_u - R_u) m = 0.
  Mat lu = u.left_mult_matrix();
  Mat ru = u.right_mult_matrix();
  Mat d(R, G->order(), G->order());
  for (int i = 0; i < G->order(); ++i)
    for (int j = 0; j < G->order(); ++j)
      d.at(i, j) = R.sub(lu.at(i, j), ru.at(i, j));
  std::vector<GroupRingElement> gens;
  for (auto& v : kernel(d)) gens.emplace_back(G, R, v);
  Subalgebra s(G, R, gens, /*check_closure=*/true);
  if (!s.is_free())
    throw std::domain_error(
        "fixed_point_subring: solution module is not free over Z/p^k");
  if (!s.is_unital())
    throw std::logic_error("fixed_point_subring: 1 missing from fixed points");
  return s;
}

GroupRingElement relative_trace(const GroupRingElement& a, const GroupElement& x,
                                std::int64_t p) {
  const auto& G = a.group();
  if (x.group != G) throw std::invalid_argument("relative_trace: wrong group");
  long ox = G->element_order(x.index);
  if (ox == 1) throw std::invalid_argument("relative_trace: x must be nontrivial");
  long q = ox;
  while (q % p == 0) q /= p;
  if (q != 1)
    throw std::invalid_argument("relative_trace: order of x is not a p-power");
  int xp = G->power(x.index, p);
  if (a.conjugated_by(xp) != a)
    throw std::invalid_argument("relative_trace: a is not fixed by x^p");
  GroupRingElement out = GroupRingElement::zero(G, a.ring());
  int xi = G->identity();
  for (long i = 0; i < p; ++i) {
    out = out + a.conjugated_by(xi);
    xi = G->mul(xi, x.index);
  }
  return out;
}

Subalgebra trace_ideal(const GroupElement& x, std::int64_t p,
                       const ScalarRing& ring) {
  const auto& G = x.group;
  long ox = G->element_order(x.index);
  if (ox == 1) throw std::invalid_argument("trace_ideal: x must be nontrivial");
  long q = ox;
  while (q % p == 0) q /= p;
  if (q != 1) throw std::invalid_argument("trace_ideal: x is not a p-element");
  int xp = G->power(x.index, p);
  auto fixed_xp =
      fixed_point_subring(GroupRingElement::basis(G, ring, xp));
  std::vector<GroupRingElement> traces;
  for (const auto& b : fixed_xp.basis())
    traces.push_back(relative_trace(b, x, p));
  // T is only a linear span plus the ideal property; products of two
  // T elements stay in T via the ideal check, so skip the closure pass.
  Subalgebra t(G, ring, traces, /*check_closure=*/false);
  auto a = fixed_point_subring(GroupRingElement::basis(G, ring, x.index));
  if (!t.is_ideal_of(a))
    throw std::logic_error("trace_ideal: image is not an ideal of (RG)^<x>");
  return t;
}

}  // namespace grlab
