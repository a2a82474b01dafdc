#include "grlab/group_ring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace grlab {

GroupRingElement::GroupRingElement(GroupPtr group, ScalarRing ring)
    : group_(std::move(group)), ring_(std::move(ring)),
      coeffs_(group_->order(), Scalar(0)) {}

GroupRingElement::GroupRingElement(GroupPtr group, ScalarRing ring, Vec coeffs)
    : group_(std::move(group)), ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != group_->order())
    throw std::invalid_argument("GroupRingElement: coefficient length != |G|");
  for (auto& c : coeffs_) c = ring_.canon(c);
}

GroupRingElement GroupRingElement::zero(const GroupPtr& g, const ScalarRing& r) {
  return GroupRingElement(g, r);
}

GroupRingElement GroupRingElement::one(const GroupPtr& g, const ScalarRing& r) {
  return basis(g, r, g->identity());
}

GroupRingElement GroupRingElement::basis(const GroupPtr& g, const ScalarRing& r,
                                         int elem) {
  if (elem < 0 || elem >= g->order())
    throw std::invalid_argument("basis element index out of range");
  GroupRingElement a(g, r);
  a.coeffs_[elem] = r.one();
  return a;
}

GroupRingElement GroupRingElement::subgroup_sum_of_powers(const GroupPtr& g,
                                                          const ScalarRing& r,
                                                          int h) {
  GroupRingElement a(g, r);
  int x = g->identity();
  do {
    a.coeffs_[x] = r.add(a.coeffs_[x], r.one());
    x = g->mul(x, h);
  } while (x != g->identity());
  return a;
}

bool GroupRingElement::is_zero() const { return vec_is_zero(ring_, coeffs_); }

bool GroupRingElement::operator==(const GroupRingElement& o) const {
  return group_ == o.group_ && ring_ == o.ring_ && coeffs_ == o.coeffs_;
}

void GroupRingElement::check_compatible(const GroupRingElement& o) const {
  if (group_ != o.group_ || ring_ != o.ring_)
    throw std::invalid_argument("group ring elements over different (G, R)");
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  check_compatible(o);
  return GroupRingElement(group_, ring_, vec_add(ring_, coeffs_, o.coeffs_));
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
  check_compatible(o);
  return GroupRingElement(group_, ring_, vec_sub(ring_, coeffs_, o.coeffs_));
}

GroupRingElement GroupRingElement::operator-() const {
  return GroupRingElement(group_, ring_, vec_scale(ring_, Scalar(-1), coeffs_));
}

GroupRingElement GroupRingElement::scaled(const Scalar& c) const {
  return GroupRingElement(group_, ring_, vec_scale(ring_, c, coeffs_));
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
  check_compatible(o);
  const int n = group_->order();
  Vec out(n, Scalar(0));
  for (int g = 0; g < n; ++g) {
    if (ring_.is_zero(coeffs_[g])) continue;
    for (int h = 0; h < n; ++h) {
      if (ring_.is_zero(o.coeffs_[h])) continue;
      int w = group_->mul(g, h);
      out[w] += coeffs_[g] * o.coeffs_[h];
    }
  }
  return GroupRingElement(group_, ring_, std::move(out));
}

GroupRingElement GroupRingElement::pow(long e) const {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  GroupRingElement acc = one(group_, ring_), base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    if (e >>= 1) base = base * base;
  }
  return acc;
}

GroupRingElement GroupRingElement::conjugated_by(int g) const {
  const int n = group_->order();
  Vec out(n, Scalar(0));
  for (int x = 0; x < n; ++x)
    if (!ring_.is_zero(coeffs_[x])) out[group_->conj(x, g)] = coeffs_[x];
  return GroupRingElement(group_, ring_, std::move(out));
}

Mat GroupRingElement::left_mult_matrix() const {
  const int n = group_->order();
  Mat m(ring_, n, n);
  // column h: coefficients of a * h
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      m.at(group_->mul(g, h), h) = coeffs_[g];
  return m;
}

Mat GroupRingElement::right_mult_matrix() const {
  const int n = group_->order();
  Mat m(ring_, n, n);
  // column h: coefficients of h * a
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      m.at(group_->mul(h, g), h) = coeffs_[g];
  return m;
}

GroupRingElement GroupRingElement::convert_to(const ScalarRing& target) const {
  Vec out(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i)
    out[i] = target.convert_from(ring_, coeffs_[i]);
  return GroupRingElement(group_, target, std::move(out));
}

std::string GroupRingElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int g = 0; g < group_->order(); ++g) {
    if (ring_.is_zero(coeffs_[g])) continue;
    Scalar c = coeffs_[g];
    if (first) {
      if (sgn(c) < 0) { os << "-"; c = -c; }
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    }
    os << ScalarRing::to_string(c) << "*(" << g << ")";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

GroupRingElement star(const GroupRingElement& a) {
  const auto& G = a.group();
  Vec out(G->order());
  for (int g = 0; g < G->order(); ++g) out[g] = a.coeff(G->inv(g));
  return GroupRingElement(G, a.ring(), std::move(out));
}

Scalar augmentation(const GroupRingElement& a) {
  Scalar s(0);
  for (const auto& c : a.coeffs()) s += c;
  return a.ring().canon(s);
}

PartialAugmentationVector partial_augmentations(const GroupRingElement& a) {
  const auto& G = a.group();
  const auto& classes = G->conjugacy_classes();
  Vec vals(classes.size(), Scalar(0));
  for (int g = 0; g < G->order(); ++g)
    vals[G->class_of(g)] += a.coeff(g);
  for (auto& v : vals) v = a.ring().canon(v);
  return {G, std::move(vals)};
}

bool in_commutator_space(const GroupRingElement& a) {
  auto pa = partial_augmentations(a);
  return vec_is_zero(a.ring(), pa.values);
}

std::vector<int> support(const GroupRingElement& a) {
  std::vector<int> s;
  for (int g = 0; g < a.group()->order(); ++g)
    if (!a.ring().is_zero(a.coeff(g))) s.push_back(g);
  return s;
}

std::optional<GroupRingElement> try_invert(const GroupRingElement& a) {
  const auto& G = a.group();
  const auto& R = a.ring();
  Vec e1(G->order(), Scalar(0));
  e1[G->identity()] = R.one();
  auto x = solve(a.left_mult_matrix(), e1);
  if (!x) return std::nullopt;
  GroupRingElement b(G, R, *x);
  // One-sided inverses are two-sided in a finite-dimensional algebra, but
  // the check is cheap.
  if (!((b * a) == GroupRingElement::one(G, R))) return std::nullopt;
  return b;
}

bool is_unit(const GroupRingElement& a) { return try_invert(a).has_value(); }

GroupRingElement quotient_image(const GroupRingElement& a, const Quotient& q) {
  Vec out(q.group->order(), Scalar(0));
  for (int g = 0; g < a.group()->order(); ++g)
    out[q.projection[g]] += a.coeff(g);
  return GroupRingElement(q.group, a.ring(), std::move(out));
}

GroupRingElement quotient_image(const GroupRingElement& a,
                                const SubgroupHandle& n) {
  return quotient_image(a, quotient_group(a.group(), n));
}

std::optional<long> unit_order(const GroupRingElement& u, long bound) {
  const auto& G = u.group();
  if (bound <= 0) bound = static_cast<long>(G->order()) * G->order();
  auto one = GroupRingElement::one(G, u.ring());
  GroupRingElement acc = u;
  for (long n = 1; n <= bound; ++n) {
    if (acc == one) return n;
    acc = acc * u;
  }
  return std::nullopt;
}

GroupRingElement parse_element(const GroupPtr& g, const ScalarRing& r,
                               const std::string& text) {
  GroupRingElement out = GroupRingElement::zero(g, r);
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  size_t i = 0;
  bool any = false;
  while (i < s.size()) {
    int sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    std::string coeff;
    while (i < s.size() && s[i] != '*' && s[i] != '(') coeff += s[i++];
    if (i < s.size() && s[i] == '*') ++i;
    if (i >= s.size() || s[i] != '(')
      throw std::invalid_argument("element literal: expected '(index)'");
    ++i;
    std::string idx;
    while (i < s.size() && s[i] != ')') idx += s[i++];
    if (i >= s.size()) throw std::invalid_argument("element literal: missing ')'");
    ++i;
    int elem = std::stoi(idx);
    if (elem < 0 || elem >= g->order())
      throw std::invalid_argument("element literal: index out of range");
    Scalar c = coeff.empty() ? r.one() : r.parse(coeff);
    if (sign < 0) c = -c;
    out = out + GroupRingElement::basis(g, r, elem).scaled(c);
    any = true;
  }
  if (!any) throw std::invalid_argument("element literal: empty");
  return out;
}

GroupRingElement embed_from_subgroup(const GroupPtr& g, const SubgroupGroup& h,
                                     const GroupRingElement& a) {
  if (a.group() != h.group)
    throw std::invalid_argument("embed: element not over the subgroup");
  Vec out(g->order(), Scalar(0));
  for (int i = 0; i < h.group->order(); ++i) out[h.to_parent[i]] = a.coeff(i);
  return GroupRingElement(g, a.ring(), std::move(out));
}

GroupRingElement restrict_to_subgroup(const SubgroupGroup& h,
                                      const GroupRingElement& a) {
  Vec out(h.group->order(), Scalar(0));
  for (int g = 0; g < a.group()->order(); ++g) {
    if (a.ring().is_zero(a.coeff(g))) continue;
    if (h.from_parent[g] < 0)
      throw std::invalid_argument("restrict: support leaves the subgroup");
    out[h.from_parent[g]] = a.coeff(g);
  }
  return GroupRingElement(h.group, a.ring(), std::move(out));
}

}  // namespace grlab
