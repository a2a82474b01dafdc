#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "grlab/fp_poly.hpp"
#include "grlab/subalgebra.hpp"

namespace grlab {

// ---------------------------------------------------------------------------
// Fast F_p algebra (int64 coordinates). All decomposition decisions are made
// mod p and certified; Z/p^k data is produced by Hensel lifting afterwards.
// ---------------------------------------------------------------------------

struct FpVec : std::vector<std::int64_t> {
  using std::vector<std::int64_t>::vector;
};

/// Unital associative algebra over F_p presented by left-multiplication
/// structure matrices. "one" need not be the first basis vector (corners use
/// their own identity).
class FpAlgebra {
 public:
  FpAlgebra(std::int64_t p, std::vector<std::vector<std::int64_t>> left_mats,
            FpVec one);

  std::int64_t p() const { return p_; }
  int dim() const { return dim_; }
  const FpVec& one() const { return one_; }

  FpVec mul(const FpVec& x, const FpVec& y) const;
  std::vector<std::int64_t> left_matrix(const FpVec& x) const;   // dim x dim
  std::vector<std::int64_t> right_matrix(const FpVec& x) const;
  bool is_idempotent(const FpVec& e) const;
  FpVec scale(std::int64_t c, const FpVec& x) const;
  FpVec add(const FpVec& x, const FpVec& y) const;
  FpVec sub(const FpVec& x, const FpVec& y) const;
  bool is_zero(const FpVec& x) const;

  /// Minimal polynomial of x relative to the base idempotent e (e acts as
  /// x^0). x must satisfy e x e = x.
  FpPoly minimal_polynomial(const FpVec& x, const FpVec& base) const;
  /// q(x) with x^0 = base.
  FpVec eval_poly(const FpPoly& q, const FpVec& x, const FpVec& base) const;

 private:
  std::int64_t p_;
  int dim_;
  std::vector<std::vector<std::int64_t>> left_;  // left_[i]: dim*dim row-major
  FpVec one_;
};

// F_p dense linear algebra on int64 (row-major m x n).
struct FpEchelon {
  std::int64_t p;
  int cols;
  std::vector<std::vector<std::int64_t>> rows;  // reduced nonzero rows
  std::vector<int> pivot_cols;
  std::vector<std::vector<std::int64_t>> transform;  // per reduced row
  int source_rows = 0;
  std::vector<std::vector<std::int64_t>> kernel;     // relations among inputs

  int rank() const { return static_cast<int>(rows.size()); }
  bool contains(const std::vector<std::int64_t>& v) const;
  std::optional<std::vector<std::int64_t>> coordinates_in_source(
      const std::vector<std::int64_t>& v) const;
};
FpEchelon fp_echelon(std::int64_t p,
                     const std::vector<std::vector<std::int64_t>>& gens);

/// Characteristic polynomial of a dim x dim matrix over F_p (Hessenberg).
FpPoly fp_char_poly(std::int64_t p, const std::vector<std::int64_t>& m, int dim);

/// Jacobson radical of an F_p algebra: extended trace-form kernel chain in
/// characteristic p, certified afterwards (ideal + nilpotent + semisimple
/// quotient by fixpoint iteration).
std::vector<FpVec> fp_radical(const FpAlgebra& a);

/// Quotient of an F_p algebra by a (two-sided ideal) subspace.
struct FpQuotient {
  FpAlgebra alg;
  std::vector<FpVec> lift;  // quotient basis as parent vectors
  FpEchelon ideal_ech;      // for projection
  FpVec project(const FpVec& v) const;
};
FpQuotient fp_quotient(const FpAlgebra& parent, const std::vector<FpVec>& ideal);

/// Orthogonal primitive idempotent decomposition of 1 over F_p with block
/// labels (= conjugacy classes, one per Wedderburn block of A/J).
struct FpDecomposition {
  std::vector<FpVec> idempotents;
  std::vector<int> block;  // per idempotent
  int num_blocks = 0;
  std::vector<FpVec> radical;
  // Data of the semisimple quotient used for labeling.
  std::vector<FpVec> central_idempotents;  // in A/J coordinates
  std::shared_ptr<const FpQuotient> quotient;

  /// Block of an arbitrary primitive idempotent: the unique b with
  /// pi(e) z_b = pi(e) in A/J.
  int block_of(const FpAlgebra& a, const FpVec& e) const;
};
FpDecomposition fp_decompose(const FpAlgebra& a, std::uint64_t seed);

/// Local-ring primitivity certificate: eAe/(eAe cap J) is a (finite) division
/// algebra, i.e. commutative with a generator whose minimal polynomial is
/// irreducible of full degree.
bool fp_is_primitive(const FpAlgebra& a, const std::vector<FpVec>& radical,
                     const FpVec& e, std::uint64_t seed);

/// All solutions of e^2 = e by exhaustive enumeration; p^dim must be small.
/// Test oracle for the decomposition machinery.
std::vector<FpVec> fp_all_idempotents(const FpAlgebra& a, long limit = 1 << 20);

// ---------------------------------------------------------------------------
// Ring-generic algebra presentation (Z/p^k work: lifting, conjugacy).
// ---------------------------------------------------------------------------

/// Finite-dimensional unital algebra over a ScalarRing in explicit
/// coordinates, with an ambient embedding into RG kept alongside so results
/// convert back to group-ring elements.
class AlgebraPresentation {
 public:
  /// basis spans a free unital subalgebra of RG; identity must lie in it.
  AlgebraPresentation(Subalgebra basis);
  /// Corner subalgebra e A e with identity e (coords relative to *this).
  AlgebraPresentation corner(const Vec& e_coords) const;

  const Subalgebra& basis() const { return basis_; }
  const ScalarRing& ring() const { return basis_.ring(); }
  int dim() const { return basis_.dim(); }
  const Vec& one() const { return one_; }

  Vec mul(const Vec& x, const Vec& y) const;
  bool is_idempotent(const Vec& e) const;
  Mat left_matrix(const Vec& x) const;
  Mat right_matrix(const Vec& x) const;
  /// x is a unit of the algebra iff its left-multiplication matrix is
  /// invertible (checked mod p for modular rings).
  bool is_unit(const Vec& x) const;
  std::optional<Vec> invert(const Vec& x) const;

  GroupRingElement to_ambient(const Vec& coords) const;
  std::optional<Vec> coords_of(const GroupRingElement& a) const;

  /// Same basis over F_p (int64). Requires the basis be independent mod p.
  FpAlgebra mod_p() const;
  FpVec reduce_vec(const Vec& v) const;
  Vec lift_vec(const FpVec& v) const;  // entrywise integer lift

 private:
  Subalgebra basis_;
  Vec one_;
  std::vector<Mat> left_;  // structure matrices
};

/// e' = 3e^2 - 2e^3 iterated to an exact idempotent (quadratic convergence;
/// works both mod p^k and through a nilpotent ideal). Throws if it fails to
/// stabilize.
Vec hensel_idempotent(const AlgebraPresentation& a, Vec e);

/// Lift an orthogonal decomposition from mod p to the ring of a (Z/p^k):
/// entrywise lift, Hensel, then sequential orthogonal correction
/// e_i <- (s) e_i (s) with s = one - sum of the already fixed idempotents,
/// re-Henselized. The result sums to the identity exactly.
std::vector<Vec> lift_orthogonal_decomposition(const AlgebraPresentation& a,
                                               const std::vector<FpVec>& mod_p);

enum class ConjugacyStatus { Found, CertifiedDistinct, Inconclusive };
struct ConjugacyResult {
  ConjugacyStatus status;
  std::optional<Vec> unit;  // algebra coords, when Found
  long tested = 0;
};
/// Search for an algebra unit u with e^u = f: solve e u = u f, then scan the
/// solution module for units (seeded samples, then an exhaustive mod-p scan
/// when the reduced solution space is small enough to certify absence).
ConjugacyResult conjugate_idempotents(const AlgebraPresentation& a, const Vec& e,
                                      const Vec& f, std::uint64_t seed,
                                      long budget = 10000);

// ---------------------------------------------------------------------------
// Group-ring level decompositions (spec-facing records).
// ---------------------------------------------------------------------------

struct IdempotentDecomposition {
  AlgebraPresentation algebra;
  std::vector<GroupRingElement> idempotents;  // orthogonal, primitive, sum 1
  std::vector<int> block;                     // conjugacy class per idempotent
  std::vector<int> class_reps;                // idempotent index per class
  std::vector<int> multiplicities;            // class sizes
  int classes() const { return static_cast<int>(class_reps.size()); }
};

struct DecomposeOptions {
  std::uint64_t seed = 0;
  bool use_cache = true;
  std::string cache_tag;  // distinguishes subalgebras of the same (G, p, k)
};

/// Decompose 1 in the given free unital subalgebra of RG over Z/p^k:
/// mod-p decomposition, Hensel lift, orthogonalization, canonical class
/// order, full invariant verification. Results are cached on disk keyed by
/// (group, p, k, tag) under GRLAB_CACHE_DIR (default ./.grlab-cache).
IdempotentDecomposition decompose_unity(const Subalgebra& algebra,
                                        const DecomposeOptions& opts = {});

/// Decomposition of the full group ring RG.
IdempotentDecomposition decompose_group_ring(const GroupPtr& g,
                                             const ScalarRing& ring,
                                             const DecomposeOptions& opts = {});

/// Lemma 4.1 data: H = C_G(x), A = (RG)^<x>, T = Tr(RG); primitive class
/// representatives e_i of RH and f_j of A, the partition of A's classes into
/// those matched with RH classes (i <= r) and those inside T (i > r), and
/// the witnesses e_i = f_i + eps_i with eps_i in T orthogonal to f_i.
struct CorrespondenceAT {
  GroupElement x;
  std::int64_t p;
  SubgroupGroup h;
  Subalgebra a;  // (RG)^<x>
  Subalgebra t;  // trace ideal

  IdempotentDecomposition rh;  // decomposition of RH, embedded into RG

  // Full orthogonal primitive decomposition of 1 in A (refines the RH one),
  // with A-block labels.
  std::vector<GroupRingElement> a_idempotents;
  std::vector<int> a_block;

  int r = 0, s = 0;
  std::vector<GroupRingElement> e_reps;    // size r (RH class reps in RG)
  std::vector<GroupRingElement> f_reps;    // size s; first r match e_reps
  std::vector<GroupRingElement> eps;       // size r; e_i = f_i + eps_i
  std::vector<Vec> eps_t_coords;           // membership witnesses in T
  std::vector<std::optional<Vec>> f_t_coords;  // T coords of f_reps (i >= r)
};

CorrespondenceAT correspondence_at(const GroupElement& x, std::int64_t p, int k,
                                   const DecomposeOptions& opts = {});

/// GroupRingElement-level conjugacy search inside a subalgebra presentation.
ConjugacyResult are_conjugate(const AlgebraPresentation& a,
                              const GroupRingElement& e,
                              const GroupRingElement& f, std::uint64_t seed,
                              long budget = 10000);

}  // namespace grlab
