#pragma once

#include <optional>
#include <vector>

#include "grlab/scalar.hpp"

namespace grlab {

using Vec = std::vector<Scalar>;

/// Dense matrix over a ScalarRing.
class Mat {
 public:
  Mat(ScalarRing ring, int rows, int cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols),
        a_(static_cast<size_t>(rows) * cols, Scalar(0)) {}

  static Mat identity(const ScalarRing& ring, int n);
  static Mat from_rows(const ScalarRing& ring, const std::vector<Vec>& rows);

  const ScalarRing& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  Vec row(int i) const;
  void set_row(int i, const Vec& v);

  Mat transposed() const;
  Mat mul(const Mat& other) const;
  Vec apply(const Vec& v) const;  // matrix * column vector

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  ScalarRing ring_;
  int rows_, cols_;
  std::vector<Scalar> a_;
};

struct Pivot {
  int row;  // row index in the reduced matrix
  int col;
  int val;  // p-valuation of the pivot entry (0 over a field)
};

/// Row echelon form of a list of generators, with pivots chosen by minimal
/// p-valuation (unit pivots first). Over Q and F_p this is plain reduced
/// row echelon; over Z/p^k pivot entries are normalized to p^a and every
/// other entry of a pivot column is cleared exactly (entries of smaller
/// valuation cannot occur below by the selection order) or reduced mod p^a
/// above. Row operations are unimodular, so the row span is preserved and
/// membership can be decided greedily against the pivots in order.
class Echelon {
 public:
  /// Reduce the rows of gens. When track_transform, transform() satisfies
  /// reduced_row[i] = sum_j transform[i][j] * gens_row[j].
  explicit Echelon(const Mat& gens, bool track_transform = true);

  const ScalarRing& ring() const { return reduced_.ring(); }
  const Mat& reduced() const { return reduced_; }
  const Mat& transform() const { return *transform_; }
  const std::vector<Pivot>& pivots() const { return pivots_; }
  int source_rows() const { return source_rows_; }

  int rank() const { return static_cast<int>(pivots_.size()); }
  /// Number of unit pivots; over Z/p^k this is the rank of the mod-p
  /// reduction of the span.
  int unit_rank() const;
  bool is_free() const { return unit_rank() == rank(); }

  /// Greedy residue of v against the pivot rows. Zero residue iff v lies in
  /// the row span.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;

  /// Coordinates of v in terms of the ORIGINAL generator rows, if v lies in
  /// the span (requires transform tracking).
  std::optional<Vec> coordinates(const Vec& v) const;

  /// Generators of {c : sum_i c_i * gens_row[i] = 0}. Over Z/p^k this
  /// includes torsion relations p^(k-a) * (transform row) for every pivot of
  /// valuation a > 0. Requires transform tracking.
  std::vector<Vec> kernel() const;

  /// The reduced nonzero rows, as vectors (a canonical generating set).
  std::vector<Vec> basis() const;

 private:
  Mat reduced_;
  std::optional<Mat> transform_;
  std::vector<Pivot> pivots_;
  int source_rows_;
};

/// Solve A x = b over the ring of A. Returns one solution; the full solution
/// set is x + the kernel of A.
std::optional<Vec> solve(const Mat& a, const Vec& b);

/// Generators of {x : A x = 0} (includes torsion generators over Z/p^k).
std::vector<Vec> kernel(const Mat& a);

/// Intersection of the spans of two generator lists (row vectors).
std::vector<Vec> span_intersection(const ScalarRing& ring,
                                   const std::vector<Vec>& u,
                                   const std::vector<Vec>& w);

Vec vec_add(const ScalarRing& r, const Vec& a, const Vec& b);
Vec vec_sub(const ScalarRing& r, const Vec& a, const Vec& b);
Vec vec_scale(const ScalarRing& r, const Scalar& c, const Vec& a);
bool vec_is_zero(const ScalarRing& r, const Vec& a);

}  // namespace grlab
