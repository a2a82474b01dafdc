#include "grlab/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace grlab {

Mat Mat::identity(const ScalarRing& ring, int n) {
  Mat m(ring, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = ring.one();
  return m;
}

Mat Mat::from_rows(const ScalarRing& ring, const std::vector<Vec>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Mat m(ring, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("Mat::from_rows: ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = ring.canon(rows[i][j]);
  }
  return m;
}

Vec Mat::row(int i) const {
  Vec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void Mat::set_row(int i, const Vec& v) {
  for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Mat Mat::transposed() const {
  Mat t(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::mul(const Mat& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("Mat::mul: shape");
  Mat r(ring_, rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (ring_.is_zero(at(i, k))) continue;
      for (int j = 0; j < other.cols_; ++j)
        r.at(i, j) += at(i, k) * other.at(k, j);
    }
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < other.cols_; ++j) r.at(i, j) = ring_.canon(r.at(i, j));
  return r;
}

Vec Mat::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("Mat::apply: shape");
  Vec r(rows_, Scalar(0));
  for (int i = 0; i < rows_; ++i) {
    Scalar acc(0);
    for (int j = 0; j < cols_; ++j)
      if (!ring_.is_zero(at(i, j))) acc += at(i, j) * v[j];
    r[i] = ring_.canon(acc);
  }
  return r;
}

Echelon::Echelon(const Mat& gens, bool track_transform)
    : reduced_(gens), source_rows_(gens.rows()) {
  const ScalarRing& R = reduced_.ring();
  if (track_transform) transform_ = Mat::identity(R, gens.rows());

  const int nrows = reduced_.rows(), ncols = reduced_.cols();
  std::vector<bool> is_pivot_row(nrows, false);
  std::vector<bool> is_pivot_col(ncols, false);

  auto row_op_sub = [&](int dst, const Scalar& q, int src) {
    // row[dst] -= q * row[src]
    if (R.is_zero(q)) return;
    for (int j = 0; j < ncols; ++j)
      reduced_.at(dst, j) = R.sub(reduced_.at(dst, j), R.mul(q, reduced_.at(src, j)));
    if (transform_)
      for (int j = 0; j < source_rows_; ++j)
        transform_->at(dst, j) =
            R.sub(transform_->at(dst, j), R.mul(q, transform_->at(src, j)));
  };
  auto row_scale = [&](int i, const Scalar& u) {
    for (int j = 0; j < ncols; ++j)
      reduced_.at(i, j) = R.mul(u, reduced_.at(i, j));
    if (transform_)
      for (int j = 0; j < source_rows_; ++j)
        transform_->at(i, j) = R.mul(u, transform_->at(i, j));
  };

  while (true) {
    // Pivot: minimal valuation among rows not yet used, then smallest
    // column, then smallest row. Monotone in valuation, which keeps the
    // exact-clearing argument valid over Z/p^k.
    int best_r = -1, best_c = -1, best_v = val_infinity;
    for (int i = 0; i < nrows; ++i) {
      if (is_pivot_row[i]) continue;
      for (int j = 0; j < ncols; ++j) {
        if (R.is_zero(reduced_.at(i, j))) continue;
        int v = R.valuation(reduced_.at(i, j));
        if (v < best_v || (v == best_v && (j < best_c || (j == best_c && i < best_r)))) {
          best_v = v;
          best_r = i;
          best_c = j;
        }
      }
    }
    if (best_r < 0) break;

    // Normalize the pivot entry to p^a (or 1 over a field).
    const Scalar& pv = reduced_.at(best_r, best_c);
    Scalar unit_part;
    if (R.modular()) {
      Scalar pa = R.p_power(best_v);
      unit_part = R.div_by_pivot(pv, pa);  // pv / p^a, a unit
    } else {
      unit_part = pv;
    }
    row_scale(best_r, *R.inverse(unit_part));

    const Scalar pivot_entry = reduced_.at(best_r, best_c);
    for (int i = 0; i < nrows; ++i) {
      if (i == best_r) continue;
      const Scalar& e = reduced_.at(i, best_c);
      if (R.is_zero(e)) continue;
      int ev = R.valuation(e);
      if (ev >= best_v) {
        row_op_sub(i, R.div_by_pivot(e, pivot_entry), best_r);
      } else {
        // Earlier pivot row with a smaller-valuation entry: reduce mod p^a.
        mpz_class pa;
        mpz_ui_pow_ui(pa.get_mpz_t(), static_cast<unsigned long>(R.prime()),
                      static_cast<unsigned long>(best_v));
        mpz_class q = e.get_num() / pa;
        row_op_sub(i, Scalar(q), best_r);
      }
    }
    is_pivot_row[best_r] = true;
    is_pivot_col[best_c] = true;
    pivots_.push_back({best_r, best_c, best_v});
  }
}

int Echelon::unit_rank() const {
  int n = 0;
  for (const auto& p : pivots_)
    if (p.val == 0) ++n;
  return n;
}

Vec Echelon::reduce(const Vec& v) const {
  const ScalarRing& R = ring();
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = R.canon(v[i]);
  for (const auto& p : pivots_) {
    const Scalar& e = r[p.col];
    if (R.is_zero(e)) continue;
    if (R.valuation(e) < p.val) continue;  // not clearable: leave residue
    Scalar q = R.div_by_pivot(e, reduced_.at(p.row, p.col));
    for (size_t j = 0; j < r.size(); ++j)
      r[j] = R.sub(r[j], R.mul(q, reduced_.at(p.row, static_cast<int>(j))));
  }
  return r;
}

bool Echelon::contains(const Vec& v) const {
  return vec_is_zero(ring(), reduce(v));
}

std::optional<Vec> Echelon::coordinates(const Vec& v) const {
  if (!transform_) throw std::logic_error("Echelon: transform not tracked");
  const ScalarRing& R = ring();
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = R.canon(v[i]);
  Vec coords(source_rows_, Scalar(0));
  for (const auto& p : pivots_) {
    const Scalar& e = r[p.col];
    if (R.is_zero(e)) continue;
    if (R.valuation(e) < p.val) return std::nullopt;
    Scalar q = R.div_by_pivot(e, reduced_.at(p.row, p.col));
    for (size_t j = 0; j < r.size(); ++j)
      r[j] = R.sub(r[j], R.mul(q, reduced_.at(p.row, static_cast<int>(j))));
    for (int j = 0; j < source_rows_; ++j)
      coords[j] = R.add(coords[j], R.mul(q, transform_->at(p.row, j)));
  }
  if (!vec_is_zero(R, r)) return std::nullopt;
  return coords;
}

std::vector<Vec> Echelon::kernel() const {
  if (!transform_) throw std::logic_error("Echelon: transform not tracked");
  const ScalarRing& R = ring();
  std::vector<Vec> gens;
  std::vector<bool> pivot_row(reduced_.rows(), false);
  for (const auto& p : pivots_) pivot_row[p.row] = true;
  for (int i = 0; i < reduced_.rows(); ++i)
    if (!pivot_row[i]) gens.push_back(transform_->row(i));
  if (R.modular()) {
    for (const auto& p : pivots_)
      if (p.val > 0)
        gens.push_back(vec_scale(R, R.p_power(R.precision() - p.val),
                                 transform_->row(p.row)));
  }
  // Drop zero relations (e.g. repeated zero source rows).
  std::vector<Vec> out;
  for (auto& g : gens)
    if (!vec_is_zero(R, g)) out.push_back(std::move(g));
  return out;
}

std::vector<Vec> Echelon::basis() const {
  std::vector<Vec> rows;
  std::vector<Pivot> sorted = pivots_;
  std::sort(sorted.begin(), sorted.end(), [](const Pivot& a, const Pivot& b) {
    return a.val != b.val ? a.val < b.val : a.col < b.col;
  });
  for (const auto& p : sorted) rows.push_back(reduced_.row(p.row));
  return rows;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  Echelon ech(a.transposed());
  return ech.coordinates(b);
}

std::vector<Vec> kernel(const Mat& a) {
  Echelon ech(a.transposed());
  return ech.kernel();
}

std::vector<Vec> span_intersection(const ScalarRing& ring,
                                   const std::vector<Vec>& u,
                                   const std::vector<Vec>& w) {
  if (u.empty() || w.empty()) return {};
  std::vector<Vec> stacked = u;
  stacked.insert(stacked.end(), w.begin(), w.end());
  Echelon ech(Mat::from_rows(ring, stacked));
  std::vector<Vec> out;
  for (const auto& rel : ech.kernel()) {
    // rel = (c, d) with sum c_i u_i + sum d_j w_j = 0; the element
    // sum c_i u_i = -sum d_j w_j lies in the intersection.
    Vec v(u[0].size(), Scalar(0));
    for (size_t i = 0; i < u.size(); ++i)
      for (size_t j = 0; j < v.size(); ++j)
        v[j] = ring.add(v[j], ring.mul(rel[i], u[i][j]));
    if (!vec_is_zero(ring, v)) out.push_back(std::move(v));
  }
  return out;
}

Vec vec_add(const ScalarRing& r, const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = r.add(a[i], b[i]);
  return out;
}

Vec vec_sub(const ScalarRing& r, const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = r.sub(a[i], b[i]);
  return out;
}

Vec vec_scale(const ScalarRing& r, const Scalar& c, const Vec& a) {
  Vec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = r.mul(c, a[i]);
  return out;
}

bool vec_is_zero(const ScalarRing& r, const Vec& a) {
  for (const auto& x : a)
    if (!r.is_zero(x)) return false;
  return true;
}

}  // namespace grlab
