#pragma once

#include <optional>
#include <vector>

#include "qcrystal/ratfunc.hpp"

namespace qcrystal {
namespace ratfield {

// Vector arithmetic lives here so that argument-dependent lookup finds it
// for std::vector<RatFunc>.
inline std::vector<RatFunc> operator+(const std::vector<RatFunc>& a,
                                      const std::vector<RatFunc>& b) {
  std::vector<RatFunc> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}
inline std::vector<RatFunc> operator-(const std::vector<RatFunc>& a,
                                      const std::vector<RatFunc>& b) {
  std::vector<RatFunc> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}
inline std::vector<RatFunc> operator*(const RatFunc& s, const std::vector<RatFunc>& a) {
  std::vector<RatFunc> r = a;
  for (auto& x : r) x *= s;
  return r;
}

}  // namespace ratfield

namespace linalg {

using Vec = std::vector<RatFunc>;

/// Dense matrix over Q(t), row major.  Sizes stay at desk scale (<= ~100),
/// so no sparsity beyond zero-skipping in products.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RatFunc(1);
    return m;
  }
  static Mat diagonal(const Vec& d) {
    Mat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
  }
  static Mat from_columns(const std::vector<Vec>& cols, int rows) {
    Mat m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j)
      for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  RatFunc& at(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const RatFunc& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

  Vec column(int j) const {
    Vec v(r_);
    for (int i = 0; i < r_; ++i) v[i] = at(i, j);
    return v;
  }
  void set_column(int j, const Vec& v) {
    for (int i = 0; i < r_; ++i) at(i, j) = v[i];
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend Mat operator+(const Mat& a, const Mat& b) {
    Mat r = a;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += b.a_[k];
    return r;
  }
  friend Mat operator-(const Mat& a, const Mat& b) {
    Mat r = a;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= b.a_[k];
    return r;
  }
  friend Mat operator*(const RatFunc& s, const Mat& a) {
    Mat r = a;
    for (auto& x : r.a_) x *= s;
    return r;
  }
  friend Mat operator*(const Mat& a, const Mat& b) {
    Mat r(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
      for (int k = 0; k < a.c_; ++k) {
        const RatFunc& x = a.at(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < b.c_; ++j) {
          const RatFunc& y = b.at(k, j);
          if (!y.is_zero()) r.at(i, j) += x * y;
        }
      }
    return r;
  }
  friend Vec operator*(const Mat& a, const Vec& v) {
    Vec r(a.r_);
    for (int i = 0; i < a.r_; ++i)
      for (int k = 0; k < a.c_; ++k) {
        const RatFunc& x = a.at(i, k);
        if (!x.is_zero() && !v[k].is_zero()) r[i] += x * v[k];
      }
    return r;
  }
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

  Mat transpose() const {
    Mat r(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

 private:
  int r_ = 0, c_ = 0;
  std::vector<RatFunc> a_;
};

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}
inline Vec unit_vec(int n, int i) {
  Vec v(n);
  v[i] = RatFunc(1);
  return v;
}

/// Row echelon with recorded pivots; shared backend for solve/kernel/rank.
struct Echelon {
  Mat m;                    // reduced row echelon form
  std::vector<int> pivots;  // pivot column per pivot row
};

inline Echelon row_reduce(Mat m) {
  Echelon e;
  int rows = m.rows(), cols = m.cols();
  int prow = 0;
  for (int col = 0; col < cols && prow < rows; ++col) {
    int sel = -1;
    for (int i = prow; i < rows; ++i)
      if (!m.at(i, col).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != prow)
      for (int j = 0; j < cols; ++j) std::swap(m.at(sel, j), m.at(prow, j));
    RatFunc inv = m.at(prow, col).inverse();
    for (int j = col; j < cols; ++j) m.at(prow, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == prow || m.at(i, col).is_zero()) continue;
      RatFunc f = m.at(i, col);
      for (int j = col; j < cols; ++j) m.at(i, j) -= f * m.at(prow, j);
    }
    e.pivots.push_back(col);
    ++prow;
  }
  e.m = std::move(m);
  return e;
}

inline int rank(const Mat& m) { return static_cast<int>(row_reduce(m).pivots.size()); }

/// One solution of A x = b, or nullopt when inconsistent.
inline std::optional<Vec> solve(const Mat& a, const Vec& b) {
  Mat aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  Echelon e = row_reduce(std::move(aug));
  Vec x(a.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    if (e.pivots[k] == a.cols()) return std::nullopt;  // row (0 ... 0 | 1)
    x[e.pivots[k]] = e.m.at(static_cast<int>(k), a.cols());
  }
  return x;
}

/// Basis of the null space, as columns.
inline Mat kernel(const Mat& a) {
  Echelon e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> cols;
  for (int j = 0; j < a.cols(); ++j) {
    if (is_pivot[j]) continue;
    Vec v(a.cols());
    v[j] = RatFunc(1);
    for (std::size_t k = 0; k < e.pivots.size(); ++k)
      v[e.pivots[k]] = -e.m.at(static_cast<int>(k), j);
    cols.push_back(std::move(v));
  }
  return Mat::from_columns(cols, a.cols());
}

inline Mat inverse(const Mat& a) {
  int n = a.rows();
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = RatFunc(1);
  }
  Echelon e = row_reduce(std::move(aug));
  if (static_cast<int>(e.pivots.size()) != n || e.pivots.back() >= n)
    throw std::domain_error("matrix is singular");
  Mat r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = e.m.at(i, n + j);
  return r;
}

inline RatFunc det(Mat m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
  int n = m.rows();
  RatFunc d(1);
  for (int col = 0; col < n; ++col) {
    int sel = -1;
    for (int i = col; i < n; ++i)
      if (!m.at(i, col).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) return RatFunc();
    if (sel != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    RatFunc inv = m.at(col, col).inverse();
    for (int i = col + 1; i < n; ++i) {
      if (m.at(i, col).is_zero()) continue;
      RatFunc f = m.at(i, col) * inv;
      for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return d;
}

/// Reduced basis of an A0-span: columns with unit pivot entries at
/// distinct rows, every column after the k-th vanishing on the k-th
/// pivot row.
struct A0Basis {
  std::vector<Vec> cols;
  std::vector<int> pivot_rows;  // parallel to cols

  std::size_t size() const { return cols.size(); }
};

/// A0-column reduction: returns a normalized A0-basis of the A0-span of
/// the input columns.  Pivots are the entries of minimal valuation,
/// ties broken by lowest row index, then lowest column index; each pivot
/// column is scaled by the inverse of its pivot entry, so pivot entries
/// are exactly 1 and pivot rows of later columns vanish.
inline A0Basis a0_column_reduce(std::vector<Vec> cols) {
  A0Basis result;
  std::vector<bool> done(cols.size(), false);
  for (;;) {
    long best_val = 0;
    int best_row = -1, best_col = -1;
    bool found = false;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (done[j]) continue;
      for (std::size_t i = 0; i < cols[j].size(); ++i) {
        auto v = cols[j][i].valuation_at_zero();
        if (!v) continue;
        if (!found || *v < best_val ||
            (*v == best_val && (static_cast<int>(i) < best_row ||
                                (static_cast<int>(i) == best_row &&
                                 static_cast<int>(j) < best_col)))) {
          found = true;
          best_val = *v;
          best_row = static_cast<int>(i);
          best_col = static_cast<int>(j);
        }
      }
    }
    if (!found) break;
    Vec& pc = cols[best_col];
    RatFunc inv = pc[best_row].inverse();
    for (auto& x : pc) x *= inv;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (done[j] || j == static_cast<std::size_t>(best_col)) continue;
      RatFunc c = cols[j][best_row];  // valuation >= best_val: c is in A0
      if (c.is_zero()) continue;
      for (std::size_t i = 0; i < cols[j].size(); ++i) cols[j][i] -= c * pc[i];
    }
    result.cols.push_back(pc);
    result.pivot_rows.push_back(best_row);
    done[best_col] = true;
  }
  return result;
}

/// Coordinates of v in a reduced basis, or nullopt when v is not in the
/// Q(t)-span.  Forward substitution along pivot rows; exact.
inline std::optional<Vec> span_coords(const A0Basis& basis, Vec v) {
  Vec coords(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    coords[k] = v[basis.pivot_rows[k]];
    if (!coords[k].is_zero())
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= coords[k] * basis.cols[k][i];
  }
  if (!is_zero(v)) return std::nullopt;
  return coords;
}

/// Membership of v in the A0-span of a reduced basis.
inline bool in_a0_span(const A0Basis& basis, const Vec& v) {
  auto c = span_coords(basis, v);
  if (!c) return false;
  for (const auto& x : *c)
    if (!x.is_in_a0()) return false;
  return true;
}

/// A0-basis of { a in A0^dim : a in the Q(t)-span of the given columns }.
/// Over the discrete valuation ring A0 the reduced unit-pivot basis is
/// already saturated.
inline A0Basis a0_saturate(const std::vector<Vec>& cols) { return a0_column_reduce(cols); }

inline bool same_a0_span(const A0Basis& a, const A0Basis& b) {
  for (const auto& v : a.cols)
    if (!in_a0_span(b, v)) return false;
  for (const auto& v : b.cols)
    if (!in_a0_span(a, v)) return false;
  return true;
}

}  // namespace linalg

using linalg::A0Basis;
using linalg::Mat;
using linalg::Vec;

}  // namespace qcrystal
