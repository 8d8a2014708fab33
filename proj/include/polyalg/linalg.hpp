// Exact dense linear algebra over the rationals.
//
// Forward elimination is fraction-free (Bareiss): rows are cleared to
// integers, pivots are the first nonzero entry in column order, and each
// elimination step divides exactly by the previous pivot. Reduced forms
// and solutions are then produced by rational back-substitution. Every
// routine is deterministic for a fixed input.
#pragma once

#include <optional>
#include <vector>

#include "polyalg/rational.hpp"

namespace polyalg {

class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int r, int c) : rows_(r), cols_(c), a_(static_cast<std::size_t>(r) * c, Rat(0)) {}

  static RatMatrix identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  std::vector<Rat> row(int i) const {
    return std::vector<Rat>(a_.begin() + static_cast<std::size_t>(i) * cols_,
                            a_.begin() + static_cast<std::size_t>(i + 1) * cols_);
  }
  std::vector<Rat> col(int j) const {
    std::vector<Rat> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }
  void set_col(int j, const std::vector<Rat>& c) {
    for (int i = 0; i < rows_; ++i) at(i, j) = c[i];
  }

  // Horizontal concatenation.
  static RatMatrix hcat(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows()) throw LengthMismatch("hcat: row mismatch");
    RatMatrix m(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
      for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
      for (int j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
    }
    return m;
  }

  static RatMatrix from_columns(int nrows, const std::vector<std::vector<Rat>>& cols) {
    RatMatrix m(nrows, static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (static_cast<int>(cols[j].size()) != nrows) throw LengthMismatch("from_columns");
      for (int i = 0; i < nrows; ++i) m.at(i, static_cast<int>(j)) = cols[j][i];
    }
    return m;
  }

  std::vector<Rat> apply(const std::vector<Rat>& x) const {
    if (static_cast<int>(x.size()) != cols_) throw LengthMismatch("apply");
    std::vector<Rat> y(rows_, Rat(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (at(i, j) != 0 && x[j] != 0) y[i] += at(i, j) * x[j];
    return y;
  }

  static RatMatrix mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw LengthMismatch("mul");
    RatMatrix m(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
      for (int k = 0; k < a.cols(); ++k) {
        if (a.at(i, k) == 0) continue;
        for (int j = 0; j < b.cols(); ++j)
          if (b.at(k, j) != 0) m.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return m;
  }

  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

namespace detail {

// Integer row echelon via Bareiss. Rows are pre-scaled to integers.
// Returns echelon matrix (as rationals holding integers), pivot columns,
// and the permutation sign of the row swaps performed.
struct IntEchelon {
  RatMatrix m;
  std::vector<int> pivot_cols;
  int swap_sign = 1;
};

inline IntEchelon bareiss_echelon(const RatMatrix& input) {
  RatMatrix m = input;
  const int rows = m.rows(), cols = m.cols();
  for (int i = 0; i < rows; ++i) {
    Int l = 1;
    for (int j = 0; j < cols; ++j) l = boost::multiprecision::lcm(l, denominator(m.at(i, j)));
    if (l != 1)
      for (int j = 0; j < cols; ++j) m.at(i, j) *= Rat(l);
  }
  IntEchelon out;
  out.pivot_cols.reserve(std::min(rows, cols));
  Rat prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (m.at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r) {
      for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
      out.swap_sign = -out.swap_sign;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        m.at(i, j) = (m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j)) / prev;
      m.at(i, c) = 0;
    }
    prev = m.at(r, c);
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

}  // namespace detail

struct Rref {
  RatMatrix m;
  std::vector<int> pivot_cols;
};

// Reduced row echelon form (pivot entries 1, pivot columns cleared).
inline Rref rref(const RatMatrix& input) {
  detail::IntEchelon e = detail::bareiss_echelon(input);
  RatMatrix& m = e.m;
  const int cols = m.cols();
  const int rk = static_cast<int>(e.pivot_cols.size());
  for (int r = rk - 1; r >= 0; --r) {
    const int c = e.pivot_cols[r];
    Rat p = m.at(r, c);
    for (int j = c; j < cols; ++j) m.at(r, j) /= p;
    for (int i = 0; i < r; ++i) {
      Rat f = m.at(i, c);
      if (f == 0) continue;
      for (int j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
  }
  return Rref{std::move(m), std::move(e.pivot_cols)};
}

inline int rank(const RatMatrix& m) {
  return static_cast<int>(detail::bareiss_echelon(m).pivot_cols.size());
}

// Basis of {x : Mx = 0}; one vector per free column, unit in that column.
inline std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m) {
  Rref r = rref(m);
  const int cols = m.cols();
  std::vector<int> pivot_of_col(cols, -1);
  for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) pivot_of_col[r.pivot_cols[i]] = static_cast<int>(i);
  std::vector<std::vector<Rat>> basis;
  for (int f = 0; f < cols; ++f) {
    if (pivot_of_col[f] >= 0) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
      v[r.pivot_cols[i]] = -r.m.at(static_cast<int>(i), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// One solution of Mx = b (free variables set to zero), if consistent.
inline std::optional<std::vector<Rat>> solve(const RatMatrix& m, const std::vector<Rat>& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw LengthMismatch("solve");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  Rref r = rref(aug);
  for (int c : r.pivot_cols)
    if (c == m.cols()) return std::nullopt;
  std::vector<Rat> x(m.cols(), Rat(0));
  for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
    x[r.pivot_cols[i]] = r.m.at(static_cast<int>(i), m.cols());
  return x;
}

inline Rat determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw LengthMismatch("determinant: not square");
  if (m.rows() == 0) return 1;
  RatMatrix work = m;
  std::vector<Rat> row_scale(m.rows(), Rat(1));
  for (int i = 0; i < m.rows(); ++i) {
    Int l = 1;
    for (int j = 0; j < m.cols(); ++j) l = boost::multiprecision::lcm(l, denominator(work.at(i, j)));
    if (l != 1) {
      for (int j = 0; j < m.cols(); ++j) work.at(i, j) *= Rat(l);
      row_scale[i] = Rat(l);
    }
  }
  detail::IntEchelon e = detail::bareiss_echelon(work);
  if (static_cast<int>(e.pivot_cols.size()) < m.rows()) return 0;
  Rat det = e.m.at(m.rows() - 1, m.cols() - 1) * e.swap_sign;
  for (const auto& s : row_scale) det /= s;
  return det;
}

// Column-space membership: true iff span(sub) is contained in span(big).
inline bool columns_contained(const RatMatrix& sub, const RatMatrix& big) {
  if (sub.cols() == 0) return true;
  return rank(RatMatrix::hcat(big, sub)) == rank(big);
}

// Exact subspace equality via mutual rank tests on column spans.
inline bool same_column_space(const RatMatrix& a, const RatMatrix& b) {
  int ra = rank(a), rb = rank(b);
  if (ra != rb) return false;
  return rank(RatMatrix::hcat(a, b)) == ra;
}

}  // namespace polyalg
