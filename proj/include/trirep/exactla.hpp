#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

#include "trirep/scalar.hpp"

namespace trirep {

using Index = Eigen::Index;

template <class F>
using Mat = Eigen::Matrix<F, Eigen::Dynamic, Eigen::Dynamic>;
template <class F>
using Vec = Eigen::Matrix<F, Eigen::Dynamic, 1>;

template <class F>
struct Echelon {
  Mat<F> reduced;
  std::vector<Index> pivots;
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <class F>
Mat<F> zeros(Index rows, Index cols) {
  return Mat<F>::Constant(rows, cols, F(0));
}

template <class F>
Mat<F> identity(Index n) {
  Mat<F> m = zeros<F>(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = F(1);
  return m;
}

template <class F, class Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_zero(F(m(i, j)))) return false;
  return true;
}

template <class F>
bool is_zero(const Mat<F>& m) {
  return is_zero_matrix<F>(m);
}

// Product that skips zero entries; exact scalars make the generic kernel slow.
template <class F>
Mat<F> multiply(const Mat<F>& a, const Mat<F>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: dimension mismatch");
  Mat<F> c = zeros<F>(a.rows(), b.cols());
  for (Index k = 0; k < a.cols(); ++k) {
    for (Index j = 0; j < b.cols(); ++j) {
      const F& bkj = b(k, j);
      if (is_zero(bkj)) continue;
      for (Index i = 0; i < a.rows(); ++i) {
        const F& aik = a(i, k);
        if (!is_zero(aik)) c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

template <class F>
Vec<F> multiply(const Mat<F>& a, const Vec<F>& v) {
  Vec<F> r = Vec<F>::Constant(a.rows(), F(0));
  for (Index k = 0; k < a.cols(); ++k) {
    if (is_zero(v(k))) continue;
    for (Index i = 0; i < a.rows(); ++i)
      if (!is_zero(a(i, k))) r(i) += a(i, k) * v(k);
  }
  return r;
}

// Reduced row echelon form with first-nonzero pivoting.
template <class F>
Echelon<F> rref(Mat<F> m) {
  Echelon<F> out;
  const Index rows = m.rows(), cols = m.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    if (!m(r, c).is_one()) {
      F inv = F(1) / m(r, c);
      for (Index j = c; j < cols; ++j)
        if (!is_zero(m(r, j))) m(r, j) *= inv;
    }
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      F factor = m(i, c);
      for (Index j = c; j < cols; ++j)
        if (!is_zero(m(r, j))) m(i, j) -= factor * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

// Sparse rows sorted by column, no stored zeros.
template <class F>
using SparseRow = std::vector<std::pair<Index, F>>;

// row - c * other, both sorted.
template <class F>
SparseRow<F> axpy_row(const SparseRow<F>& row, const F& c, const SparseRow<F>& other) {
  SparseRow<F> out;
  out.reserve(row.size() + other.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < other.size()) {
    if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || other[j].first < row[i].first) {
      out.push_back({other[j].first, -(c * other[j].second)});
      ++j;
    } else {
      F v = row[i].second - c * other[j].second;
      if (!is_zero(v)) out.push_back({row[i].first, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

// Incremental row echelon form for large sparse systems (Hom equations).
template <class F>
class SparseEchelon {
 public:
  explicit SparseEchelon(Index cols) : cols_(cols), pivot_row_(static_cast<std::size_t>(cols), -1) {}

  void add(SparseRow<F> row) {
    while (!row.empty()) {
      const int p = pivot_row_[static_cast<std::size_t>(row.front().first)];
      if (p < 0) break;
      F c = row.front().second;
      row = axpy_row<F>(row, c, rows_[static_cast<std::size_t>(p)]);
    }
    if (row.empty()) return;
    F inv = F(1) / row.front().second;
    for (auto& e : row) e.second *= inv;
    pivot_row_[static_cast<std::size_t>(row.front().first)] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
    reduced_ = false;
  }

  Index rank() const { return static_cast<Index>(rows_.size()); }
  Index cols() const { return cols_; }
  std::vector<Index> pivots() const {
    std::vector<Index> p;
    for (Index c = 0; c < cols_; ++c)
      if (pivot_row_[static_cast<std::size_t>(c)] >= 0) p.push_back(c);
    return p;
  }

  // Rows of the reduced echelon form, leading entries 1.
  const std::vector<SparseRow<F>>& reduced_rows() {
    reduce();
    return rows_;
  }

  // Null space basis, one column per free variable in increasing order.
  Mat<F> kernel() {
    reduce();
    std::vector<Index> free_col(static_cast<std::size_t>(cols_), -1);
    Index nfree = 0;
    for (Index c = 0; c < cols_; ++c)
      if (pivot_row_[static_cast<std::size_t>(c)] < 0) free_col[static_cast<std::size_t>(c)] = nfree++;
    Mat<F> k = zeros<F>(cols_, nfree);
    for (Index c = 0; c < cols_; ++c)
      if (free_col[static_cast<std::size_t>(c)] >= 0) k(c, free_col[static_cast<std::size_t>(c)]) = F(1);
    for (const auto& row : rows_) {
      const Index p = row.front().first;
      for (std::size_t i = 1; i < row.size(); ++i) k(p, free_col[static_cast<std::size_t>(row[i].first)]) = -row[i].second;
    }
    return k;
  }

 private:
  // Back substitution, highest pivot first, so every row meets only reduced rows.
  void reduce() {
    if (reduced_) return;
    std::vector<int> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return rows_[static_cast<std::size_t>(a)].front().first > rows_[static_cast<std::size_t>(b)].front().first;
    });
    for (int r : order) {
      SparseRow<F>& row = rows_[static_cast<std::size_t>(r)];
      std::vector<std::pair<int, F>> hits;
      for (std::size_t i = 1; i < row.size(); ++i) {
        const int p = pivot_row_[static_cast<std::size_t>(row[i].first)];
        if (p >= 0) hits.push_back({p, row[i].second});
      }
      for (const auto& [p, c] : hits) row = axpy_row<F>(row, c, rows_[static_cast<std::size_t>(p)]);
    }
    reduced_ = true;
  }

  Index cols_;
  std::vector<int> pivot_row_;
  std::vector<SparseRow<F>> rows_;
  bool reduced_ = true;
};

template <class F>
SparseEchelon<F> sparse_rows(const Mat<F>& m) {
  SparseEchelon<F> e(m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    SparseRow<F> row;
    for (Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) row.push_back({j, m(i, j)});
    e.add(std::move(row));
  }
  return e;
}

// Large systems go through the sparse path.
template <class F>
bool prefer_sparse(const Mat<F>& m) {
  return m.rows() * m.cols() >= 1024;
}

// Row echelon (not reduced) is enough for rank.
template <class F>
Index rank(Mat<F> m) {
  if (prefer_sparse<F>(m)) return sparse_rows<F>(m).rank();
  const Index rows = m.rows(), cols = m.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    F inv = F(1) / m(r, c);
    for (Index i = r + 1; i < rows; ++i) {
      if (is_zero(m(i, c))) continue;
      F factor = m(i, c) * inv;
      for (Index j = c; j < cols; ++j)
        if (!is_zero(m(r, j))) m(i, j) -= factor * m(r, j);
    }
    ++r;
  }
  return r;
}

// Columns form a basis of the null space.
template <class F>
Mat<F> kernel_basis(const Mat<F>& m) {
  if (prefer_sparse<F>(m)) return sparse_rows<F>(m).kernel();
  const Index cols = m.cols();
  Echelon<F> e = rref<F>(m);
  std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = 1;
  Mat<F> k = zeros<F>(cols, cols - e.rank());
  Index col = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    k(f, col) = F(1);
    for (Index r = 0; r < e.rank(); ++r) k(e.pivots[static_cast<std::size_t>(r)], col) = -e.reduced(r, f);
    ++col;
  }
  return k;
}

template <class F>
std::optional<Mat<F>> solve(const Mat<F>& a, const Mat<F>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: dimension mismatch");
  Mat<F> aug(a.rows(), a.cols() + b.cols());
  aug << a, b;
  if (prefer_sparse<F>(aug)) {
    SparseEchelon<F> e = sparse_rows<F>(aug);
    Mat<F> x = zeros<F>(a.cols(), b.cols());
    for (const auto& row : e.reduced_rows()) {
      const Index p = row.front().first;
      if (p >= a.cols()) return std::nullopt;
      for (const auto& [c, v] : row)
        if (c >= a.cols()) x(p, c - a.cols()) = v;
    }
    return x;
  }
  Echelon<F> e = rref<F>(std::move(aug));
  for (Index p : e.pivots)
    if (p >= a.cols()) return std::nullopt;
  Mat<F> x = zeros<F>(a.cols(), b.cols());
  for (Index r = 0; r < e.rank(); ++r)
    x.row(e.pivots[static_cast<std::size_t>(r)]) = e.reduced.row(r).tail(b.cols());
  return x;
}

template <class F>
std::optional<Mat<F>> inverse(const Mat<F>& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  auto x = solve<F>(a, identity<F>(a.rows()));
  if (!x) return std::nullopt;
  if (rank<F>(a) != a.rows()) return std::nullopt;
  return x;
}

template <class F>
bool is_invertible(const Mat<F>& a) {
  return a.rows() == a.cols() && rank<F>(a) == a.rows();
}

// Subset of columns forming a basis of the column space (first-found order).
template <class F>
Mat<F> column_basis(const Mat<F>& m) {
  if (prefer_sparse<F>(m)) {
    std::vector<Index> piv = sparse_rows<F>(m).pivots();
    Mat<F> out(m.rows(), static_cast<Index>(piv.size()));
    for (std::size_t i = 0; i < piv.size(); ++i) out.col(static_cast<Index>(i)) = m.col(piv[i]);
    return out;
  }
  Echelon<F> e = rref<F>(m);
  Mat<F> out(m.rows(), e.rank());
  for (Index i = 0; i < e.rank(); ++i) out.col(i) = m.col(e.pivots[static_cast<std::size_t>(i)]);
  return out;
}

// Coordinates on F^n / span(sub): projection kills sub, section picks
// standard basis vectors spanning a complement, projection * section = 1.
template <class F>
struct Quotient {
  Mat<F> projection;
  Mat<F> section;
  Index dim() const { return projection.rows(); }
};

template <class F>
Quotient<F> quotient_by(const Mat<F>& sub, Index n) {
  Mat<F> basis = column_basis<F>(sub);
  const Index s = basis.cols();
  // Greedily extend by standard vectors.
  Mat<F> full(n, n);
  full.leftCols(s) = basis;
  Echelon<F> e = rref<F>(Mat<F>(basis.transpose()));
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (Index p : e.pivots) used[static_cast<std::size_t>(p)] = 1;
  Quotient<F> q;
  q.section = zeros<F>(n, n - s);
  Index c = 0;
  for (Index i = 0; i < n; ++i) {
    if (used[static_cast<std::size_t>(i)]) continue;
    q.section(i, c) = F(1);
    full.col(s + c) = q.section.col(c);
    ++c;
  }
  Mat<F> inv = *inverse<F>(full);
  q.projection = inv.bottomRows(n - s);
  return q;
}

template <class F>
bool in_column_space(const Mat<F>& m, const Mat<F>& v) {
  return solve<F>(m, v).has_value();
}

template <class F>
Mat<F> hstack(const std::vector<Mat<F>>& blocks, Index rows) {
  Index cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  Mat<F> out(rows, cols);
  Index c = 0;
  for (const auto& b : blocks) {
    out.middleCols(c, b.cols()) = b;
    c += b.cols();
  }
  return out;
}

template <class F>
Mat<F> vstack(const std::vector<Mat<F>>& blocks, Index cols) {
  Index rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  Mat<F> out(rows, cols);
  Index r = 0;
  for (const auto& b : blocks) {
    out.middleRows(r, b.rows()) = b;
    r += b.rows();
  }
  return out;
}

template <class F>
Mat<F> block_diagonal(const std::vector<Mat<F>>& blocks) {
  Index rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Mat<F> out = zeros<F>(rows, cols);
  Index r = 0, c = 0;
  for (const auto& b : blocks) {
    out.block(r, c, b.rows(), b.cols()) = b;
    r += b.rows();
    c += b.cols();
  }
  return out;
}

template <class F>
Mat<F> convert_matrix(const Mat<Rational>& m) {
  Mat<F> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = field_from_rational<F>(m(i, j));
  return out;
}

}  // namespace trirep
