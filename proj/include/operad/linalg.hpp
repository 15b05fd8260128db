#pragma once

// Exact dense linear algebra over a field-like scalar: reduced row echelon
// form, kernels, spans and subspace algebra. All routines are templated on the
// scalar type; the library instantiates them with operad::Rational.

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace operad {

template <class Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <class Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Index = Eigen::Index;

class dimension_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class degenerate_form_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

template <class Scalar>
struct Echelon {
  MatrixX<Scalar> matrix;
  Index rank = 0;
  std::vector<Index> pivots;
};

// Gauss-Jordan elimination. The pivot of each column is the first row (at or
// below the current rank) holding a nonzero entry.
template <class Derived>
Echelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Echelon<Scalar> out;
  out.matrix = input;
  MatrixX<Scalar>& m = out.matrix;
  const Index rows = m.rows();
  const Index cols = m.cols();
  const Scalar zero(0);

  Index rank = 0;
  for (Index col = 0; col < cols && rank < rows; ++col) {
    Index pivot_row = -1;
    for (Index r = rank; r < rows; ++r) {
      if (m(r, col) != zero) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != rank) m.row(pivot_row).swap(m.row(rank));

    const Scalar inv = Scalar(1) / m(rank, col);
    std::vector<Index> support;
    for (Index c = col; c < cols; ++c) {
      if (m(rank, c) != zero) {
        m(rank, c) *= inv;
        support.push_back(c);
      }
    }
    for (Index r = 0; r < rows; ++r) {
      if (r == rank || m(r, col) == zero) continue;
      const Scalar factor = m(r, col);
      for (Index c : support) m(r, c) -= factor * m(rank, c);
    }
    out.pivots.push_back(col);
    ++rank;
  }
  out.rank = rank;
  return out;
}

template <class Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank;
}

// A linear subspace of Scalar^n stored canonically as the RREF of a basis.
// Two subspaces of the same ambient space are equal iff their bases match
// entry-wise.
template <class Scalar>
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(Index ambient_dim) {
    Subspace s;
    s.ambient_ = ambient_dim;
    s.basis_.resize(0, ambient_dim);
    return s;
  }

  static Subspace full(Index ambient_dim) {
    Subspace s;
    s.ambient_ = ambient_dim;
    s.basis_ = MatrixX<Scalar>::Identity(ambient_dim, ambient_dim);
    for (Index c = 0; c < ambient_dim; ++c) s.pivots_.push_back(c);
    return s;
  }

  // Row space of an arbitrary matrix.
  template <class Derived>
  static Subspace row_space(const Eigen::MatrixBase<Derived>& m) {
    auto e = rref(m);
    Subspace s;
    s.ambient_ = m.cols();
    s.basis_ = e.matrix.topRows(e.rank);
    s.pivots_ = std::move(e.pivots);
    return s;
  }

  // Wraps a matrix already known to be in RREF with no zero rows.
  static Subspace from_rref(MatrixX<Scalar> basis, std::vector<Index> pivots) {
    Subspace s;
    s.ambient_ = basis.cols();
    s.basis_ = std::move(basis);
    s.pivots_ = std::move(pivots);
    return s;
  }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  const MatrixX<Scalar>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  // Reduces v against the basis; the residual is zero iff v lies in the span.
  template <class Derived>
  VectorX<Scalar> residual(const Eigen::MatrixBase<Derived>& v) const {
    if (v.size() != ambient_) throw dimension_error("vector length does not match ambient dimension");
    VectorX<Scalar> w = v;
    const Scalar zero(0);
    for (Index r = 0; r < dim(); ++r) {
      const Scalar f = w(pivots_[r]);
      if (f == zero) continue;
      for (Index c = pivots_[r]; c < ambient_; ++c) {
        if (basis_(r, c) != zero) w(c) -= f * basis_(r, c);
      }
    }
    return w;
  }

  template <class Derived>
  bool contains_vector(const Eigen::MatrixBase<Derived>& v) const {
    const Scalar zero(0);
    auto w = residual(v);
    for (Index c = 0; c < w.size(); ++c) {
      if (w(c) != zero) return false;
    }
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_.rows() == b.basis_.rows() && a.basis_ == b.basis_;
  }

 private:
  Index ambient_ = 0;
  MatrixX<Scalar> basis_;
  std::vector<Index> pivots_;
};

// Right null space of m.
template <class Derived>
Subspace<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Index cols = m.cols();
  auto e = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<Index> free_cols;
  for (Index c = 0; c < cols; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  }
  MatrixX<Scalar> basis = MatrixX<Scalar>::Zero(static_cast<Index>(free_cols.size()), cols);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const Index f = free_cols[k];
    const Index row = static_cast<Index>(k);
    basis(row, f) = Scalar(1);
    for (Index r = 0; r < e.rank; ++r) basis(row, e.pivots[static_cast<std::size_t>(r)]) = -e.matrix(r, f);
  }
  return Subspace<Scalar>::row_space(basis);
}

template <class Scalar>
Subspace<Scalar> span(std::span<const VectorX<Scalar>> vectors, Index ambient_dim) {
  MatrixX<Scalar> m(static_cast<Index>(vectors.size()), ambient_dim);
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].size() != ambient_dim) throw dimension_error("span: vector length does not match ambient dimension");
    m.row(static_cast<Index>(k)) = vectors[k].transpose();
  }
  return Subspace<Scalar>::row_space(m);
}

template <class Scalar>
Subspace<Scalar> span(const std::vector<VectorX<Scalar>>& vectors, Index ambient_dim) {
  return span(std::span<const VectorX<Scalar>>(vectors), ambient_dim);
}

// { v : <v, w>_form = 0 for all w in s }, with <v, w> = w^T form v.
template <class Scalar>
Subspace<Scalar> complement_under_form(const Subspace<Scalar>& s, const MatrixX<Scalar>& form) {
  const Index n = s.ambient_dim();
  if (form.rows() != n || form.cols() != n) throw dimension_error("form must be square of the ambient dimension");
  if (rref(form).rank != n) throw degenerate_form_error("bilinear form is degenerate");
  if (s.dim() == 0) return Subspace<Scalar>::full(n);
  MatrixX<Scalar> constraints = s.basis() * form;
  return kernel(constraints);
}

// b is a subset of a.
template <class Scalar>
bool subspace_contains(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw dimension_error("subspaces live in different ambient spaces");
  if (b.dim() > a.dim()) return false;
  for (Index r = 0; r < b.dim(); ++r) {
    if (!a.contains_vector(b.basis().row(r).transpose())) return false;
  }
  return true;
}

template <class Scalar>
bool subspace_equal(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw dimension_error("subspaces live in different ambient spaces");
  return a == b;
}

// Sum of two subspaces of the same ambient space.
template <class Scalar>
Subspace<Scalar> subspace_sum(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw dimension_error("subspaces live in different ambient spaces");
  MatrixX<Scalar> stacked(a.dim() + b.dim(), a.ambient_dim());
  stacked << a.basis(), b.basis();
  return Subspace<Scalar>::row_space(stacked);
}

// Incremental span of many sparse vectors in a large ambient space. Rows are
// kept in semi-echelon form (leading 1 at a distinct pivot, zeros at earlier
// pivots of the rows reduced before it); subspace() back-substitutes to RREF.
template <class Scalar>
class SpanBuilder {
 public:
  using Entry = std::pair<Index, Scalar>;
  using SparseRow = std::vector<Entry>;

  explicit SpanBuilder(Index ambient_dim) : ambient_(ambient_dim), work_(static_cast<std::size_t>(ambient_dim)) {}

  Index ambient_dim() const { return ambient_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }

  // Returns true iff the vector enlarged the span. Entries may repeat columns.
  bool add(std::span<const Entry> v) {
    const Scalar zero(0);
    std::vector<Index> touched;
    for (const auto& [c, x] : v) {
      if (c < 0 || c >= ambient_) throw dimension_error("SpanBuilder: column out of range");
      work_[static_cast<std::size_t>(c)] += x;
      touched.push_back(c);
    }
    if (touched.empty()) return false;
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());

    // Pivots are visited in increasing order; fill-in only lands to the right.
    Index lowest = touched.front();
    for (auto it = rows_.lower_bound(lowest); it != rows_.end(); ++it) {
      Scalar& f = work_[static_cast<std::size_t>(it->first)];
      if (f == zero) continue;
      const Scalar factor = f;
      for (const auto& [c, x] : it->second) {
        Scalar& w = work_[static_cast<std::size_t>(c)];
        if (w == zero) touched.push_back(c);
        w -= factor * x;
      }
    }

    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    SparseRow row;
    for (Index c : touched) {
      Scalar& w = work_[static_cast<std::size_t>(c)];
      if (w != zero) row.emplace_back(c, w);
      w = zero;
    }
    if (row.empty()) return false;
    const Scalar inv = Scalar(1) / row.front().second;
    for (auto& e : row) e.second *= inv;
    const Index pivot = row.front().first;
    rows_.emplace(pivot, std::move(row));
    return true;
  }

  bool add(const SparseRow& v) { return add(std::span<const Entry>(v)); }

  std::vector<Index> pivots() const {
    std::vector<Index> p;
    p.reserve(rows_.size());
    for (const auto& kv : rows_) p.push_back(kv.first);
    return p;
  }

  // Basis rows in semi-echelon form, by increasing pivot.
  std::vector<SparseRow> rows() const {
    std::vector<SparseRow> out;
    out.reserve(rows_.size());
    for (const auto& kv : rows_) out.push_back(kv.second);
    return out;
  }

  Subspace<Scalar> subspace() const {
    const Scalar zero(0);
    const Index r = rank();
    MatrixX<Scalar> basis = MatrixX<Scalar>::Zero(r, ambient_);
    std::vector<Index> piv = pivots();
    std::map<Index, Index> row_of;
    for (Index k = 0; k < r; ++k) row_of[piv[static_cast<std::size_t>(k)]] = k;
    Index k = 0;
    for (const auto& kv : rows_) {
      for (const auto& [c, x] : kv.second) basis(k, c) = x;
      ++k;
    }
    // Clear entries above each pivot, last pivot first.
    for (Index k2 = r - 1; k2 >= 0; --k2) {
      const Index p = piv[static_cast<std::size_t>(k2)];
      for (Index i = 0; i < k2; ++i) {
        const Scalar f = basis(i, p);
        if (f == zero) continue;
        for (Index c = p; c < ambient_; ++c) {
          if (basis(k2, c) != zero) basis(i, c) -= f * basis(k2, c);
        }
      }
    }
    return Subspace<Scalar>::from_rref(std::move(basis), std::move(piv));
  }

 private:
  Index ambient_;
  std::vector<Scalar> work_;
  std::map<Index, SparseRow> rows_;
};

}  // namespace operad
