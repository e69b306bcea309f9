#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "liesc/error.hpp"
#include "liesc/exact_arith.hpp"

namespace liesc {

/// Coordinate row over the fixed basis of the owning algebra.
using Vector = std::vector<Scalar>;

inline Vector zero_vector(Domain domain, std::size_t n) { return Vector(n, Scalar::zero(domain)); }

inline Vector unit_vector(Domain domain, std::size_t n, std::size_t i) {
  Vector v = zero_vector(domain, n);
  v.at(i) = Scalar::one(domain);
  return v;
}

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

/// acc += c * v
inline void add_scaled(Vector& acc, const Scalar& c, const Vector& v) {
  if (acc.size() != v.size()) throw Error(ErrorCode::AmbientMismatch, "vector widths differ");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) acc[i] += c * v[i];
  }
}

inline Vector operator+(Vector a, const Vector& b) {
  add_scaled(a, Scalar::one(b.empty() ? Domain::rational() : b.front().domain()), b);
  return a;
}

inline Vector operator-(const Vector& a) {
  Vector out = a;
  for (auto& s : out) s = -s;
  return out;
}

inline Vector scaled(const Scalar& c, Vector v) {
  for (auto& s : v) s *= c;
  return v;
}

/// Dense matrix whose entries all share one domain.
class Matrix {
 public:
  Matrix(Domain domain, std::size_t rows, std::size_t cols)
      : domain_(domain), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(domain)) {}

  static Matrix from_rows(Domain domain, std::size_t cols, std::span<const Vector> rows) {
    Matrix m(domain, 0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
  }

  Domain domain() const noexcept { return domain_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Scalar> row_view(std::size_t r) const {
    return std::span<const Scalar>(entries_).subspan(r * cols_, cols_);
  }
  Vector row(std::size_t r) const {
    auto v = row_view(r);
    return Vector(v.begin(), v.end());
  }
  std::vector<Vector> row_vectors() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
  }

  void append_row(const Vector& v) {
    if (v.size() != cols_) {
      throw Error(ErrorCode::AmbientMismatch,
                  "row of width " + std::to_string(v.size()) + " in matrix of width " + std::to_string(cols_));
    }
    for (const auto& s : v) {
      if (!(s.domain() == domain_)) throw Error(ErrorCode::DomainMismatch, s.domain().name() + " vs " + domain_.name());
    }
    entries_.insert(entries_.end(), v.begin(), v.end());
    ++rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  /// Row-reduces in place to reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> reduce_to_rref() {
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < cols_ && lead_row < rows_; ++c) {
      std::size_t pr = lead_row;
      while (pr < rows_ && (*this)(pr, c).is_zero()) ++pr;
      if (pr == rows_) continue;
      swap_rows(pr, lead_row);
      const Scalar inv = (*this)(lead_row, c).inverse();
      for (std::size_t k = c; k < cols_; ++k) (*this)(lead_row, k) *= inv;
      for (std::size_t r = 0; r < rows_; ++r) {
        if (r == lead_row || (*this)(r, c).is_zero()) continue;
        const Scalar f = (*this)(r, c);
        for (std::size_t k = c; k < cols_; ++k) {
          if (!(*this)(lead_row, k).is_zero()) (*this)(r, k) -= f * (*this)(lead_row, k);
        }
      }
      pivots.push_back(c);
      ++lead_row;
    }
    return pivots;
  }

  /// Drops rows past `count`.
  void truncate_rows(std::size_t count) {
    if (count >= rows_) return;
    entries_.resize(count * cols_);
    rows_ = count;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Domain domain_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

/// Row-vector times matrix: returns sum_i v[i] * m.row(i).
inline Vector times(const Vector& v, const Matrix& m) {
  if (v.size() != m.rows()) throw Error(ErrorCode::AmbientMismatch, "vector/matrix shape mismatch");
  Vector out = zero_vector(m.domain(), m.cols());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(i, c).is_zero()) out[c] += v[i] * m(i, c);
    }
  }
  return out;
}

/// Subspace of the ambient coordinate space held in unique reduced row echelon form.
class Subspace {
 public:
  static Subspace zero(Domain domain, std::size_t ambient_dim) {
    return Subspace(Matrix(domain, 0, ambient_dim), {});
  }
  static Subspace full(Domain domain, std::size_t ambient_dim) {
    Matrix id(domain, ambient_dim, ambient_dim);
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < ambient_dim; ++i) {
      id(i, i) = Scalar::one(domain);
      pivots.push_back(i);
    }
    return Subspace(std::move(id), std::move(pivots));
  }

  Domain domain() const noexcept { return basis_.domain(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_dim(); }

  const Matrix& basis() const noexcept { return basis_; }
  std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

  /// Canonical order: by dimension, then lexicographically on the flattened canonical basis.
  friend bool canonical_less(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) return a.ambient_dim() < b.ambient_dim();
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (std::size_t r = 0; r < a.dim(); ++r) {
      for (std::size_t c = 0; c < a.ambient_dim(); ++c) {
        const int cmp = compare(a.basis_(r, c), b.basis_(r, c));
        if (cmp != 0) return cmp < 0;
      }
    }
    return false;
  }

 private:
  friend Subspace canonicalize(const Matrix& vectors);

  Subspace(Matrix rref, std::vector<std::size_t> pivots) : basis_(std::move(rref)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

inline Subspace canonicalize(const Matrix& vectors) {
  Matrix m = vectors;
  auto pivots = m.reduce_to_rref();
  m.truncate_rows(pivots.size());
  return Subspace(std::move(m), std::move(pivots));
}

inline Subspace span(Domain domain, std::size_t ambient_dim, std::span<const Vector> vectors) {
  return canonicalize(Matrix::from_rows(domain, ambient_dim, vectors));
}

inline Subspace span(Domain domain, std::size_t ambient_dim, std::initializer_list<Vector> vectors) {
  return span(domain, ambient_dim, std::span<const Vector>(vectors.begin(), vectors.size()));
}

namespace detail {

inline void require_compatible(const Subspace& u, const Subspace& w) {
  if (!(u.domain() == w.domain())) throw Error(ErrorCode::DomainMismatch, u.domain().name() + " vs " + w.domain().name());
  if (u.ambient_dim() != w.ambient_dim()) {
    throw Error(ErrorCode::AmbientMismatch,
                std::to_string(u.ambient_dim()) + " vs " + std::to_string(w.ambient_dim()));
  }
}

}  // namespace detail

/// Reduces v modulo U: subtracts basis rows so every pivot coordinate of U becomes zero.
inline Vector reduce(Vector v, const Subspace& u) {
  if (v.size() != u.ambient_dim()) throw Error(ErrorCode::AmbientMismatch, "vector width differs from ambient");
  const auto& b = u.basis();
  for (std::size_t r = 0; r < u.dim(); ++r) {
    const std::size_t pc = u.pivots()[r];
    if (v[pc].is_zero()) continue;
    const Scalar f = v[pc];
    for (std::size_t c = pc; c < u.ambient_dim(); ++c) {
      if (!b(r, c).is_zero()) v[c] -= f * b(r, c);
    }
  }
  return v;
}

inline bool member(const Vector& v, const Subspace& u) { return is_zero(reduce(v, u)); }

/// Coefficients of v in U's canonical basis; v must lie in U.
inline Vector coordinates(const Vector& v, const Subspace& u) {
  if (!member(v, u)) throw Error(ErrorCode::NotContained, "vector does not lie in the subspace");
  Vector out;
  out.reserve(u.dim());
  for (auto pc : u.pivots()) out.push_back(v[pc]);
  return out;
}

/// True iff inner ⊆ outer.
inline bool contains(const Subspace& outer, const Subspace& inner) {
  detail::require_compatible(outer, inner);
  for (std::size_t r = 0; r < inner.dim(); ++r) {
    if (!member(inner.basis().row(r), outer)) return false;
  }
  return true;
}

inline Subspace sum(const Subspace& u, const Subspace& w) {
  detail::require_compatible(u, w);
  Matrix stacked = u.basis();
  for (std::size_t r = 0; r < w.dim(); ++r) stacked.append_row(w.basis().row(r));
  return canonicalize(stacked);
}

/// Solution space {x : E x = 0} for the equation rows of E.
inline Subspace kernel(const Matrix& equations) {
  Matrix m = equations;
  const auto pivots = m.reduce_to_rref();
  const std::size_t n = m.cols();
  const Domain d = m.domain();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix basis(d, 0, n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector x = zero_vector(d, n);
    x[f] = Scalar::one(d);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m(r, f);
    basis.append_row(x);
  }
  return canonicalize(basis);
}

/// {y : u · y = 0 for all u in U} under the standard pairing.
inline Subspace annihilator(const Subspace& u) { return kernel(u.basis()); }

inline Subspace intersect(const Subspace& u, const Subspace& w) {
  detail::require_compatible(u, w);
  return annihilator(sum(annihilator(u), annihilator(w)));
}

/// Vectors of W extending a basis of U to a basis of W, in W's canonical basis order.
inline std::vector<Vector> complement_basis(const Subspace& u, const Subspace& w) {
  if (!contains(w, u)) throw Error(ErrorCode::NotContained, "complement_basis requires U ⊆ W");
  std::vector<Vector> out;
  Subspace current = u;
  for (std::size_t r = 0; r < w.dim() && current.dim() < w.dim(); ++r) {
    Vector candidate = w.basis().row(r);
    if (member(candidate, current)) continue;
    current = sum(current, span(u.domain(), u.ambient_dim(), {candidate}));
    out.push_back(std::move(candidate));
  }
  return out;
}

/// Image of a subspace under the row map given by `rows` (one row per coordinate of U's ambient).
inline Subspace image(const Subspace& u, const Matrix& rows) {
  Matrix out(rows.domain(), 0, rows.cols());
  for (std::size_t r = 0; r < u.dim(); ++r) out.append_row(times(u.basis().row(r), rows));
  return canonicalize(out);
}

}  // namespace liesc
