#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liesc/error.hpp"
#include "liesc/exact_arith.hpp"
#include "liesc/linear.hpp"

namespace liesc {

/// Structure constants c_{ij}^k stored for i < j only (0-based here).
/// [e_j, e_i] is derived by antisymmetry and [e_i, e_i] is identically zero.
class StructureConstants {
 public:
  StructureConstants(Domain domain, std::size_t dim)
      : domain_(domain), dim_(dim), upper_(dim * (dim > 0 ? dim - 1 : 0) / 2, zero_vector(domain, dim)) {}

  Domain domain() const noexcept { return domain_; }
  std::size_t dim() const noexcept { return dim_; }

  /// Sets [e_i, e_j] = value. For i > j the negation is stored at (j, i).
  void set(std::size_t i, std::size_t j, Vector value) {
    check_index(i);
    check_index(j);
    if (i == j) throw Error(ErrorCode::IndexOutOfRange, "[e_i, e_i] is zero by construction");
    if (value.size() != dim_) throw Error(ErrorCode::AmbientMismatch, "bracket value has wrong width");
    for (const auto& s : value) {
      if (!(s.domain() == domain_)) throw Error(ErrorCode::DomainMismatch, s.domain().name() + " vs " + domain_.name());
    }
    if (i > j) {
      value = -value;
      std::swap(i, j);
    }
    upper_[index(i, j)] = std::move(value);
  }

  /// Stored value for i < j.
  const Vector& upper(std::size_t i, std::size_t j) const { return upper_[index(i, j)]; }

  Vector get(std::size_t i, std::size_t j) const {
    check_index(i);
    check_index(j);
    if (i == j) return zero_vector(domain_, dim_);
    if (i < j) return upper(i, j);
    return -upper(j, i);
  }

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  void check_index(std::size_t i) const {
    if (i >= dim_) throw Error(ErrorCode::IndexOutOfRange, "basis index " + std::to_string(i + 1) + " exceeds dimension");
  }
  std::size_t index(std::size_t i, std::size_t j) const { return i * dim_ - i * (i + 1) / 2 + (j - i - 1); }

  Domain domain_;
  std::size_t dim_;
  std::vector<Vector> upper_;
};

/// A finite-dimensional Lie algebra on a fixed basis e_1..e_n. Immutable once constructed;
/// construction rejects structure constants that break the Jacobi identity.
class LieAlgebra {
 public:
  explicit LieAlgebra(StructureConstants sc, std::vector<std::string> basis_names = {})
      : sc_(std::move(sc)), names_(std::move(basis_names)) {
    const std::size_t n = sc_.dim();
    if (!names_.empty() && names_.size() != n) {
      throw Error(ErrorCode::IndexOutOfRange, "basis_names has " + std::to_string(names_.size()) + " entries for dim " +
                                                  std::to_string(n));
    }
    table_.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) table_.push_back(sc_.get(i, j));
    }
    validate_jacobi();
  }

  Domain domain() const noexcept { return sc_.domain(); }
  std::size_t dim() const noexcept { return sc_.dim(); }
  const StructureConstants& structure_constants() const noexcept { return sc_; }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }

  /// [e_i, e_j] for 0-based indices.
  const Vector& basis_bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  Vector bracket(const Vector& x, const Vector& y) const {
    const std::size_t n = dim();
    if (x.size() != n || y.size() != n) throw Error(ErrorCode::AmbientMismatch, "bracket operand width differs from dim");
    Vector out = zero_vector(domain(), n);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || y[j].is_zero()) continue;
        add_scaled(out, x[i] * y[j], table_[i * n + j]);
      }
    }
    return out;
  }

  Subspace zero_space() const { return Subspace::zero(domain(), dim()); }
  Subspace full_space() const { return Subspace::full(domain(), dim()); }
  Vector basis_vector(std::size_t i) const { return unit_vector(domain(), dim(), i); }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.sc_ == b.sc_ && a.names_ == b.names_;
  }

 private:
  void validate_jacobi() const {
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
          Vector total = bracket(basis_bracket(i, j), basis_vector(k));
          add_scaled(total, Scalar::one(domain()), bracket(basis_bracket(j, k), basis_vector(i)));
          add_scaled(total, Scalar::one(domain()), bracket(basis_bracket(k, i), basis_vector(j)));
          if (!is_zero(total)) {
            throw JacobiViolation({i + 1, j + 1, k + 1}, "Jacobi identity fails on basis triple (" + std::to_string(i + 1) +
                                                             "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
          }
        }
      }
    }
  }

  StructureConstants sc_;
  std::vector<std::string> names_;
  std::vector<Vector> table_;
};

inline Vector bracket(const LieAlgebra& L, const Vector& x, const Vector& y) { return L.bracket(x, y); }

namespace detail {

inline void require_ambient(const LieAlgebra& L, const Subspace& u) {
  if (u.ambient_dim() != L.dim()) {
    throw Error(ErrorCode::AmbientMismatch,
                "subspace of ambient " + std::to_string(u.ambient_dim()) + " in algebra of dim " + std::to_string(L.dim()));
  }
  if (!(u.domain() == L.domain())) throw Error(ErrorCode::DomainMismatch, u.domain().name() + " vs " + L.domain().name());
}

}  // namespace detail

inline Subspace bracket_spaces(const LieAlgebra& L, const Subspace& u, const Subspace& w) {
  detail::require_ambient(L, u);
  detail::require_ambient(L, w);
  Matrix products(L.domain(), 0, L.dim());
  for (std::size_t a = 0; a < u.dim(); ++a) {
    const Vector x = u.basis().row(a);
    for (std::size_t b = 0; b < w.dim(); ++b) products.append_row(L.bracket(x, w.basis().row(b)));
  }
  return canonicalize(products);
}

/// L^2 = [L, L].
inline Subspace derived_algebra(const LieAlgebra& L) { return bracket_spaces(L, L.full_space(), L.full_space()); }

enum class SeriesKind { lower, upper };

struct SeriesReport {
  SeriesKind kind;
  std::vector<Subspace> terms;
  /// Absent when the series stabilises before reaching {0} (lower) or L (upper).
  std::optional<std::size_t> nilpotency_class;

  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> out;
    for (const auto& t : terms) out.push_back(t.dim());
    return out;
  }
};

/// terms[0] = L^1 = L, terms[i] = L^{i+1}, iterated until the term repeats.
inline SeriesReport lower_central_series(const LieAlgebra& L) {
  SeriesReport report{SeriesKind::lower, {L.full_space()}, std::nullopt};
  while (!report.terms.back().is_zero()) {
    Subspace next = bracket_spaces(L, L.full_space(), report.terms.back());
    if (next == report.terms.back()) break;
    report.terms.push_back(std::move(next));
  }
  if (report.terms.back().is_zero()) report.nilpotency_class = report.terms.size() - 1;
  return report;
}

/// terms[0] = Z_0 = {0}; Z_{i+1} = {x : [x, L] ⊆ Z_i}.
inline SeriesReport upper_central_series(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  SeriesReport report{SeriesKind::upper, {L.zero_space()}, std::nullopt};
  while (!report.terms.back().is_full()) {
    const Subspace ann = annihilator(report.terms.back());
    Matrix equations(L.domain(), 0, n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t a = 0; a < ann.dim(); ++a) {
        Vector row = zero_vector(L.domain(), n);
        for (std::size_t i = 0; i < n; ++i) {
          const Vector& prod = L.basis_bracket(i, j);
          Scalar acc = Scalar::zero(L.domain());
          for (std::size_t k = 0; k < n; ++k) {
            if (!prod[k].is_zero() && !ann.basis()(a, k).is_zero()) acc += prod[k] * ann.basis()(a, k);
          }
          row[i] = acc;
        }
        equations.append_row(row);
      }
    }
    Subspace next = kernel(equations);
    if (next == report.terms.back()) break;
    report.terms.push_back(std::move(next));
  }
  if (report.terms.back().is_full()) report.nilpotency_class = report.terms.size() - 1;
  return report;
}

/// C_L(S) = {x : [x, s] = 0 for all s in S}.
inline Subspace centralizer(const LieAlgebra& L, const Subspace& s) {
  detail::require_ambient(L, s);
  const std::size_t n = L.dim();
  Matrix equations(L.domain(), 0, n);
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const Vector sv = s.basis().row(r);
    std::vector<Vector> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) images.push_back(L.bracket(L.basis_vector(i), sv));
    for (std::size_t k = 0; k < n; ++k) {
      Vector row = zero_vector(L.domain(), n);
      bool nonzero = false;
      for (std::size_t i = 0; i < n; ++i) {
        row[i] = images[i][k];
        nonzero = nonzero || !row[i].is_zero();
      }
      if (nonzero) equations.append_row(row);
    }
  }
  return kernel(equations);
}

inline Subspace center(const LieAlgebra& L) { return centralizer(L, L.full_space()); }

inline bool is_subalgebra(const LieAlgebra& L, const Subspace& u) {
  return contains(u, bracket_spaces(L, u, u));
}

inline bool is_ideal(const LieAlgebra& L, const Subspace& u) {
  return contains(u, bracket_spaces(L, L.full_space(), u));
}

/// Z(M) = M ∩ C_L(M) for a subalgebra M.
inline Subspace subalgebra_centered(const LieAlgebra& L, const Subspace& m) {
  if (!is_subalgebra(L, m)) throw Error(ErrorCode::NotASubalgebra, "center requested for a non-subalgebra");
  return intersect(m, centralizer(L, m));
}

inline bool is_nilpotent(const LieAlgebra& L) { return lower_central_series(L).nilpotency_class.has_value(); }

inline bool is_abelian(const LieAlgebra& L) { return derived_algebra(L).is_zero(); }

/// Φ(L); for nilpotent L this is L^2.
inline Subspace frattini(const LieAlgebra& L) {
  if (!is_nilpotent(L)) throw Error(ErrorCode::NotNilpotent, "Frattini subalgebra requested for a non-nilpotent algebra");
  return derived_algebra(L);
}

/// Smallest bracket-closed subspace containing the generators.
inline Subspace generated_subalgebra(const LieAlgebra& L, std::span<const Vector> gens) {
  for (const auto& g : gens) {
    if (g.size() != L.dim()) throw Error(ErrorCode::AmbientMismatch, "generator width differs from dim");
  }
  Subspace current = span(L.domain(), L.dim(), gens);
  for (std::size_t step = 0; step <= L.dim(); ++step) {
    Subspace next = sum(current, bracket_spaces(L, current, current));
    if (next == current) return current;
    current = std::move(next);
  }
  return current;
}

inline Subspace generated_subalgebra(const LieAlgebra& L, std::initializer_list<Vector> gens) {
  return generated_subalgebra(L, std::span<const Vector>(gens.begin(), gens.size()));
}

}  // namespace liesc
