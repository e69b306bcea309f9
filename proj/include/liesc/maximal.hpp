#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "liesc/error.hpp"
#include "liesc/lie_algebra.hpp"
#include "liesc/linear.hpp"

namespace liesc {

/// Maximal subalgebras of a nilpotent algebra, sorted by canonical_less.
struct MaximalEnumeration {
  std::vector<Subspace> items;

  std::size_t count() const noexcept { return items.size(); }
};

/// (p^d − 1)/(p − 1): the number of hyperplanes of an F_p-space of dimension d.
inline std::uint64_t hyperplane_count(std::uint64_t p, std::size_t d) {
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  for (std::size_t i = 0; i < d; ++i) {
    total += power;
    power *= p;
  }
  return total;
}

namespace detail {

/// All vectors of F_p^d whose first nonzero coordinate is 1, in lexicographic order.
inline std::vector<Vector> normalized_directions(Domain domain, std::size_t d) {
  const std::uint32_t p = domain.modulus();
  std::vector<Vector> out;
  for (std::size_t lead = 0; lead < d; ++lead) {
    const std::size_t tail = d - lead - 1;
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < tail; ++i) combos *= p;
    for (std::uint64_t code = 0; code < combos; ++code) {
      Vector v = zero_vector(domain, d);
      v[lead] = Scalar::one(domain);
      std::uint64_t c = code;
      for (std::size_t i = d; i-- > lead + 1;) {
        v[i] = Scalar(domain, static_cast<std::int64_t>(c % p));
        c /= p;
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

inline void require_enumerable(const LieAlgebra& L) {
  if (!L.domain().is_finite()) {
    throw Error(ErrorCode::InfiniteDomain, "maximal subalgebras can only be enumerated over a finite field");
  }
  if (L.dim() == 0) throw Error(ErrorCode::ZeroAlgebra, "the zero algebra has no maximal subalgebra");
}

}  // namespace detail

/// Every codimension-1 subspace containing L^2, one per normal direction in (L/L^2)^*.
inline MaximalEnumeration enumerate_maximal(const LieAlgebra& L) {
  detail::require_enumerable(L);
  if (!is_nilpotent(L)) throw Error(ErrorCode::NotNilpotent, "maximal subalgebra enumeration requires nilpotency");
  const Domain dom = L.domain();
  const Subspace derived = derived_algebra(L);
  const std::vector<Vector> complement = complement_basis(derived, L.full_space());
  const std::size_t d = complement.size();

  MaximalEnumeration out;
  for (const Vector& normal : detail::normalized_directions(dom, d)) {
    Matrix equation(dom, 0, d);
    equation.append_row(normal);
    const Subspace hyper = kernel(equation);
    Matrix rows = derived.basis();
    for (std::size_t r = 0; r < hyper.dim(); ++r) {
      Vector v = zero_vector(dom, L.dim());
      for (std::size_t i = 0; i < d; ++i) add_scaled(v, hyper.basis()(r, i), complement[i]);
      rows.append_row(v);
    }
    out.items.push_back(canonicalize(rows));
  }
  std::sort(out.items.begin(), out.items.end(), [](const Subspace& a, const Subspace& b) { return canonical_less(a, b); });
  return out;
}

struct BruteForceLimits {
  std::uint32_t max_prime = 2;
  std::size_t max_dim = 4;
};

/// Every subspace of F_p^n in reduced row echelon form.
inline std::vector<Subspace> all_subspaces(Domain domain, std::size_t n) {
  const std::uint32_t p = domain.modulus();
  std::vector<Subspace> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < n; ++c) {
      if (mask & (1u << c)) pivots.push_back(c);
    }
    // Free positions: row r, column c > pivots[r] that is not itself a pivot column.
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      for (std::size_t c = pivots[r] + 1; c < n; ++c) {
        if (!(mask & (1u << c))) free.emplace_back(r, c);
      }
    }
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < free.size(); ++i) combos *= p;
    for (std::uint64_t code = 0; code < combos; ++code) {
      Matrix m(domain, pivots.size(), n);
      for (std::size_t r = 0; r < pivots.size(); ++r) m(r, pivots[r]) = Scalar::one(domain);
      std::uint64_t c = code;
      for (const auto& [r, col] : free) {
        m(r, col) = Scalar(domain, static_cast<std::int64_t>(c % p));
        c /= p;
      }
      out.push_back(canonicalize(m));
    }
  }
  return out;
}

/// Oracle: maximal elements, under inclusion, among all proper subalgebras.
inline std::vector<Subspace> brute_force_maximal(const LieAlgebra& L, BruteForceLimits limits = {}) {
  if (!L.domain().is_finite()) throw Error(ErrorCode::InfiniteDomain, "brute force requires a finite field");
  if (L.domain().modulus() > limits.max_prime || L.dim() > limits.max_dim) {
    throw Error(ErrorCode::TooLarge, "brute force limited to p <= " + std::to_string(limits.max_prime) +
                                         " and dim <= " + std::to_string(limits.max_dim));
  }
  if (L.dim() == 0) throw Error(ErrorCode::ZeroAlgebra, "the zero algebra has no maximal subalgebra");
  std::vector<Subspace> proper;
  for (auto& s : all_subspaces(L.domain(), L.dim())) {
    if (!s.is_full() && is_subalgebra(L, s)) proper.push_back(std::move(s));
  }
  std::vector<Subspace> out;
  for (const auto& s : proper) {
    const bool dominated = std::any_of(proper.begin(), proper.end(), [&](const Subspace& t) {
      return t.dim() > s.dim() && contains(t, s);
    });
    if (!dominated) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) { return canonical_less(a, b); });
  return out;
}

}  // namespace liesc
