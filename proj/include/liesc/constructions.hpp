#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "liesc/error.hpp"
#include "liesc/lie_algebra.hpp"
#include "liesc/linear.hpp"

namespace liesc {

/// A(n): every bracket zero.
inline LieAlgebra abelian(std::size_t n, Domain domain) { return LieAlgebra(StructureConstants(domain, n)); }

/// H(m) on (x_1, ..., x_{2m}, x) with [x_{2i-1}, x_{2i}] = x.
inline LieAlgebra heisenberg(std::size_t m, Domain domain) {
  if (m < 1) throw Error(ErrorCode::IndexOutOfRange, "heisenberg requires m >= 1");
  const std::size_t n = 2 * m + 1;
  StructureConstants sc(domain, n);
  for (std::size_t i = 0; i < m; ++i) sc.set(2 * i, 2 * i + 1, unit_vector(domain, n, n - 1));
  return LieAlgebra(std::move(sc));
}

/// Model filiform algebra: [e_1, e_i] = e_{i+1} for 2 <= i <= n-1.
inline LieAlgebra filiform_standard(std::size_t n, Domain domain) {
  if (n < 3) throw Error(ErrorCode::IndexOutOfRange, "filiform_standard requires n >= 3");
  StructureConstants sc(domain, n);
  for (std::size_t i = 1; i + 1 < n; ++i) sc.set(0, i, unit_vector(domain, n, i + 1));
  return LieAlgebra(std::move(sc));
}

/// Strictly upper triangular k x k matrices under the commutator, basis E_ab (a < b) in row-major order.
inline LieAlgebra strictly_upper_triangular(std::size_t k, Domain domain) {
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) units.emplace_back(a, b);
  }
  const std::size_t n = units.size();
  auto index_of = [&](std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < n; ++i) {
      if (units[i] == std::pair{a, b}) return i;
    }
    throw Error(ErrorCode::IndexOutOfRange, "matrix unit outside the strict upper triangle");
  };
  StructureConstants sc(domain, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // [E_ab, E_cd] = δ_bc E_ad − δ_da E_cb
      const auto [a, b] = units[i];
      const auto [c, d] = units[j];
      Vector v = zero_vector(domain, n);
      if (b == c) v[index_of(a, d)] += Scalar::one(domain);
      if (d == a) v[index_of(c, b)] -= Scalar::one(domain);
      if (!is_zero(v)) sc.set(i, j, std::move(v));
    }
  }
  return LieAlgebra(std::move(sc));
}

inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  if (!(a.domain() == b.domain())) throw Error(ErrorCode::DomainMismatch, a.domain().name() + " vs " + b.domain().name());
  const Domain d = a.domain();
  const std::size_t n = a.dim() + b.dim();
  StructureConstants sc(d, n);
  auto place = [&](const LieAlgebra& part, std::size_t offset) {
    for (std::size_t i = 0; i < part.dim(); ++i) {
      for (std::size_t j = i + 1; j < part.dim(); ++j) {
        const Vector& v = part.basis_bracket(i, j);
        if (is_zero(v)) continue;
        Vector w = zero_vector(d, n);
        for (std::size_t k = 0; k < part.dim(); ++k) w[offset + k] = v[k];
        sc.set(offset + i, offset + j, std::move(w));
      }
    }
  };
  place(a, 0);
  place(b, a.dim());
  return LieAlgebra(std::move(sc));
}

/// A subalgebra viewed as an algebra in its own right.
struct Restriction {
  LieAlgebra algebra;
  /// Row r is the image in the parent of the restricted algebra's basis vector r.
  Matrix inclusion;
  Subspace image;
};

/// Structure constants of U expressed in U's canonical basis.
inline Restriction restrict(const LieAlgebra& L, const Subspace& u) {
  if (!is_subalgebra(L, u)) throw Error(ErrorCode::NotASubalgebra, "restrict requires a subalgebra");
  const std::size_t k = u.dim();
  StructureConstants sc(L.domain(), k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      Vector v = coordinates(L.bracket(u.basis().row(a), u.basis().row(b)), u);
      if (!is_zero(v)) sc.set(a, b, std::move(v));
    }
  }
  return Restriction{LieAlgebra(std::move(sc)), u.basis(), u};
}

/// Maps a subspace of the restricted algebra's coordinates into the parent.
inline Subspace push_forward(const Restriction& r, const Subspace& inner) { return image(inner, r.inclusion); }

/// Coordinates, in the restricted algebra, of a parent subspace lying inside the image.
inline Subspace pull_back(const Restriction& r, const Subspace& outer) {
  if (!contains(r.image, outer)) throw Error(ErrorCode::NotContained, "subspace does not lie in the restricted image");
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < outer.dim(); ++i) rows.push_back(coordinates(outer.basis().row(i), r.image));
  return span(r.algebra.domain(), r.algebra.dim(), rows);
}

/// Identifies span(source rows) ⊆ Z(left) with span(target rows) ⊆ Z(right), row i ↦ row i.
struct CentralProductSpec {
  LieAlgebra left;
  LieAlgebra right;
  Matrix source;
  Matrix target;
};

struct CentralProduct {
  LieAlgebra algebra;
  Matrix left_embedding;
  Matrix right_embedding;
  Subspace left_image;
  Subspace right_image;
  Subspace identified;
  /// img(left) ∩ img(right) = Z(L); false means a central product only in the weak sense.
  bool strong;
};

/// Quotient of left ⊕ right by the graph {(z, −φ(z))}, on the canonical complement of the graph.
inline CentralProduct central_product(const CentralProductSpec& spec) {
  const LieAlgebra& A = spec.left;
  const LieAlgebra& B = spec.right;
  if (!(A.domain() == B.domain())) throw Error(ErrorCode::DomainMismatch, A.domain().name() + " vs " + B.domain().name());
  const Domain d = A.domain();
  if (spec.source.cols() != A.dim() || spec.target.cols() != B.dim()) {
    throw Error(ErrorCode::AmbientMismatch, "identification rows have the wrong width");
  }
  const std::size_t k = spec.source.rows();
  if (spec.target.rows() != k || canonicalize(spec.source).dim() != k || canonicalize(spec.target).dim() != k) {
    throw Error(ErrorCode::NotInvertible, "identification is not a linear isomorphism");
  }
  const Subspace za = center(A);
  const Subspace zb = center(B);
  for (std::size_t r = 0; r < k; ++r) {
    if (!member(spec.source.row(r), za) || !member(spec.target.row(r), zb)) {
      throw Error(ErrorCode::IdentificationNotCentral, "identified vectors must be central");
    }
  }

  const std::size_t na = A.dim();
  const std::size_t big = na + B.dim();
  const LieAlgebra sum_algebra = direct_sum(A, B);
  Matrix graph_rows(d, 0, big);
  for (std::size_t r = 0; r < k; ++r) {
    Vector g = zero_vector(d, big);
    for (std::size_t i = 0; i < na; ++i) g[i] = spec.source(r, i);
    for (std::size_t i = 0; i < B.dim(); ++i) g[na + i] = -spec.target(r, i);
    graph_rows.append_row(g);
  }
  const Subspace graph = canonicalize(graph_rows);
  std::vector<bool> is_pivot(big, false);
  for (auto p : graph.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> kept;
  for (std::size_t c = 0; c < big; ++c) {
    if (!is_pivot[c]) kept.push_back(c);
  }
  auto project = [&](const Vector& v) {
    const Vector red = reduce(v, graph);
    Vector out;
    out.reserve(kept.size());
    for (auto c : kept) out.push_back(red[c]);
    return out;
  };

  const std::size_t n = kept.size();
  StructureConstants sc(d, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      Vector v = project(sum_algebra.basis_bracket(kept[a], kept[b]));
      if (!is_zero(v)) sc.set(a, b, std::move(v));
    }
  }
  LieAlgebra L(std::move(sc));

  Matrix left_embedding(d, 0, n);
  for (std::size_t i = 0; i < na; ++i) left_embedding.append_row(project(unit_vector(d, big, i)));
  Matrix right_embedding(d, 0, n);
  for (std::size_t i = 0; i < B.dim(); ++i) right_embedding.append_row(project(unit_vector(d, big, na + i)));

  const Subspace left_image = image(A.full_space(), left_embedding);
  const Subspace right_image = image(B.full_space(), right_embedding);
  const Subspace identified = image(canonicalize(spec.source), left_embedding);
  const Subspace meet = intersect(left_image, right_image);
  const Subspace zl = center(L);

  if (!bracket_spaces(L, left_image, right_image).is_zero()) {
    throw Error(ErrorCode::InternalAssertionFailed, "central product factors do not commute");
  }
  if (!(meet == identified)) {
    throw Error(ErrorCode::InternalAssertionFailed, "factor images meet outside the identified subspace");
  }
  const Subspace z_left = subalgebra_centered(L, left_image);
  const Subspace z_right = subalgebra_centered(L, right_image);
  if (!(zl == sum(z_left, z_right)) || !(intersect(z_left, z_right) == meet)) {
    throw Error(ErrorCode::InternalAssertionFailed, "central product center identities fail");
  }
  return CentralProduct{std::move(L), std::move(left_embedding), std::move(right_embedding), left_image, right_image,
                        identified, meet == zl};
}

/// Central product identifying the canonical center bases of both factors, first `count` rows each.
inline CentralProduct central_product_on_centers(const LieAlgebra& left, const LieAlgebra& right, std::size_t count) {
  const Subspace za = center(left);
  const Subspace zb = center(right);
  if (count > za.dim() || count > zb.dim()) {
    throw Error(ErrorCode::NotInvertible, "cannot identify more central directions than either center has");
  }
  Matrix source(left.domain(), 0, left.dim());
  Matrix target(right.domain(), 0, right.dim());
  for (std::size_t r = 0; r < count; ++r) {
    source.append_row(za.basis().row(r));
    target.append_row(zb.basis().row(r));
  }
  return central_product(CentralProductSpec{left, right, std::move(source), std::move(target)});
}

struct CatalogEntry {
  std::string id;
  LieAlgebra algebra;
};

inline constexpr std::uint64_t kDefaultCatalogSeed = 20240601;
inline constexpr std::size_t kCatalogMaxDim = 8;

/// Deterministic test corpus: named families, direct sums, central products, and seeded
/// random nilpotent algebras taken as generated subalgebras of strictly upper triangular matrices.
inline std::vector<CatalogEntry> catalog(Domain domain, std::size_t max_dim,
                                         std::uint64_t seed = kDefaultCatalogSeed, std::size_t random_count = 24) {
  if (!domain.is_finite()) throw Error(ErrorCode::InfiniteDomain, "catalog requires a finite domain");
  if (max_dim > kCatalogMaxDim) throw Error(ErrorCode::TooLarge, "catalog max_dim is capped at 8");
  std::vector<CatalogEntry> out;
  auto add = [&](std::string id, LieAlgebra L) {
    if (L.dim() >= 1 && L.dim() <= max_dim) out.push_back({std::move(id), std::move(L)});
  };
  const auto name = [](const char* family, std::size_t k) { return std::string(family) + "(" + std::to_string(k) + ")"; };

  for (std::size_t n = 1; n <= max_dim; ++n) add(name("A", n), abelian(n, domain));
  for (std::size_t m = 1; 2 * m + 1 <= max_dim; ++m) add(name("H", m), heisenberg(m, domain));
  for (std::size_t n = 3; n <= max_dim; ++n) add(name("Fil", n), filiform_standard(n, domain));

  // Central products identifying one central direction.
  auto add_cp = [&](std::string id, const LieAlgebra& a, const LieAlgebra& b) {
    if (a.dim() + b.dim() - 1 <= max_dim) add(std::move(id), central_product_on_centers(a, b, 1).algebra);
  };
  add_cp("H(1)*H(1)", heisenberg(1, domain), heisenberg(1, domain));
  add_cp("H(1)*Fil(4)", heisenberg(1, domain), filiform_standard(4, domain));
  add_cp("H(1)*(H(1)+A(1))", heisenberg(1, domain), direct_sum(heisenberg(1, domain), abelian(1, domain)));
  add_cp("H(1)*H(2)", heisenberg(1, domain), heisenberg(2, domain));
  add_cp("Fil(4)*Fil(4)", filiform_standard(4, domain), filiform_standard(4, domain));
  add_cp("H(1)*(Fil(4)+A(1))", heisenberg(1, domain), direct_sum(filiform_standard(4, domain), abelian(1, domain)));

  // Random nilpotent algebras: closures of sparse random strictly upper triangular generators.
  std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(domain.modulus()) << 32) ^ max_dim);
  const std::uint32_t p = domain.modulus();
  std::vector<LieAlgebra> seen;
  std::size_t produced = 0;
  for (std::size_t attempt = 0; attempt < 100 * random_count && produced < random_count; ++attempt) {
    const std::size_t k = 4 + static_cast<std::size_t>(rng() % 3);
    const std::size_t gen_count = 2 + static_cast<std::size_t>(rng() % 3);
    const LieAlgebra ambient = strictly_upper_triangular(k, domain);
    std::vector<Vector> gens;
    for (std::size_t g = 0; g < gen_count; ++g) {
      Vector v = zero_vector(domain, ambient.dim());
      for (auto& s : v) {
        if (rng() % 3 == 0) s = Scalar(domain, static_cast<std::int64_t>(rng() % p));
      }
      gens.push_back(std::move(v));
    }
    const Subspace closure = generated_subalgebra(ambient, gens);
    if (closure.dim() < 3 || closure.dim() > max_dim) continue;
    LieAlgebra candidate = restrict(ambient, closure).algebra;
    if (std::find(seen.begin(), seen.end(), candidate) != seen.end()) continue;
    seen.push_back(candidate);
    add("Rand" + std::to_string(produced) + "[u" + std::to_string(k) + ",dim" + std::to_string(closure.dim()) + "]",
        std::move(candidate));
    ++produced;
  }

  // Characteristic-2 algebras satisfying the supplement hypothesis; found by random search.
  using Bracket = std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>;
  auto unit_brackets = [&](std::size_t n, std::initializer_list<Bracket> brackets) {
    StructureConstants sc(domain, n);
    for (const auto& [i, j, ks] : brackets) {
      Vector v = zero_vector(domain, n);
      for (std::size_t k : ks) v[k - 1] = Scalar::one(domain);
      sc.set(i - 1, j - 1, std::move(v));
    }
    return LieAlgebra(std::move(sc));
  };
  if (p == 2 && max_dim >= 6) {
    add("Supp6a", unit_brackets(6, {{1, 4, {5}}, {1, 5, {2}}, {1, 6, {3}}, {2, 4, {3}}, {4, 5, {6}}}));
    add("Supp6b", unit_brackets(6, {{1, 2, {5}}, {1, 3, {4}}, {1, 5, {3}}, {1, 6, {4}}, {2, 3, {4}}, {2, 5, {4, 6}}}));
    add("Supp6c", unit_brackets(6, {{1, 4, {2}}, {1, 5, {3}}, {1, 6, {4}}, {2, 6, {3}}, {4, 6, {5}}}));
  }

  // Direct sums: every nonabelian entry above with A(k), then H(1) ⊕ H(1) and H(1) ⊕ Fil(4).
  const std::size_t base_count = out.size();
  for (std::size_t i = 0; i < base_count; ++i) {
    if (is_abelian(out[i].algebra)) continue;
    for (std::size_t k = 1; out[i].algebra.dim() + k <= max_dim; ++k) {
      add("(" + out[i].id + ")+" + name("A", k), direct_sum(out[i].algebra, abelian(k, domain)));
    }
  }
  if (max_dim >= 6) add("H(1)+H(1)", direct_sum(heisenberg(1, domain), heisenberg(1, domain)));
  if (max_dim >= 7) add("H(1)+Fil(4)", direct_sum(heisenberg(1, domain), filiform_standard(4, domain)));
  if (p == 2 && max_dim >= 7) {
    add("Supp7", unit_brackets(7, {{1, 5, {2, 6}}, {1, 6, {3, 7}}, {1, 7, {4}}, {3, 5, {4}}, {5, 6, {7}}}));
  }
  return out;
}

}  // namespace liesc
