#pragma once

#include <initializer_list>
#include <ostream>
#include <random>
#include <tuple>
#include <vector>

#include "liesc/io.hpp"
#include "liesc/liesc.hpp"

namespace liesc {

inline void PrintTo(const Scalar& s, std::ostream* os) { *os << s.to_string() << " in " << s.domain().name(); }
inline void PrintTo(const Subspace& s, std::ostream* os) { *os << io::format_subspace(s); }
inline void PrintTo(const Domain& d, std::ostream* os) { *os << d.name(); }

}  // namespace liesc

namespace support {

using namespace liesc;

/// (i, j, [(k, c)]) with 1-based indices.
using Term = std::pair<std::size_t, std::int64_t>;
using Bracket = std::tuple<std::size_t, std::size_t, std::vector<Term>>;

inline LieAlgebra algebra(Domain d, std::size_t n, std::initializer_list<Bracket> brackets) {
  StructureConstants sc(d, n);
  for (const auto& [i, j, terms] : brackets) {
    Vector v = zero_vector(d, n);
    for (const auto& [k, c] : terms) v[k - 1] = Scalar(d, c);
    sc.set(i - 1, j - 1, std::move(v));
  }
  return LieAlgebra(std::move(sc));
}

inline Vector vec(Domain d, std::initializer_list<std::int64_t> entries) {
  Vector v;
  for (auto e : entries) v.emplace_back(d, e);
  return v;
}

inline Vector e(Domain d, std::size_t n, std::size_t i) { return unit_vector(d, n, i - 1); }

inline Scalar random_scalar(Domain d, std::mt19937_64& rng) {
  if (d.is_prime()) return Scalar(d, static_cast<std::int64_t>(rng() % d.modulus()));
  const auto num = static_cast<std::int64_t>(rng() % 41) - 20;
  const auto den = static_cast<std::int64_t>(rng() % 9) + 1;
  return Scalar(d, num) / Scalar(d, den);
}

/// Sparse-ish vectors so random subspaces land on every dimension.
inline Vector random_vector(Domain d, std::size_t n, std::mt19937_64& rng) {
  Vector v = zero_vector(d, n);
  for (auto& s : v) {
    if (rng() % 2 == 0) s = random_scalar(d, rng);
  }
  return v;
}

inline Subspace random_subspace(Domain d, std::size_t n, std::mt19937_64& rng) {
  const std::size_t count = rng() % (n + 1);
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < count; ++i) rows.push_back(random_vector(d, n, rng));
  return span(d, n, rows);
}

/// Nilpotent, Frattinian, supplement hypothesis holds, Z(L) = span{e2, e4} not inside L^2.
inline LieAlgebra supp7() {
  const Domain f2 = Domain::prime(2);
  return algebra(f2, 7,
                 {{1, 5, {{2, 1}, {6, 1}}}, {1, 6, {{3, 1}, {7, 1}}}, {1, 7, {{4, 1}}}, {3, 5, {{4, 1}}},
                  {5, 6, {{7, 1}}}});
}

/// Reaches the second case of the decomposition with every obligation holding.
inline LieAlgebra supp6c() {
  const Domain f2 = Domain::prime(2);
  return algebra(f2, 6,
                 {{1, 4, {{2, 1}}}, {1, 5, {{3, 1}}}, {1, 6, {{4, 1}}}, {2, 6, {{3, 1}}}, {4, 6, {{5, 1}}}});
}

}  // namespace support
