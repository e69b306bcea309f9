#include <gtest/gtest.h>

#include <set>

#include "liesc/liesc.hpp"
#include "support.hpp"

using namespace liesc;
using support::e;

namespace {

const Domain F2 = Domain::prime(2);
const Domain F3 = Domain::prime(3);
const Domain F5 = Domain::prime(5);
const Domain Q = Domain::rational();

std::size_t nonzero_brackets(const LieAlgebra& L) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    for (std::size_t j = i + 1; j < L.dim(); ++j) count += !is_zero(L.basis_bracket(i, j));
  }
  return count;
}

}  // namespace

TEST(Abelian, ZeroAndPositiveDimensions) {
  EXPECT_EQ(abelian(0, F2).dim(), 0u);
  EXPECT_TRUE(is_abelian(abelian(0, F2)));
  EXPECT_TRUE(is_abelian(abelian(5, Q)));
}

TEST(Heisenberg, Shape) {
  const LieAlgebra h1 = heisenberg(1, F3);
  EXPECT_EQ(h1.dim(), 3u);
  EXPECT_EQ(h1.bracket(e(F3, 3, 1), e(F3, 3, 2)), e(F3, 3, 3));
  EXPECT_EQ(nonzero_brackets(h1), 1u);
  const LieAlgebra h2 = heisenberg(2, F3);
  EXPECT_EQ(center(h2), span(F3, 5, {e(F3, 5, 5)}));
  EXPECT_EQ(derived_algebra(h2), center(h2));
  EXPECT_EQ(nonzero_brackets(h2), 2u);
  const LieAlgebra h3 = heisenberg(3, Q);
  EXPECT_EQ(lower_central_series(h3).nilpotency_class, 2u);
  EXPECT_EQ(h3.dim() - derived_algebra(h3).dim(), 6u);
}

TEST(Filiform, Shape) {
  // The 3-dimensional model is H(1).
  EXPECT_EQ(filiform_standard(3, F2), heisenberg(1, F2));
  const LieAlgebra f4 = filiform_standard(4, F3);
  EXPECT_EQ(derived_algebra(f4), span(F3, 4, {e(F3, 4, 3), e(F3, 4, 4)}));
  EXPECT_EQ(center(f4), span(F3, 4, {e(F3, 4, 4)}));
  for (std::size_t n = 3; n <= 8; ++n) {
    const LieAlgebra f = filiform_standard(n, F5);
    EXPECT_EQ(n - derived_algebra(f).dim(), 2u);
    EXPECT_EQ(lower_central_series(f).nilpotency_class, n - 1);
  }
}

TEST(DirectSum, Examples) {
  EXPECT_EQ(direct_sum(abelian(1, F2), abelian(2, F2)), abelian(3, F2));
  const LieAlgebra ha = direct_sum(heisenberg(1, F3), abelian(1, F3));
  EXPECT_EQ(center(ha).dim(), 2u);
  const LieAlgebra hf = direct_sum(heisenberg(1, F3), filiform_standard(5, F3));
  EXPECT_EQ(lower_central_series(hf).nilpotency_class, 4u);
  EXPECT_EQ(center(hf).dim(), 2u);
  try {
    direct_sum(abelian(1, F2), abelian(1, F3));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::DomainMismatch);
  }
}

TEST(CentralProduct, TwoHeisenbergsGiveH2Profile) {
  const CentralProduct cp = central_product_on_centers(heisenberg(1, F3), heisenberg(1, F3), 1);
  const LieAlgebra& L = cp.algebra;
  const LieAlgebra h2 = heisenberg(2, F3);
  EXPECT_EQ(L.dim(), 5u);
  EXPECT_EQ(center(L).dim(), center(h2).dim());
  EXPECT_EQ(derived_algebra(L).dim(), derived_algebra(h2).dim());
  EXPECT_EQ(lower_central_series(L).nilpotency_class, 2u);
  EXPECT_TRUE(bracket_spaces(L, cp.left_image, cp.right_image).is_zero());
  EXPECT_EQ(intersect(cp.left_image, cp.right_image), cp.identified);
  EXPECT_TRUE(verify_central_product(L, cp.left_image, cp.right_image).passed());
}

TEST(CentralProduct, TrivialIdentificationIsDirectSum) {
  const CentralProduct cp = central_product_on_centers(heisenberg(1, F2), filiform_standard(4, F2), 0);
  EXPECT_EQ(cp.algebra, direct_sum(heisenberg(1, F2), filiform_standard(4, F2)));
  EXPECT_TRUE(cp.identified.is_zero());
}

TEST(CentralProduct, RejectsNonCentralOrSingularIdentification) {
  const LieAlgebra h = heisenberg(1, F2);
  {
    Matrix src(F2, 0, 3);
    src.append_row(e(F2, 3, 1));
    Matrix tgt(F2, 0, 3);
    tgt.append_row(e(F2, 3, 3));
    try {
      central_product({h, h, src, tgt});
      FAIL();
    } catch (const Error& err) {
      EXPECT_EQ(err.code(), ErrorCode::IdentificationNotCentral);
    }
  }
  {
    const LieAlgebra ha = direct_sum(h, abelian(1, F2));
    Matrix src(F2, 0, 4);
    src.append_row(e(F2, 4, 3));
    src.append_row(e(F2, 4, 3));
    Matrix tgt(F2, 0, 4);
    tgt.append_row(e(F2, 4, 3));
    tgt.append_row(e(F2, 4, 4));
    try {
      central_product({ha, ha, src, tgt});
      FAIL();
    } catch (const Error& err) {
      EXPECT_EQ(err.code(), ErrorCode::NotInvertible);
    }
  }
}

TEST(CentralProduct, EmbeddingsAreHomomorphisms) {
  const LieAlgebra a = heisenberg(1, F3);
  const LieAlgebra b = filiform_standard(4, F3);
  const CentralProduct cp = central_product_on_centers(a, b, 1);
  const auto check = [&](const LieAlgebra& part, const Matrix& emb) {
    for (std::size_t i = 0; i < part.dim(); ++i) {
      for (std::size_t j = 0; j < part.dim(); ++j) {
        const Vector lhs = times(part.basis_bracket(i, j), emb);
        const Vector rhs = cp.algebra.bracket(emb.row(i), emb.row(j));
        EXPECT_EQ(lhs, rhs);
      }
    }
  };
  check(a, cp.left_embedding);
  check(b, cp.right_embedding);
}

TEST(Restrict, HeisenbergSlice) {
  const LieAlgebra h2 = heisenberg(2, F2);
  const Restriction r = restrict(h2, span(F2, 5, {e(F2, 5, 1), e(F2, 5, 2), e(F2, 5, 5)}));
  EXPECT_EQ(r.algebra.dim(), 3u);
  EXPECT_EQ(nonzero_brackets(r.algebra), 1u);
  EXPECT_EQ(r.algebra, heisenberg(1, F2));
  EXPECT_TRUE(is_abelian(restrict(h2, center(h2)).algebra));
  try {
    restrict(h2, span(F2, 5, {e(F2, 5, 1), e(F2, 5, 2)}));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::NotASubalgebra);
  }
}

TEST(Restrict, PushForwardAndPullBackAreInverse) {
  const LieAlgebra L = support::supp7();
  const Subspace u = derived_algebra(L);
  const Restriction r = restrict(L, sum(u, center(L)));
  for (const auto& s : all_subspaces(F2, r.algebra.dim())) {
    EXPECT_EQ(pull_back(r, push_forward(r, s)), s);
  }
}

TEST(Catalog, SmallCatalogContents) {
  const auto entries = catalog(F2, 3);
  std::set<std::string> ids;
  for (const auto& c : entries) ids.insert(c.id);
  for (const char* id : {"A(1)", "A(2)", "A(3)", "H(1)"}) EXPECT_TRUE(ids.count(id)) << id;
  for (const auto& c : entries) EXPECT_LE(c.algebra.dim(), 3u);
}

TEST(Catalog, DeterministicAndNilpotent) {
  const auto a = catalog(F3, 5);
  const auto b = catalog(F3, 5);
  ASSERT_EQ(a.size(), b.size());
  std::set<std::string> ids;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].id, b[i].id);
    EXPECT_EQ(a[i].algebra, b[i].algebra);
    EXPECT_TRUE(is_nilpotent(a[i].algebra)) << a[i].id;
    EXPECT_LE(a[i].algebra.dim(), 5u);
    EXPECT_TRUE(ids.insert(a[i].id).second) << "duplicate id " << a[i].id;
  }
}

TEST(Catalog, SeedChangesTheRandomEntries) {
  const auto a = catalog(F2, 6);
  const auto b = catalog(F2, 6, 7);
  bool differs = a.size() != b.size();
  for (std::size_t i = 0; !differs && i < a.size(); ++i) differs = !(a[i].algebra == b[i].algebra);
  EXPECT_TRUE(differs);
}

TEST(Catalog, SizesAndLimits) {
  EXPECT_GE(catalog(F2, 6).size() + catalog(F3, 5).size(), 30u);
  try {
    catalog(Q, 4);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::InfiniteDomain);
  }
  try {
    catalog(F2, 9);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::TooLarge);
  }
}
