#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liesc/constructions.hpp"
#include "liesc/error.hpp"
#include "liesc/frattinian.hpp"
#include "liesc/lie_algebra.hpp"
#include "liesc/linear.hpp"
#include "liesc/maximal.hpp"
#include "liesc/report.hpp"

namespace liesc {

enum class DecompositionCase { one, two };

inline std::string to_string(DecompositionCase c) { return c == DecompositionCase::one ? "one" : "two"; }

/// One extraction round: maximal M, partner N, factor E = Z(M) + Z(N), remainder C_{L_k}(E) = M ∩ N.
struct ExtractionStep {
  Subspace maximal;
  Subspace partner;
  Subspace factor;
  Subspace remainder;
};

struct DecompositionCertificate {
  DecompositionCase kind = DecompositionCase::one;
  /// Case one: the factors E_i. Case two: exactly [E, F].
  std::vector<Subspace> factors;
  std::vector<ExtractionStep> trace;
  std::size_t center_dim = 0;
  /// Case two with E != Z(L): the case-one factors of E.
  std::vector<Subspace> nested_factors;
};

/// A proof-step identity failed on a concrete instance.
class InternalAssertionFailure : public Error {
 public:
  InternalAssertionFailure(const std::string& what, std::vector<NamedSubspace> witnesses)
      : Error(ErrorCode::InternalAssertionFailed, what), witnesses_(std::move(witnesses)) {}

  const std::vector<NamedSubspace>& witnesses() const noexcept { return witnesses_; }

 private:
  std::vector<NamedSubspace> witnesses_;
};

class NotFrattinianError : public Error {
 public:
  explicit NotFrattinianError(Subspace witness)
      : Error(ErrorCode::NotFrattinian, "a maximal subalgebra has the same centre as the algebra"),
        witness_(std::move(witness)) {}

  const Subspace& witness() const noexcept { return witness_; }

 private:
  Subspace witness_;
};

/// A = ideal, B = ideal, A + B = L, [A,B] = 0, A ∩ B = Z(L), plus the two centre identities.
inline ObligationReport verify_central_product(const LieAlgebra& L, const Subspace& a, const Subspace& b) {
  ObligationReport r;
  const Subspace z = center(L);
  const Subspace meet = intersect(a, b);
  const Subspace za = intersect(a, centralizer(L, a));
  const Subspace zb = intersect(b, centralizer(L, b));
  r.add("A is a subalgebra", is_subalgebra(L, a), {{"A", a}});
  r.add("B is a subalgebra", is_subalgebra(L, b), {{"B", b}});
  r.add("A is an ideal", is_ideal(L, a), {{"A", a}});
  r.add("B is an ideal", is_ideal(L, b), {{"B", b}});
  r.add("A + B = L", sum(a, b).is_full(), {{"A+B", sum(a, b)}});
  const Subspace ab = bracket_spaces(L, a, b);
  r.add("[A,B] = 0", ab.is_zero(), {{"[A,B]", ab}});
  r.add("A ∩ B = Z(L)", meet == z, {{"A∩B", meet}, {"Z(L)", z}});
  r.add("Z(A) ∩ Z(B) = A ∩ B", intersect(za, zb) == meet, {{"Z(A)∩Z(B)", intersect(za, zb)}, {"A∩B", meet}});
  r.add("Z(L) = Z(A) + Z(B)", z == sum(za, zb), {{"Z(L)", z}, {"Z(A)+Z(B)", sum(za, zb)}});
  return r;
}

namespace detail {

inline void expect(bool condition, const std::string& what, std::vector<NamedSubspace> witnesses) {
  if (!condition) throw InternalAssertionFailure(what, std::move(witnesses));
}

/// Case-one obligations for `factors` inside the ambient subalgebra `whole` of L with centre `z`.
inline void case_one_obligations(const LieAlgebra& L, const Subspace& whole, const Subspace& z,
                                 const std::vector<Subspace>& factors, const std::string& prefix,
                                 ObligationReport& r) {
  Subspace total = L.zero_space();
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Subspace& f = factors[i];
    const std::string tag = prefix + "factor " + std::to_string(i + 1);
    total = sum(total, f);
    const bool sub = is_subalgebra(L, f);
    r.add(tag + " is an ideal", contains(whole, f) && contains(f, bracket_spaces(L, whole, f)), {{tag, f}});
    r.add(tag + " is nonabelian", !bracket_spaces(L, f, f).is_zero(), {{tag, f}});
    r.add(tag + " has dim 2 + dim Z(L)", f.dim() == z.dim() + 2, {{tag, f}});
    if (sub) {
      const Subspace zf = subalgebra_centered(L, f);
      r.add(tag + " has centre Z(L)", zf == z, {{tag, f}, {"Z(" + tag + ")", zf}, {"Z(L)", z}});
    } else {
      r.add(tag + " has centre Z(L)", false, {{tag, f}});
    }
  }
  r.add(prefix + "sum of factors = " + (prefix.empty() ? "L" : "E"), total == whole, {{"sum", total}});
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      const Subspace br = bracket_spaces(L, factors[i], factors[j]);
      r.add(prefix + "[factor " + std::to_string(i + 1) + ", factor " + std::to_string(j + 1) + "] = 0", br.is_zero(),
            {{"bracket", br}});
    }
  }
  r.add(prefix + "dim = 2·count + dim Z(L)", whole.dim() == 2 * factors.size() + z.dim(), {{"whole", whole}});
}

inline bool restricted_frattinian(const LieAlgebra& L, const Subspace& u) {
  return is_frattinian(restrict(L, u).algebra).is_frattinian;
}

struct Extraction {
  std::vector<ExtractionStep> steps;
  Subspace remainder;
};

/// Repeatedly splits off E = Z(M) + Z(N) until no maximal M ⊇ Z(L) of the remainder L_k has
/// Z(M) ⊄ Z(L) + L_k^2. Every identity used along the way is re-checked.
inline Extraction extract_factors(const LieAlgebra& L, const Subspace& z) {
  Extraction out{{}, L.full_space()};
  const std::size_t bound = (L.dim() - z.dim()) / 2;
  while (!(out.remainder == z)) {
    const Subspace& lk = out.remainder;
    const Restriction rk = restrict(L, lk);
    std::vector<Subspace> maximal;
    std::vector<Subspace> centers;
    for (const auto& x : enumerate_maximal(rk.algebra).items) {
      maximal.push_back(push_forward(rk, x));
      centers.push_back(subalgebra_centered(L, maximal.back()));
    }
    const Subspace limit = sum(z, bracket_spaces(L, lk, lk));

    std::optional<std::size_t> mi;
    for (std::size_t i = 0; i < maximal.size() && !mi; ++i) {
      if (contains(maximal[i], z) && !contains(limit, centers[i])) mi = i;
    }
    if (!mi) break;
    const Subspace& m = maximal[*mi];
    const Subspace& zm = centers[*mi];
    expect(out.steps.size() < bound, "extraction exceeded (dim L − dim Z(L))/2 rounds", {{"L_k", lk}, {"M", m}});

    std::optional<std::size_t> ni;
    std::optional<std::size_t> first_candidate;
    for (std::size_t j = 0; j < maximal.size() && !ni; ++j) {
      if (!contains(maximal[j], z) || contains(maximal[j], zm)) continue;
      if (!first_candidate) first_candidate = j;
      if (intersect(centers[j], m) == z && intersect(zm, maximal[j]) == z) ni = j;
    }
    if (!ni) {
      std::vector<NamedSubspace> w{{"L_k", lk}, {"M", m}, {"Z(M)", zm}, {"Z(L)", z}};
      if (first_candidate) w.emplace_back("N", maximal[*first_candidate]);
      throw InternalAssertionFailure("no partner N with Z(N) ∩ M = Z(M) ∩ N = Z(L)", std::move(w));
    }
    const Subspace& n = maximal[*ni];
    const Subspace& zn = centers[*ni];

    const Subspace e = sum(zm, zn);
    const std::vector<NamedSubspace> ew{{"L_k", lk}, {"M", m}, {"N", n}, {"E", e}, {"Z(L)", z}};
    expect(e.dim() == z.dim() + 2, "factor dimension is not 2 + dim Z(L)", ew);
    expect(!bracket_spaces(L, e, e).is_zero(), "factor is abelian", ew);
    expect(is_ideal(L, e), "factor is not an ideal", ew);
    expect(subalgebra_centered(L, e) == z, "factor centre differs from Z(L)", ew);

    Subspace next = intersect(lk, centralizer(L, e));
    std::vector<NamedSubspace> nw = ew;
    nw.emplace_back("L_{k+1}", next);
    expect(next == intersect(m, n), "C_{L_k}(E) differs from M ∩ N", nw);
    expect(contains(lk, bracket_spaces(L, lk, next)), "remainder is not an ideal of L_k", nw);
    expect(sum(e, next) == lk, "E + L_{k+1} differs from L_k", nw);
    expect(intersect(e, next) == z, "E ∩ L_{k+1} differs from Z(L)", nw);
    expect(subalgebra_centered(L, next) == z, "Z(L_{k+1}) differs from Z(L)", nw);
    expect(restricted_frattinian(L, next), "remainder is not Frattinian", nw);

    out.steps.push_back({m, n, e, next});
    out.remainder = std::move(next);
  }
  return out;
}

}  // namespace detail

/// Re-derives every claimed identity from L and the factor subspaces; the trace is ignored.
inline ObligationReport verify_certificate(const LieAlgebra& L, const DecompositionCertificate& cert) {
  auto malformed = [](const std::string& why) { return Error(ErrorCode::MalformedCertificate, why); };
  auto check_shape = [&](const Subspace& s) {
    if (s.ambient_dim() != L.dim() || !(s.domain() == L.domain())) throw malformed("subspace does not match the algebra");
  };
  for (const auto& f : cert.factors) check_shape(f);
  for (const auto& f : cert.nested_factors) check_shape(f);
  if (cert.kind == DecompositionCase::one && cert.factors.empty()) throw malformed("case one needs at least one factor");
  if (cert.kind == DecompositionCase::two && cert.factors.size() != 2) throw malformed("case two needs exactly [E, F]");

  ObligationReport r;
  const Subspace z = center(L);
  r.add("center_dim = dim Z(L)", cert.center_dim == z.dim(), {{"Z(L)", z}});

  if (cert.kind == DecompositionCase::one) {
    detail::case_one_obligations(L, L.full_space(), z, cert.factors, "", r);
    return r;
  }

  const Subspace& e = cert.factors[0];
  const Subspace& f = cert.factors[1];
  const bool e_sub = is_subalgebra(L, e);
  const bool f_sub = is_subalgebra(L, f);
  r.add("E is a subalgebra", e_sub, {{"E", e}});
  r.add("F is a subalgebra", f_sub, {{"F", f}});
  const Subspace ef = bracket_spaces(L, e, f);
  r.add("[E,F] = 0", ef.is_zero(), {{"[E,F]", ef}});
  r.add("E + F = L", sum(e, f).is_full(), {{"E+F", sum(e, f)}});
  const Subspace cf = centralizer(L, f);
  r.add("E = C_L(F)", cf == e, {{"E", e}, {"C_L(F)", cf}});
  const Subspace e2 = bracket_spaces(L, e, e);
  r.add("E^2 ⊆ Z(L)", contains(z, e2), {{"E^2", e2}, {"Z(L)", z}});
  const Subspace f2 = bracket_spaces(L, f, f);
  const Subspace l2 = derived_algebra(L);
  if (f_sub) {
    const Subspace zf2 = subalgebra_centered(L, f2);
    const Subspace czf2 = centralizer(L, zf2);
    r.add("C_L(Z(F^2)) = F^2", czf2 == f2, {{"C_L(Z(F^2))", czf2}, {"F^2", f2}});
    r.add("F is Frattinian", detail::restricted_frattinian(L, f), {{"F", f}});
  } else {
    r.add("C_L(Z(F^2)) = F^2", false, {{"F", f}});
    r.add("F is Frattinian", false, {{"F", f}});
  }
  r.add("E is Frattinian", e_sub && detail::restricted_frattinian(L, e), {{"E", e}});
  if (e == z) {
    r.add("E = Z(L) or E has a case-one decomposition", true);
  } else {
    ObligationReport nested;
    if (cert.nested_factors.empty()) {
      nested.add("nested factors present", false, {{"E", e}});
    } else {
      detail::case_one_obligations(L, e, z, cert.nested_factors, "E: ", nested);
    }
    r.add("E = Z(L) or E has a case-one decomposition", nested.passed(), {{"E", e}});
    for (auto& o : nested.obligations) r.obligations.push_back(std::move(o));
  }
  const Subspace cf2 = centralizer(L, f2);
  const Subspace cl2 = centralizer(L, l2);
  r.add("C_L(F^2) = C_L(L^2)", cf2 == cl2, {{"C_L(F^2)", cf2}, {"C_L(L^2)", cl2}});
  r.add("Z(L) + F^2 = Z(L) + L^2", sum(z, f2) == sum(z, l2), {{"Z(L)+F^2", sum(z, f2)}, {"Z(L)+L^2", sum(z, l2)}});
  return r;
}

/// Splits a Frattinian nonabelian nilpotent algebra into a central product; never returns an
/// unverified certificate.
inline DecompositionCertificate decompose(const LieAlgebra& L) {
  if (!is_nilpotent(L)) throw Error(ErrorCode::NotNilpotent, "decomposition requires a nilpotent algebra");
  if (is_abelian(L)) throw Error(ErrorCode::AbelianInput, "decomposition requires a nonabelian algebra");
  if (!L.domain().is_finite()) throw Error(ErrorCode::InfiniteDomain, "decomposition enumerates over a finite field");
  const FrattinianVerdict verdict = is_frattinian(L);
  if (!verdict.is_frattinian) throw NotFrattinianError(*verdict.witness);

  const Subspace z = center(L);
  detail::Extraction ex = detail::extract_factors(L, z);
  DecompositionCertificate cert;
  cert.center_dim = z.dim();
  cert.trace = ex.steps;

  if (ex.remainder == z) {
    cert.kind = DecompositionCase::one;
    for (const auto& step : ex.steps) cert.factors.push_back(step.factor);
  } else {
    cert.kind = DecompositionCase::two;
    const Restriction rn = restrict(L, ex.remainder);
    const SupplementResult sup = minimal_supplement(rn.algebra);
    const Subspace f = push_forward(rn, sup.supplement);
    Subspace e = z;
    for (const auto& step : ex.steps) e = sum(e, step.factor);
    const std::vector<NamedSubspace> w{{"L_n", ex.remainder}, {"E", e}, {"F", f}, {"Z(L)", z}};
    detail::expect(sup.supplements && sup.minimal, "supplement of Z(L) in L_n is not a minimal supplement", w);
    detail::expect(centralizer(L, f) == e, "C_L(F) differs from E", w);
    cert.factors = {e, f};
    if (!(e == z)) {
      const Restriction re = restrict(L, e);
      DecompositionCertificate nested;
      try {
        nested = decompose(re.algebra);
      } catch (const Error& err) {
        throw InternalAssertionFailure(std::string("nested decomposition of E failed: ") + err.what(), w);
      }
      detail::expect(nested.kind == DecompositionCase::one, "nested decomposition of E is not case one", w);
      for (const auto& nf : nested.factors) cert.nested_factors.push_back(push_forward(re, nf));
    }
  }

  const ObligationReport report = verify_certificate(L, cert);
  if (!report.passed()) {
    std::string failed;
    std::vector<NamedSubspace> witnesses;
    for (const auto& o : report.obligations) {
      if (o.pass) continue;
      failed += (failed.empty() ? "" : "; ") + o.name;
      witnesses.insert(witnesses.end(), o.witnesses.begin(), o.witnesses.end());
    }
    throw InternalAssertionFailure("certificate obligations failed: " + failed, std::move(witnesses));
  }
  return cert;
}

}  // namespace liesc
