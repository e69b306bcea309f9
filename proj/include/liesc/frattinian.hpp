#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liesc/constructions.hpp"
#include "liesc/error.hpp"
#include "liesc/lie_algebra.hpp"
#include "liesc/linear.hpp"
#include "liesc/maximal.hpp"
#include "liesc/report.hpp"

namespace liesc {

struct FrattinianVerdict {
  bool is_frattinian = true;
  /// A maximal subalgebra M with Z(M) = Z(L); present iff the algebra is not Frattinian.
  std::optional<Subspace> witness;
  std::size_t checked_count = 0;
};

/// Z(M) != Z(L) for every maximal M. Abelian algebras answer true without enumeration.
inline FrattinianVerdict is_frattinian(const LieAlgebra& L) {
  if (!is_nilpotent(L)) throw Error(ErrorCode::NotNilpotent, "Frattinian property is defined for nilpotent algebras");
  if (is_abelian(L)) return {};
  if (!L.domain().is_finite()) {
    throw Error(ErrorCode::InfiniteDomain, "Frattinian check of a nonabelian algebra needs a finite field");
  }
  const Subspace z = center(L);
  FrattinianVerdict verdict;
  for (const auto& m : enumerate_maximal(L).items) {
    ++verdict.checked_count;
    if (subalgebra_centered(L, m) == z) {
      verdict.is_frattinian = false;
      verdict.witness = m;
      break;
    }
  }
  return verdict;
}

/// Centre, derived algebra, maximal subalgebras and their centres of a nilpotent algebra over F_p.
struct MaximalSurvey {
  Subspace center;
  Subspace derived;
  std::vector<Subspace> maximal;
  std::vector<Subspace> maximal_centers;
};

inline MaximalSurvey survey_maximal(const LieAlgebra& L) {
  MaximalSurvey s{center(L), derived_algebra(L), enumerate_maximal(L).items, {}};
  s.maximal_centers.reserve(s.maximal.size());
  for (const auto& m : s.maximal) s.maximal_centers.push_back(subalgebra_centered(L, m));
  return s;
}

inline bool is_frattinian(const MaximalSurvey& s) {
  return std::none_of(s.maximal_centers.begin(), s.maximal_centers.end(),
                      [&](const Subspace& zm) { return zm == s.center; });
}

/// Every maximal M ⊇ Z(L) has Z(M) ⊆ Z(L) + L^2, on a nonabelian Frattinian algebra.
inline bool supplement_hypothesis(const MaximalSurvey& s) {
  if (s.derived.is_zero() || !is_frattinian(s)) return false;
  const Subspace bound = sum(s.center, s.derived);
  for (std::size_t i = 0; i < s.maximal.size(); ++i) {
    if (contains(s.maximal[i], s.center) && !contains(bound, s.maximal_centers[i])) return false;
  }
  return true;
}

struct SupplementCheck {
  Subspace maximal;  ///< maximal subalgebra X of F, in L's coordinates
  bool covers;       ///< X + Z(L) = L
};

struct SupplementResult {
  Subspace supplement;
  bool supplements = false;  ///< F + Z(L) = L
  bool minimal = false;
  std::vector<SupplementCheck> minimality_checks;
  /// Unset over the rationals, where the hypothesis cannot be decided by enumeration.
  std::optional<bool> hypothesis_met;
  /// Conclusions asserted on F; populated only when the hypothesis is met.
  ObligationReport conclusions;
};

/// F generated by a complement of Z(L) + L^2; certified minimal among subalgebras supplementing Z(L).
inline SupplementResult minimal_supplement(const LieAlgebra& L) {
  if (!is_nilpotent(L)) throw Error(ErrorCode::NotNilpotent, "minimal supplement requires a nilpotent algebra");
  const Subspace z = center(L);
  const Subspace derived = derived_algebra(L);
  const auto gens = complement_basis(sum(z, derived), L.full_space());
  SupplementResult out{generated_subalgebra(L, gens), false, false, {}, std::nullopt, {}};
  const Subspace& f = out.supplement;
  out.supplements = sum(f, z).is_full();

  if (L.domain().is_finite()) {
    out.minimal = true;
    if (!f.is_zero()) {
      const Restriction r = restrict(L, f);
      for (const auto& x : enumerate_maximal(r.algebra).items) {
        const Subspace xl = push_forward(r, x);
        const bool covers = sum(xl, z).is_full();
        out.minimality_checks.push_back({xl, covers});
        out.minimal = out.minimal && !covers;
      }
    }
    out.hypothesis_met = L.dim() > 0 && supplement_hypothesis(survey_maximal(L));
  } else {
    // A maximal X of F covers L modulo Z(L) iff F ∩ Z(L) ⊄ X, so minimality is F ∩ Z(L) ⊆ Φ(F).
    out.minimal = contains(bracket_spaces(L, f, f), intersect(f, z));
  }

  if (out.hypothesis_met.value_or(false)) {
    const Subspace f2 = bracket_spaces(L, f, f);
    const Subspace zf = subalgebra_centered(L, f);
    const Subspace zf2 = subalgebra_centered(L, f2);
    const Restriction r = restrict(L, f);
    out.conclusions.add("supplement is Frattinian", is_frattinian(r.algebra).is_frattinian, {{"F", f}});
    out.conclusions.add("Z(F) ⊆ F^2", contains(f2, zf), {{"Z(F)", zf}, {"F^2", f2}});
    const Subspace cf = centralizer(L, f);
    out.conclusions.add("C_L(F) = Z(L)", cf == z, {{"C_L(F)", cf}, {"Z(L)", z}});
    const Subspace czf2 = centralizer(L, zf2);
    out.conclusions.add("C_L(Z(F^2)) = F^2", czf2 == f2, {{"C_L(Z(F^2))", czf2}, {"F^2", f2}});
  }
  return out;
}

enum class LemmaId {
  maximal_centralizer_dichotomy,
  centralizer_by_center_containment,
  centralizer_of_maximal_center,
  derived_center_centralizer,
  complementary_maximal_pair,
};

inline constexpr std::array<LemmaId, 5> kAllLemmas = {
    LemmaId::maximal_centralizer_dichotomy, LemmaId::centralizer_by_center_containment,
    LemmaId::centralizer_of_maximal_center, LemmaId::derived_center_centralizer, LemmaId::complementary_maximal_pair};

inline std::string to_string(LemmaId id) {
  switch (id) {
    case LemmaId::maximal_centralizer_dichotomy: return "maximal_centralizer_dichotomy";
    case LemmaId::centralizer_by_center_containment: return "centralizer_by_center_containment";
    case LemmaId::centralizer_of_maximal_center: return "centralizer_of_maximal_center";
    case LemmaId::derived_center_centralizer: return "derived_center_centralizer";
    case LemmaId::complementary_maximal_pair: return "complementary_maximal_pair";
  }
  return "unknown";
}

struct LemmaCheck {
  LemmaId lemma;
  std::string algebra_id;
  /// Absent for algebra-level checks.
  std::optional<Subspace> maximal;
  bool pass = false;
  std::vector<NamedSubspace> witnesses;
};

struct LemmaTally {
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct LemmaSuiteReport {
  std::string algebra_id;
  std::size_t maximal_count = 0;
  bool frattinian = false;
  bool supplement_hypothesis = false;
  std::vector<LemmaCheck> checks;

  std::map<LemmaId, LemmaTally> tally() const {
    std::map<LemmaId, LemmaTally> out;
    for (auto id : kAllLemmas) out[id] = {};
    for (const auto& c : checks) (c.pass ? out[c.lemma].passed : out[c.lemma].failed) += 1;
    return out;
  }
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.pass; });
  }
};

/// Runs the centralizer/centre identities over every maximal subalgebra. Checks whose hypotheses
/// do not apply to an (L, M) pair are not recorded.
inline LemmaSuiteReport lemma_suite(const LieAlgebra& L, const std::string& algebra_id = "") {
  if (!is_nilpotent(L)) throw Error(ErrorCode::NotNilpotent, "lemma suite requires a nilpotent algebra");
  const MaximalSurvey s = survey_maximal(L);
  LemmaSuiteReport report;
  report.algebra_id = algebra_id;
  report.maximal_count = s.maximal.size();
  report.frattinian = is_frattinian(s);
  report.supplement_hypothesis = supplement_hypothesis(s);
  const bool nonabelian = !s.derived.is_zero();
  const Subspace center_plus_derived = sum(s.center, s.derived);

  auto record = [&](LemmaId id, const Subspace* m, bool pass, std::vector<NamedSubspace> witnesses) {
    report.checks.push_back({id, algebra_id, m ? std::optional<Subspace>(*m) : std::nullopt, pass,
                             pass ? std::vector<NamedSubspace>{} : std::move(witnesses)});
  };

  for (std::size_t i = 0; i < s.maximal.size(); ++i) {
    const Subspace& m = s.maximal[i];
    const Subspace& zm = s.maximal_centers[i];
    const Subspace cm = centralizer(L, m);
    const bool center_in_m = contains(m, s.center);

    {
      const bool first = cm == zm;
      const bool second = cm == s.center && sum(cm, m).is_full();
      record(LemmaId::maximal_centralizer_dichotomy, &m, first || second,
             {{"M", m}, {"C_L(M)", cm}, {"Z(M)", zm}, {"Z(L)", s.center}});
    }
    record(LemmaId::centralizer_by_center_containment, &m, center_in_m ? cm == zm : cm == s.center,
           {{"M", m}, {"C_L(M)", cm}, {"Z(M)", zm}, {"Z(L)", s.center}});

    if (!contains(s.center, zm)) {
      const Subspace czm = centralizer(L, zm);
      record(LemmaId::centralizer_of_maximal_center, &m, czm == m, {{"M", m}, {"Z(M)", zm}, {"C_L(Z(M))", czm}});
    }

    if (report.frattinian && nonabelian && center_in_m && !contains(center_plus_derived, zm)) {
      std::optional<Subspace> first_candidate;
      bool found = false;
      for (std::size_t j = 0; j < s.maximal.size() && !found; ++j) {
        const Subspace& n = s.maximal[j];
        if (!contains(n, s.center) || contains(n, zm)) continue;
        if (!first_candidate) first_candidate = n;
        found = intersect(s.maximal_centers[j], m) == s.center && intersect(zm, n) == s.center;
      }
      std::vector<NamedSubspace> witnesses{{"M", m}, {"Z(M)", zm}, {"Z(L)", s.center}};
      if (first_candidate) witnesses.emplace_back("N", *first_candidate);
      record(LemmaId::complementary_maximal_pair, &m, found, std::move(witnesses));
    }
  }

  if (report.supplement_hypothesis) {
    const Subspace z_derived = subalgebra_centered(L, s.derived);
    const Subspace c = centralizer(L, z_derived);
    record(LemmaId::derived_center_centralizer, nullptr, c == center_plus_derived,
           {{"Z(L^2)", z_derived}, {"C_L(Z(L^2))", c}, {"Z(L)+L^2", center_plus_derived}});
  }
  return report;
}

}  // namespace liesc
