#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "hsc/generator.hpp"
#include "hsc/language_oracle.hpp"
#include "hsc/projections.hpp"
#include "hsc/verdict.hpp"

namespace hsc {

/// A pair of high-level strings t, t' ∈ A(L) with P_hi(t) = P_hi(t').
struct OcWitnessRequest {
  EventString t;
  EventString t_prime;
};

/// s, s' ∈ L with A(s) = t, A(s') = t' and P(s) = P(s').
struct OcWitness {
  EventString s;
  EventString s_prime;

  bool operator==(const OcWitness&) const = default;
};

/// Positive certificate for one LOC obligation: u, u' ∈ (Σ \ Σ_hi)* with
/// P(u) = P(u'), sue ∈ L and s'u'e ∈ L.
struct LocWitness {
  EventString s;
  EventString s_prime;
  Event e;
  EventString u;
  EventString u_prime;
};

/// Searches s, s' ∈ L with |s|, |s'| <= s_bound. The least witness by
/// (|s|+|s'|, s, s') is returned. Absence is definitive only when L fits
/// within s_bound. Throws ValidationError when P_hi(t) != P_hi(t') or when
/// t or t' is not realised by a member of length <= s_bound.
std::optional<OcWitness> find_oc_witness(const LanguageOracle& l, const AlphabetProfile& profile,
                                         const OcWitnessRequest& req, std::size_t s_bound);

struct OcOptions {
  /// Treat a failed bounded witness search as definitive. Only sound when
  /// the caller knows no longer witness can exist.
  bool witness_absence_exact = false;
};

/// Observation consistency of L w.r.t. A, P and P_hi.
///
/// Pairs t <= t' of A(L) with |t|, |t'| <= t_bound and equal P_hi image are
/// examined in order (|t|+|t'|, t, t'). A violation carries "t", "t_prime".
/// Unless L fits within s_bound and A(L) within t_bound, a clean run is
/// Inconclusive; a failed pair search is Inconclusive unless the absence is
/// definitive.
Verdict check_oc(const LanguageOracle& l, const AlphabetProfile& profile, std::size_t t_bound,
                 std::size_t s_bound, OcOptions options = {});

/// Local observation consistency of L w.r.t. A, P and Σ_c. The premise
/// "A(s)e ∈ A(L)" is read at the abstract level only. A violation carries
/// "s", "s_prime", "e".
Verdict check_loc(const LanguageOracle& l, const AlphabetProfile& profile, std::size_t s_bound,
                  std::optional<std::size_t> u_bound = std::nullopt);

/// Re-checks every OcWitness condition against `l` and the projections.
bool is_valid_oc_witness(const LanguageOracle& l, const AlphabetProfile& profile,
                         const OcWitnessRequest& req, const OcWitness& w);

bool is_valid_loc_witness(const LanguageOracle& l, const AlphabetProfile& profile,
                          const LocWitness& w);

/// Searches the LOC continuations for one obligation (s, s', e).
std::optional<LocWitness> find_loc_witness(const LanguageOracle& l, const AlphabetProfile& profile,
                                           const EventString& s, const EventString& s_prime,
                                           const Event& e, std::size_t u_bound);

/// Outcome of the hierarchical-observability equivalence experiment on a
/// finite plant.
struct Theorem1Report {
  Verdict oc;
  Verdict loc;
  Verdict nonconflicting;
  /// K observable w.r.t. A(L(G)), Σ_hi ∩ Σ_o, Σ_hi ∩ Σ_c.
  Verdict high_level;
  /// K ∥ L(G) observable w.r.t. L(G), Σ_o, Σ_c.
  Verdict low_level;

  bool hypotheses_hold() const;
  bool verdicts_agree() const { return high_level.status == low_level.status; }
  /// False only when every hypothesis holds and the verdicts differ.
  bool consistent() const { return !hypotheses_hold() || verdicts_agree(); }
};

/// `g` must have an acyclic accessible part; K = L_m(k) over Σ_hi with
/// K ⊆ A(L(G)). Throws ValidationError otherwise.
Theorem1Report theorem1_harness(const Generator& g, const Generator& k,
                                const AlphabetProfile& profile);

/// Profile seen at the abstract level: Σ_hi with Σ_hi ∩ Σ_o observable and
/// Σ_hi ∩ Σ_c controllable.
AlphabetProfile high_level_profile(const AlphabetProfile& profile);

}  // namespace hsc
