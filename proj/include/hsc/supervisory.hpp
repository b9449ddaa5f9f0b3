#pragma once

#include <cstddef>

#include "hsc/generator.hpp"
#include "hsc/language_oracle.hpp"
#include "hsc/projections.hpp"
#include "hsc/verdict.hpp"

namespace hsc {

// The specification K is always the marked language of a generator; its
// prefix closure is derived with prefix_closure_generator and never taken
// from the input.

/// Counterexample to observability: s, s' ∈ K̄ with P(s) = P(s'), e ∈ Σ_c,
/// se ∈ L(G), s'e ∈ K̄ and se ∉ K̄.
struct ObservabilityWitness {
  EventString s;
  EventString s_prime;
  Event e;

  Witness to_witness() const;
  static ObservabilityWitness from_witness(const Witness& w);
};

/// K̄Σ_u ∩ L(G) ⊆ K̄. A violation carries fields "s" and "u".
Verdict check_controllability(const Generator& k, const Generator& g,
                              const AlphabetProfile& profile);

/// K = K̄ ∩ L_m(G). A violation carries field "s" from the symmetric difference.
Verdict check_lm_closed(const Generator& k, const Generator& g);

/// Observability of K w.r.t. L(G), Σ_o, Σ_c via the pair construction.
/// The returned witness minimises |s| + |s'|, then s, then s' (shortlex),
/// then e. Throws ValidationError when K ⊄ L(G).
Verdict check_observability(const Generator& k, const Generator& g,
                            const AlphabetProfile& profile);

/// Definitional scan over all s, s' ∈ L(G) with |s|, |s'| <= bound. `k` is
/// the oracle of K̄. Holds only when both languages fit within the bound;
/// otherwise a clean scan is Inconclusive. Same witness order as
/// check_observability.
Verdict brute_force_observability(const LanguageOracle& k, const LanguageOracle& g,
                                  const AlphabetProfile& profile, std::size_t bound);

/// Synchronous nonconflictingness of L_m(k) and L_m(g): the prefix closure
/// of L_m(k) ∥ L_m(g) equals closure(L_m(k)) ∥ closure(L_m(g)). A violation
/// carries field "s" in the difference.
Verdict check_sync_nonconflicting(const Generator& k, const Generator& g);

/// Re-evaluates the observability implication for `w` directly against
/// membership in K̄ and L(G). True when `w` falsifies it.
bool falsifies_observability(const Generator& k, const Generator& g,
                             const AlphabetProfile& profile, const ObservabilityWitness& w);

/// True when s ∈ K̄, u ∈ Σ_u, su ∈ L(G) and su ∉ K̄.
bool falsifies_controllability(const Generator& k, const Generator& g,
                               const AlphabetProfile& profile, const EventString& s,
                               const Event& u);

}  // namespace hsc
