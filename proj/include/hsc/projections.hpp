#pragma once

#include <string_view>

#include "hsc/event_string.hpp"
#include "hsc/generator.hpp"
#include "hsc/verdict.hpp"

namespace hsc {

/// Σ together with its observable, controllable and high-level subsets.
/// Σ_u is always derived as Σ \ Σ_c.
struct AlphabetProfile {
  Alphabet sigma;
  Alphabet observable;
  Alphabet controllable;
  Alphabet high;

  Alphabet uncontrollable() const { return subtract(sigma, controllable); }
  Alphabet high_observable() const { return intersect(high, observable); }
  Alphabet high_controllable() const { return intersect(high, controllable); }

  /// Throws ValidationError unless every subset lies inside sigma.
  void validate() const;

  /// Profile with everything observable and nothing controllable or high.
  static AlphabetProfile full(Alphabet sigma);
};

/// Which of the four diagram maps, or a projection onto a caller-chosen
/// target alphabet.
///
///   P    : Σ*     -> Σ_o*
///   A    : Σ*     -> Σ_hi*
///   P_HI : Σ_hi*  -> (Σ_hi ∩ Σ_o)*
///   A_O  : Σ_o*   -> (Σ_hi ∩ Σ_o)*
///   CUSTOM(T) : Σ* -> T*
struct ProjectionKind {
  enum class Tag { P, A, PHi, AO, Custom };

  Tag tag = Tag::P;
  Alphabet custom_target;

  static ProjectionKind p() { return {Tag::P, {}}; }
  static ProjectionKind a() { return {Tag::A, {}}; }
  static ProjectionKind p_hi() { return {Tag::PHi, {}}; }
  static ProjectionKind a_o() { return {Tag::AO, {}}; }
  static ProjectionKind custom(Alphabet target) { return {Tag::Custom, std::move(target)}; }

  /// Parses "P", "A", "P_HI", "A_O" (case-insensitive).
  static ProjectionKind parse(std::string_view name);
};

std::string_view to_string(ProjectionKind::Tag tag);

Alphabet source_alphabet(const AlphabetProfile& profile, const ProjectionKind& kind);
Alphabet target_alphabet(const AlphabetProfile& profile, const ProjectionKind& kind);

/// Erases symbols outside the target alphabet. Throws ValidationError when
/// `s` has a symbol outside the source alphabet.
EventString project(const AlphabetProfile& profile, const ProjectionKind& kind,
                    const EventString& s);

/// Generator for P⁻¹(L(g)) over the source alphabet: every erased symbol
/// becomes a self-loop at every state. g's alphabet must be the target.
Generator inverse_project_generator(const Generator& g, const AlphabetProfile& profile,
                                    const ProjectionKind& kind);

/// Deterministic generator for P(L(g)) and P(L_m(g)). Erased symbols become
/// silent moves, silent moves are eliminated, then the subset construction
/// runs. g's alphabet must be the source.
Generator project_generator(const Generator& g, const AlphabetProfile& profile,
                            const ProjectionKind& kind);

/// Holds iff P_hi(A(s)) = A_o(P(s)) for every sample string; a violation
/// carries the first failing string.
Verdict check_diagram(const AlphabetProfile& profile, const StringSet& strings);

}  // namespace hsc
