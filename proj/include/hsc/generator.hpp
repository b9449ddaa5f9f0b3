#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hsc/event_string.hpp"

namespace hsc {

using StateId = std::size_t;

/// Incomplete deterministic finite automaton G = (Q, Σ, δ, q0, F).
///
/// States are dense integers carrying a display name. The transition
/// function is partial; at most one target exists per (state, event).
/// The initial state always exists, so L(G) contains at least ε.
class Generator {
 public:
  /// Creates a generator with a single (initial) state named `initial_name`.
  explicit Generator(Alphabet alphabet, std::string initial_name = "0");

  /// Returns the id of `name`, creating the state if it does not exist.
  StateId add_state(const std::string& name);
  std::optional<StateId> find_state(std::string_view name) const;
  /// Throws ValidationError for unknown names.
  StateId state(std::string_view name) const;

  void set_initial(StateId q);
  void set_marked(StateId q, bool marked = true);

  /// Throws ValidationError when `e` is foreign, a state is unknown, or a
  /// different target is already recorded for (src, e).
  void add_transition(StateId src, const Event& e, StateId dst);
  void add_transition(const std::string& src, const Event& e, const std::string& dst);

  /// One step without validation; absent when undefined or `e` is foreign.
  std::optional<StateId> step(StateId q, const Event& e) const;

  /// Extended transition function. Throws ValidationError for an unknown
  /// state or a foreign symbol; returns nullopt when some step is undefined.
  std::optional<StateId> delta_star(StateId q, const EventString& s) const;

  bool generates(const EventString& s) const;
  bool marks(const EventString& s) const;

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t num_states() const { return names_.size(); }
  StateId initial() const { return initial_; }
  bool is_marked(StateId q) const { return marked_.at(q); }
  const std::string& state_name(StateId q) const { return names_.at(q); }
  const std::map<Event, StateId>& transitions_from(StateId q) const { return delta_.at(q); }
  std::size_t num_transitions() const;

 private:
  void require_state(StateId q) const;

  Alphabet alphabet_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, StateId> ids_;
  std::vector<std::map<Event, StateId>> delta_;
  std::vector<bool> marked_;
  StateId initial_ = 0;
};

enum class LanguageKind { Generated, Marked };

/// Strings of length <= max_len in L(G) or L_m(G).
StringSet enumerate(const Generator& g, std::size_t max_len, LanguageKind which);

/// States reachable from the initial state, in breadth-first order
/// (events visited in sorted order).
std::vector<StateId> accessible_states(const Generator& g);

/// States from which some marked state is reachable.
std::vector<bool> coaccessible_states(const Generator& g);

/// Copy restricted to the accessible part, states renamed 0..n-1 in
/// breadth-first order.
Generator accessible_part(const Generator& g);

/// True when the accessible part has no cycle (L(G) is finite).
bool is_acyclic(const Generator& g);

/// Length of the longest string of L(G), or nullopt when L(G) is infinite.
std::optional<std::size_t> longest_string(const Generator& g);

/// One unmarked initial state, no transitions: L = {ε}, L_m = ∅.
Generator empty_language_generator(Alphabet alphabet);

/// Same automaton with every state marked, so L_m equals L(G).
Generator with_all_marked(const Generator& g);

/// Synchronous composition over Σ1 ∪ Σ2: shared events synchronize,
/// private events interleave. The result is accessible; composite states
/// are numbered in breadth-first discovery order.
Generator parallel_compose(const Generator& g1, const Generator& g2);

struct ClosureResult {
  Generator generator;
  /// Set when L_m(g) is empty; `generator` is then the empty-language generator.
  bool empty_marked_language = false;
};

/// Generator whose generated and marked languages both equal the prefix
/// closure of L_m(g).
ClosureResult prefix_closure_generator(const Generator& g);

/// Shortlex-least string in L(lhs) \ L(rhs) (generated languages, equal
/// alphabets required), or nullopt when L(lhs) ⊆ L(rhs).
std::optional<EventString> first_not_included(const Generator& lhs, const Generator& rhs);

/// Shortlex-least string in the symmetric difference of the generated
/// languages, or nullopt when they are equal.
std::optional<EventString> language_difference(const Generator& lhs, const Generator& rhs);

}  // namespace hsc
