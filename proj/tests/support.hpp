#pragma once

// Test-only helpers: small builders, random finite systems, and
// definitional brute-force checks that never touch the library's product,
// pair or subset constructions.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hsc/event_string.hpp"
#include "hsc/generator.hpp"
#include "hsc/projections.hpp"

namespace hsc::testing {

inline EventString S(const std::string& chars) { return from_chars(chars); }

inline StringSet strings(std::initializer_list<std::string> items) {
  StringSet out;
  for (const auto& s : items) out.insert(from_chars(s));
  return out;
}

/// Generator whose marked language is `words` (a trie); every word's end is
/// marked, and the generated language is the prefix closure.
inline Generator trie(const Alphabet& alphabet, const std::vector<std::string>& words,
                      bool mark_ends = true) {
  Generator g(alphabet, "r");
  for (const auto& w : words) {
    std::string path = "r";
    for (char c : w) {
      const std::string next = path + c;
      g.add_transition(path, std::string(1, c), next);
      path = next;
    }
    if (mark_ends) g.set_marked(g.state(path));
  }
  return g;
}

/// Σ^{<=n}.
inline StringSet sigma_star(const Alphabet& alphabet, std::size_t n) {
  StringSet out{EventString{}};
  std::vector<EventString> level{EventString{}};
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<EventString> next;
    for (const auto& s : level) {
      for (const auto& e : alphabet) next.push_back(append(s, e));
    }
    out.insert(next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

/// All members of L(G) (or L_m(G)) of length <= n, by testing every string
/// of Σ^{<=n} with delta_star.
inline StringSet members_by_scan(const Generator& g, std::size_t n, bool marked = false) {
  StringSet out;
  for (const auto& s : sigma_star(g.alphabet(), n)) {
    if (marked ? g.marks(s) : g.generates(s)) out.insert(s);
  }
  return out;
}

inline StringSet prefix_closure(const StringSet& language) {
  StringSet out;
  for (const auto& s : language) {
    for (std::size_t i = 0; i <= s.size(); ++i) out.insert(EventString(s.begin(), s.begin() + i));
  }
  return out;
}

inline const Alphabet kEvents{"a", "b", "c", "d"};

/// Random acyclic generator: transitions only go from lower to higher state
/// index, so L(G) is finite with every string of length < states.
inline Generator random_acyclic(std::mt19937& rng, const Alphabet& alphabet,
                                std::size_t max_states = 6, double edge_prob = 0.45) {
  std::uniform_int_distribution<std::size_t> count(1, max_states);
  std::bernoulli_distribution coin(0.5), edge(edge_prob);
  const std::size_t n = count(rng);
  Generator g(alphabet, "0");
  for (std::size_t q = 1; q < n; ++q) g.add_state(std::to_string(q));
  for (std::size_t q = 0; q < n; ++q) {
    g.set_marked(q, coin(rng));
    if (q + 1 == n) continue;
    std::uniform_int_distribution<std::size_t> target(q + 1, n - 1);
    for (const auto& e : alphabet) {
      if (edge(rng)) g.add_transition(q, e, target(rng));
    }
  }
  return g;
}

inline Alphabet random_alphabet(std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> size(1, 4);
  const std::size_t n = size(rng);
  Alphabet out;
  for (const auto& e : kEvents) {
    if (out.size() < n) out.insert(e);
  }
  return out;
}

inline Alphabet random_subset(std::mt19937& rng, const Alphabet& alphabet) {
  std::bernoulli_distribution coin(0.5);
  Alphabet out;
  for (const auto& e : alphabet) {
    if (coin(rng)) out.insert(e);
  }
  return out;
}

inline AlphabetProfile random_profile(std::mt19937& rng, const Alphabet& sigma) {
  AlphabetProfile p;
  p.sigma = sigma;
  p.observable = random_subset(rng, sigma);
  p.controllable = random_subset(rng, sigma);
  p.high = random_subset(rng, sigma);
  return p;
}

/// Random sub-automaton of `g`: drops transitions and re-marks states at
/// random. Its languages are contained in those of `g`.
inline Generator random_sublanguage(std::mt19937& rng, const Generator& g, double keep = 0.75) {
  std::bernoulli_distribution keep_edge(keep), coin(0.5);
  Generator out(g.alphabet(), g.state_name(g.initial()));
  for (StateId q = 0; q < g.num_states(); ++q) out.add_state(g.state_name(q));
  for (StateId q = 0; q < g.num_states(); ++q) {
    const StateId src = out.state(g.state_name(q));
    out.set_marked(src, coin(rng));
    for (const auto& [e, next] : g.transitions_from(q)) {
      if (keep_edge(rng)) out.add_transition(src, e, out.state(g.state_name(next)));
    }
  }
  return out;
}

// ---- definitional brute force ---------------------------------------------

/// ∀s ∈ K̄, u ∈ Σ_u: su ∈ L(G) ⇒ su ∈ K̄, over explicit finite sets.
inline bool brute_controllable(const StringSet& k_closure, const StringSet& plant,
                               const Alphabet& uncontrollable) {
  for (const auto& s : k_closure) {
    for (const auto& u : uncontrollable) {
      const EventString su = append(s, u);
      if (plant.contains(su) && !k_closure.contains(su)) return false;
    }
  }
  return true;
}

/// Observability over explicit finite sets: for all s, s' ∈ L(G) with
/// P(s) = P(s') and e ∈ Σ_c, (se ∈ L(G) ∧ s'e ∈ K̄ ∧ s ∈ K̄) ⇒ se ∈ K̄.
inline bool brute_observable(const StringSet& k_closure, const StringSet& plant,
                             const AlphabetProfile& profile) {
  for (const auto& s : plant) {
    for (const auto& t : plant) {
      if (erase_outside(s, profile.observable) != erase_outside(t, profile.observable)) continue;
      for (const auto& e : profile.controllable) {
        const EventString se = append(s, e);
        if (plant.contains(se) && k_closure.contains(append(t, e)) && k_closure.contains(s) &&
            !k_closure.contains(se)) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Observation consistency over an explicit finite prefix-closed language.
inline bool brute_oc(const StringSet& language, const AlphabetProfile& profile) {
  std::set<EventString> images;
  for (const auto& s : language) images.insert(erase_outside(s, profile.high));
  const Alphabet high_obs = intersect(profile.high, profile.observable);
  for (const auto& t : images) {
    for (const auto& t2 : images) {
      if (erase_outside(t, high_obs) != erase_outside(t2, high_obs)) continue;
      bool found = false;
      for (const auto& s : language) {
        if (erase_outside(s, profile.high) != t) continue;
        for (const auto& s2 : language) {
          if (erase_outside(s2, profile.high) == t2 &&
              erase_outside(s, profile.observable) == erase_outside(s2, profile.observable)) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) return false;
    }
  }
  return true;
}

/// Local observation consistency over an explicit finite prefix-closed
/// language; continuations drawn from (Σ \ Σ_hi)^{<=longest}.
inline bool brute_loc(const StringSet& language, const AlphabetProfile& profile) {
  std::size_t longest = 0;
  std::set<EventString> images;
  for (const auto& s : language) {
    longest = std::max(longest, s.size());
    images.insert(erase_outside(s, profile.high));
  }
  const StringSet low_words = sigma_star(subtract(profile.sigma, profile.high), longest);
  const Alphabet events = intersect(profile.controllable, profile.high);
  for (const auto& s : language) {
    for (const auto& s2 : language) {
      if (erase_outside(s, profile.observable) != erase_outside(s2, profile.observable)) continue;
      for (const auto& e : events) {
        if (!images.contains(append(erase_outside(s, profile.high), e)) ||
            !images.contains(append(erase_outside(s2, profile.high), e))) {
          continue;
        }
        bool found = false;
        for (const auto& u : low_words) {
          if (!language.contains(append(concat(s, u), e))) continue;
          for (const auto& u2 : low_words) {
            if (erase_outside(u, profile.observable) == erase_outside(u2, profile.observable) &&
                language.contains(append(concat(s2, u2), e))) {
              found = true;
              break;
            }
          }
          if (found) break;
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

}  // namespace hsc::testing
