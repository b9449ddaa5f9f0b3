#include "hsc/supervisory.hpp"

#include <deque>
#include <map>
#include <queue>
#include <tuple>
#include <vector>

namespace hsc {

Witness ObservabilityWitness::to_witness() const {
  return Witness{"observability", {{"s", s}, {"s_prime", s_prime}, {"e", EventString{e}}}};
}

ObservabilityWitness ObservabilityWitness::from_witness(const Witness& w) {
  const auto& e = w.at("e");
  if (e.size() != 1) throw ValidationError("observability witness needs exactly one event e");
  return ObservabilityWitness{w.at("s"), w.at("s_prime"), e.front()};
}

namespace {

void require_same_alphabet(const Generator& k, const Generator& g) {
  if (k.alphabet() != g.alphabet()) {
    throw ValidationError("specification alphabet " + to_text(k.alphabet()) +
                          " differs from plant alphabet " + to_text(g.alphabet()));
  }
}

void require_profile_matches(const Generator& g, const AlphabetProfile& profile) {
  profile.validate();
  if (profile.sigma != g.alphabet()) {
    throw ValidationError("profile alphabet " + to_text(profile.sigma) +
                          " differs from plant alphabet " + to_text(g.alphabet()));
  }
}

// Order on candidate pairs (s, s'): total length, then s, then s' (shortlex).
bool pair_less(const EventString& s1, const EventString& t1, const EventString& s2,
               const EventString& t2) {
  const std::size_t n1 = s1.size() + t1.size();
  const std::size_t n2 = s2.size() + t2.size();
  if (n1 != n2) return n1 < n2;
  if (s1 != s2) return ShortLex{}(s1, s2);
  return ShortLex{}(t1, t2);
}

}  // namespace

Verdict check_controllability(const Generator& k, const Generator& g,
                              const AlphabetProfile& profile) {
  require_same_alphabet(k, g);
  require_profile_matches(g, profile);
  const ClosureResult closed = prefix_closure_generator(k);
  if (closed.empty_marked_language) return Verdict::holds("K is empty");
  const Generator& closure = closed.generator;
  const Alphabet uncontrollable = profile.uncontrollable();

  using Pair = std::pair<StateId, StateId>;
  std::map<Pair, bool> seen{{{closure.initial(), g.initial()}, true}};
  std::deque<std::pair<Pair, EventString>> frontier{{{closure.initial(), g.initial()}, {}}};
  while (!frontier.empty()) {
    auto [pair, s] = std::move(frontier.front());
    frontier.pop_front();
    const auto [qk, qg] = pair;
    for (const auto& u : uncontrollable) {
      if (g.step(qg, u) && !closure.step(qk, u)) {
        return Verdict::violated(Witness{"controllability", {{"s", s}, {"u", EventString{u}}}});
      }
    }
    for (const auto& [e, nk] : closure.transitions_from(qk)) {
      auto ng = g.step(qg, e);
      if (!ng) continue;
      Pair next{nk, *ng};
      if (!seen[next]) {
        seen[next] = true;
        frontier.push_back({next, append(s, e)});
      }
    }
  }
  return Verdict::holds();
}

Verdict check_lm_closed(const Generator& k, const Generator& g) {
  require_same_alphabet(k, g);
  const std::vector<bool> live = coaccessible_states(k);
  if (!live[k.initial()]) return Verdict::holds("K is empty");

  // Walk K̄ inside k; track G where it is defined. A string s ∈ K̄ is in the
  // symmetric difference iff exactly one of "s ∈ K", "s ∈ L_m(G)" holds.
  using Pair = std::pair<StateId, std::optional<StateId>>;
  std::map<Pair, bool> seen;
  std::deque<std::pair<Pair, EventString>> frontier{{{k.initial(), g.initial()}, {}}};
  seen[{k.initial(), g.initial()}] = true;
  while (!frontier.empty()) {
    auto [pair, s] = std::move(frontier.front());
    frontier.pop_front();
    const auto [qk, qg] = pair;
    const bool in_k = k.is_marked(qk);
    const bool in_lm = qg && g.is_marked(*qg);
    if (in_k != in_lm) {
      return Verdict::violated(Witness{"lm_closed", {{"s", s}}},
                               in_k ? "s ∈ K but s ∉ L_m(G)" : "s ∈ K̄ ∩ L_m(G) but s ∉ K");
    }
    for (const auto& [e, nk] : k.transitions_from(qk)) {
      if (!live[nk]) continue;
      Pair next{nk, qg ? g.step(*qg, e) : std::nullopt};
      if (!seen[next]) {
        seen[next] = true;
        frontier.push_back({next, append(s, e)});
      }
    }
  }
  return Verdict::holds();
}

Verdict check_observability(const Generator& k, const Generator& g,
                            const AlphabetProfile& profile) {
  require_same_alphabet(k, g);
  require_profile_matches(g, profile);
  const ClosureResult closed = prefix_closure_generator(k);
  if (closed.empty_marked_language) return Verdict::holds("K is empty");
  const Generator& closure = closed.generator;
  if (auto escape = first_not_included(closure, g)) {
    throw ValidationError("K is not contained in L(G): " + to_text(*escape) + " ∉ L(G)");
  }

  // Nodes are (K̄-state of s, G-state of s, K̄-state of s'). Observable
  // events advance s and s' together; unobservable events advance one side.
  // The search key (|s|+|s'|, s, s') never decreases along a move and is
  // preserved by appending the same move, so settling nodes in key order
  // yields the least witness first.
  struct Node {
    StateId ks, gs, kt;
    EventString s, t;
  };
  auto greater = [](const Node& a, const Node& b) { return pair_less(b.s, b.t, a.s, a.t); };
  std::priority_queue<Node, std::vector<Node>, decltype(greater)> open(greater);
  std::map<std::tuple<StateId, StateId, StateId>, bool> settled;
  open.push(Node{closure.initial(), g.initial(), closure.initial(), {}, {}});

  const Alphabet& observable = profile.observable;
  while (!open.empty()) {
    Node node = open.top();
    open.pop();
    auto key = std::make_tuple(node.ks, node.gs, node.kt);
    if (settled[key]) continue;
    settled[key] = true;

    for (const auto& e : profile.controllable) {
      if (g.step(node.gs, e) && closure.step(node.kt, e) && !closure.step(node.ks, e)) {
        return Verdict::violated(ObservabilityWitness{node.s, node.t, e}.to_witness());
      }
    }
    for (const auto& e : g.alphabet()) {
      auto ks = closure.step(node.ks, e);
      auto kt = closure.step(node.kt, e);
      if (observable.contains(e)) {
        if (ks && kt) {
          open.push(Node{*ks, *g.step(node.gs, e), *kt, append(node.s, e), append(node.t, e)});
        }
      } else {
        if (ks) open.push(Node{*ks, *g.step(node.gs, e), node.kt, append(node.s, e), node.t});
        if (kt) open.push(Node{node.ks, node.gs, *kt, node.s, append(node.t, e)});
      }
    }
  }
  return Verdict::holds();
}

Verdict brute_force_observability(const LanguageOracle& k, const LanguageOracle& g,
                                  const AlphabetProfile& profile, std::size_t bound) {
  std::map<EventString, std::vector<EventString>> by_observation;
  for (const auto& s : g.enumerate_up_to(bound)) {
    by_observation[erase_outside(s, profile.observable)].push_back(s);
  }

  std::optional<ObservabilityWitness> best;
  for (const auto& [obs, members] : by_observation) {
    for (const auto& s : members) {
      if (!k.contains(s)) continue;
      for (const auto& t : members) {
        if (!k.contains(t)) continue;
        if (best && !pair_less(s, t, best->s, best->s_prime) &&
            !(s == best->s && t == best->s_prime)) {
          continue;
        }
        for (const auto& e : profile.controllable) {
          const EventString se = append(s, e);
          if (g.contains(se) && k.contains(append(t, e)) && !k.contains(se)) {
            ObservabilityWitness w{s, t, e};
            if (!best || pair_less(s, t, best->s, best->s_prime) ||
                (s == best->s && t == best->s_prime && e < best->e)) {
              best = w;
            }
            break;
          }
        }
      }
    }
  }
  if (best) return Verdict::violated(best->to_witness());
  if (g.complete_within(bound)) return Verdict::holds();
  return Verdict::inconclusive(bound, "no violation among strings of length <= " +
                                          std::to_string(bound));
}

Verdict check_sync_nonconflicting(const Generator& k, const Generator& g) {
  const ClosureResult left_closed = prefix_closure_generator(parallel_compose(k, g));
  const ClosureResult k_closed = prefix_closure_generator(k);
  const ClosureResult g_closed = prefix_closure_generator(g);
  const bool left_empty = left_closed.empty_marked_language;
  const bool right_empty = k_closed.empty_marked_language || g_closed.empty_marked_language;
  if (left_empty && right_empty) return Verdict::holds("both sides are empty");
  if (left_empty != right_empty) {
    return Verdict::violated(Witness{"nonconflict", {{"s", EventString{}}}},
                             left_empty ? "in closure(L1) ∥ closure(L2) only"
                                        : "in closure(L1 ∥ L2) only");
  }
  const Generator& left = left_closed.generator;
  const Generator right = parallel_compose(k_closed.generator, g_closed.generator);
  if (auto diff = language_difference(left, right)) {
    return Verdict::violated(Witness{"nonconflict", {{"s", *diff}}},
                             left.generates(*diff) ? "in closure(L1 ∥ L2) only"
                                                   : "in closure(L1) ∥ closure(L2) only");
  }
  return Verdict::holds();
}

bool falsifies_observability(const Generator& k, const Generator& g,
                             const AlphabetProfile& profile, const ObservabilityWitness& w) {
  const auto closure = oracle_of(k, OracleSource::MarkedClosure);
  const auto plant = oracle_of(g, OracleSource::Generated);
  if (erase_outside(w.s, profile.observable) != erase_outside(w.s_prime, profile.observable)) {
    return false;
  }
  if (!profile.controllable.contains(w.e)) return false;
  if (!plant->contains(w.s) || !plant->contains(w.s_prime)) return false;
  const EventString se = append(w.s, w.e);
  return plant->contains(se) && closure->contains(append(w.s_prime, w.e)) &&
         closure->contains(w.s) && !closure->contains(se);
}

bool falsifies_controllability(const Generator& k, const Generator& g,
                               const AlphabetProfile& profile, const EventString& s,
                               const Event& u) {
  const auto closure = oracle_of(k, OracleSource::MarkedClosure);
  const EventString su = append(s, u);
  return closure->contains(s) && profile.uncontrollable().contains(u) && g.generates(su) &&
         !closure->contains(su);
}

}  // namespace hsc
