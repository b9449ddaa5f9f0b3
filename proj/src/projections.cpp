#include "hsc/projections.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <vector>

namespace hsc {

void AlphabetProfile::validate() const {
  if (!is_subset(observable, sigma)) {
    throw ValidationError("observable events " + to_text(observable) + " not within " +
                          to_text(sigma));
  }
  if (!is_subset(controllable, sigma)) {
    throw ValidationError("controllable events " + to_text(controllable) + " not within " +
                          to_text(sigma));
  }
  if (!is_subset(high, sigma)) {
    throw ValidationError("high-level events " + to_text(high) + " not within " +
                          to_text(sigma));
  }
}

AlphabetProfile AlphabetProfile::full(Alphabet sigma) {
  AlphabetProfile profile;
  profile.observable = sigma;
  profile.sigma = std::move(sigma);
  return profile;
}

ProjectionKind ProjectionKind::parse(std::string_view name) {
  std::string upper;
  for (char c : name) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (upper == "P") return p();
  if (upper == "A") return a();
  if (upper == "P_HI" || upper == "PHI") return p_hi();
  if (upper == "A_O" || upper == "AO") return a_o();
  throw ValidationError("unknown projection kind '" + std::string(name) +
                        "' (expected P, A, P_HI or A_O)");
}

std::string_view to_string(ProjectionKind::Tag tag) {
  switch (tag) {
    case ProjectionKind::Tag::P:
      return "P";
    case ProjectionKind::Tag::A:
      return "A";
    case ProjectionKind::Tag::PHi:
      return "P_HI";
    case ProjectionKind::Tag::AO:
      return "A_O";
    case ProjectionKind::Tag::Custom:
      return "CUSTOM";
  }
  return "?";
}

Alphabet source_alphabet(const AlphabetProfile& profile, const ProjectionKind& kind) {
  switch (kind.tag) {
    case ProjectionKind::Tag::PHi:
      return profile.high;
    case ProjectionKind::Tag::AO:
      return profile.observable;
    default:
      return profile.sigma;
  }
}

Alphabet target_alphabet(const AlphabetProfile& profile, const ProjectionKind& kind) {
  switch (kind.tag) {
    case ProjectionKind::Tag::P:
      return profile.observable;
    case ProjectionKind::Tag::A:
      return profile.high;
    case ProjectionKind::Tag::PHi:
    case ProjectionKind::Tag::AO:
      return profile.high_observable();
    case ProjectionKind::Tag::Custom:
      if (!is_subset(kind.custom_target, profile.sigma)) {
        throw ValidationError("custom projection target " + to_text(kind.custom_target) +
                              " not within " + to_text(profile.sigma));
      }
      return kind.custom_target;
  }
  return {};
}

EventString project(const AlphabetProfile& profile, const ProjectionKind& kind,
                    const EventString& s) {
  require_over(s, source_alphabet(profile, kind), std::string("projection ") +
                                                      std::string(to_string(kind.tag)));
  return erase_outside(s, target_alphabet(profile, kind));
}

Generator inverse_project_generator(const Generator& g, const AlphabetProfile& profile,
                                    const ProjectionKind& kind) {
  const Alphabet source = source_alphabet(profile, kind);
  const Alphabet target = target_alphabet(profile, kind);
  if (g.alphabet() != target) {
    throw ValidationError("inverse projection expects a generator over " + to_text(target) +
                          ", got " + to_text(g.alphabet()));
  }
  const Alphabet erased = subtract(source, target);
  Generator out(source, g.state_name(g.initial()));
  for (StateId q = 0; q < g.num_states(); ++q) out.add_state(g.state_name(q));
  for (StateId q = 0; q < g.num_states(); ++q) {
    const StateId src = out.state(g.state_name(q));
    out.set_marked(src, g.is_marked(q));
    for (const auto& [e, next] : g.transitions_from(q)) {
      out.add_transition(src, e, out.state(g.state_name(next)));
    }
    for (const auto& e : erased) out.add_transition(src, e, src);
  }
  return out;
}

namespace {

using StateSet = std::set<StateId>;

// Nondeterministic automaton without silent moves; only lives inside
// project_generator.
struct Nfa {
  std::vector<std::map<Event, StateSet>> delta;
  std::vector<bool> marked;
};

StateSet silent_closure(const Generator& g, const Alphabet& erased, StateId q) {
  StateSet closure{q};
  std::vector<StateId> stack{q};
  while (!stack.empty()) {
    const StateId p = stack.back();
    stack.pop_back();
    for (const auto& [e, next] : g.transitions_from(p)) {
      if (erased.contains(e) && closure.insert(next).second) stack.push_back(next);
    }
  }
  return closure;
}

Nfa eliminate_silent_moves(const Generator& g, const Alphabet& erased) {
  std::vector<StateSet> closures;
  closures.reserve(g.num_states());
  for (StateId q = 0; q < g.num_states(); ++q) closures.push_back(silent_closure(g, erased, q));

  Nfa nfa;
  nfa.delta.resize(g.num_states());
  nfa.marked.assign(g.num_states(), false);
  for (StateId q = 0; q < g.num_states(); ++q) {
    for (StateId p : closures[q]) {
      if (g.is_marked(p)) nfa.marked[q] = true;
      for (const auto& [e, next] : g.transitions_from(p)) {
        if (erased.contains(e)) continue;
        nfa.delta[q][e].insert(closures[next].begin(), closures[next].end());
      }
    }
  }
  return nfa;
}

}  // namespace

Generator project_generator(const Generator& g, const AlphabetProfile& profile,
                            const ProjectionKind& kind) {
  const Alphabet source = source_alphabet(profile, kind);
  const Alphabet target = target_alphabet(profile, kind);
  if (g.alphabet() != source) {
    throw ValidationError("projection expects a generator over " + to_text(source) + ", got " +
                          to_text(g.alphabet()));
  }
  const Nfa nfa = eliminate_silent_moves(g, subtract(source, target));

  Generator out(target, "0");
  std::map<StateSet, StateId> ids{{StateSet{g.initial()}, out.initial()}};
  std::vector<StateSet> order{StateSet{g.initial()}};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const StateSet current = order[i];
    const StateId src = ids.at(current);
    std::map<Event, StateSet> moves;
    for (StateId q : current) {
      if (nfa.marked[q]) out.set_marked(src);
      for (const auto& [e, targets] : nfa.delta[q]) {
        moves[e].insert(targets.begin(), targets.end());
      }
    }
    for (const auto& [e, targets] : moves) {
      auto it = ids.find(targets);
      if (it == ids.end()) {
        it = ids.emplace(targets, out.add_state(std::to_string(ids.size()))).first;
        order.push_back(targets);
      }
      out.add_transition(src, e, it->second);
    }
  }
  return out;
}

Verdict check_diagram(const AlphabetProfile& profile, const StringSet& strings) {
  for (const auto& s : strings) {
    const EventString upper = project(profile, ProjectionKind::p_hi(),
                                      project(profile, ProjectionKind::a(), s));
    const EventString lower = project(profile, ProjectionKind::a_o(),
                                      project(profile, ProjectionKind::p(), s));
    if (upper != lower) {
      return Verdict::violated(Witness{"diagram", {{"s", s}, {"via_A", upper}, {"via_P", lower}}});
    }
  }
  return Verdict::holds("diagram commutes on " + std::to_string(strings.size()) + " strings");
}

}  // namespace hsc
