#include "hsc/generator.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <utility>

namespace hsc {

Generator::Generator(Alphabet alphabet, std::string initial_name)
    : alphabet_(std::move(alphabet)) {
  initial_ = add_state(initial_name);
}

StateId Generator::add_state(const std::string& name) {
  if (auto it = ids_.find(name); it != ids_.end()) return it->second;
  const StateId id = names_.size();
  names_.push_back(name);
  ids_.emplace(name, id);
  delta_.emplace_back();
  marked_.push_back(false);
  return id;
}

std::optional<StateId> Generator::find_state(std::string_view name) const {
  if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
  return std::nullopt;
}

StateId Generator::state(std::string_view name) const {
  if (auto id = find_state(name)) return *id;
  throw ValidationError("unknown state '" + std::string(name) + "'");
}

void Generator::require_state(StateId q) const {
  if (q >= names_.size()) {
    throw ValidationError("unknown state id " + std::to_string(q));
  }
}

void Generator::set_initial(StateId q) {
  require_state(q);
  initial_ = q;
}

void Generator::set_marked(StateId q, bool marked) {
  require_state(q);
  marked_[q] = marked;
}

void Generator::add_transition(StateId src, const Event& e, StateId dst) {
  require_state(src);
  require_state(dst);
  if (!alphabet_.contains(e)) {
    throw ValidationError("transition event '" + e + "' is not in the alphabet");
  }
  auto [it, inserted] = delta_[src].emplace(e, dst);
  if (!inserted && it->second != dst) {
    throw ValidationError("nondeterministic transition: state '" + names_[src] +
                          "' already has a different target on '" + e + "'");
  }
}

void Generator::add_transition(const std::string& src, const Event& e, const std::string& dst) {
  const StateId s = add_state(src);
  const StateId d = add_state(dst);
  add_transition(s, e, d);
}

std::optional<StateId> Generator::step(StateId q, const Event& e) const {
  const auto& out = delta_[q];
  if (auto it = out.find(e); it != out.end()) return it->second;
  return std::nullopt;
}

std::optional<StateId> Generator::delta_star(StateId q, const EventString& s) const {
  require_state(q);
  require_over(s, alphabet_, "delta_star");
  StateId current = q;
  for (const auto& e : s) {
    auto next = step(current, e);
    if (!next) return std::nullopt;
    current = *next;
  }
  return current;
}

bool Generator::generates(const EventString& s) const {
  return delta_star(initial_, s).has_value();
}

bool Generator::marks(const EventString& s) const {
  auto q = delta_star(initial_, s);
  return q && marked_[*q];
}

std::size_t Generator::num_transitions() const {
  std::size_t n = 0;
  for (const auto& out : delta_) n += out.size();
  return n;
}

StringSet enumerate(const Generator& g, std::size_t max_len, LanguageKind which) {
  StringSet out;
  std::deque<std::pair<EventString, StateId>> frontier{{EventString{}, g.initial()}};
  while (!frontier.empty()) {
    auto [s, q] = std::move(frontier.front());
    frontier.pop_front();
    if (which == LanguageKind::Generated || g.is_marked(q)) out.insert(s);
    if (s.size() == max_len) continue;
    for (const auto& [e, next] : g.transitions_from(q)) {
      frontier.emplace_back(append(s, e), next);
    }
  }
  return out;
}

std::vector<StateId> accessible_states(const Generator& g) {
  std::vector<bool> seen(g.num_states(), false);
  std::vector<StateId> order{g.initial()};
  seen[g.initial()] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& [e, next] : g.transitions_from(order[i])) {
      if (!seen[next]) {
        seen[next] = true;
        order.push_back(next);
      }
    }
  }
  return order;
}

std::vector<bool> coaccessible_states(const Generator& g) {
  std::vector<std::vector<StateId>> reverse(g.num_states());
  for (StateId q = 0; q < g.num_states(); ++q) {
    for (const auto& [e, next] : g.transitions_from(q)) reverse[next].push_back(q);
  }
  std::vector<bool> live(g.num_states(), false);
  std::vector<StateId> stack;
  for (StateId q = 0; q < g.num_states(); ++q) {
    if (g.is_marked(q)) {
      live[q] = true;
      stack.push_back(q);
    }
  }
  while (!stack.empty()) {
    const StateId q = stack.back();
    stack.pop_back();
    for (StateId p : reverse[q]) {
      if (!live[p]) {
        live[p] = true;
        stack.push_back(p);
      }
    }
  }
  return live;
}

namespace {

// Copies the sub-automaton on `keep` reachable from the initial state,
// renaming states to their breadth-first index.
Generator restrict_to(const Generator& g, const std::vector<bool>& keep, bool mark_all) {
  Generator out(g.alphabet(), "0");
  std::map<StateId, StateId> renamed{{g.initial(), out.initial()}};
  std::vector<StateId> order{g.initial()};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const StateId q = order[i];
    for (const auto& [e, next] : g.transitions_from(q)) {
      if (!keep[next]) continue;
      auto it = renamed.find(next);
      if (it == renamed.end()) {
        it = renamed.emplace(next, out.add_state(std::to_string(renamed.size()))).first;
        order.push_back(next);
      }
      out.add_transition(renamed.at(q), e, it->second);
    }
  }
  for (const auto& [old_id, new_id] : renamed) {
    out.set_marked(new_id, mark_all || g.is_marked(old_id));
  }
  return out;
}

}  // namespace

Generator accessible_part(const Generator& g) {
  return restrict_to(g, std::vector<bool>(g.num_states(), true), false);
}

bool is_acyclic(const Generator& g) {
  return longest_string(g).has_value();
}

std::optional<std::size_t> longest_string(const Generator& g) {
  enum class Mark { Unvisited, Active, Done };
  std::vector<Mark> mark(g.num_states(), Mark::Unvisited);
  std::vector<std::size_t> depth(g.num_states(), 0);
  bool cyclic = false;
  std::function<void(StateId)> visit = [&](StateId q) {
    mark[q] = Mark::Active;
    std::size_t best = 0;
    for (const auto& [e, next] : g.transitions_from(q)) {
      if (mark[next] == Mark::Active) {
        cyclic = true;
        continue;
      }
      if (mark[next] == Mark::Unvisited) visit(next);
      best = std::max(best, depth[next] + 1);
    }
    depth[q] = best;
    mark[q] = Mark::Done;
  };
  visit(g.initial());
  if (cyclic) return std::nullopt;
  return depth[g.initial()];
}

Generator empty_language_generator(Alphabet alphabet) {
  return Generator(std::move(alphabet), "0");
}

Generator with_all_marked(const Generator& g) {
  Generator out = g;
  for (StateId q = 0; q < out.num_states(); ++q) out.set_marked(q);
  return out;
}

Generator parallel_compose(const Generator& g1, const Generator& g2) {
  const Alphabet events = unite(g1.alphabet(), g2.alphabet());
  Generator out(events, "0");
  std::map<std::pair<StateId, StateId>, StateId> ids{{{g1.initial(), g2.initial()}, out.initial()}};
  std::vector<std::pair<StateId, StateId>> order{{g1.initial(), g2.initial()}};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto [q1, q2] = order[i];
    const StateId src = ids.at(order[i]);
    out.set_marked(src, g1.is_marked(q1) && g2.is_marked(q2));
    for (const auto& e : events) {
      const bool in1 = g1.alphabet().contains(e);
      const bool in2 = g2.alphabet().contains(e);
      std::optional<StateId> n1 = in1 ? g1.step(q1, e) : std::optional<StateId>(q1);
      std::optional<StateId> n2 = in2 ? g2.step(q2, e) : std::optional<StateId>(q2);
      if (!n1 || !n2) continue;
      const std::pair<StateId, StateId> key{*n1, *n2};
      auto it = ids.find(key);
      if (it == ids.end()) {
        it = ids.emplace(key, out.add_state(std::to_string(ids.size()))).first;
        order.push_back(key);
      }
      out.add_transition(src, e, it->second);
    }
  }
  return out;
}

ClosureResult prefix_closure_generator(const Generator& g) {
  const std::vector<bool> live = coaccessible_states(g);
  if (!live[g.initial()]) {
    return ClosureResult{empty_language_generator(g.alphabet()), true};
  }
  return ClosureResult{restrict_to(g, live, true), false};
}

std::optional<EventString> first_not_included(const Generator& lhs, const Generator& rhs) {
  if (lhs.alphabet() != rhs.alphabet()) {
    throw ValidationError("language comparison requires equal alphabets: " +
                          to_text(lhs.alphabet()) + " vs " + to_text(rhs.alphabet()));
  }
  // Breadth-first over state pairs with sorted events discovers every pair
  // through its shortlex-least string, so the first escape found is minimal.
  std::map<std::pair<StateId, StateId>, bool> seen;
  std::deque<std::pair<std::pair<StateId, StateId>, EventString>> frontier;
  frontier.push_back({{lhs.initial(), rhs.initial()}, {}});
  seen[{lhs.initial(), rhs.initial()}] = true;
  while (!frontier.empty()) {
    auto [pair, s] = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& [e, next_l] : lhs.transitions_from(pair.first)) {
      auto next_r = rhs.step(pair.second, e);
      if (!next_r) return append(s, e);
      std::pair<StateId, StateId> key{next_l, *next_r};
      if (!seen[key]) {
        seen[key] = true;
        frontier.push_back({key, append(s, e)});
      }
    }
  }
  return std::nullopt;
}

std::optional<EventString> language_difference(const Generator& lhs, const Generator& rhs) {
  auto a = first_not_included(lhs, rhs);
  auto b = first_not_included(rhs, lhs);
  if (!a) return b;
  if (!b) return a;
  return ShortLex{}(*b, *a) ? b : a;
}

}  // namespace hsc
