#include "hsc/pcp.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace hsc::pcp {

Event index_event(std::size_t i) { return "i" + std::to_string(i); }

std::optional<std::size_t> parse_index_event(const Event& e) {
  if (e.size() < 2 || e.front() != 'i' || e[1] == '0') return std::nullopt;
  std::size_t value = 0;
  const char* first = e.data() + 1;
  const char* last = e.data() + e.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return value;
}

Alphabet Instance::index_alphabet() const {
  Alphabet out;
  for (std::size_t i = 1; i <= pairs.size(); ++i) out.insert(index_event(i));
  return out;
}

Validation validate(const Instance& inst) {
  auto invalid = [](std::string reason) {
    return Validation{Validation::Kind::Invalid, 0, std::move(reason)};
  };
  if (inst.pairs.empty()) return invalid("instance has no pairs");
  for (const auto& reserved : {kAt, kHash, kDollar}) {
    if (inst.base.contains(reserved)) {
      return invalid("base alphabet uses reserved symbol '" + reserved + "'");
    }
  }
  for (const auto& e : inst.index_alphabet()) {
    if (inst.base.contains(e)) return invalid("base alphabet clashes with index event '" + e + "'");
  }
  for (std::size_t i = 1; i <= inst.size(); ++i) {
    for (const EventString* word : {&inst.top(i), &inst.bottom(i)}) {
      if (word->empty()) return invalid("pair " + std::to_string(i) + " has an empty word");
      for (const auto& e : *word) {
        if (!inst.base.contains(e)) {
          return invalid("pair " + std::to_string(i) + " uses symbol '" + e +
                         "' outside the base alphabet");
        }
      }
    }
  }
  for (std::size_t i = 1; i <= inst.size(); ++i) {
    if (inst.top(i) == inst.bottom(i)) {
      return Validation{Validation::Kind::TriviallySolvable, i,
                        "w_" + std::to_string(i) + " = u_" + std::to_string(i)};
    }
  }
  return {};
}

EventString top_concat(const Instance& inst, const IndexSequence& seq) {
  EventString out;
  for (std::size_t i : seq) out = concat(out, inst.top(i));
  return out;
}

EventString bottom_concat(const Instance& inst, const IndexSequence& seq) {
  EventString out;
  for (std::size_t i : seq) out = concat(out, inst.bottom(i));
  return out;
}

bool is_solution(const Instance& inst, const IndexSequence& seq) {
  if (seq.empty()) return false;
  for (std::size_t i : seq) {
    if (i == 0 || i > inst.size()) return false;
  }
  return top_concat(inst, seq) == bottom_concat(inst, seq);
}

namespace {

// The unmatched suffix of the longer concatenation. `top_ahead` tells which
// side it belongs to; the empty overhang is always stored with top_ahead set.
struct Overhang {
  bool top_ahead = true;
  EventString rest;

  auto operator<=>(const Overhang&) const = default;
};

std::optional<Overhang> extend(const Overhang& o, const EventString& top, const EventString& bottom) {
  EventString longer = concat(o.rest, o.top_ahead ? top : bottom);
  const EventString& shorter = o.top_ahead ? bottom : top;
  if (is_prefix(shorter, longer)) {
    return Overhang{o.top_ahead || longer.size() == shorter.size(),
                    EventString(longer.begin() + static_cast<std::ptrdiff_t>(shorter.size()), longer.end())};
  }
  if (is_prefix(longer, shorter)) {
    EventString rest(shorter.begin() + static_cast<std::ptrdiff_t>(longer.size()), shorter.end());
    return Overhang{rest.empty() ? true : !o.top_ahead, std::move(rest)};
  }
  return std::nullopt;
}

EventString reversed(const EventString& s) { return EventString(s.rbegin(), s.rend()); }

// w_ik^R … w_i1^R (or the u-side), the reversal of the whole concatenation.
EventString reversed_tail(const Instance& inst, const IndexSequence& seq, bool top) {
  return reversed(top ? top_concat(inst, seq) : bottom_concat(inst, seq));
}

EventString index_string(const IndexSequence& seq) {
  EventString out;
  for (std::size_t i : seq) out.push_back(index_event(i));
  return out;
}

}  // namespace

std::optional<IndexSequence> solve_bounded(const Instance& inst, std::size_t k_max) {
  // Levels are expanded in lexicographic order, and an overhang reached
  // again later can only lead to longer or lexicographically larger
  // solutions, so it is visited once.
  std::set<Overhang> seen{Overhang{}};
  std::deque<std::pair<Overhang, IndexSequence>> frontier{{Overhang{}, {}}};
  while (!frontier.empty()) {
    auto [overhang, seq] = std::move(frontier.front());
    frontier.pop_front();
    if (seq.size() == k_max) continue;
    for (std::size_t i = 1; i <= inst.size(); ++i) {
      auto next = extend(overhang, inst.top(i), inst.bottom(i));
      if (!next) continue;
      IndexSequence longer = seq;
      longer.push_back(i);
      if (next->rest.empty()) return longer;
      if (seen.insert(*next).second) frontier.emplace_back(std::move(*next), std::move(longer));
    }
  }
  return std::nullopt;
}

ReductionOracle::ReductionOracle(Instance inst) : inst_(std::move(inst)) {
  alphabet_ = unite(inst_.base, inst_.index_alphabet());
  alphabet_.insert({kAt, kHash, kDollar});
}

bool ReductionOracle::contains(const EventString& x) const {
  if (x.empty()) return true;
  std::size_t pos = 0;
  const bool top_branch = x[0] == kAt;
  if (top_branch) ++pos;

  IndexSequence seq;
  while (pos < x.size()) {
    auto i = parse_index_event(x[pos]);
    if (!i || *i > inst_.size()) break;
    seq.push_back(*i);
    ++pos;
  }
  if (pos == x.size()) return top_branch || !seq.empty();
  if (seq.empty() || x[pos] != kDollar) return false;
  ++pos;

  const EventString tail = reversed_tail(inst_, seq, top_branch);
  for (std::size_t j = 0; j < tail.size(); ++j, ++pos) {
    if (pos == x.size()) return true;
    if (x[pos] != tail[j]) return false;
  }
  if (pos == x.size()) return true;
  return pos + 1 == x.size() && x[pos] == (top_branch ? kAt : kHash);
}

namespace {

// Emits every member with at most `max_indices` index events and length at
// most `max_len`.
void visit_members(const Instance& inst, std::size_t max_len, std::size_t max_indices,
                   const std::function<void(const EventString&)>& emit) {
  emit({});
  IndexSequence seq;
  std::function<void(bool)> grow = [&](bool top_branch) {
    const EventString head = [&] {
      EventString h = top_branch ? EventString{kAt} : EventString{};
      return concat(h, index_string(seq));
    }();
    if (!seq.empty() || top_branch) {
      if (head.size() <= max_len) emit(head);
    }
    if (!seq.empty() && head.size() + 1 <= max_len) {
      EventString x = append(head, kDollar);
      emit(x);
      const EventString tail = reversed_tail(inst, seq, top_branch);
      for (const auto& e : tail) {
        if (x.size() == max_len) break;
        x.push_back(e);
        emit(x);
      }
      if (x.size() == head.size() + 1 + tail.size() && x.size() < max_len) {
        emit(append(x, top_branch ? kAt : kHash));
      }
    }
    if (seq.size() == max_indices || head.size() + 1 > max_len) return;
    for (std::size_t i = 1; i <= inst.size(); ++i) {
      seq.push_back(i);
      grow(top_branch);
      seq.pop_back();
    }
  };
  grow(true);
  grow(false);
}

}  // namespace

StringSet ReductionOracle::enumerate_up_to(std::size_t n) const {
  StringSet out;
  visit_members(inst_, n, n, [&](const EventString& x) { out.insert(x); });
  return out;
}

StringSet ReductionOracle::enumerate_by_index_count(std::size_t k_max) const {
  StringSet out;
  visit_members(inst_, static_cast<std::size_t>(-1), k_max,
                [&](const EventString& x) { out.insert(x); });
  return out;
}

StringSet ReductionOracle::image_up_to(std::size_t n, const Alphabet& target) const {
  const Alphabet reserved{kAt, kHash, kDollar};
  if (!is_subset(target, reserved)) return LanguageOracle::image_up_to(n, target);

  // A member's image under a reserved-only target depends only on which
  // reserved symbols it contains; each shape is listed with the length of
  // its shortest member.
  std::size_t shortest_top = static_cast<std::size_t>(-1);
  std::size_t shortest_bottom = static_cast<std::size_t>(-1);
  for (const auto& [w, u] : inst_.pairs) {
    shortest_top = std::min(shortest_top, w.size());
    shortest_bottom = std::min(shortest_bottom, u.size());
  }
  const std::vector<std::pair<EventString, std::size_t>> shapes = {
      {{}, 0},                                  // ε, i1…ij
      {{kAt}, 1},                               // @ i1…ij
      {{kAt, kDollar}, 3},                      // @ i1…im $ y
      {{kAt, kDollar, kAt}, 4 + shortest_top},  // @ i1…im $ w…^R @
      {{kDollar}, 2},                           // i1…im $ y
      {{kDollar, kHash}, 3 + shortest_bottom},  // i1…im $ u…^R #
  };
  StringSet out;
  for (const auto& [shape, length] : shapes) {
    if (length <= n) out.insert(erase_outside(shape, target));
  }
  return out;
}

std::shared_ptr<const ReductionOracle> build_reduction_oracle(const Instance& inst) {
  if (auto v = validate(inst); v.kind == Validation::Kind::Invalid) {
    throw ValidationError("invalid PCP instance: " + v.reason);
  }
  return std::make_shared<ReductionOracle>(inst);
}

AlphabetProfile reduction_profile(const Instance& inst) {
  if (auto v = validate(inst); v.kind == Validation::Kind::Invalid) {
    throw ValidationError("invalid PCP instance: " + v.reason);
  }
  AlphabetProfile profile;
  profile.sigma = unite(inst.base, inst.index_alphabet());
  profile.sigma.insert({kAt, kHash, kDollar});
  profile.high = {kAt, kHash};
  profile.observable = unite(inst.base, inst.index_alphabet());
  return profile;
}

std::vector<CaseWitness> case_witnesses(const Instance& inst, const IndexSequence& sol) {
  if (!is_solution(inst, sol)) {
    throw ValidationError("index sequence " + to_text(sol) + " is not a solution");
  }
  const EventString at{kAt};
  const EventString at_at{kAt, kAt};
  const EventString hash{kHash};

  const IndexSequence first{1};
  const EventString top_one = concat(append(index_string(first), kDollar), reversed(inst.top(1)));
  const EventString bottom_one =
      concat(append(index_string(first), kDollar), reversed(inst.bottom(1)));
  const EventString top_full =
      concat(append(index_string(sol), kDollar), reversed_tail(inst, sol, true));
  const EventString bottom_full =
      concat(append(index_string(sol), kDollar), reversed_tail(inst, sol, false));
  const EventString at_top_one = concat(at, top_one);
  const EventString at_top_full = concat(at, top_full);

  std::vector<CaseWitness> cases = {
      {1, {at, at_at}, {at_top_one, append(at_top_one, kAt)}},
      {2, {at, hash}, {at_top_full, append(bottom_full, kHash)}},
      {3, {at, {}}, {at_top_full, bottom_full}},
      {4, {at_at, hash}, {append(at_top_full, kAt), append(bottom_full, kHash)}},
      {5, {at_at, {}}, {append(at_top_full, kAt), bottom_full}},
      // The u-branch word for index 1; the w-branch string would not end in #.
      {6, {hash, {}}, {append(bottom_one, kHash), bottom_one}},
  };

  const ReductionOracle oracle(inst);
  const AlphabetProfile profile = reduction_profile(inst);
  for (const auto& c : cases) {
    if (!is_valid_oc_witness(oracle, profile, c.request, c.witness)) {
      throw std::logic_error("case " + std::to_string(c.case_number) +
                             " witness failed re-verification");
    }
  }
  return cases;
}

ReductionCheck check_oc_reduction(const Instance& inst, std::size_t k_max) {
  const Validation v = validate(inst);
  if (v.kind == Validation::Kind::Invalid) {
    throw ValidationError("invalid PCP instance: " + v.reason);
  }
  ReductionCheck out;
  out.critical_pair = OcWitnessRequest{{kAt, kAt}, {kHash}};
  out.solution = solve_bounded(inst, k_max);
  if (out.solution) {
    out.cases = case_witnesses(inst, *out.solution);
    out.verdict = Verdict::holds("solution " + to_text(*out.solution) +
                                 " yields witnesses for all six pairs t != t'");
    return out;
  }
  out.verdict = Verdict::inconclusive(
      k_max, "no solution with <= " + std::to_string(k_max) +
                 " indices; critical pair (@ @, #) has no witness within the bound");
  return out;
}

std::optional<OcWitness> direct_critical_witness(const Instance& inst, std::size_t k_max) {
  const auto oracle = build_reduction_oracle(inst);
  const AlphabetProfile profile = reduction_profile(inst);
  const EventString at_at{kAt, kAt};
  const EventString hash{kHash};

  std::map<EventString, EventString> tops;
  std::map<EventString, EventString> bottoms;
  for (const auto& x : oracle->enumerate_by_index_count(k_max)) {
    const EventString a = project(profile, ProjectionKind::a(), x);
    if (a == at_at) tops.try_emplace(project(profile, ProjectionKind::p(), x), x);
    if (a == hash) bottoms.try_emplace(project(profile, ProjectionKind::p(), x), x);
  }
  std::optional<OcWitness> best;
  for (const auto& [observation, s] : tops) {
    auto it = bottoms.find(observation);
    if (it == bottoms.end()) continue;
    OcWitness w{s, it->second};
    if (!best || ShortLex{}(w.s, best->s)) best = w;
  }
  return best;
}

std::optional<IndexSequence> decode_solution(const Instance& inst, const OcWitness& w) {
  const AlphabetProfile profile = reduction_profile(inst);
  const EventString observed = project(profile, ProjectionKind::p(), w.s);
  if (observed != project(profile, ProjectionKind::p(), w.s_prime)) return std::nullopt;
  IndexSequence seq;
  for (const auto& e : observed) {
    if (auto i = parse_index_event(e); i && *i <= inst.size()) seq.push_back(*i);
  }
  if (!is_solution(inst, seq)) return std::nullopt;
  return seq;
}

std::string to_text(const IndexSequence& seq) {
  std::string out = "(";
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(seq[i]);
  }
  return out + ")";
}

}  // namespace hsc::pcp
