#include "hsc/observation_consistency.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "hsc/supervisory.hpp"

namespace hsc {

namespace {

bool pair_less(const EventString& s1, const EventString& t1, const EventString& s2,
               const EventString& t2) {
  const std::size_t n1 = s1.size() + t1.size();
  const std::size_t n2 = s2.size() + t2.size();
  if (n1 != n2) return n1 < n2;
  if (s1 != s2) return ShortLex{}(s1, s2);
  return ShortLex{}(t1, t2);
}

void require_language_over_profile(const LanguageOracle& l, const AlphabetProfile& profile) {
  profile.validate();
  if (!is_subset(l.alphabet(), profile.sigma)) {
    throw ValidationError("language alphabet " + to_text(l.alphabet()) + " not within " +
                          to_text(profile.sigma));
  }
}

// For each abstraction t = A(s): the shortlex-least member s for every
// observation P(s). Members arrive in shortlex order, so first wins.
using ObservationIndex = std::map<EventString, std::map<EventString, EventString>, ShortLex>;

ObservationIndex index_members(const StringSet& members, const AlphabetProfile& profile) {
  ObservationIndex index;
  for (const auto& s : members) {
    index[erase_outside(s, profile.high)].try_emplace(erase_outside(s, profile.observable), s);
  }
  return index;
}

std::optional<OcWitness> best_pair(const std::map<EventString, EventString>& left,
                                   const std::map<EventString, EventString>& right) {
  std::optional<OcWitness> best;
  for (const auto& [observation, s] : left) {
    auto it = right.find(observation);
    if (it == right.end()) continue;
    if (!best || pair_less(s, it->second, best->s, best->s_prime)) {
      best = OcWitness{s, it->second};
    }
  }
  return best;
}

std::string describe_pair(const EventString& t, const EventString& t_prime) {
  return "(" + to_text(t) + ", " + to_text(t_prime) + ")";
}

// Shortlex-least continuation u ∈ (Σ \ Σ_hi)*, |u| <= u_bound, with sue ∈ L,
// keyed by P(u).
std::map<EventString, EventString> continuations(const LanguageOracle& l,
                                                 const AlphabetProfile& profile,
                                                 const EventString& s, const Event& e,
                                                 std::size_t u_bound) {
  const Alphabet low = subtract(profile.sigma, profile.high);
  std::map<EventString, EventString> out;
  std::deque<EventString> frontier{EventString{}};
  while (!frontier.empty()) {
    EventString u = std::move(frontier.front());
    frontier.pop_front();
    const EventString su = concat(s, u);
    if (l.contains(append(su, e))) out.try_emplace(erase_outside(u, profile.observable), u);
    if (u.size() == u_bound) continue;
    for (const auto& x : low) {
      if (l.contains(append(su, x))) frontier.push_back(append(u, x));
    }
  }
  return out;
}

}  // namespace

std::optional<OcWitness> find_oc_witness(const LanguageOracle& l, const AlphabetProfile& profile,
                                         const OcWitnessRequest& req, std::size_t s_bound) {
  require_language_over_profile(l, profile);
  require_over(req.t, profile.high, "OC request t");
  require_over(req.t_prime, profile.high, "OC request t'");
  const Alphabet high_obs = profile.high_observable();
  if (erase_outside(req.t, high_obs) != erase_outside(req.t_prime, high_obs)) {
    throw ValidationError("OC request " + describe_pair(req.t, req.t_prime) +
                          " has different P_hi images");
  }
  const ObservationIndex index = index_members(l.enumerate_up_to(s_bound), profile);
  auto left = index.find(req.t);
  auto right = index.find(req.t_prime);
  if (left == index.end() || right == index.end()) {
    throw ValidationError("OC request " + describe_pair(req.t, req.t_prime) +
                          " is not realised in A(L) by members of length <= " +
                          std::to_string(s_bound));
  }
  return best_pair(left->second, right->second);
}

Verdict check_oc(const LanguageOracle& l, const AlphabetProfile& profile, std::size_t t_bound,
                 std::size_t s_bound, OcOptions options) {
  require_language_over_profile(l, profile);
  const bool language_complete = l.complete_within(s_bound);
  const ObservationIndex index = index_members(l.enumerate_up_to(s_bound), profile);
  const Alphabet high_obs = profile.high_observable();

  std::vector<EventString> images;
  bool images_complete = language_complete;
  for (const auto& [t, members] : index) {
    if (t.size() <= t_bound) {
      images.push_back(t);
    } else {
      images_complete = false;
    }
  }

  std::vector<std::pair<EventString, EventString>> pairs;
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i; j < images.size(); ++j) {
      if (erase_outside(images[i], high_obs) == erase_outside(images[j], high_obs)) {
        pairs.emplace_back(images[i], images[j]);
      }
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    return pair_less(a.first, a.second, b.first, b.second);
  });

  const bool absence_definitive = language_complete || options.witness_absence_exact;
  std::vector<std::string> unresolved;
  for (const auto& [t, t_prime] : pairs) {
    if (best_pair(index.at(t), index.at(t_prime))) continue;
    if (absence_definitive) {
      return Verdict::violated(Witness{"oc", {{"t", t}, {"t_prime", t_prime}}},
                               "no s, s' realise " + describe_pair(t, t_prime) +
                                   " with equal observation");
    }
    unresolved.push_back(describe_pair(t, t_prime));
  }

  if (!unresolved.empty()) {
    std::string detail = "no witness within s-bound " + std::to_string(s_bound) + " for";
    for (const auto& p : unresolved) detail += " " + p;
    return Verdict::inconclusive(s_bound, detail);
  }
  if (images_complete) {
    return Verdict::holds("checked " + std::to_string(pairs.size()) + " pairs");
  }
  return Verdict::inconclusive(s_bound, "holds for " + std::to_string(pairs.size()) +
                                            " pairs up to t-bound " + std::to_string(t_bound) +
                                            ", s-bound " + std::to_string(s_bound));
}

std::optional<LocWitness> find_loc_witness(const LanguageOracle& l, const AlphabetProfile& profile,
                                           const EventString& s, const EventString& s_prime,
                                           const Event& e, std::size_t u_bound) {
  const auto left = continuations(l, profile, s, e, u_bound);
  const auto right = continuations(l, profile, s_prime, e, u_bound);
  auto best = best_pair(left, right);
  if (!best) return std::nullopt;
  return LocWitness{s, s_prime, e, best->s, best->s_prime};
}

Verdict check_loc(const LanguageOracle& l, const AlphabetProfile& profile, std::size_t s_bound,
                  std::optional<std::size_t> u_bound) {
  require_language_over_profile(l, profile);
  const std::size_t continuation_bound = u_bound.value_or(s_bound);
  const StringSet members = l.enumerate_up_to(s_bound);
  const auto longest = l.longest_member();
  const bool exact = longest && *longest <= s_bound && *longest <= continuation_bound;

  std::set<EventString> abstract_language;
  std::map<EventString, std::vector<EventString>> by_observation;
  for (const auto& s : members) {
    abstract_language.insert(erase_outside(s, profile.high));
    by_observation[erase_outside(s, profile.observable)].push_back(s);
  }
  const Alphabet events = profile.high_controllable();
  auto enabled_above = [&](const EventString& s, const Event& e) {
    return abstract_language.contains(append(erase_outside(s, profile.high), e));
  };

  std::map<std::pair<EventString, Event>, std::map<EventString, EventString>> cache;
  auto continuation_of = [&](const EventString& s, const Event& e)
      -> const std::map<EventString, EventString>& {
    auto key = std::make_pair(s, e);
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(key, continuations(l, profile, s, e, continuation_bound)).first;
    }
    return it->second;
  };

  std::optional<std::tuple<EventString, EventString, Event>> worst;
  std::size_t obligations = 0;
  for (const auto& [observation, group] : by_observation) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i; j < group.size(); ++j) {
        const auto& s = group[i];
        const auto& t = group[j];
        if (worst && pair_less(std::get<0>(*worst), std::get<1>(*worst), s, t)) continue;
        for (const auto& e : events) {
          if (!enabled_above(s, e) || !enabled_above(t, e)) continue;
          ++obligations;
          if (best_pair(continuation_of(s, e), continuation_of(t, e))) continue;
          if (!worst || pair_less(s, t, std::get<0>(*worst), std::get<1>(*worst))) {
            worst = std::make_tuple(s, t, e);
          }
          break;
        }
      }
    }
  }

  if (worst) {
    const auto& [s, t, e] = *worst;
    Witness w{"loc", {{"s", s}, {"s_prime", t}, {"e", EventString{e}}}};
    if (exact) {
      return Verdict::violated(std::move(w), "no observation-equivalent continuations to " + e);
    }
    return Verdict::inconclusive(s_bound, "no continuations found within bounds for s = " +
                                              to_text(s) + ", s' = " + to_text(t) + ", e = " + e);
  }
  if (exact) return Verdict::holds("checked " + std::to_string(obligations) + " obligations");
  return Verdict::inconclusive(s_bound, "holds for " + std::to_string(obligations) +
                                            " obligations up to s-bound " +
                                            std::to_string(s_bound));
}

bool is_valid_oc_witness(const LanguageOracle& l, const AlphabetProfile& profile,
                         const OcWitnessRequest& req, const OcWitness& w) {
  return l.contains(w.s) && l.contains(w.s_prime) &&
         project(profile, ProjectionKind::a(), w.s) == req.t &&
         project(profile, ProjectionKind::a(), w.s_prime) == req.t_prime &&
         project(profile, ProjectionKind::p(), w.s) == project(profile, ProjectionKind::p(), w.s_prime);
}

bool is_valid_loc_witness(const LanguageOracle& l, const AlphabetProfile& profile,
                          const LocWitness& w) {
  const Alphabet low = subtract(profile.sigma, profile.high);
  if (!profile.high_controllable().contains(w.e)) return false;
  if (!is_subset(Alphabet(w.u.begin(), w.u.end()), low) ||
      !is_subset(Alphabet(w.u_prime.begin(), w.u_prime.end()), low)) {
    return false;
  }
  return project(profile, ProjectionKind::p(), w.u) ==
             project(profile, ProjectionKind::p(), w.u_prime) &&
         project(profile, ProjectionKind::p(), w.s) ==
             project(profile, ProjectionKind::p(), w.s_prime) &&
         l.contains(append(concat(w.s, w.u), w.e)) &&
         l.contains(append(concat(w.s_prime, w.u_prime), w.e));
}

bool Theorem1Report::hypotheses_hold() const {
  return oc.status == Status::Holds && loc.status == Status::Holds &&
         nonconflicting.status == Status::Holds;
}

AlphabetProfile high_level_profile(const AlphabetProfile& profile) {
  AlphabetProfile out;
  out.sigma = profile.high;
  out.observable = profile.high_observable();
  out.controllable = profile.high_controllable();
  out.high = profile.high;
  return out;
}

Theorem1Report theorem1_harness(const Generator& g, const Generator& k,
                                const AlphabetProfile& profile) {
  profile.validate();
  if (g.alphabet() != profile.sigma) {
    throw ValidationError("plant alphabet " + to_text(g.alphabet()) + " differs from profile " +
                          to_text(profile.sigma));
  }
  if (k.alphabet() != profile.high) {
    throw ValidationError("specification alphabet " + to_text(k.alphabet()) +
                          " must equal the high-level alphabet " + to_text(profile.high));
  }
  const Generator plant = accessible_part(g);
  const auto longest = longest_string(plant);
  if (!longest) throw ValidationError("plant language is infinite; the harness needs L(G) finite");

  const Generator plant_language = with_all_marked(plant);
  const Generator abstraction = project_generator(plant_language, profile, ProjectionKind::a());
  const ClosureResult k_closed = prefix_closure_generator(k);
  if (auto escape = k_closed.empty_marked_language
                        ? std::nullopt
                        : first_not_included(k_closed.generator, abstraction)) {
    throw ValidationError("K is not contained in A(L(G)): " + to_text(*escape));
  }

  const auto oracle = oracle_of(plant, OracleSource::Generated);
  Theorem1Report report;
  report.oc = check_oc(*oracle, profile, *longest, *longest);
  report.loc = check_loc(*oracle, profile, *longest, *longest);
  report.nonconflicting = check_sync_nonconflicting(k, plant_language);
  report.high_level = check_observability(k, abstraction, high_level_profile(profile));
  report.low_level = check_observability(parallel_compose(k, plant_language), plant, profile);
  return report;
}

}  // namespace hsc
