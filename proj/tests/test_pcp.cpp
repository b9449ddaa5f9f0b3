#include <doctest.h>

#include <algorithm>
#include <random>

#include "hsc/pcp.hpp"
#include "support.hpp"

using namespace hsc;
using namespace hsc::pcp;
using hsc::testing::S;

namespace {

Instance make_instance(const Alphabet& base,
                       std::initializer_list<std::pair<std::string, std::string>> pairs) {
  Instance inst{base, {}};
  for (const auto& [w, u] : pairs) inst.pairs.emplace_back(from_chars(w), from_chars(u));
  return inst;
}

Instance solvable() { return make_instance({"a", "b"}, {{"a", "baa"}, {"ab", "aa"}, {"bba", "bb"}}); }
Instance unsolvable() { return make_instance({"a", "b"}, {{"ab", "aa"}}); }

/// Space-separated tokens, so index events read naturally: "@ i1 $ a".
EventString T(const std::string& text) { return tokenize(text); }

/// Every index sequence of length 1..k in length-then-lexicographic order,
/// tested by plain concatenation.
std::optional<IndexSequence> brute_solve(const Instance& inst, std::size_t k) {
  std::vector<IndexSequence> level{{}};
  for (std::size_t len = 1; len <= k; ++len) {
    std::vector<IndexSequence> next;
    for (const auto& seq : level) {
      for (std::size_t i = 1; i <= inst.size(); ++i) {
        IndexSequence longer = seq;
        longer.push_back(i);
        EventString top, bottom;
        for (std::size_t j : longer) {
          top = concat(top, inst.top(j));
          bottom = concat(bottom, inst.bottom(j));
        }
        if (top == bottom) return longer;
        next.push_back(std::move(longer));
      }
    }
    level = std::move(next);
  }
  return std::nullopt;
}

/// The prefix closure of the two-branch language restricted to at most k
/// indices, built word by word.
StringSet explicit_closure(const Instance& inst, std::size_t k) {
  StringSet words;
  std::vector<IndexSequence> level{{}};
  for (std::size_t len = 1; len <= k; ++len) {
    std::vector<IndexSequence> next;
    for (const auto& seq : level) {
      for (std::size_t i = 1; i <= inst.size(); ++i) {
        IndexSequence longer = seq;
        longer.push_back(i);
        EventString top{kAt}, bottom;
        for (std::size_t j : longer) {
          top.push_back(index_event(j));
          bottom.push_back(index_event(j));
        }
        top.push_back(kDollar);
        bottom.push_back(kDollar);
        for (auto it = longer.rbegin(); it != longer.rend(); ++it) {
          const EventString& w = inst.top(*it);
          const EventString& u = inst.bottom(*it);
          top.insert(top.end(), w.rbegin(), w.rend());
          bottom.insert(bottom.end(), u.rbegin(), u.rend());
        }
        top.push_back(kAt);
        bottom.push_back(kHash);
        words.insert(top);
        words.insert(bottom);
        next.push_back(std::move(longer));
      }
    }
    level = std::move(next);
  }
  return hsc::testing::prefix_closure(words);
}

std::size_t index_count(const EventString& x) {
  return static_cast<std::size_t>(std::count_if(
      x.begin(), x.end(), [](const Event& e) { return parse_index_event(e).has_value(); }));
}

}  // namespace

TEST_CASE("validate") {
  CHECK(validate(solvable()).kind == Validation::Kind::Ok);

  const Validation trivial = validate(make_instance({"a", "b"}, {{"ab", "ab"}}));
  CHECK(trivial.kind == Validation::Kind::TriviallySolvable);
  CHECK(trivial.index == 1);

  const Validation empty_word = validate(make_instance({"a"}, {{"", "a"}}));
  CHECK(empty_word.kind == Validation::Kind::Invalid);
  CHECK_FALSE(empty_word.reason.empty());

  CHECK(validate(Instance{{"a"}, {}}).kind == Validation::Kind::Invalid);
  CHECK(validate(make_instance({"a"}, {{"a", "b"}})).kind == Validation::Kind::Invalid);
  CHECK(validate(Instance{{"a", "@"}, {{S("a"), S("@")}}}).kind == Validation::Kind::Invalid);
  CHECK(validate(Instance{{"a", "i1"}, {{S("a"), EventString{"i1"}}}}).kind ==
        Validation::Kind::Invalid);
}

TEST_CASE("index events") {
  CHECK(index_event(3) == "i3");
  CHECK(parse_index_event("i12") == 12u);
  CHECK_FALSE(parse_index_event("i").has_value());
  CHECK_FALSE(parse_index_event("a1").has_value());
  CHECK_FALSE(parse_index_event("i0").has_value());
  CHECK(solvable().index_alphabet() == Alphabet{"i1", "i2", "i3"});
}

TEST_CASE("solve_bounded") {
  const auto sol = solve_bounded(solvable(), 4);
  REQUIRE(sol.has_value());
  CHECK(*sol == IndexSequence{3, 2, 3, 1});
  CHECK(top_concat(solvable(), *sol) == S("bbaabbbaa"));
  CHECK(bottom_concat(solvable(), *sol) == S("bbaabbbaa"));
  CHECK(to_text(*sol) == "(3,2,3,1)");
  CHECK(brute_solve(solvable(), 4) == sol);

  CHECK_FALSE(solve_bounded(solvable(), 3).has_value());
  CHECK_FALSE(solve_bounded(unsolvable(), 8).has_value());
  CHECK(solve_bounded(make_instance({"a", "b"}, {{"b", "a"}, {"ab", "ab"}}), 3) ==
        IndexSequence{2});
}

TEST_CASE("solve_bounded agrees with exhaustive search on random instances") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> pair_count(1, 3), word_len(1, 3), bit(0, 1);
  int found = 0;
  for (int round = 0; round < 200; ++round) {
    Instance inst{{"a", "b"}, {}};
    const int n = pair_count(rng);
    for (int i = 0; i < n; ++i) {
      EventString w, u;
      for (int j = word_len(rng); j > 0; --j) w.push_back(bit(rng) ? "a" : "b");
      for (int j = word_len(rng); j > 0; --j) u.push_back(bit(rng) ? "a" : "b");
      inst.pairs.emplace_back(w, u);
    }
    const auto fast = solve_bounded(inst, 5);
    CHECK(fast == brute_solve(inst, 5));
    if (fast) {
      ++found;
      CHECK(is_solution(inst, *fast));
    }
  }
  CHECK(found > 10);
}

TEST_CASE("reduction oracle membership") {
  const ReductionOracle oracle(solvable());
  CHECK(oracle.contains(T("@ i1 $ a")));
  CHECK(oracle.contains({}));
  CHECK_FALSE(oracle.contains(T("@ i1 $ b")));
  CHECK(oracle.contains(T("@ i1 $ a @")));
  CHECK(oracle.contains(T("@ i3 i1")));
  CHECK(oracle.contains(T("i1 $ a a b #")));
  CHECK_FALSE(oracle.contains(T("i1 $ a a b @")));
  CHECK_FALSE(oracle.contains(T("@ $")));
  CHECK_FALSE(oracle.contains(T("@ i1 $ a @ @")));
  CHECK_FALSE(oracle.contains(T("i4")));
  CHECK(oracle.finiteness_hint() == Finiteness::NonRegular);
  CHECK_THROWS_AS(build_reduction_oracle(make_instance({"a"}, {{"", "a"}})), ValidationError);
}

TEST_CASE("reduction oracle matches the explicit closure") {
  for (const Instance& inst : {solvable(), unsolvable()}) {
    const ReductionOracle oracle(inst);
    const StringSet small = explicit_closure(inst, 3);

    // Every member with at most 3 indices, and nothing else, is enumerated.
    CHECK(oracle.enumerate_by_index_count(3) == small);
    for (const auto& x : small) CHECK(oracle.contains(x));

    // Length-bounded enumeration is sound, and complete on the small set.
    const StringSet by_length = oracle.enumerate_up_to(9);
    for (const auto& x : by_length) {
      CHECK(x.size() <= 9);
      CHECK(oracle.contains(x));
      if (index_count(x) <= 3) CHECK(small.contains(x));
    }
    for (const auto& x : small) {
      if (x.size() <= 9) CHECK(by_length.contains(x));
    }

    // Prefix closed.
    for (const auto& x : by_length) {
      for (std::size_t i = 0; i <= x.size(); ++i) {
        CHECK(by_length.contains(EventString(x.begin(), x.begin() + i)));
      }
    }

    // Membership agrees with the explicit set on one-symbol extensions.
    const Alphabet sigma = oracle.alphabet();
    for (const auto& x : small) {
      if (index_count(x) >= 3) continue;
      for (const auto& e : sigma) {
        const EventString y = append(x, e);
        if (index_count(y) <= 3) CHECK(oracle.contains(y) == small.contains(y));
      }
    }
  }
}

TEST_CASE("abstraction image") {
  const ReductionOracle oracle(solvable());
  const Alphabet high{kAt, kHash};
  const StringSet expected{{}, {kAt}, {kAt, kAt}, {kHash}};
  CHECK(oracle.image_up_to(30, high) == expected);
  for (std::size_t n = 0; n <= 10; ++n) {
    CHECK(oracle.image_up_to(n, high) == oracle.LanguageOracle::image_up_to(n, high));
  }
  CHECK(oracle.image_up_to(2, high) == StringSet{{}, {kAt}});
}

TEST_CASE("reduction profile") {
  const AlphabetProfile p = reduction_profile(solvable());
  CHECK_NOTHROW(p.validate());
  CHECK(p.high == Alphabet{kAt, kHash});
  CHECK(p.controllable.empty());
  CHECK(project(p, ProjectionKind::a(), T("@ i1 $ a @")) == T("@ @"));
  CHECK(project(p, ProjectionKind::p(), T("@ i1 $ a @")) == T("i1 a"));
  for (const auto& t : {T("@"), T("#"), T("@ @"), T("")}) {
    CHECK(project(p, ProjectionKind::p_hi(), t).empty());
  }
}

TEST_CASE("case witnesses") {
  const Instance inst = solvable();
  const auto cases = case_witnesses(inst, {3, 2, 3, 1});
  REQUIRE(cases.size() == 6);
  const ReductionOracle oracle(inst);
  const AlphabetProfile p = reduction_profile(inst);
  for (const auto& c : cases) {
    CHECK(oracle.contains(c.witness.s));
    CHECK(oracle.contains(c.witness.s_prime));
    CHECK(project(p, ProjectionKind::a(), c.witness.s) == c.request.t);
    CHECK(project(p, ProjectionKind::a(), c.witness.s_prime) == c.request.t_prime);
    CHECK(project(p, ProjectionKind::p(), c.witness.s) ==
          project(p, ProjectionKind::p(), c.witness.s_prime));
  }

  CHECK(cases[0].witness.s == T("@ i1 $ a"));
  CHECK(cases[0].witness.s_prime == T("@ i1 $ a @"));

  CHECK(cases[3].request.t == T("@ @"));
  CHECK(cases[3].witness.s == T("@ i3 i2 i3 i1 $ a a b b b a a b b @"));
  CHECK(cases[3].witness.s_prime == T("i3 i2 i3 i1 $ a a b b b a a b b #"));

  // The u-branch word for index 1 stands in for "1 $ w1^R #", which is not
  // in the language here.
  CHECK_FALSE(oracle.contains(T("i1 $ a #")));
  CHECK(cases[5].witness.s == T("i1 $ a a b #"));
  CHECK(cases[5].witness.s_prime == T("i1 $ a a b"));

  CHECK_THROWS_AS(case_witnesses(inst, {1, 2}), ValidationError);
}

TEST_CASE("check_oc_reduction") {
  const ReductionCheck solved = check_oc_reduction(solvable(), 4);
  CHECK(solved.verdict.status == Status::Holds);
  CHECK(solved.solution == IndexSequence{3, 2, 3, 1});
  CHECK(solved.cases.size() == 6);

  const ReductionCheck open = check_oc_reduction(unsolvable(), 8);
  CHECK(open.verdict.status == Status::Inconclusive);
  CHECK(open.verdict.bound == 8u);
  CHECK(open.critical_pair.t == T("@ @"));
  CHECK(open.critical_pair.t_prime == T("#"));
  CHECK(open.verdict.detail.find("@ @, #") != std::string::npos);

  const ReductionCheck trivial = check_oc_reduction(make_instance({"a", "b"}, {{"ab", "ab"}}), 2);
  CHECK(trivial.verdict.status == Status::Holds);
  CHECK(trivial.solution == IndexSequence{1});
}

TEST_CASE("generic check_oc on the reduction language stays inconclusive") {
  const auto oracle = build_reduction_oracle(unsolvable());
  const Verdict v = check_oc(*oracle, reduction_profile(unsolvable()), 2, 30);
  CHECK(v.status == Status::Inconclusive);
  CHECK(v.detail.find("@ @") != std::string::npos);
}

TEST_CASE("direct critical witness search") {
  const auto w = direct_critical_witness(solvable(), 4);
  REQUIRE(w.has_value());
  CHECK(decode_solution(solvable(), *w) == IndexSequence{3, 2, 3, 1});
  CHECK_FALSE(direct_critical_witness(solvable(), 3).has_value());
  CHECK_FALSE(direct_critical_witness(unsolvable(), 8).has_value());

  CHECK_FALSE(decode_solution(solvable(), {T("@ i1 $ a @"), T("i1 $ a a b #")}).has_value());
}
