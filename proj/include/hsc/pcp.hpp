#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsc/event_string.hpp"
#include "hsc/language_oracle.hpp"
#include "hsc/observation_consistency.hpp"
#include "hsc/projections.hpp"
#include "hsc/verdict.hpp"

namespace hsc::pcp {

// Reserved symbols of the reduction language.
inline const Event kAt = "@";
inline const Event kHash = "#";
inline const Event kDollar = "$";

/// Index event for the 1-based pair index i: "i1", "i2", ...
Event index_event(std::size_t i);
/// Inverse of index_event; nullopt for any other token.
std::optional<std::size_t> parse_index_event(const Event& e);

/// A Post correspondence instance: pairs (w_i, u_i) of nonempty words over
/// a base alphabet.
struct Instance {
  Alphabet base;
  std::vector<std::pair<EventString, EventString>> pairs;

  std::size_t size() const { return pairs.size(); }
  const EventString& top(std::size_t index) const { return pairs.at(index - 1).first; }
  const EventString& bottom(std::size_t index) const { return pairs.at(index - 1).second; }
  /// E = {i1, ..., in}.
  Alphabet index_alphabet() const;
};

/// Nonempty sequence of 1-based pair indices.
using IndexSequence = std::vector<std::size_t>;

struct Validation {
  enum class Kind { Ok, TriviallySolvable, Invalid };
  Kind kind = Kind::Ok;
  /// The index i with w_i = u_i, for TriviallySolvable.
  std::size_t index = 0;
  std::string reason;
};

Validation validate(const Instance& inst);

/// w_{i1}···w_{ik} and u_{i1}···u_{ik}.
EventString top_concat(const Instance& inst, const IndexSequence& seq);
EventString bottom_concat(const Instance& inst, const IndexSequence& seq);

bool is_solution(const Instance& inst, const IndexSequence& seq);

/// Breadth-first search over index sequences of length <= k_max, pruning
/// sequences whose concatenations are not prefix-comparable. Returns the
/// shortest solution, lexicographically least among the shortest.
std::optional<IndexSequence> solve_bounded(const Instance& inst, std::size_t k_max);

/// Membership oracle for the prefix closure of
///   { @ i1…im $ w_im^R … w_i1^R @ } ∪ { i1…im $ u_im^R … u_i1^R # },  m >= 1.
/// Membership is a direct left-to-right parse.
class ReductionOracle final : public LanguageOracle {
 public:
  explicit ReductionOracle(Instance inst);

  const Alphabet& alphabet() const override { return alphabet_; }
  bool contains(const EventString& x) const override;
  StringSet enumerate_up_to(std::size_t n) const override;
  Finiteness finiteness_hint() const override { return Finiteness::NonRegular; }

  /// Image computed from the shape classes of the language (the number of
  /// members grows exponentially with n), without materialising members.
  StringSet image_up_to(std::size_t n, const Alphabet& target) const override;

  /// Every member containing at most k_max index events.
  StringSet enumerate_by_index_count(std::size_t k_max) const;

  const Instance& instance() const { return inst_; }

 private:
  Instance inst_;
  Alphabet alphabet_;
};

std::shared_ptr<const ReductionOracle> build_reduction_oracle(const Instance& inst);

/// Σ ∪ {@,#,$} ∪ E with high = {@,#}, observable = Σ ∪ E, controllable = ∅.
AlphabetProfile reduction_profile(const Instance& inst);

/// A witness construction for one pair t != t' of A(L̄).
struct CaseWitness {
  int case_number = 0;
  OcWitnessRequest request;
  OcWitness witness;
};

/// The six witness constructions for a verified solution. Each is checked
/// for membership, abstraction images and equal observation before return.
/// Throws ValidationError when `sol` is not a solution.
std::vector<CaseWitness> case_witnesses(const Instance& inst, const IndexSequence& sol);

struct ReductionCheck {
  Verdict verdict;
  std::optional<IndexSequence> solution;
  std::vector<CaseWitness> cases;
  OcWitnessRequest critical_pair;
};

/// OC of the reduction language decided through the correspondence: a
/// witness for (@@, #) with at most k indices exists iff a solution of
/// length <= k exists. Holds with the six witnesses when one is found;
/// otherwise Inconclusive at k_max naming the critical pair.
ReductionCheck check_oc_reduction(const Instance& inst, std::size_t k_max);

/// Direct search over members of L̄ with at most k_max indices for s, s'
/// with A(s) = @@, A(s') = # and P(s) = P(s'). Independent of solve_bounded.
std::optional<OcWitness> direct_critical_witness(const Instance& inst, std::size_t k_max);

/// Reads the index sequence off P(s) of a critical witness and returns it
/// when it is a solution.
std::optional<IndexSequence> decode_solution(const Instance& inst, const OcWitness& w);

std::string to_text(const IndexSequence& seq);

}  // namespace hsc::pcp
