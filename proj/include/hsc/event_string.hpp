#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hsc {

/// An event symbol. Symbols are arbitrary nonempty tokens, so index events
/// such as "i12" and base letters such as "a" coexist in one alphabet.
using Event = std::string;

/// A finite string of events; the empty vector is the empty string.
using EventString = std::vector<Event>;

using Alphabet = std::set<Event>;

/// Raised when an input violates an operation's preconditions (foreign
/// symbol, unknown state, mismatched alphabets, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Length-first, then lexicographic order on event strings.
struct ShortLex {
  bool operator()(const EventString& lhs, const EventString& rhs) const {
    if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
    return lhs < rhs;
  }
};

using StringSet = std::set<EventString, ShortLex>;

/// Keeps the symbols of `s` that belong to `target`, in order.
EventString erase_outside(const EventString& s, const Alphabet& target);

EventString concat(const EventString& lhs, const EventString& rhs);
EventString append(EventString s, const Event& e);

bool is_prefix(const EventString& prefix, const EventString& s);

/// Whitespace-separated tokens. `"a h a h"` -> {a, h, a, h}.
EventString tokenize(std::string_view text);

/// Each character becomes one event. `"ahah"` -> {a, h, a, h}.
EventString from_chars(std::string_view text);

/// Space-joined rendering; the empty string renders as "ε".
std::string to_text(const EventString& s);

std::string to_text(const Alphabet& alphabet);

Alphabet intersect(const Alphabet& lhs, const Alphabet& rhs);
Alphabet unite(const Alphabet& lhs, const Alphabet& rhs);
Alphabet subtract(const Alphabet& lhs, const Alphabet& rhs);
bool is_subset(const Alphabet& sub, const Alphabet& super);

/// Throws ValidationError naming `what` if some symbol of `s` is outside `alphabet`.
void require_over(const EventString& s, const Alphabet& alphabet, std::string_view what);

}  // namespace hsc
