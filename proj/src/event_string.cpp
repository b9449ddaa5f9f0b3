#include "hsc/event_string.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace hsc {

EventString erase_outside(const EventString& s, const Alphabet& target) {
  EventString out;
  out.reserve(s.size());
  for (const auto& e : s) {
    if (target.contains(e)) out.push_back(e);
  }
  return out;
}

EventString concat(const EventString& lhs, const EventString& rhs) {
  EventString out;
  out.reserve(lhs.size() + rhs.size());
  out.insert(out.end(), lhs.begin(), lhs.end());
  out.insert(out.end(), rhs.begin(), rhs.end());
  return out;
}

EventString append(EventString s, const Event& e) {
  s.push_back(e);
  return s;
}

bool is_prefix(const EventString& prefix, const EventString& s) {
  return prefix.size() <= s.size() && std::equal(prefix.begin(), prefix.end(), s.begin());
}

EventString tokenize(std::string_view text) {
  std::istringstream in{std::string(text)};
  return {std::istream_iterator<std::string>(in), std::istream_iterator<std::string>()};
}

EventString from_chars(std::string_view text) {
  EventString out;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    out.emplace_back(1, c);
  }
  return out;
}

std::string to_text(const EventString& s) {
  if (s.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i != 0) out += ' ';
    out += s[i];
  }
  return out;
}

std::string to_text(const Alphabet& alphabet) {
  std::string out = "{";
  bool first = true;
  for (const auto& e : alphabet) {
    if (!first) out += ", ";
    out += e;
    first = false;
  }
  return out + "}";
}

Alphabet intersect(const Alphabet& lhs, const Alphabet& rhs) {
  Alphabet out;
  std::set_intersection(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                        std::inserter(out, out.end()));
  return out;
}

Alphabet unite(const Alphabet& lhs, const Alphabet& rhs) {
  Alphabet out = lhs;
  out.insert(rhs.begin(), rhs.end());
  return out;
}

Alphabet subtract(const Alphabet& lhs, const Alphabet& rhs) {
  Alphabet out;
  std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                      std::inserter(out, out.end()));
  return out;
}

bool is_subset(const Alphabet& sub, const Alphabet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

void require_over(const EventString& s, const Alphabet& alphabet, std::string_view what) {
  for (const auto& e : s) {
    if (!alphabet.contains(e)) {
      throw ValidationError(std::string(what) + ": symbol '" + e + "' is not in " +
                            to_text(alphabet));
    }
  }
}

}  // namespace hsc
