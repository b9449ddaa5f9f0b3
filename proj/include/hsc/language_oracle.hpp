#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string_view>

#include "hsc/event_string.hpp"
#include "hsc/generator.hpp"

namespace hsc {

enum class Finiteness { Finite, RegularInfinite, NonRegular };

std::string_view to_string(Finiteness hint);

/// Membership and bounded enumeration for a prefix-closed language.
///
/// Implementations guarantee enumerate_up_to(n) = { s : contains(s), |s| <= n }
/// and that contains() is closed under prefixes. contains() is total: strings
/// with foreign symbols are simply not members.
class LanguageOracle {
 public:
  virtual ~LanguageOracle() = default;

  virtual const Alphabet& alphabet() const = 0;
  virtual bool contains(const EventString& s) const = 0;
  virtual StringSet enumerate_up_to(std::size_t n) const = 0;
  virtual Finiteness finiteness_hint() const = 0;

  /// Length of the longest member when it is known to exist, else nullopt.
  virtual std::optional<std::size_t> longest_member() const { return std::nullopt; }

  /// { erase_outside(s, target) : s member, |s| <= n }. The default projects
  /// enumerate_up_to(n); oracles with exponential enumeration override it.
  virtual StringSet image_up_to(std::size_t n, const Alphabet& target) const;

  /// True when every member has length <= n, i.e. enumerate_up_to(n) is the
  /// whole language.
  bool complete_within(std::size_t n) const {
    auto longest = longest_member();
    return longest && *longest <= n;
  }
};

enum class OracleSource { Generated, MarkedClosure };

/// Oracle over L(G) or over the prefix closure of L_m(G). The hint is
/// Finite iff the (trimmed) accessible part is acyclic.
std::shared_ptr<const LanguageOracle> oracle_of(const Generator& g, OracleSource which);

}  // namespace hsc
