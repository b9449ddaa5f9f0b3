#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hsc/event_string.hpp"

namespace hsc {

enum class Status { Holds, Violated, Inconclusive };

std::string_view to_string(Status status);

/// Machine-readable certificate: a kind tag plus named event strings.
/// Single events (e.g. the controllable event of an observability
/// violation) are stored as one-symbol strings.
struct Witness {
  std::string kind;
  std::vector<std::pair<std::string, EventString>> fields;

  /// Throws std::out_of_range when `name` is absent.
  const EventString& at(std::string_view name) const;
  bool has(std::string_view name) const;

  bool operator==(const Witness&) const = default;
};

/// Three-valued outcome of a check.
///
/// Violated always carries a witness; Inconclusive always carries the
/// bound at which the search stopped.
struct Verdict {
  Status status = Status::Holds;
  std::optional<Witness> witness;
  std::optional<std::size_t> bound;
  std::string detail;

  static Verdict holds(std::string detail = {});
  static Verdict violated(Witness witness, std::string detail = {});
  static Verdict inconclusive(std::size_t bound, std::string detail = {});
};

}  // namespace hsc
