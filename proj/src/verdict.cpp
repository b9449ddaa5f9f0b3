#include "hsc/verdict.hpp"

#include <algorithm>
#include <stdexcept>

namespace hsc {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Holds:
      return "HOLDS";
    case Status::Violated:
      return "VIOLATED";
    case Status::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

const EventString& Witness::at(std::string_view name) const {
  for (const auto& [key, value] : fields) {
    if (key == name) return value;
  }
  throw std::out_of_range("witness field '" + std::string(name) + "' not present");
}

bool Witness::has(std::string_view name) const {
  return std::any_of(fields.begin(), fields.end(),
                     [&](const auto& field) { return field.first == name; });
}

Verdict Verdict::holds(std::string detail) {
  return Verdict{Status::Holds, std::nullopt, std::nullopt, std::move(detail)};
}

Verdict Verdict::violated(Witness witness, std::string detail) {
  return Verdict{Status::Violated, std::move(witness), std::nullopt, std::move(detail)};
}

Verdict Verdict::inconclusive(std::size_t bound, std::string detail) {
  return Verdict{Status::Inconclusive, std::nullopt, bound, std::move(detail)};
}

}  // namespace hsc
