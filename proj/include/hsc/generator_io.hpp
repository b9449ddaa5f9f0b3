#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hsc/generator.hpp"
#include "hsc/projections.hpp"

namespace hsc {

/// Malformed input file. The message names the source and line.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generator together with the profile lines of its file. Absent
/// `observable` defaults to the alphabet; absent `controllable` and `high`
/// default to empty.
struct GeneratorFile {
  Generator generator;
  AlphabetProfile profile;
};

/// Reads the line-oriented generator format:
///
///   alphabet a b h
///   observable a b
///   controllable a
///   high h
///   initial q0
///   marked q1 q2
///   trans q0 a q1
///
/// `source` is used in diagnostics only.
GeneratorFile parse_generator(std::istream& in, const std::string& source = "<input>");
GeneratorFile load_generator(const std::string& path);

/// Emits the format above with states and transitions sorted, so equal
/// automata with equal names serialize byte-identically.
std::string serialize_generator(const Generator& g, const AlphabetProfile& profile);
std::string serialize_generator(const Generator& g);

}  // namespace hsc
