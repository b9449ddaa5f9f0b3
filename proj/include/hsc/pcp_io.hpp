#pragma once

#include <iosfwd>
#include <string>

#include "hsc/generator_io.hpp"
#include "hsc/pcp.hpp"

namespace hsc::pcp {

/// Reads
///
///   alphabet a b
///   pair a baa
///   pair ab aa
///
/// Words are split into single-character symbols.
Instance parse_instance(std::istream& in, const std::string& source = "<input>");
Instance load_instance(const std::string& path);

}  // namespace hsc::pcp
