#include "hsc/pcp_io.hpp"

#include <fstream>
#include <sstream>

namespace hsc::pcp {

Instance parse_instance(std::istream& in, const std::string& source) {
  auto fail = [&](std::size_t line, const std::string& what) {
    throw ParseError(source + ":" + std::to_string(line) + ": " + what);
  };
  Instance inst;
  bool have_alphabet = false;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    const EventString tokens = tokenize(text);
    if (tokens.empty()) continue;
    if (tokens[0] == "alphabet") {
      if (have_alphabet) fail(number, "duplicate 'alphabet' line");
      have_alphabet = true;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (tokens[i].size() != 1) fail(number, "base symbols must be single characters");
        inst.base.insert(tokens[i]);
      }
    } else if (tokens[0] == "pair") {
      if (tokens.size() != 3) fail(number, "'pair' takes two words");
      EventString top = from_chars(tokens[1]);
      EventString bottom = from_chars(tokens[2]);
      for (const EventString* word : {&top, &bottom}) {
        for (const auto& e : *word) {
          if (have_alphabet && !inst.base.contains(e)) {
            fail(number, "symbol '" + e + "' is not in the alphabet");
          }
        }
      }
      inst.pairs.emplace_back(std::move(top), std::move(bottom));
    } else {
      fail(number, "unknown keyword '" + tokens[0] + "'");
    }
  }
  if (!have_alphabet) fail(number == 0 ? 1 : number, "missing 'alphabet' line");
  if (inst.pairs.empty()) fail(number == 0 ? 1 : number, "instance has no pairs");
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return parse_instance(in, path);
}

}  // namespace hsc::pcp
