#include "hsc/generator_io.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <tuple>
#include <vector>

namespace hsc {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
  throw ParseError(source + ":" + std::to_string(line) + ": " + what);
}

Alphabet subset_of(const Line& line, const Alphabet& alphabet, const std::string& source) {
  Alphabet out;
  for (std::size_t i = 1; i < line.tokens.size(); ++i) {
    if (!alphabet.contains(line.tokens[i])) {
      fail(source, line.number, "'" + line.tokens[i] + "' is not in the alphabet");
    }
    out.insert(line.tokens[i]);
  }
  return out;
}

}  // namespace

GeneratorFile parse_generator(std::istream& in, const std::string& source) {
  std::vector<Line> lines;
  std::string text;
  for (std::size_t number = 1; std::getline(in, text); ++number) {
    if (auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    EventString tokens = tokenize(text);
    if (!tokens.empty()) lines.push_back(Line{number, std::move(tokens)});
  }

  std::optional<Line> alphabet_line;
  std::optional<Line> initial_line;
  std::optional<Line> observable_line, controllable_line, high_line;
  std::vector<Line> marked_lines, trans_lines;
  for (auto& line : lines) {
    const std::string& keyword = line.tokens.front();
    auto once = [&](std::optional<Line>& slot) {
      if (slot) fail(source, line.number, "duplicate '" + keyword + "' line");
      slot = line;
    };
    if (keyword == "alphabet") {
      once(alphabet_line);
    } else if (keyword == "observable") {
      once(observable_line);
    } else if (keyword == "controllable") {
      once(controllable_line);
    } else if (keyword == "high") {
      once(high_line);
    } else if (keyword == "initial") {
      once(initial_line);
    } else if (keyword == "marked") {
      marked_lines.push_back(line);
    } else if (keyword == "trans") {
      trans_lines.push_back(line);
    } else {
      fail(source, line.number, "unknown keyword '" + keyword + "'");
    }
  }
  if (!alphabet_line) fail(source, lines.empty() ? 1 : lines.back().number, "missing 'alphabet' line");
  if (!initial_line) fail(source, lines.empty() ? 1 : lines.back().number, "missing 'initial' line");
  if (initial_line->tokens.size() != 2) {
    fail(source, initial_line->number, "'initial' takes exactly one state");
  }

  Alphabet alphabet(alphabet_line->tokens.begin() + 1, alphabet_line->tokens.end());
  AlphabetProfile profile;
  profile.sigma = alphabet;
  profile.observable = observable_line ? subset_of(*observable_line, alphabet, source) : alphabet;
  if (controllable_line) profile.controllable = subset_of(*controllable_line, alphabet, source);
  if (high_line) profile.high = subset_of(*high_line, alphabet, source);

  Generator g(alphabet, initial_line->tokens[1]);
  for (const auto& line : marked_lines) {
    for (std::size_t i = 1; i < line.tokens.size(); ++i) g.set_marked(g.add_state(line.tokens[i]));
  }
  for (const auto& line : trans_lines) {
    if (line.tokens.size() != 4) fail(source, line.number, "'trans' takes: source event target");
    try {
      g.add_transition(line.tokens[1], line.tokens[2], line.tokens[3]);
    } catch (const ValidationError& e) {
      fail(source, line.number, e.what());
    }
  }
  return GeneratorFile{std::move(g), std::move(profile)};
}

GeneratorFile load_generator(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return parse_generator(in, path);
}

namespace {

std::string keyword_line(const std::string& keyword, const Alphabet& items) {
  std::string out = keyword;
  for (const auto& e : items) out += " " + e;
  return out + "\n";
}

std::string body(const Generator& g) {
  std::string out = "initial " + g.state_name(g.initial()) + "\n";
  std::vector<std::string> marked;
  std::vector<std::tuple<std::string, Event, std::string>> trans;
  for (StateId q = 0; q < g.num_states(); ++q) {
    if (g.is_marked(q)) marked.push_back(g.state_name(q));
    for (const auto& [e, next] : g.transitions_from(q)) {
      trans.emplace_back(g.state_name(q), e, g.state_name(next));
    }
  }
  std::sort(marked.begin(), marked.end());
  std::sort(trans.begin(), trans.end());
  out += "marked";
  for (const auto& name : marked) out += " " + name;
  out += "\n";
  for (const auto& [src, e, dst] : trans) out += "trans " + src + " " + e + " " + dst + "\n";
  return out;
}

}  // namespace

std::string serialize_generator(const Generator& g, const AlphabetProfile& profile) {
  return keyword_line("alphabet", g.alphabet()) + keyword_line("observable", profile.observable) +
         keyword_line("controllable", profile.controllable) + keyword_line("high", profile.high) +
         body(g);
}

std::string serialize_generator(const Generator& g) {
  return keyword_line("alphabet", g.alphabet()) + body(g);
}

}  // namespace hsc
