#include "hsc/language_oracle.hpp"

namespace hsc {

std::string_view to_string(Finiteness hint) {
  switch (hint) {
    case Finiteness::Finite:
      return "FINITE";
    case Finiteness::RegularInfinite:
      return "REGULAR_INFINITE";
    case Finiteness::NonRegular:
      return "NONREGULAR";
  }
  return "?";
}

StringSet LanguageOracle::image_up_to(std::size_t n, const Alphabet& target) const {
  StringSet out;
  for (const auto& s : enumerate_up_to(n)) out.insert(erase_outside(s, target));
  return out;
}

namespace {

class GeneratorOracle final : public LanguageOracle {
 public:
  explicit GeneratorOracle(Generator g, bool empty = false)
      : generator_(std::move(g)),
        empty_(empty),
        longest_(empty ? std::optional<std::size_t>(0) : longest_string(generator_)) {}

  const Alphabet& alphabet() const override { return generator_.alphabet(); }

  bool contains(const EventString& s) const override {
    if (empty_) return false;
    StateId q = generator_.initial();
    for (const auto& e : s) {
      auto next = generator_.step(q, e);
      if (!next) return false;
      q = *next;
    }
    return true;
  }

  StringSet enumerate_up_to(std::size_t n) const override {
    if (empty_) return {};
    return enumerate(generator_, n, LanguageKind::Generated);
  }

  Finiteness finiteness_hint() const override {
    return longest_ ? Finiteness::Finite : Finiteness::RegularInfinite;
  }

  std::optional<std::size_t> longest_member() const override { return longest_; }

 private:
  Generator generator_;
  bool empty_;
  std::optional<std::size_t> longest_;
};

}  // namespace

std::shared_ptr<const LanguageOracle> oracle_of(const Generator& g, OracleSource which) {
  if (which == OracleSource::Generated) {
    return std::make_shared<GeneratorOracle>(accessible_part(g));
  }
  ClosureResult closed = prefix_closure_generator(g);
  return std::make_shared<GeneratorOracle>(std::move(closed.generator),
                                           closed.empty_marked_language);
}

}  // namespace hsc
