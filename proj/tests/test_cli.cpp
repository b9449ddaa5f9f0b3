#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

#include "hsc/cli.hpp"
#include "hsc/generator_io.hpp"
#include "hsc/observation_consistency.hpp"
#include "hsc/pcp_io.hpp"
#include "hsc/supervisory.hpp"

using namespace hsc;

namespace {

const std::string kData = HSC_TEST_DATA_DIR;

std::string data(const std::string& name) { return kData + "/" + name; }

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

EventString field(const nlohmann::json& witness, const std::string& name) {
  return witness.at("fields").at(name).get<EventString>();
}

}  // namespace

TEST_CASE("exit codes follow the verdict") {
  CHECK(run({"check-oc", "--lang", data("split.gen")}).code == cli::kViolated);
  CHECK(run({"check-loc", "--lang", data("detour.gen")}).code == cli::kViolated);
  CHECK(run({"check-loc", "--lang", data("full_plant.gen")}).code == cli::kHolds);
  CHECK(run({"check-ctrl", "--spec", data("obs_spec.gen"), "--plant", data("obs_plant.gen")})
            .code == cli::kHolds);
  CHECK(run({"pcp-solve", "--instance", data("solvable.pcp"), "--k", "4"}).code == cli::kHolds);
  CHECK(run({"pcp-solve", "--instance", data("unsolvable.pcp"), "--k", "8"}).code ==
        cli::kViolated);
  CHECK(run({"pcp-reduce", "--instance", data("unsolvable.pcp"), "--k", "8"}).code ==
        cli::kInconclusive);
  CHECK(run({"pcp-reduce", "--instance", data("trivial.pcp")}).code == cli::kHolds);
}

TEST_CASE("usage and input errors exit with 3") {
  const Run missing = run({"check-oc", "--lang", data("missing.gen")});
  CHECK(missing.code == cli::kUsageError);
  CHECK(missing.err.find("cannot open") != std::string::npos);
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"no-such-command"}).code == cli::kUsageError);
  CHECK(run({"--format", "xml", "check-oc", "--lang", data("split.gen")}).code ==
        cli::kUsageError);
  CHECK(run({"project", "--gen", data("split.gen"), "--kind", "Q", "--string", "a"}).code ==
        cli::kUsageError);
  CHECK(run({"project", "--gen", data("split.gen"), "--kind", "P", "--string", "z"}).code ==
        cli::kUsageError);
  CHECK(run({"compose", "--gen", data("split.gen")}).code == cli::kUsageError);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("text reports are byte-stable") {
  const Run demo = run({"pcp-demo", "--instance", data("solvable.pcp")});
  CHECK(demo.code == cli::kHolds);
  CHECK(demo.out == read_file(data("pcp_demo_solvable.golden")));
  CHECK(run({"pcp-demo", "--instance", data("solvable.pcp")}).out == demo.out);

  const Run obs = run({"check-obs", "--spec", data("obs_spec.gen"), "--plant", data("obs_plant.gen")});
  CHECK(obs.code == cli::kViolated);
  CHECK(obs.out == read_file(data("check_obs.golden")));
}

TEST_CASE("pcp-demo on an unsolvable instance") {
  const Run r = run({"pcp-demo", "--instance", data("unsolvable.pcp"), "--k", "8"});
  CHECK(r.code == cli::kInconclusive);
  CHECK(r.out.find("no solution ≤ 8; OC unresolved at bound (critical pair @@ / #)") !=
        std::string::npos);
  CHECK(r.out.find("{ε, #, @, @ @}") != std::string::npos);
}

TEST_CASE("JSON witnesses re-verify against the library") {
  SUBCASE("observability") {
    const Run r = run({"--format", "json", "check-obs", "--spec", data("obs_spec.gen"), "--plant",
                       data("obs_plant.gen")});
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("verdict") == "VIOLATED");
    CHECK(doc.at("exit_code") == r.code);
    CHECK(doc.at("tool_version") == std::string(cli::kToolVersion));
    CHECK(doc.contains("timing_ms"));
    const auto& w = doc.at("witnesses").at(0);
    const GeneratorFile k = load_generator(data("obs_spec.gen"));
    const GeneratorFile g = load_generator(data("obs_plant.gen"));
    const ObservabilityWitness parsed{field(w, "s"), field(w, "s_prime"), field(w, "e").front()};
    CHECK(falsifies_observability(k.generator, g.generator, g.profile, parsed));
  }
  SUBCASE("observation consistency") {
    const Run r = run({"--format", "json", "check-oc", "--lang", data("split.gen")});
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("bounds").at("t_bound") == 4);
    CHECK(doc.at("bounds").at("s_bound") == 12);
    const auto& w = doc.at("witnesses").at(0);
    const GeneratorFile f = load_generator(data("split.gen"));
    const auto lang = oracle_of(f.generator, OracleSource::Generated);
    CHECK_FALSE(
        find_oc_witness(*lang, f.profile, {field(w, "t"), field(w, "t_prime")}, 12).has_value());
  }
  SUBCASE("reduction cases") {
    const Run r = run({"--format", "json", "pcp-reduce", "--instance", data("solvable.pcp")});
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("verdict") == "HOLDS");
    const pcp::Instance inst = pcp::load_instance(data("solvable.pcp"));
    const pcp::ReductionOracle oracle(inst);
    const AlphabetProfile profile = pcp::reduction_profile(inst);
    REQUIRE(doc.at("witnesses").size() == 6);
    for (const auto& w : doc.at("witnesses")) {
      CHECK(is_valid_oc_witness(oracle, profile, {field(w, "t"), field(w, "t_prime")},
                                {field(w, "s"), field(w, "s_prime")}));
    }
  }
}

TEST_CASE("theorem1 subcommand") {
  const Run agree = run({"theorem1", "--plant", data("full_plant.gen"), "--spec", data("full_spec.gen")});
  CHECK(agree.code == cli::kHolds);
  CHECK(agree.out.starts_with("theorem1: AGREE\n"));
  CHECK(run({"theorem1", "--plant", data("split.gen"), "--spec", data("split_spec.gen")}).code ==
        cli::kInconclusive);
}

TEST_CASE("project and compose print generators") {
  const Run p = run({"project", "--gen", data("split.gen"), "--kind", "A"});
  CHECK(p.code == 0);
  CHECK(p.out ==
        "project: OK\n"
        "  alphabet g h\n"
        "  initial 0\n"
        "  marked 0 1 2\n"
        "  trans 0 g 1\n"
        "  trans 0 h 2\n");
  const Run s = run({"project", "--gen", data("split.gen"), "--kind", "P", "--string", "agbh",
                     "--chars"});
  CHECK(s.out.find("\n  a b\n") != std::string::npos);
  const Run c = run({"compose", "--gen", data("obs_spec.gen"), "--gen", data("obs_plant.gen")});
  CHECK(c.code == 0);
  CHECK(c.out.find("marked 2 3") != std::string::npos);
}
