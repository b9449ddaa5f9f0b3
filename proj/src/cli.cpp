#include "hsc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "hsc/generator_io.hpp"
#include "hsc/observation_consistency.hpp"
#include "hsc/pcp.hpp"
#include "hsc/pcp_io.hpp"
#include "hsc/projections.hpp"
#include "hsc/supervisory.hpp"

namespace hsc::cli {

namespace {

using nlohmann::json;

/// Everything a subcommand produces; rendered as text or JSON.
struct Report {
  std::string command;
  std::string verdict;
  int exit_code = kHolds;
  std::vector<Witness> witnesses;
  std::map<std::string, std::size_t> bounds;
  std::vector<std::string> lines;
  std::string detail;
};

int exit_code_for(Status status) {
  switch (status) {
    case Status::Holds:
      return kHolds;
    case Status::Violated:
      return kViolated;
    case Status::Inconclusive:
      return kInconclusive;
  }
  return kUsageError;
}

// Internal consistency failure: a witness did not survive re-verification.
class WitnessRejected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_verified(bool ok, const std::string& what) {
  if (!ok) throw WitnessRejected("witness failed re-verification: " + what);
}

Report from_verdict(std::string command, const Verdict& verdict) {
  Report r;
  r.command = std::move(command);
  r.verdict = std::string(to_string(verdict.status));
  r.exit_code = exit_code_for(verdict.status);
  r.detail = verdict.detail;
  if (verdict.witness) r.witnesses.push_back(*verdict.witness);
  return r;
}

std::string witness_line(const Witness& w) {
  std::string out = "witness [" + w.kind + "]";
  for (const auto& [name, value] : w.fields) out += "  " + name + " = " + to_text(value);
  return out;
}

json witness_json(const Witness& w) {
  json fields = json::object();
  for (const auto& [name, value] : w.fields) fields[name] = value;
  return json{{"kind", w.kind}, {"fields", fields}};
}

void render(const Report& r, bool as_json, double elapsed_ms, std::ostream& out) {
  if (as_json) {
    json witnesses = json::array();
    for (const auto& w : r.witnesses) witnesses.push_back(witness_json(w));
    json doc{{"command", r.command},
             {"verdict", r.verdict},
             {"exit_code", r.exit_code},
             {"witnesses", witnesses},
             {"bounds", r.bounds},
             {"detail", r.detail},
             {"report", r.lines},
             {"timing_ms", elapsed_ms},
             {"tool_version", std::string(kToolVersion)}};
    out << doc.dump(2) << "\n";
    return;
  }
  out << r.command << ": " << r.verdict << "\n";
  for (const auto& line : r.lines) out << "  " << line << "\n";
  for (const auto& w : r.witnesses) out << "  " << witness_line(w) << "\n";
  if (!r.detail.empty()) out << "  detail: " << r.detail << "\n";
  if (!r.bounds.empty()) {
    out << "  bounds:";
    for (const auto& [name, value] : r.bounds) out << " " << name << "=" << value;
    out << "\n";
  }
}

// ---- subcommands ----------------------------------------------------------

Report run_check_oc(const std::string& path, std::size_t t_bound, std::size_t s_bound) {
  const GeneratorFile file = load_generator(path);
  const auto lang = oracle_of(file.generator, OracleSource::Generated);
  const Verdict v = check_oc(*lang, file.profile, t_bound, s_bound);
  if (v.status == Status::Violated) {
    const OcWitnessRequest req{v.witness->at("t"), v.witness->at("t_prime")};
    // A definitive violation: the pair is realised and no witness exists.
    require_verified(!find_oc_witness(*lang, file.profile, req, s_bound).has_value(),
                     "OC pair has a witness");
  }
  Report r = from_verdict("check-oc", v);
  r.bounds = {{"t_bound", t_bound}, {"s_bound", s_bound}};
  r.lines.push_back("language hint: " + std::string(to_string(lang->finiteness_hint())));
  return r;
}

Report run_check_loc(const std::string& path, std::size_t s_bound, std::size_t u_bound) {
  const GeneratorFile file = load_generator(path);
  const auto lang = oracle_of(file.generator, OracleSource::Generated);
  const Verdict v = check_loc(*lang, file.profile, s_bound, u_bound);
  if (v.status == Status::Violated) {
    const auto& w = *v.witness;
    const Event e = w.at("e").front();
    require_verified(lang->contains(w.at("s")) && lang->contains(w.at("s_prime")) &&
                         project(file.profile, ProjectionKind::p(), w.at("s")) ==
                             project(file.profile, ProjectionKind::p(), w.at("s_prime")) &&
                         !find_loc_witness(*lang, file.profile, w.at("s"), w.at("s_prime"), e,
                                           u_bound),
                     "LOC obligation is satisfiable");
  }
  Report r = from_verdict("check-loc", v);
  r.bounds = {{"s_bound", s_bound}, {"u_bound", u_bound}};
  return r;
}

Report run_check_obs(const std::string& spec, const std::string& plant) {
  const GeneratorFile k = load_generator(spec);
  const GeneratorFile g = load_generator(plant);
  const Verdict v = check_observability(k.generator, g.generator, g.profile);
  if (v.status == Status::Violated) {
    require_verified(falsifies_observability(k.generator, g.generator, g.profile,
                                             ObservabilityWitness::from_witness(*v.witness)),
                     "observability implication not falsified");
  }
  return from_verdict("check-obs", v);
}

Report run_check_ctrl(const std::string& spec, const std::string& plant) {
  const GeneratorFile k = load_generator(spec);
  const GeneratorFile g = load_generator(plant);
  const Verdict v = check_controllability(k.generator, g.generator, g.profile);
  if (v.status == Status::Violated) {
    require_verified(falsifies_controllability(k.generator, g.generator, g.profile,
                                               v.witness->at("s"), v.witness->at("u").front()),
                     "controllability inclusion not falsified");
  }
  return from_verdict("check-ctrl", v);
}

Report run_check_nonconflict(const std::string& spec, const std::string& plant) {
  const GeneratorFile k = load_generator(spec);
  const GeneratorFile g = load_generator(plant);
  const Verdict v = check_sync_nonconflicting(k.generator, g.generator);
  if (v.status == Status::Violated) {
    const EventString& s = v.witness->at("s");
    const auto left = oracle_of(parallel_compose(k.generator, g.generator),
                                OracleSource::MarkedClosure);
    const auto k_closure = oracle_of(k.generator, OracleSource::MarkedClosure);
    const auto g_closure = oracle_of(g.generator, OracleSource::MarkedClosure);
    const bool in_right = k_closure->contains(erase_outside(s, k.generator.alphabet())) &&
                          g_closure->contains(erase_outside(s, g.generator.alphabet()));
    require_verified(left->contains(s) != in_right, "string is on both sides");
  }
  return from_verdict("check-nonconflict", v);
}

EventString parse_event_string(const std::string& text, bool chars) {
  return chars ? from_chars(text) : tokenize(text);
}

Report run_project(const std::string& path, const std::string& kind_name,
                   const std::optional<std::string>& text, bool chars) {
  const GeneratorFile file = load_generator(path);
  const ProjectionKind kind = ProjectionKind::parse(kind_name);
  Report r;
  r.command = "project";
  r.verdict = "OK";
  if (text) {
    const EventString s = parse_event_string(*text, chars);
    const EventString image = project(file.profile, kind, s);
    r.witnesses.push_back(Witness{"projection", {{"input", s}, {"image", image}}});
    r.lines.push_back(to_text(image));
    return r;
  }
  const Generator projected = project_generator(file.generator, file.profile, kind);
  std::istringstream body(serialize_generator(projected));
  for (std::string line; std::getline(body, line);) r.lines.push_back(line);
  return r;
}

Report run_compose(const std::vector<std::string>& paths) {
  if (paths.size() != 2) throw CLI::ValidationError("compose", "expects exactly two --gen files");
  const GeneratorFile a = load_generator(paths[0]);
  const GeneratorFile b = load_generator(paths[1]);
  const Generator composed = parallel_compose(a.generator, b.generator);
  Report r;
  r.command = "compose";
  r.verdict = "OK";
  std::istringstream body(serialize_generator(composed));
  for (std::string line; std::getline(body, line);) r.lines.push_back(line);
  return r;
}

std::string pair_text(const EventString& w) {
  std::string out;
  for (const auto& e : w) out += e;
  return out;
}

Report run_pcp_solve(const std::string& path, std::size_t k) {
  const pcp::Instance inst = pcp::load_instance(path);
  const pcp::Validation v = pcp::validate(inst);
  if (v.kind == pcp::Validation::Kind::Invalid) throw ValidationError(v.reason);
  Report r;
  r.command = "pcp-solve";
  r.bounds = {{"k", k}};
  const auto sol = pcp::solve_bounded(inst, k);
  if (!sol) {
    r.verdict = "NO_SOLUTION";
    r.exit_code = kViolated;
    r.detail = "no solution with <= " + std::to_string(k) + " indices";
    return r;
  }
  require_verified(pcp::is_solution(inst, *sol), "index sequence is not a solution");
  r.verdict = "SOLUTION";
  EventString indices;
  for (auto i : *sol) indices.push_back(std::to_string(i));
  r.witnesses.push_back(Witness{"pcp_solution",
                                {{"indices", indices}, {"concatenation", pcp::top_concat(inst, *sol)}}});
  r.lines.push_back("solution " + pcp::to_text(*sol));
  r.lines.push_back("w-concatenation " + pair_text(pcp::top_concat(inst, *sol)));
  r.lines.push_back("u-concatenation " + pair_text(pcp::bottom_concat(inst, *sol)));
  return r;
}

Witness case_witness(const pcp::CaseWitness& c) {
  return Witness{"oc_case_" + std::to_string(c.case_number),
                 {{"t", c.request.t},
                  {"t_prime", c.request.t_prime},
                  {"s", c.witness.s},
                  {"s_prime", c.witness.s_prime}}};
}

void verify_cases(const pcp::Instance& inst, const std::vector<pcp::CaseWitness>& cases) {
  const pcp::ReductionOracle oracle(inst);
  const AlphabetProfile profile = pcp::reduction_profile(inst);
  for (const auto& c : cases) {
    require_verified(is_valid_oc_witness(oracle, profile, c.request, c.witness),
                     "case " + std::to_string(c.case_number));
  }
}

Report run_pcp_reduce(const std::string& path, std::size_t k) {
  const pcp::Instance inst = pcp::load_instance(path);
  const pcp::ReductionCheck check = pcp::check_oc_reduction(inst, k);
  verify_cases(inst, check.cases);
  Report r = from_verdict("pcp-reduce", check.verdict);
  r.bounds = {{"k", k}};
  r.lines.push_back("critical pair: (" + to_text(check.critical_pair.t) + ", " +
                    to_text(check.critical_pair.t_prime) + ")");
  if (check.solution) r.lines.push_back("solution " + pcp::to_text(*check.solution));
  for (const auto& c : check.cases) r.witnesses.push_back(case_witness(c));
  return r;
}

Report run_pcp_demo(const std::string& path, std::size_t k) {
  const pcp::Instance inst = pcp::load_instance(path);
  Report r;
  r.command = "pcp-demo";
  r.bounds = {{"k", k}};
  r.lines.push_back("instance: " + std::to_string(inst.size()) + " pairs over " +
                    to_text(inst.base));
  for (std::size_t i = 1; i <= inst.size(); ++i) {
    r.lines.push_back("  " + std::to_string(i) + ": " + pair_text(inst.top(i)) + " / " +
                      pair_text(inst.bottom(i)));
  }
  const pcp::Validation v = pcp::validate(inst);
  if (v.kind == pcp::Validation::Kind::Invalid) throw ValidationError(v.reason);
  if (v.kind == pcp::Validation::Kind::TriviallySolvable) {
    r.lines.push_back("validate: trivially solvable at index " + std::to_string(v.index) + " (" +
                      v.reason + ")");
  } else {
    r.lines.push_back("validate: OK (w_i != u_i for every i)");
  }

  const auto oracle = pcp::build_reduction_oracle(inst);
  const AlphabetProfile profile = pcp::reduction_profile(inst);
  const std::size_t image_len = 3 + k + k * std::max<std::size_t>(1, [&] {
    std::size_t longest = 0;
    for (const auto& [w, u] : inst.pairs) longest = std::max({longest, w.size(), u.size()});
    return longest;
  }());
  const StringSet image = oracle->image_up_to(image_len, profile.high);
  std::string image_text = "{";
  for (const auto& t : image) image_text += (image_text.size() > 1 ? ", " : "") + to_text(t);
  r.lines.push_back("reduction: A onto {@, #}, P onto base ∪ indices; A(L̄) up to length " +
                    std::to_string(image_len) + " = " + image_text + "}");

  const pcp::ReductionCheck check = pcp::check_oc_reduction(inst, k);
  verify_cases(inst, check.cases);
  if (check.solution) {
    require_verified(pcp::is_solution(inst, *check.solution), "solution");
    r.lines.push_back("solve_bounded(k=" + std::to_string(k) + "): solution " +
                      pcp::to_text(*check.solution) + ", both sides " +
                      pair_text(pcp::top_concat(inst, *check.solution)));
    for (const auto& c : check.cases) {
      r.lines.push_back("case " + std::to_string(c.case_number) + " (t = " + to_text(c.request.t) +
                        ", t' = " + to_text(c.request.t_prime) + "): s = " + to_text(c.witness.s) +
                        " | s' = " + to_text(c.witness.s_prime) + " | P = " +
                        to_text(project(profile, ProjectionKind::p(), c.witness.s)) +
                        "  [verified]");
      r.witnesses.push_back(case_witness(c));
    }
    r.lines.push_back("OC HOLDS (witnessed)");
    r.verdict = "HOLDS";
    r.exit_code = kHolds;
  } else {
    r.lines.push_back("solve_bounded(k=" + std::to_string(k) + "): none");
    r.lines.push_back("no solution ≤ " + std::to_string(k) +
                      "; OC unresolved at bound (critical pair @@ / #)");
    r.verdict = "INCONCLUSIVE";
    r.exit_code = kInconclusive;
  }
  return r;
}

Report run_theorem1(const std::string& plant, const std::string& spec) {
  const GeneratorFile g = load_generator(plant);
  const GeneratorFile k = load_generator(spec);
  const Theorem1Report t = theorem1_harness(g.generator, k.generator, g.profile);
  Report r;
  r.command = "theorem1";
  auto line = [&](const std::string& name, const Verdict& v) {
    r.lines.push_back(name + ": " + std::string(to_string(v.status)));
    if (v.witness) r.witnesses.push_back(*v.witness);
  };
  line("hypothesis OC", t.oc);
  line("hypothesis LOC", t.loc);
  line("hypothesis nonconflicting", t.nonconflicting);
  line("K observable w.r.t. A(L(G))", t.high_level);
  line("K || L(G) observable w.r.t. L(G)", t.low_level);
  if (!t.hypotheses_hold()) {
    r.verdict = "INFORMATIONAL";
    r.exit_code = kInconclusive;
    r.detail = "a hypothesis fails; agreement is not asserted";
  } else if (t.verdicts_agree()) {
    r.verdict = "AGREE";
    r.exit_code = kHolds;
  } else {
    r.verdict = "DISAGREE";
    r.exit_code = kViolated;
  }
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hierarchical supervisory control checks under partial observation", "hscctl"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::function<Report()> action;
  std::string lang, spec, plant, gen, kind, instance;
  std::vector<std::string> gens;
  std::optional<std::string> text;
  bool chars = false;
  std::size_t t_bound = 4, s_bound = 12, k = 6;
  std::optional<std::size_t> u_bound;

  auto* oc = app.add_subcommand("check-oc", "Observation consistency of L(G)");
  oc->add_option("--lang", lang, "Generator file")->required();
  oc->add_option("--t-bound", t_bound)->capture_default_str();
  oc->add_option("--s-bound", s_bound)->capture_default_str();
  oc->callback([&] { action = [&] { return run_check_oc(lang, t_bound, s_bound); }; });

  auto* loc = app.add_subcommand("check-loc", "Local observation consistency of L(G)");
  loc->add_option("--lang", lang, "Generator file")->required();
  loc->add_option("--s-bound", s_bound)->capture_default_str();
  loc->add_option("--u-bound", u_bound, "Continuation bound (default: s-bound)");
  loc->callback([&] {
    action = [&] { return run_check_loc(lang, s_bound, u_bound.value_or(s_bound)); };
  });

  auto add_pair = [&](const std::string& name, const std::string& help,
                      Report (*fn)(const std::string&, const std::string&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--spec", spec, "Specification generator (K = marked language)")->required();
    sub->add_option("--plant", plant, "Plant generator with profile lines")->required();
    sub->callback([&, fn] { action = [&, fn] { return fn(spec, plant); }; });
  };
  add_pair("check-obs", "Observability of K w.r.t. L(G)", run_check_obs);
  add_pair("check-ctrl", "Controllability of K w.r.t. L(G)", run_check_ctrl);
  add_pair("check-nonconflict", "Synchronous nonconflictingness of K and L_m(G)",
           run_check_nonconflict);

  auto* proj = app.add_subcommand("project", "Project a string or a generator");
  proj->add_option("--gen", gen, "Generator file supplying the profile")->required();
  proj->add_option("--kind", kind, "P, A, P_HI or A_O")->required();
  proj->add_option("--string", text, "Whitespace-separated events");
  proj->add_flag("--chars", chars, "Treat every character of --string as one event");
  proj->callback([&] { action = [&] { return run_project(gen, kind, text, chars); }; });

  auto* comp = app.add_subcommand("compose", "Parallel composition of two generators");
  comp->add_option("--gen", gens, "Generator file (give twice)")->required();
  comp->callback([&] { action = [&] { return run_compose(gens); }; });

  auto add_pcp = [&](const std::string& name, const std::string& help,
                     Report (*fn)(const std::string&, std::size_t)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--instance", instance, "PCP instance file")->required();
    sub->add_option("--k", k, "Bound on the number of indices")->capture_default_str();
    sub->callback([&, fn] { action = [&, fn] { return fn(instance, k); }; });
  };
  add_pcp("pcp-solve", "Bounded breadth-first PCP search", run_pcp_solve);
  add_pcp("pcp-reduce", "OC of the reduction language via the correspondence", run_pcp_reduce);
  add_pcp("pcp-demo", "Full reduction pipeline with re-verified witnesses", run_pcp_demo);

  auto* thm = app.add_subcommand("theorem1", "Hierarchical observability equivalence on a finite plant");
  thm->add_option("--plant", plant, "Plant generator with profile lines")->required();
  thm->add_option("--spec", spec, "High-level specification generator over Σ_hi")->required();
  thm->callback([&] { action = [&] { return run_theorem1(plant, spec); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kHolds;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kHolds;
  } catch (const CLI::ParseError& e) {
    err << "hscctl: " << e.what() << "\n";
    return kUsageError;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    const Report report = action();
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    render(report, format == "json", elapsed, out);
    return report.exit_code;
  } catch (const ParseError& e) {
    err << "hscctl: " << e.what() << "\n";
  } catch (const ValidationError& e) {
    err << "hscctl: invalid input: " << e.what() << "\n";
  } catch (const CLI::Error& e) {
    err << "hscctl: " << e.what() << "\n";
  } catch (const WitnessRejected& e) {
    err << "hscctl: internal error: " << e.what() << "\n";
  }
  return kUsageError;
}

}  // namespace hsc::cli
