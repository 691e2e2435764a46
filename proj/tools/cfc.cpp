// cfc: build CFC/FC automata, extract length series and generating functions,
// run the brute-force oracle and cross-check the two.
//
// Exit codes: 0 ok, 1 verification mismatch, 2 invalid input,
// 3 budget exceeded, 4 internal invariant violation.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cfc/pipeline.hpp"

namespace {

enum ExitCode : int { kOk = 0, kMismatch = 1, kInvalidInput = 2, kBudget = 3, kInternal = 4 };

struct RunConfig {
  std::string system;
  std::size_t max_len = 10;
  std::string out;
  std::string dot;
  std::string stage = "cfc";
  std::string mode = "cfc";
  bool per_expression = false;
  bool keep_sink = false;
  bool stats = false;
  bool witnesses = false;
  std::size_t state_budget = 10'000'000;
  std::size_t class_budget = cfc::oracle::kDefaultClassBudget;
  std::size_t max_rank = cfc::CoxeterSystem::kDefaultMaxRank;
  bool linear_factor_check = false;
  bool no_unbounded_tracking = false;
};

cfc::CoxeterSystem load_system(const RunConfig& cfg) {
  if (cfg.system.empty()) throw cfc::input_error("--system is required");
  std::error_code ec;
  if (std::filesystem::is_regular_file(cfg.system, ec)) {
    std::ifstream in(cfg.system);
    std::stringstream buf;
    buf << in.rdbuf();
    return cfc::parse_system(buf.str(), cfg.max_rank);
  }
  return cfc::parse_system(cfg.system, cfg.max_rank);
}

cfc::PipelineOptions pipeline_options(const RunConfig& cfg) {
  cfc::PipelineOptions opt;
  if (cfg.mode == "fc") {
    opt.mode = cfc::AcceptMode::fc;
  } else if (cfg.mode != "cfc") {
    throw cfc::input_error("--mode must be cfc or fc");
  }
  opt.finality = cfg.linear_factor_check ? cfc::FinalityRule::linear : cfc::FinalityRule::cyclic;
  opt.track_unbounded = !cfg.no_unbounded_tracking;
  opt.state_budget = cfg.state_budget;
  return opt;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out);
  if (!file) throw cfc::input_error("cannot write " + cfg.out);
  file << text;
}

int cmd_automaton(const RunConfig& cfg) {
  const auto w = load_system(cfg);
  const auto opt = pipeline_options(cfg);
  cfc::Stage stage;
  if (cfg.stage == "cfc") {
    stage = cfc::Stage::cfc;
  } else if (cfg.stage == "fc") {
    stage = cfc::Stage::fc;
  } else if (cfg.stage == "lexnf") {
    stage = cfc::Stage::lexnf;
  } else if (cfg.stage == "pipeline") {
    stage = cfc::Stage::pipeline;
  } else {
    throw cfc::input_error("--stage must be one of cfc, fc, lexnf, pipeline");
  }
  const auto raw = cfc::build_stage(w, stage, opt);
  const auto trimmed = cfc::trim(raw);
  const auto minimal = cfc::minimize(trimmed);
  if (!cfg.out.empty()) {
    std::ofstream file(cfg.out);
    if (!file) throw cfc::input_error("cannot write " + cfg.out);
    file << cfc::to_json(raw).dump(2) << "\n";
  }
  if (!cfg.dot.empty()) {
    std::ofstream file(cfg.dot);
    if (!file) throw cfc::input_error("cannot write " + cfg.dot);
    file << cfc::to_dot(raw, w.names(), cfg.keep_sink);
  }
  if (cfg.stats || (cfg.out.empty() && cfg.dot.empty())) {
    std::cout << "states: " << raw.num_states() << "\n";
    std::cout << "trimmed: " << trimmed.num_states() << "\n";
    std::cout << "minimized: " << minimal.num_states() << "\n";
  }
  return kOk;
}

int cmd_series(const RunConfig& cfg) {
  const auto w = load_system(cfg);
  const auto opt = pipeline_options(cfg);
  const auto a = cfg.per_expression ? cfc::expression_automaton(w, opt) : cfc::element_automaton(w, opt);
  const auto series = cfc::count_by_length(a, cfg.max_len);
  emit(cfg, cfc::series_json(series).dump() + "\n");
  return kOk;
}

int cmd_genfun(const RunConfig& cfg) {
  const auto w = load_system(cfg);
  const auto opt = pipeline_options(cfg);
  const auto a = cfg.per_expression ? cfc::expression_automaton(w, opt) : cfc::element_automaton(w, opt);
  const auto result = cfc::generating_function(a);
  auto doc = cfc::series_json(result.series, &result.gf);
  doc["display"] = cfc::format_rational(result.gf);
  emit(cfg, doc.dump() + "\n");
  if (!cfg.out.empty()) std::cout << cfc::format_rational(result.gf) << "\n";
  return kOk;
}

int cmd_oracle(const RunConfig& cfg) {
  const auto w = load_system(cfg);
  const auto report = cfc::oracle::count_elements(w, cfg.max_len, {cfg.class_budget, cfg.witnesses});
  emit(cfg, cfc::oracle::to_json(report, cfg.witnesses).dump() + "\n");
  return kOk;
}

int cmd_verify(const RunConfig& cfg) {
  const auto w = load_system(cfg);
  const auto opt = pipeline_options(cfg);
  const auto report = cfc::verify(w, cfg.max_len, opt, cfg.class_budget);
  std::ostringstream out;
  for (std::size_t k = 0; k <= cfg.max_len; ++k) {
    out << "length " << k << ": automaton " << report.automaton_counts[k] << ", oracle " << report.oracle_counts[k]
        << "\n";
    if (report.first_mismatch && *report.first_mismatch == k) break;
  }
  if (report.ok()) {
    out << "match\n";
  } else {
    out << "mismatch at length " << *report.first_mismatch;
    if (report.witness) {
      out << "; witness " << cfc::format_word(w, *report.witness) << " ("
          << (report.witness_accepted_by_automaton ? "accepted by automaton, rejected by oracle"
                                                   : "accepted by oracle, rejected by automaton")
          << ")";
    }
    out << "\n";
  }
  emit(cfg, out.str());
  return report.ok() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automata and generating functions for cyclically fully commutative elements"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--system", cfg.system, "Preset (A3, B4, D5, I2:5, I2:inf, tA3, tA1) or JSON file")
        ->required();
    sub->add_option("--out", cfg.out, "Write structured output to this path");
    sub->add_option("--mode", cfg.mode, "Language: cfc or fc")->check(CLI::IsMember({"cfc", "fc"}));
    sub->add_option("--state-budget", cfg.state_budget, "Maximum automaton states");
    sub->add_option("--class-budget", cfg.class_budget, "Maximum commutation class size in the oracle");
    sub->add_option("--max-rank", cfg.max_rank, "Maximum accepted rank");
    // Test hooks, deliberately undocumented.
    sub->add_flag("--linear-factor-check", cfg.linear_factor_check)->group("");
    sub->add_flag("--no-unbounded-tracking", cfg.no_unbounded_tracking)->group("");
  };

  auto* automaton = app.add_subcommand("automaton", "Build an automaton and report state counts");
  common(automaton);
  automaton->add_option("--stage", cfg.stage, "cfc, fc, lexnf or pipeline");
  automaton->add_option("--dot", cfg.dot, "Write GraphViz DOT to this path");
  automaton->add_flag("--keep-sink", cfg.keep_sink, "Keep the dead state in DOT output");
  automaton->add_flag("--stats", cfg.stats, "Print raw, trimmed and minimized state counts");

  auto* series = app.add_subcommand("series", "Per-length element (or expression) counts");
  common(series);
  series->add_option("--max-len", cfg.max_len, "Largest length");
  series->add_flag("--per-expression", cfg.per_expression, "Count reduced expressions instead of elements");

  auto* genfun = app.add_subcommand("genfun", "Exact rational generating function");
  common(genfun);
  genfun->add_flag("--per-expression", cfg.per_expression, "Series of reduced expressions instead of elements");

  auto* oracle = app.add_subcommand("oracle", "Brute-force FC/CFC element counts");
  common(oracle);
  oracle->add_option("--max-len", cfg.max_len, "Largest length");
  oracle->add_flag("--witnesses", cfg.witnesses, "Include the counted words");

  auto* verify = app.add_subcommand("verify", "Compare automaton and oracle counts");
  common(verify);
  verify->add_option("--max-len", cfg.max_len, "Largest length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*automaton) return cmd_automaton(cfg);
    if (*series) return cmd_series(cfg);
    if (*genfun) return cmd_genfun(cfg);
    if (*oracle) return cmd_oracle(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const cfc::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const cfc::budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const cfc::invariant_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInvalidInput;
}
