#pragma once

// End-to-end composition: CFC (or FC) automaton ∩ lexicographic normal forms
// gives one word per element; counting and Berlekamp-Massey give W(x).

#include <algorithm>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "cfc_automaton.hpp"
#include "core.hpp"
#include "fsa.hpp"
#include "genfun.hpp"
#include "lexnf.hpp"
#include "oracle.hpp"

namespace cfc {

enum class Stage { cfc, fc, lexnf, pipeline };

struct PipelineOptions {
  AcceptMode mode = AcceptMode::cfc;
  FinalityRule finality = FinalityRule::cyclic;
  bool track_unbounded = true;
  std::size_t state_budget = 10'000'000;

  AutomatonOptions automaton(AcceptMode m) const { return {m, finality, track_unbounded, state_budget}; }
};

/// Raw automaton of a stage: the cfc/fc automaton, the lexnf automaton, or
/// the accessible product (element pipeline) for options.mode.
inline Dfa build_stage(const CoxeterSystem& w, Stage stage, const PipelineOptions& options = {}) {
  switch (stage) {
    case Stage::cfc:
      return build_automaton(w, options.automaton(AcceptMode::cfc)).dfa;
    case Stage::fc:
      return build_automaton(w, options.automaton(AcceptMode::fc)).dfa;
    case Stage::lexnf:
      return build_lexnf(w, options.state_budget);
    case Stage::pipeline:
      break;
  }
  return intersect(build_automaton(w, options.automaton(options.mode)).dfa, build_lexnf(w, options.state_budget));
}

/// Minimized element pipeline: one accepted word per element.
inline Dfa element_automaton(const CoxeterSystem& w, const PipelineOptions& options = {}) {
  return minimize(trim(build_stage(w, Stage::pipeline, options)));
}

/// Automaton for all reduced expressions (no normal-form selection).
inline Dfa expression_automaton(const CoxeterSystem& w, const PipelineOptions& options = {}) {
  return minimize(trim(build_automaton(w, options.automaton(options.mode)).dfa));
}

struct GeneratingFunction {
  CountSeries series;
  RationalGF gf;
  std::size_t automaton_states = 0;
};

/// Counts 2·states + 2 terms of the minimized automaton, which certifies the
/// Berlekamp-Massey recurrence.
inline GeneratingFunction generating_function(const Dfa& a) {
  GeneratingFunction out;
  out.automaton_states = a.num_states();
  out.series = count_by_length(a, 2 * a.num_states() + 1);
  out.gf = to_rational(out.series);
  return out;
}

struct VerifyReport {
  std::vector<BigInt> automaton_counts;
  std::vector<std::uint64_t> oracle_counts;
  std::optional<std::size_t> first_mismatch;
  std::optional<Word> witness;
  bool witness_accepted_by_automaton = false;

  bool ok() const { return !first_mismatch; }
};

/// Runs the element pipeline and the oracle independently and compares
/// per-length counts up to max_len. On mismatch, reports the first length and
/// the least word the two sides classify differently.
inline VerifyReport verify(const CoxeterSystem& w, std::size_t max_len, const PipelineOptions& options = {},
                           std::size_t class_budget = oracle::kDefaultClassBudget) {
  const Dfa pipeline = element_automaton(w, options);
  VerifyReport report;
  report.automaton_counts = count_by_length(pipeline, max_len).coeffs;
  const auto truth = oracle::count_elements(w, max_len, {class_budget, true});
  const bool fc = options.mode == AcceptMode::fc;
  report.oracle_counts = fc ? truth.fc_counts : truth.cfc_counts;
  const auto& witnesses = fc ? truth.fc_witnesses : truth.cfc_witnesses;

  for (std::size_t k = 0; k <= max_len; ++k) {
    if (report.automaton_counts[k] == report.oracle_counts[k]) continue;
    report.first_mismatch = k;
    const auto mine = accepted_words(pipeline, k);
    const auto& theirs = witnesses[k];
    std::vector<Word> only_mine;
    std::vector<Word> only_theirs;
    std::set_difference(mine.begin(), mine.end(), theirs.begin(), theirs.end(), std::back_inserter(only_mine));
    std::set_difference(theirs.begin(), theirs.end(), mine.begin(), mine.end(), std::back_inserter(only_theirs));
    if (!only_mine.empty() && (only_theirs.empty() || only_mine.front() < only_theirs.front())) {
      report.witness = only_mine.front();
      report.witness_accepted_by_automaton = true;
    } else if (!only_theirs.empty()) {
      report.witness = only_theirs.front();
    }
    break;
  }
  return report;
}

}  // namespace cfc
