#pragma once

// Brute-force ground truth for FC / CFC classification by direct
// enumeration of commutation classes and rotations. Deliberately slow and
// close to the definitions; shares no code with the automaton builders.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "core.hpp"
#include "errors.hpp"

namespace cfc::oracle {

inline constexpr std::size_t kDefaultClassBudget = 1'000'000;

/// All words reachable from w by swapping adjacent commuting letters.
/// Ordered, so the lexicographically least member is begin().
inline std::set<Word> commutation_class(const CoxeterSystem& w, const Word& word,
                                        std::size_t budget = kDefaultClassBudget) {
  std::set<Word> seen{word};
  std::deque<Word> queue{word};
  while (!queue.empty()) {
    Word v = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] == v[i + 1] || !w.commutes(v[i], v[i + 1])) continue;
      Word u = v;
      std::swap(u[i], u[i + 1]);
      if (seen.insert(u).second) {
        if (seen.size() > budget) {
          throw budget_error("commutation class of length-" + std::to_string(word.size()) +
                             " word exceeds the budget of " + std::to_string(budget));
        }
        queue.push_back(std::move(u));
      }
    }
  }
  return seen;
}

/// A factor xx, or an alternating {s,t} factor of length m[s][t] for finite m >= 3.
inline bool has_forbidden_factor(const CoxeterSystem& w, const Word& word) {
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i] == word[i + 1]) return true;
  }
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    const Generator s = word[i];
    const Generator t = word[i + 1];
    const unsigned m = w.m(s, t);
    if (m < 3 || !is_finite_label(m) || i + m > word.size()) continue;
    bool alternating = true;
    for (std::size_t j = 2; j < m && alternating; ++j) alternating = word[i + j] == (j % 2 == 0 ? s : t);
    if (alternating) return true;
  }
  return false;
}

/// The word is a reduced expression of an FC element iff no member of its
/// commutation class has a forbidden factor.
inline bool is_reduced_fc(const CoxeterSystem& w, const Word& word, std::size_t budget = kDefaultClassBudget) {
  for (const auto& v : commutation_class(w, word, budget)) {
    if (has_forbidden_factor(w, v)) return false;
  }
  return true;
}

/// Reduced FC, and every rotation of every member of the class (which is all
/// of R(w) for an FC element) is again reduced FC.
inline bool is_cfc(const CoxeterSystem& w, const Word& word, std::size_t budget = kDefaultClassBudget) {
  const auto cls = commutation_class(w, word, budget);
  for (const auto& v : cls) {
    if (has_forbidden_factor(w, v)) return false;
  }
  std::set<Word> checked;
  for (const auto& v : cls) {
    for (auto& r : cyclic_shifts(v)) {
      if (checked.contains(r)) continue;
      const auto rcls = commutation_class(w, r, budget);
      for (const auto& u : rcls) {
        if (has_forbidden_factor(w, u)) return false;
      }
      checked.insert(rcls.begin(), rcls.end());
    }
  }
  return true;
}

struct OracleReport {
  CoxeterSystem system;
  std::size_t max_length = 0;
  std::vector<std::uint64_t> fc_counts;
  std::vector<std::uint64_t> cfc_counts;
  /// Filled only when requested: per length, the counted representatives.
  std::vector<std::vector<Word>> fc_witnesses;
  std::vector<std::vector<Word>> cfc_witnesses;
};

struct OracleOptions {
  std::size_t class_budget = kDefaultClassBudget;
  bool witnesses = false;
};

/// Counts FC and CFC elements by length, one representative per element: the
/// words that are least in their commutation class. Enumeration extends only
/// reduced-FC prefixes (every factor of a reduced FC word is reduced FC).
inline OracleReport count_elements(const CoxeterSystem& w, std::size_t max_len, OracleOptions options = {}) {
  OracleReport report;
  report.system = w;
  report.max_length = max_len;
  report.fc_counts.assign(max_len + 1, 0);
  report.cfc_counts.assign(max_len + 1, 0);
  if (options.witnesses) {
    report.fc_witnesses.resize(max_len + 1);
    report.cfc_witnesses.resize(max_len + 1);
  }

  Word word;
  auto visit = [&](auto&& self) -> void {
    const auto cls = commutation_class(w, word, options.class_budget);
    if (*cls.begin() == word) {
      ++report.fc_counts[word.size()];
      if (options.witnesses) report.fc_witnesses[word.size()].push_back(word);
      if (is_cfc(w, word, options.class_budget)) {
        ++report.cfc_counts[word.size()];
        if (options.witnesses) report.cfc_witnesses[word.size()].push_back(word);
      }
    }
    if (word.size() == max_len) return;
    for (Generator s = 0; s < w.rank(); ++s) {
      word.push_back(s);
      if (is_reduced_fc(w, word, options.class_budget)) self(self);
      word.pop_back();
    }
  };
  try {
    visit(visit);
  } catch (const budget_error& e) {
    throw budget_error(std::string(e.what()) + " (reduce --max-len)");
  }
  if (options.witnesses) {
    for (auto& v : report.fc_witnesses) std::sort(v.begin(), v.end());
    for (auto& v : report.cfc_witnesses) std::sort(v.begin(), v.end());
  }
  return report;
}

inline nlohmann::json to_json(const OracleReport& r, bool with_witnesses = false) {
  auto counts = [](const std::vector<std::uint64_t>& v) {
    nlohmann::json out = nlohmann::json::array();
    for (auto x : v) out.push_back(std::to_string(x));
    return out;
  };
  nlohmann::json doc = {{"system", cfc::to_json(r.system)},
                        {"max_length", r.max_length},
                        {"fc_counts", counts(r.fc_counts)},
                        {"cfc_counts", counts(r.cfc_counts)}};
  if (with_witnesses) {
    auto words = [&](const std::vector<std::vector<Word>>& per_len) {
      nlohmann::json out = nlohmann::json::array();
      for (const auto& ws : per_len) {
        nlohmann::json level = nlohmann::json::array();
        for (const auto& x : ws) level.push_back(format_word(r.system, x));
        out.push_back(std::move(level));
      }
      return out;
    };
    doc["fc_witnesses"] = words(r.fc_witnesses);
    doc["cfc_witnesses"] = words(r.cfc_witnesses);
  }
  return doc;
}

}  // namespace cfc::oracle
