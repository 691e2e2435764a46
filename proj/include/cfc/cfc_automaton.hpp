#pragma once

// Deterministic automaton whose accepted words are exactly the reduced
// expressions of cyclically fully commutative (CFC) elements of a Coxeter
// system, and its FC variant (every non-sink state accepting).
//
// A state q reached by a reduced FC word w records
//   - exits:  the letters s such that w·s is still reduced;
//   - braid completions: triples (first, second, harmless) meaning that
//     reading `first` next would complete an alternating {first, second}
//     chain of length m (a braid) up to commutation;
//   - per tracked pair {s,t} (m >= 3): the current chain CC (longest
//     alternating {s,t} chain that commutes to the end of w), the initial
//     chain IC (longest one that commutes to the front), and two flags
//     telling whether s, resp. t, may still be appended to IC.
// Letters of CC that also belong to IC are underlined; they always form a
// prefix of CC and a suffix of IC.
//
// Pairs with m = infinity cannot carry exact chains (they are unbounded), so
// they keep a bounded summary: first letter and size class of IC, last letter
// of CC with its underline flag. That is all the cyclic finality test reads.
//
// The chains only see cyclic braids whose two halves both have at least two
// letters. A braid closed by a single wrapped letter is caught on the
// rotation itself: in cfc mode each state also carries, in a braid detector,
// the runs of x·w for every x, of the rotation moving the last x to the
// front while that x is maximal, and of w minus its first y while that y is
// minimal.

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include <json.hpp>

#include "core.hpp"
#include "errors.hpp"
#include "fsa.hpp"

namespace cfc {

struct ChainLetter {
  Generator gen;
  bool underlined;
  friend auto operator<=>(const ChainLetter&, const ChainLetter&) = default;
};

using Chain = std::vector<ChainLetter>;

enum class SizeClass : std::uint8_t { zero, one, many };

inline SizeClass grow(SizeClass c) { return c == SizeClass::zero ? SizeClass::one : SizeClass::many; }

/// Bounded stand-in for the exact chains of a pair with m = infinity.
struct ChainSummary {
  std::optional<Generator> ic_first;
  SizeClass ic_size = SizeClass::zero;
  std::optional<ChainLetter> cc_last;
  friend bool operator==(const ChainSummary&, const ChainSummary&) = default;
};

/// Exact chains of a pair with finite m. IC letters are never underlined.
struct ExactChains {
  Chain cc;
  Word ic;
  friend bool operator==(const ExactChains&, const ExactChains&) = default;
};

struct PairRecord {
  std::variant<ExactChains, ChainSummary> chains;
  bool b_add_first = true;   ///< the pair's smaller generator may still join IC
  bool b_add_second = true;  ///< the pair's larger generator may still join IC

  bool& b_add(const TrackedPair& p, Generator s) { return s == p.first ? b_add_first : b_add_second; }
  bool b_add(const TrackedPair& p, Generator s) const { return s == p.first ? b_add_first : b_add_second; }
  friend bool operator==(const PairRecord&, const PairRecord&) = default;
};

struct BraidTriple {
  Generator first;   ///< reading this letter completes the braid
  Generator second;  ///< the other letter of the pair
  bool underlined;   ///< the chain contains the first letter of IC, so a rotation cannot complete it
  friend auto operator<=>(const BraidTriple&, const BraidTriple&) = default;
};

/// Minimal automaton accepting the words (reduced or not) whose commutation
/// class contains an alternating {s,t} factor of length m_st for some finite
/// m_st >= 3. Acceptance is absorbing.
class BraidDetector {
 public:
  explicit BraidDetector(const CoxeterSystem& w) : dfa_(build(w)) {}

  StateId initial() const { return dfa_.initial(); }
  StateId next(StateId q, Generator s) const { return dfa_.next(q, s); }
  bool found(StateId q) const { return dfa_.is_final(q); }
  const Dfa& dfa() const { return dfa_; }

 private:
  struct Scan {
    std::vector<Word> cc;
    std::vector<std::pair<Generator, Generator>> pending;
    bool found = false;

    std::string encode() const {
      std::string out(1, found ? 'F' : 'S');
      for (const auto& c : cc) {
        out.push_back(static_cast<char>(c.size()));
        for (Generator g : c) out.push_back(static_cast<char>(g));
      }
      for (const auto& [f, g] : pending) {
        out.push_back(static_cast<char>(f));
        out.push_back(static_cast<char>(g));
      }
      return out;
    }
  };

  static Dfa build(const CoxeterSystem& w) {
    std::vector<TrackedPair> pairs;
    for (const auto& p : tracked_pairs(w)) {
      if (!p.unbounded) pairs.push_back(p);
    }
    auto step = [&](const Scan& q, Generator s) {
      if (q.found) return q;
      Scan done;
      done.found = true;
      Scan r;
      for (const auto& [f, g] : q.pending) {
        if (f == s) return done;
      }
      r.cc = q.cc;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& p = pairs[i];
        auto& cc = r.cc[i];
        if (p.has(s)) {
          if (!cc.empty() && cc.back() == s) cc.clear();
          cc.push_back(s);
          if (cc.size() >= p.m) return done;
          if (cc.size() == p.m - 1) r.pending.emplace_back(p.other(s), s);
          continue;
        }
        const bool c1 = w.commutes(s, p.first);
        const bool c2 = w.commutes(s, p.second);
        if (c1 && c2) continue;
        const Generator blocked = c1 ? p.second : p.first;
        if (!c1 && !c2) {
          cc.clear();
        } else if (cc.empty() || cc.back() == blocked) {
          cc.clear();
        } else {
          cc = Word{cc.back()};
        }
      }
      for (const auto& pr : q.pending) {
        if (w.commutes(pr.first, s)) r.pending.push_back(pr);
      }
      std::sort(r.pending.begin(), r.pending.end());
      r.pending.erase(std::unique(r.pending.begin(), r.pending.end()), r.pending.end());
      return r;
    };

    std::vector<Scan> states;
    std::unordered_map<std::string, StateId> ids;
    auto intern = [&](Scan q) {
      auto [it, inserted] = ids.try_emplace(q.encode(), static_cast<StateId>(states.size()));
      if (inserted) states.push_back(std::move(q));
      return it->second;
    };
    Scan start;
    start.cc.resize(pairs.size());
    intern(std::move(start));
    std::vector<StateId> delta;
    for (std::size_t i = 0; i < states.size(); ++i) {
      for (Generator s = 0; s < w.rank(); ++s) {
        auto next = step(Scan(states[i]), s);
        delta.push_back(intern(std::move(next)));
      }
    }
    std::vector<bool> finals(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) finals[i] = states[i].found;
    return minimize(Dfa(w.rank(), states.size(), std::move(delta), 0, std::move(finals)));
  }

  Dfa dfa_;
};

inline constexpr StateId kNoScan = ~StateId{0};
inline constexpr StateId kUnseen = ~StateId{0} - 1;

/// Braid-detector runs kept for the single-letter rotations (cfc mode only).
struct RotationScans {
  StateId self = 0;                 ///< w
  std::vector<StateId> prepended;   ///< x·w, per generator
  std::vector<StateId> last_moved;  ///< x·R with w ~ R·x and x maximal, else kNoScan
  std::vector<StateId> first_cut;   ///< R with w ~ y·R and y minimal; kUnseen before any y
  friend bool operator==(const RotationScans&, const RotationScans&) = default;
};

struct AutomatonState {
  GeneratorSet exits = 0;
  std::vector<BraidTriple> braid_completions;  ///< sorted, unique
  std::vector<PairRecord> pairs;               ///< parallel to the builder's tracked pairs
  std::optional<RotationScans> rotations;
  bool is_sink = false;

  static AutomatonState sink() {
    AutomatonState q;
    q.is_sink = true;
    return q;
  }

  /// Canonical byte encoding with a fixed field order; injective on states.
  std::string encode() const {
    std::string out;
    out.push_back(is_sink ? 'S' : 'Q');
    if (is_sink) return out;
    for (int shift = 0; shift < 32; shift += 8) out.push_back(static_cast<char>((exits >> shift) & 0xFF));
    out.push_back(static_cast<char>(braid_completions.size()));
    for (const auto& t : braid_completions) {
      out.push_back(static_cast<char>(t.first));
      out.push_back(static_cast<char>(t.second));
      out.push_back(t.underlined ? 1 : 0);
    }
    for (const auto& rec : pairs) {
      out.push_back(static_cast<char>((rec.b_add_first ? 1 : 0) | (rec.b_add_second ? 2 : 0)));
      if (const auto* exact = std::get_if<ExactChains>(&rec.chains)) {
        out.push_back(static_cast<char>(exact->cc.size()));
        for (const auto& l : exact->cc) out.push_back(static_cast<char>(l.gen * 2 + (l.underlined ? 1 : 0)));
        out.push_back(static_cast<char>(exact->ic.size()));
        for (Generator g : exact->ic) out.push_back(static_cast<char>(g));
      } else {
        const auto& sum = std::get<ChainSummary>(rec.chains);
        out.push_back(static_cast<char>(sum.ic_first ? *sum.ic_first : 0xFF));
        out.push_back(static_cast<char>(sum.ic_size));
        out.push_back(static_cast<char>(sum.cc_last ? sum.cc_last->gen * 2 + (sum.cc_last->underlined ? 1 : 0) : 0xFF));
      }
    }
    if (rotations) {
      auto id = [&](StateId v) { out.append(reinterpret_cast<const char*>(&v), sizeof v); };
      id(rotations->self);
      for (auto v : rotations->prepended) id(v);
      for (auto v : rotations->last_moved) id(v);
      for (auto v : rotations->first_cut) id(v);
    }
    return out;
  }

  friend bool operator==(const AutomatonState&, const AutomatonState&) = default;
};

enum class AcceptMode { cfc, fc };

enum class FinalityRule {
  cyclic,  ///< CC/IC junction checked across the end of the word
  linear,  ///< test hook: only the D·IC adjacency, read as a linear word
};

struct AutomatonOptions {
  AcceptMode mode = AcceptMode::cfc;
  FinalityRule finality = FinalityRule::cyclic;
  bool track_unbounded = true;  ///< test hook: false drops m = infinity pairs
  std::size_t state_budget = 10'000'000;
};

/// Transition and finality rules for one Coxeter system.
class CfcRules {
 public:
  explicit CfcRules(const CoxeterSystem& w, AutomatonOptions options = {}) : system_(w), options_(options) {
    for (const auto& p : tracked_pairs(w)) {
      if (p.unbounded && !options_.track_unbounded) continue;
      pairs_.push_back(p);
    }
    if (options_.mode == AcceptMode::cfc) braids_.emplace(w);
  }

  const CoxeterSystem& system() const { return system_; }
  const std::vector<TrackedPair>& pairs() const { return pairs_; }
  const AutomatonOptions& options() const { return options_; }

  /// Index of pair {s,t} in pairs(), if tracked.
  std::optional<std::size_t> pair_index(Generator s, Generator t) const {
    const Generator lo = std::min(s, t);
    const Generator hi = std::max(s, t);
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      if (pairs_[i].first == lo && pairs_[i].second == hi) return i;
    }
    return std::nullopt;
  }

  AutomatonState initial_state() const {
    AutomatonState q;
    q.exits = system_.all_generators();
    for (const auto& p : pairs_) {
      PairRecord rec;
      if (p.unbounded) {
        rec.chains = ChainSummary{};
      } else {
        rec.chains = ExactChains{};
      }
      q.pairs.push_back(std::move(rec));
    }
    if (braids_) {
      const std::size_t n = system_.rank();
      RotationScans rot{braids_->initial(), std::vector<StateId>(n), std::vector<StateId>(n, kNoScan),
                        std::vector<StateId>(n, kUnseen)};
      for (Generator x = 0; x < n; ++x) rot.prepended[x] = braids_->next(rot.self, x);
      q.rotations = std::move(rot);
    }
    return q;
  }

  AutomatonState transition(const AutomatonState& q, Generator s) const {
    if (q.is_sink) return q;
    if (s >= system_.rank()) throw input_error("letter " + std::to_string(s) + " is outside the alphabet");

    // Non-reduced, or completes a braid up to commutation.
    if (!contains(q.exits, s)) return AutomatonState::sink();
    for (const auto& t : q.braid_completions) {
      if (t.first == s) return AutomatonState::sink();
    }

    AutomatonState r;
    r.exits = (q.exits & ~singleton(s)) | system_.non_commuting(s);
    r.pairs = q.pairs;

    std::vector<BraidTriple> added;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      const auto& p = pairs_[i];
      auto& rec = r.pairs[i];
      if (p.has(s)) {
        append_to_pair(p, rec, s, added);
      } else {
        const bool commutes_first = system_.commutes(s, p.first);
        const bool commutes_second = system_.commutes(s, p.second);
        if (commutes_first && commutes_second) continue;
        if (!commutes_first && !commutes_second) {
          clear_cc(rec);
          rec.b_add_first = false;
          rec.b_add_second = false;
          continue;
        }
        const Generator blocked = commutes_first ? p.second : p.first;
        reset_mixed(p, rec, blocked);
      }
    }

    for (const auto& t : q.braid_completions) {
      if (system_.commutes(t.first, s)) r.braid_completions.push_back(t);
    }
    r.braid_completions.insert(r.braid_completions.end(), added.begin(), added.end());
    std::sort(r.braid_completions.begin(), r.braid_completions.end());
    r.braid_completions.erase(std::unique(r.braid_completions.begin(), r.braid_completions.end()),
                              r.braid_completions.end());
    if (q.rotations) r.rotations = advance(*q.rotations, s);
    return r;
  }

  /// Acceptance in cfc mode. See the junction rule in junction_ok().
  bool is_final(const AutomatonState& q) const {
    if (q.is_sink) return false;
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
      const auto& p = pairs_[i];
      const auto& rec = q.pairs[i];
      if (const auto* exact = std::get_if<ExactChains>(&rec.chains)) {
        std::size_t plain = 0;
        for (const auto& l : exact->cc) plain += l.underlined ? 0 : 1;
        if (plain + exact->ic.size() > p.m - 1) return false;
        const auto cc_last = exact->cc.empty() ? std::nullopt : std::optional<ChainLetter>(exact->cc.back());
        const auto ic_first = exact->ic.empty() ? std::nullopt : std::optional<Generator>(exact->ic.front());
        const auto ic_size = exact->ic.size() == 0   ? SizeClass::zero
                             : exact->ic.size() == 1 ? SizeClass::one
                                                     : SizeClass::many;
        if (!junction_ok(cc_last, ic_first, ic_size)) return false;
      } else {
        const auto& sum = std::get<ChainSummary>(rec.chains);
        if (!junction_ok(sum.cc_last, sum.ic_first, sum.ic_size)) return false;
      }
    }
    for (const auto& t : q.braid_completions) {
      if (t.underlined) continue;
      const auto idx = pair_index(t.first, t.second);
      if (!idx) throw invariant_error("braid completion on an untracked pair");
      const auto& exact = std::get<ExactChains>(q.pairs[*idx].chains);
      if (!exact.ic.empty() && exact.ic.front() != t.second) return false;
    }
    return rotations_ok(q);
  }

  /// No rotation moving a single maximal letter to the front, or a single
  /// minimal letter to the back, contains a braid up to commutation.
  bool rotations_ok(const AutomatonState& q) const {
    if (!q.rotations || !braids_) return true;
    const auto& rot = *q.rotations;
    for (Generator x = 0; x < system_.rank(); ++x) {
      if (rot.last_moved[x] != kNoScan && braids_->found(rot.last_moved[x])) return false;
      if (rot.first_cut[x] != kNoScan && rot.first_cut[x] != kUnseen &&
          braids_->found(braids_->next(rot.first_cut[x], x))) {
        return false;
      }
    }
    return true;
  }

  bool is_accepting(const AutomatonState& q) const {
    return options_.mode == AcceptMode::fc ? !q.is_sink : is_final(q);
  }

 private:
  RotationScans advance(const RotationScans& q, Generator s) const {
    RotationScans r;
    r.self = braids_->next(q.self, s);
    const std::size_t n = system_.rank();
    r.prepended.resize(n);
    r.last_moved.resize(n);
    r.first_cut.resize(n);
    for (Generator x = 0; x < n; ++x) {
      r.prepended[x] = braids_->next(q.prepended[x], s);
      if (x == s) {
        r.last_moved[x] = q.prepended[x];
      } else if (q.last_moved[x] != kNoScan && system_.commutes(x, s)) {
        r.last_moved[x] = braids_->next(q.last_moved[x], s);
      } else {
        r.last_moved[x] = kNoScan;
      }
      if (q.first_cut[x] == kUnseen) {
        if (x == s) {
          r.first_cut[x] = q.self;
        } else {
          r.first_cut[x] = system_.commutes(x, s) ? kUnseen : kNoScan;
        }
      } else if (q.first_cut[x] != kNoScan) {
        r.first_cut[x] = braids_->next(q.first_cut[x], s);
      } else {
        r.first_cut[x] = kNoScan;
      }
    }
    return r;
  }

  // Appends s to the chains of a pair containing s.
  void append_to_pair(const TrackedPair& p, PairRecord& rec, Generator s, std::vector<BraidTriple>& added) const {
    const Generator t = p.other(s);
    const bool may_join_ic = rec.b_add(p, s);
    const bool next = may_join_ic && rec.b_add(p, t);
    rec.b_add_first = next;
    rec.b_add_second = next;

    if (auto* sum = std::get_if<ChainSummary>(&rec.chains)) {
      if (sum->cc_last && sum->cc_last->gen == s) throw invariant_error("unbounded chain would repeat a letter");
      if (may_join_ic) {
        if (!sum->ic_first) sum->ic_first = s;
        sum->ic_size = grow(sum->ic_size);
      }
      sum->cc_last = ChainLetter{s, may_join_ic};
      return;
    }

    auto& exact = std::get<ExactChains>(rec.chains);
    if (!exact.cc.empty() && exact.cc.back().gen == s) {
      throw invariant_error("current chain of pair {" + std::to_string(p.first) + "," +
                            std::to_string(p.second) + "} would repeat " + std::to_string(s));
    }
    if (may_join_ic) exact.ic.push_back(s);
    exact.cc.push_back({s, may_join_ic});
    if (exact.cc.size() > p.m - 1 || exact.ic.size() > p.m - 1) {
      throw invariant_error("chain of pair {" + std::to_string(p.first) + "," + std::to_string(p.second) +
                            "} exceeds m-1 = " + std::to_string(p.m - 1));
    }
    if (exact.cc.size() == p.m - 1) {
      std::size_t underlined = 0;
      for (const auto& l : exact.cc) underlined += l.underlined ? 1 : 0;
      added.push_back({t, s, underlined > 0 && underlined == exact.ic.size()});
    }
  }

  static void clear_cc(PairRecord& rec) {
    if (auto* sum = std::get_if<ChainSummary>(&rec.chains)) {
      sum->cc_last.reset();
    } else {
      std::get<ExactChains>(rec.chains).cc.clear();
    }
  }

  // The read letter commutes with exactly one member of the pair; `blocked`
  // is the member it does not commute with.
  static void reset_mixed(const TrackedPair& p, PairRecord& rec, Generator blocked) {
    std::optional<ChainLetter> last;
    if (auto* sum = std::get_if<ChainSummary>(&rec.chains)) {
      last = sum->cc_last;
    } else if (const auto& cc = std::get<ExactChains>(rec.chains).cc; !cc.empty()) {
      last = cc.back();
    }
    if (!last || last->gen == blocked) {
      clear_cc(rec);
      rec.b_add(p, blocked) = false;
      return;
    }
    // Ends with the commuting member: only that letter survives.
    if (auto* sum = std::get_if<ChainSummary>(&rec.chains)) {
      sum->cc_last = last;
    } else {
      std::get<ExactChains>(rec.chains).cc = Chain{*last};
    }
    rec.b_add_first = false;
    rec.b_add_second = false;
  }

  // Cyclically the end of the word is followed by its beginning, so the last
  // letter of CC meets the first letter of IC. They must differ, unless CC's
  // last letter is the unique letter of IC itself.
  bool junction_ok(std::optional<ChainLetter> cc_last, std::optional<Generator> ic_first, SizeClass ic_size) const {
    if (!cc_last || !ic_first) return true;
    if (options_.finality == FinalityRule::linear) {
      return cc_last->underlined || cc_last->gen != *ic_first;
    }
    if (cc_last->underlined && ic_size == SizeClass::one) return true;
    return cc_last->gen != *ic_first;
  }

  CoxeterSystem system_;
  AutomatonOptions options_;
  std::vector<TrackedPair> pairs_;
  std::optional<BraidDetector> braids_;
};

inline AutomatonState initial_state(const CoxeterSystem& w) { return CfcRules(w).initial_state(); }

inline AutomatonState transition(const CoxeterSystem& w, const AutomatonState& q, Generator s) {
  return CfcRules(w).transition(q, s);
}

inline bool is_final(const CoxeterSystem& w, const AutomatonState& q) { return CfcRules(w).is_final(q); }

/// The built automaton together with the state behind each Dfa state id.
struct CfcAutomaton {
  Dfa dfa;
  std::vector<AutomatonState> states;
  StateId sink = 1;
};

/// Breadth-first closure from the initial state (id 0); the sink is id 1.
/// States are deduplicated by canonical encoding and numbered in discovery
/// order, so builds are reproducible.
inline CfcAutomaton build_automaton(const CoxeterSystem& w, AutomatonOptions options = {}) {
  const CfcRules rules(w, options);
  const std::size_t k = w.rank();

  std::vector<AutomatonState> states;
  std::unordered_map<std::string, StateId> ids;
  auto intern = [&](AutomatonState q) {
    auto [it, inserted] = ids.try_emplace(q.encode(), static_cast<StateId>(states.size()));
    if (inserted) {
      if (states.size() >= options.state_budget) {
        throw budget_error("automaton exceeds the state budget of " + std::to_string(options.state_budget));
      }
      states.push_back(std::move(q));
    }
    return it->second;
  };
  intern(rules.initial_state());
  intern(AutomatonState::sink());

  std::vector<StateId> delta;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (Generator s = 0; s < k; ++s) {
      // states may reallocate inside intern(); copy the source state first.
      auto next = rules.transition(AutomatonState(states[i]), s);
      delta.push_back(intern(std::move(next)));
    }
  }
  std::vector<bool> finals(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) finals[i] = rules.is_accepting(states[i]);
  Dfa dfa(k, states.size(), std::move(delta), 0, std::move(finals), StateId{1});
  return {std::move(dfa), std::move(states), StateId{1}};
}

inline Dfa build(const CoxeterSystem& w, AcceptMode mode, AutomatonOptions options = {}) {
  options.mode = mode;
  return build_automaton(w, options).dfa;
}

/// Debug dump of a state; underlined letters render as "_x".
inline nlohmann::json state_to_json(const CfcRules& rules, const AutomatonState& q) {
  const auto& w = rules.system();
  if (q.is_sink) return {{"sink", true}};
  auto letter = [&](const ChainLetter& l) { return (l.underlined ? "_" : "") + w.name(l.gen); };
  nlohmann::json e = nlohmann::json::array();
  for (Generator s = 0; s < w.rank(); ++s) {
    if (contains(q.exits, s)) e.push_back(w.name(s));
  }
  nlohmann::json eprime = nlohmann::json::array();
  for (const auto& t : q.braid_completions) {
    eprime.push_back({{"first", w.name(t.first)}, {"second", w.name(t.second)}, {"underlined", t.underlined}});
  }
  nlohmann::json pairs = nlohmann::json::array();
  for (std::size_t i = 0; i < rules.pairs().size(); ++i) {
    const auto& p = rules.pairs()[i];
    const auto& rec = q.pairs[i];
    nlohmann::json entry = {{"pair", {w.name(p.first), w.name(p.second)}},
                            {"b", {rec.b_add_first, rec.b_add_second}}};
    if (const auto* exact = std::get_if<ExactChains>(&rec.chains)) {
      nlohmann::json cc = nlohmann::json::array();
      for (const auto& l : exact->cc) cc.push_back(letter(l));
      nlohmann::json ic = nlohmann::json::array();
      for (Generator g : exact->ic) ic.push_back(w.name(g));
      entry["cc"] = std::move(cc);
      entry["ic"] = std::move(ic);
    } else {
      const auto& sum = std::get<ChainSummary>(rec.chains);
      static constexpr const char* kSize[] = {"0", "1", "2+"};
      entry["unbounded"] = true;
      entry["ic_first"] = sum.ic_first ? nlohmann::json(w.name(*sum.ic_first)) : nlohmann::json(nullptr);
      entry["ic_size"] = kSize[static_cast<int>(sum.ic_size)];
      entry["cc_last"] = sum.cc_last ? nlohmann::json(letter(*sum.cc_last)) : nlohmann::json(nullptr);
    }
    pairs.push_back(std::move(entry));
  }
  return {{"sink", false}, {"e", std::move(e)}, {"eprime", std::move(eprime)}, {"pairs", std::move(pairs)}};
}

}  // namespace cfc
