#pragma once

// Lexicographic normal forms of commutation classes.
//
// A word is the lexicographically least member of its commutation class iff
// no letter c can be commuted leftwards past a strictly larger letter that
// immediately precedes the block of letters c commutes with. The automaton
// tracks, for every generator a, the set T(a) of letters b occurring in the
// longest suffix made only of letters commuting with a.
//
// Only meaningful as a selector of reduced expressions for FC elements: the
// reduced expressions of an FC element form a single commutation class, so
// intersecting with a language of reduced FC words keeps exactly one word per
// element. It is NOT a ShortLex acceptor for arbitrary group elements.

#include <optional>
#include <unordered_map>
#include <vector>

#include "core.hpp"
#include "errors.hpp"
#include "fsa.hpp"

namespace cfc {

struct LexState {
  std::vector<GeneratorSet> t_sets;
  friend bool operator==(const LexState&, const LexState&) = default;
};

inline LexState lex_initial(const CoxeterSystem& w) { return LexState{std::vector<GeneratorSet>(w.rank(), 0)}; }

/// std::nullopt is the absorbing reject state.
inline std::optional<LexState> lex_transition(const CoxeterSystem& w, const LexState& q, Generator c) {
  // Any b > c in T(c) means c could commute left past b.
  const GeneratorSet larger = c + 1 >= 32 ? 0 : ~((GeneratorSet{1} << (c + 1)) - 1);
  if (q.t_sets[c] & larger) return std::nullopt;
  LexState r = q;
  for (Generator a = 0; a < w.rank(); ++a) {
    if (a == c) {
      r.t_sets[a] = 0;
    } else if (w.commutes(a, c)) {
      r.t_sets[a] |= singleton(c);
    } else {
      r.t_sets[a] = 0;
    }
  }
  return r;
}

/// Automaton recognizing the words that are lexicographically least in their
/// commutation class (over the whole free monoid).
inline Dfa build_lexnf(const CoxeterSystem& w, std::size_t state_budget = 10'000'000) {
  const std::size_t k = w.rank();
  std::vector<std::optional<LexState>> states;
  std::unordered_map<std::string, StateId> ids;
  auto key = [](const std::optional<LexState>& q) {
    if (!q) return std::string("R");
    std::string out("L");
    for (GeneratorSet s : q->t_sets) out.append(reinterpret_cast<const char*>(&s), sizeof s);
    return out;
  };
  auto intern = [&](std::optional<LexState> q) {
    auto [it, inserted] = ids.try_emplace(key(q), static_cast<StateId>(states.size()));
    if (inserted) {
      if (states.size() >= state_budget) {
        throw budget_error("lexnf automaton exceeds the state budget of " + std::to_string(state_budget));
      }
      states.push_back(std::move(q));
    }
    return it->second;
  };
  intern(lex_initial(w));
  std::vector<StateId> delta;
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (Generator c = 0; c < k; ++c) {
      std::optional<LexState> next;
      if (states[i]) next = lex_transition(w, *states[i], c);
      delta.push_back(intern(std::move(next)));
    }
  }
  std::vector<bool> finals(states.size());
  std::optional<StateId> reject;
  for (std::size_t i = 0; i < states.size(); ++i) {
    finals[i] = states[i].has_value();
    if (!states[i]) reject = static_cast<StateId>(i);
  }
  return Dfa(k, states.size(), std::move(delta), 0, std::move(finals), reject);
}

}  // namespace cfc
