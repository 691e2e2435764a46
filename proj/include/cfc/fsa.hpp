#pragma once

// Complete deterministic finite automata over the alphabet {0, ..., k-1}.

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "core.hpp"
#include "errors.hpp"

namespace cfc {

using StateId = std::uint32_t;

/// A complete DFA. The transition table is stored row-major:
/// next(q, a) = delta[q * alphabet_size + a].
class Dfa {
 public:
  Dfa() = default;

  Dfa(std::size_t alphabet_size, std::size_t num_states, std::vector<StateId> delta, StateId initial,
      std::vector<bool> finals, std::optional<StateId> dead = std::nullopt)
      : alphabet_size_(alphabet_size),
        num_states_(num_states),
        delta_(std::move(delta)),
        initial_(initial),
        finals_(std::move(finals)),
        dead_(dead) {
    if (alphabet_size_ == 0) throw invariant_error("Dfa: empty alphabet");
    if (num_states_ == 0) throw invariant_error("Dfa: no states");
    if (delta_.size() != num_states_ * alphabet_size_) throw invariant_error("Dfa: transition table is not total");
    for (StateId q : delta_) {
      if (q >= num_states_) throw invariant_error("Dfa: transition target out of range");
    }
    if (initial_ >= num_states_) throw invariant_error("Dfa: initial state out of range");
    if (finals_.size() != num_states_) throw invariant_error("Dfa: final-state mask has the wrong size");
    if (dead_ && *dead_ >= num_states_) throw invariant_error("Dfa: dead state out of range");
  }

  std::size_t alphabet_size() const { return alphabet_size_; }
  std::size_t num_states() const { return num_states_; }
  StateId initial() const { return initial_; }
  StateId next(StateId q, Generator a) const { return delta_[q * alphabet_size_ + a]; }
  bool is_final(StateId q) const { return finals_[q]; }
  const std::vector<StateId>& delta() const { return delta_; }
  const std::vector<bool>& finals() const { return finals_; }
  std::optional<StateId> dead_state() const { return dead_; }

  std::size_t num_finals() const {
    std::size_t c = 0;
    for (bool f : finals_) c += f ? 1 : 0;
    return c;
  }

  /// True iff q is non-final and every letter loops on q.
  bool is_dead(StateId q) const {
    if (finals_[q]) return false;
    for (Generator a = 0; a < alphabet_size_; ++a) {
      if (next(q, a) != q) return false;
    }
    return true;
  }

  /// The designated dead state, or the first state that behaves as one.
  std::optional<StateId> find_dead_state() const {
    if (dead_) return dead_;
    for (StateId q = 0; q < num_states_; ++q) {
      if (is_dead(q)) return q;
    }
    return std::nullopt;
  }

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  std::size_t alphabet_size_ = 0;
  std::size_t num_states_ = 0;
  std::vector<StateId> delta_;
  StateId initial_ = 0;
  std::vector<bool> finals_;
  std::optional<StateId> dead_;
};

/// Automaton accepting every word over an alphabet of `alphabet_size` letters.
inline Dfa universal_dfa(std::size_t alphabet_size) {
  return Dfa(alphabet_size, 1, std::vector<StateId>(alphabet_size, 0), 0, {true});
}

/// Automaton accepting nothing.
inline Dfa empty_dfa(std::size_t alphabet_size) {
  return Dfa(alphabet_size, 1, std::vector<StateId>(alphabet_size, 0), 0, {false}, StateId{0});
}

inline bool accepts(const Dfa& a, const Word& w) {
  StateId q = a.initial();
  for (Generator s : w) {
    if (s >= a.alphabet_size()) throw input_error("letter " + std::to_string(s) + " is outside the alphabet");
    q = a.next(q, s);
  }
  return a.is_final(q);
}

inline Dfa complement(const Dfa& a) {
  std::vector<bool> finals(a.num_states());
  for (StateId q = 0; q < a.num_states(); ++q) finals[q] = !a.is_final(q);
  return Dfa(a.alphabet_size(), a.num_states(), a.delta(), a.initial(), std::move(finals));
}

/// Accessible product automaton recognizing L(a) ∩ L(b). States are numbered
/// in breadth-first discovery order from (initial, initial).
inline Dfa intersect(const Dfa& a, const Dfa& b) {
  if (a.alphabet_size() != b.alphabet_size()) throw input_error("intersect: alphabet sizes differ");
  const std::size_t k = a.alphabet_size();
  auto key = [&](StateId p, StateId q) { return static_cast<std::uint64_t>(p) * b.num_states() + q; };

  std::unordered_map<std::uint64_t, StateId> ids;
  std::vector<std::pair<StateId, StateId>> states;
  std::vector<StateId> delta;
  auto intern = [&](StateId p, StateId q) {
    auto [it, inserted] = ids.try_emplace(key(p, q), static_cast<StateId>(states.size()));
    if (inserted) states.emplace_back(p, q);
    return it->second;
  };
  intern(a.initial(), b.initial());
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto [p, q] = states[i];
    for (Generator c = 0; c < k; ++c) delta.push_back(intern(a.next(p, c), b.next(q, c)));
  }
  std::vector<bool> finals(states.size());
  std::optional<StateId> dead;
  for (std::size_t i = 0; i < states.size(); ++i) {
    finals[i] = a.is_final(states[i].first) && b.is_final(states[i].second);
    const bool dead_pair = (a.dead_state() && states[i].first == *a.dead_state()) ||
                           (b.dead_state() && states[i].second == *b.dead_state());
    if (dead_pair && !dead) dead = static_cast<StateId>(i);
  }
  return Dfa(k, states.size(), std::move(delta), 0, std::move(finals), dead);
}

namespace detail {

inline std::vector<bool> reachable(const Dfa& a) {
  std::vector<bool> seen(a.num_states(), false);
  std::vector<StateId> stack{a.initial()};
  seen[a.initial()] = true;
  while (!stack.empty()) {
    const StateId q = stack.back();
    stack.pop_back();
    for (Generator c = 0; c < a.alphabet_size(); ++c) {
      const StateId r = a.next(q, c);
      if (!seen[r]) {
        seen[r] = true;
        stack.push_back(r);
      }
    }
  }
  return seen;
}

inline std::vector<bool> coreachable(const Dfa& a) {
  std::vector<std::vector<StateId>> preds(a.num_states());
  for (StateId q = 0; q < a.num_states(); ++q) {
    for (Generator c = 0; c < a.alphabet_size(); ++c) preds[a.next(q, c)].push_back(q);
  }
  std::vector<bool> seen(a.num_states(), false);
  std::vector<StateId> stack;
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (a.is_final(q)) {
      seen[q] = true;
      stack.push_back(q);
    }
  }
  while (!stack.empty()) {
    const StateId q = stack.back();
    stack.pop_back();
    for (StateId p : preds[q]) {
      if (!seen[p]) {
        seen[p] = true;
        stack.push_back(p);
      }
    }
  }
  return seen;
}

}  // namespace detail

inline bool is_empty(const Dfa& a) {
  const auto seen = detail::reachable(a);
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (seen[q] && a.is_final(q)) return false;
  }
  return true;
}

/// L(a) ⊆ L(b), decided by emptiness of a ∩ complement(b).
inline bool is_subset(const Dfa& a, const Dfa& b) {
  if (a.alphabet_size() != b.alphabet_size()) throw input_error("is_subset: alphabet sizes differ");
  return is_empty(intersect(a, complement(b)));
}

/// Keeps the states that are reachable and co-reachable, then re-completes
/// with a single dead state (placed last). Useful states are renumbered in
/// breadth-first order from the initial state.
inline Dfa trim(const Dfa& a) {
  const auto reach = detail::reachable(a);
  const auto coreach = detail::coreachable(a);
  auto useful = [&](StateId q) { return reach[q] && coreach[q]; };
  const std::size_t k = a.alphabet_size();
  if (!useful(a.initial())) return empty_dfa(k);

  constexpr StateId kUnset = ~StateId{0};
  std::vector<StateId> renum(a.num_states(), kUnset);
  std::vector<StateId> order{a.initial()};
  renum[a.initial()] = 0;
  bool needs_dead = false;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Generator c = 0; c < k; ++c) {
      const StateId r = a.next(order[i], c);
      if (!useful(r)) {
        needs_dead = true;
      } else if (renum[r] == kUnset) {
        renum[r] = static_cast<StateId>(order.size());
        order.push_back(r);
      }
    }
  }
  const std::size_t n = order.size() + (needs_dead ? 1 : 0);
  const auto dead = static_cast<StateId>(order.size());
  std::vector<StateId> delta;
  delta.reserve(n * k);
  std::vector<bool> finals(n, false);
  for (std::size_t i = 0; i < order.size(); ++i) {
    finals[i] = a.is_final(order[i]);
    for (Generator c = 0; c < k; ++c) {
      const StateId r = a.next(order[i], c);
      delta.push_back(useful(r) ? renum[r] : dead);
    }
  }
  if (needs_dead) {
    for (Generator c = 0; c < k; ++c) delta.push_back(dead);
    return Dfa(k, n, std::move(delta), 0, std::move(finals), dead);
  }
  return Dfa(k, n, std::move(delta), 0, std::move(finals));
}

/// Hopcroft partition refinement on the accessible part of `a`. The result is
/// the minimal complete DFA for L(a); classes are numbered in breadth-first
/// discovery order from the initial class.
inline Dfa minimize(const Dfa& a) {
  const std::size_t k = a.alphabet_size();
  const auto reach = detail::reachable(a);

  std::vector<StateId> live;
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (reach[q]) live.push_back(q);
  }

  // Inverse transitions restricted to accessible states.
  std::vector<std::vector<std::vector<StateId>>> inverse(k, std::vector<std::vector<StateId>>(a.num_states()));
  for (StateId q : live) {
    for (Generator c = 0; c < k; ++c) inverse[c][a.next(q, c)].push_back(q);
  }

  // Partition stored as blocks of states; block_of maps a state to its block.
  constexpr std::size_t kNone = ~std::size_t{0};
  std::vector<std::vector<StateId>> blocks;
  std::vector<std::size_t> block_of(a.num_states(), kNone);
  {
    std::vector<StateId> fin;
    std::vector<StateId> non;
    for (StateId q : live) (a.is_final(q) ? fin : non).push_back(q);
    for (auto* part : {&fin, &non}) {
      if (part->empty()) continue;
      for (StateId q : *part) block_of[q] = blocks.size();
      blocks.push_back(std::move(*part));
    }
  }

  std::deque<std::pair<std::size_t, Generator>> work;
  std::vector<std::vector<bool>> queued(blocks.size(), std::vector<bool>(k, false));
  auto enqueue = [&](std::size_t b, Generator c) {
    if (queued.size() <= b) queued.resize(b + 1, std::vector<bool>(k, false));
    if (!queued[b][c]) {
      queued[b][c] = true;
      work.emplace_back(b, c);
    }
  };
  if (blocks.size() == 2) {
    const std::size_t smaller = blocks[0].size() <= blocks[1].size() ? 0 : 1;
    for (Generator c = 0; c < k; ++c) enqueue(smaller, c);
  }

  std::vector<std::size_t> hits(blocks.size(), 0);
  std::vector<bool> marked(a.num_states(), false);
  while (!work.empty()) {
    const auto [splitter, c] = work.front();
    work.pop_front();
    queued[splitter][c] = false;

    // States with a c-transition into the splitter block.
    std::vector<StateId> preimage;
    for (StateId r : blocks[splitter]) {
      for (StateId p : inverse[c][r]) {
        if (!marked[p]) {
          marked[p] = true;
          preimage.push_back(p);
        }
      }
    }
    std::vector<std::size_t> touched;
    hits.resize(blocks.size(), 0);
    for (StateId p : preimage) {
      if (hits[block_of[p]]++ == 0) touched.push_back(block_of[p]);
    }
    for (std::size_t b : touched) {
      if (hits[b] == blocks[b].size()) {
        hits[b] = 0;
        continue;
      }
      std::vector<StateId> inside;
      std::vector<StateId> outside;
      for (StateId q : blocks[b]) (marked[q] ? inside : outside).push_back(q);
      hits[b] = 0;
      const std::size_t fresh = blocks.size();
      blocks[b] = std::move(outside);
      blocks.push_back(std::move(inside));
      for (StateId q : blocks[fresh]) block_of[q] = fresh;
      hits.push_back(0);
      for (Generator d = 0; d < k; ++d) {
        if (queued.size() > b && queued[b][d]) {
          enqueue(fresh, d);
        } else {
          enqueue(blocks[b].size() <= blocks[fresh].size() ? b : fresh, d);
        }
      }
    }
    for (StateId p : preimage) marked[p] = false;
  }

  // Renumber blocks by breadth-first discovery from the initial block.
  std::vector<StateId> renum(blocks.size(), ~StateId{0});
  std::vector<std::size_t> order{block_of[a.initial()]};
  renum[order[0]] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const StateId rep = blocks[order[i]].front();
    for (Generator c = 0; c < k; ++c) {
      const std::size_t nb = block_of[a.next(rep, c)];
      if (renum[nb] == ~StateId{0}) {
        renum[nb] = static_cast<StateId>(order.size());
        order.push_back(nb);
      }
    }
  }
  std::vector<StateId> delta;
  delta.reserve(order.size() * k);
  std::vector<bool> finals(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const StateId rep = blocks[order[i]].front();
    finals[i] = a.is_final(rep);
    for (Generator c = 0; c < k; ++c) delta.push_back(renum[block_of[a.next(rep, c)]]);
  }
  Dfa out(k, order.size(), std::move(delta), 0, std::move(finals));
  std::optional<StateId> dead;
  for (StateId q = 0; q < out.num_states(); ++q) {
    if (out.is_dead(q)) {
      dead = q;
      break;
    }
  }
  if (!dead) return out;
  return Dfa(k, out.num_states(), out.delta(), 0, out.finals(), dead);
}

/// GraphViz rendering. Final states are double circles and the initial state
/// has an entering arrow. The dead state and edges into it are omitted
/// unless `keep_sink` is set.
inline std::string to_dot(const Dfa& a, const std::vector<std::string>& labels, bool keep_sink = false) {
  auto label = [&](Generator c) { return c < labels.size() ? labels[c] : std::to_string(c); };
  const auto dead = keep_sink ? std::nullopt : a.find_dead_state();
  auto shown = [&](StateId q) { return !dead || q != *dead || q == a.initial(); };

  std::ostringstream out;
  out << "digraph dfa {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  out << "  __start [shape=point];\n";
  out << "  __start -> " << a.initial() << ";\n";
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (!shown(q)) continue;
    out << "  " << q << " [shape=" << (a.is_final(q) ? "doublecircle" : "circle") << "];\n";
  }
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (!shown(q)) continue;
    std::map<StateId, std::string> edges;
    for (Generator c = 0; c < a.alphabet_size(); ++c) {
      const StateId r = a.next(q, c);
      if (!shown(r)) continue;
      auto& text = edges[r];
      if (!text.empty()) text += ",";
      text += label(c);
    }
    for (const auto& [r, text] : edges) out << "  " << q << " -> " << r << " [label=\"" << text << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

inline nlohmann::json to_json(const Dfa& a) {
  nlohmann::json delta = nlohmann::json::array();
  for (StateId q = 0; q < a.num_states(); ++q) {
    nlohmann::json row = nlohmann::json::array();
    for (Generator c = 0; c < a.alphabet_size(); ++c) row.push_back(a.next(q, c));
    delta.push_back(std::move(row));
  }
  nlohmann::json finals = nlohmann::json::array();
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (a.is_final(q)) finals.push_back(q);
  }
  nlohmann::json doc = {{"alphabet_size", a.alphabet_size()},
                        {"num_states", a.num_states()},
                        {"initial", a.initial()},
                        {"finals", std::move(finals)},
                        {"delta", std::move(delta)}};
  doc["dead"] = a.dead_state() ? nlohmann::json(*a.dead_state()) : nlohmann::json(nullptr);
  return doc;
}

inline Dfa dfa_from_json(const nlohmann::json& doc) {
  try {
    const auto k = doc.at("alphabet_size").get<std::size_t>();
    const auto& rows = doc.at("delta");
    std::vector<StateId> delta;
    for (const auto& row : rows) {
      if (row.size() != k) throw input_error("automaton JSON: row width differs from the alphabet size");
      for (const auto& e : row) delta.push_back(e.get<StateId>());
    }
    std::vector<bool> finals(rows.size(), false);
    for (const auto& f : doc.at("finals")) {
      const auto q = f.get<StateId>();
      if (q >= finals.size()) throw input_error("automaton JSON: final state out of range");
      finals[q] = true;
    }
    std::optional<StateId> dead;
    if (doc.contains("dead") && !doc.at("dead").is_null()) dead = doc.at("dead").get<StateId>();
    return Dfa(k, rows.size(), std::move(delta), doc.at("initial").get<StateId>(), std::move(finals), dead);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("automaton JSON: ") + e.what());
  } catch (const invariant_error& e) {
    throw input_error(std::string("automaton JSON: ") + e.what());
  }
}

/// Accepted words of length exactly `length`, in lexicographic order.
inline std::vector<Word> accepted_words(const Dfa& a, std::size_t length) {
  const auto coreach = detail::coreachable(a);
  std::vector<Word> out;
  Word w;
  auto rec = [&](auto&& self, StateId q) -> void {
    if (w.size() == length) {
      if (a.is_final(q)) out.push_back(w);
      return;
    }
    for (Generator c = 0; c < a.alphabet_size(); ++c) {
      const StateId r = a.next(q, c);
      if (!coreach[r]) continue;
      w.push_back(c);
      self(self, r);
      w.pop_back();
    }
  };
  if (coreach[a.initial()]) rec(rec, a.initial());
  return out;
}

}  // namespace cfc
