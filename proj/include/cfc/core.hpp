#pragma once

// Coxeter systems, words and the elementary word operations shared by the
// automaton builders and the brute-force oracle.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "errors.hpp"

namespace cfc {

using Generator = unsigned;
using Word = std::vector<Generator>;

/// Bitset of generators; bit i set iff generator i is a member.
using GeneratorSet = std::uint32_t;

/// Coxeter matrix entry standing for m = infinity.
inline constexpr unsigned kInfinity = std::numeric_limits<unsigned>::max();

inline constexpr bool is_finite_label(unsigned m) { return m != kInfinity; }

inline constexpr GeneratorSet singleton(Generator s) { return GeneratorSet{1} << s; }
inline constexpr bool contains(GeneratorSet set, Generator s) { return (set >> s) & 1U; }

class CoxeterSystem {
 public:
  static constexpr std::size_t kDefaultMaxRank = 16;
  static constexpr std::size_t kHardMaxRank = 32;

  CoxeterSystem() = default;

  /// Validates the matrix: square, symmetric, unit diagonal, off-diagonal >= 2,
  /// 1 <= rank <= max_rank. Throws input_error otherwise. Empty `names`
  /// defaults to decimal indices.
  explicit CoxeterSystem(std::vector<std::vector<unsigned>> matrix,
                         std::vector<std::string> names = {},
                         std::size_t max_rank = kDefaultMaxRank)
      : matrix_(std::move(matrix)), names_(std::move(names)) {
    const std::size_t n = matrix_.size();
    if (max_rank > kHardMaxRank) {
      throw input_error("rank cap " + std::to_string(max_rank) + " exceeds the supported maximum " +
                        std::to_string(kHardMaxRank));
    }
    if (n == 0) throw input_error("a Coxeter system needs at least one generator");
    if (n > max_rank) {
      throw input_error("rank " + std::to_string(n) + " exceeds the configured maximum " +
                        std::to_string(max_rank));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (matrix_[i].size() != n) throw input_error("Coxeter matrix is not square");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (matrix_[i][i] != 1) {
        throw input_error("diagonal entry m[" + std::to_string(i) + "][" + std::to_string(i) +
                          "] must be 1");
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        if (matrix_[i][j] != matrix_[j][i]) {
          throw input_error("Coxeter matrix is not symmetric at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
        }
        if (matrix_[i][j] < 2) {
          throw input_error("off-diagonal entry m[" + std::to_string(i) + "][" + std::to_string(j) +
                            "] must be >= 2");
        }
      }
    }
    if (names_.empty()) {
      for (std::size_t i = 0; i < n; ++i) names_.push_back(std::to_string(i));
    }
    if (names_.size() != n) throw input_error("generator name count does not match the matrix");
    for (std::size_t i = 0; i < n; ++i) {
      if (names_[i].empty()) throw input_error("generator names must be non-empty");
      for (std::size_t j = 0; j < i; ++j) {
        if (names_[i] == names_[j]) throw input_error("duplicate generator name '" + names_[i] + "'");
      }
    }
  }

  std::size_t rank() const { return matrix_.size(); }
  unsigned m(Generator s, Generator t) const { return matrix_[s][t]; }
  const std::vector<std::vector<unsigned>>& matrix() const { return matrix_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Generator s) const { return names_[s]; }
  GeneratorSet all_generators() const {
    return rank() == 32 ? ~GeneratorSet{0} : (GeneratorSet{1} << rank()) - 1;
  }

  /// True iff m[s][t] = 2. Requires s != t.
  bool commutes(Generator s, Generator t) const {
    if (s == t) throw std::invalid_argument("commutes() requires two distinct generators");
    return matrix_[s][t] == 2;
  }

  /// Generators t != s with m[s][t] >= 3 (including infinity).
  GeneratorSet non_commuting(Generator s) const {
    GeneratorSet out = 0;
    for (Generator t = 0; t < rank(); ++t) {
      if (t != s && matrix_[s][t] != 2) out |= singleton(t);
    }
    return out;
  }

  friend bool operator==(const CoxeterSystem&, const CoxeterSystem&) = default;

 private:
  std::vector<std::vector<unsigned>> matrix_;
  std::vector<std::string> names_;
};

/// Unordered pair {first, second} with first < second and m >= 3.
struct TrackedPair {
  Generator first;
  Generator second;
  unsigned m;
  bool unbounded;

  Generator other(Generator s) const { return s == first ? second : first; }
  bool has(Generator s) const { return s == first || s == second; }
  friend bool operator==(const TrackedPair&, const TrackedPair&) = default;
};

/// All pairs s < t with m[s][t] >= 3, in lexicographic order; pairs with
/// m = infinity are flagged `unbounded`.
inline std::vector<TrackedPair> tracked_pairs(const CoxeterSystem& w) {
  std::vector<TrackedPair> out;
  for (Generator s = 0; s < w.rank(); ++s) {
    for (Generator t = s + 1; t < w.rank(); ++t) {
      const unsigned m = w.m(s, t);
      if (m >= 3) out.push_back({s, t, m, !is_finite_label(m)});
    }
  }
  return out;
}

/// All rotations of `w` in order 0, 1, ..., |w|-1; the empty word yields [ε].
inline std::vector<Word> cyclic_shifts(const Word& w) {
  if (w.empty()) return {Word{}};
  std::vector<Word> out;
  out.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    Word r(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
    r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Presets and the JSON system document.

namespace detail {

inline std::vector<std::vector<unsigned>> all_commuting(std::size_t n) {
  std::vector<std::vector<unsigned>> m(n, std::vector<unsigned>(n, 2));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline void set_edge(std::vector<std::vector<unsigned>>& m, std::size_t i, std::size_t j, unsigned label) {
  m[i][j] = label;
  m[j][i] = label;
}

inline std::size_t parse_count(std::string_view text, std::string_view preset) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw input_error("malformed preset '" + std::string(preset) + "'");
  }
  return value;
}

inline unsigned parse_label(const nlohmann::json& entry) {
  if (entry.is_string()) {
    const auto& s = entry.get_ref<const std::string&>();
    if (s == "inf" || s == "infinity") return kInfinity;
    throw input_error("matrix entry '" + s + "' is not a number or \"inf\"");
  }
  if (entry.is_number_integer()) {
    const auto v = entry.get<long long>();
    if (v < 1 || v >= static_cast<long long>(kInfinity)) {
      throw input_error("matrix entry " + std::to_string(v) + " is out of range");
    }
    return static_cast<unsigned>(v);
  }
  throw input_error("matrix entries must be integers or \"inf\"");
}

}  // namespace detail

/// Builds a preset: A<k>, B<k>, D<k>, I2:<m>, I2:inf, tA<k> (k >= 2), tA1.
inline CoxeterSystem preset_system(std::string_view name, std::size_t max_rank = CoxeterSystem::kDefaultMaxRank) {
  using detail::parse_count;
  using detail::set_edge;
  auto bad = [&](const std::string& why) { return input_error("preset '" + std::string(name) + "': " + why); };

  if (name.starts_with("I2:")) {
    const auto label = name.substr(3);
    unsigned m = kInfinity;
    if (label != "inf") {
      const auto v = parse_count(label, name);
      if (v < 3) throw bad("dihedral label must be >= 3 or inf");
      if (v >= kInfinity) throw bad("dihedral label out of range");
      m = static_cast<unsigned>(v);
    }
    auto mat = detail::all_commuting(2);
    set_edge(mat, 0, 1, m);
    return CoxeterSystem(std::move(mat), {}, max_rank);
  }
  if (name.starts_with("tA")) {
    const auto k = parse_count(name.substr(2), name);
    if (k == 0) throw bad("rank must be >= 1");
    if (k == 1) {
      auto mat = detail::all_commuting(2);
      set_edge(mat, 0, 1, kInfinity);
      return CoxeterSystem(std::move(mat), {}, max_rank);
    }
    if (k + 1 > max_rank) throw bad("rank exceeds the configured maximum");
    auto mat = detail::all_commuting(k + 1);
    for (std::size_t i = 0; i <= k; ++i) set_edge(mat, i, (i + 1) % (k + 1), 3);
    return CoxeterSystem(std::move(mat), {}, max_rank);
  }
  if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'B' || name[0] == 'D')) {
    const auto k = parse_count(name.substr(1), name);
    if (k > max_rank) throw bad("rank exceeds the configured maximum");
    auto mat = detail::all_commuting(k);
    switch (name[0]) {
      case 'A':
        if (k < 1) throw bad("rank must be >= 1");
        for (std::size_t i = 0; i + 1 < k; ++i) set_edge(mat, i, i + 1, 3);
        break;
      case 'B':
        if (k < 2) throw bad("rank must be >= 2");
        for (std::size_t i = 0; i + 1 < k; ++i) set_edge(mat, i, i + 1, 3);
        set_edge(mat, k - 2, k - 1, 4);
        break;
      default:
        // Path 0 - 1 - ... - (k-2) with k-1 attached to k-3.
        if (k < 4) throw bad("rank must be >= 4");
        for (std::size_t i = 0; i + 2 < k; ++i) set_edge(mat, i, i + 1, 3);
        set_edge(mat, k - 3, k - 1, 3);
        break;
    }
    return CoxeterSystem(std::move(mat), {}, max_rank);
  }
  throw bad("unknown preset");
}

/// Parses the JSON system document {"generators": [...], "matrix": [[...]]}.
inline CoxeterSystem system_from_json(const nlohmann::json& doc,
                                      std::size_t max_rank = CoxeterSystem::kDefaultMaxRank) {
  if (!doc.is_object() || !doc.contains("matrix")) {
    throw input_error("system document must be an object with a \"matrix\" field");
  }
  const auto& rows = doc.at("matrix");
  if (!rows.is_array()) throw input_error("\"matrix\" must be an array of rows");
  std::vector<std::vector<unsigned>> mat;
  for (const auto& row : rows) {
    if (!row.is_array()) throw input_error("matrix rows must be arrays");
    std::vector<unsigned> r;
    for (const auto& e : row) r.push_back(detail::parse_label(e));
    mat.push_back(std::move(r));
  }
  std::vector<std::string> names;
  if (doc.contains("generators")) {
    const auto& gens = doc.at("generators");
    if (!gens.is_array()) throw input_error("\"generators\" must be an array of strings");
    for (const auto& g : gens) {
      if (!g.is_string()) throw input_error("generator names must be strings");
      names.push_back(g.get<std::string>());
    }
  }
  return CoxeterSystem(std::move(mat), std::move(names), max_rank);
}

inline nlohmann::json to_json(const CoxeterSystem& w) {
  nlohmann::json matrix = nlohmann::json::array();
  for (const auto& row : w.matrix()) {
    nlohmann::json r = nlohmann::json::array();
    for (unsigned m : row) {
      if (is_finite_label(m)) {
        r.push_back(m);
      } else {
        r.push_back("inf");
      }
    }
    matrix.push_back(std::move(r));
  }
  return {{"generators", w.names()}, {"matrix", std::move(matrix)}};
}

inline std::string serialize(const CoxeterSystem& w) { return to_json(w).dump(); }

/// Accepts a preset name or a JSON system document.
inline CoxeterSystem parse_system(std::string_view text,
                                  std::size_t max_rank = CoxeterSystem::kDefaultMaxRank) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw input_error("empty system description");
  if (text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw input_error(std::string("malformed system document: ") + e.what());
    }
    return system_from_json(doc, max_rank);
  }
  auto end = text.find_last_not_of(" \t\r\n");
  return preset_system(text.substr(first, end - first + 1), max_rank);
}

// ---------------------------------------------------------------------------
// Word rendering.

/// Concatenates generator names; names longer than one character are
/// separated by spaces.
inline std::string format_word(const CoxeterSystem& w, const Word& word) {
  const bool compact = std::all_of(w.names().begin(), w.names().end(),
                                   [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += w.name(word[i]);
  }
  return out;
}

/// Inverse of format_word for single-character names; otherwise expects
/// whitespace-separated names.
inline Word parse_word(const CoxeterSystem& w, std::string_view text) {
  auto lookup = [&](std::string_view token) -> Generator {
    for (Generator s = 0; s < w.rank(); ++s) {
      if (w.name(s) == token) return s;
    }
    throw input_error("unknown generator '" + std::string(token) + "'");
  };
  Word out;
  if (text.find(' ') == std::string_view::npos) {
    for (char c : text) out.push_back(lookup(std::string_view(&c, 1)));
    return out;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto start = text.find_first_not_of(' ', pos);
    if (start == std::string_view::npos) break;
    const auto stop = text.find(' ', start);
    out.push_back(lookup(text.substr(start, stop == std::string_view::npos ? std::string_view::npos : stop - start)));
    pos = stop == std::string_view::npos ? text.size() : stop;
  }
  return out;
}

}  // namespace cfc
