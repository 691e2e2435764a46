#pragma once

// Exact length generating functions of regular languages: per-length counts
// by transfer-matrix iteration, minimal recurrence by Berlekamp-Massey over
// the rationals, and the normalized rational function num(x)/den(x).

#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "errors.hpp"
#include "fsa.hpp"

namespace cfc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct CountSeries {
  std::vector<BigInt> coeffs;  ///< coeffs[k] = number of accepted words of length k
  friend bool operator==(const CountSeries&, const CountSeries&) = default;
};

/// Linear recurrence in Berlekamp-Massey form: for every k >= length,
///   sum_{i=0..deg} connection[i] * s[k-i] = 0,  connection[0] = 1.
/// `length` may exceed deg(connection); the excess is absorbed by the
/// numerator of the generating function.
struct LinearRecurrence {
  std::size_t length = 0;
  std::vector<Rational> connection{Rational(1)};
};

struct RationalGF {
  std::vector<BigInt> num;
  std::vector<BigInt> den;
  friend bool operator==(const RationalGF&, const RationalGF&) = default;
};

/// Iterates the state-occupancy vector n_max times.
inline CountSeries count_by_length(const Dfa& a, std::size_t n_max) {
  std::vector<BigInt> occupancy(a.num_states());
  occupancy[a.initial()] = 1;
  CountSeries out;
  out.coeffs.reserve(n_max + 1);
  std::vector<BigInt> next(a.num_states());
  for (std::size_t k = 0; k <= n_max; ++k) {
    BigInt accepted = 0;
    for (StateId q = 0; q < a.num_states(); ++q) {
      if (a.is_final(q)) accepted += occupancy[q];
    }
    out.coeffs.push_back(std::move(accepted));
    if (k == n_max) break;
    for (auto& v : next) v = 0;
    for (StateId q = 0; q < a.num_states(); ++q) {
      if (occupancy[q] == 0) continue;
      for (Generator c = 0; c < a.alphabet_size(); ++c) next[a.next(q, c)] += occupancy[q];
    }
    occupancy.swap(next);
  }
  return out;
}

/// Berlekamp-Massey over Q. Returns the shortest recurrence generating the
/// whole prefix.
inline LinearRecurrence find_recurrence(const CountSeries& s) {
  const auto& seq = s.coeffs;
  std::vector<Rational> c{Rational(1)};
  std::vector<Rational> b{Rational(1)};
  std::size_t length = 0;
  std::size_t shift = 1;
  Rational last_discrepancy = 1;

  for (std::size_t n = 0; n < seq.size(); ++n) {
    Rational d = 0;
    for (std::size_t i = 0; i < c.size() && i <= n; ++i) d += c[i] * Rational(seq[n - i]);
    if (d == 0) {
      ++shift;
      continue;
    }
    const Rational coef = d / last_discrepancy;
    auto previous = c;
    if (c.size() < b.size() + shift) c.resize(b.size() + shift, Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) c[i + shift] -= coef * b[i];
    if (2 * length <= n) {
      length = n + 1 - length;
      b = std::move(previous);
      last_discrepancy = d;
      shift = 1;
    } else {
      ++shift;
    }
  }
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  return {length, std::move(c)};
}

namespace detail {

inline BigInt lcm_of_denominators(const std::vector<Rational>& v) {
  BigInt l = 1;
  for (const auto& r : v) {
    const BigInt d = boost::multiprecision::denominator(r);
    l = l / boost::multiprecision::gcd(l, d) * d;
  }
  return l;
}

inline void trim_trailing_zeros(std::vector<BigInt>& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

}  // namespace detail

/// Power-series expansion of num/den to `terms` coefficients. den[0] must be 1.
inline std::vector<BigInt> expand(const RationalGF& f, std::size_t terms) {
  if (f.den.empty() || f.den[0] != 1) throw invariant_error("expand: denominator must start with 1");
  std::vector<BigInt> out(terms);
  for (std::size_t k = 0; k < terms; ++k) {
    BigInt v = k < f.num.size() ? f.num[k] : BigInt(0);
    for (std::size_t i = 1; i < f.den.size() && i <= k; ++i) v -= f.den[i] * out[k - i];
    out[k] = std::move(v);
  }
  return out;
}

/// den = connection polynomial, num = (den · s) truncated below degree
/// `length`; both cleared of denominators, divided by their joint content and
/// stripped of trailing zeros. Re-expansion must reproduce every coefficient
/// of `s`, otherwise invariant_error.
inline RationalGF to_rational(const CountSeries& s, const LinearRecurrence& rec) {
  std::vector<Rational> num(rec.length, Rational(0));
  for (std::size_t k = 0; k < rec.length; ++k) {
    for (std::size_t i = 0; i < rec.connection.size() && i <= k; ++i) {
      if (k - i < s.coeffs.size()) num[k] += rec.connection[i] * Rational(s.coeffs[k - i]);
    }
  }
  std::vector<Rational> all = num;
  all.insert(all.end(), rec.connection.begin(), rec.connection.end());
  const BigInt scale = detail::lcm_of_denominators(all);

  RationalGF out;
  BigInt content = 0;
  auto to_int = [&](const Rational& r) {
    const BigInt v = boost::multiprecision::numerator(r) * (scale / boost::multiprecision::denominator(r));
    content = boost::multiprecision::gcd(content, v);
    return v;
  };
  for (const auto& r : num) out.num.push_back(to_int(r));
  for (const auto& r : rec.connection) out.den.push_back(to_int(r));
  if (content != 0 && content != 1) {
    for (auto& v : out.num) v /= content;
    for (auto& v : out.den) v /= content;
  }
  if (out.den[0] < 0) {
    for (auto& v : out.num) v = -v;
    for (auto& v : out.den) v = -v;
  }
  if (out.num.empty()) out.num.push_back(0);
  detail::trim_trailing_zeros(out.num);
  detail::trim_trailing_zeros(out.den);
  if (out.den[0] != 1) throw invariant_error("rational generating function: den[0] != 1 after normalization");

  const auto check = expand(out, s.coeffs.size());
  if (check != s.coeffs) throw invariant_error("rational generating function does not re-expand to the series");
  return out;
}

inline RationalGF to_rational(const CountSeries& s) { return to_rational(s, find_recurrence(s)); }

/// Human-readable polynomial such as "1 + 2x - x^3".
inline std::string format_polynomial(const std::vector<BigInt>& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    BigInt mag = p[i] < 0 ? BigInt(-p[i]) : p[i];
    if (out.empty()) {
      if (p[i] < 0) out += "-";
    } else {
      out += p[i] < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

inline std::string format_rational(const RationalGF& f) {
  const bool poly_den = f.den.size() == 1 && f.den[0] == 1;
  if (poly_den) return format_polynomial(f.num);
  return "(" + format_polynomial(f.num) + ")/(" + format_polynomial(f.den) + ")";
}

inline nlohmann::json big_array(const std::vector<BigInt>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

/// {"coeffs": [...], "num": [...], "den": [...]}, big integers as decimal strings.
inline nlohmann::json series_json(const CountSeries& s, const RationalGF* f = nullptr) {
  nlohmann::json doc = {{"coeffs", big_array(s.coeffs)}};
  if (f) {
    doc["num"] = big_array(f->num);
    doc["den"] = big_array(f->den);
  }
  return doc;
}

}  // namespace cfc
