#pragma once

// Text formats shared by the CLI and the golden tests.  Integers and
// rationals only; rationals are written "p/q" in lowest terms (plain "p"
// when integral) and parsed back exactly.

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jumpnum/rational.hpp"

namespace jumpnum {

namespace detail {

inline std::string strip(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace detail

inline Int parse_integer(std::string_view s) {
  std::string t = detail::strip(s);
  if (t.empty()) fail(errc::parse_error, "empty integer");
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  if (i == t.size()) fail(errc::parse_error, "bad integer '" + t + "'");
  for (; i < t.size(); ++i)
    if (t[i] < '0' || t[i] > '9') fail(errc::parse_error, "bad integer '" + t + "'");
  return Int(t);
}

inline Rat parse_rational(std::string_view s) {
  std::string t = detail::strip(s);
  auto slash = t.find('/');
  if (slash == std::string::npos) return Rat(parse_integer(t));
  Int num = parse_integer(t.substr(0, slash));
  Int den = parse_integer(t.substr(slash + 1));
  if (den <= 0) fail(errc::parse_error, "denominator must be positive in '" + t + "'");
  return Rat(num, den);
}

inline IntVec parse_integer_list(std::string_view s) {
  IntVec out;
  for (const std::string& part : detail::split(s, ',')) out.push_back(parse_integer(part));
  return out;
}

inline std::vector<Rat> parse_rational_list(std::string_view s) {
  std::vector<Rat> out;
  for (const std::string& part : detail::split(s, ',')) out.push_back(parse_rational(part));
  return out;
}

// "m:n;m:n" pairs
inline std::vector<std::pair<Int, Int>> parse_pair_list(std::string_view s) {
  std::vector<std::pair<Int, Int>> out;
  for (const std::string& part : detail::split(s, ';')) {
    auto colon = part.find(':');
    if (colon == std::string::npos) fail(errc::parse_error, "expected 'm:n' in '" + part + "'");
    out.emplace_back(parse_integer(part.substr(0, colon)), parse_integer(part.substr(colon + 1)));
  }
  return out;
}

// one value per line, '#' starts a comment
inline std::vector<Rat> read_rationals_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  std::vector<Rat> out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string t = detail::strip(line);
    if (!t.empty()) out.push_back(parse_rational(t));
  }
  return out;
}

inline std::string join_rationals(const std::vector<Rat>& vs, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += sep;
    out += to_string(vs[i]);
  }
  return out;
}

inline std::string join_integers(const IntVec& vs, const std::string& sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += sep;
    out += vs[i].str();
  }
  return out;
}

}  // namespace jumpnum
