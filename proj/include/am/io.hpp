#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "am/core.hpp"

namespace am {

namespace detail {

inline std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

}  // namespace detail

// One occurrence per line: whitespace-separated variable tokens, final token
// is the outcome. '#' starts a comment, blank lines are skipped. Structural
// problems (arity drift etc.) are left for validate() to report.
inline Dataset parse_dataset(std::istream& in) {
  Dataset dataset;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::vector<std::string> tokens = detail::split_tokens(line);
    if (tokens.empty()) continue;
    Occurrence occ;
    occ.outcome = tokens.back();
    tokens.pop_back();
    occ.vars = std::move(tokens);
    if (dataset.occurrences.empty()) dataset.arity = static_cast<int>(occ.vars.size());
    dataset.occurrences.push_back(std::move(occ));
  }
  return dataset;
}

inline Dataset parse_dataset_string(const std::string& text) {
  std::istringstream in(text);
  return parse_dataset(in);
}

inline Dataset load_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read dataset file '" + path + "'");
  return parse_dataset(in);
}

// Whitespace-separated variable tokens, e.g. "3 1 2".
inline GivenContext parse_given(const std::string& text) {
  GivenContext given;
  given.vars = detail::split_tokens(text);
  return given;
}

inline GivenContext load_given(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read given-context file '" + path + "'");
  std::string line;
  std::string first;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (!detail::split_tokens(line).empty()) {
      if (!first.empty())
        throw ValidationError("given-context file '" + path + "' has more than one line");
      first = line;
    }
  }
  return parse_given(first);
}

// FNV-1a over the token stream; identifies dataset contents in reports.
inline std::string dataset_digest(const Dataset& dataset) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  const auto mix = [&](const std::string& s, char sep) {
    for (const char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ull;
    }
    h ^= static_cast<unsigned char>(sep);
    h *= 0x100000001b3ull;
  };
  for (const Occurrence& occ : dataset.occurrences) {
    for (const Token& t : occ.vars) mix(t, '\x1f');
    mix(occ.outcome, '\x1e');
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 0; i < 16; ++i) out[i] = hex[(h >> (60 - 4 * i)) & 0xf];
  return out;
}

}  // namespace am
