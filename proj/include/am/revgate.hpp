#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "am/core.hpp"

namespace am {

inline bool n_gate(bool a) { return !a; }

// Control-control-not: flips c iff both controls are set; a and b pass
// through unchanged.
inline std::array<bool, 3> ccn_gate(bool a, bool b, bool c) {
  return {a, b, static_cast<bool>(c ^ (a && b))};
}

// A ccn-gate with c preset to 0 computes AND reversibly.
inline bool and_via_ccn(bool a, bool b) { return ccn_gate(a, b, false)[2]; }

// Gates as functions on packed words: input bit tuples (a, b, c) map to the
// word with a as the most significant bit, matching "110"-style rows.
using GateWordFn = std::function<std::uint32_t(std::uint32_t)>;

inline std::uint32_t n_gate_word(std::uint32_t w) { return (~w) & 1u; }

inline std::uint32_t ccn_gate_word(std::uint32_t w) {
  const bool a = (w >> 2) & 1u;
  const bool b = (w >> 1) & 1u;
  const bool c = w & 1u;
  const auto out = ccn_gate(a, b, c);
  return static_cast<std::uint32_t>(out[0]) << 2 | static_cast<std::uint32_t>(out[1]) << 1 |
         static_cast<std::uint32_t>(out[2]);
}

struct GateRow {
  std::vector<int> inputs;
  std::vector<int> outputs;
};

inline std::vector<GateRow> truth_table(int arity, const GateWordFn& gate) {
  std::vector<GateRow> rows;
  const std::uint32_t count = 1u << arity;
  for (std::uint32_t w = 0; w < count; ++w) {
    GateRow row;
    const std::uint32_t out = gate(w);
    for (int i = arity - 1; i >= 0; --i) {
      row.inputs.push_back((w >> i) & 1u);
      row.outputs.push_back((out >> i) & 1u);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// A gate is reversible iff its truth table is a bijection on k-bit words.
inline bool reversibility_check(int arity, const GateWordFn& gate) {
  const std::uint32_t count = 1u << arity;
  std::vector<bool> seen(count, false);
  for (std::uint32_t w = 0; w < count; ++w) {
    const std::uint32_t out = gate(w);
    if (out >= count || seen[out]) return false;
    seen[out] = true;
  }
  return true;
}

}  // namespace am
