#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "am/core.hpp"

namespace am {

// Per-supracontext registers, updated once per included occurrence. Outcomes
// are interned in the owning LatticeState so a cell stays 24 bytes and a
// 2^n-cell array remains affordable at the max_vars cap.
struct Cell {
  static constexpr std::uint8_t kPlurOutcome = 1u << 0;
  static constexpr std::uint8_t kPlurIntersect = 1u << 1;
  static constexpr std::uint8_t kHetero = 1u << 2;
  static constexpr std::uint8_t kHasIntersect = 1u << 3;

  std::uint32_t sum = 0;
  std::uint32_t amplitude = 0;
  std::uint32_t first_intersect_bits = 0;
  std::int32_t first_outcome_id = -1;
  std::uint8_t flags = 0;

  bool has_first_outcome() const { return first_outcome_id >= 0; }
  bool has_first_intersect() const { return flags & kHasIntersect; }
  bool plur_outcome() const { return flags & kPlurOutcome; }
  bool plur_intersect() const { return flags & kPlurIntersect; }
  bool hetero() const { return flags & kHetero; }

  friend bool operator==(const Cell&, const Cell&) = default;
};

struct LatticeState {
  int n = 0;
  std::vector<Cell> cells;              // indexed by supracontext mask value
  std::vector<Outcome> outcome_table;   // interned outcomes, first-seen order
  bool retain_include_matrix = true;
  // one row of 2^n include bits per processed occurrence, in dataset order
  std::vector<std::vector<std::uint64_t>> include_rows;
  std::size_t processed = 0;

  const Cell& cell(const BitMask& supra) const { return cells[supra.value()]; }
  const Cell& cell(std::uint32_t value) const { return cells[value]; }

  std::optional<Outcome> first_outcome(std::uint32_t value) const {
    const Cell& c = cells[value];
    if (!c.has_first_outcome()) return std::nullopt;
    return outcome_table[static_cast<std::size_t>(c.first_outcome_id)];
  }

  std::optional<BitMask> first_intersect(std::uint32_t value) const {
    const Cell& c = cells[value];
    if (!c.has_first_intersect()) return std::nullopt;
    return BitMask{c.first_intersect_bits, n};
  }

  bool include_bit(std::size_t occurrence_index, std::uint32_t supra_value) const {
    const std::vector<std::uint64_t>& row = include_rows[occurrence_index];
    return (row[supra_value >> 6] >> (supra_value & 63u)) & 1u;
  }

  std::int32_t intern_outcome(const Outcome& outcome) {
    for (std::size_t i = 0; i < outcome_table.size(); ++i)
      if (outcome_table[i] == outcome) return static_cast<std::int32_t>(i);
    outcome_table.push_back(outcome);
    return static_cast<std::int32_t>(outcome_table.size() - 1);
  }
};

inline LatticeState init_lattice(int n, const EngineConfig& cfg = {}) {
  if (n < 0 || n > cfg.max_vars || n > kHardMaxVars)
    throw CapacityError("variable count " + std::to_string(n) + " exceeds capacity " +
                        std::to_string(std::min(cfg.max_vars, kHardMaxVars)));
  LatticeState state;
  state.n = n;
  state.cells.assign(std::size_t{1} << n, Cell{});
  state.retain_include_matrix = cfg.retain_include_matrix;
  return state;
}

// Starting from an all-ones register, zero contain[i] where the occurrence
// misses the given context (intersect[i]=0) on a variable the supracontext
// uses (supra[i]=1).
inline BitMask apply_contain(const BitMask& supra, const BitMask& intersect) {
  require_same_width(supra, intersect);
  const BitMask full = BitMask::ones(supra.width);
  return BitMask{full.bits & ~(supra.bits & ~intersect.bits), supra.width};
}

// Undoes apply_contain by setting the same positions back to one; always
// restores the all-ones register.
inline BitMask reverse_contain(const BitMask& contain, const BitMask& supra,
                               const BitMask& intersect) {
  require_same_width(contain, supra);
  require_same_width(supra, intersect);
  return BitMask{contain.bits | (supra.bits & ~intersect.bits), supra.width};
}

// 1 iff the contain register kept all ones.
inline bool derive_include(const BitMask& contain) {
  return contain == BitMask::ones(contain.width);
}

// Reads one occurrence into the lattice: every supracontext whose include
// bit comes up 1 gets sum+1, first/plurality bookkeeping, heterogeneity and
// amplitude updates. Extensionally identical to running the contain/include
// operator pair against all 2^n supracontexts; only subsets of the intersect
// are touched since include is 0 everywhere else.
inline void read_occurrence(LatticeState& state, const Occurrence& occ,
                            const GivenContext& given) {
  if (given.arity() != state.n)
    throw ValidationError("given context length " + std::to_string(given.arity()) +
                          " != lattice variable count " + std::to_string(state.n));
  const BitMask intersect = compute_intersect(occ, given);
  const std::int32_t outcome_id = state.intern_outcome(occ.outcome);
  const std::uint32_t intersect_bits = intersect.bits;

  std::vector<std::uint64_t> row;
  if (state.retain_include_matrix)
    row.assign((state.cells.size() + 63) / 64, 0);

  for (std::uint32_t s = intersect_bits;; s = (s - 1) & intersect_bits) {
    Cell& c = state.cells[s];
    ++c.sum;
    if (c.first_outcome_id < 0)
      c.first_outcome_id = outcome_id;
    else if (c.first_outcome_id != outcome_id)
      c.flags |= Cell::kPlurOutcome;
    if (!(c.flags & Cell::kHasIntersect)) {
      c.first_intersect_bits = intersect_bits;
      c.flags |= Cell::kHasIntersect;
    } else if (c.first_intersect_bits != intersect_bits) {
      c.flags |= Cell::kPlurIntersect;
    }
    if ((c.flags & (Cell::kPlurOutcome | Cell::kPlurIntersect)) ==
        (Cell::kPlurOutcome | Cell::kPlurIntersect))
      c.flags |= Cell::kHetero;
    c.amplitude = (c.flags & Cell::kHetero) ? 0 : c.sum;
    if (state.retain_include_matrix) row[s >> 6] |= std::uint64_t{1} << (s & 63u);
    if (s == 0) break;
  }

  if (state.retain_include_matrix) state.include_rows.push_back(std::move(row));
  ++state.processed;
}

inline LatticeState evaluate(const Dataset& dataset, const GivenContext& given,
                             const EngineConfig& cfg = {}) {
  require_valid(dataset, given, cfg);
  LatticeState state = init_lattice(given.arity(), cfg);
  for (const Occurrence& occ : dataset.occurrences) read_occurrence(state, occ, given);
  return state;
}

struct TraceSnapshot {
  std::size_t step = 0;  // 1-based occurrence count at this point
  Occurrence occurrence;
  BitMask intersect;
  std::vector<Cell> cells;
  std::vector<Outcome> outcome_table;
  std::vector<std::vector<std::uint64_t>> include_rows;

  bool include_bit(std::size_t occurrence_index, std::uint32_t supra_value) const {
    const std::vector<std::uint64_t>& row = include_rows[occurrence_index];
    return (row[supra_value >> 6] >> (supra_value & 63u)) & 1u;
  }
};

// One snapshot per occurrence; the last snapshot's cells equal evaluate()'s.
inline std::vector<TraceSnapshot> trace(const Dataset& dataset, const GivenContext& given,
                                        const EngineConfig& cfg = {}) {
  require_valid(dataset, given, cfg);
  LatticeState state = init_lattice(given.arity(), cfg);
  std::vector<TraceSnapshot> snapshots;
  snapshots.reserve(dataset.occurrences.size());
  for (const Occurrence& occ : dataset.occurrences) {
    read_occurrence(state, occ, given);
    TraceSnapshot snap;
    snap.step = state.processed;
    snap.occurrence = occ;
    snap.intersect = compute_intersect(occ, given);
    snap.cells = state.cells;
    snap.outcome_table = state.outcome_table;
    snap.include_rows = state.include_rows;
    snapshots.push_back(std::move(snap));
  }
  return snapshots;
}

}  // namespace am
