#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "am/core.hpp"
#include "am/lattice.hpp"

namespace am {

enum class Classification {
  Empty,
  DeterministicHomogeneous,
  NonDeterministicHomogeneous,
  Heterogeneous,
};

inline const char* to_string(Classification c) {
  switch (c) {
    case Classification::Empty: return "empty";
    case Classification::DeterministicHomogeneous: return "deterministic";
    case Classification::NonDeterministicHomogeneous: return "non-deterministic";
    case Classification::Heterogeneous: return "heterogeneous";
  }
  return "?";
}

namespace detail {

// (intersect bits, outcome) of every occurrence the supracontext contains
inline std::vector<std::pair<std::uint32_t, Outcome>> contained_occurrences(
    const BitMask& supra, const Dataset& dataset, const GivenContext& given) {
  std::vector<std::pair<std::uint32_t, Outcome>> out;
  for (const Occurrence& occ : dataset.occurrences) {
    const BitMask intersect = compute_intersect(occ, given);
    if (mask_includes(supra, intersect)) out.emplace_back(intersect.bits, occ.outcome);
  }
  return out;
}

// ordered pairs (i, j), i != j, whose outcomes differ
inline std::uint64_t ordered_disagreements(const std::vector<Outcome>& outcomes) {
  std::map<Outcome, std::uint64_t> counts;
  for (const Outcome& o : outcomes) ++counts[o];
  const std::uint64_t total = outcomes.size();
  std::uint64_t agreeing = 0;
  for (const auto& [outcome, c] : counts) agreeing += c * (c - 1);
  return total * (total - 1) - agreeing;
}

}  // namespace detail

// Definitional classification: deterministic when a single outcome occurs;
// non-deterministic but homogeneous when several outcomes are confined to a
// single intersect (subcontext); heterogeneous otherwise.
inline Classification classify_direct(const BitMask& supra, const Dataset& dataset,
                                      const GivenContext& given) {
  const auto members = detail::contained_occurrences(supra, dataset, given);
  if (members.empty()) return Classification::Empty;
  std::vector<Outcome> outcomes;
  std::vector<std::uint32_t> intersects;
  for (const auto& [bits, outcome] : members) {
    if (std::find(outcomes.begin(), outcomes.end(), outcome) == outcomes.end())
      outcomes.push_back(outcome);
    if (std::find(intersects.begin(), intersects.end(), bits) == intersects.end())
      intersects.push_back(bits);
  }
  if (outcomes.size() == 1) return Classification::DeterministicHomogeneous;
  if (intersects.size() == 1) return Classification::NonDeterministicHomogeneous;
  return Classification::Heterogeneous;
}

// Disagreement-based classification: heterogeneous iff splitting the
// supracontext's occurrences into subcontexts (grouped by full intersect
// value) lowers the ordered disagreeing-pair count, i.e. some disagreement
// crosses subcontext boundaries.
inline Classification classify_by_disagreement(const BitMask& supra, const Dataset& dataset,
                                               const GivenContext& given) {
  const auto members = detail::contained_occurrences(supra, dataset, given);
  if (members.empty()) return Classification::Empty;

  std::vector<Outcome> whole;
  std::map<std::uint32_t, std::vector<Outcome>> parts;
  for (const auto& [bits, outcome] : members) {
    whole.push_back(outcome);
    parts[bits].push_back(outcome);
  }
  std::uint64_t split_disagreement = 0;
  for (const auto& [bits, outcomes] : parts)
    split_disagreement += detail::ordered_disagreements(outcomes);
  if (detail::ordered_disagreements(whole) > split_disagreement)
    return Classification::Heterogeneous;

  std::vector<Outcome> distinct;
  for (const Outcome& o : whole)
    if (std::find(distinct.begin(), distinct.end(), o) == distinct.end()) distinct.push_back(o);
  return distinct.size() == 1 ? Classification::DeterministicHomogeneous
                              : Classification::NonDeterministicHomogeneous;
}

struct CrossCheckRow {
  BitMask supra;
  Classification direct = Classification::Empty;
  Classification by_disagreement = Classification::Empty;
  std::uint64_t lattice_sum = 0;
  bool lattice_hetero = false;
  bool consistent = true;
};

struct CrossCheckReport {
  std::vector<CrossCheckRow> rows;  // canonical supracontext order
  std::size_t mismatches = 0;

  bool ok() const { return mismatches == 0; }
};

// Verifies, per supracontext, that both classifications agree and that the
// lattice's hetero flag and sum match them. Brute force over all 2^n
// supracontexts; meant for verification-scale n.
inline CrossCheckReport cross_check(const Dataset& dataset, const GivenContext& given,
                                    const EngineConfig& cfg = {}) {
  const LatticeState lattice = evaluate(dataset, given, cfg);
  CrossCheckReport report;
  for (const BitMask& supra : enumerate_supracontexts(given.arity(), cfg.max_vars)) {
    CrossCheckRow row;
    row.supra = supra;
    row.direct = classify_direct(supra, dataset, given);
    row.by_disagreement = classify_by_disagreement(supra, dataset, given);
    const Cell& cell = lattice.cell(supra);
    row.lattice_sum = cell.sum;
    row.lattice_hetero = cell.hetero();
    row.consistent = row.direct == row.by_disagreement &&
                     (row.direct == Classification::Heterogeneous) == row.lattice_hetero &&
                     (row.direct == Classification::Empty) == (cell.sum == 0);
    if (!row.consistent) ++report.mismatches;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace am
