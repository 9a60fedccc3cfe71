#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "am/core.hpp"
#include "am/lattice.hpp"
#include "am/rational.hpp"
#include "am/rng.hpp"

namespace am {

// One occurring homogeneous supracontext: amplitude is its occurrence count,
// occurrence_indices reference the source dataset in order.
struct AnalogicalSetEntry {
  BitMask supra;
  std::uint64_t amplitude = 0;
  std::vector<std::size_t> occurrence_indices;
  std::map<Outcome, std::uint64_t> outcome_counts;
};

struct AnalogicalSet {
  std::vector<AnalogicalSetEntry> entries;  // canonical supracontext order
};

struct PointerTableEntry {
  BitMask supra;
  std::uint64_t total = 0;  // amplitude squared
  std::map<Outcome, std::uint64_t> outcome_pointers;
};

struct PointerTable {
  std::vector<PointerTableEntry> entries;

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const PointerTableEntry& e : entries) t += e.total;
    return t;
  }
};

// Exact outcome distribution. null_mass is the probability of making no
// prediction at all (the null outcome), a first-class mass point.
struct Distribution {
  std::map<Outcome, Rational> outcome_mass;
  Rational null_mass = 0;

  Rational total() const {
    Rational t = null_mass;
    for (const auto& [outcome, mass] : outcome_mass) t += mass;
    return t;
  }

  Rational mass(const Outcome& outcome) const {
    const auto it = outcome_mass.find(outcome);
    return it == outcome_mass.end() ? Rational(0) : it->second;
  }

  friend bool operator==(const Distribution&, const Distribution&) = default;
};

struct WaveEntry {
  BitMask supra;
  std::uint64_t amplitude = 0;
  Rational probability;  // amplitude^2 / norm_squared
};

struct WaveReport {
  std::vector<WaveEntry> entries;
  BigInt norm_squared;  // sum of squared amplitudes, kept as an integer
  std::string ket;      // "a/sqrt(S)|mask> + ..."
};

// Entries are exactly the cells with amplitude > 0; membership is recomputed
// from the dataset and cross-checked against the include matrix when one was
// retained.
inline AnalogicalSet build_analogical_set(const LatticeState& lattice, const Dataset& dataset,
                                          const GivenContext& given) {
  if (lattice.processed != dataset.occurrences.size())
    throw ConsistencyError("lattice processed " + std::to_string(lattice.processed) +
                           " occurrences, dataset has " +
                           std::to_string(dataset.occurrences.size()));
  if (lattice.n != given.arity())
    throw ConsistencyError("lattice width " + std::to_string(lattice.n) +
                           " != given context length " + std::to_string(given.arity()));

  std::vector<BitMask> intersects;
  intersects.reserve(dataset.occurrences.size());
  for (const Occurrence& occ : dataset.occurrences)
    intersects.push_back(compute_intersect(occ, given));

  AnalogicalSet aset;
  for (const BitMask& supra : enumerate_supracontexts(lattice.n, kHardMaxVars)) {
    const Cell& cell = lattice.cell(supra);
    if (cell.amplitude == 0) continue;
    AnalogicalSetEntry entry;
    entry.supra = supra;
    entry.amplitude = cell.amplitude;
    for (std::size_t k = 0; k < dataset.occurrences.size(); ++k) {
      const bool member = mask_includes(supra, intersects[k]);
      if (lattice.retain_include_matrix && member != lattice.include_bit(k, supra.value()))
        throw ConsistencyError("include matrix disagrees with recomputed membership at " +
                               supra.str() + ", occurrence " + std::to_string(k));
      if (!member) continue;
      entry.occurrence_indices.push_back(k);
      ++entry.outcome_counts[dataset.occurrences[k].outcome];
    }
    if (entry.occurrence_indices.size() != entry.amplitude)
      throw ConsistencyError("amplitude " + std::to_string(entry.amplitude) + " at " +
                             supra.str() + " != contained occurrence count " +
                             std::to_string(entry.occurrence_indices.size()));
    aset.entries.push_back(std::move(entry));
  }
  return aset;
}

// A supracontext with a occurrences holds a pointers per occurrence, a^2 in
// total; an outcome occurring c times receives c*a of them.
inline PointerTable pointer_table(const AnalogicalSet& aset) {
  PointerTable table;
  for (const AnalogicalSetEntry& entry : aset.entries) {
    PointerTableEntry row;
    row.supra = entry.supra;
    row.total = entry.amplitude * entry.amplitude;
    for (const auto& [outcome, count] : entry.outcome_counts)
      row.outcome_pointers[outcome] = count * entry.amplitude;
    table.entries.push_back(std::move(row));
  }
  return table;
}

inline Distribution outcome_distribution(const PointerTable& table) {
  Distribution dist;
  const std::uint64_t total = table.total();
  if (total == 0) {
    dist.null_mass = 1;
    return dist;
  }
  std::map<Outcome, std::uint64_t> pointers;
  for (const PointerTableEntry& entry : table.entries)
    for (const auto& [outcome, count] : entry.outcome_pointers) pointers[outcome] += count;
  for (const auto& [outcome, count] : pointers)
    dist.outcome_mass[outcome] = Rational(count, total);
  return dist;
}

inline WaveReport wave_report(const AnalogicalSet& aset) {
  if (aset.entries.empty())
    throw ValidationError("no occurring homogeneous supracontext");
  WaveReport report;
  report.norm_squared = 0;
  for (const AnalogicalSetEntry& entry : aset.entries)
    report.norm_squared += BigInt(entry.amplitude) * BigInt(entry.amplitude);
  std::string ket;
  for (const AnalogicalSetEntry& entry : aset.entries) {
    WaveEntry we;
    we.supra = entry.supra;
    we.amplitude = entry.amplitude;
    we.probability = Rational(BigInt(entry.amplitude) * BigInt(entry.amplitude),
                              report.norm_squared);
    report.entries.push_back(we);
    if (!ket.empty()) ket += " + ";
    ket += std::to_string(entry.amplitude) + "/sqrt(" + report.norm_squared.str() + ")|" +
           entry.supra.str() + ">";
  }
  report.ket = std::move(ket);
  return report;
}

// Decoherence: one uniform draw over the pooled pointer multiset. Pointers
// are ordered by table entry, then outcome token within an entry, so a seed
// pins the selection exactly. Returns nullopt (the null outcome) when the
// table is empty.
inline std::optional<Outcome> select_pointer(const PointerTable& table, Rng& rng) {
  const std::uint64_t total = table.total();
  if (total == 0) return std::nullopt;
  std::uint64_t draw = rng.below(total);
  for (const PointerTableEntry& entry : table.entries) {
    for (const auto& [outcome, count] : entry.outcome_pointers) {
      if (draw < count) return outcome;
      draw -= count;
    }
  }
  throw ConsistencyError("pointer totals disagree with per-outcome counts");
}

// Probability that two outcomes drawn from the distribution agree. Defined
// on outcome distributions only; a distribution carrying null mass has no
// outcome to agree on.
inline Rational agreement(const Distribution& dist) {
  if (dist.null_mass != 0)
    throw ValidationError("agreement is undefined for distributions with null mass");
  Rational sum = 0;
  for (const auto& [outcome, mass] : dist.outcome_mass) sum += mass * mass;
  return sum;
}

inline Rational disagreement(const Distribution& dist) {
  return Rational(1) - agreement(dist);
}

}  // namespace am
