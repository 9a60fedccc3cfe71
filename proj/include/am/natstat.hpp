#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "am/core.hpp"
#include "am/lattice.hpp"
#include "am/predict.hpp"
#include "am/rational.hpp"
#include "am/rng.hpp"

namespace am {

// Imperfect memory: each data occurrence is independently accessible with
// probability r. r = 1/2 is the level at which natural statistics reproduce
// traditional statistics.
struct MemoryModel {
  Rational r = Rational(1, 2);
};

using DecisionDistribution = Distribution;

inline constexpr std::size_t kDefaultEnumerationCap = 20;

enum class SamplingMode { exact, monte_carlo };

namespace detail {

inline void check_retention(const MemoryModel& model) {
  if (model.r < 0 || model.r > 1)
    throw ValidationError("retention probability must lie in [0,1], got " +
                          to_fraction_string(model.r));
}

inline BigInt lcm_upto(std::size_t n) {
  BigInt l = 1;
  for (std::size_t k = 2; k <= n; ++k) l = boost::multiprecision::lcm(l, BigInt(k));
  return l;
}

// numerators of r^k (1-r)^(m-k) over the common denominator den(r)^m
inline std::vector<BigInt> subset_weight_numerators(const Rational& r, std::size_t m) {
  const BigInt a = numerator(r);
  const BigInt b = denominator(r);
  std::vector<BigInt> wnum(m + 1);
  for (std::size_t k = 0; k <= m; ++k)
    wnum[k] = ipow(a, static_cast<unsigned>(k)) * ipow(b - a, static_cast<unsigned>(m - k));
  return wnum;
}

}  // namespace detail

// Keeps each occurrence independently with probability r, preserving order.
inline Dataset sample_memory(const Dataset& dataset, const MemoryModel& model, Rng& rng) {
  detail::check_retention(model);
  Dataset subset;
  subset.arity = dataset.arity;
  for (const Occurrence& occ : dataset.occurrences)
    if (rng.bernoulli(model.r)) subset.occurrences.push_back(occ);
  return subset;
}

// Perfect-memory estimate: outcome probability proportional to relative
// frequency; no occurrences means no prediction.
inline Distribution relative_frequency_estimate(const std::vector<Outcome>& outcomes) {
  Distribution dist;
  if (outcomes.empty()) {
    dist.null_mass = 1;
    return dist;
  }
  std::map<Outcome, std::uint64_t> counts;
  for (const Outcome& o : outcomes) ++counts[o];
  for (const auto& [outcome, count] : counts)
    dist.outcome_mass[outcome] = Rational(count, outcomes.size());
  return dist;
}

// Enumerates all 2^m memory subsets, each weighted r^k (1-r)^(m-k). The most
// frequent outcome of a subset receives its weight; ties split it equally;
// the forgotten-everything subset contributes to the null outcome.
inline DecisionDistribution exact_decision_distribution(
    const std::vector<Outcome>& outcomes, const MemoryModel& model,
    std::size_t cap = kDefaultEnumerationCap) {
  detail::check_retention(model);
  const std::size_t m = outcomes.size();
  if (m > cap)
    throw CapacityError("exact enumeration over " + std::to_string(m) +
                        " occurrences exceeds the cap of " + std::to_string(cap) +
                        "; use Monte Carlo mode");

  std::vector<Outcome> classes;
  std::vector<std::uint64_t> class_mask;
  for (std::size_t i = 0; i < m; ++i) {
    const auto it = std::find(classes.begin(), classes.end(), outcomes[i]);
    std::size_t idx;
    if (it == classes.end()) {
      classes.push_back(outcomes[i]);
      class_mask.push_back(0);
      idx = classes.size() - 1;
    } else {
      idx = static_cast<std::size_t>(it - classes.begin());
    }
    class_mask[idx] |= std::uint64_t{1} << i;
  }

  const std::vector<BigInt> wnum = detail::subset_weight_numerators(model.r, m);
  // tie shares stay integral when everything is scaled by lcm(1..t)
  const BigInt scale = detail::lcm_upto(std::max<std::size_t>(classes.size(), 1));
  std::vector<BigInt> acc(classes.size(), BigInt(0));
  BigInt null_acc = 0;

  const std::uint64_t subset_count = std::uint64_t{1} << m;
  for (std::uint64_t s = 0; s < subset_count; ++s) {
    if (s == 0) {
      null_acc += scale * wnum[0];
      continue;
    }
    const auto k = static_cast<std::size_t>(std::popcount(s));
    std::uint64_t best = 0;
    std::uint64_t tied = 0;
    for (std::size_t j = 0; j < classes.size(); ++j) {
      const auto c = static_cast<std::uint64_t>(std::popcount(s & class_mask[j]));
      if (c > best) {
        best = c;
        tied = 1;
      } else if (c == best && c > 0) {
        ++tied;
      }
    }
    const BigInt share = (scale / tied) * wnum[k];
    for (std::size_t j = 0; j < classes.size(); ++j)
      if (static_cast<std::uint64_t>(std::popcount(s & class_mask[j])) == best)
        acc[j] += share;
  }

  const BigInt denom = scale * ipow(denominator(model.r), static_cast<unsigned>(m));
  DecisionDistribution dist;
  dist.null_mass = Rational(null_acc, denom);
  for (std::size_t j = 0; j < classes.size(); ++j)
    if (acc[j] != 0) dist.outcome_mass[classes[j]] = Rational(acc[j], denom);
  return dist;
}

struct VarianceReport {
  Rational e_p;          // expected frequency estimate for the target outcome
  Rational e_n_over_m;   // expected total/remembered ratio
  Rational empirical_var;
  Rational formula_var;  // e_p(1-e_p)(e_n_over_m - 1)/(n-1)
  Rational null_mass;    // weight of remembering nothing (excluded above)
  std::uint64_t samples = 0;  // subsets enumerated, or non-empty trials
};

// Distribution of the relative-frequency estimator for one target outcome
// under imperfect memory, conditioned on remembering at least one
// occurrence. Exact mode enumerates every subset; Monte Carlo draws them.
inline VarianceReport variance_experiment(const std::vector<Outcome>& outcomes,
                                          const MemoryModel& model, SamplingMode mode,
                                          std::uint64_t trials, Rng& rng,
                                          const Outcome& target = {},
                                          std::size_t cap = kDefaultEnumerationCap) {
  detail::check_retention(model);
  const std::size_t n = outcomes.size();
  if (n < 2) throw ValidationError("variance experiment needs at least 2 outcomes");
  const Outcome tgt = target.empty() ? outcomes.front() : target;

  // p-hat = c/k is accumulated as the integer c*(scale/k)
  const BigInt scale = detail::lcm_upto(n);
  BigInt weight_sum = 0;  // total weight (or count) of non-empty subsets
  BigInt sum_p = 0;
  BigInt sum_p2 = 0;
  BigInt sum_ratio = 0;
  Rational null_mass;
  std::uint64_t samples = 0;

  if (mode == SamplingMode::exact) {
    if (n > cap)
      throw CapacityError("exact enumeration over " + std::to_string(n) +
                          " occurrences exceeds the cap of " + std::to_string(cap) +
                          "; use Monte Carlo mode");
    std::uint64_t target_mask = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (outcomes[i] == tgt) target_mask |= std::uint64_t{1} << i;
    const std::vector<BigInt> wnum = detail::subset_weight_numerators(model.r, n);
    const std::uint64_t subset_count = std::uint64_t{1} << n;
    for (std::uint64_t s = 1; s < subset_count; ++s) {
      const auto k = static_cast<std::uint64_t>(std::popcount(s));
      const auto c = static_cast<std::uint64_t>(std::popcount(s & target_mask));
      const BigInt v = BigInt(c) * (scale / k);
      const BigInt& w = wnum[k];
      weight_sum += w;
      sum_p += w * v;
      sum_p2 += w * v * v;
      sum_ratio += w * BigInt(n) * (scale / k);
    }
    null_mass = Rational(wnum[0], ipow(denominator(model.r), static_cast<unsigned>(n)));
    samples = subset_count;
  } else {
    const std::uint64_t nonce = rng.next();
    std::uint64_t kept = 0;
    std::uint64_t empty = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
      Rng trial_rng = derive_rng(nonce, t);
      std::uint64_t k = 0;
      std::uint64_t c = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (!trial_rng.bernoulli(model.r)) continue;
        ++k;
        if (outcomes[i] == tgt) ++c;
      }
      if (k == 0) {
        ++empty;
        continue;
      }
      ++kept;
      const BigInt v = BigInt(c) * (scale / k);
      sum_p += v;
      sum_p2 += v * v;
      sum_ratio += BigInt(n) * (scale / k);
    }
    weight_sum = kept;
    null_mass = trials == 0 ? Rational(0) : Rational(empty, trials);
    samples = kept;
  }

  if (weight_sum == 0)
    throw ValidationError("no non-empty memory subset has positive weight; "
                          "cannot estimate variance");

  VarianceReport report;
  report.e_p = Rational(sum_p, weight_sum * scale);
  report.e_n_over_m = Rational(sum_ratio, weight_sum * scale);
  const Rational e_p2 = Rational(sum_p2, weight_sum * scale * scale);
  report.empirical_var = e_p2 - report.e_p * report.e_p;
  report.formula_var = report.e_p * (Rational(1) - report.e_p) *
                       (report.e_n_over_m - 1) / Rational(n - 1);
  report.null_mass = null_mass;
  report.samples = samples;
  return report;
}

// Expectation, over memory subsets, of the full lattice prediction. Subsets
// that leave no occurring homogeneous supracontext contribute null mass.
inline Distribution predict_with_imperfect_memory(const Dataset& dataset,
                                                  const GivenContext& given,
                                                  const MemoryModel& model, SamplingMode mode,
                                                  std::uint64_t trials, Rng& rng,
                                                  const EngineConfig& cfg = {},
                                                  std::size_t cap = kDefaultEnumerationCap) {
  detail::check_retention(model);
  require_valid(dataset, given, cfg);

  const auto predict_subset = [&](const Dataset& subset) {
    const LatticeState lattice = evaluate(subset, given, cfg);
    return outcome_distribution(pointer_table(build_analogical_set(lattice, subset, given)));
  };

  Distribution acc;
  if (mode == SamplingMode::exact) {
    const std::size_t m = dataset.occurrences.size();
    if (m > cap)
      throw CapacityError("exact enumeration over " + std::to_string(m) +
                          " occurrences exceeds the cap of " + std::to_string(cap) +
                          "; use Monte Carlo mode");
    const std::vector<BigInt> wnum = detail::subset_weight_numerators(model.r, m);
    const BigInt denom = ipow(denominator(model.r), static_cast<unsigned>(m));
    const std::uint64_t subset_count = std::uint64_t{1} << m;
    for (std::uint64_t s = 0; s < subset_count; ++s) {
      const auto k = static_cast<std::size_t>(std::popcount(s));
      const Rational weight(wnum[k], denom);
      if (weight == 0) continue;
      Dataset subset;
      subset.arity = dataset.arity;
      for (std::size_t i = 0; i < m; ++i)
        if (s & (std::uint64_t{1} << i)) subset.occurrences.push_back(dataset.occurrences[i]);
      const Distribution dist = predict_subset(subset);
      acc.null_mass += weight * dist.null_mass;
      for (const auto& [outcome, mass] : dist.outcome_mass)
        acc.outcome_mass[outcome] += weight * mass;
    }
  } else {
    if (trials == 0) throw ValidationError("Monte Carlo mode needs at least one trial");
    const std::uint64_t nonce = rng.next();
    for (std::uint64_t t = 0; t < trials; ++t) {
      Rng trial_rng = derive_rng(nonce, t);
      const Distribution dist = predict_subset(sample_memory(dataset, model, trial_rng));
      acc.null_mass += dist.null_mass;
      for (const auto& [outcome, mass] : dist.outcome_mass)
        acc.outcome_mass[outcome] += mass;
    }
    const Rational divisor(trials);
    acc.null_mass /= divisor;
    for (auto& [outcome, mass] : acc.outcome_mass) mass /= divisor;
  }
  return acc;
}

}  // namespace am
