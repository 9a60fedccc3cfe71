#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "am/core.hpp"
#include "am/homogeneity.hpp"
#include "am/io.hpp"
#include "am/lattice.hpp"
#include "am/natstat.hpp"
#include "am/predict.hpp"
#include "am/rational.hpp"
#include "am/revgate.hpp"

namespace am {

using Json = nlohmann::json;

namespace detail {

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

// two-space padded columns, no trailing whitespace
inline std::string format_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (row.size() > widths.size()) widths.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i)
      widths[i] = std::max(widths[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      line += row[i];
      if (i + 1 < row.size()) line += std::string(widths[i] - row[i].size(), ' ');
    }
    out += line;
    out += '\n';
  }
  return out;
}

inline std::string bit(bool b) { return b ? "1" : "0"; }

}  // namespace detail

inline std::string render_rational(const Rational& value) {
  return to_fraction_string(value) + " (" + to_decimal_string(value) + ")";
}

inline Json rational_json(const Rational& value) {
  // num/den as strings: values are arbitrary precision and must survive
  // round-trips that 53-bit JSON numbers would corrupt
  return Json{{"num", numerator(value).str()},
              {"den", denominator(value).str()},
              {"decimal", to_decimal_string(value)}};
}

inline Json distribution_json(const Distribution& dist) {
  Json outcomes = Json::object();
  for (const auto& [outcome, mass] : dist.outcome_mass) outcomes[outcome] = rational_json(mass);
  return Json{{"outcomes", outcomes}, {"null", rational_json(dist.null_mass)}};
}

inline std::string render_distribution_text(const Distribution& dist) {
  std::string out;
  for (const auto& [outcome, mass] : dist.outcome_mass)
    out += "  " + outcome + " = " + render_rational(mass) + "\n";
  if (dist.null_mass != 0) out += "  null = " + render_rational(dist.null_mass) + "\n";
  if (out.empty()) out = "  (empty)\n";
  return out;
}

// ---------------------------------------------------------------------------
// predict

struct RunReport {
  Dataset dataset;
  GivenContext given;
  EngineConfig cfg;
  LatticeState lattice;
  AnalogicalSet aset;
  PointerTable ptable;
  Distribution dist;
  std::optional<WaveReport> wave;
};

inline RunReport make_run_report(const Dataset& dataset, const GivenContext& given,
                                 const EngineConfig& cfg = {}) {
  RunReport report;
  report.dataset = dataset;
  report.given = given;
  report.cfg = cfg;
  report.lattice = evaluate(dataset, given, cfg);
  report.aset = build_analogical_set(report.lattice, dataset, given);
  report.ptable = pointer_table(report.aset);
  report.dist = outcome_distribution(report.ptable);
  if (!report.aset.entries.empty()) report.wave = wave_report(report.aset);
  return report;
}

namespace detail {

inline std::vector<std::string> cell_columns(const BitMask& supra, const Cell& cell,
                                             const std::vector<Outcome>& outcome_table) {
  return {supra.str(),
          std::to_string(cell.sum),
          cell.has_first_outcome()
              ? outcome_table[static_cast<std::size_t>(cell.first_outcome_id)]
              : "-",
          bit(cell.plur_outcome()),
          cell.has_first_intersect() ? BitMask{cell.first_intersect_bits, supra.width}.str()
                                     : "-",
          bit(cell.plur_intersect()),
          bit(cell.hetero()),
          std::to_string(cell.amplitude)};
}

inline std::vector<std::string> cell_header() {
  return {"supra", "sum", "1st-out", "plur-out", "1st-int", "plur-int", "het", "ampl"};
}

inline Json cell_json(const BitMask& supra, const Cell& cell,
                      const std::vector<Outcome>& outcome_table) {
  Json j;
  j["supra"] = supra.str();
  j["sum"] = cell.sum;
  j["first_outcome"] =
      cell.has_first_outcome()
          ? Json(outcome_table[static_cast<std::size_t>(cell.first_outcome_id)])
          : Json(nullptr);
  j["plur_outcome"] = cell.plur_outcome();
  j["first_intersect"] = cell.has_first_intersect()
                             ? Json(BitMask{cell.first_intersect_bits, supra.width}.str())
                             : Json(nullptr);
  j["plur_intersect"] = cell.plur_intersect();
  j["hetero"] = cell.hetero();
  j["amplitude"] = cell.amplitude;
  return j;
}

inline Json config_json(const EngineConfig& cfg) {
  return Json{{"max_vars", cfg.max_vars},
              {"include_matrix", cfg.retain_include_matrix},
              {"seed", cfg.seed}};
}

inline Json dataset_json(const Dataset& dataset) {
  return Json{{"digest", dataset_digest(dataset)},
              {"m", dataset.occurrences.size()},
              {"arity", dataset.arity}};
}

}  // namespace detail

inline std::string render_run_report_text(const RunReport& report) {
  std::ostringstream out;
  out << "dataset: m=" << report.dataset.occurrences.size() << " arity=" << report.dataset.arity
      << " digest=" << dataset_digest(report.dataset) << "\n";
  out << "given: " << detail::join(report.given.vars, " ") << "\n";
  out << "config: max_vars=" << report.cfg.max_vars << " include_matrix="
      << (report.cfg.retain_include_matrix ? "on" : "off") << " seed=" << report.cfg.seed
      << "\n\n";

  out << "lattice:\n";
  std::vector<std::vector<std::string>> rows{detail::cell_header()};
  for (const BitMask& supra : enumerate_supracontexts(report.lattice.n, kHardMaxVars))
    rows.push_back(
        detail::cell_columns(supra, report.lattice.cell(supra), report.lattice.outcome_table));
  out << detail::format_table(rows);

  out << "\nanalogical set:\n";
  if (report.aset.entries.empty()) {
    out << "  (empty)\n";
  } else {
    std::vector<std::vector<std::string>> arows{{"supra", "ampl", "occurrences", "outcomes"}};
    for (const AnalogicalSetEntry& e : report.aset.entries) {
      std::vector<std::string> occs;
      for (std::size_t i : e.occurrence_indices) occs.push_back(std::to_string(i));
      std::vector<std::string> outs;
      for (const auto& [outcome, count] : e.outcome_counts)
        outs.push_back(outcome + "=" + std::to_string(count));
      arows.push_back({e.supra.str(), std::to_string(e.amplitude), detail::join(occs, ","),
                       detail::join(outs, " ")});
    }
    out << detail::format_table(arows);
  }

  out << "\npointers:\n";
  if (report.ptable.entries.empty()) {
    out << "  (empty)\n";
  } else {
    std::vector<std::vector<std::string>> prows{{"supra", "total", "per-outcome"}};
    for (const PointerTableEntry& e : report.ptable.entries) {
      std::vector<std::string> outs;
      for (const auto& [outcome, count] : e.outcome_pointers)
        outs.push_back(outcome + "=" + std::to_string(count));
      prows.push_back({e.supra.str(), std::to_string(e.total), detail::join(outs, " ")});
    }
    out << detail::format_table(prows);
  }
  out << "total pointers: " << report.ptable.total() << "\n";

  out << "\ndistribution:\n" << render_distribution_text(report.dist);
  out << "\nwave: " << (report.wave ? report.wave->ket : "(none)") << "\n";
  return out.str();
}

inline Json run_report_json(const RunReport& report) {
  Json j;
  j["command"] = "predict";
  j["dataset"] = detail::dataset_json(report.dataset);
  j["given"] = report.given.vars;
  j["config"] = detail::config_json(report.cfg);

  Json lattice = Json::array();
  for (const BitMask& supra : enumerate_supracontexts(report.lattice.n, kHardMaxVars))
    lattice.push_back(
        detail::cell_json(supra, report.lattice.cell(supra), report.lattice.outcome_table));
  j["lattice"] = lattice;

  Json aset = Json::array();
  for (const AnalogicalSetEntry& e : report.aset.entries) {
    Json entry;
    entry["supra"] = e.supra.str();
    entry["amplitude"] = e.amplitude;
    entry["occurrences"] = e.occurrence_indices;
    Json counts = Json::object();
    for (const auto& [outcome, count] : e.outcome_counts) counts[outcome] = count;
    entry["outcome_counts"] = counts;
    aset.push_back(entry);
  }
  j["analogical_set"] = aset;

  Json pointers;
  Json pentries = Json::array();
  for (const PointerTableEntry& e : report.ptable.entries) {
    Json entry;
    entry["supra"] = e.supra.str();
    entry["total"] = e.total;
    Json per = Json::object();
    for (const auto& [outcome, count] : e.outcome_pointers) per[outcome] = count;
    entry["per_outcome"] = per;
    pentries.push_back(entry);
  }
  pointers["entries"] = pentries;
  pointers["total"] = report.ptable.total();
  j["pointers"] = pointers;

  j["distribution"] = distribution_json(report.dist);

  if (report.wave) {
    Json wave;
    wave["norm_squared"] = report.wave->norm_squared.str();
    Json wentries = Json::array();
    for (const WaveEntry& e : report.wave->entries)
      wentries.push_back(Json{{"supra", e.supra.str()},
                              {"amplitude", e.amplitude},
                              {"probability", rational_json(e.probability)}});
    wave["entries"] = wentries;
    wave["ket"] = report.wave->ket;
    j["wave"] = wave;
  } else {
    j["wave"] = nullptr;
  }
  return j;
}

// ---------------------------------------------------------------------------
// trace

namespace detail {

inline std::string include_bits_string(const TraceSnapshot& snap, std::uint32_t supra_value) {
  if (snap.include_rows.empty()) return "-";
  std::string bits;
  for (std::size_t k = 0; k < snap.include_rows.size(); ++k)
    bits += snap.include_bit(k, supra_value) ? '1' : '0';
  return bits;
}

}  // namespace detail

inline std::string render_trace_text(const std::vector<TraceSnapshot>& snapshots,
                                     const GivenContext& given) {
  std::ostringstream out;
  out << "given: " << detail::join(given.vars, " ") << "\n";
  out << "occurrences: " << snapshots.size() << "\n";
  for (const TraceSnapshot& snap : snapshots) {
    out << "\nafter occurrence " << snap.step << ": "
        << detail::join(snap.occurrence.vars, " ") << " -> " << snap.occurrence.outcome
        << "   intersect " << snap.intersect.str() << "\n";
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header = detail::cell_header();
    header.insert(header.begin() + 1, "include");
    rows.push_back(header);
    for (const BitMask& supra : enumerate_supracontexts(snap.intersect.width, kHardMaxVars)) {
      std::vector<std::string> cols =
          detail::cell_columns(supra, snap.cells[supra.value()], snap.outcome_table);
      cols.insert(cols.begin() + 1, detail::include_bits_string(snap, supra.value()));
      rows.push_back(std::move(cols));
    }
    out << detail::format_table(rows);
  }
  return out.str();
}

inline Json trace_json(const std::vector<TraceSnapshot>& snapshots, const GivenContext& given) {
  Json j;
  j["command"] = "trace";
  j["given"] = given.vars;
  Json snaps = Json::array();
  for (const TraceSnapshot& snap : snapshots) {
    Json s;
    s["step"] = snap.step;
    s["occurrence"] = Json{{"vars", snap.occurrence.vars}, {"outcome", snap.occurrence.outcome}};
    s["intersect"] = snap.intersect.str();
    Json cells = Json::array();
    for (const BitMask& supra : enumerate_supracontexts(snap.intersect.width, kHardMaxVars)) {
      Json c = detail::cell_json(supra, snap.cells[supra.value()], snap.outcome_table);
      c["include"] = detail::include_bits_string(snap, supra.value());
      cells.push_back(c);
    }
    s["cells"] = cells;
    snaps.push_back(s);
  }
  j["snapshots"] = snaps;
  return j;
}

// ---------------------------------------------------------------------------
// natstat

inline std::string render_decision_text(const std::vector<Outcome>& outcomes, const Rational& r,
                                        const DecisionDistribution& dist) {
  std::ostringstream out;
  out << "outcomes: " << detail::join(outcomes, " ") << "\n";
  out << "r: " << to_fraction_string(r) << "\n";
  out << "decision distribution:\n" << render_distribution_text(dist);
  return out.str();
}

inline Json decision_json(const std::vector<Outcome>& outcomes, const Rational& r,
                          const DecisionDistribution& dist) {
  return Json{{"command", "natstat-decide"},
              {"outcomes", outcomes},
              {"r", rational_json(r)},
              {"distribution", distribution_json(dist)}};
}

inline std::string render_variance_text(const std::vector<Outcome>& outcomes, const Rational& r,
                                        const Outcome& target, SamplingMode mode,
                                        const VarianceReport& report) {
  std::ostringstream out;
  out << "outcomes: " << detail::join(outcomes, " ") << "\n";
  out << "n: " << outcomes.size() << "\n";
  out << "r: " << to_fraction_string(r) << "\n";
  out << "target: " << target << "\n";
  out << "mode: " << (mode == SamplingMode::exact ? "exact" : "monte-carlo") << "\n";
  out << "samples: " << report.samples << "\n";
  out << "e_p = " << render_rational(report.e_p) << "\n";
  out << "e_n_over_m = " << render_rational(report.e_n_over_m) << "\n";
  out << "empirical_var = " << render_rational(report.empirical_var) << "\n";
  out << "formula_var = " << render_rational(report.formula_var) << "\n";
  out << "null_mass = " << render_rational(report.null_mass) << "\n";
  return out.str();
}

inline Json variance_json(const std::vector<Outcome>& outcomes, const Rational& r,
                          const Outcome& target, SamplingMode mode,
                          const VarianceReport& report) {
  return Json{{"command", "natstat-variance"},
              {"outcomes", outcomes},
              {"n", outcomes.size()},
              {"r", rational_json(r)},
              {"target", target},
              {"mode", mode == SamplingMode::exact ? "exact" : "monte-carlo"},
              {"samples", report.samples},
              {"e_p", rational_json(report.e_p)},
              {"e_n_over_m", rational_json(report.e_n_over_m)},
              {"empirical_var", rational_json(report.empirical_var)},
              {"formula_var", rational_json(report.formula_var)},
              {"null_mass", rational_json(report.null_mass)}};
}

inline std::string render_imperfect_text(const Dataset& dataset, const GivenContext& given,
                                         const Rational& r, SamplingMode mode,
                                         std::uint64_t trials, const Distribution& dist) {
  std::ostringstream out;
  out << "dataset: m=" << dataset.occurrences.size() << " arity=" << dataset.arity
      << " digest=" << dataset_digest(dataset) << "\n";
  out << "given: " << detail::join(given.vars, " ") << "\n";
  out << "r: " << to_fraction_string(r) << "\n";
  out << "mode: " << (mode == SamplingMode::exact ? "exact" : "monte-carlo") << "\n";
  if (mode == SamplingMode::monte_carlo) out << "trials: " << trials << "\n";
  out << "distribution:\n" << render_distribution_text(dist);
  return out.str();
}

inline Json imperfect_json(const Dataset& dataset, const GivenContext& given, const Rational& r,
                           SamplingMode mode, std::uint64_t trials, const Distribution& dist) {
  Json j{{"command", "natstat-predict-imperfect"},
         {"dataset", detail::dataset_json(dataset)},
         {"given", given.vars},
         {"r", rational_json(r)},
         {"mode", mode == SamplingMode::exact ? "exact" : "monte-carlo"},
         {"distribution", distribution_json(dist)}};
  if (mode == SamplingMode::monte_carlo) j["trials"] = trials;
  return j;
}

// ---------------------------------------------------------------------------
// gates

inline std::string render_gate_table(const std::string& title, int arity,
                                     const std::vector<GateRow>& rows) {
  static const char* names = "abcdefgh";
  std::vector<std::vector<std::string>> table;
  std::vector<std::string> header;
  for (int i = 0; i < arity; ++i) header.push_back(std::string(1, names[i]) + "_i");
  for (int i = 0; i < arity; ++i) header.push_back(std::string(1, names[i]) + "_f");
  table.push_back(header);
  for (const GateRow& row : rows) {
    std::vector<std::string> cols;
    for (int v : row.inputs) cols.push_back(std::to_string(v));
    for (int v : row.outputs) cols.push_back(std::to_string(v));
    table.push_back(cols);
  }
  return title + "\n" + detail::format_table(table);
}

inline std::string render_gates_text() {
  std::string out = render_gate_table("n-gate", 1, truth_table(1, n_gate_word));
  out += "\n";
  std::vector<GateRow> and_rows;
  for (const GateRow& row : truth_table(3, ccn_gate_word))
    if (row.inputs[2] == 0) and_rows.push_back(row);
  out += render_gate_table("and-gate (ccn-gate with c_i = 0)", 3, and_rows);
  out += "\n";
  out += render_gate_table("ccn-gate", 3, truth_table(3, ccn_gate_word));
  return out;
}

inline Json gates_json() {
  const auto table_json = [](const std::string& name, const std::vector<GateRow>& rows) {
    Json jrows = Json::array();
    for (const GateRow& row : rows)
      jrows.push_back(Json{{"in", row.inputs}, {"out", row.outputs}});
    return Json{{"name", name}, {"rows", jrows}};
  };
  std::vector<GateRow> and_rows;
  for (const GateRow& row : truth_table(3, ccn_gate_word))
    if (row.inputs[2] == 0) and_rows.push_back(row);
  return Json{{"command", "gates"},
              {"gates", Json::array({table_json("n-gate", truth_table(1, n_gate_word)),
                                     table_json("and-gate (ccn-gate with c_i = 0)", and_rows),
                                     table_json("ccn-gate", truth_table(3, ccn_gate_word))})}};
}

// ---------------------------------------------------------------------------
// cross-check and validation

inline std::string render_cross_check_text(const CrossCheckReport& report) {
  std::vector<std::vector<std::string>> rows{
      {"supra", "direct", "by-disagreement", "sum", "het", "consistent"}};
  for (const CrossCheckRow& row : report.rows)
    rows.push_back({row.supra.str(), to_string(row.direct), to_string(row.by_disagreement),
                    std::to_string(row.lattice_sum), detail::bit(row.lattice_hetero),
                    row.consistent ? "yes" : "NO"});
  return detail::format_table(rows) + "mismatches: " + std::to_string(report.mismatches) + "\n";
}

inline Json cross_check_json(const CrossCheckReport& report) {
  Json rows = Json::array();
  for (const CrossCheckRow& row : report.rows)
    rows.push_back(Json{{"supra", row.supra.str()},
                        {"direct", to_string(row.direct)},
                        {"by_disagreement", to_string(row.by_disagreement)},
                        {"sum", row.lattice_sum},
                        {"hetero", row.lattice_hetero},
                        {"consistent", row.consistent}});
  return Json{{"command", "check"}, {"rows", rows}, {"mismatches", report.mismatches}};
}

inline std::string render_violations_text(const std::vector<Violation>& violations) {
  if (violations.empty()) return "ok\n";
  std::string out;
  for (const Violation& v : violations)
    out += std::string(v.kind == Violation::Kind::capacity ? "capacity" : "validation") + ": " +
           v.message + "\n";
  return out;
}

inline Json violations_json(const std::vector<Violation>& violations) {
  Json rows = Json::array();
  for (const Violation& v : violations)
    rows.push_back(Json{{"kind", v.kind == Violation::Kind::capacity ? "capacity" : "validation"},
                        {"message", v.message}});
  return Json{{"command", "validate"}, {"ok", violations.empty()}, {"violations", rows}};
}

}  // namespace am
