#pragma once

#include <cstdint>
#include <vector>

#include "am/core.hpp"
#include "am/io.hpp"
#include "am/predict.hpp"

namespace fixtures {

// Five 3-variable occurrences probed with the given context "3 1 2". The
// staged expectations below are frozen; every engine path must hit them
// exactly.
inline am::Dataset dataset312() {
  return am::parse_dataset_string(
      "3 1 0 e\n"
      "0 3 2 r\n"
      "2 1 0 r\n"
      "2 1 2 r\n"
      "3 1 1 r\n");
}

inline am::GivenContext given312() { return am::parse_given("3 1 2"); }

// intersects of the five occurrences with "3 1 2", in dataset order
inline std::vector<const char*> intersects312() {
  return {"110", "001", "010", "011", "110"};
}

struct ExpectedCell {
  const char* supra;
  std::uint32_t sum;
  const char* first_outcome;  // "-" when absent
  bool plur_outcome;
  const char* first_intersect;  // "-" when absent
  bool plur_intersect;
  bool hetero;
  std::uint32_t amplitude;
};

// one table per occurrence read, rows in canonical supracontext order
inline const std::vector<std::vector<ExpectedCell>>& staged_tables312() {
  static const std::vector<std::vector<ExpectedCell>> tables = {
      {
          {"111", 0, "-", false, "-", false, false, 0},
          {"110", 1, "e", false, "110", false, false, 1},
          {"101", 0, "-", false, "-", false, false, 0},
          {"011", 0, "-", false, "-", false, false, 0},
          {"100", 1, "e", false, "110", false, false, 1},
          {"010", 1, "e", false, "110", false, false, 1},
          {"001", 0, "-", false, "-", false, false, 0},
          {"000", 1, "e", false, "110", false, false, 1},
      },
      {
          {"111", 0, "-", false, "-", false, false, 0},
          {"110", 1, "e", false, "110", false, false, 1},
          {"101", 0, "-", false, "-", false, false, 0},
          {"011", 0, "-", false, "-", false, false, 0},
          {"100", 1, "e", false, "110", false, false, 1},
          {"010", 1, "e", false, "110", false, false, 1},
          {"001", 1, "r", false, "001", false, false, 1},
          {"000", 2, "e", true, "110", true, true, 0},
      },
      {
          {"111", 0, "-", false, "-", false, false, 0},
          {"110", 1, "e", false, "110", false, false, 1},
          {"101", 0, "-", false, "-", false, false, 0},
          {"011", 0, "-", false, "-", false, false, 0},
          {"100", 1, "e", false, "110", false, false, 1},
          {"010", 2, "e", true, "110", true, true, 0},
          {"001", 1, "r", false, "001", false, false, 1},
          {"000", 3, "e", true, "110", true, true, 0},
      },
      {
          {"111", 0, "-", false, "-", false, false, 0},
          {"110", 1, "e", false, "110", false, false, 1},
          {"101", 0, "-", false, "-", false, false, 0},
          {"011", 1, "r", false, "011", false, false, 1},
          {"100", 1, "e", false, "110", false, false, 1},
          {"010", 3, "e", true, "110", true, true, 0},
          {"001", 2, "r", false, "001", true, false, 2},
          {"000", 4, "e", true, "110", true, true, 0},
      },
      {
          {"111", 0, "-", false, "-", false, false, 0},
          {"110", 2, "e", true, "110", false, false, 2},
          {"101", 0, "-", false, "-", false, false, 0},
          {"011", 1, "r", false, "011", false, false, 1},
          {"100", 2, "e", true, "110", false, false, 2},
          {"010", 4, "e", true, "110", true, true, 0},
          {"001", 2, "r", false, "001", true, false, 2},
          {"000", 5, "e", true, "110", true, true, 0},
      },
  };
  return tables;
}

// The c-pronunciation lattice arrives with amplitudes (1, 3, 2) on masks
// (101, 100, 010); only its arithmetic is reproducible, so the analogical
// set is fixtured directly.
inline am::AnalogicalSet ceiling_set() {
  am::AnalogicalSet aset;
  {
    am::AnalogicalSetEntry e;
    e.supra = am::BitMask::from_string("101");
    e.amplitude = 1;
    e.occurrence_indices = {0};
    e.outcome_counts = {{"s", 1}};
    aset.entries.push_back(e);
  }
  {
    am::AnalogicalSetEntry e;
    e.supra = am::BitMask::from_string("100");
    e.amplitude = 3;
    e.occurrence_indices = {0, 1, 2};
    e.outcome_counts = {{"s", 3}};
    aset.entries.push_back(e);
  }
  {
    am::AnalogicalSetEntry e;
    e.supra = am::BitMask::from_string("010");
    e.amplitude = 2;
    e.occurrence_indices = {3, 4};
    e.outcome_counts = {{"ch", 1}, {"k", 1}};
    aset.entries.push_back(e);
  }
  return aset;
}

// 8 s and 12 t, the 20-symbol estimation example
inline std::vector<am::Outcome> twenty_symbol_string() {
  return {"s", "s", "s", "t", "s", "t", "t", "t", "t", "t",
          "s", "t", "s", "t", "t", "t", "t", "s", "s", "t"};
}

}  // namespace fixtures
