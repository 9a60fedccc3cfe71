#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "am/lattice.hpp"
#include "am/revgate.hpp"

using am::and_via_ccn;
using am::ccn_gate;
using am::ccn_gate_word;
using am::n_gate;
using am::reversibility_check;

TEST_CASE("n-gate flips and is an involution") {
  CHECK(n_gate(false) == true);
  CHECK(n_gate(true) == false);
  CHECK(n_gate(n_gate(false)) == false);
  CHECK(n_gate(n_gate(true)) == true);
}

TEST_CASE("ccn-gate truth table") {
  // the six rows without both controls set are fixed points
  for (std::uint32_t w : {0u, 1u, 2u, 3u, 4u, 5u}) CHECK(ccn_gate_word(w) == w);
  CHECK(ccn_gate_word(0b110) == 0b111);
  CHECK(ccn_gate_word(0b111) == 0b110);

  const auto out = ccn_gate(true, true, false);
  CHECK(out == std::array<bool, 3>{true, true, true});
  CHECK(ccn_gate(false, true, true) == std::array<bool, 3>{false, true, true});
}

TEST_CASE("ccn-gate is an involution on all 8 inputs") {
  for (std::uint32_t w = 0; w < 8; ++w) CHECK(ccn_gate_word(ccn_gate_word(w)) == w);
}

TEST_CASE("and via ccn") {
  CHECK(and_via_ccn(true, true) == true);
  CHECK(and_via_ccn(true, false) == false);
  CHECK(and_via_ccn(false, true) == false);
  CHECK(and_via_ccn(false, false) == false);
}

TEST_CASE("reversibility check") {
  CHECK(reversibility_check(3, am::ccn_gate_word));
  CHECK(reversibility_check(1, am::n_gate_word));
  CHECK(reversibility_check(2, [](std::uint32_t w) { return w; }));

  // a plain and-gate (two inputs, one output padded with a constant) merges
  // three inputs onto one output word
  CHECK_FALSE(reversibility_check(2, [](std::uint32_t w) {
    const bool a = (w >> 1) & 1u;
    const bool b = w & 1u;
    return static_cast<std::uint32_t>(a && b) << 1;
  }));
}

TEST_CASE("contain/reverse-contain bridge restores the all-ones register") {
  std::mt19937_64 gen(17);
  for (int round = 0; round < 10000; ++round) {
    const int n = 1 + static_cast<int>(gen() % 12);
    const am::BitMask supra{static_cast<std::uint32_t>(gen() & ((1u << n) - 1)), n};
    const am::BitMask inter{static_cast<std::uint32_t>(gen() & ((1u << n) - 1)), n};
    const am::BitMask contain = am::apply_contain(supra, inter);
    CHECK(am::reverse_contain(contain, supra, inter) == am::BitMask::ones(n));
  }
}
