#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "am/core.hpp"
#include "am/io.hpp"
#include "fixtures.hpp"

using am::BitMask;
using am::compute_intersect;
using am::enumerate_supracontexts;
using am::mask_includes;

TEST_CASE("BitMask renders most-significant variable first") {
  BitMask m = BitMask::from_string("110");
  CHECK(m.str() == "110");
  CHECK(m.var(0));
  CHECK(m.var(1));
  CHECK_FALSE(m.var(2));
  CHECK(m.value() == 0b110u);
  CHECK(BitMask::ones(3).str() == "111");
  CHECK(BitMask::zeros(3).str() == "000");
  CHECK(BitMask::zeros(0).str().empty());
  CHECK_THROWS_AS(BitMask::from_string("1x0"), std::invalid_argument);
}

TEST_CASE("compute_intersect marks positions of token equality") {
  const am::Dataset data = fixtures::dataset312();
  const am::GivenContext given = fixtures::given312();

  CHECK(compute_intersect(data.occurrences[0], given).str() == "110");  // 310e
  CHECK(compute_intersect(data.occurrences[1], given).str() == "001");  // 032r
  CHECK(compute_intersect(data.occurrences[2], given).str() == "010");  // 210r
  CHECK(compute_intersect(data.occurrences[3], given).str() == "011");  // 212r
  CHECK(compute_intersect(data.occurrences[4], given).str() == "110");  // 311r

  const am::Occurrence same{{"3", "1", "2"}, "r"};
  CHECK(compute_intersect(same, given).str() == "111");

  const am::Occurrence wrong{{"3", "1"}, "r"};
  CHECK_THROWS_AS(compute_intersect(wrong, given), am::ValidationError);
}

TEST_CASE("compute_intersect bit i reflects position i exactly") {
  std::mt19937_64 gen(7);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(gen() % 8);
    am::GivenContext given;
    am::Occurrence occ;
    for (int i = 0; i < n; ++i) {
      given.vars.push_back(std::to_string(gen() % 3));
      occ.vars.push_back(std::to_string(gen() % 3));
    }
    occ.outcome = "o";
    const BitMask inter = compute_intersect(occ, given);
    for (int i = 0; i < n; ++i)
      CHECK(inter.var(i) ==
            (occ.vars[static_cast<std::size_t>(i)] == given.vars[static_cast<std::size_t>(i)]));
  }
}

TEST_CASE("mask_includes basics") {
  const auto m = [](const char* s) { return BitMask::from_string(s); };
  CHECK(mask_includes(m("110"), m("110")));
  CHECK_FALSE(mask_includes(m("111"), m("110")));
  CHECK(mask_includes(m("000"), m("110")));
  CHECK(mask_includes(m("000"), m("000")));
  CHECK(mask_includes(m("010"), m("011")));
  CHECK_THROWS_AS(mask_includes(m("01"), m("011")), am::ValidationError);
}

TEST_CASE("mask_includes is a partial order") {
  std::mt19937_64 gen(11);
  const int n = 6;
  const auto random_mask = [&] {
    return BitMask{static_cast<std::uint32_t>(gen() & ((1u << n) - 1)), n};
  };
  for (int round = 0; round < 500; ++round) {
    const BitMask a = random_mask();
    const BitMask b = random_mask();
    const BitMask c = random_mask();
    CHECK(mask_includes(a, a));
    if (mask_includes(a, b) && mask_includes(b, a)) CHECK(a == b);
    if (mask_includes(a, b) && mask_includes(b, c)) CHECK(mask_includes(a, c));
  }
}

TEST_CASE("enumerate_supracontexts follows canonical order") {
  const auto order3 = enumerate_supracontexts(3);
  std::vector<std::string> rendered;
  for (const BitMask& m : order3) rendered.push_back(m.str());
  CHECK(rendered == std::vector<std::string>{"111", "110", "101", "011", "100", "010", "001",
                                             "000"});

  const auto order0 = enumerate_supracontexts(0);
  REQUIRE(order0.size() == 1);
  CHECK(order0[0].width == 0);

  const auto order1 = enumerate_supracontexts(1);
  REQUIRE(order1.size() == 2);
  CHECK(order1[0].str() == "1");
  CHECK(order1[1].str() == "0");

  CHECK_THROWS_AS(enumerate_supracontexts(25), am::CapacityError);
  CHECK_THROWS_AS(enumerate_supracontexts(-1), am::CapacityError);
}

TEST_CASE("enumerate_supracontexts yields 2^n distinct masks with full and empty present") {
  for (int n = 0; n <= 8; ++n) {
    const auto order = enumerate_supracontexts(n);
    CHECK(order.size() == (std::size_t{1} << n));
    std::set<std::uint32_t> values;
    for (const BitMask& m : order) values.insert(m.value());
    CHECK(values.size() == order.size());
    CHECK(values.count(0) == 1);
    CHECK(values.count((1u << n) - 1) == 1);
  }
}

TEST_CASE("subsets of an intersect number exactly 2^popcount") {
  std::mt19937_64 gen(13);
  for (int round = 0; round < 50; ++round) {
    const int n = 1 + static_cast<int>(gen() % 6);
    const BitMask inter{static_cast<std::uint32_t>(gen() & ((1u << n) - 1)), n};
    std::size_t count = 0;
    for (const BitMask& supra : enumerate_supracontexts(n))
      if (mask_includes(supra, inter)) ++count;
    CHECK(count == (std::size_t{1} << inter.popcount()));
  }
}

TEST_CASE("validate accepts the worked dataset and flags broken inputs") {
  const am::Dataset data = fixtures::dataset312();
  const am::GivenContext given = fixtures::given312();
  CHECK(am::validate(data, given).empty());

  SECTION("arity mismatch") {
    const am::GivenContext narrow = am::parse_given("3 1");
    const auto violations = am::validate(data, narrow);
    REQUIRE_FALSE(violations.empty());
    for (const auto& v : violations) CHECK(v.kind == am::Violation::Kind::validation);
  }

  SECTION("capacity") {
    am::GivenContext wide;
    for (int i = 0; i < 30; ++i) wide.vars.push_back("a");
    am::Dataset empty;
    am::EngineConfig cfg;
    cfg.max_vars = 24;
    const auto violations = am::validate(empty, wide, cfg);
    REQUIRE_FALSE(violations.empty());
    CHECK(violations[0].kind == am::Violation::Kind::capacity);
    CHECK_THROWS_AS(am::require_valid(empty, wide, cfg), am::CapacityError);
  }

  SECTION("empty tokens") {
    am::Dataset bad = data;
    bad.occurrences[2].vars[1] = "";
    CHECK_FALSE(am::validate(bad, given).empty());
    am::Dataset bad_outcome = data;
    bad_outcome.occurrences[0].outcome = "";
    CHECK_FALSE(am::validate(bad_outcome, given).empty());
  }

  SECTION("empty dataset is legal") {
    am::Dataset empty;
    CHECK(am::validate(empty, given).empty());
  }
}
