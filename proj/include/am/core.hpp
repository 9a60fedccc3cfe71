#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace am {

// Variables and outcomes are opaque tokens compared by equality; there is no
// feature-distance or weighting semantics anywhere in the engine.
using Token = std::string;
using Outcome = std::string;

struct Occurrence {
  std::vector<Token> vars;
  Outcome outcome;
};

struct Dataset {
  // arity 0 means "not yet known" (legal for empty datasets); validate()
  // checks every occurrence against the given context's length anyway.
  int arity = 0;
  std::vector<Occurrence> occurrences;

  std::size_t size() const { return occurrences.size(); }
};

struct GivenContext {
  std::vector<Token> vars;

  int arity() const { return static_cast<int>(vars.size()); }
};

inline constexpr int kDefaultMaxVars = 24;
// BitMask packs into a 32-bit word and 2^n cells must stay addressable.
inline constexpr int kHardMaxVars = 31;

struct EngineConfig {
  int max_vars = kDefaultMaxVars;
  bool retain_include_matrix = true;
  std::uint64_t seed = 0;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An n-variable 0/1 vector. Serves three roles: supracontext identity,
// intersect of an occurrence with the given context, and contain register.
// Variable 0 is the most significant printed position, so the mask over
// variables (v0,v1,v2) = (1,1,0) renders as "110" and has value 0b110.
struct BitMask {
  std::uint32_t bits = 0;
  int width = 0;

  static BitMask zeros(int width) {
    check_width(width);
    return BitMask{0, width};
  }

  static BitMask ones(int width) {
    check_width(width);
    return BitMask{(1u << width) - 1u, width};
  }

  static BitMask from_string(const std::string& s) {
    check_width(static_cast<int>(s.size()));
    BitMask m{0, static_cast<int>(s.size())};
    for (int i = 0; i < m.width; ++i) {
      if (s[i] == '1')
        m.set_var(i);
      else if (s[i] != '0')
        throw std::invalid_argument("not a 0/1 mask: '" + s + "'");
    }
    return m;
  }

  bool var(int i) const { return (bits >> (width - 1 - i)) & 1u; }

  void set_var(int i) { bits |= 1u << (width - 1 - i); }

  int popcount() const { return std::popcount(bits); }

  std::uint32_t value() const { return bits; }

  std::string str() const {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int i = 0; i < width; ++i)
      if (var(i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
  }

  friend bool operator==(const BitMask&, const BitMask&) = default;

 private:
  static void check_width(int w) {
    if (w < 0 || w > kHardMaxVars)
      throw CapacityError("mask width " + std::to_string(w) + " outside [0, " +
                          std::to_string(kHardMaxVars) + "]");
  }
};

inline void require_same_width(const BitMask& a, const BitMask& b) {
  if (a.width != b.width)
    throw ValidationError("mask width mismatch: " + std::to_string(a.width) + " vs " +
                          std::to_string(b.width));
}

// true iff every variable active in `supra` is also active in `intersect`,
// i.e. the supracontext's variable set is a subset of the intersect's.
inline bool mask_includes(const BitMask& supra, const BitMask& intersect) {
  require_same_width(supra, intersect);
  return (supra.bits & ~intersect.bits) == 0;
}

// Bit i is set iff the occurrence matches the given context at variable i.
inline BitMask compute_intersect(const Occurrence& occ, const GivenContext& given) {
  if (occ.vars.size() != given.vars.size())
    throw ValidationError("arity mismatch: occurrence has " + std::to_string(occ.vars.size()) +
                          " variables, given context has " + std::to_string(given.vars.size()));
  BitMask m = BitMask::zeros(given.arity());
  for (int i = 0; i < m.width; ++i)
    if (occ.vars[static_cast<std::size_t>(i)] == given.vars[static_cast<std::size_t>(i)])
      m.set_var(i);
  return m;
}

// All 2^n supracontexts in canonical order: descending popcount, then
// descending value. For n=3 that is 111 110 101 011 100 010 001 000.
inline std::vector<BitMask> enumerate_supracontexts(int n, int max_vars = kDefaultMaxVars) {
  if (n < 0 || n > max_vars || n > kHardMaxVars)
    throw CapacityError("variable count " + std::to_string(n) + " exceeds capacity " +
                        std::to_string(std::min(max_vars, kHardMaxVars)));
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<std::vector<std::uint32_t>> by_popcount(static_cast<std::size_t>(n) + 1);
  for (std::uint64_t v = count; v-- > 0;)
    by_popcount[static_cast<std::size_t>(std::popcount(v))].push_back(
        static_cast<std::uint32_t>(v));
  std::vector<BitMask> order;
  order.reserve(count);
  for (std::size_t pc = by_popcount.size(); pc-- > 0;)
    for (std::uint32_t v : by_popcount[pc]) order.push_back(BitMask{v, n});
  return order;
}

struct Violation {
  enum class Kind { validation, capacity };
  Kind kind = Kind::validation;
  std::string message;
};

inline std::vector<Violation> validate(const Dataset& dataset, const GivenContext& given,
                                       const EngineConfig& cfg = {}) {
  std::vector<Violation> out;
  const auto flag = [&](Violation::Kind kind, std::string msg) {
    out.push_back(Violation{kind, std::move(msg)});
  };

  if (cfg.max_vars < 1)
    flag(Violation::Kind::validation, "max_vars must be >= 1");

  const int n = given.arity();
  if (n > cfg.max_vars || n > kHardMaxVars)
    flag(Violation::Kind::capacity,
         "given context has " + std::to_string(n) + " variables, capacity is " +
             std::to_string(std::min(cfg.max_vars, kHardMaxVars)));
  for (int i = 0; i < n; ++i)
    if (given.vars[static_cast<std::size_t>(i)].empty())
      flag(Violation::Kind::validation,
           "given context variable " + std::to_string(i) + " is empty");

  if (dataset.arity != 0 && dataset.arity != n)
    flag(Violation::Kind::validation,
         "dataset arity " + std::to_string(dataset.arity) + " != given context length " +
             std::to_string(n));

  for (std::size_t k = 0; k < dataset.occurrences.size(); ++k) {
    const Occurrence& occ = dataset.occurrences[k];
    if (static_cast<int>(occ.vars.size()) != n)
      flag(Violation::Kind::validation,
           "occurrence " + std::to_string(k) + " has " + std::to_string(occ.vars.size()) +
               " variables, expected " + std::to_string(n));
    for (std::size_t i = 0; i < occ.vars.size(); ++i)
      if (occ.vars[i].empty())
        flag(Violation::Kind::validation, "occurrence " + std::to_string(k) + " variable " +
                                              std::to_string(i) + " is empty");
    if (occ.outcome.empty())
      flag(Violation::Kind::validation,
           "occurrence " + std::to_string(k) + " has an empty outcome");
  }
  return out;
}

// throws CapacityError when any violation is capacity-kind, else ValidationError
inline void require_valid(const Dataset& dataset, const GivenContext& given,
                          const EngineConfig& cfg = {}) {
  const std::vector<Violation> violations = validate(dataset, given, cfg);
  if (violations.empty()) return;
  std::string joined;
  bool capacity = false;
  for (const Violation& v : violations) {
    if (!joined.empty()) joined += "; ";
    joined += v.message;
    capacity = capacity || v.kind == Violation::Kind::capacity;
  }
  if (capacity) throw CapacityError(joined);
  throw ValidationError(joined);
}

}  // namespace am
