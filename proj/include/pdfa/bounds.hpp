#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdfa/partial_dfa.hpp"

namespace pdfa {

// ---- closed-form evaluators ------------------------------------------------

// Per-symbol union bound from the b-transition complexities tb_i and state
// complexities s_i of the operands:
//   tb1*tb2 + tb1*(1 + s2 - tb2) + tb2*(1 + s1 - tb1)
// which equals k1*n2 + k2*n1 - k1*k2 + k1 + k2 with k = tb, n = s. Both forms
// are evaluated and compared. Requires tb_i <= s_i.
std::size_t union_symbol_upper(std::size_t tb1, std::size_t tb2, std::size_t s1, std::size_t s2);

// n1*n2 + n1 + n2 states suffice for the union of an n1- and an n2-state
// incomplete DFA. Requires n_i >= 1.
std::size_t union_state_upper(std::size_t n1, std::size_t n2);

// 2*(t1*t2 + t1 + t2).
std::size_t union_total_upper(std::size_t t1, std::size_t t2);
// t1*t2 + t1 + t2 - 1 (0 when t1 = t2 = 0): the three-letter lower bound.
std::size_t union_total_lower(std::size_t t1, std::size_t t2);
// t1*t2 + t1 + t2 - 1: upper bound when both minimal DFAs have a complete cycle symbol.
std::size_t union_cycle_upper(std::size_t t1, std::size_t t2);

struct ConjectureBound {
  std::size_t value = 0;  // t1*t2 + t1 + t2
  bool applicable = false;  // conjectured only for t1, t2 >= 2
};
ConjectureBound conjecture_bound(std::size_t t1, std::size_t t2);

// t1*t2 for unary languages. Throws InapplicableBound when t1 < 2 or t2 < 2
// (tc(b u (b^n)*) exceeds tc(b) * tc((b^n)*) = n).
std::size_t unary_union_upper(std::size_t t1, std::size_t t2);

std::size_t intersection_upper(std::size_t t1, std::size_t t2);
std::size_t intersection_symbol_upper(std::size_t tb1, std::size_t tb2);
// |Sigma| * (t + 2).
std::size_t complement_upper(std::size_t sigma_size, std::size_t t);

// ---- measured checks -------------------------------------------------------

enum class BoundId {
  kUnionSymbolTight,
  kUnionStateTight,
  kUnionTotalLower,
  kUnionCycleUpper,
  kUnaryUnionTight,
  kUnaryException,
  kIntersectionTight,
  kIntersectionSymbolTight,
  kComplementTight,
  kComplementSymbolBlowup,
  kConjectureSmall,
  kUnionConstructionCount,
  kUnionSymbolUpper,
  kUnionTotalUpper,
  kIntersectionConstructionCount,
  kIntersectionUpper,
  kComplementUpper,
};

// EQUAL: measured equals the formula. WITHIN_BOUND: strictly below an upper
// bound. VIOLATION: above an upper bound, or differs from a value claimed to
// be exact. FLAGGED: differs from a stated reference value that is reported
// for comparison only.
enum class Relation { kEqual, kWithinBound, kViolation, kFlagged };

using Params = std::vector<std::pair<std::string, std::size_t>>;

struct BoundCheckReport {
  BoundId bound_id = BoundId::kUnionSymbolTight;
  Params params;
  std::size_t formula_value = 0;
  std::size_t measured_value = 0;
  Relation relation = Relation::kEqual;
  std::string details;
  // (label, .pdfa rendering) of the minimized automata behind the measurement.
  std::vector<std::pair<std::string, std::string>> artifacts;
};

std::string to_string(BoundId id);
std::string to_string(Relation relation);
BoundId parse_bound_id(const std::string& name);
std::vector<BoundId> all_bound_ids();

// True for the ids checked on seeded random DFA pairs. Their parameters are
// seed, samples, max_states (default 4) and max_alphabet (default 3).
bool is_sampled(BoundId id);

// Names of the parameters a bound takes, in rendering order.
std::vector<std::string> bound_parameters(BoundId id);

// Builds the witnesses (or samples), applies the operation, minimizes and
// compares against the closed form. Throws InputError on missing or
// out-of-range parameters, including non-coprime sizes where tightness
// requires relatively prime values.
BoundCheckReport check_bound(BoundId id, const Params& params);

struct SampledPair {
  PartialDfa first;
  PartialDfa second;
};

// Seeded pairs over a shared alphabet "a", "ab" or "abc" (size drawn
// uniformly from 1..max_alphabet), each DFA uniform over canonical connected
// partial DFAs with at most max_states states.
std::vector<SampledPair> sample_pairs(std::uint64_t seed, std::size_t count, std::size_t max_states = 4,
                                      std::size_t max_alphabet = 3);

inline constexpr std::uint64_t kDefaultSeed = 20100815;

// Every tightness family for sizes up to max_n plus the sampled soundness
// checks, sorted by bound id then parameters.
std::vector<BoundCheckReport> run_suite(std::size_t max_n, std::uint64_t seed = kDefaultSeed,
                                        std::size_t samples = 200);

// `bound_id param=val ... formula=F measured=M verdict=V`
std::string render_line(const BoundCheckReport& report);
// Aligned plain-text table with a summary line.
std::string render_table(const std::vector<BoundCheckReport>& reports);

}  // namespace pdfa
