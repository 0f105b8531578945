#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pdfa/alphabet.hpp"
#include "pdfa/partial_dfa.hpp"

namespace pdfa {

// Enumeration is restricted to |Sigma| <= 3 and (n+1)^(n*|Sigma|) <= 2^24 raw
// transition tables for the largest size n. That admits 7 states over one
// symbol, 4 over two and 3 over three.
inline constexpr std::size_t kMaxEnumerationAlphabet = 3;
inline constexpr std::uint64_t kMaxRawTables = std::uint64_t{1} << 24;

bool enumeration_supported(std::size_t max_states, std::size_t alphabet_size) noexcept;

// Deterministic walk over every connected canonical partial DFA with at most
// max_states states, each isomorphism class once, ordered by (state count,
// transition table, accepting set). The table is compared row-major with
// "undefined" below every state; the accepting set by its bitmask value.
// A shard (index, count) yields the items whose stream position is congruent
// to index modulo count, so the union of all shards is the unsharded stream.
class EnumerationCursor {
 public:
  EnumerationCursor(std::size_t max_states, Alphabet alphabet, std::size_t shard_index = 0,
                    std::size_t shard_count = 1);

  std::optional<PartialDfa> next();

  // Stream position of the item most recently returned by next().
  std::uint64_t position() const noexcept { return position_ - 1; }

  std::size_t max_states() const noexcept { return max_states_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }

 private:
  bool advance();

  std::size_t max_states_;
  Alphabet alphabet_;
  std::size_t shard_index_;
  std::size_t shard_count_;
  std::size_t states_ = 0;
  std::vector<std::uint8_t> codes_;  // 0 = undefined, t + 1 = target t
  std::uint64_t mask_ = 0;
  bool table_valid_ = false;
  bool exhausted_ = false;
  std::uint64_t position_ = 0;
};

std::vector<PartialDfa> enumerate_dfas(std::size_t max_states, const Alphabet& alphabet);

// Uniform sample from the canonical connected DFAs with at most max_states
// states, by rejection over raw tables.
PartialDfa sample_connected_dfa(std::mt19937_64& rng, std::size_t max_states, const Alphabet& alphabet);

struct OracleResult {
  std::size_t min_total = 0;
  std::map<char, std::size_t> min_per_symbol;
  PartialDfa witness_dfa;       // first DFA in stream order reaching min_total
  std::size_t search_states = 0;
  std::uint64_t candidates = 0;  // equivalent DFAs found
};

// Exhaustive minimum of total and per-symbol transition counts over every
// enumerated DFA with at most max_states states recognizing L(target).
// max_states = 0 means sc(L) + 1. Throws InputError when the minimal DFA of
// the target does not fit or the search space is beyond the limits.
OracleResult brute_min_transitions(const PartialDfa& target, std::size_t max_states = 0);

struct MinimalityCounterexample {
  PartialDfa language;   // a smallest enumerated DFA for the language
  PartialDfa minimized;  // what the minimizer produced
  std::string reason;
};

struct MinimalityReport {
  bool pass = true;
  std::size_t max_states = 0;
  std::size_t search_states = 0;
  std::uint64_t dfas_enumerated = 0;
  std::size_t languages_checked = 0;
  std::size_t undefined_count_violations = 0;
  std::vector<MinimalityCounterexample> counterexamples;
};

using Minimizer = std::function<PartialDfa(const PartialDfa&)>;

// For every language recognized by a DFA with at most max_states states,
// compares the minimizer's per-symbol and total transition counts with the
// exhaustive minimum over DFAs with at most max_states + 1 states, and checks
// that sc - tc_b equals the number of undefined b-transitions of the minimal
// DFA. Languages are told apart by their accepted words up to a length that
// separates any two DFAs of the searched size, so the check does not rely on
// the minimizer. The search is split into `shards` concurrent shards.
MinimalityReport verify_lemma1(std::size_t max_states, const Alphabet& alphabet, const Minimizer& minimizer = {},
                           std::size_t shards = 1);

}  // namespace pdfa
