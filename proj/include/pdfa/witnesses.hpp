#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "pdfa/alphabet.hpp"
#include "pdfa/partial_dfa.hpp"

namespace pdfa {

// Witness language families. Every generator returns a minimal DFA, takes its
// alphabet explicitly (symbols it does not use get no transitions) and
// throws InputError on parameters outside the family's range.

// n-state c-cycle with state 0 start and accepting, b-self-loops on states
// 0..k-1. Recognizes ((b*c)^k c^(n-k))* b*. Requires 1 <= k < n.
PartialDfa union_symbol_witness(std::size_t n, std::size_t k, char b, char c, const Alphabet& alphabet);

// Same cycle, with a self-loop on states 0..k_map[d]-1 for every symbol d in
// k_map. Requires d != c and 1 <= k_map[d] < n.
PartialDfa union_multi_witness(std::size_t n, const std::map<char, std::size_t>& k_map, char c,
                               const Alphabet& alphabet);

// n-state cycle on `cycle_sym` with a `loop_sym` self-loop on state 0 only:
// loop_sym* (loop_sym* cycle_sym^n)*, with tc = n + 1. Requires n >= 2.
PartialDfa union_total_witness(std::size_t n, char loop_sym, char cycle_sym, const Alphabet& alphabet);

// (b^n)* as an n-state cycle. Requires n >= 1 and b in the alphabet.
PartialDfa unary_cycle(std::size_t n, const Alphabet& alphabet = Alphabet("b"), char b = 'b');

// {b^n}: a chain of n + 1 states, only the last accepting.
PartialDfa unary_singleton(std::size_t n, const Alphabet& alphabet = Alphabet("b"), char b = 'b');

// a* b^(m-1): `a`-loop on the start state, then a chain of m - 1 `b`-steps
// ending in the only accepting state. tc = m.
PartialDfa chain_star_witness(std::size_t m, const Alphabet& alphabet, char a = 'a', char b = 'b');

// {epsilon}: one accepting state, no transitions.
PartialDfa epsilon_lang(const Alphabet& alphabet);

enum class WitnessFamily {
  kUnionSymbol,
  kUnionMulti,
  kUnionTotal,
  kUnaryCycle,
  kUnarySingleton,
  kChainStar,
  kEpsilon,
};

// Parameters for one witness. Fields irrelevant to the family are ignored.
struct WitnessSpec {
  WitnessFamily family = WitnessFamily::kEpsilon;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  std::map<char, std::size_t> k_map;
  char b = 'b';  // loop symbol (union families), chain symbol, unary symbol
  char c = 'c';  // cycle symbol
  char a = 'a';  // star symbol of chain_star
  Alphabet alphabet = Alphabet("abc");
};

PartialDfa make_witness(const WitnessSpec& spec);

// Kebab-case names used on the command line ("union-symbol", ...).
std::string to_string(WitnessFamily family);
WitnessFamily parse_witness_family(const std::string& name);

}  // namespace pdfa
