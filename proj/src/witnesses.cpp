#include "pdfa/witnesses.hpp"

#include <array>
#include <utility>

#include "pdfa/error.hpp"

namespace pdfa {
namespace {

SymbolIndex symbol_in(const Alphabet& alphabet, char symbol, const char* role) {
  auto i = alphabet.index_of(symbol);
  if (!i) {
    throw InputError(std::string(role) + " symbol '" + symbol + "' is not in alphabet {" + alphabet.symbols() + "}");
  }
  return *i;
}

PartialDfa cycle(std::size_t n, SymbolIndex c, const Alphabet& alphabet) {
  PartialDfa dfa(alphabet, n, 0);
  dfa.set_accepting(0);
  for (State q = 0; q < n; ++q) dfa.set_transition(q, c, static_cast<State>((q + 1) % n));
  return dfa;
}

constexpr std::array<std::pair<WitnessFamily, const char*>, 7> kFamilyNames{{
    {WitnessFamily::kUnionSymbol, "union-symbol"},
    {WitnessFamily::kUnionMulti, "union-multi"},
    {WitnessFamily::kUnionTotal, "union-total"},
    {WitnessFamily::kUnaryCycle, "unary-cycle"},
    {WitnessFamily::kUnarySingleton, "unary-singleton"},
    {WitnessFamily::kChainStar, "chain-star"},
    {WitnessFamily::kEpsilon, "epsilon"},
}};

}  // namespace

PartialDfa union_symbol_witness(std::size_t n, std::size_t k, char b, char c, const Alphabet& alphabet) {
  if (k < 1 || k >= n) throw InputError("union-symbol witness needs 1 <= k < n");
  if (b == c) throw InputError("loop and cycle symbols must differ");
  auto bi = symbol_in(alphabet, b, "loop");
  auto ci = symbol_in(alphabet, c, "cycle");
  PartialDfa dfa = cycle(n, ci, alphabet);
  for (State q = 0; q < k; ++q) dfa.set_transition(q, bi, q);
  return dfa;
}

PartialDfa union_multi_witness(std::size_t n, const std::map<char, std::size_t>& k_map, char c,
                               const Alphabet& alphabet) {
  if (n < 1) throw InputError("union-multi witness needs n >= 1");
  auto ci = symbol_in(alphabet, c, "cycle");
  PartialDfa dfa = cycle(n, ci, alphabet);
  for (const auto& [d, k] : k_map) {
    if (d == c) throw InputError("k-map must not mention the cycle symbol");
    if (k < 1 || k >= n) throw InputError(std::string("k for symbol '") + d + "' must satisfy 1 <= k < n");
    auto di = symbol_in(alphabet, d, "loop");
    for (State q = 0; q < k; ++q) dfa.set_transition(q, di, q);
  }
  return dfa;
}

PartialDfa union_total_witness(std::size_t n, char loop_sym, char cycle_sym, const Alphabet& alphabet) {
  if (n < 2) throw InputError("union-total witness needs n >= 2");
  if (loop_sym == cycle_sym) throw InputError("loop and cycle symbols must differ");
  auto li = symbol_in(alphabet, loop_sym, "loop");
  auto ci = symbol_in(alphabet, cycle_sym, "cycle");
  PartialDfa dfa = cycle(n, ci, alphabet);
  dfa.set_transition(0, li, 0);
  return dfa;
}

PartialDfa unary_cycle(std::size_t n, const Alphabet& alphabet, char b) {
  if (n < 1) throw InputError("unary cycle needs n >= 1");
  return cycle(n, symbol_in(alphabet, b, "cycle"), alphabet);
}

PartialDfa unary_singleton(std::size_t n, const Alphabet& alphabet, char b) {
  if (n < 1) throw InputError("unary singleton needs n >= 1");
  auto bi = symbol_in(alphabet, b, "chain");
  PartialDfa dfa(alphabet, n + 1, 0);
  for (State q = 0; q < n; ++q) dfa.set_transition(q, bi, q + 1);
  dfa.set_accepting(static_cast<State>(n));
  return dfa;
}

PartialDfa chain_star_witness(std::size_t m, const Alphabet& alphabet, char a, char b) {
  if (m < 1) throw InputError("chain-star witness needs m >= 1");
  auto ai = symbol_in(alphabet, a, "star");
  auto bi = symbol_in(alphabet, b, "chain");
  if (ai == bi) throw InputError("star and chain symbols must differ");
  PartialDfa dfa(alphabet, m, 0);
  dfa.set_transition(0, ai, 0);
  for (State q = 0; q + 1 < m; ++q) dfa.set_transition(q, bi, q + 1);
  dfa.set_accepting(static_cast<State>(m - 1));
  return dfa;
}

PartialDfa epsilon_lang(const Alphabet& alphabet) {
  PartialDfa dfa(alphabet, 1, 0);
  dfa.set_accepting(0);
  return dfa;
}

PartialDfa make_witness(const WitnessSpec& spec) {
  switch (spec.family) {
    case WitnessFamily::kUnionSymbol:
      return union_symbol_witness(spec.n, spec.k, spec.b, spec.c, spec.alphabet);
    case WitnessFamily::kUnionMulti:
      return union_multi_witness(spec.n, spec.k_map, spec.c, spec.alphabet);
    case WitnessFamily::kUnionTotal:
      return union_total_witness(spec.n, spec.b, spec.c, spec.alphabet);
    case WitnessFamily::kUnaryCycle:
      return unary_cycle(spec.n, spec.alphabet, spec.b);
    case WitnessFamily::kUnarySingleton:
      return unary_singleton(spec.n, spec.alphabet, spec.b);
    case WitnessFamily::kChainStar:
      return chain_star_witness(spec.m, spec.alphabet, spec.a, spec.b);
    case WitnessFamily::kEpsilon:
      return epsilon_lang(spec.alphabet);
  }
  throw InputError("unknown witness family");
}

std::string to_string(WitnessFamily family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "unknown";
}

WitnessFamily parse_witness_family(const std::string& name) {
  for (const auto& [f, family_name] : kFamilyNames) {
    if (name == family_name) return f;
  }
  throw InputError("unknown witness family '" + name + "'");
}

}  // namespace pdfa
