#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdfa/alphabet.hpp"

namespace pdfa {

using State = std::uint32_t;
inline constexpr State kNoState = std::numeric_limits<State>::max();

// An incomplete deterministic finite automaton. The transition table is dense
// (state_count x |alphabet|) with kNoState marking an undefined entry, so
// determinism holds by construction. Setters do not range-check targets,
// start or accepting indices; use validate() on untrusted values.
class PartialDfa {
 public:
  PartialDfa() = default;
  PartialDfa(Alphabet alphabet, std::size_t state_count, State start = 0);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return state_count_; }
  State start() const noexcept { return start_; }

  // Sorted, without duplicates.
  const std::vector<State>& accepting() const noexcept { return accepting_; }
  bool is_accepting(State q) const noexcept;

  std::optional<State> next(State q, SymbolIndex a) const;
  // kNoState when undefined; no optional overhead for hot loops.
  State raw_next(State q, SymbolIndex a) const { return table_[q * alphabet_.size() + a]; }
  bool is_complete() const noexcept;

  void set_start(State q) noexcept { start_ = q; }
  void set_accepting(State q, bool accepting = true);
  void set_transition(State from, SymbolIndex a, State to);
  void set_transition(State from, char symbol, State to);
  void clear_transition(State from, SymbolIndex a);

  // Appends a fresh state with no transitions and returns its index.
  State add_state();

  bool operator==(const PartialDfa&) const = default;

 private:
  std::size_t slot(State q, SymbolIndex a) const;

  Alphabet alphabet_;
  std::size_t state_count_ = 0;
  State start_ = 0;
  std::vector<State> accepting_;
  std::vector<State> table_;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// #tr(A) and #tr(A, b). per_symbol has an entry for every alphabet symbol.
struct TransitionCounts {
  std::size_t total = 0;
  std::map<char, std::size_t> per_symbol;

  std::size_t of(char symbol) const;
  bool operator==(const TransitionCounts&) const = default;
};

ValidationReport validate(const PartialDfa& dfa);

// Throws InputError if any symbol of `word` is outside the alphabet.
bool accepts(const PartialDfa& dfa, std::string_view word);

// Indicator vectors indexed by state.
std::vector<bool> reachable(const PartialDfa& dfa);
std::vector<bool> coaccessible(const PartialDfa& dfa);

bool is_connected(const PartialDfa& dfa);

// The canonical DFA for the empty language: one non-accepting start state.
PartialDfa empty_language(const Alphabet& alphabet);

// Keeps reachable and coaccessible states, renumbered breadth-first with
// symbols explored in alphabet order.
PartialDfa trim(const PartialDfa& dfa);

TransitionCounts transition_counts(const PartialDfa& dfa);

// |Q| - 1 <= #tr(A) <= |Sigma| * |Q| for a connected DFA. Throws InputError
// when the DFA is not connected.
bool check_size_bounds(const PartialDfa& dfa);

}  // namespace pdfa
