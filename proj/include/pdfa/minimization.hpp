#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "pdfa/partial_dfa.hpp"

namespace pdfa {

struct CompletedDfa {
  PartialDfa dfa;
  std::optional<State> sink;  // absent when the input was already complete
};

// Redirects every undefined transition to a fresh non-accepting sink that
// loops on every symbol. A complete input is returned unchanged.
CompletedDfa complete_with_sink(const PartialDfa& dfa);

// Breadth-first renumbering of a connected DFA. Two connected DFAs are
// isomorphic iff their canonical forms compare equal. Throws InputError on a
// disconnected input.
PartialDfa canonicalize(const PartialDfa& dfa);

// The minimal incomplete DFA: trim, complete with a sink, Moore partition
// refinement, drop the dead class, canonical numbering. The result has no
// dead state, so undefined transitions stand in for it. The empty language
// maps to empty_language().
PartialDfa minimize(const PartialDfa& dfa);

// Number of classes of the right congruence of L(dfa), i.e. the state count
// of the minimal complete DFA.
std::size_t nerode_class_count(const PartialDfa& dfa);

struct ComplexityReport {
  std::size_t sc = 0;
  std::size_t tc = 0;
  std::map<char, std::size_t> tc_per_symbol;
  std::size_t nerode_classes = 0;

  std::size_t tc_of(char symbol) const;
  bool operator==(const ComplexityReport&) const = default;
};

// sc, tc and tc_b read off minimize(dfa).
ComplexityReport complexity(const PartialDfa& dfa);

// Language equality, decided by two independent procedures (canonical
// minimal forms, and a synchronized walk over state pairs with implicit dead
// states). Throws std::logic_error if they disagree, InputError if the
// alphabets differ.
bool equivalent(const PartialDfa& lhs, const PartialDfa& rhs);

bool equivalent_by_minimization(const PartialDfa& lhs, const PartialDfa& rhs);

// Returns a shortest word in the symmetric difference, or nullopt when the
// languages coincide.
std::optional<std::string> distinguishing_word(const PartialDfa& lhs, const PartialDfa& rhs);

}  // namespace pdfa
