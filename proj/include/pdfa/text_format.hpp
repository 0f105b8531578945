#pragma once

#include <string>
#include <string_view>

#include "pdfa/partial_dfa.hpp"

namespace pdfa {

// Line-oriented `.pdfa` format:
//
//   # comment
//   alphabet a b c
//   states 3
//   start 0
//   accept 0 2
//   0 a 1
//
// `alphabet` must come first; `states` before anything that names a state.
// `accept` may be omitted or empty. Throws ParseError with the line number.
PartialDfa parse_dfa(std::string_view text);

// Canonical rendering: header lines, then transitions sorted by source state
// and alphabet order.
std::string render_dfa(const PartialDfa& dfa);

// Graphviz digraph; accepting states are double circles, the start state gets
// an arrow from an invisible node.
std::string render_dot(const PartialDfa& dfa, std::string_view name = "pdfa");

}  // namespace pdfa
