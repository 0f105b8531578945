#pragma once

#include <vector>

#include "pdfa/partial_dfa.hpp"

namespace pdfa::detail {

// Restricts `dfa` to the states flagged in `keep` (start must be kept) and
// renumbers them in breadth-first discovery order, exploring symbols in
// alphabet order. Kept states not reachable through kept states are dropped.
PartialDfa relabel_breadth_first(const PartialDfa& dfa, const std::vector<bool>& keep);

}  // namespace pdfa::detail
