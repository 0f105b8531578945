#pragma once

#include <cstddef>
#include <vector>

#include "pdfa/partial_dfa.hpp"

namespace pdfa {

// Component of a product state; kDead marks the padding state d.
inline constexpr State kDead = kNoState;

struct ProductTag {
  State left = kDead;
  State right = kDead;

  bool operator==(const ProductTag&) const = default;
};

// A product automaton together with the pair behind every state.
struct ProductDfa {
  PartialDfa dfa;
  std::vector<ProductTag> tags;
};

enum class UnionPadding {
  // Each operand gets a dead state d. d-rows are unreachable when the operand
  // is complete, and this is the reading under which the per-symbol count
  // formula (predicted_union_symbol_count) is exact for every input.
  kAlways,
  // d is added only to an operand with some undefined transition.
  kOnlyIfIncomplete,
};

// Cross product for L1 u L2 over Q1' x Q2', where Q_i' appends d as index
// |Q_i|. Pairs are numbered row-major. A transition on b exists when at least
// one component defines it; the other component moves to d. d itself has no
// transitions. The product is returned untrimmed.
ProductDfa union_product(const PartialDfa& a1, const PartialDfa& a2,
                         UnionPadding padding = UnionPadding::kAlways);

// t1b*t2b + t1b + t2b + t1b*(q2 - t2b) + t2b*(q1 - t1b): the number of
// b-transitions of union_product for operands with q_i states and t_ib
// b-transitions. Throws InputError unless t_ib <= q_i.
std::size_t predicted_union_symbol_count(std::size_t t1b, std::size_t t2b, std::size_t q1, std::size_t q2);

// Plain product over Q1 x Q2 with F1 x F2; b is defined iff both components
// define it, so #tr(B, b) = #tr(A1, b) * #tr(A2, b).
ProductDfa intersection_product(const PartialDfa& a1, const PartialDfa& a2);

// Adds an accepting sink d (index |Q|) that receives every undefined
// transition and loops on every symbol; accepting set (Q - F) u {d}. The
// result is complete, with (|Q| + 1) * |Sigma| transitions.
PartialDfa complement(const PartialDfa& a);

}  // namespace pdfa
