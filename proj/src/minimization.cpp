#include "pdfa/minimization.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "pdfa/error.hpp"
#include "relabel.hpp"

namespace pdfa {
namespace {

void require_same_alphabet(const PartialDfa& lhs, const PartialDfa& rhs) {
  if (lhs.alphabet() != rhs.alphabet()) {
    throw InputError("alphabet mismatch: {" + lhs.alphabet().symbols() + "} vs {" + rhs.alphabet().symbols() + "}");
  }
}

// Moore refinement over a complete DFA. Returns the block index of every
// state; blocks are numbered by their lowest member so runs are reproducible.
std::vector<std::size_t> moore_partition(const PartialDfa& complete) {
  const auto n = complete.state_count();
  const auto k = complete.alphabet().size();
  std::vector<std::size_t> block(n);
  for (State q = 0; q < n; ++q) block[q] = complete.is_accepting(q) ? 1 : 0;
  std::size_t block_count = 0;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> signature_to_block;
    std::vector<std::size_t> refined(n);
    std::vector<std::size_t> signature(k + 1);
    for (State q = 0; q < n; ++q) {
      signature[0] = block[q];
      for (SymbolIndex a = 0; a < k; ++a) signature[a + 1] = block[complete.raw_next(q, a)];
      auto [it, inserted] = signature_to_block.try_emplace(signature, signature_to_block.size());
      refined[q] = it->second;
    }
    std::size_t refined_count = signature_to_block.size();
    block = std::move(refined);
    if (refined_count == block_count) break;
    block_count = refined_count;
  }
  return block;
}

}  // namespace

CompletedDfa complete_with_sink(const PartialDfa& dfa) {
  if (dfa.is_complete()) return {dfa, std::nullopt};
  PartialDfa out = dfa;
  State sink = out.add_state();
  for (State q = 0; q < out.state_count(); ++q) {
    for (SymbolIndex a = 0; a < out.alphabet().size(); ++a) {
      if (out.raw_next(q, a) == kNoState) out.set_transition(q, a, sink);
    }
  }
  return {std::move(out), sink};
}

PartialDfa canonicalize(const PartialDfa& dfa) {
  if (dfa.start() >= dfa.state_count() || !is_connected(dfa)) {
    throw InputError("canonicalize requires a connected DFA");
  }
  return detail::relabel_breadth_first(dfa, std::vector<bool>(dfa.state_count(), true));
}

PartialDfa minimize(const PartialDfa& dfa) {
  PartialDfa trimmed = trim(dfa);
  if (trimmed.accepting().empty()) return empty_language(dfa.alphabet());
  auto [complete, sink] = complete_with_sink(trimmed);
  auto block = moore_partition(complete);
  std::size_t blocks = *std::max_element(block.begin(), block.end()) + 1;
  // A trim input has no dead state besides the sink, and the sink's block
  // contains nothing else.
  std::size_t dead_block = sink ? block[*sink] : blocks;

  PartialDfa quotient(dfa.alphabet(), blocks, static_cast<State>(block[complete.start()]));
  std::vector<bool> keep(blocks, false);
  for (State q = 0; q < complete.state_count(); ++q) {
    auto b = static_cast<State>(block[q]);
    if (b == dead_block) continue;
    keep[b] = true;
    if (complete.is_accepting(q)) quotient.set_accepting(b);
    for (SymbolIndex a = 0; a < complete.alphabet().size(); ++a) {
      auto t = block[complete.raw_next(q, a)];
      if (t != dead_block) quotient.set_transition(b, a, static_cast<State>(t));
    }
  }
  return detail::relabel_breadth_first(quotient, keep);
}

std::size_t nerode_class_count(const PartialDfa& dfa) {
  auto seen = reachable(dfa);
  PartialDfa connected = detail::relabel_breadth_first(dfa, seen);
  auto completed = complete_with_sink(connected).dfa;
  auto block = moore_partition(completed);
  return *std::max_element(block.begin(), block.end()) + 1;
}

std::size_t ComplexityReport::tc_of(char symbol) const {
  auto it = tc_per_symbol.find(symbol);
  return it == tc_per_symbol.end() ? 0 : it->second;
}

ComplexityReport complexity(const PartialDfa& dfa) {
  PartialDfa minimal = minimize(dfa);
  auto counts = transition_counts(minimal);
  ComplexityReport report;
  report.sc = minimal.state_count();
  report.tc = counts.total;
  report.tc_per_symbol = counts.per_symbol;
  report.nerode_classes = nerode_class_count(dfa);
  return report;
}

bool equivalent_by_minimization(const PartialDfa& lhs, const PartialDfa& rhs) {
  require_same_alphabet(lhs, rhs);
  return minimize(lhs) == minimize(rhs);
}

std::optional<std::string> distinguishing_word(const PartialDfa& lhs, const PartialDfa& rhs) {
  require_same_alphabet(lhs, rhs);
  const auto k = lhs.alphabet().size();
  // Index kNoState-equivalent "dead" as the last slot of each side.
  const std::size_t n1 = lhs.state_count() + 1;
  const std::size_t n2 = rhs.state_count() + 1;
  const State dead1 = static_cast<State>(n1 - 1);
  const State dead2 = static_cast<State>(n2 - 1);
  auto acc1 = [&](State p) { return p != dead1 && lhs.is_accepting(p); };
  auto acc2 = [&](State q) { return q != dead2 && rhs.is_accepting(q); };
  auto step1 = [&](State p, SymbolIndex a) {
    if (p == dead1) return dead1;
    State t = lhs.raw_next(p, a);
    return t == kNoState ? dead1 : t;
  };
  auto step2 = [&](State q, SymbolIndex a) {
    if (q == dead2) return dead2;
    State t = rhs.raw_next(q, a);
    return t == kNoState ? dead2 : t;
  };

  struct Visit {
    State p, q;
    std::size_t parent;
    char via;
  };
  std::vector<bool> seen(n1 * n2, false);
  std::vector<Visit> queue;
  queue.push_back({lhs.start(), rhs.start(), 0, 0});
  seen[lhs.start() * n2 + rhs.start()] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto [p, q, parent, via] = queue[head];
    if (acc1(p) != acc2(q)) {
      std::string word;
      for (std::size_t i = head; i != 0; i = queue[i].parent) word.push_back(queue[i].via);
      std::reverse(word.begin(), word.end());
      return word;
    }
    if (p == dead1 && q == dead2) continue;
    for (SymbolIndex a = 0; a < k; ++a) {
      State p2 = step1(p, a);
      State q2 = step2(q, a);
      if (!seen[p2 * n2 + q2]) {
        seen[p2 * n2 + q2] = true;
        queue.push_back({p2, q2, head, lhs.alphabet()[a]});
      }
    }
  }
  return std::nullopt;
}

bool equivalent(const PartialDfa& lhs, const PartialDfa& rhs) {
  bool by_pairs = !distinguishing_word(lhs, rhs).has_value();
  bool by_minimization = equivalent_by_minimization(lhs, rhs);
  if (by_pairs != by_minimization) {
    throw std::logic_error("equivalence procedures disagree");
  }
  return by_pairs;
}

}  // namespace pdfa
