#include "pdfa/partial_dfa.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "pdfa/error.hpp"
#include "relabel.hpp"

namespace pdfa {

PartialDfa::PartialDfa(Alphabet alphabet, std::size_t state_count, State start)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      start_(start),
      table_(state_count * alphabet_.size(), kNoState) {}

bool PartialDfa::is_accepting(State q) const noexcept {
  return std::binary_search(accepting_.begin(), accepting_.end(), q);
}

std::size_t PartialDfa::slot(State q, SymbolIndex a) const {
  if (q >= state_count_ || a >= alphabet_.size()) {
    throw InputError("transition slot (" + std::to_string(q) + ", " + std::to_string(a) +
                     ") outside a " + std::to_string(state_count_) + "-state table");
  }
  return q * alphabet_.size() + a;
}

std::optional<State> PartialDfa::next(State q, SymbolIndex a) const {
  State t = table_[slot(q, a)];
  if (t == kNoState) return std::nullopt;
  return t;
}

bool PartialDfa::is_complete() const noexcept {
  return std::find(table_.begin(), table_.end(), kNoState) == table_.end();
}

void PartialDfa::set_accepting(State q, bool accepting) {
  auto it = std::lower_bound(accepting_.begin(), accepting_.end(), q);
  bool present = it != accepting_.end() && *it == q;
  if (accepting && !present) accepting_.insert(it, q);
  if (!accepting && present) accepting_.erase(it);
}

void PartialDfa::set_transition(State from, SymbolIndex a, State to) { table_[slot(from, a)] = to; }

void PartialDfa::set_transition(State from, char symbol, State to) {
  set_transition(from, alphabet_.require(symbol), to);
}

void PartialDfa::clear_transition(State from, SymbolIndex a) { table_[slot(from, a)] = kNoState; }

State PartialDfa::add_state() {
  table_.resize(table_.size() + alphabet_.size(), kNoState);
  return static_cast<State>(state_count_++);
}

std::size_t TransitionCounts::of(char symbol) const {
  auto it = per_symbol.find(symbol);
  return it == per_symbol.end() ? 0 : it->second;
}

ValidationReport validate(const PartialDfa& dfa) {
  ValidationReport report;
  auto fail = [&](std::string msg) { report.violations.push_back(std::move(msg)); };
  const auto n = dfa.state_count();
  const auto& sigma = dfa.alphabet();
  if (sigma.empty()) fail("alphabet is empty");
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma.symbols().find(sigma[i], i + 1) != std::string::npos) {
      fail(std::string("duplicate alphabet symbol '") + sigma[i] + "'");
    }
  }
  if (n == 0) fail("automaton has no states");
  if (dfa.start() >= n) fail("start state " + std::to_string(dfa.start()) + " out of range");
  for (State q : dfa.accepting()) {
    if (q >= n) fail("accepting state " + std::to_string(q) + " out of range");
  }
  for (State q = 0; q < n; ++q) {
    for (SymbolIndex a = 0; a < sigma.size(); ++a) {
      State t = dfa.raw_next(q, a);
      if (t != kNoState && t >= n) {
        fail("transition " + std::to_string(q) + " " + sigma[a] + " -> " + std::to_string(t) +
             " targets a state out of range");
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

bool accepts(const PartialDfa& dfa, std::string_view word) {
  std::vector<SymbolIndex> letters;
  letters.reserve(word.size());
  for (char ch : word) letters.push_back(dfa.alphabet().require(ch));
  State q = dfa.start();
  for (SymbolIndex a : letters) {
    q = dfa.raw_next(q, a);
    if (q == kNoState) return false;
  }
  return dfa.is_accepting(q);
}

std::vector<bool> reachable(const PartialDfa& dfa) {
  std::vector<bool> seen(dfa.state_count(), false);
  if (dfa.start() >= dfa.state_count()) return seen;
  std::vector<State> stack{dfa.start()};
  seen[dfa.start()] = true;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (SymbolIndex a = 0; a < dfa.alphabet().size(); ++a) {
      State t = dfa.raw_next(q, a);
      if (t != kNoState && !seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
  }
  return seen;
}

std::vector<bool> coaccessible(const PartialDfa& dfa) {
  const auto n = dfa.state_count();
  std::vector<std::vector<State>> preds(n);
  for (State q = 0; q < n; ++q) {
    for (SymbolIndex a = 0; a < dfa.alphabet().size(); ++a) {
      State t = dfa.raw_next(q, a);
      if (t != kNoState) preds[t].push_back(q);
    }
  }
  std::vector<bool> live(n, false);
  std::vector<State> stack;
  for (State f : dfa.accepting()) {
    if (f < n && !live[f]) {
      live[f] = true;
      stack.push_back(f);
    }
  }
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (State p : preds[q]) {
      if (!live[p]) {
        live[p] = true;
        stack.push_back(p);
      }
    }
  }
  return live;
}

bool is_connected(const PartialDfa& dfa) {
  auto seen = reachable(dfa);
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

PartialDfa empty_language(const Alphabet& alphabet) { return PartialDfa(alphabet, 1, 0); }

PartialDfa trim(const PartialDfa& dfa) {
  auto keep = reachable(dfa);
  auto live = coaccessible(dfa);
  for (std::size_t q = 0; q < keep.size(); ++q) keep[q] = keep[q] && live[q];
  if (dfa.start() >= dfa.state_count() || !keep[dfa.start()]) return empty_language(dfa.alphabet());
  return detail::relabel_breadth_first(dfa, keep);
}

TransitionCounts transition_counts(const PartialDfa& dfa) {
  TransitionCounts counts;
  for (SymbolIndex a = 0; a < dfa.alphabet().size(); ++a) {
    std::size_t c = 0;
    for (State q = 0; q < dfa.state_count(); ++q) c += dfa.raw_next(q, a) != kNoState;
    counts.per_symbol[dfa.alphabet()[a]] = c;
    counts.total += c;
  }
  return counts;
}

bool check_size_bounds(const PartialDfa& dfa) {
  if (!is_connected(dfa)) throw InputError("size bounds require a connected DFA");
  const auto n = dfa.state_count();
  const auto t = transition_counts(dfa).total;
  return n - 1 <= t && t <= dfa.alphabet().size() * n;
}

namespace detail {

PartialDfa relabel_breadth_first(const PartialDfa& dfa, const std::vector<bool>& keep) {
  const auto k = dfa.alphabet().size();
  std::vector<State> order;
  std::vector<State> new_index(dfa.state_count(), kNoState);
  new_index[dfa.start()] = 0;
  order.push_back(dfa.start());
  for (std::size_t head = 0; head < order.size(); ++head) {
    State q = order[head];
    for (SymbolIndex a = 0; a < k; ++a) {
      State t = dfa.raw_next(q, a);
      if (t != kNoState && keep[t] && new_index[t] == kNoState) {
        new_index[t] = static_cast<State>(order.size());
        order.push_back(t);
      }
    }
  }
  PartialDfa out(dfa.alphabet(), order.size(), 0);
  for (State i = 0; i < order.size(); ++i) {
    State q = order[i];
    if (dfa.is_accepting(q)) out.set_accepting(i);
    for (SymbolIndex a = 0; a < k; ++a) {
      State t = dfa.raw_next(q, a);
      if (t != kNoState && new_index[t] != kNoState) out.set_transition(i, a, new_index[t]);
    }
  }
  return out;
}

}  // namespace detail
}  // namespace pdfa
