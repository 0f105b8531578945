#include "pdfa/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "pdfa/error.hpp"
#include "pdfa/minimization.hpp"

namespace pdfa {
namespace {

std::uint64_t raw_table_count(std::size_t states, std::size_t alphabet_size) {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < states * alphabet_size; ++i) {
    if (count > kMaxRawTables) return kMaxRawTables + 1;
    count *= states + 1;
  }
  return count;
}

// A transition table under enumeration: codes[q * k + a] is 0 for undefined
// and t + 1 for target t.
struct Table {
  std::size_t states = 1;
  std::size_t k = 1;
  std::vector<std::uint8_t> codes;

  State target(State q, SymbolIndex a) const {
    auto c = codes[q * k + a];
    return c == 0 ? kNoState : static_cast<State>(c - 1);
  }

  // Breadth-first discovery from 0 visits states exactly in index order and
  // reaches all of them.
  bool canonical() const {
    std::size_t discovered = 1;
    for (std::size_t q = 0; q < states; ++q) {
      if (q >= discovered) return false;
      for (std::size_t a = 0; a < k; ++a) {
        auto c = codes[q * k + a];
        if (c == 0) continue;
        std::size_t t = c - 1;
        if (t > discovered) return false;
        if (t == discovered) ++discovered;
      }
    }
    return discovered == states;
  }

  // Lexicographic successor; false on wrap-around.
  bool increment() {
    for (std::size_t i = codes.size(); i-- > 0;) {
      if (codes[i] < states) {
        ++codes[i];
        return true;
      }
      codes[i] = 0;
    }
    return false;
  }

  void reset(std::size_t n) {
    states = n;
    codes.assign(n * k, 0);
  }

  std::size_t count_symbol(SymbolIndex a) const {
    std::size_t c = 0;
    for (std::size_t q = 0; q < states; ++q) c += codes[q * k + a] != 0;
    return c;
  }

  PartialDfa to_dfa(const Alphabet& alphabet, std::uint64_t mask) const {
    PartialDfa dfa(alphabet, states, 0);
    for (State q = 0; q < states; ++q) {
      if (mask >> q & 1) dfa.set_accepting(q);
      for (SymbolIndex a = 0; a < k; ++a) {
        State t = target(q, a);
        if (t != kNoState) dfa.set_transition(q, a, t);
      }
    }
    return dfa;
  }
};

// Steps to the next canonical table in enumeration order (growing the state
// count when a size is exhausted). Returns false past max_states.
bool next_canonical(Table& table, std::size_t max_states, bool include_current) {
  if (include_current && table.canonical()) return true;
  for (;;) {
    if (!table.increment()) {
      if (table.states + 1 > max_states) return false;
      table.reset(table.states + 1);
    }
    if (table.canonical()) return true;
  }
}

void require_supported(std::size_t max_states, const Alphabet& alphabet) {
  if (!enumeration_supported(max_states, alphabet.size())) {
    throw InputError("enumeration of " + std::to_string(max_states) + "-state DFAs over " +
                     std::to_string(alphabet.size()) + " symbols is beyond the supported limits");
  }
}

// Words of length <= max_length in shortlex order form a complete k-ary tree;
// node j has children j * k + a + 1.
std::size_t word_tree_size(std::size_t k, std::size_t max_length) {
  std::size_t size = 0;
  std::size_t level = 1;
  for (std::size_t i = 0; i <= max_length; ++i) {
    size += level;
    level *= k;
  }
  return size;
}

template <class Step>
std::vector<State> word_tree_states(std::size_t nodes, std::size_t k, State start, Step step) {
  std::vector<State> at(nodes, kNoState);
  at[0] = start;
  for (std::size_t j = 0; j < nodes; ++j) {
    for (std::size_t a = 0; a < k; ++a) {
      std::size_t child = j * k + a + 1;
      if (child >= nodes) return at;
      at[child] = at[j] == kNoState ? kNoState : step(at[j], a);
    }
  }
  return at;
}

using Signature = std::vector<std::uint64_t>;

struct SignatureHash {
  std::size_t operator()(const Signature& s) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : s) h = (h ^ w) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

Signature accepted_words(const PartialDfa& dfa, std::size_t nodes) {
  const auto k = dfa.alphabet().size();
  auto at = word_tree_states(nodes, k, dfa.start(), [&](State q, std::size_t a) { return dfa.raw_next(q, a); });
  Signature sig((nodes + 63) / 64, 0);
  for (std::size_t j = 0; j < nodes; ++j) {
    if (at[j] != kNoState && dfa.is_accepting(at[j])) sig[j / 64] |= std::uint64_t{1} << (j % 64);
  }
  return sig;
}

struct LanguageRecord {
  std::size_t min_total = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> min_per_symbol;
  // Smallest-position DFA with at most the verified state count.
  std::uint64_t rep_position = std::numeric_limits<std::uint64_t>::max();
  std::size_t rep_states = 0;
  std::vector<std::uint8_t> rep_codes;
  std::uint64_t rep_mask = 0;
};

using LanguageMap = std::unordered_map<Signature, LanguageRecord, SignatureHash>;

void merge_into(LanguageMap& into, LanguageMap&& from) {
  for (auto& [sig, rec] : from) {
    auto [it, inserted] = into.try_emplace(sig, std::move(rec));
    if (inserted) continue;
    auto& dst = it->second;
    dst.min_total = std::min(dst.min_total, rec.min_total);
    for (std::size_t a = 0; a < dst.min_per_symbol.size(); ++a) {
      dst.min_per_symbol[a] = std::min(dst.min_per_symbol[a], rec.min_per_symbol[a]);
    }
    if (rec.rep_position < dst.rep_position) {
      dst.rep_position = rec.rep_position;
      dst.rep_states = rec.rep_states;
      dst.rep_codes = std::move(rec.rep_codes);
      dst.rep_mask = rec.rep_mask;
    }
  }
}

struct ShardOutcome {
  LanguageMap languages;
  std::uint64_t enumerated = 0;
};

// One shard of the exhaustive pass: canonical tables whose ordinal is
// congruent to `shard` modulo `shards`, with every accepting set.
ShardOutcome scan_shard(std::size_t search_states, std::size_t verified_states, std::size_t k,
                        std::size_t nodes, std::size_t shard, std::size_t shards) {
  ShardOutcome out;
  Table table;
  table.k = k;
  table.reset(1);
  const std::size_t sig_words = (nodes + 63) / 64;
  std::uint64_t position = 0;
  std::uint64_t ordinal = 0;
  bool have = next_canonical(table, search_states, true);
  while (have) {
    const std::uint64_t masks = std::uint64_t{1} << table.states;
    if (ordinal++ % shards == shard) {
      auto at = word_tree_states(nodes, k, 0, [&](State q, std::size_t a) { return table.target(q, a); });
      std::vector<Signature> reach(table.states, Signature(sig_words, 0));
      for (std::size_t j = 0; j < nodes; ++j) {
        if (at[j] != kNoState) reach[at[j]][j / 64] |= std::uint64_t{1} << (j % 64);
      }
      std::vector<std::size_t> per_symbol(k);
      std::size_t total = 0;
      for (std::size_t a = 0; a < k; ++a) total += per_symbol[a] = table.count_symbol(a);
      Signature sig(sig_words);
      for (std::uint64_t mask = 0; mask < masks; ++mask) {
        std::fill(sig.begin(), sig.end(), 0);
        for (std::size_t q = 0; q < table.states; ++q) {
          if (mask >> q & 1) {
            for (std::size_t w = 0; w < sig_words; ++w) sig[w] |= reach[q][w];
          }
        }
        auto [it, inserted] = out.languages.try_emplace(sig);
        auto& rec = it->second;
        if (inserted) rec.min_per_symbol.assign(k, std::numeric_limits<std::size_t>::max());
        rec.min_total = std::min(rec.min_total, total);
        for (std::size_t a = 0; a < k; ++a) rec.min_per_symbol[a] = std::min(rec.min_per_symbol[a], per_symbol[a]);
        if (table.states <= verified_states && position + mask < rec.rep_position) {
          rec.rep_position = position + mask;
          rec.rep_states = table.states;
          rec.rep_codes = table.codes;
          rec.rep_mask = mask;
        }
        ++out.enumerated;
      }
    }
    position += masks;
    have = next_canonical(table, search_states, false);
  }
  return out;
}

}  // namespace

bool enumeration_supported(std::size_t max_states, std::size_t alphabet_size) noexcept {
  return max_states >= 1 && alphabet_size >= 1 && alphabet_size <= kMaxEnumerationAlphabet &&
         raw_table_count(max_states, alphabet_size) <= kMaxRawTables;
}

EnumerationCursor::EnumerationCursor(std::size_t max_states, Alphabet alphabet, std::size_t shard_index,
                                     std::size_t shard_count)
    : max_states_(max_states), alphabet_(std::move(alphabet)), shard_index_(shard_index), shard_count_(shard_count) {
  require_supported(max_states_, alphabet_);
  if (shard_count_ == 0 || shard_index_ >= shard_count_) throw InputError("shard index must be below shard count");
}

bool EnumerationCursor::advance() {
  if (exhausted_) return false;
  if (!table_valid_) {
    states_ = 1;
    codes_.assign(alphabet_.size(), 0);
    table_valid_ = true;
    mask_ = 0;
    Table t{states_, alphabet_.size(), codes_};
    if (!next_canonical(t, max_states_, true)) return !(exhausted_ = true);
    states_ = t.states;
    codes_ = std::move(t.codes);
    return true;
  }
  if (++mask_ < (std::uint64_t{1} << states_)) return true;
  mask_ = 0;
  Table t{states_, alphabet_.size(), std::move(codes_)};
  if (!next_canonical(t, max_states_, false)) return !(exhausted_ = true);
  states_ = t.states;
  codes_ = std::move(t.codes);
  return true;
}

std::optional<PartialDfa> EnumerationCursor::next() {
  while (advance()) {
    std::uint64_t here = position_++;
    if (here % shard_count_ == shard_index_) {
      Table t{states_, alphabet_.size(), codes_};
      return t.to_dfa(alphabet_, mask_);
    }
  }
  return std::nullopt;
}

std::vector<PartialDfa> enumerate_dfas(std::size_t max_states, const Alphabet& alphabet) {
  std::vector<PartialDfa> out;
  EnumerationCursor cursor(max_states, alphabet);
  while (auto dfa = cursor.next()) out.push_back(std::move(*dfa));
  return out;
}

PartialDfa sample_connected_dfa(std::mt19937_64& rng, std::size_t max_states, const Alphabet& alphabet) {
  if (max_states < 1 || max_states > 8) throw InputError("sampling supports 1..8 states");
  const auto k = alphabet.size();
  std::vector<double> weights;
  for (std::size_t n = 1; n <= max_states; ++n) {
    double w = 1;
    for (std::size_t i = 0; i < n * k; ++i) w *= static_cast<double>(n + 1);
    for (std::size_t i = 0; i < n; ++i) w *= 2;
    weights.push_back(w);
  }
  std::discrete_distribution<std::size_t> pick_size(weights.begin(), weights.end());
  for (;;) {
    Table t;
    t.k = k;
    t.reset(pick_size(rng) + 1);
    std::uniform_int_distribution<int> pick_code(0, static_cast<int>(t.states));
    for (auto& c : t.codes) c = static_cast<std::uint8_t>(pick_code(rng));
    std::uniform_int_distribution<std::uint64_t> pick_mask(0, (std::uint64_t{1} << t.states) - 1);
    std::uint64_t mask = pick_mask(rng);
    if (t.canonical()) return t.to_dfa(alphabet, mask);
  }
}

OracleResult brute_min_transitions(const PartialDfa& target, std::size_t max_states) {
  const auto sc = minimize(target).state_count();
  const auto cap = max_states == 0 ? sc + 1 : max_states;
  if (sc > cap) {
    throw InputError("the minimal DFA has " + std::to_string(sc) + " states, more than the search cap " +
                     std::to_string(cap));
  }
  require_supported(cap, target.alphabet());
  const auto& alphabet = target.alphabet();
  const auto k = alphabet.size();
  const auto live = coaccessible(target);
  const std::size_t nt = target.state_count();

  OracleResult result;
  result.search_states = cap;
  result.min_total = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> min_per_symbol(k, std::numeric_limits<std::size_t>::max());

  Table table;
  table.k = k;
  table.reset(1);
  // 0 = unconstrained, 1 = must reject, 2 = must accept.
  std::vector<std::uint8_t> need;
  std::vector<bool> seen;
  std::vector<std::pair<State, State>> queue;
  for (bool have = next_canonical(table, cap, true); have; have = next_canonical(table, cap, false)) {
    const std::size_t n = table.states;
    const State dead_c = static_cast<State>(n);
    const State dead_t = static_cast<State>(nt);
    need.assign(n, 0);
    seen.assign((n + 1) * (nt + 1), false);
    queue.clear();
    queue.emplace_back(0, target.start());
    seen[target.start()] = true;
    bool ok = true;
    for (std::size_t head = 0; ok && head < queue.size(); ++head) {
      auto [p, q] = queue[head];
      bool target_live = q != dead_t && live[q];
      if (p == dead_c) {
        ok = !target_live;
        continue;
      }
      std::uint8_t want = (q != dead_t && target.is_accepting(q)) ? 2 : 1;
      if (need[p] != 0 && need[p] != want) {
        ok = false;
        break;
      }
      need[p] = want;
      for (SymbolIndex a = 0; a < k; ++a) {
        State p2 = table.target(p, a);
        if (p2 == kNoState) p2 = dead_c;
        State q2 = q == dead_t ? dead_t : target.raw_next(q, a);
        if (q2 == kNoState) q2 = dead_t;
        auto slot = p2 * (nt + 1) + q2;
        if (!seen[slot]) {
          seen[slot] = true;
          queue.emplace_back(p2, q2);
        }
      }
    }
    if (!ok) continue;
    std::uint64_t mask = 0;
    for (std::size_t q = 0; q < n; ++q) {
      if (need[q] == 2) mask |= std::uint64_t{1} << q;
    }
    ++result.candidates;
    std::size_t total = 0;
    for (std::size_t a = 0; a < k; ++a) {
      auto c = table.count_symbol(a);
      total += c;
      min_per_symbol[a] = std::min(min_per_symbol[a], c);
    }
    if (total < result.min_total) {
      result.min_total = total;
      result.witness_dfa = table.to_dfa(alphabet, mask);
    }
  }
  if (result.candidates == 0) throw std::logic_error("exhaustive search found no DFA for the target language");
  for (std::size_t a = 0; a < k; ++a) result.min_per_symbol[alphabet[a]] = min_per_symbol[a];
  return result;
}

MinimalityReport verify_lemma1(std::size_t max_states, const Alphabet& alphabet, const Minimizer& minimizer,
                           std::size_t shards) {
  const std::size_t search_states = max_states + 1;
  require_supported(search_states, alphabet);
  if (shards == 0) throw InputError("need at least one shard");
  const auto k = alphabet.size();
  // Two DFAs with at most N states (N + 1 once completed) that agree on all
  // words of length <= 2N recognize the same language.
  const std::size_t nodes = word_tree_size(k, 2 * search_states);

  std::vector<ShardOutcome> outcomes(shards);
  if (shards == 1) {
    outcomes[0] = scan_shard(search_states, max_states, k, nodes, 0, 1);
  } else {
    std::vector<std::jthread> workers;
    for (std::size_t s = 0; s < shards; ++s) {
      workers.emplace_back([&, s] { outcomes[s] = scan_shard(search_states, max_states, k, nodes, s, shards); });
    }
  }
  LanguageMap languages;
  MinimalityReport report;
  report.max_states = max_states;
  report.search_states = search_states;
  for (auto& o : outcomes) {
    report.dfas_enumerated += o.enumerated;
    merge_into(languages, std::move(o.languages));
  }

  // Check in stream order of the representatives so reports are reproducible.
  std::vector<const std::pair<const Signature, LanguageRecord>*> order;
  for (const auto& entry : languages) {
    if (entry.second.rep_position != std::numeric_limits<std::uint64_t>::max()) order.push_back(&entry);
  }
  std::sort(order.begin(), order.end(),
            [](auto* x, auto* y) { return x->second.rep_position < y->second.rep_position; });

  const Minimizer& run = minimizer ? minimizer : Minimizer(minimize);
  for (const auto* entry : order) {
    const auto& [sig, rec] = *entry;
    Table rep{rec.rep_states, k, rec.rep_codes};
    PartialDfa language = rep.to_dfa(alphabet, rec.rep_mask);
    PartialDfa minimal = run(language);
    ++report.languages_checked;
    auto fail = [&](std::string reason) {
      report.counterexamples.push_back({language, minimal, std::move(reason)});
    };
    if (accepted_words(minimal, nodes) != sig) {
      fail("minimizer output recognizes a different language");
      continue;
    }
    auto counts = transition_counts(minimal);
    if (counts.total != rec.min_total) {
      fail("total transitions " + std::to_string(counts.total) + " but exhaustive minimum is " +
           std::to_string(rec.min_total));
    }
    for (SymbolIndex a = 0; a < k; ++a) {
      auto have = counts.of(alphabet[a]);
      if (have != rec.min_per_symbol[a]) {
        fail(std::string("#tr(A, ") + alphabet[a] + ") = " + std::to_string(have) + " but exhaustive minimum is " +
             std::to_string(rec.min_per_symbol[a]));
      }
      std::size_t undefined = 0;
      for (State q = 0; q < minimal.state_count(); ++q) undefined += minimal.raw_next(q, a) == kNoState;
      if (minimal.state_count() < rec.min_per_symbol[a] ||
          minimal.state_count() - rec.min_per_symbol[a] != undefined) {
        ++report.undefined_count_violations;
      }
    }
  }
  report.pass = report.counterexamples.empty() && report.undefined_count_violations == 0;
  return report;
}

}  // namespace pdfa
