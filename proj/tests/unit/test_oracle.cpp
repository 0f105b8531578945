#include <doctest.h>

#include <algorithm>
#include <set>
#include <tuple>

#include "helpers.hpp"
#include "pdfa/error.hpp"
#include "pdfa/minimization.hpp"
#include "pdfa/oracle.hpp"
#include "pdfa/witnesses.hpp"

using namespace pdfa;

namespace {

using Key = std::tuple<std::size_t, std::vector<State>, std::vector<State>>;

// Generate every raw table, start and accepting set, keep the connected ones
// and dedupe by a breadth-first relabelling written here from scratch.
std::size_t naive_count(std::size_t max_states, const std::string& symbols) {
  const std::size_t k = symbols.size();
  std::set<Key> seen;
  for (std::size_t n = 1; n <= max_states; ++n) {
    std::size_t cells = n * k;
    std::vector<std::size_t> code(cells, 0);  // 0 = undefined
    for (;;) {
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        for (std::size_t s = 0; s < n; ++s) {
          std::vector<State> order{static_cast<State>(s)};
          std::vector<State> index(n, kNoState);
          index[s] = 0;
          for (std::size_t i = 0; i < order.size(); ++i)
            for (std::size_t a = 0; a < k; ++a) {
              auto c = code[order[i] * k + a];
              if (c && index[c - 1] == kNoState) {
                index[c - 1] = static_cast<State>(order.size());
                order.push_back(static_cast<State>(c - 1));
              }
            }
          if (order.size() != n) continue;
          std::vector<State> table;
          for (auto q : order)
            for (std::size_t a = 0; a < k; ++a) {
              auto c = code[q * k + a];
              table.push_back(c ? index[c - 1] : kNoState);
            }
          std::vector<State> acc;
          for (std::size_t q = 0; q < n; ++q)
            if (mask >> q & 1) acc.push_back(index[q]);
          std::sort(acc.begin(), acc.end());
          seen.insert({n, table, acc});
        }
      }
      std::size_t i = 0;
      while (i < cells && ++code[i] > n) code[i++] = 0;
      if (i == cells) break;
    }
  }
  return seen.size();
}

PartialDfa broken_minimizer(const PartialDfa& d) {
  auto m = minimize(d);
  // drop one transition whenever there is one to drop
  for (State q = 0; q < m.state_count(); ++q)
    for (std::size_t a = 0; a < m.alphabet().size(); ++a)
      if (m.next(q, a)) {
        m.clear_transition(q, a);
        return m;
      }
  return m;
}

}  // namespace

TEST_CASE("enumeration counts against a naive generator") {
  CHECK(enumerate_dfas(1, Alphabet("a")).size() == 4);
  CHECK(naive_count(1, "a") == 4);
  CHECK(enumerate_dfas(2, Alphabet("a")).size() == naive_count(2, "a"));
  CHECK(naive_count(2, "a") == 16);
  CHECK(enumerate_dfas(2, Alphabet("ab")).size() == naive_count(2, "ab"));
  CHECK(naive_count(2, "ab") == 188);
  CHECK(enumerate_dfas(3, Alphabet("a")).size() == naive_count(3, "a"));
  CHECK(naive_count(3, "a") == 48);
  CHECK(enumerate_dfas(2, Alphabet("abc")).size() == naive_count(2, "abc"));
}

TEST_CASE("enumeration order and canonical items") {
  auto all = enumerate_dfas(3, Alphabet("ab"));
  std::set<std::string> distinct;
  std::size_t last_n = 0;
  for (const auto& d : all) {
    CHECK(canonicalize(d) == d);
    CHECK(d.state_count() >= last_n);
    last_n = d.state_count();
    distinct.insert(std::to_string(d.state_count()) + "|" + std::to_string(d.accepting().size()) + "|" +
                    [&] {
                      std::string s;
                      for (State q = 0; q < d.state_count(); ++q)
                        for (std::size_t a = 0; a < 2; ++a) s += std::to_string(d.raw_next(q, a)) + ",";
                      for (auto q : d.accepting()) s += "a" + std::to_string(q);
                      return s;
                    }());
  }
  CHECK(distinct.size() == all.size());
}

TEST_CASE("shards partition the stream") {
  Alphabet ab("ab");
  auto full = enumerate_dfas(3, ab);
  std::vector<std::optional<PartialDfa>> merged(full.size());
  for (std::size_t s = 0; s < 4; ++s) {
    EnumerationCursor cur(3, ab, s, 4);
    while (auto d = cur.next()) {
      CHECK(cur.position() % 4 == s);
      REQUIRE(cur.position() < merged.size());
      CHECK_FALSE(merged[cur.position()].has_value());
      merged[cur.position()] = *d;
    }
  }
  for (std::size_t i = 0; i < full.size(); ++i) CHECK(merged[i] == full[i]);
}

TEST_CASE("limits") {
  CHECK(enumeration_supported(7, 1));
  CHECK_FALSE(enumeration_supported(8, 1));
  CHECK(enumeration_supported(4, 2));
  CHECK_FALSE(enumeration_supported(5, 2));
  CHECK(enumeration_supported(3, 3));
  CHECK_FALSE(enumeration_supported(4, 3));
  CHECK_FALSE(enumeration_supported(1, 4));
  CHECK_THROWS_AS(enumerate_dfas(5, Alphabet("ab")), InputError);
}

TEST_CASE("sampling is reproducible and canonical") {
  auto a = testing::random_dfas(9, 50, 4, "ab");
  auto b = testing::random_dfas(9, 50, 4, "ab");
  CHECK(a == b);
  for (const auto& d : a) {
    CHECK(canonicalize(d) == d);
    CHECK(d.state_count() <= 4);
  }
}

TEST_CASE("sampling covers every small DFA") {
  Alphabet a("a");
  auto all = enumerate_dfas(2, a);
  std::set<std::string> hit;
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    auto d = sample_connected_dfa(rng, 2, a);
    for (std::size_t j = 0; j < all.size(); ++j)
      if (all[j] == d) hit.insert(std::to_string(j));
  }
  CHECK(hit.size() == all.size());
}

TEST_CASE("brute force minimum transitions") {
  auto single = brute_min_transitions(unary_singleton(2));
  CHECK(single.min_total == 2);
  CHECK(single.search_states == 4);
  CHECK(equivalent(single.witness_dfa, unary_singleton(2)));

  Alphabet bc("bc");
  auto c31 = brute_min_transitions(union_symbol_witness(3, 1, 'b', 'c', bc));
  CHECK(c31.min_total == 4);
  CHECK(c31.min_per_symbol.at('b') == 1);
  CHECK(c31.min_per_symbol.at('c') == 3);
  CHECK(c31.candidates > 0);

  auto eps = brute_min_transitions(epsilon_lang(Alphabet("ab")));
  CHECK(eps.min_total == 0);

  CHECK_THROWS_AS(brute_min_transitions(unary_cycle(3), 2), InputError);
  CHECK_THROWS_AS(brute_min_transitions(union_symbol_witness(4, 1, 'b', 'c', bc)), InputError);
}

TEST_CASE("minimizer matches the exhaustive minimum on random targets") {
  for (const auto& d : testing::random_dfas(13, 40, 3, "ab")) {
    auto m = minimize(d);
    if (m.state_count() > 3) continue;
    auto o = brute_min_transitions(d, 4);
    auto c = transition_counts(m);
    CHECK(o.min_total == c.total);
    for (auto& [s, n] : o.min_per_symbol) CHECK(n == c.of(s));
  }
}

TEST_CASE("verify_lemma1") {
  auto r = verify_lemma1(2, Alphabet("ab"));
  CHECK(r.pass);
  CHECK(r.search_states == 3);
  CHECK(r.counterexamples.empty());
  CHECK(r.undefined_count_violations == 0);
  CHECK(r.languages_checked > 0);

  auto u = verify_lemma1(4, Alphabet("b"));
  CHECK(u.pass);

  auto sharded = verify_lemma1(2, Alphabet("ab"), {}, 3);
  CHECK(sharded.pass);
  CHECK(sharded.dfas_enumerated == r.dfas_enumerated);
  CHECK(sharded.languages_checked == r.languages_checked);
}

TEST_CASE("verify_lemma1 catches a faulty minimizer") {
  auto r = verify_lemma1(2, Alphabet("ab"), broken_minimizer);
  CHECK_FALSE(r.pass);
  REQUIRE_FALSE(r.counterexamples.empty());
  CHECK_FALSE(r.counterexamples.front().reason.empty());

  // a minimizer that keeps redundant states is caught by the counts
  auto padded = [](const PartialDfa& d) {
    auto m = minimize(d);
    auto copy = m;
    State extra = copy.add_state();
    for (std::size_t a = 0; a < copy.alphabet().size(); ++a)
      if (auto t = m.next(m.start(), a)) copy.set_transition(extra, a, *t);
    if (m.is_accepting(m.start())) copy.set_accepting(extra);
    // start self-loops now go through the duplicate
    for (std::size_t a = 0; a < copy.alphabet().size(); ++a)
      if (m.next(m.start(), a) == m.start()) copy.set_transition(m.start(), a, extra);
    return copy;
  };
  auto p = verify_lemma1(2, Alphabet("ab"), padded);
  CHECK_FALSE(p.pass);
}
