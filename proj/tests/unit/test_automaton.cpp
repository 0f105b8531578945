#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "pdfa/boolean_ops.hpp"
#include "pdfa/error.hpp"
#include "pdfa/partial_dfa.hpp"
#include "pdfa/witnesses.hpp"

using namespace pdfa;

namespace {

// States visited by some word of length <= max_len; independent of reachable().
std::set<State> visited_by_words(const PartialDfa& d, std::size_t max_len) {
  std::set<State> seen;
  testing::for_each_word(d.alphabet().symbols(), max_len, [&](const std::string& w) {
    State q = d.start();
    for (char ch : w) {
      q = d.raw_next(q, *d.alphabet().index_of(ch));
      if (q == kNoState) return;
    }
    seen.insert(q);
  });
  return seen;
}

}  // namespace

TEST_CASE("alphabet rejects empty and repeated symbols") {
  CHECK_THROWS_AS(Alphabet(""), InputError);
  CHECK_THROWS_AS(Alphabet("aba"), InputError);
  Alphabet s("bc");
  CHECK(s.size() == 2);
  CHECK(s.index_of('c') == 1u);
  CHECK_FALSE(s.index_of('a').has_value());
  CHECK_THROWS_AS(s.require('a'), InputError);
}

TEST_CASE("validate") {
  Alphabet s("ab");
  PartialDfa one(s, 1);
  one.set_accepting(0);
  CHECK(validate(one).ok);

  PartialDfa bad_target(s, 2);
  bad_target.set_transition(0, 'a', 5);
  auto r = validate(bad_target);
  CHECK_FALSE(r.ok);
  CHECK(r.violations.size() == 1);

  PartialDfa bad_start(s, 2, 7);
  CHECK_FALSE(validate(bad_start).ok);

  PartialDfa bad_accept(s, 2);
  bad_accept.set_accepting(4);
  CHECK_FALSE(validate(bad_accept).ok);
}

TEST_CASE("accepts") {
  Alphabet bc("bc");
  auto c31 = union_symbol_witness(3, 1, 'b', 'c', bc);
  CHECK(accepts(c31, "ccc"));
  CHECK(accepts(c31, ""));
  CHECK(accepts(c31, "bbcccb"));
  CHECK_FALSE(accepts(c31, "cb"));
  CHECK_FALSE(accepts(c31, "cc"));
  CHECK_THROWS_AS(accepts(c31, "ca"), InputError);

  auto eps = epsilon_lang(Alphabet("a"));
  CHECK(accepts(eps, ""));
  CHECK_FALSE(accepts(eps, "a"));
}

TEST_CASE("reachable and coaccessible") {
  Alphabet a("a");
  PartialDfa d(a, 3);
  d.set_transition(0, 'a', 1);
  d.set_accepting(0);
  // state 2 is isolated; state 1 reaches nothing accepting
  auto r = reachable(d);
  CHECK(r == std::vector<bool>{true, true, false});
  auto c = coaccessible(d);
  CHECK(c == std::vector<bool>{true, false, false});
  CHECK_FALSE(is_connected(d));

  auto cyc = unary_cycle(4, a, 'a');
  CHECK(is_connected(cyc));
  CHECK(reachable(cyc) == std::vector<bool>(4, true));
  CHECK(coaccessible(cyc) == std::vector<bool>(4, true));
}

TEST_CASE("reachable agrees with word enumeration") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto d = testing::random_raw_dfa(rng, 1 + i % 5, i % 2 ? "ab" : "abc");
    auto r = reachable(d);
    auto seen = visited_by_words(d, d.state_count());
    for (State q = 0; q < d.state_count(); ++q) CHECK(r[q] == (seen.count(q) == 1));
  }
}

TEST_CASE("union product padding pair is unreachable and trim removes it") {
  Alphabet abc("abc");
  auto a1 = union_total_witness(2, 'a', 'c', abc);
  auto a2 = union_total_witness(3, 'b', 'c', abc);
  auto p = union_product(a1, a2, UnionPadding::kOnlyIfIncomplete);
  REQUIRE(p.dfa.state_count() == 12);
  State dd = kNoState;
  for (State q = 0; q < p.tags.size(); ++q)
    if (p.tags[q] == ProductTag{kDead, kDead}) dd = q;
  REQUIRE(dd != kNoState);
  auto seen = visited_by_words(p.dfa, 12);
  CHECK(seen.count(dd) == 0);
  CHECK(seen.size() == 11);
  CHECK_FALSE(reachable(p.dfa)[dd]);
  CHECK(trim(p.dfa).state_count() == 11);
}

TEST_CASE("trim") {
  Alphabet ab("ab");
  PartialDfa none(ab, 3);
  none.set_transition(0, 'a', 1);
  none.set_transition(1, 'b', 2);
  auto t = trim(none);
  CHECK(t == empty_language(ab));
  CHECK(t.state_count() == 1);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    auto d = testing::random_raw_dfa(rng, 1 + i % 6, "ab");
    auto once = trim(d);
    CHECK(trim(once) == once);
    CHECK(is_connected(once));
    CHECK(testing::agree_up_to(d, once, 8));
  }
}

TEST_CASE("transition counts") {
  Alphabet bc("bc");
  auto c32 = union_symbol_witness(3, 2, 'b', 'c', bc);
  auto tc = transition_counts(c32);
  CHECK(tc.total == 5);
  CHECK(tc.of('c') == 3);
  CHECK(tc.of('b') == 2);

  auto comp = complement(unary_singleton(3, Alphabet("ab"), 'b'));
  CHECK(transition_counts(comp).total == 10);

  for (const auto& d : testing::random_dfas(3, 200, 4, "abc")) {
    auto counts = transition_counts(d);
    std::size_t sum = 0;
    for (auto& [sym, n] : counts.per_symbol) sum += n;
    CHECK(sum == counts.total);
    CHECK(counts.per_symbol.size() == 3);
  }
}

TEST_CASE("size bounds") {
  auto eps = epsilon_lang(Alphabet("ab"));
  CHECK(check_size_bounds(eps));
  CHECK(check_size_bounds(unary_cycle(5)));
  PartialDfa loose(Alphabet("a"), 2);
  CHECK_THROWS_AS(check_size_bounds(loose), InputError);
  for (const auto& d : testing::random_dfas(17, 300, 4, "ab")) CHECK(check_size_bounds(d));
}

TEST_CASE("set_transition by symbol and clear") {
  PartialDfa d(Alphabet("ab"), 2);
  d.set_transition(0, 'b', 1);
  CHECK(d.next(0, 1) == State{1});
  CHECK_FALSE(d.next(0, 0).has_value());
  d.clear_transition(0, 1);
  CHECK_FALSE(d.next(0, 1).has_value());
  CHECK_THROWS_AS(d.set_transition(0, 'z', 1), InputError);
  CHECK(d.add_state() == 2);
  CHECK(d.state_count() == 3);
}
