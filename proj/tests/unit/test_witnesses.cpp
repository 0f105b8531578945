#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "pdfa/error.hpp"
#include "pdfa/minimization.hpp"
#include "pdfa/witnesses.hpp"

using namespace pdfa;

namespace {

// Word predicate for the cycle families: `c` counts modulo n, every other
// symbol d may only occur while that count is below loops[d].
bool in_cycle_family(const std::string& w, std::size_t n, char c, const std::map<char, std::size_t>& loops) {
  std::size_t cs = 0;
  for (char ch : w) {
    if (ch == c) {
      ++cs;
      continue;
    }
    auto it = loops.find(ch);
    if (it == loops.end() || cs % n >= it->second) return false;
  }
  return cs % n == 0;
}

template <class Pred>
bool matches(const PartialDfa& d, std::size_t len, Pred pred) {
  bool ok = true;
  testing::for_each_word(d.alphabet().symbols(), len, [&](const std::string& w) {
    if (accepts(d, w) != pred(w)) ok = false;
  });
  return ok;
}

}  // namespace

TEST_CASE("cycle witness examples") {
  Alphabet bc("bc");
  auto c31 = union_symbol_witness(3, 1, 'b', 'c', bc);
  CHECK(accepts(c31, "ccc"));
  CHECK_FALSE(accepts(c31, "cb"));
  auto c32 = union_symbol_witness(3, 2, 'b', 'c', bc);
  auto counts = transition_counts(c32);
  CHECK(counts.total == 5);
  CHECK(counts.of('c') == 3);
  CHECK(counts.of('b') == 2);

  auto t2 = union_total_witness(2, 'a', 'c', Alphabet("abc"));
  CHECK(accepts(t2, "aacc"));
  CHECK_FALSE(accepts(t2, "cac"));
}

TEST_CASE("union symbol witness grid") {
  Alphabet bc("bc");
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t k = 1; k < n; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      auto w = union_symbol_witness(n, k, 'b', 'c', bc);
      CHECK(matches(w, 12, [&](const std::string& s) { return in_cycle_family(s, n, 'c', {{'b', k}}); }));
      CHECK(minimize(w) == canonicalize(w));
      auto r = complexity(w);
      CHECK(r.sc == n);
      CHECK(r.tc_of('b') == k);
      CHECK(r.tc_of('c') == n);
    }
}

TEST_CASE("union multi witness") {
  Alphabet abc("abc");
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t ka = 1; ka < n; ++ka)
      for (std::size_t kb = 1; kb < n; ++kb) {
        std::map<char, std::size_t> kmap{{'a', ka}, {'b', kb}};
        auto w = union_multi_witness(n, kmap, 'c', abc);
        CHECK(matches(w, 8, [&](const std::string& s) { return in_cycle_family(s, n, 'c', kmap); }));
        CHECK(minimize(w) == canonicalize(w));
        auto r = complexity(w);
        CHECK(r.tc == n + ka + kb);
      }
  // one looping symbol reduces to the symbol witness
  CHECK(union_multi_witness(4, {{'b', 2}}, 'c', Alphabet("bc")) ==
        union_symbol_witness(4, 2, 'b', 'c', Alphabet("bc")));
}

TEST_CASE("union total witness") {
  Alphabet abc("abc");
  for (std::size_t n = 2; n <= 6; ++n) {
    auto w = union_total_witness(n, 'a', 'c', abc);
    CHECK(matches(w, 9, [&](const std::string& s) { return in_cycle_family(s, n, 'c', {{'a', 1}}); }));
    CHECK(minimize(w) == canonicalize(w));
    auto r = complexity(w);
    CHECK(r.sc == n);
    CHECK(r.tc == n + 1);
    CHECK(r.tc_of('b') == 0);
  }
}

TEST_CASE("unary families") {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto cyc = unary_cycle(n);
    CHECK(matches(cyc, 14, [&](const std::string& s) { return s.size() % n == 0; }));
    CHECK(minimize(cyc) == canonicalize(cyc));
    CHECK(complexity(cyc).tc == n);

    auto single = unary_singleton(n);
    CHECK(matches(single, 14, [&](const std::string& s) { return s.size() == n; }));
    CHECK(minimize(single) == canonicalize(single));
    CHECK(complexity(single).sc == n + 1);
    CHECK(complexity(single).tc == n);
  }
}

TEST_CASE("chain star and epsilon") {
  Alphabet ab("ab");
  for (std::size_t m = 1; m <= 6; ++m) {
    auto w = chain_star_witness(m, ab);
    auto pred = [&](const std::string& s) {
      auto i = s.find_first_not_of('a');
      return (i == std::string::npos ? "" : s.substr(i)) == std::string(m - 1, 'b');
    };
    CHECK(matches(w, 12, pred));
    CHECK(minimize(w) == canonicalize(w));
    CHECK(complexity(w).tc == m);
  }
  auto e = epsilon_lang(ab);
  CHECK(matches(e, 10, [](const std::string& s) { return s.empty(); }));
  CHECK(complexity(e).tc == 0);
}

TEST_CASE("parameter errors") {
  Alphabet bc("bc");
  CHECK_THROWS_AS(union_symbol_witness(3, 3, 'b', 'c', bc), InputError);
  CHECK_THROWS_AS(union_symbol_witness(3, 0, 'b', 'c', bc), InputError);
  CHECK_THROWS_AS(union_symbol_witness(3, 1, 'b', 'b', bc), InputError);
  CHECK_THROWS_AS(union_symbol_witness(3, 1, 'a', 'c', bc), InputError);
  CHECK_THROWS_AS(union_multi_witness(3, {{'c', 1}}, 'c', bc), InputError);
  CHECK_THROWS_AS(union_total_witness(1, 'b', 'c', bc), InputError);
  CHECK_THROWS_AS(unary_cycle(0), InputError);
  CHECK_THROWS_AS(chain_star_witness(0, Alphabet("ab")), InputError);
}

TEST_CASE("make_witness and names") {
  WitnessSpec spec;
  spec.family = WitnessFamily::kUnionSymbol;
  spec.n = 4;
  spec.k = 3;
  spec.alphabet = Alphabet("bc");
  CHECK(make_witness(spec) == union_symbol_witness(4, 3, 'b', 'c', Alphabet("bc")));
  for (auto f : {WitnessFamily::kUnionSymbol, WitnessFamily::kUnionMulti, WitnessFamily::kUnionTotal,
                 WitnessFamily::kUnaryCycle, WitnessFamily::kUnarySingleton, WitnessFamily::kChainStar,
                 WitnessFamily::kEpsilon})
    CHECK(parse_witness_family(to_string(f)) == f);
  CHECK(to_string(WitnessFamily::kUnionTotal) == "union-total");
  CHECK_THROWS_AS(parse_witness_family("nope"), InputError);
}
