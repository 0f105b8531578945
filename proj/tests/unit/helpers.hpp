#pragma once
// Shared test scaffolding: word enumeration and seeded random DFAs.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "pdfa/oracle.hpp"
#include "pdfa/partial_dfa.hpp"

namespace testing {

// Calls f on every word over `symbols` of length <= max_len, shortest first.
inline void for_each_word(const std::string& symbols, std::size_t max_len,
                          const std::function<void(const std::string&)>& f) {
  std::vector<std::string> layer{""};
  f("");
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    next.reserve(layer.size() * symbols.size());
    for (const auto& w : layer)
      for (char s : symbols) {
        next.push_back(w + s);
        f(next.back());
      }
    layer = std::move(next);
  }
}

// Same language on every word up to max_len, by direct simulation.
inline bool agree_up_to(const pdfa::PartialDfa& x, const pdfa::PartialDfa& y, std::size_t max_len) {
  bool ok = true;
  for_each_word(x.alphabet().symbols(), max_len, [&](const std::string& w) {
    if (pdfa::accepts(x, w) != pdfa::accepts(y, w)) ok = false;
  });
  return ok;
}

inline std::vector<pdfa::PartialDfa> random_dfas(std::uint64_t seed, std::size_t count, std::size_t max_states,
                                                 const std::string& symbols) {
  std::mt19937_64 rng(seed);
  pdfa::Alphabet sigma(symbols);
  std::vector<pdfa::PartialDfa> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(pdfa::sample_connected_dfa(rng, max_states, sigma));
  return out;
}

// Random table, not necessarily connected or trim; exercises trim/minimize on junk.
inline pdfa::PartialDfa random_raw_dfa(std::mt19937_64& rng, std::size_t n, const std::string& symbols) {
  pdfa::Alphabet sigma(symbols);
  pdfa::PartialDfa d(sigma, n, 0);
  std::uniform_int_distribution<std::size_t> pick(0, n);
  for (pdfa::State q = 0; q < n; ++q) {
    if (rng() & 1) d.set_accepting(q);
    for (std::size_t a = 0; a < sigma.size(); ++a) {
      auto t = pick(rng);
      if (t < n) d.set_transition(q, a, static_cast<pdfa::State>(t));
    }
  }
  return d;
}

}  // namespace testing
