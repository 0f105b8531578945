#include "pdfa/bounds.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <tuple>
#include <stdexcept>

#include "pdfa/boolean_ops.hpp"
#include "pdfa/error.hpp"
#include "pdfa/minimization.hpp"
#include "pdfa/oracle.hpp"
#include "pdfa/text_format.hpp"
#include "pdfa/witnesses.hpp"

namespace pdfa {

std::size_t union_symbol_upper(std::size_t tb1, std::size_t tb2, std::size_t s1, std::size_t s2) {
  if (tb1 > s1 || tb2 > s2) throw InputError("tc_b cannot exceed sc");
  std::size_t value = tb1 * tb2 + tb1 * (1 + s2 - tb2) + tb2 * (1 + s1 - tb1);
  auto k1 = static_cast<std::int64_t>(tb1), k2 = static_cast<std::int64_t>(tb2);
  auto n1 = static_cast<std::int64_t>(s1), n2 = static_cast<std::int64_t>(s2);
  if (static_cast<std::int64_t>(value) != k1 * n2 + k2 * n1 - k1 * k2 + k1 + k2) {
    throw std::logic_error("per-symbol union bound disagrees with its expanded form");
  }
  return value;
}

std::size_t union_state_upper(std::size_t n1, std::size_t n2) {
  if (n1 < 1 || n2 < 1) throw InputError("state counts must be positive");
  return n1 * n2 + n1 + n2;
}

std::size_t union_total_upper(std::size_t t1, std::size_t t2) { return 2 * (t1 * t2 + t1 + t2); }

std::size_t union_total_lower(std::size_t t1, std::size_t t2) {
  std::size_t v = t1 * t2 + t1 + t2;
  return v == 0 ? 0 : v - 1;
}

std::size_t union_cycle_upper(std::size_t t1, std::size_t t2) { return union_total_lower(t1, t2); }

ConjectureBound conjecture_bound(std::size_t t1, std::size_t t2) {
  return {t1 * t2 + t1 + t2, t1 >= 2 && t2 >= 2};
}

std::size_t unary_union_upper(std::size_t t1, std::size_t t2) {
  if (t1 < 2 || t2 < 2) {
    throw InapplicableBound("unary union bound needs tc >= 2 for both operands; e.g. tc(b) = 1 and "
                            "tc(b u (b^n)*) exceeds n");
  }
  return t1 * t2;
}

std::size_t intersection_upper(std::size_t t1, std::size_t t2) { return t1 * t2; }
std::size_t intersection_symbol_upper(std::size_t tb1, std::size_t tb2) { return tb1 * tb2; }
std::size_t complement_upper(std::size_t sigma_size, std::size_t t) { return sigma_size * (t + 2); }

namespace {

struct BoundInfo {
  BoundId id;
  const char* name;
  std::vector<std::string> params;
};

const std::vector<BoundInfo>& bound_table() {
  static const std::vector<BoundInfo> table{
      {BoundId::kUnionSymbolTight, "union-symbol-tight", {"n1", "n2", "k1", "k2"}},
      {BoundId::kUnionStateTight, "union-state-tight", {"n1", "n2", "k1", "k2"}},
      {BoundId::kUnionTotalLower, "union-total-lower", {"n1", "n2"}},
      {BoundId::kUnionCycleUpper, "union-cycle-upper", {"n1", "n2"}},
      {BoundId::kUnaryUnionTight, "unary-union-tight", {"n1", "n2"}},
      {BoundId::kUnaryException, "unary-exception", {"n"}},
      {BoundId::kIntersectionTight, "intersection-tight", {"n1", "n2"}},
      {BoundId::kIntersectionSymbolTight, "intersection-symbol-tight", {"n1", "n2"}},
      {BoundId::kComplementTight, "complement-tight", {"sigma", "n"}},
      {BoundId::kComplementSymbolBlowup, "complement-symbol-blowup", {"sigma", "n"}},
      {BoundId::kConjectureSmall, "conjecture-small", {"m"}},
      {BoundId::kUnionConstructionCount, "union-construction-count", {"seed", "samples", "max_states", "max_alphabet"}},
      {BoundId::kUnionSymbolUpper, "union-symbol-upper", {"seed", "samples", "max_states", "max_alphabet"}},
      {BoundId::kUnionTotalUpper, "union-total-upper", {"seed", "samples", "max_states", "max_alphabet"}},
      {BoundId::kIntersectionConstructionCount,
       "intersection-construction-count",
       {"seed", "samples", "max_states", "max_alphabet"}},
      {BoundId::kIntersectionUpper, "intersection-upper", {"seed", "samples", "max_states", "max_alphabet"}},
      {BoundId::kComplementUpper, "complement-upper", {"seed", "samples", "max_states", "max_alphabet"}},
  };
  return table;
}

const BoundInfo& info(BoundId id) {
  for (const auto& b : bound_table()) {
    if (b.id == id) return b;
  }
  throw std::logic_error("unregistered bound id");
}

class ParamReader {
 public:
  explicit ParamReader(const Params& params) : params_(params) {}

  std::size_t get(const std::string& name) const {
    if (auto v = find(name)) return *v;
    throw InputError("missing parameter " + name);
  }
  std::size_t get_or(const std::string& name, std::size_t fallback) const { return find(name).value_or(fallback); }

 private:
  std::optional<std::size_t> find(const std::string& name) const {
    for (const auto& [k, v] : params_) {
      if (k == name) return v;
    }
    return std::nullopt;
  }
  const Params& params_;
};

void require_coprime(std::size_t n1, std::size_t n2) {
  if (std::gcd(n1, n2) != 1) {
    throw InputError("tightness requires relatively prime sizes, got n1=" + std::to_string(n1) +
                     " n2=" + std::to_string(n2));
  }
}

Relation tight(std::size_t formula, std::size_t measured) {
  return formula == measured ? Relation::kEqual : Relation::kViolation;
}

Relation upper(std::size_t formula, std::size_t measured) {
  if (measured > formula) return Relation::kViolation;
  return measured == formula ? Relation::kEqual : Relation::kWithinBound;
}

BoundCheckReport start(BoundId id, const Params& params) {
  BoundCheckReport r;
  r.bound_id = id;
  for (const auto& name : info(id).params) {
    for (const auto& p : params) {
      if (p.first == name) r.params.push_back(p);
    }
  }
  return r;
}

void add_artifact(BoundCheckReport& r, std::string label, const PartialDfa& dfa) {
  r.artifacts.emplace_back(std::move(label), render_dfa(dfa));
}

// Marks a tight report as a violation when a side condition fails.
void side_condition(BoundCheckReport& r, bool holds, const std::string& what) {
  if (!r.details.empty()) r.details += "; ";
  r.details += what + (holds ? "" : " FAILED");
  if (!holds) r.relation = Relation::kViolation;
}

std::size_t tc_symbol(const PartialDfa& minimal, char b) { return transition_counts(minimal).of(b); }

BoundCheckReport union_symbol_like(BoundId id, const Params& params) {
  ParamReader p(params);
  auto n1 = p.get("n1"), n2 = p.get("n2"), k1 = p.get("k1"), k2 = p.get("k2");
  require_coprime(n1, n2);
  const Alphabet sigma("bc");
  auto c1 = union_symbol_witness(n1, k1, 'b', 'c', sigma);
  auto c2 = union_symbol_witness(n2, k2, 'b', 'c', sigma);
  auto minimal = minimize(union_product(c1, c2).dfa);
  auto r = start(id, params);
  if (id == BoundId::kUnionSymbolTight) {
    r.formula_value = union_symbol_upper(k1, k2, n1, n2);
    r.measured_value = tc_symbol(minimal, 'b');
  } else {
    r.formula_value = union_state_upper(n1, n2);
    r.measured_value = minimal.state_count();
  }
  r.relation = tight(r.formula_value, r.measured_value);
  auto m1 = complexity(c1), m2 = complexity(c2);
  side_condition(r, m1.sc == n1 && m2.sc == n2 && m1.tc_of('b') == k1 && m2.tc_of('b') == k2,
                 "operands have sc=n_i and tc_b=k_i");
  add_artifact(r, "minimal union", minimal);
  return r;
}

BoundCheckReport union_total_like(BoundId id, const Params& params) {
  ParamReader p(params);
  auto n1 = p.get("n1"), n2 = p.get("n2");
  bool coprime = std::gcd(n1, n2) == 1;
  if (id == BoundId::kUnionTotalLower) require_coprime(n1, n2);
  const Alphabet sigma("abc");
  auto w1 = union_total_witness(n1, 'a', 'c', sigma);
  auto w2 = union_total_witness(n2, 'b', 'c', sigma);
  auto t1 = complexity(w1).tc, t2 = complexity(w2).tc;
  auto minimal = minimize(union_product(w1, w2).dfa);
  auto r = start(id, params);
  r.measured_value = transition_counts(minimal).total;
  if (id == BoundId::kUnionTotalLower) {
    r.formula_value = union_total_lower(t1, t2);
    r.relation = tight(r.formula_value, r.measured_value);
  } else {
    r.formula_value = union_cycle_upper(t1, t2);
    r.relation = coprime ? tight(r.formula_value, r.measured_value) : upper(r.formula_value, r.measured_value);
  }
  r.details = "t1=" + std::to_string(t1) + " t2=" + std::to_string(t2);
  side_condition(r, t1 == n1 + 1 && t2 == n2 + 1, "tc(L_i)=n_i+1");
  auto c_complete = [](const PartialDfa& m) {
    auto c = m.alphabet().require('c');
    for (State q = 0; q < m.state_count(); ++q) {
      if (m.raw_next(q, c) == kNoState) return false;
    }
    return true;
  };
  side_condition(r, c_complete(minimize(w1)) && c_complete(minimize(w2)), "c-transitions complete");
  add_artifact(r, "minimal union", minimal);
  return r;
}

BoundCheckReport unary_union_tight(const Params& params) {
  ParamReader p(params);
  auto n1 = p.get("n1"), n2 = p.get("n2");
  require_coprime(n1, n2);
  if (n1 < 3 || n2 < 2) throw InputError("unary tightness needs n1 >= 3 and n2 >= 2");
  auto l1 = unary_cycle(n1), l2 = unary_cycle(n2);
  auto t1 = complexity(l1).tc, t2 = complexity(l2).tc;
  auto minimal = minimize(union_product(l1, l2).dfa);
  auto r = start(BoundId::kUnaryUnionTight, params);
  r.formula_value = unary_union_upper(t1, t2);
  r.measured_value = transition_counts(minimal).total;
  r.relation = tight(r.formula_value, r.measured_value);
  r.details = "t1=" + std::to_string(t1) + " t2=" + std::to_string(t2);
  add_artifact(r, "minimal union", minimal);
  return r;
}

BoundCheckReport unary_exception(const Params& params) {
  ParamReader p(params);
  auto n = p.get("n");
  if (n < 2) throw InputError("the exception probe needs n >= 2");
  auto l1 = unary_singleton(1), l2 = unary_cycle(n);
  auto t1 = complexity(l1).tc, t2 = complexity(l2).tc;
  auto u = union_product(l1, l2).dfa;
  auto minimal = minimize(u);
  auto measured = transition_counts(minimal).total;
  auto oracle = brute_min_transitions(u);
  auto r = start(BoundId::kUnaryException, params);
  // The stated value n + 1 is a reference, not ground truth.
  r.formula_value = n + 1;
  r.measured_value = oracle.min_total;
  r.relation = r.formula_value == r.measured_value ? Relation::kEqual : Relation::kFlagged;
  r.details = "tc(b)*tc((b^n)*)=" + std::to_string(t1 * t2) + " minimizer=" + std::to_string(measured) +
              " oracle=" + std::to_string(oracle.min_total);
  side_condition(r, measured == oracle.min_total, "minimizer agrees with oracle");
  side_condition(r, oracle.min_total > t1 * t2, "exceeds tc(b)*tc((b^n)*)");
  add_artifact(r, "minimal union", minimal);
  return r;
}

BoundCheckReport intersection_tight(BoundId id, const Params& params) {
  ParamReader p(params);
  auto n1 = p.get("n1"), n2 = p.get("n2");
  require_coprime(n1, n2);
  auto l1 = unary_cycle(n1), l2 = unary_cycle(n2);
  auto c1 = complexity(l1), c2 = complexity(l2);
  auto product = intersection_product(l1, l2).dfa;
  auto minimal = minimize(product);
  auto r = start(id, params);
  if (id == BoundId::kIntersectionTight) {
    r.formula_value = intersection_upper(c1.tc, c2.tc);
    r.measured_value = transition_counts(minimal).total;
  } else {
    r.formula_value = intersection_symbol_upper(c1.tc_of('b'), c2.tc_of('b'));
    r.measured_value = tc_symbol(minimal, 'b');
  }
  r.relation = tight(r.formula_value, r.measured_value);
  side_condition(r, transition_counts(product).total == transition_counts(minimal).total,
                 "product already minimal in transitions");
  add_artifact(r, "minimal intersection", minimal);
  return r;
}

Alphabet sigma_of_size(std::size_t sigma) {
  if (sigma < 1 || sigma > 26) throw InputError("sigma must be between 1 and 26");
  if (sigma == 1) return Alphabet("b");
  return Alphabet(std::string("abcdefghijklmnopqrstuvwxyz").substr(0, sigma));
}

BoundCheckReport complement_like(BoundId id, const Params& params) {
  ParamReader p(params);
  auto sigma_size = p.get("sigma"), n = p.get("n");
  if (id == BoundId::kComplementSymbolBlowup && sigma_size < 2) {
    throw InputError("the per-symbol probe needs sigma >= 2");
  }
  auto sigma = sigma_of_size(sigma_size);
  auto l = unary_singleton(n, sigma);
  auto cl = complexity(l);
  auto minimal = minimize(complement(l));
  auto r = start(id, params);
  if (id == BoundId::kComplementTight) {
    r.formula_value = complement_upper(sigma_size, cl.tc);
    r.measured_value = transition_counts(minimal).total;
    r.relation = tight(r.formula_value, r.measured_value);
    side_condition(r, cl.tc == n, "tc(L)=n");
  } else {
    r.formula_value = n + 2;
    r.measured_value = tc_symbol(minimal, 'a');
    r.relation = tight(r.formula_value, r.measured_value);
    side_condition(r, cl.tc_of('a') == 0, "tc_a(L)=0");
  }
  add_artifact(r, "minimal complement", minimal);
  return r;
}

BoundCheckReport conjecture_small(const Params& params) {
  ParamReader p(params);
  auto m = p.get("m");
  if (m < 1) throw InputError("m must be positive");
  const Alphabet sigma("ab");
  auto eps = epsilon_lang(sigma);
  auto chain = chain_star_witness(m, sigma);
  auto t1 = complexity(eps).tc, t2 = complexity(chain).tc;
  auto minimal = minimize(union_product(eps, chain).dfa);
  auto r = start(BoundId::kConjectureSmall, params);
  r.formula_value = m + 2;
  r.measured_value = transition_counts(minimal).total;
  r.relation = tight(r.formula_value, r.measured_value);
  auto conj = conjecture_bound(t1, t2);
  r.details = "conjecture value " + std::to_string(conj.value) + (conj.applicable ? " (applicable)" : " (inapplicable)");
  side_condition(r, t1 == 0 && t2 == m, "tc(eps)=0 and tc(a*b^(m-1))=m");
  add_artifact(r, "minimal union", minimal);
  return r;
}

// One measured item of a sampled check.
struct Item {
  std::size_t formula;
  std::size_t measured;
  Relation relation;
};

BoundCheckReport sampled(BoundId id, const Params& params) {
  ParamReader p(params);
  auto seed = p.get_or("seed", kDefaultSeed);
  auto samples = p.get_or("samples", 200);
  auto max_states = p.get_or("max_states", 4);
  auto max_alphabet = p.get_or("max_alphabet", 3);
  Params full{{"seed", seed}, {"samples", samples}, {"max_states", max_states}, {"max_alphabet", max_alphabet}};
  auto pairs = sample_pairs(seed, samples, max_states, max_alphabet);

  std::vector<Item> items;
  for (const auto& [a1, a2] : pairs) {
    const auto& sigma = a1.alphabet();
    switch (id) {
      case BoundId::kUnionConstructionCount: {
        auto u = transition_counts(union_product(a1, a2).dfa);
        auto c1 = transition_counts(a1), c2 = transition_counts(a2);
        for (char b : sigma) {
          auto predicted = predicted_union_symbol_count(c1.of(b), c2.of(b), a1.state_count(), a2.state_count());
          items.push_back({predicted, u.of(b), tight(predicted, u.of(b))});
        }
        break;
      }
      case BoundId::kUnionSymbolUpper: {
        auto m1 = complexity(a1), m2 = complexity(a2);
        auto mu = complexity(union_product(a1, a2).dfa);
        for (char b : sigma) {
          auto f = union_symbol_upper(m1.tc_of(b), m2.tc_of(b), m1.sc, m2.sc);
          items.push_back({f, mu.tc_of(b), upper(f, mu.tc_of(b))});
        }
        break;
      }
      case BoundId::kUnionTotalUpper: {
        auto t1 = complexity(a1).tc, t2 = complexity(a2).tc;
        auto tu = complexity(union_product(a1, a2).dfa).tc;
        auto f = union_total_upper(t1, t2);
        items.push_back({f, tu, upper(f, tu)});
        break;
      }
      case BoundId::kIntersectionConstructionCount: {
        auto x = transition_counts(intersection_product(a1, a2).dfa);
        auto c1 = transition_counts(a1), c2 = transition_counts(a2);
        for (char b : sigma) {
          auto f = c1.of(b) * c2.of(b);
          items.push_back({f, x.of(b), tight(f, x.of(b))});
        }
        break;
      }
      case BoundId::kIntersectionUpper: {
        auto m1 = complexity(a1), m2 = complexity(a2);
        auto tx = complexity(intersection_product(a1, a2).dfa).tc;
        std::size_t per_symbol = 0;
        for (char b : sigma) per_symbol += intersection_symbol_upper(m1.tc_of(b), m2.tc_of(b));
        auto rel = upper(per_symbol, tx);
        if (per_symbol > intersection_upper(m1.tc, m2.tc)) rel = Relation::kViolation;
        items.push_back({per_symbol, tx, rel});
        break;
      }
      case BoundId::kComplementUpper: {
        for (const auto* a : {&a1, &a2}) {
          auto t = complexity(*a).tc;
          auto c = complement(*a);
          auto tcc = complexity(c).tc;
          auto f = complement_upper(sigma.size(), t);
          auto rel = upper(f, tcc);
          if (transition_counts(c).total != (a->state_count() + 1) * sigma.size()) rel = Relation::kViolation;
          items.push_back({f, tcc, rel});
        }
        break;
      }
      default:
        throw std::logic_error("not a sampled bound");
    }
  }

  auto r = start(id, full);
  std::size_t violations = 0, equal = 0;
  const Item* worst = nullptr;
  for (const auto& item : items) {
    if (item.relation == Relation::kViolation) ++violations;
    if (item.relation == Relation::kEqual) ++equal;
    auto slack = [](const Item& i) {
      return static_cast<std::int64_t>(i.formula) - static_cast<std::int64_t>(i.measured);
    };
    // Prefer violations, then non-trivial items, then the smallest slack.
    auto rank = [&](const Item& i) {
      return std::make_tuple(i.relation != Relation::kViolation, i.formula == 0, slack(i));
    };
    bool worse = !worst || rank(item) < rank(*worst);
    if (worse) worst = &item;
  }
  if (worst) {
    r.formula_value = worst->formula;
    r.measured_value = worst->measured;
  }
  if (violations > 0) {
    r.relation = Relation::kViolation;
  } else {
    r.relation = equal == items.size() ? Relation::kEqual : Relation::kWithinBound;
  }
  r.details = std::to_string(pairs.size()) + " pairs, " + std::to_string(items.size()) + " checks, " +
              std::to_string(violations) + " violations, " + std::to_string(equal) + " equalities";
  return r;
}

}  // namespace

std::string to_string(BoundId id) { return info(id).name; }

std::string to_string(Relation relation) {
  switch (relation) {
    case Relation::kEqual:
      return "EQUAL";
    case Relation::kWithinBound:
      return "WITHIN_BOUND";
    case Relation::kViolation:
      return "VIOLATION";
    case Relation::kFlagged:
      return "FLAGGED";
  }
  return "?";
}

BoundId parse_bound_id(const std::string& name) {
  for (const auto& b : bound_table()) {
    if (name == b.name) return b.id;
  }
  throw InputError("unknown bound id '" + name + "'");
}

std::vector<BoundId> all_bound_ids() {
  std::vector<BoundId> ids;
  for (const auto& b : bound_table()) ids.push_back(b.id);
  return ids;
}

bool is_sampled(BoundId id) { return info(id).params.front() == "seed"; }

std::vector<std::string> bound_parameters(BoundId id) { return info(id).params; }

BoundCheckReport check_bound(BoundId id, const Params& params) {
  switch (id) {
    case BoundId::kUnionSymbolTight:
    case BoundId::kUnionStateTight:
      return union_symbol_like(id, params);
    case BoundId::kUnionTotalLower:
    case BoundId::kUnionCycleUpper:
      return union_total_like(id, params);
    case BoundId::kUnaryUnionTight:
      return unary_union_tight(params);
    case BoundId::kUnaryException:
      return unary_exception(params);
    case BoundId::kIntersectionTight:
    case BoundId::kIntersectionSymbolTight:
      return intersection_tight(id, params);
    case BoundId::kComplementTight:
    case BoundId::kComplementSymbolBlowup:
      return complement_like(id, params);
    case BoundId::kConjectureSmall:
      return conjecture_small(params);
    default:
      return sampled(id, params);
  }
}

std::vector<SampledPair> sample_pairs(std::uint64_t seed, std::size_t count, std::size_t max_states,
                                      std::size_t max_alphabet) {
  if (max_alphabet < 1 || max_alphabet > 3) throw InputError("max_alphabet must be 1..3");
  static const std::array<Alphabet, 3> alphabets{Alphabet("a"), Alphabet("ab"), Alphabet("abc")};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick_alphabet(0, max_alphabet - 1);
  std::vector<SampledPair> pairs;
  pairs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto& sigma = alphabets[pick_alphabet(rng)];
    auto first = sample_connected_dfa(rng, max_states, sigma);
    auto second = sample_connected_dfa(rng, max_states, sigma);
    pairs.push_back({std::move(first), std::move(second)});
  }
  return pairs;
}

std::vector<BoundCheckReport> run_suite(std::size_t max_n, std::uint64_t seed, std::size_t samples) {
  if (max_n < 3) throw InputError("the suite needs max_n >= 3");
  std::vector<BoundCheckReport> out;
  auto run = [&](BoundId id, Params params) { out.push_back(check_bound(id, params)); };
  for (std::size_t n1 = 2; n1 <= max_n; ++n1) {
    for (std::size_t n2 = n1; n2 <= max_n; ++n2) {
      bool coprime = std::gcd(n1, n2) == 1;
      if (coprime && n1 < n2) {
        for (std::size_t k1 = 1; k1 < n1; ++k1) {
          for (std::size_t k2 = 1; k2 < n2; ++k2) {
            Params p{{"n1", n1}, {"n2", n2}, {"k1", k1}, {"k2", k2}};
            run(BoundId::kUnionSymbolTight, p);
            run(BoundId::kUnionStateTight, p);
          }
        }
        run(BoundId::kUnionTotalLower, {{"n1", n1}, {"n2", n2}});
        run(BoundId::kIntersectionTight, {{"n1", n1}, {"n2", n2}});
        run(BoundId::kIntersectionSymbolTight, {{"n1", n1}, {"n2", n2}});
      }
      run(BoundId::kUnionCycleUpper, {{"n1", n1}, {"n2", n2}});
    }
  }
  for (std::size_t n1 = 3; n1 <= max_n; ++n1) {
    for (std::size_t n2 = 2; n2 <= max_n; ++n2) {
      if (std::gcd(n1, n2) == 1) run(BoundId::kUnaryUnionTight, {{"n1", n1}, {"n2", n2}});
    }
  }
  for (std::size_t n = 2; n <= std::min<std::size_t>(max_n, 4); ++n) run(BoundId::kUnaryException, {{"n", n}});
  for (std::size_t sigma = 1; sigma <= 3; ++sigma) {
    for (std::size_t n = 1; n <= max_n; ++n) run(BoundId::kComplementTight, {{"sigma", sigma}, {"n", n}});
  }
  for (std::size_t n = 1; n <= max_n; ++n) run(BoundId::kComplementSymbolBlowup, {{"sigma", 2}, {"n", n}});
  for (std::size_t m = 2; m <= max_n; ++m) run(BoundId::kConjectureSmall, {{"m", m}});
  for (auto id : all_bound_ids()) {
    if (is_sampled(id)) run(id, {{"seed", seed}, {"samples", samples}});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.bound_id != y.bound_id) return x.bound_id < y.bound_id;
    return x.params < y.params;
  });
  return out;
}

std::string render_line(const BoundCheckReport& report) {
  std::ostringstream out;
  out << to_string(report.bound_id);
  for (const auto& [k, v] : report.params) out << ' ' << k << '=' << v;
  out << " formula=" << report.formula_value << " measured=" << report.measured_value
      << " verdict=" << to_string(report.relation);
  return out.str();
}

std::string render_table(const std::vector<BoundCheckReport>& reports) {
  std::vector<std::array<std::string, 5>> rows{{"bound", "params", "formula", "measured", "verdict"}};
  std::array<std::size_t, 4> tally{};
  for (const auto& r : reports) {
    std::string params;
    for (const auto& [k, v] : r.params) params += (params.empty() ? "" : " ") + k + "=" + std::to_string(v);
    rows.push_back({to_string(r.bound_id), params, std::to_string(r.formula_value), std::to_string(r.measured_value),
                    to_string(r.relation)});
    ++tally[static_cast<std::size_t>(r.relation)];
  }
  std::array<std::size_t, 5> width{};
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::string cell = row[i];
      bool numeric = i == 2 || i == 3;
      if (numeric) cell = std::string(width[i] - cell.size(), ' ') + cell;
      else if (i + 1 < row.size()) cell += std::string(width[i] - cell.size(), ' ');
      line += cell;
      if (i + 1 < row.size()) line += "  ";
    }
    out << line << '\n';
  }
  out << reports.size() << " checks: " << tally[0] << " EQUAL, " << tally[1] << " WITHIN_BOUND, " << tally[2]
      << " VIOLATION, " << tally[3] << " FLAGGED\n";
  return out.str();
}

}  // namespace pdfa
