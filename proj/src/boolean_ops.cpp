#include "pdfa/boolean_ops.hpp"

#include "pdfa/error.hpp"

namespace pdfa {
namespace {

void require_same_alphabet(const PartialDfa& a1, const PartialDfa& a2) {
  if (a1.alphabet() != a2.alphabet()) {
    throw InputError("product operands need the same alphabet: {" + a1.alphabet().symbols() + "} vs {" +
                     a2.alphabet().symbols() + "}");
  }
}

// Size of Q_i' and the index used for d (kDead if there is none).
struct PaddedSide {
  std::size_t size;
  State dead;
};

PaddedSide pad(const PartialDfa& a, UnionPadding padding) {
  bool add_dead = padding == UnionPadding::kAlways || !a.is_complete();
  auto n = a.state_count();
  return add_dead ? PaddedSide{n + 1, static_cast<State>(n)} : PaddedSide{n, kDead};
}

}  // namespace

ProductDfa union_product(const PartialDfa& a1, const PartialDfa& a2, UnionPadding padding) {
  require_same_alphabet(a1, a2);
  const auto side1 = pad(a1, padding);
  const auto side2 = pad(a2, padding);
  const auto k = a1.alphabet().size();
  auto index = [&](State p, State q) { return static_cast<State>(p * side2.size + q); };
  // A component's move on b; d never moves.
  auto step = [](const PartialDfa& a, State p, SymbolIndex b) {
    return p >= a.state_count() ? kNoState : a.raw_next(p, b);
  };

  ProductDfa out{PartialDfa(a1.alphabet(), side1.size * side2.size, index(a1.start(), a2.start())), {}};
  out.tags.reserve(side1.size * side2.size);
  for (State p = 0; p < side1.size; ++p) {
    for (State q = 0; q < side2.size; ++q) {
      State left = p == side1.dead ? kDead : p;
      State right = q == side2.dead ? kDead : q;
      out.tags.push_back({left, right});
      bool accepting = (left != kDead && a1.is_accepting(p)) || (right != kDead && a2.is_accepting(q));
      if (accepting) out.dfa.set_accepting(index(p, q));
      for (SymbolIndex b = 0; b < k; ++b) {
        State t1 = step(a1, p, b);
        State t2 = step(a2, q, b);
        if (t1 == kNoState && t2 == kNoState) continue;
        // With kOnlyIfIncomplete a side without d is complete, so it never
        // needs to fall back to d.
        State p2 = t1 == kNoState ? side1.dead : t1;
        State q2 = t2 == kNoState ? side2.dead : t2;
        out.dfa.set_transition(index(p, q), b, index(p2, q2));
      }
    }
  }
  return out;
}

std::size_t predicted_union_symbol_count(std::size_t t1b, std::size_t t2b, std::size_t q1, std::size_t q2) {
  if (t1b > q1 || t2b > q2) throw InputError("per-symbol transition count exceeds the state count");
  return t1b * t2b + t1b + t2b + t1b * (q2 - t2b) + t2b * (q1 - t1b);
}

ProductDfa intersection_product(const PartialDfa& a1, const PartialDfa& a2) {
  require_same_alphabet(a1, a2);
  const auto n1 = a1.state_count();
  const auto n2 = a2.state_count();
  const auto k = a1.alphabet().size();
  auto index = [&](State p, State q) { return static_cast<State>(p * n2 + q); };
  ProductDfa out{PartialDfa(a1.alphabet(), n1 * n2, index(a1.start(), a2.start())), {}};
  out.tags.reserve(n1 * n2);
  for (State p = 0; p < n1; ++p) {
    for (State q = 0; q < n2; ++q) {
      out.tags.push_back({p, q});
      if (a1.is_accepting(p) && a2.is_accepting(q)) out.dfa.set_accepting(index(p, q));
      for (SymbolIndex b = 0; b < k; ++b) {
        State t1 = a1.raw_next(p, b);
        State t2 = a2.raw_next(q, b);
        if (t1 != kNoState && t2 != kNoState) out.dfa.set_transition(index(p, q), b, index(t1, t2));
      }
    }
  }
  return out;
}

PartialDfa complement(const PartialDfa& a) {
  const auto n = a.state_count();
  const auto k = a.alphabet().size();
  PartialDfa out(a.alphabet(), n + 1, a.start());
  const auto sink = static_cast<State>(n);
  for (State q = 0; q < n; ++q) {
    if (!a.is_accepting(q)) out.set_accepting(q);
    for (SymbolIndex b = 0; b < k; ++b) {
      State t = a.raw_next(q, b);
      out.set_transition(q, b, t == kNoState ? sink : t);
    }
  }
  out.set_accepting(sink);
  for (SymbolIndex b = 0; b < k; ++b) out.set_transition(sink, b, sink);
  return out;
}

}  // namespace pdfa
