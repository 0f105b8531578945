#include "pdfa/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "pdfa/error.hpp"

namespace pdfa {
namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

std::size_t parse_natural(std::string_view word, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    throw ParseError(line, "expected a natural number, got '" + std::string(word) + "'");
  }
  return value;
}

class Parser {
 public:
  PartialDfa run(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
      auto eol = text.find('\n', pos);
      if (eol == std::string_view::npos) eol = text.size();
      ++line_no;
      auto line = text.substr(pos, eol - pos);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      auto words = split_words(line);
      if (!words.empty()) handle(words, line_no);
      pos = eol + 1;
    }
    line_no = std::max<std::size_t>(line_no, 1);
    if (!alphabet_) throw ParseError(line_no, "missing 'alphabet' line");
    if (!dfa_) throw ParseError(line_no, "missing 'states' line");
    if (!have_start_) throw ParseError(line_no, "missing 'start' line");
    return std::move(*dfa_);
  }

 private:
  void handle(const std::vector<std::string_view>& w, std::size_t line) {
    const auto& head = w[0];
    if (!alphabet_) {
      if (head != "alphabet") throw ParseError(line, "first line must be 'alphabet'");
      if (w.size() < 2) throw ParseError(line, "alphabet needs at least one symbol");
      std::string symbols;
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i].size() != 1) throw ParseError(line, "symbols must be single characters");
        if (symbols.find(w[i][0]) != std::string::npos) {
          throw ParseError(line, "duplicate alphabet symbol '" + std::string(w[i]) + "'");
        }
        symbols += w[i][0];
      }
      alphabet_ = Alphabet(symbols);
      return;
    }
    if (head == "alphabet") throw ParseError(line, "duplicate 'alphabet' line");
    if (head == "states") {
      if (dfa_) throw ParseError(line, "duplicate 'states' line");
      if (w.size() != 2) throw ParseError(line, "usage: states N");
      auto n = parse_natural(w[1], line);
      if (n == 0) throw ParseError(line, "a DFA needs at least one state");
      dfa_ = PartialDfa(*alphabet_, n, 0);
      return;
    }
    if (!dfa_) throw ParseError(line, "'states' must precede '" + std::string(head) + "'");
    if (head == "start") {
      if (have_start_) throw ParseError(line, "duplicate 'start' line");
      if (w.size() != 2) throw ParseError(line, "usage: start S");
      dfa_->set_start(state(w[1], line));
      have_start_ = true;
      return;
    }
    if (head == "accept") {
      if (have_accept_) throw ParseError(line, "duplicate 'accept' line");
      have_accept_ = true;
      for (std::size_t i = 1; i < w.size(); ++i) dfa_->set_accepting(state(w[i], line));
      return;
    }
    if (w.size() != 3) throw ParseError(line, "expected 'SRC SYM DST', got '" + std::string(head) + "...'");
    State from = state(w[0], line);
    if (w[1].size() != 1) throw ParseError(line, "symbols must be single characters");
    auto a = alphabet_->index_of(w[1][0]);
    if (!a) throw ParseError(line, "unknown symbol '" + std::string(w[1]) + "'");
    State to = state(w[2], line);
    if (dfa_->raw_next(from, *a) != kNoState) {
      throw ParseError(line, "duplicate transition for (" + std::string(w[0]) + ", " + std::string(w[1]) + ")");
    }
    dfa_->set_transition(from, *a, to);
  }

  State state(std::string_view word, std::size_t line) const {
    auto q = parse_natural(word, line);
    if (q >= dfa_->state_count()) throw ParseError(line, "state " + std::string(word) + " out of range");
    return static_cast<State>(q);
  }

  std::optional<Alphabet> alphabet_;
  std::optional<PartialDfa> dfa_;
  bool have_start_ = false;
  bool have_accept_ = false;
};

}  // namespace

PartialDfa parse_dfa(std::string_view text) { return Parser().run(text); }

std::string render_dfa(const PartialDfa& dfa) {
  std::ostringstream out;
  out << "alphabet";
  for (char c : dfa.alphabet()) out << ' ' << c;
  out << "\nstates " << dfa.state_count() << "\nstart " << dfa.start() << "\naccept";
  for (State q : dfa.accepting()) out << ' ' << q;
  out << '\n';
  for (State q = 0; q < dfa.state_count(); ++q) {
    for (SymbolIndex a = 0; a < dfa.alphabet().size(); ++a) {
      State t = dfa.raw_next(q, a);
      if (t != kNoState) out << q << ' ' << dfa.alphabet()[a] << ' ' << t << '\n';
    }
  }
  return out.str();
}

std::string render_dot(const PartialDfa& dfa, std::string_view name) {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n  rankdir=LR;\n  __start [shape=point, style=invis];\n";
  for (State q = 0; q < dfa.state_count(); ++q) {
    out << "  q" << q << " [label=\"" << q << "\", shape=" << (dfa.is_accepting(q) ? "doublecircle" : "circle")
        << "];\n";
  }
  out << "  __start -> q" << dfa.start() << ";\n";
  for (State q = 0; q < dfa.state_count(); ++q) {
    for (SymbolIndex a = 0; a < dfa.alphabet().size(); ++a) {
      State t = dfa.raw_next(q, a);
      if (t != kNoState) out << "  q" << q << " -> q" << t << " [label=\"" << dfa.alphabet()[a] << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace pdfa
