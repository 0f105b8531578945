#include "pdfa/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "pdfa/boolean_ops.hpp"
#include "pdfa/bounds.hpp"
#include "pdfa/error.hpp"
#include "pdfa/minimization.hpp"
#include "pdfa/oracle.hpp"
#include "pdfa/text_format.hpp"
#include "pdfa/witnesses.hpp"

namespace pdfa::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write '" + path + "'");
}

PartialDfa load(const std::string& path) {
  try {
    return parse_dfa(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
  }
}

// Keys and values in alphabet order, as `key=value` lines or an aligned table.
void print_measures(std::ostream& out, const std::vector<std::pair<std::string, std::size_t>>& measures,
                    const std::string& format) {
  if (format == "table") {
    std::size_t width = 0;
    for (const auto& m : measures) width = std::max(width, m.first.size());
    for (const auto& [k, v] : measures) out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
    return;
  }
  for (const auto& [k, v] : measures) out << k << '=' << v << '\n';
}

std::vector<std::pair<std::string, std::size_t>> complexity_measures(const ComplexityReport& r,
                                                                    const Alphabet& alphabet) {
  std::vector<std::pair<std::string, std::size_t>> m{{"sc", r.sc}, {"tc", r.tc}};
  for (char b : alphabet) m.emplace_back(std::string("tc[") + b + "]", r.tc_of(b));
  m.emplace_back("nerode_classes", r.nerode_classes);
  return m;
}

std::string min_path_for(const std::string& out_path) {
  const std::string ext = ".pdfa";
  if (out_path.size() > ext.size() && out_path.compare(out_path.size() - ext.size(), ext.size(), ext) == 0) {
    return out_path.substr(0, out_path.size() - ext.size()) + ".min.pdfa";
  }
  return out_path + ".min";
}

std::map<char, std::size_t> parse_kmap(const std::string& text) {
  std::map<char, std::size_t> k_map;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item.size() < 3 || item[1] != '=') throw InputError("k-map entries look like 'a=1', got '" + item + "'");
    std::size_t pos = 0;
    std::size_t value = 0;
    try {
      value = std::stoul(item.substr(2), &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != item.size() - 2) throw InputError("bad k-map value in '" + item + "'");
    k_map[item[0]] = value;
  }
  return k_map;
}

char single_char(const std::string& s, const char* flag) {
  if (s.size() != 1) throw InputError(std::string("--") + flag + " takes a single character");
  return s[0];
}

struct Options {
  std::string format = "default";
  std::string dot_path;
  std::string out_path;
  std::string min_out_path;
  // analyze / op / oracle
  std::string op_name;
  std::vector<std::string> files;
  // witness
  std::string family;
  std::size_t n = 0, k = 0, m = 0;
  std::string b = "b", c = "c", a = "a";
  std::string loop_sym, cycle_sym;
  std::string kmap;
  std::string alphabet;
  // check
  std::string bound;
  bool all = false;
  bool artifacts = false;
  std::size_t max_n = 5;
  std::map<std::string, std::size_t> bound_params;
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = 200;
  // oracle
  std::size_t max_states = 0;
  std::size_t shards = 1;
};

int cmd_analyze(const Options& o, std::ostream& out) {
  auto dfa = load(o.files.at(0));
  auto report = complexity(dfa);
  print_measures(out, complexity_measures(report, dfa.alphabet()), o.format);
  if (!o.dot_path.empty()) write_file(o.dot_path, render_dot(minimize(dfa), "minimal"));
  return kSuccess;
}

int cmd_op(const Options& o, std::ostream& out) {
  PartialDfa constructed;
  if (o.op_name == "complement") {
    if (o.files.size() != 1) throw InputError("complement takes exactly one file");
    constructed = complement(load(o.files[0]));
  } else {
    if (o.files.size() != 2) throw InputError(o.op_name + " takes exactly two files");
    auto a1 = load(o.files[0]);
    auto a2 = load(o.files[1]);
    constructed = o.op_name == "union" ? union_product(a1, a2).dfa : intersection_product(a1, a2).dfa;
  }
  auto minimal = minimize(constructed);
  std::vector<std::pair<std::string, std::size_t>> measures{{"constructed_states", constructed.state_count()}};
  auto cc = transition_counts(constructed);
  measures.emplace_back("constructed_tc", cc.total);
  for (const auto& [s, v] : cc.per_symbol) measures.emplace_back(std::string("constructed_tc[") + s + "]", v);
  measures.emplace_back("minimized_sc", minimal.state_count());
  auto mc = transition_counts(minimal);
  measures.emplace_back("minimized_tc", mc.total);
  for (const auto& [s, v] : mc.per_symbol) measures.emplace_back(std::string("minimized_tc[") + s + "]", v);
  print_measures(out, measures, o.format);
  if (!o.out_path.empty()) {
    write_file(o.out_path, render_dfa(constructed));
    write_file(o.min_out_path.empty() ? min_path_for(o.out_path) : o.min_out_path, render_dfa(minimal));
  } else if (!o.min_out_path.empty()) {
    write_file(o.min_out_path, render_dfa(minimal));
  }
  if (!o.dot_path.empty()) write_file(o.dot_path, render_dot(minimal, o.op_name));
  return kSuccess;
}

int cmd_witness(const Options& o, std::ostream& out) {
  WitnessSpec spec;
  spec.family = parse_witness_family(o.family);
  spec.n = o.n;
  spec.k = o.k;
  spec.m = o.m;
  spec.a = single_char(o.a, "a");
  spec.b = single_char(o.b, "b");
  spec.c = single_char(o.c, "c");
  if (!o.loop_sym.empty()) spec.b = single_char(o.loop_sym, "loop");
  if (!o.cycle_sym.empty()) spec.c = single_char(o.cycle_sym, "cycle");
  spec.k_map = parse_kmap(o.kmap);
  if (!o.alphabet.empty()) {
    spec.alphabet = Alphabet(o.alphabet);
  } else {
    switch (spec.family) {
      case WitnessFamily::kUnionSymbol:
        spec.alphabet = Alphabet(std::string{spec.b, spec.c});
        break;
      case WitnessFamily::kUnaryCycle:
      case WitnessFamily::kUnarySingleton:
        spec.alphabet = Alphabet(std::string{spec.b});
        break;
      case WitnessFamily::kChainStar:
        spec.alphabet = Alphabet(std::string{spec.a, spec.b});
        break;
      default:
        spec.alphabet = Alphabet("abc");
    }
  }
  auto dfa = make_witness(spec);
  auto text = render_dfa(dfa);
  if (o.out_path.empty()) {
    out << text;
  } else {
    write_file(o.out_path, text);
    out << "wrote " << o.out_path << " states=" << dfa.state_count() << " tc=" << transition_counts(dfa).total
        << '\n';
  }
  if (!o.dot_path.empty()) write_file(o.dot_path, render_dot(dfa, o.family));
  return kSuccess;
}

int cmd_check(const Options& o, std::ostream& out) {
  std::vector<BoundCheckReport> reports;
  if (o.all) {
    reports = run_suite(o.max_n, o.seed, o.samples);
  } else {
    if (o.bound.empty()) throw InputError("check needs a bound id or --all");
    auto id = parse_bound_id(o.bound);
    Params params;
    for (const auto& name : bound_parameters(id)) {
      if (auto it = o.bound_params.find(name); it != o.bound_params.end()) params.emplace_back(name, it->second);
    }
    if (is_sampled(id)) {
      params.emplace_back("seed", o.seed);
      params.emplace_back("samples", o.samples);
    }
    reports.push_back(check_bound(id, params));
  }
  if (o.format == "lines") {
    for (const auto& r : reports) out << render_line(r) << '\n';
  } else {
    out << render_table(reports);
  }
  if (o.artifacts) {
    for (const auto& r : reports) {
      out << "# " << render_line(r) << '\n';
      if (!r.details.empty()) out << "# " << r.details << '\n';
      for (const auto& [label, text] : r.artifacts) out << "# " << label << '\n' << text;
    }
  }
  bool violation = std::any_of(reports.begin(), reports.end(),
                               [](const auto& r) { return r.relation == Relation::kViolation; });
  return violation ? kViolation : kSuccess;
}

int cmd_min_transitions(const Options& o, std::ostream& out) {
  auto dfa = load(o.files.at(0));
  auto result = brute_min_transitions(dfa, o.max_states);
  std::vector<std::pair<std::string, std::size_t>> measures{{"search_states", result.search_states},
                                                            {"min_total", result.min_total}};
  for (const auto& [s, v] : result.min_per_symbol) measures.emplace_back(std::string("min_tc[") + s + "]", v);
  print_measures(out, measures, o.format);
  out << "# witness\n" << render_dfa(result.witness_dfa);
  return kSuccess;
}

int cmd_verify_lemma1(const Options& o, std::ostream& out) {
  if (o.alphabet.empty()) throw InputError("--alphabet is required");
  if (o.max_states == 0) throw InputError("--max-states must be positive");
  auto report = verify_lemma1(o.max_states, Alphabet(o.alphabet), {}, o.shards);
  out << "verify-lemma1 max_states=" << report.max_states << " alphabet=" << o.alphabet
      << " search_states=" << report.search_states << " dfas=" << report.dfas_enumerated
      << " languages=" << report.languages_checked << " counterexamples=" << report.counterexamples.size()
      << " undefined_count_violations=" << report.undefined_count_violations
      << " verdict=" << (report.pass ? "PASS" : "FAIL") << '\n';
  for (const auto& cx : report.counterexamples) {
    out << "# counterexample: " << cx.reason << "\n# language\n"
        << render_dfa(cx.language) << "# minimized\n"
        << render_dfa(cx.minimized);
  }
  return report.pass ? kSuccess : kValidationFailure;
}

int cmd_equiv(const Options& o, std::ostream& out) {
  if (o.files.size() != 2) throw InputError("equiv takes exactly two files");
  auto a1 = load(o.files[0]);
  auto a2 = load(o.files[1]);
  bool same = equivalent(a1, a2);
  if (same) {
    out << "equivalent\n";
    return kSuccess;
  }
  out << "not equivalent: distinguishing word \"" << *distinguishing_word(a1, a2) << "\"\n";
  return kValidationFailure;
}

int cmd_validate(const Options& o, std::ostream& out) {
  auto dfa = load(o.files.at(0));
  auto report = validate(dfa);
  for (const auto& v : report.violations) out << "violation: " << v << '\n';
  bool connected = is_connected(dfa);
  out << "connected=" << (connected ? "yes" : "no") << '\n';
  if (connected) out << "size_bounds=" << (check_size_bounds(dfa) ? "hold" : "FAIL") << '\n';
  bool ok = report.ok && (!connected || check_size_bounds(dfa));
  out << (ok ? "valid" : "invalid") << '\n';
  return ok ? kSuccess : kValidationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transition and state complexity of incomplete DFAs", "pdfa"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"default", "table", "lines"}));
  };

  auto* analyze = app.add_subcommand("analyze", "Print sc, tc, tc_b and Nerode class count of a DFA");
  analyze->add_option("file", o.files, "DFA in .pdfa format")->required()->expected(1);
  analyze->add_option("--dot", o.dot_path, "Write the minimal DFA as Graphviz DOT");
  add_format(analyze);
  analyze->callback([&] { action = [&] { return cmd_analyze(o, out); }; });

  auto* op = app.add_subcommand("op", "Apply union, intersect or complement");
  op->add_option("operation", o.op_name)->required()->check(CLI::IsMember({"union", "intersect", "complement"}));
  op->add_option("files", o.files, "Operand DFAs")->required();
  op->add_option("--out", o.out_path, "Write the constructed DFA");
  op->add_option("--min-out", o.min_out_path, "Write the minimized DFA (default: <out>.min.pdfa)");
  op->add_option("--dot", o.dot_path, "Write the minimized DFA as Graphviz DOT");
  add_format(op);
  op->callback([&] { action = [&] { return cmd_op(o, out); }; });

  auto* witness = app.add_subcommand("witness", "Emit a witness DFA");
  witness->add_option("family", o.family, "union-symbol, union-multi, union-total, unary-cycle, unary-singleton, "
                                          "chain-star or epsilon")
      ->required();
  witness->add_option("--n", o.n);
  witness->add_option("--k", o.k);
  witness->add_option("--m", o.m);
  witness->add_option("--a", o.a, "Star symbol (chain-star)");
  witness->add_option("--b", o.b, "Loop/chain symbol");
  witness->add_option("--c", o.c, "Cycle symbol");
  witness->add_option("--loop", o.loop_sym, "Loop symbol (union-total)");
  witness->add_option("--cycle", o.cycle_sym, "Cycle symbol (union-total)");
  witness->add_option("--kmap", o.kmap, "Self-loop counts for union-multi, e.g. a=1,b=2");
  witness->add_option("--alphabet", o.alphabet, "Alphabet symbols in order, e.g. abc");
  witness->add_option("--out", o.out_path, "Write to a file instead of stdout");
  witness->add_option("--dot", o.dot_path, "Write Graphviz DOT");
  witness->callback([&] { action = [&] { return cmd_witness(o, out); }; });

  auto* check = app.add_subcommand("check", "Verify one bound, or the whole suite with --all");
  check->add_option("bound", o.bound, "Bound id, e.g. union-symbol-tight");
  check->add_flag("--all", o.all, "Run every tightness family and sampled soundness check");
  check->add_option("--max-n", o.max_n, "Largest witness size for --all");
  for (const char* name : {"n1", "n2", "k1", "k2", "n", "m", "sigma"}) {
    check->add_option_function<std::size_t>(std::string("--") + name,
                                            [&o, name](const std::size_t& v) { o.bound_params[name] = v; });
  }
  check->add_option_function<std::size_t>("--max-states",
                                          [&o](const std::size_t& v) { o.bound_params["max_states"] = v; });
  check->add_option_function<std::size_t>("--max-alphabet",
                                          [&o](const std::size_t& v) { o.bound_params["max_alphabet"] = v; });
  check->add_option("--seed", o.seed, "Seed for sampled checks");
  check->add_option("--samples", o.samples, "Number of sampled pairs");
  check->add_flag("--artifacts", o.artifacts, "Print the minimized automata behind each measurement");
  add_format(check);
  check->callback([&] { action = [&] { return cmd_check(o, out); }; });

  auto* oracle = app.add_subcommand("oracle", "Brute-force certification");
  oracle->require_subcommand(1);
  auto* min_tr = oracle->add_subcommand("min-transitions", "Exhaustive minimum transition counts");
  min_tr->add_option("file", o.files)->required()->expected(1);
  min_tr->add_option("--max-states", o.max_states, "Search cap (default sc+1)");
  add_format(min_tr);
  min_tr->callback([&] { action = [&] { return cmd_min_transitions(o, out); }; });
  auto* lemma1 = oracle->add_subcommand("verify-lemma1", "Check the minimizer against exhaustive search");
  lemma1->add_option("--max-states", o.max_states)->required();
  lemma1->add_option("--alphabet", o.alphabet)->required();
  lemma1->add_option("--shards", o.shards, "Concurrent shards");
  lemma1->callback([&] { action = [&] { return cmd_verify_lemma1(o, out); }; });
  auto* equiv = oracle->add_subcommand("equiv", "Decide language equivalence");
  equiv->add_option("files", o.files)->required()->expected(2);
  equiv->callback([&] { action = [&] { return cmd_equiv(o, out); }; });

  auto* validate_cmd = app.add_subcommand("validate", "Check well-formedness and size bounds");
  validate_cmd->add_option("file", o.files)->required()->expected(1);
  validate_cmd->callback([&] { action = [&] { return cmd_validate(o, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  try {
    return action ? action() : kUsageError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace pdfa::cli
