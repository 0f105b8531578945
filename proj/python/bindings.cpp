#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "pdfa/boolean_ops.hpp"
#include "pdfa/bounds.hpp"
#include "pdfa/error.hpp"
#include "pdfa/minimization.hpp"
#include "pdfa/oracle.hpp"
#include "pdfa/text_format.hpp"
#include "pdfa/witnesses.hpp"

namespace py = pybind11;
using namespace pdfa;

namespace {

py::object optional_state(State q) {
  if (q == kDead) return py::none();
  return py::int_(q);
}

py::list product_tags(const ProductDfa& p) {
  py::list tags;
  for (const auto& t : p.tags) tags.append(py::make_tuple(optional_state(t.left), optional_state(t.right)));
  return tags;
}

py::dict report_dict(const BoundCheckReport& r) {
  py::dict d;
  d["bound_id"] = to_string(r.bound_id);
  py::dict params;
  for (const auto& [k, v] : r.params) params[py::str(k)] = v;
  d["params"] = params;
  d["formula"] = r.formula_value;
  d["measured"] = r.measured_value;
  d["verdict"] = to_string(r.relation);
  d["details"] = r.details;
  d["line"] = render_line(r);
  return d;
}

Params to_params(const py::dict& d) {
  Params p;
  for (auto item : d) p.emplace_back(py::cast<std::string>(item.first), py::cast<std::size_t>(item.second));
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "State and transition complexity of incomplete DFAs";

  // Translators are tried newest first, so the subclass goes last.
  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", input_error.ptr());

  py::class_<PartialDfa>(m, "PartialDfa")
      .def(py::init([](const std::string& alphabet, std::size_t states, State start) {
             return PartialDfa(Alphabet(alphabet), states, start);
           }),
           py::arg("alphabet"), py::arg("states"), py::arg("start") = 0)
      .def_property_readonly("alphabet", [](const PartialDfa& d) { return d.alphabet().symbols(); })
      .def_property_readonly("state_count", &PartialDfa::state_count)
      .def_property("start", &PartialDfa::start, &PartialDfa::set_start)
      .def_property_readonly("accepting", &PartialDfa::accepting)
      .def("is_accepting", &PartialDfa::is_accepting)
      .def("set_accepting", &PartialDfa::set_accepting, py::arg("state"), py::arg("accepting") = true)
      .def("set_transition", py::overload_cast<State, char, State>(&PartialDfa::set_transition))
      .def("next", [](const PartialDfa& d, State q, char symbol) { return d.next(q, d.alphabet().require(symbol)); })
      .def("accepts", [](const PartialDfa& d, const std::string& word) { return accepts(d, word); })
      .def("transition_counts",
           [](const PartialDfa& d) {
             auto c = transition_counts(d);
             py::dict out;
             out["total"] = c.total;
             for (const auto& [s, v] : c.per_symbol) out[py::str(std::string(1, s))] = v;
             return out;
           })
      .def("is_connected", [](const PartialDfa& d) { return is_connected(d); })
      .def("to_text", [](const PartialDfa& d) { return render_dfa(d); })
      .def("to_dot", [](const PartialDfa& d) { return render_dot(d); })
      .def(py::self == py::self)
      .def("__repr__", [](const PartialDfa& d) {
        return "<PartialDfa alphabet=" + d.alphabet().symbols() + " states=" + std::to_string(d.state_count()) + ">";
      });

  m.def("parse_dfa", [](const std::string& text) { return parse_dfa(text); });
  m.def("render_dfa", [](const PartialDfa& d) { return pdfa::render_dfa(d); });
  m.def("validate", [](const PartialDfa& d) {
    auto r = validate(d);
    return py::make_tuple(r.ok, r.violations);
  });
  m.def("trim", [](const PartialDfa& d) { return pdfa::trim(d); });
  m.def("minimize", [](const PartialDfa& d) { return pdfa::minimize(d); });
  m.def("canonicalize", [](const PartialDfa& d) { return pdfa::canonicalize(d); });
  m.def("complete_with_sink", [](const PartialDfa& d) {
    auto c = complete_with_sink(d);
    return py::make_tuple(c.dfa, c.sink);
  });
  m.def("complexity", [](const PartialDfa& d) {
    auto r = complexity(d);
    py::dict out;
    out["sc"] = r.sc;
    out["tc"] = r.tc;
    py::dict per;
    for (const auto& [s, v] : r.tc_per_symbol) per[py::str(std::string(1, s))] = v;
    out["tc_per_symbol"] = per;
    out["nerode_classes"] = r.nerode_classes;
    return out;
  });
  m.def("equivalent", [](const PartialDfa& a, const PartialDfa& b) { return pdfa::equivalent(a, b); });
  m.def("distinguishing_word", [](const PartialDfa& a, const PartialDfa& b) { return pdfa::distinguishing_word(a, b); });

  m.def(
      "union_product",
      [](const PartialDfa& a1, const PartialDfa& a2, bool always_pad) {
        auto p = union_product(a1, a2, always_pad ? UnionPadding::kAlways : UnionPadding::kOnlyIfIncomplete);
        return py::make_tuple(p.dfa, product_tags(p));
      },
      py::arg("a1"), py::arg("a2"), py::arg("always_pad") = true);
  m.def("intersection_product", [](const PartialDfa& a1, const PartialDfa& a2) {
    auto p = intersection_product(a1, a2);
    return py::make_tuple(p.dfa, product_tags(p));
  });
  m.def("complement", [](const PartialDfa& a) { return complement(a); });
  m.def("predicted_union_symbol_count", &predicted_union_symbol_count);

  m.def("union_symbol_witness", [](std::size_t n, std::size_t k, char b, char c, const std::string& alphabet) {
    return union_symbol_witness(n, k, b, c, Alphabet(alphabet));
  }, py::arg("n"), py::arg("k"), py::arg("b") = 'b', py::arg("c") = 'c', py::arg("alphabet") = "bc");
  m.def("union_multi_witness",
        [](std::size_t n, const std::map<char, std::size_t>& k_map, char c, const std::string& alphabet) {
          return union_multi_witness(n, k_map, c, Alphabet(alphabet));
        });
  m.def("union_total_witness", [](std::size_t n, char loop, char cycle, const std::string& alphabet) {
    return union_total_witness(n, loop, cycle, Alphabet(alphabet));
  }, py::arg("n"), py::arg("loop"), py::arg("cycle") = 'c', py::arg("alphabet") = "abc");
  m.def("unary_cycle", [](std::size_t n, const std::string& alphabet, char b) {
    return unary_cycle(n, Alphabet(alphabet), b);
  }, py::arg("n"), py::arg("alphabet") = "b", py::arg("b") = 'b');
  m.def("unary_singleton", [](std::size_t n, const std::string& alphabet, char b) {
    return unary_singleton(n, Alphabet(alphabet), b);
  }, py::arg("n"), py::arg("alphabet") = "b", py::arg("b") = 'b');
  m.def("chain_star_witness", [](std::size_t m_, const std::string& alphabet) {
    return chain_star_witness(m_, Alphabet(alphabet));
  }, py::arg("m"), py::arg("alphabet") = "ab");
  m.def("epsilon_lang", [](const std::string& alphabet) { return epsilon_lang(Alphabet(alphabet)); });

  m.def("check_bound", [](const std::string& id, const py::dict& params) {
    return report_dict(check_bound(parse_bound_id(id), to_params(params)));
  }, py::arg("bound_id"), py::arg("params") = py::dict());
  m.def("run_suite", [](std::size_t max_n, std::uint64_t seed, std::size_t samples) {
    py::list out;
    for (const auto& r : run_suite(max_n, seed, samples)) out.append(report_dict(r));
    return out;
  }, py::arg("max_n") = 5, py::arg("seed") = kDefaultSeed, py::arg("samples") = 200);

  m.def("enumerate_dfas", [](std::size_t max_states, const std::string& alphabet) {
    return enumerate_dfas(max_states, Alphabet(alphabet));
  });
  m.def("brute_min_transitions", [](const PartialDfa& target, std::size_t max_states) {
    auto r = brute_min_transitions(target, max_states);
    py::dict out;
    out["min_total"] = r.min_total;
    py::dict per;
    for (const auto& [s, v] : r.min_per_symbol) per[py::str(std::string(1, s))] = v;
    out["min_per_symbol"] = per;
    out["witness"] = r.witness_dfa;
    out["search_states"] = r.search_states;
    return out;
  }, py::arg("target"), py::arg("max_states") = 0);
  m.def("verify_lemma1", [](std::size_t max_states, const std::string& alphabet, std::size_t shards) {
    MinimalityReport r;
    {
      py::gil_scoped_release release;
      r = verify_lemma1(max_states, Alphabet(alphabet), {}, shards);
    }
    py::dict out;
    out["passed"] = r.pass;
    out["dfas_enumerated"] = r.dfas_enumerated;
    out["languages_checked"] = r.languages_checked;
    out["counterexamples"] = r.counterexamples.size();
    out["undefined_count_violations"] = r.undefined_count_violations;
    return out;
  }, py::arg("max_states"), py::arg("alphabet"), py::arg("shards") = 1);
}
