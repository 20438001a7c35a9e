#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ksds/conjecture.hpp"
#include "ksds/errors.hpp"
#include "ksds/hecke_kiselman.hpp"
#include "ksds/io.hpp"
#include "ksds/kiselman.hpp"
#include "ksds/sds.hpp"
#include "ksds/universal.hpp"
#include "ksds/word.hpp"

namespace py = pybind11;
using namespace ksds;

namespace {

  Word word_from_list(std::vector<Letter> const& letters) {
    return Word(letters);
  }

  std::vector<Letter> letters_of(Word const& w) {
    return {w.begin(), w.end()};
  }

  Dag graph_from(py::object const& spec) {
    if (py::isinstance<py::str>(spec)) {
      return parse_graph_spec(spec.cast<std::string>());
    }
    auto [n, edges] = spec.cast<std::pair<std::size_t, std::vector<Edge>>>();
    return Dag(n, std::move(edges));
  }

  py::dict sweep_row_dict(SweepRow const& r) {
    py::dict d;
    d["n"]             = r.graph.n();
    d["edges"]         = r.graph.edges();
    d["hk_size"]       = r.hk_size;
    d["dynamics_size"] = r.dynamics_size;
    d["quotient_ok"]   = r.quotient_ok;
    d["match"]         = r.match;
    d["skipped"]       = r.skipped;
    d["skip_reason"]   = r.skip_reason;
    if (r.search_best) {
      d["search_best"] = *r.search_best;
    } else {
      d["search_best"] = py::none();
    }
    return d;
  }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Kiselman semigroups, Hecke-Kiselman monoids and sequential dynamical systems";

  auto base = py::register_exception<Error>(m, "KsdsError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", base.ptr());
  py::register_exception<GuardExceeded>(m, "GuardExceeded", base.ptr());

  py::class_<Word>(m, "Word")
      .def(py::init<>())
      .def(py::init([](std::string const& text) { return parse_word(text); }), py::arg("text"))
      .def(py::init(&word_from_list), py::arg("letters"))
      .def("letters", &letters_of)
      .def("__len__", &Word::size)
      .def("__getitem__",
           [](Word const& w, std::size_t i) {
             if (i >= w.size()) {
               throw py::index_error();
             }
             return w[i];
           })
      .def("__str__", [](Word const& w) { return to_string(w); })
      .def("__repr__", [](Word const& w) { return "Word('" + to_string(w) + "')"; })
      .def("__eq__", [](Word const& a, Word const& b) { return a == b; })
      .def("__hash__", [](Word const& w) { return WordHash()(w); })
      .def("__add__", [](Word const& a, Word const& b) { return a + b; })
      .def("to_string",
           [](Word const& w, std::string const& fmt) { return to_string(w, parse_word_format(fmt)); },
           py::arg("format") = "auto");
  py::implicitly_convertible<std::string, Word>();

  m.def("canonical_form", &ksds::canonical_form, py::arg("w"));
  m.def("canonical_form_restricted", &ksds::canonical_form_restricted, py::arg("w"), py::arg("k"));
  m.def("is_canonical", &ksds::is_canonical, py::arg("w"));
  m.def("kn_multiply", py::overload_cast<Word const&, Word const&>(&kn_multiply), py::arg("u"),
        py::arg("v"));
  m.def("join", &ksds::join, py::arg("u"), py::arg("v"));
  m.def("suffix_split", &ksds::suffix_split, py::arg("u"), py::arg("v"));
  m.def("truncate", &ksds::truncate, py::arg("w"), py::arg("a"));
  m.def("is_subword", &ksds::is_subword, py::arg("v"), py::arg("w"));
  m.def("is_quasi_subword", &ksds::is_quasi_subword, py::arg("v"), py::arg("w"));

  m.def(
      "enumerate_kn", [](std::size_t n) { return KnMonoid(n).words(); }, py::arg("n"),
      "Canonical words of K_n, identity first.");

  m.def(
      "universal_state_sizes",
      [](std::size_t n) {
        auto                     u = build_universal(n);
        std::vector<std::size_t> sizes;
        for (Vertex v = 1; v <= n; ++v) {
          sizes.push_back(u.states(v).size());
        }
        return sizes;
      },
      py::arg("n"));

  m.def(
      "verify_theorem",
      [](std::size_t n, std::size_t count, std::size_t max_length, std::uint64_t seed) {
        auto     report = verify_theorem_random(build_universal(n), count, max_length, seed);
        py::dict d;
        d["n"]               = report.n;
        d["checked"]         = report.checked;
        d["counterexamples"] = report.counterexamples.size();
        return d;
      },
      py::arg("n"), py::arg("count") = 1000, py::arg("max_length") = 12, py::arg("seed") = 0,
      "Evolves S_n^* along random words and compares with canonical forms.");

  m.def(
      "dynamics_size",
      [](std::size_t n) { return DynamicsMonoid(build_universal(n).system()).size(); },
      py::arg("n"), "Size of the dynamics monoid of S_n^*.");

  m.def(
      "hk_size",
      [](py::object const& graph) { return enumerate_hk(HkPresentation(graph_from(graph))).size(); },
      py::arg("graph"),
      "Size of HK for a graph given as 'complete:n', 'edgeless:n', JSON text or (n, edges).");

  m.def(
      "sweep",
      [](std::size_t max_vertices) {
        SweepOptions options;
        options.max_vertices = max_vertices;
        py::list rows;
        for (auto const& r : conjecture_sweep(options).rows) {
          rows.append(sweep_row_dict(r));
        }
        return rows;
      },
      py::arg("max_vertices") = 3);
}
