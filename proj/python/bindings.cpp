#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fplink/fpl.hpp"
#include "fplink/io.hpp"
#include "fplink/patterns.hpp"
#include "fplink/spectra.hpp"
#include "fplink/stochastic.hpp"

namespace py = pybind11;
using namespace fplink;

namespace {

py::int_ to_py(const mpz_class& x) { return py::int_(py::module_::import("builtins").attr("int")(x.get_str())); }

py::object to_py(const mpq_class& q) {
  return py::module_::import("fractions").attr("Fraction")(to_py(q.get_num()), to_py(q.get_den()));
}

py::list to_py(const BigIntVector& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

py::dict perron_dict(const PerronResult& p) {
  py::dict d;
  d["ok"] = p.ok;
  d["nullity"] = p.nullity;
  d["vector"] = to_py(p.vector);
  d["failure"] = p.failure;
  d["method"] = p.method == KernelMethod::Bareiss ? "bareiss" : "multimodular";
  return d;
}

KernelMethod method_of(const std::string& name) {
  if (name == "auto") return KernelMethod::Automatic;
  if (name == "bareiss") return KernelMethod::Bareiss;
  if (name == "multimodular") return KernelMethod::Multimodular;
  throw py::value_error("method must be 'auto', 'bareiss' or 'multimodular'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fully packed loop link patterns and the O(1) loop Hamiltonian.";

  py::register_exception<PatternError>(m, "PatternError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_ValueError);
  py::register_exception<StructureError>(m, "StructureError", PyExc_ValueError);
  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

  py::class_<LinkPattern>(m, "LinkPattern")
      .def(py::init([](const std::vector<int>& match) { return LinkPattern::from_match(match); }), py::arg("match"))
      .def_static("parse", &LinkPattern::parse)
      .def_static("from_parens", &LinkPattern::from_parens)
      .def_static("from_arcs",
                  [](int n, const std::vector<std::pair<int, int>>& arcs) { return LinkPattern::from_arcs(n, arcs); })
      .def_property_readonly("arcs", &LinkPattern::arcs)
      .def_property_readonly("match", &LinkPattern::match)
      .def("partner", &LinkPattern::partner)
      .def("arc_list", &LinkPattern::arc_list)
      .def("parens", &LinkPattern::to_parens)
      .def("adjacent_arc_count", &LinkPattern::adjacent_arc_count)
      .def("__str__", &LinkPattern::to_string)
      .def("__repr__", [](const LinkPattern& p) { return "LinkPattern('" + p.to_string() + "')"; })
      .def("__eq__", [](const LinkPattern& a, const LinkPattern& b) { return a == b; })
      .def("__lt__", [](const LinkPattern& a, const LinkPattern& b) { return a < b; })
      .def("__hash__", [](const LinkPattern& p) { return py::hash(py::make_tuple(p.arcs(), p.key())); });

  m.def("catalan", &catalan);
  m.def("enumerate_patterns", &enumerate_patterns);
  m.def("rank", &rank);
  m.def("unrank", &unrank);
  m.def("apply_h", &apply_h, py::arg("i"), py::arg("pattern"));
  m.def("rotate", &rotate);
  m.def("reflect", &reflect);

  py::class_<PatternHistogram>(m, "PatternHistogram")
      .def_readonly("n", &PatternHistogram::n)
      .def_readonly("counts", &PatternHistogram::counts)
      .def("total", &PatternHistogram::total)
      .def("__getitem__", [](const PatternHistogram& h, const LinkPattern& p) { return h.at(p); })
      .def("__eq__", [](const PatternHistogram& a, const PatternHistogram& b) { return a == b; })
      .def("csv", &histogram_csv)
      .def("json", &histogram_json);

  m.def("asm_count", [](int n) { return to_py(asm_count(n)); });
  m.def(
      "histogram",
      [](int n, int workers, int capacity) {
        py::gil_scoped_release release;
        return histogram(n, {.workers = workers, .capacity = capacity});
      },
      py::arg("n"), py::arg("workers") = 1, py::arg("capacity") = kDefaultFplCapacity);
  m.def("parse_histogram_csv", &parse_histogram_csv);
  m.def("parse_histogram_json", &parse_histogram_json);

  m.def(
      "asm_states",
      [](int n) {
        py::list out;
        for_each_state(n, [&](const FplState& s) {
          const auto a = state_to_asm(s);
          out.append(py::make_tuple(std::vector<int>(a.entries().begin(), a.entries().end()), link_pattern_of(s)));
        });
        return out;
      },
      "All (row-major ASM entries, link pattern) pairs for size n.");
  m.def("render_asm", [](int n, const std::vector<int>& entries) {
    return render_ascii(asm_to_state(AsmMatrix(n, std::vector<std::int8_t>(entries.begin(), entries.end()))));
  });
  m.def("render_svg", &render_svg);

  py::class_<SparseIntMatrix>(m, "SparseIntMatrix")
      .def_property_readonly("dim", &SparseIntMatrix::dim)
      .def("at", &SparseIntMatrix::at)
      .def("column_sums", &SparseIntMatrix::column_sums)
      .def("diagonal", &SparseIntMatrix::diagonal)
      .def("entries",
           [](const SparseIntMatrix& h) {
             std::vector<std::tuple<Rank, Rank, std::uint32_t>> out;
             for (const auto& e : h.entries()) out.emplace_back(e.row, e.col, e.value);
             return out;
           })
      .def("to_dense", [](const SparseIntMatrix& h) {
        std::vector<std::vector<std::uint32_t>> out(h.dim(), std::vector<std::uint32_t>(h.dim(), 0));
        for (const auto& e : h.entries()) out[e.row][e.col] = e.value;
        return out;
      });

  m.def(
      "build_hamiltonian",
      [](int n, int workers) {
        py::gil_scoped_release release;
        return build_hamiltonian(n, {.workers = workers});
      },
      py::arg("n"), py::arg("workers") = 1);
  m.def(
      "perron_vector",
      [](int n, const std::string& method) {
        PerronResult p;
        {
          py::gil_scoped_release release;
          p = perron_vector(build_hamiltonian(n), n, {.method = method_of(method), .power_check = false});
        }
        return perron_dict(p);
      },
      py::arg("n"), py::arg("method") = "auto", "Exact kernel of H - 2n I as positive coprime integers.");
  m.def(
      "verify",
      [](int n, int workers) {
        VerificationReport report;
        {
          py::gil_scoped_release release;
          report = verify_conjecture(n, {.enumeration = {.workers = workers}});
        }
        py::list checks;
        for (const auto& c : report.checks) {
          py::dict d;
          d["name"] = c.name;
          d["pass"] = c.pass;
          d["details"] = c.details;
          checks.append(d);
        }
        return py::make_tuple(report.all_pass(), checks);
      },
      py::arg("n"), py::arg("workers") = 1);

  m.def("player_a_probability",
        [](const PatternHistogram& h, const LinkPattern& t) { return to_py(player_a_probability(h, t)); });
  m.def("player_b_probability",
        [](const PatternHistogram& h, const LinkPattern& t) { return to_py(player_b_probability(h, t)); });
  m.def(
      "sample",
      [](int n, std::uint64_t samples, std::uint64_t burn_in, std::uint64_t seed, int chains, bool exact) {
        SamplerReport r;
        {
          py::gil_scoped_release release;
          std::optional<PatternDistribution> law;
          if (exact) law = stationary_law(histogram(n));
          r = sample_stationary(n, {.burn_in = burn_in, .samples = samples, .seed = seed, .chains = chains}, law);
        }
        py::dict d;
        d["n"] = r.n;
        d["seed"] = r.seed;
        d["samples"] = r.samples;
        d["empirical"] = r.empirical;
        d["tv_distance"] = r.tv_distance ? py::object(py::float_(*r.tv_distance)) : py::object(py::none());
        d["pass"] = r.pass ? py::object(py::bool_(*r.pass)) : py::object(py::none());
        return d;
      },
      py::arg("n"), py::arg("samples") = 1000000, py::arg("burn_in") = 1000, py::arg("seed") = 1,
      py::arg("chains") = 1, py::arg("exact") = true);
}
