#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "itsub/bcd.hpp"
#include "itsub/consistency.hpp"
#include "itsub/harness.hpp"
#include "itsub/subtype.hpp"
#include "itsub/syntax.hpp"

namespace py = pybind11;
using namespace itsub;

namespace {

template <typename D>
std::string render(const D& d, const std::string& format) {
  if (format == "tree") return derivation_to_tree(d);
  if (format == "json") return derivation_to_json(d);
  throw std::invalid_argument("format must be \"json\" or \"tree\"");
}

}  // namespace

PYBIND11_MODULE(_itsub, m) {
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("normalize", [](const std::string& a) { return print(parse(a)); },
        "Parse a type and print it back in canonical form.", py::arg("a"));

  m.def("check", [](const std::string& a, const std::string& b) { return is_subtype(parse(a), parse(b)); },
        "Decide a <: b.", py::arg("a"), py::arg("b"));

  m.def(
      "derive",
      [](const std::string& a, const std::string& b, const std::string& format) -> std::optional<std::string> {
        auto d = check_sub(parse(a), parse(b));
        if (!d) return std::nullopt;
        return render(*d, format);
      },
      "Certificate for a <: b, or None.", py::arg("a"), py::arg("b"), py::arg("format") = "json");

  m.def(
      "bcd",
      [](const std::string& a, const std::string& b, std::size_t max_depth,
         const std::string& format) -> std::optional<std::string> {
        auto d = bcd_search(parse(a), parse(b), max_depth);
        if (!d) return std::nullopt;
        return render(*d, format);
      },
      "Bounded classic search; None means inconclusive.", py::arg("a"), py::arg("b"),
      py::arg("max_depth") = kDefaultBcdSearchDepth, py::arg("format") = "json");

  m.def(
      "trans",
      [](const std::string& a, const std::string& b, const std::string& c,
         const std::string& format) -> std::optional<std::string> {
        const Ty tb = parse(b);
        auto d1 = check_sub(parse(a), tb);
        auto d2 = check_sub(tb, parse(c));
        if (!d1 || !d2) return std::nullopt;
        return render(trans_compose(*d1, *d2, ComposeOptions{true, nullptr}), format);
      },
      "Compose certificates for a <: b and b <: c.", py::arg("a"), py::arg("b"), py::arg("c"),
      py::arg("format") = "json");

  m.def("to_bcd", [](const std::string& json) { return derivation_to_json(to_bcd(derivation_from_json(json))); },
        py::arg("certificate"));
  m.def("from_bcd",
        [](const std::string& json) { return derivation_to_json(from_bcd(bcd_derivation_from_json(json))); },
        py::arg("certificate"));

  m.def("consistent", [](const std::string& a, const std::string& b) { return consistent(parse(a), parse(b)); },
        py::arg("a"), py::arg("b"));
  m.def("self_consistent", [](const std::string& a) { return self_consistent(parse(a)); }, py::arg("a"));

  m.def("suite_names", &suite_names);
  m.def(
      "_run_suite",
      [](const std::string& name, std::size_t atoms, std::size_t max_size, std::size_t triple_max_size,
         std::uint64_t seed, std::size_t samples, std::size_t bcd_depth, unsigned jobs, std::size_t failure_limit) {
        SuiteOptions o;
        o.pairs = {atoms, max_size};
        o.triples = {atoms, triple_max_size};
        o.seed = seed;
        o.random_samples = samples;
        o.bcd_depth = bcd_depth;
        o.jobs = jobs;
        o.failure_limit = failure_limit;
        SuiteReport r;
        {
          py::gil_scoped_release release;
          r = run_suite(name, o);
        }
        return reports_to_json({r}, false);
      },
      py::arg("name"), py::arg("atoms") = 2, py::arg("max_size") = 3, py::arg("triple_max_size") = 2,
      py::arg("seed") = 1, py::arg("samples") = 100000, py::arg("bcd_depth") = kDefaultBcdSearchDepth,
      py::arg("jobs") = 1, py::arg("failure_limit") = 20);
}
