#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "it2mabac/aggregation.hpp"
#include "it2mabac/error.hpp"
#include "it2mabac/fuzzy.hpp"
#include "it2mabac/linguistic.hpp"
#include "it2mabac/pipeline.hpp"
#include "it2mabac/problem.hpp"
#include "it2mabac/rank_distance.hpp"
#include "it2mabac/report.hpp"

namespace py = pybind11;
using namespace it2mabac;

namespace {

using Quint = std::array<double, 5>;

Quint quint(const GeneralizedTrapezoid& t) { return {t.a1(), t.a2(), t.a3(), t.a4(), t.height}; }

template <typename T>
std::vector<std::vector<T>> rows(const Matrix<T>& m) {
  std::vector<std::vector<T>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i].assign(m.row(i).begin(), m.row(i).end());
  return out;
}

}  // namespace

PYBIND11_MODULE(_it2mabac, m) {
  m.doc() = "Interval type-2 fuzzy MABAC";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      // args = (message, code name)
      PyErr_SetObject(error.ptr(), py::make_tuple(e.what(), std::string(to_string(e.code()))).ptr());
    }
  });

  py::class_<IT2TrFN>(m, "IT2TrFN")
      .def(py::init([](const Quint& upper, const Quint& lower, bool check_fou) {
             return IT2TrFN::make(upper, lower, check_fou);
           }),
           py::arg("upper"), py::arg("lower"), py::arg("check_fou") = false)
      .def_static("crisp", &IT2TrFN::crisp)
      .def_static("one", &IT2TrFN::one)
      .def_property_readonly("upper", [](const IT2TrFN& v) { return quint(v.upper()); })
      .def_property_readonly("lower", [](const IT2TrFN& v) { return quint(v.lower()); })
      .def("endpoints", &IT2TrFN::endpoints)
      .def("umf", [](const IT2TrFN& v, double x) { return umf_at(v, x); })
      .def("lmf", [](const IT2TrFN& v, double x) { return lmf_at(v, x); })
      .def("scale", [](const IT2TrFN& v, double k) { return scale(v, k); })
      .def("__add__", [](const IT2TrFN& a, const IT2TrFN& b) { return a + b; })
      .def("__mul__", [](const IT2TrFN& a, const IT2TrFN& b) { return a * b; })
      .def("__eq__", [](const IT2TrFN& a, const IT2TrFN& b) { return a == b; })
      .def("__repr__", [](const IT2TrFN& v) {
        std::ostringstream os;
        os << v;
        return "IT2TrFN" + os.str();
      });

  py::class_<LinguisticScale>(m, "LinguisticScale")
      .def_property_readonly("name", &LinguisticScale::name)
      .def("terms", &LinguisticScale::terms)
      .def("resolve", [](const LinguisticScale& s, const std::string& t) { return s.resolve(t); })
      .def("__contains__", [](const LinguisticScale& s, const std::string& t) { return s.contains(t); });
  m.def("builtin_scale", &builtin_scale, py::arg("id"));

  m.def("tit2fgbm",
        [](const std::vector<IT2TrFN>& values, double r, double s) { return tit2fgbm(values, {r, s}); },
        py::arg("values"), py::arg("r") = 1.0, py::arg("s") = 1.0);
  m.def("geometric_mean", [](const std::vector<IT2TrFN>& values) { return geometric_mean(values); });
  m.def("rank_to_one", [](const IT2TrFN& v, double lambda) { return rank_to_one(v, {lambda}); },
        py::arg("value"), py::arg("lam") = 0.5);
  m.def("distance", [](const IT2TrFN& a, const IT2TrFN& b, double lambda) { return distance(a, b, {lambda}); },
        py::arg("a"), py::arg("b"), py::arg("lam") = 0.5);

  py::class_<DecisionProblem>(m, "DecisionProblem")
      .def_readonly("name", &DecisionProblem::name)
      .def_readonly("alternatives", &DecisionProblem::alternatives)
      .def_readonly("experts", &DecisionProblem::experts)
      .def_property_readonly("criteria", [](const DecisionProblem& p) {
        std::vector<std::string> out;
        for (const auto& c : p.criteria) out.push_back(c.name);
        return out;
      });
  m.def("load_problem", &load_problem, py::arg("path"));
  m.def("parse_problem", [](const std::string& src) { return parse_problem(src); }, py::arg("source"));

  py::class_<PipelineTrace>(m, "Trace")
      .def_readonly("aggregated_weights", &PipelineTrace::aggregated_weights)
      .def_property_readonly("aggregated_decisions", [](const PipelineTrace& t) { return rows(t.aggregated_decisions); })
      .def_property_readonly("normalized", [](const PipelineTrace& t) { return rows(t.normalized); })
      .def_property_readonly("weighted", [](const PipelineTrace& t) { return rows(t.weighted); })
      .def_readonly("border", &PipelineTrace::border)
      .def_property_readonly("q", [](const PipelineTrace& t) { return rows(t.crisp.q); })
      .def_property_readonly("g", [](const PipelineTrace& t) { return t.crisp.g; })
      .def_property_readonly("delta", [](const PipelineTrace& t) { return rows(t.crisp.delta); })
      .def_property_readonly("scores", [](const PipelineTrace& t) { return t.ranking.scores; })
      .def_property_readonly("order", [](const PipelineTrace& t) { return t.ranking.order; });

  m.def(
      "solve",
      [](DecisionProblem p, std::optional<double> lambda, std::optional<double> r, std::optional<double> s,
         std::optional<std::string> baa) {
        if (lambda) p.params.rank.lambda = *lambda;
        if (r) p.params.bonferroni.r = *r;
        if (s) p.params.bonferroni.s = *s;
        if (baa) p.params.baa = parse_baa_operator(*baa);
        p.params.validate();
        return run(p);
      },
      py::arg("problem"), py::kw_only(), py::arg("lam") = py::none(), py::arg("r") = py::none(),
      py::arg("s") = py::none(), py::arg("baa") = py::none());
  m.def(
      "render",
      [](const DecisionProblem& p, const PipelineTrace& t, const std::string& format) {
        return render(p, t, parse_format(format));
      },
      py::arg("problem"), py::arg("trace"), py::arg("format") = "text");
}
