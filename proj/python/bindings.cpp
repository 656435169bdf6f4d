#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kappacert/cli.hpp"
#include "kappacert/fano.hpp"
#include "kappacert/json_io.hpp"
#include "kappacert/quotient.hpp"
#include "kappacert/raynaud.hpp"
#include "kappacert/tango.hpp"

namespace py = pybind11;
using namespace kappacert;

namespace {

std::vector<quotient::ChartFlag> parse_pattern(const std::vector<std::string>& flags) {
  std::vector<quotient::ChartFlag> out;
  for (const auto& f : flags) {
    if (f == "R") out.push_back(quotient::ChartFlag::R);
    else if (f == "One") out.push_back(quotient::ChartFlag::One);
    else throw py::value_error("chart flags are 'R' or 'One', got '" + f + "'");
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact certificates for counterexamples to subadditivity of Kodaira dimension";

  static py::exception<Error> error_type(m, "KappacertError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error_type, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::class_<tango::RaynaudParams>(m, "RaynaudParams")
      .def_readonly("p", &tango::RaynaudParams::p)
      .def_readonly("e", &tango::RaynaudParams::e)
      .def_readonly("l", &tango::RaynaudParams::l)
      .def_readonly("r", &tango::RaynaudParams::r)
      .def_readonly("qS", &tango::RaynaudParams::qS)
      .def_readonly("degD", &tango::RaynaudParams::degD)
      .def_readonly("degDprime", &tango::RaynaudParams::degDprime)
      .def_readonly("genusC", &tango::RaynaudParams::genusC)
      .def("__repr__", [](const tango::RaynaudParams& v) {
        std::ostringstream os;
        os << "RaynaudParams(p=" << v.p << ", e=" << v.e << ", l=" << v.l << ")";
        return os.str();
      });

  m.def("validate_params", &tango::validate_params, py::arg("p"), py::arg("e"), py::arg("l"));
  m.def("curve_invariants", [](const tango::RaynaudParams& params) {
    const auto inv = tango::curve_invariants(params);
    py::dict d;
    d["deg_canonical"] = inv.deg_canonical;
    d["genus"] = inv.genus;
    d["degD"] = inv.degD;
    d["degDprime"] = inv.degDprime;
    return d;
  });
  m.def("check_kc_equals_pd", &tango::check_KC_equals_pD);
  m.def("class_identities", [](const tango::RaynaudParams& params) {
    py::dict d;
    for (const auto& check : tango::class_identities(params).checks) d[py::str(check.name)] = check.passed;
    return d;
  });

  m.def("certify_kappa_negative_json",
        [](const tango::RaynaudParams& params, Int m_, Int n_max) {
          return json(raynaud::certify_kappa_negative(params, m_, n_max)).dump();
        },
        py::arg("params"), py::arg("m"), py::arg("n_max") = 20);
  m.def("kappa_surface", [](const tango::RaynaudParams& params) {
    return raynaud::to_string(raynaud::kappa_surface(params).kind);
  });
  m.def("m0_bounds", [](const tango::RaynaudParams& params) {
    const auto b = raynaud::m0_bounds(params);
    return py::make_tuple(b.lower, b.upper);
  });
  m.def("pushforward_product_json", [](const tango::RaynaudParams& params, Int m_, Int n) {
    return json(raynaud::pushforward_product(params, m_, n)).dump();
  });
  m.def("assemble_counterexample_1_json", [](const tango::RaynaudParams& params, Int m_) {
    return json(raynaud::assemble_counterexample_1(params, m_)).dump();
  });

  py::class_<quotient::CyclicQuotient>(m, "CyclicQuotient")
      .def(py::init<Int, std::vector<Int>>(), py::arg("q"), py::arg("weights"))
      .def_property_readonly("q", &quotient::CyclicQuotient::q)
      .def_property_readonly("p", &quotient::CyclicQuotient::p)
      .def_property_readonly("weights", &quotient::CyclicQuotient::weights)
      .def("__eq__", [](const quotient::CyclicQuotient& a, const quotient::CyclicQuotient& b) { return a == b; });

  py::class_<quotient::SingularityClass>(m, "SingularityClass")
      .def_property_readonly("kind", [](const quotient::SingularityClass& s) { return quotient::to_string(s.kind); })
      .def_readonly("witness", &quotient::SingularityClass::witness)
      .def_readonly("min_sum", &quotient::SingularityClass::min_sum)
      .def("__eq__", [](const quotient::SingularityClass& a, const quotient::SingularityClass& b) { return a == b; })
      .def("__repr__", [](const quotient::SingularityClass& s) {
        return "SingularityClass(" + quotient::to_string(s.kind) + ", min_sum=" + std::to_string(s.min_sum) + ")";
      });

  m.def("reid_tai", &quotient::reid_tai);
  m.def("box_points_oracle", &quotient::box_points_oracle);
  m.def("min_age", [](const quotient::CyclicQuotient& cq) {
    const auto r = quotient::min_age(cq);
    return py::make_tuple(r.numerator(), r.denominator());
  });
  m.def("chart_weights", [](Int m_, Int q, const std::vector<std::string>& flags) {
    const auto pattern = parse_pattern(flags);
    return quotient::chart_weights(m_, q, pattern);
  });
  m.def("enumerate_charts", &quotient::enumerate_charts, py::arg("n"), py::arg("m"), py::arg("q"));
  m.def("classify_y", &quotient::classify_Y, py::arg("n"), py::arg("m"), py::arg("q"));

  py::class_<fano::FanoParams>(m, "FanoParams")
      .def(py::init(&fano::FanoParams::make), py::arg("p"), py::arg("r"), py::arg("m"), py::arg("n"))
      .def_readonly("p", &fano::FanoParams::p)
      .def_readonly("r", &fano::FanoParams::rExp)
      .def_readonly("q", &fano::FanoParams::q)
      .def_readonly("m", &fano::FanoParams::m)
      .def_readonly("n", &fano::FanoParams::n);

  py::class_<fano::MinDimension>(m, "MinDimension")
      .def_readonly("p", &fano::MinDimension::p)
      .def_readonly("m", &fano::MinDimension::m)
      .def_readonly("r", &fano::MinDimension::rExp)
      .def_readonly("n", &fano::MinDimension::n)
      .def_readonly("dim", &fano::MinDimension::dim);

  m.def("anticanonical_coefficient", &fano::anticanonical_coefficient);
  m.def("conductor", &fano::conductor, py::arg("m"), py::arg("q"));
  m.def("is_fano", [](const fano::FanoParams& fp) { return fano::is_fano(fp).is_fano; });
  m.def("min_counterexample_dim", &fano::min_counterexample_dim, py::arg("p"));
  m.def("assemble_counterexample_2_json",
        [](const fano::FanoParams& fp) { return json(fano::assemble_counterexample_2(fp)).dump(); });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run a CLI invocation in-process; returns (exit_code, stdout, stderr).");
}
