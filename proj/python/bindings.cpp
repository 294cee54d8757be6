#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "sigtorus/clink.hpp"
#include "sigtorus/conway_slope.hpp"
#include "sigtorus/corrections.hpp"
#include "sigtorus/errors.hpp"
#include "sigtorus/families.hpp"
#include "sigtorus/hermitian.hpp"
#include "sigtorus/limits_verify.hpp"
#include "sigtorus/link_io.hpp"

namespace py = pybind11;
using namespace sigtorus;

namespace {

// str "p/q", int, fractions.Fraction or float.
Angle to_angle(const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) return Angle::parse(obj.cast<std::string>());
  if (py::isinstance<py::float_>(obj)) return Angle::from_double(obj.cast<double>());
  if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator")) {
    const std::string num = py::str(obj.attr("numerator")), den = py::str(obj.attr("denominator"));
    return Angle::parse(num + "/" + den);
  }
  throw AngleParseError("angles must be str, int, Fraction or float");
}

TorusPoint to_point(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) {
    const std::string s = obj.cast<std::string>();
    return s.empty() ? TorusPoint{} : TorusPoint::parse(s);
  }
  std::vector<Angle> out;
  for (const auto& item : obj) out.push_back(to_angle(item));
  return TorusPoint(std::move(out));
}

Schedule schedule_with(double tol) {
  Schedule s;
  s.tol = tol;
  return s;
}

std::string reports_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) out.push_back(r.to_json());
  return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "C-complex signatures of colored links";

  py::register_exception<Error>(m, "SigtorusError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<ColoredLink>(m, "Link")
      .def_static("from_json", [](const std::string& text) { return parse_link(nlohmann::json::parse(text)); })
      .def_static("load", [](const std::string& path) { return load_link(path); })
      .def_static("family", [](const std::string& name, std::int64_t parameter) {
        return make_family(FamilySpec{name, parameter});
      }, py::arg("name"), py::arg("parameter") = 0)
      .def_property_readonly("colors", &ColoredLink::colors)
      .def_property_readonly("component_count", &ColoredLink::component_count)
      .def_property_readonly("matrix_size", [](const ColoredLink& l) { return l.seifert().size(); })
      .def("to_json", [](const ColoredLink& l) { return to_json(l).dump(); });

  m.def("default_tolerance", [] { return kDefaultTolerance; });

  m.def("signature_nullity", [](const ColoredLink& link, const py::object& omega, double tol) {
    const SignatureNullity sn = signature_nullity(link, to_point(omega), tol);
    return py::make_tuple(sn.sigma, sn.eta);
  }, py::arg("link"), py::arg("omega"), py::arg("tol") = kDefaultTolerance);

  m.def("inertia", [](const std::vector<std::vector<std::complex<double>>>& rows, double tol) {
    CMatrix a(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw DimensionMismatch("inertia needs a square matrix");
      for (std::size_t j = 0; j < rows.size(); ++j) a(i, j) = rows[i][j];
    }
    const Inertia in = inertia(HermitianMatrix(a), tol);
    return py::make_tuple(in.n_plus, in.n_minus, in.n_zero);
  }, py::arg("matrix"), py::arg("tol") = kDefaultTolerance);

  m.def("directional_limit_json", [](const ColoredLink& link, const py::object& omega_rest, const std::string& side,
                                     double tol) {
    return directional_limit(link, to_point(omega_rest), parse_side(side), schedule_with(tol)).to_json().dump();
  }, py::arg("link"), py::arg("omega_rest"), py::arg("side") = "plus", py::arg("tol") = kDefaultTolerance);

  m.def("slope", [](const ColoredLink& link, const py::object& omega_rest) {
    const SlopeValue v = slope(link, to_point(omega_rest));
    const SlopeClass c = classify_slope(v);
    return py::make_tuple(v.infinite ? py::float_(INFINITY) : py::float_(v.value), c.s, c.epsilon);
  }, py::arg("link"), py::arg("omega_rest"));

  m.def("verify_json", [](const ColoredLink& link, const std::string& suite, int samples, std::uint64_t seed,
                          double tol) { return reports_json(run_suite(link, suite, samples, seed, schedule_with(tol))); },
        py::arg("link"), py::arg("suite") = "all", py::arg("samples") = 20, py::arg("seed") = 1,
        py::arg("tol") = kDefaultTolerance);

  m.def("predict_torres_json", [](const ColoredLink& link, const py::object& omega_rest, double tol) {
    return predict_torres(link, to_point(omega_rest), schedule_with(tol)).to_json().dump();
  }, py::arg("link"), py::arg("omega_rest"), py::arg("tol") = kDefaultTolerance);

  m.def("rho_ell", [](const std::vector<std::int64_t>& ell, const py::object& omega_rest) {
    return rho_ell(LinkingVector{ell}, to_point(omega_rest));
  }, py::arg("ell"), py::arg("omega_rest"));

  m.def("tau_ell", [](const std::vector<std::int64_t>& ell, const py::object& omega_rest) {
    return tau_ell(LinkingVector{ell}, to_point(omega_rest));
  }, py::arg("ell"), py::arg("omega_rest"));

  m.def("oracle_torus", [](std::int64_t ell, const py::object& a, const py::object& b) {
    const SigmaEta o = oracle_torus(ell, to_angle(a).exact(), to_angle(b).exact());
    return py::make_tuple(o.sigma, o.eta);
  }, py::arg("ell"), py::arg("theta1"), py::arg("theta2"));
}
