#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pythsix/io.hpp"
#include "pythsix/realpoly.hpp"
#include "pythsix/solver.hpp"
#include "pythsix/surface.hpp"

namespace py = pybind11;
using namespace pythsix;

namespace {

Quaternion quat(const std::vector<std::string>& parts) {
  if (parts.size() != 4) throw Error(ErrorKind::ParseError, "a quaternion needs four components");
  return {FieldElement::parse(parts[0]), FieldElement::parse(parts[1]), FieldElement::parse(parts[2]),
          FieldElement::parse(parts[3])};
}

py::dict report_dict(const IsoCircleReport& r) {
  py::list curves;
  for (const auto& c : r.curves) {
    py::dict d;
    d["direction"] = std::string(1, c.direction);
    d["index"] = c.index;
    d["radius"] = c.fit.radius;
    d["max_residual"] = c.fit.max_residual;
    d["cocircular"] = c.cocircular;
    curves.append(d);
  }
  py::dict out;
  out["tol"] = r.tol;
  out["all_cocircular"] = r.all_cocircular();
  out["curves"] = curves;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quaternionic polynomial factorization and Pythagorean 6-tuples";

  py::register_exception<Error>(m, "PythsixError", PyExc_ValueError);

  py::class_<FieldElement>(m, "FieldElement")
      .def(py::init([](const std::string& s) { return FieldElement::parse(s); }))
      .def(py::init<long>())
      .def_static("sqrt", [](long n) { return FieldElement::sqrt_of_integer(BigInt(n)); })
      .def("__float__", &FieldElement::to_double)
      .def("__str__", &FieldElement::to_string)
      .def("__repr__", [](const FieldElement& a) { return "FieldElement('" + a.to_string() + "')"; })
      .def("is_exact", &FieldElement::is_exact)
      .def("inverse", &FieldElement::inverse)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self);

  py::class_<RPoly>(m, "RPoly")
      .def(py::init<>())
      .def(py::init<long>())
      .def(py::init<FieldElement>())
      .def_static("u", &RPoly::u)
      .def_static("v", &RPoly::v)
      .def_static("from_json", &rpoly_from_json)
      .def("to_json", &rpoly_to_json)
      .def("degu", &RPoly::degu)
      .def("degv", &RPoly::degv)
      .def("is_zero", &RPoly::is_zero)
      .def("__call__", [](const RPoly& r, double u, double v) { return eval_float(r, u, v); })
      .def("__str__", [](const RPoly& r) { return to_string(r); })
      .def("__repr__", [](const RPoly& r) { return "RPoly(" + to_string(r) + ")"; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self);

  py::class_<QPoly>(m, "QPoly")
      .def(py::init<>())
      .def(py::init<long>())
      .def(py::init([](const std::vector<std::string>& q) { return QPoly(quat(q)); }), py::arg("components"))
      .def(py::init([](const RPoly& r) { return to_qpoly(r); }))
      .def_static("u", &QPoly::u)
      .def_static("v", &QPoly::v)
      .def_static("i", [] { return QPoly(Quaternion::i()); })
      .def_static("j", [] { return QPoly(Quaternion::j()); })
      .def_static("k", [] { return QPoly(Quaternion::k()); })
      .def_static("from_json", &qpoly_from_json)
      .def("to_json", &qpoly_to_json)
      .def("degu", &QPoly::degu)
      .def("degv", &QPoly::degv)
      .def("is_zero", &QPoly::is_zero)
      .def("conj", [](const QPoly& q) { return conj(q); })
      .def("norm", [](const QPoly& q) { return norm(q); })
      .def("component", [](const QPoly& q, int n) { return component(q, n); })
      .def("__call__", [](const QPoly& q, double u, double v) { return eval_float(q, u, v); })
      .def("__str__", [](const QPoly& q) { return to_string(q); })
      .def("__repr__", [](const QPoly& q) { return "QPoly(" + to_string(q) + ")"; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def("__mul__", [](const QPoly& q, const RPoly& r) { return q * r; })
      .def("__rmul__", [](const QPoly& q, const RPoly& r) { return r * q; })
      .def(py::self == py::self);

  py::class_<Triple>(m, "Triple")
      .def(py::init<RPoly, QPoly, RPoly>(), py::arg("P"), py::arg("Q"), py::arg("R"))
      .def_readwrite("P", &Triple::P)
      .def_readwrite("Q", &Triple::Q)
      .def_readwrite("R", &Triple::R)
      .def("holds", &Triple::holds)
      .def(py::self == py::self);

  py::class_<PythTuple>(m, "PythTuple")
      .def(py::init([](const std::vector<RPoly>& xs) {
        if (xs.size() != 6) throw Error(ErrorKind::ParseError, "a tuple has six polynomials");
        PythTuple t;
        std::copy(xs.begin(), xs.end(), t.X.begin());
        return t;
      }))
      .def_property_readonly("X", [](const PythTuple& t) { return std::vector<RPoly>(t.X.begin(), t.X.end()); })
      .def("residual", &PythTuple::residual)
      .def("holds", &PythTuple::holds)
      .def_static("from_json", &tuple_from_json)
      .def("to_json", &tuple_to_json)
      .def(py::self == py::self);

  py::class_<SolveCertificate>(m, "SolveCertificate")
      .def_readonly("A", &SolveCertificate::A)
      .def_readonly("B", &SolveCertificate::B)
      .def_readonly("C", &SolveCertificate::C)
      .def_readonly("D", &SolveCertificate::D)
      .def_property_readonly("steps",
                             [](const SolveCertificate& c) {
                               std::vector<std::string> out;
                               for (const auto& s : c.transforms) out.push_back(to_string(s.kind));
                               return out;
                             })
      .def_property_readonly("exact", [](const SolveCertificate& c) { return c.backend == Backend::Exact; })
      .def_static("from_json", &certificate_from_json)
      .def("to_json", &certificate_to_json);

  m.def("transform", &transform, py::arg("triple"), py::arg("T"));
  m.def("tuple_to_triple", &tuple_to_triple);
  m.def("triple_to_tuple", &triple_to_tuple);
  m.def("tuple_from_ABCD", &tuple_from_ABCD, py::arg("A"), py::arg("B"), py::arg("C"), py::arg("D"),
        py::arg("require_22") = false);
  m.def(
      "solve_22",
      [](const PythTuple& x, bool approx, double tol) { return solve_22(x, {approx, tol}); }, py::arg("tuple"),
      py::arg("approx") = false, py::arg("tol") = 1e-9);
  m.def(
      "verify_certificate",
      [](const PythTuple& x, const SolveCertificate& c) { return verify_certificate(tuple_to_triple(x), c); });
  m.def("solve_univariate", [](const Triple& t) {
    UnivariateFactors f = solve_univariate(t);
    return py::make_tuple(f.A, f.B, f.D);
  });
  m.def("is_reducible_linear_v", [](const QPoly& q) {
    ReducibilityResult r = is_reducible_linear_v(q);
    return py::make_tuple(to_string(r.kind), r.factors);
  });
  m.def("factor_real_univariate", [](const RPoly& r) {
    std::vector<std::pair<RPoly, int>> out;
    for (const auto& f : factor_real_univariate(r).factors) out.emplace_back(f.factor, f.multiplicity);
    return out;
  });

  m.def("clifford_point", &clifford_point);
  m.def("stereo_from_one", &stereo_from_one);
  m.def("invert", py::overload_cast<const Vec3&, const Vec3&, double>(&invert));
  m.def(
      "euclidean_report",
      [](const Vec3& ca, double ra, const Vec3& na, const Vec3& cb, double rb, const Vec3& nb, std::size_t nu,
         std::size_t nv, double tol) {
        return report_dict(check_iso_circles(gen_euclidean({ca, ra, na}, {cb, rb, nb}, nu, nv), tol));
      },
      py::arg("center_a"), py::arg("radius_a"), py::arg("normal_a"), py::arg("center_b"), py::arg("radius_b"),
      py::arg("normal_b"), py::arg("nu") = 32, py::arg("nv") = 32, py::arg("tol") = 1e-9);
  m.def(
      "clifford_report",
      [](const Vec3& axis_a, double angle_a, const Vec3& axis_b, double angle_b, std::size_t nu, std::size_t nv,
         double tol) { return report_dict(check_iso_circles(gen_clifford({axis_a, angle_a}, {axis_b, angle_b}, nu, nv), tol)); },
      py::arg("axis_a"), py::arg("angle_a"), py::arg("axis_b"), py::arg("angle_b"), py::arg("nu") = 32,
      py::arg("nv") = 32, py::arg("tol") = 1e-9);
  m.def(
      "sample_torus",
      [](double big, double small, std::size_t res) {
        double m = 1.25 * (big + small), h = 1.25 * small;
        return sample_cyclide(DarbouxCyclide::torus(big, small), {{-m, -m, -h}, {m, m, h}}, res).points;
      },
      py::arg("big"), py::arg("small"), py::arg("resolution") = 24);
}
