#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "leibniz/algebra.hpp"
#include "leibniz/derivation.hpp"
#include "leibniz/endomorphism.hpp"
#include "leibniz/error.hpp"
#include "leibniz/finmat.hpp"
#include "leibniz/polynomial.hpp"
#include "leibniz/text.hpp"
#include "leibniz/verify.hpp"

namespace py = pybind11;
using namespace leibniz;

namespace {

// Python ints, fractions and strings all go through the scalar grammar.
Scalar to_scalar(const Field& field, const py::handle& value) {
  if (py::isinstance<Scalar>(value)) return value.cast<Scalar>();
  return parse_scalar(field, py::str(value).cast<std::string>());
}

std::vector<Scalar> to_gamma(const Field& field, const py::sequence& values) {
  std::vector<Scalar> gamma;
  for (const auto& v : values) gamma.push_back(to_scalar(field, v));
  return gamma;
}

std::vector<std::string> gamma_strings(const std::vector<Scalar>& gamma) {
  std::vector<std::string> out;
  for (const auto& g : gamma) out.push_back(g.to_string());
  return out;
}

Field field_arg(const std::string& name) { return Field::parse(name); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic in the cyclic left Leibniz algebra";

  static py::handle error_type = py::exception<Error>(m, "LeibnizError").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = error_type(py::str(e.what()));
      exc.attr("code") = static_cast<int>(e.code());
      exc.attr("name") = std::string(error_name(e.code()));
      if (const auto* obstruction = dynamic_cast<const CharPObstruction*>(&e)) {
        exc.attr("indices") = obstruction->indices();
      }
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<Field>(m, "Field")
      .def(py::init(&field_arg), py::arg("name") = "Q")
      .def_static("rationals", &Field::rationals)
      .def_static("prime", &Field::prime)
      .def_property_readonly("characteristic", &Field::characteristic)
      .def_property_readonly("name", &Field::name)
      .def(py::self == py::self)
      .def("__str__", &Field::name)
      .def("__repr__", [](const Field& f) { return "Field('" + f.name() + "')"; });

  py::class_<Scalar>(m, "Scalar")
      .def(py::init([](const py::handle& value, const std::string& field) { return to_scalar(field_arg(field), value); }),
           py::arg("value"), py::arg("field") = "Q")
      .def_property_readonly("field", &Scalar::field)
      .def("is_zero", &Scalar::is_zero)
      .def("inv", &Scalar::inv)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &Scalar::to_string)
      .def("__repr__", [](const Scalar& s) { return "Scalar('" + s.to_string() + "', '" + s.field().name() + "')"; });

  py::class_<Element>(m, "Element")
      .def(py::init([](const std::string& text, const std::string& field) { return parse_element(field_arg(field), text); }),
           py::arg("text"), py::arg("field") = "Q")
      .def_static("basis", [](const Field& f, Index n) { return Element::basis(f, n); })
      .def_property_readonly("field", &Element::field)
      .def_property_readonly("terms",
                             [](const Element& x) {
                               std::vector<std::pair<Index, std::string>> out;
                               for (const auto& [n, c] : x.terms()) out.emplace_back(n, c.to_string());
                               return out;
                             })
      .def("coeff", &Element::coeff)
      .def("is_zero", &Element::is_zero)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__rmul__", [](const Element& x, const py::handle& c) { return x.scaled(to_scalar(x.field(), c)); })
      .def("__str__", &Element::to_string)
      .def("__repr__", [](const Element& x) { return "Element('" + x.to_string() + "')"; });

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init([](const std::string& text, const std::string& field) {
             return parse_polynomial(field_arg(field), text);
           }),
           py::arg("text"), py::arg("field") = "Q")
      .def_property_readonly("degree", &Polynomial::degree)
      .def_property_readonly("coeffs", [](const Polynomial& p) { return gamma_strings(p.coeffs()); })
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__str__", &Polynomial::to_string)
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + p.to_string() + "')"; });

  py::class_<Endo>(m, "Endo")
      .def(py::init([](const py::sequence& gamma, const std::string& field) {
             const Field f = field_arg(field);
             return Endo::from_gamma(f, to_gamma(f, gamma));
           }),
           py::arg("gamma"), py::arg("field") = "Q")
      .def_static("parse", [](const std::string& text, const std::string& field) { return parse_endo(field_arg(field), text); },
                  py::arg("text"), py::arg("field") = "Q")
      .def_property_readonly("gamma", [](const Endo& f) { return gamma_strings(f.gamma()); })
      .def_property_readonly("degree", &Endo::degree)
      .def_property_readonly("field", &Endo::field)
      .def("__call__", [](const Endo& f, const Element& x) { return apply(f, x); })
      .def("__matmul__", [](const Endo& f, const Endo& g) { return compose(f, g); })
      .def(py::self == py::self)
      .def("__str__", &Endo::to_string)
      .def("__repr__", &Endo::to_string);

  py::class_<Derivation>(m, "Derivation")
      .def(py::init([](const py::sequence& gamma, const std::string& field) {
             const Field f = field_arg(field);
             return Derivation::from_gamma(f, to_gamma(f, gamma));
           }),
           py::arg("gamma"), py::arg("field") = "Q")
      .def_static("parse",
                  [](const std::string& text, const std::string& field) { return parse_derivation(field_arg(field), text); },
                  py::arg("text"), py::arg("field") = "Q")
      .def_property_readonly("gamma", [](const Derivation& f) { return gamma_strings(f.gamma()); })
      .def_property_readonly("degree", &Derivation::degree)
      .def_property_readonly("field", &Derivation::field)
      .def("in_ideal", &Derivation::in_ideal)
      .def("__call__", [](const Derivation& f, const Element& x) { return apply(f, x); })
      .def(py::self == py::self)
      .def("__str__", &Derivation::to_string)
      .def("__repr__", &Derivation::to_string);

  py::enum_<EndoClass>(m, "EndoClass")
      .value("ZeroSquareIdeal", EndoClass::ZeroSquareIdeal)
      .value("MonomorphismProper", EndoClass::MonomorphismProper)
      .value("Automorphism", EndoClass::Automorphism);

  py::class_<FinMatrixWindow>(m, "MatrixWindow")
      .def_property_readonly("size", &FinMatrixWindow::size)
      .def_property_readonly("valid_cols", &FinMatrixWindow::valid_cols)
      .def("entry", [](const FinMatrixWindow& w, Index r, Index c) { return w.entry(r, c); })
      .def("set_entry", [](FinMatrixWindow& w, Index r, Index c, const py::handle& v) {
        w.set_entry(r, c, to_scalar(w.field(), v));
      })
      .def("dump", &FinMatrixWindow::dump)
      .def("__matmul__", &matmul)
      .def("agrees_with", &agree_on_trusted)
      .def(py::self == py::self);

  m.def("bracket", &bracket);
  m.def("leibniz_defect", &leibniz_defect);
  m.def("compose", &compose);
  m.def("classify", &classify);
  m.def("inverse", &inverse);
  m.def("factorize", [](const Endo& f) {
    const MonFactorization m = factorize(f);
    return py::make_tuple(m.unipotent, m.diagonal);
  });
  m.def("phi", &phi);
  m.def("phi_inverse", &phi_inverse);
  m.def("conjugate_by_diagonal",
        [](const Endo& u, const py::handle& mu) { return conjugate_by_diagonal(u, to_scalar(u.field(), mu)); });
  m.def("lie_bracket", &lie_bracket);
  m.def("decompose", [](const Derivation& f) {
    const DerDecomposition d = decompose(f);
    return py::make_tuple(d.ideal_part, d.diagonal_part);
  });
  m.def("solve_commutator", [](const py::handle& mu, const Derivation& target) {
    return solve_commutator(to_scalar(target.field(), mu), target);
  });
  m.def(
      "gamma_window",
      [](Index k, Index window, const std::string& field) { return gamma_window(field_arg(field), k, window).to_string(); },
      py::arg("k"), py::arg("window"), py::arg("field") = "Q");
  m.def(
      "centers_window",
      [](Index window, const std::string& field) {
        const Centers c = centers_window(field_arg(field), window);
        py::dict out;
        out["left"] = c.left.to_string();
        out["right"] = c.right.to_string();
        out["center"] = c.center.to_string();
        return out;
      },
      py::arg("window"), py::arg("field") = "Q");
  m.def("matrix_of", py::overload_cast<const Endo&, Index>(&matrix_of), py::arg("map"), py::arg("size") = 24);
  m.def("matrix_of", py::overload_cast<const Derivation&, Index>(&matrix_of), py::arg("map"), py::arg("size") = 24);
  m.def("oracle_check_endo", &oracle_check_endo, py::arg("matrix"), py::arg("margin") = 1);
  m.def("oracle_check_der", &oracle_check_der, py::arg("matrix"), py::arg("margin") = 1);
  m.def(
      "verify",
      [](const std::string& field, std::uint64_t seed, std::size_t cases, Index window) {
        VerifyOptions o;
        o.field = field_arg(field);
        o.seed = seed;
        o.cases = cases;
        o.window = window;
        py::list out;
        for (const auto& r : run_verification(o)) {
          py::dict d;
          d["criterion"] = r.criterion;
          d["suite"] = r.name;
          d["cases"] = r.cases;
          d["passed"] = r.passed;
          d["ok"] = r.ok();
          d["failures"] = r.failures;
          out.append(d);
        }
        return out;
      },
      py::arg("field") = "Q", py::arg("seed") = 42, py::arg("cases") = 200, py::arg("window") = 24);
}
