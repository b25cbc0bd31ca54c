#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tq/analytic.hpp"
#include "tq/errors.hpp"
#include "tq/local_terms.hpp"
#include "tq/torsion_invariant.hpp"

namespace py = pybind11;

namespace {

py::object fraction(const tq::Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(tq::to_string(q));
}

tq::Rational from_python(const py::handle& x) { return tq::parse_rational(py::str(x).cast<std::string>()); }

py::object to_python(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& v : j) out.append(to_python(v));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (const auto& [k, v] : j.items()) out[py::str(k)] = to_python(v);
      return out;
    }
    default: return py::none();
  }
}

py::dict hom_rep_dict(const tq::HomRep& h) {
  py::dict out;
  for (auto c : tq::kCharLabels) out[py::str(tq::to_string(c))] = fraction(h[c]);
  return out;
}

tq::LocalRoute parse_route(const std::string& name) {
  if (name == "closed_form") return tq::LocalRoute::ClosedForm;
  if (name == "via_complex") return tq::LocalRoute::ViaComplex;
  throw tq::InputError("route must be 'closed_form' or 'via_complex', got '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact torsion invariants of real biquadratic fields";

  py::register_exception<tq::InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<tq::DomainError>(m, "DomainError", PyExc_ArithmeticError);
  py::register_exception<tq::ContractViolation>(m, "ContractViolation", PyExc_RuntimeError);

  m.def("field_data", [](long d1, long d2, bool allow_imaginary) {
    return to_python(tq::to_json(tq::field_data(d1, d2, allow_imaginary)));
  }, py::arg("d1"), py::arg("d2"), py::arg("allow_imaginary") = false);

  m.def("local_galois", [](long d1, long d2, long p, bool relabel) {
    return to_python(tq::to_json(tq::local_galois(tq::field_data(d1, d2), p, relabel)));
  }, py::arg("d1"), py::arg("d2"), py::arg("p"), py::arg("relabel_frobenius") = false);

  m.def("omega_loc_torsion",
        [](long d1, long d2, std::vector<long> extra_s, long lattice_m, int sign, bool allow_imaginary,
           bool relabel, const std::string& route) {
          tq::InvariantOptions o;
          o.extra_s = std::move(extra_s);
          o.lattice = {lattice_m, sign};
          o.allow_imaginary = allow_imaginary;
          o.relabel_frobenius = relabel;
          o.route = parse_route(route);
          return to_python(tq::to_json(tq::omega_loc_torsion(d1, d2, o)));
        },
        py::arg("d1"), py::arg("d2"), py::arg("extra_s") = std::vector<long>{}, py::arg("m") = 1,
        py::arg("sign") = 1, py::arg("allow_imaginary") = false, py::arg("relabel_frobenius") = false,
        py::arg("route") = "closed_form");

  m.def("sweep", [](long dmax, unsigned threads, bool include_reports) {
    tq::SweepSummary s;
    {
      py::gil_scoped_release release;
      s = tq::sweep(dmax, {}, threads);
    }
    return to_python(tq::to_json(s, include_reports));
  }, py::arg("dmax"), py::arg("threads") = 1, py::arg("include_reports") = false);

  m.def("tame_determinants", [](long p) {
    tq::TameComplexSpec spec{p};
    return hom_rep_dict(tq::class_representative(tq::build_tame_complex(spec), tq::valuation_iso(spec)));
  }, py::arg("p"), "Character values of the tame local complex class at the odd prime p.");

  m.def("verify_residue_resolution", [](long p) {
    py::list out;
    for (const auto& c : tq::verify_residue_resolution(p).checks) out.append(py::make_tuple(c.name, c.passed, c.detail));
    return out;
  }, py::arg("p"));

  m.def("resolvent_factor_check", [](long d1, long d2) {
    return to_python(tq::to_json(tq::resolvent_factor_check(tq::field_data(d1, d2))));
  }, py::arg("d1"), py::arg("d2"));

  m.def("l_ratio_numeric_check", [](long d1, long d2, long subfield, double tol) {
    auto f = tq::field_data(d1, d2);
    auto c = tq::l_ratio_numeric_check(tq::GaloisChar(tq::FiniteGroupId::V4, f.char_of_subfield(subfield)), f, tol);
    py::dict out;
    out["conductor"] = c.conductor;
    out["ratio_squared"] = c.lhs_numeric * c.lhs_numeric;
    out["expected"] = fraction(c.rhs_exact_squared);
    out["abs_error"] = c.abs_error_squared;
    out["passed"] = c.passed;
    return out;
  }, py::arg("d1"), py::arg("d2"), py::arg("subfield"), py::arg("tol") = 1e-8);

  m.def("odd_part_mod4", [](const py::object& q) { return tq::odd_part_mod4(from_python(q)).value(); }, py::arg("q"));

  m.def("induce_from_subgroup", [](const std::string& generator, const py::object& on_trivial,
                                   const py::object& on_sign) {
    auto h = tq::Subgroup::generated_by(tq::parse_element(tq::FiniteGroupId::V4, generator));
    auto [ranks, torsion] = tq::induce_from_subgroup(h, {from_python(on_trivial), from_python(on_sign)});
    return py::make_tuple(std::vector<long>(ranks.begin(), ranks.end()), torsion.value());
  }, py::arg("generator"), py::arg("on_trivial"), py::arg("on_sign"));
}
