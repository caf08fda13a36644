#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "metalogic/coding.hpp"
#include "metalogic/complexity.hpp"
#include "metalogic/finite_models.hpp"
#include "metalogic/forcing.hpp"
#include "metalogic/json_io.hpp"
#include "metalogic/proof.hpp"
#include "metalogic/sexpr.hpp"

namespace py = pybind11;
using namespace metalogic;

namespace {

// Round trip through the json module; payloads are small.
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }
Json from_py(const py::object& o) {
  return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

Signature sig_of(const py::object& sig) {
  return sig.is_none() ? Signature::arithmetic_core() : signature_from_json(from_py(sig));
}

py::int_ to_int(const Natural& n) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(to_string(n).c_str(), nullptr, 10));
}
Natural from_int(const py::int_& i) { return parse_natural(py::str(i).cast<std::string>()); }

}  // namespace

PYBIND11_MODULE(metalogic, m) {
  m.doc() = "first-order syntax, coding, forcing and proof checking";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<SignatureError>(m, "SignatureError", PyExc_ValueError);
  py::register_exception<NotACodeError>(m, "NotACodeError", PyExc_ValueError);
  py::register_exception<ForcingError>(m, "ForcingError", PyExc_ValueError);
  py::register_exception<ModelError>(m, "ModelError", PyExc_ValueError);

  m.def("parse", [](const std::string& text, const py::object& sig) {
    const Formula f = parse_formula(text, sig_of(sig));
    Json vars = Json::array();
    for (const auto& v : free_vars(f)) vars.push_back(v);
    return to_py(Json{{"sexpr", render(f)}, {"size", ast_size(f)}, {"free_vars", vars}, {"ast", to_json(f)}});
  }, py::arg("text"), py::arg("signature") = py::none());

  m.def("classify", [](const std::string& text, const py::object& sig) {
    const Formula f = parse_formula(text, sig_of(sig));
    const RankPair r = rank(f);
    return to_py(Json{{"sigma", r.sigma}, {"pi", r.pi}, {"dp", dp(f)}, {"pdp", pdp(f)}});
  }, py::arg("text"), py::arg("signature") = py::none());

  m.def("encode", [](const std::string& text, bool term, const py::object& sig) {
    const Signature s = sig_of(sig);
    return to_int(term ? encode(parse_term(text, s)) : encode(parse_formula(text, s)));
  }, py::arg("text"), py::arg("term") = false, py::arg("signature") = py::none());

  m.def("decode", [](const py::int_& code) {
    const Syntax s = decode(from_int(code));
    if (const auto* f = std::get_if<Formula>(&s)) return render(*f);
    return render(std::get<Term>(s));
  }, py::arg("code"));

  m.def("forces", [](const std::string& condition, const std::string& formula) {
    return std::string(to_string(forces(parse_condition(condition), parse_formula(formula, set_signature()))));
  }, py::arg("condition"), py::arg("formula"));

  m.def("check_model", [](const py::object& model) {
    const FiniteModel fm = model_from_json(from_py(model));
    return to_py(to_json(check_as(fm), fm));
  }, py::arg("model"));

  m.def("check_proof", [](const py::object& proof, const std::vector<std::string>& premises) {
    const Proof p = proof_from_json(from_py(proof));
    std::vector<Formula> ps;
    for (const auto& text : premises) ps.push_back(parse_formula(text, p.signature));
    return to_py(to_json(check_proof(p, ps)));
  }, py::arg("proof"), py::arg("premises") = std::vector<std::string>{});
}
