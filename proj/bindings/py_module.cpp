// Python extension module.  The surface is deliberately string-based: rational
// functions and operators travel as the same canonical text the CLI uses, and
// whole problems/certificates travel as JSON strings.  The pure-python package
// in python/dgal wraps these in dict-level helpers.
#include <pybind11/pybind11.h>

#include "dgal/errors.hpp"
#include "dgal/expr.hpp"
#include "dgal/ore.hpp"
#include "dgal/residues.hpp"
#include "dgal/runner.hpp"
#include "dgal/telescoper.hpp"

namespace py = pybind11;
using namespace dgal;

namespace {

std::string run_json(const std::string& problem) {
    return run_task(nlohmann::json::parse(problem)).dump(2);
}

bool verify_json(const std::string& cert) {
    return verify_certificate(nlohmann::json::parse(cert));
}

std::string canonical_form(const std::string& expr) {
    return serialize(parse_ratxt(expr));
}

std::string derivative_x(const std::string& expr) {
    return serialize(d_x(parse_ratxt(expr)));
}

std::string derivative_t(const std::string& expr) {
    return serialize(d_t(parse_ratxt(expr)));
}

std::string apply_operator(const std::string& op, const std::string& expr) {
    return serialize(apply(parse_operator(op), parse_ratxt(expr)));
}

py::dict telescope_py(const std::string& expr) {
    TelescopeCertificate cert = telescope(parse_ratxt(expr));
    py::dict out;
    out["input"] = serialize(cert.input);
    out["operator"] = serialize(cert.op);
    out["integral"] = serialize(cert.integral);
    py::list finite;
    for (const auto& [pole, res] : cert.residue_data.finite)
        finite.append(py::make_tuple(serialize(pole), serialize(res)));
    out["residues"] = finite;
    out["residue_at_infinity"] = serialize(cert.residue_data.at_infinity);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "creative telescoping and differential Galois checks over Q(t)(x)";
    m.attr("__version__") = kToolVersion;

    py::register_exception<Error>(m, "DgalError");

    m.def("run_json", &run_json,
          "execute one problem (JSON string) and return the certificate (JSON string)",
          py::arg("problem"));
    m.def("verify_json", &verify_json,
          "independently re-check a certificate (JSON string)", py::arg("certificate"));
    m.def("canonicalize", &canonical_form,
          "canonical form of an expression in x and t", py::arg("expr"));
    m.def("derivative_x", &derivative_x, "d/dx of an expression", py::arg("expr"));
    m.def("derivative_t", &derivative_t, "d/dt of an expression", py::arg("expr"));
    m.def("apply_operator", &apply_operator,
          "apply an operator in Dt to an expression", py::arg("op"), py::arg("expr"));
    m.def("telescope", &telescope_py,
          "telescoper certificate for f dx as a dict of canonical strings",
          py::arg("expr"));
}
