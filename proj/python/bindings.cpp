#include "satake/cli.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace satake;

namespace {

// Documents cross the boundary as JSON text; the Python side decodes them.
std::string text(const Json& j) { return dump(j); }

JobConfig job(const std::string& type, const std::string& coweight, std::optional<std::size_t> cap)
{
    JobConfig c;
    c.type = type;
    c.coweight = coweight;
    c.cap = cap;
    return c;
}

}  // namespace

PYBIND11_MODULE(_satake, m)
{
    m.doc() = "Exact Chevalley operators on Satake cohomology";
    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
    py::register_exception<LefschetzError>(m, "LefschetzError", PyExc_RuntimeError);

    m.def(
        "build",
        [](const std::string& type, const std::string& coweight, std::optional<std::size_t> cap) {
            return text(cmd_build(job(type, coweight, cap)));
        },
        py::arg("type"), py::arg("coweight"), py::arg("cap") = py::none());
    m.def(
        "verify",
        [](const std::string& type, const std::string& coweight, std::optional<std::size_t> cap) {
            bool passed = false;
            return text(cmd_verify(job(type, coweight, cap), passed));
        },
        py::arg("type"), py::arg("coweight"), py::arg("cap") = py::none());
    m.def(
        "verify_file",
        [](const std::string& path, const std::string& coweight) {
            JobConfig c;
            c.in = path;
            c.coweight = coweight;
            bool passed = false;
            return text(cmd_verify(c, passed));
        },
        py::arg("path"), py::arg("coweight") = "");
    m.def(
        "cells",
        [](const std::string& type, const std::string& coweight) { return text(cmd_cells(job(type, coweight, {}))); },
        py::arg("type"), py::arg("coweight"));
    m.def(
        "decompose",
        [](const std::string& type, const std::string& a, const std::string& b, std::optional<std::size_t> cap) {
            auto c = job(type, a, cap);
            c.coweight2 = b;
            return text(cmd_decompose(c));
        },
        py::arg("type"), py::arg("coweight"), py::arg("coweight2"), py::arg("cap") = py::none());

    m.def(
        "character",
        [](const std::string& type, const std::vector<int>& lambda) {
            auto d = make_datum(type);
            if (lambda.size() != d->rank() || !d->is_dominant(Coweight(lambda)))
                throw std::invalid_argument("character: expected a dominant coweight of rank " +
                                            std::to_string(d->rank()));
            py::dict out;
            for (const auto& [mu, k] : freudenthal_character(*d, Coweight(lambda)))
                out[py::tuple(py::cast(mu.to_vector()))] = k;
            return out;
        },
        py::arg("type"), py::arg("coweight"));
    m.def(
        "weyl_dimension",
        [](const std::string& type, const std::vector<int>& lambda) {
            auto d = make_datum(type);
            if (lambda.size() != d->rank())
                throw std::invalid_argument("weyl_dimension: rank mismatch");
            return weyl_dimension(*d, Coweight(lambda));
        },
        py::arg("type"), py::arg("coweight"));
    m.def(
        "classify",
        [](const std::string& type, const std::vector<int>& lambda) {
            auto d = make_datum(type);
            if (lambda.size() != d->rank())
                throw std::invalid_argument("classify: rank mismatch");
            return to_string(classify_coweight(*d, Coweight(lambda)));
        },
        py::arg("type"), py::arg("coweight"));
    m.def(
        "support_feasible",
        [](const std::string& type, const std::vector<int>& lambda, const std::vector<int>& mu,
           const std::vector<std::string>& word) {
            auto d = make_datum(type);
            if (lambda.size() != d->rank() || mu.size() != d->rank())
                throw std::invalid_argument("support_feasible: rank mismatch");
            std::vector<Letter> letters;
            for (const auto& w : word)
                letters.push_back(parse_letter(w));
            const auto v = support_feasible(*d, Coweight(lambda), Coweight(mu), letters);
            return py::make_tuple(v.feasible, v.violated);
        },
        py::arg("type"), py::arg("coweight"), py::arg("mu"), py::arg("word"));
    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::vector<const char*> argv{"satake_cli"};
            for (const auto& a : args)
                argv.push_back(a.c_str());
            std::ostringstream out, err;
            const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
