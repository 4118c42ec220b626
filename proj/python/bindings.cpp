#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qverify/catalog.hpp"
#include "qverify/cli.hpp"
#include "qverify/report.hpp"

namespace py = pybind11;
using namespace qverify;

namespace {

py::dict report_dict(const VerificationReport &r)
{
    return py::module_::import("json").attr("loads")(report_to_json(r).dump());
}

SeriesArgs parse_args(const std::string &x, const std::string &y, const std::string &z)
{
    return {parse_monomial(x), parse_monomial(y), parse_monomial(z)};
}

} // namespace

PYBIND11_MODULE(_qverify, m)
{
    m.doc() = "Exact q-series identity verification";

    // Translators run newest first, so the base class goes in first.
    auto base = py::register_exception<Error>(m, "QVerifyError", PyExc_RuntimeError);
    py::register_exception<UnknownIdentity>(m, "UnknownIdentity", base.ptr());
    py::register_exception<OutOfDomain>(m, "OutOfDomain", base.ptr());

    m.def("list_identities", [] {
        py::list out;
        auto loads = py::module_::import("json").attr("loads");
        for (const auto &s : Catalog::standard().entries()) {
            out.append(loads(spec_to_json(s).dump()));
        }
        return out;
    });

    m.def(
        "verify",
        [](const std::string &id, long mm, long order) {
            VerificationReport r;
            {
                py::gil_scoped_release release;
                r = Catalog::standard().verify(id, mm, order);
            }
            return report_dict(r);
        },
        py::arg("id"), py::arg("m"), py::arg("order") = 50);

    m.def(
        "expand",
        [](const std::string &side, const std::string &id, long mm, long order) {
            const IdentitySpec &s = Catalog::standard().find(id);
            if (!s.m_domain.contains(mm)) {
                throw OutOfDomain(id + ": m outside " + s.m_domain.describe());
            }
            if (side != "lhs" && side != "rhs") {
                throw std::invalid_argument("side must be 'lhs' or 'rhs'");
            }
            LaurentSeries f = side == "lhs" ? s.lhs(mm, order) : s.rhs(mm, order);
            return to_string(f, Precision::at(order));
        },
        py::arg("side"), py::arg("id"), py::arg("m") = 0, py::arg("order") = 50);

    m.def(
        "verify_transformation",
        [](const std::string &name, const std::string &x, const std::string &y, const std::string &z, long order) {
            return report_dict(verify_transformation(transformation_from_name(name), parse_args(x, y, z), order));
        },
        py::arg("name"), py::arg("x"), py::arg("y"), py::arg("z"), py::arg("order") = 40);

    m.def(
        "verify_theorem",
        [](const std::string &name, const std::string &x, const std::string &y, const std::string &z, long mm,
           long order) {
            SeriesArgs p = parse_args(x, y, z);
            if (name == "t1ef") {
                return report_dict(verify_theorem_t1ef(p, mm, order));
            }
            if (name == "t2ef") {
                return report_dict(verify_theorem_t2ef(p, mm, order));
            }
            if (name == "t3ef-i" || name == "t3ef-ii") {
                return report_dict(verify_theorem_t3ef(name == "t3ef-i" ? 1 : 2, p, mm, order));
            }
            throw UnknownIdentity("unknown theorem '" + name + "'");
        },
        py::arg("name"), py::arg("x"), py::arg("y"), py::arg("z"), py::arg("m"), py::arg("order") = 40);

    m.def(
        "gauss_binomial", [](long n, long k, long r) { return to_string(gauss_binomial(n, k, QBase{r})); }, py::arg("n"),
        py::arg("k"), py::arg("r") = 1);

    m.def("run_cli", [](const std::vector<std::string> &args) {
        std::vector<const char *> argv{"qverify"};
        for (const auto &a : args) {
            argv.push_back(a.c_str());
        }
        std::ostringstream out, err;
        int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
