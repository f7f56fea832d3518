// Thin pybind11 layer. Expansions cross the boundary as their JSON text,
// rationals as strings such as "5/2".

#include "weiljac/borcherds.hpp"
#include "weiljac/cli.hpp"
#include "weiljac/errors.hpp"
#include "weiljac/fixtures.hpp"
#include "weiljac/kohnen.hpp"
#include "weiljac/numeric.hpp"
#include "weiljac/operators.hpp"
#include "weiljac/representations.hpp"
#include "weiljac/theta.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace weiljac;

namespace {

GramMatrix to_gram(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw ParseError("Gram matrix must be square");
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return GramMatrix(m);
}

using ComplexRows = std::vector<std::vector<std::complex<double>>>;

ComplexRows embed(const RepMatrix& r) {
    ComplexRows out(r.size(), std::vector<std::complex<double>>(r.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r.size(); ++j) out[i][j] = r.entries(i, j).embed();
    return out;
}

py::dict discriminant(const std::vector<std::vector<long>>& gram) {
    const GroupPtr a = discriminant_group(to_gram(gram));
    py::list elements, q;
    for (std::size_t i = 0; i < a->order(); ++i) {
        py::list coords;
        for (const auto& x : a->element(i)) coords.append(x.str());
        elements.append(coords);
        q.append(a->q(i).value().str());
    }
    py::dict d;
    d["order"] = a->order();
    d["level"] = a->level();
    d["signature"] = a->signature();
    d["elements"] = elements;
    d["q"] = q;
    d["gauss_sum"] = gauss_sum(*a).embed();
    return d;
}

py::tuple numeric(const NumericResult& r) { return py::make_tuple(r.pass, r.residual, r.tail); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Weil representations, theta decompositions and Jacobi forms of lattice index";

    static py::exception<Error> base(m, "WeiljacError");
    static py::exception<DomainError> domain(m, "DomainError", base.ptr());
    static py::exception<ParseError> parse(m, "ParseError", base.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            py::set_error(parse, e.what());
        } catch (const DomainError& e) {
            py::set_error(domain, e.what());
        } catch (const Error& e) {
            py::set_error(base, e.what());
        }
    });

    m.def("fixture_names", &fixture_names);
    m.def("fixture_text", &fixture_text, py::arg("name"));

    m.def("discriminant", &discriminant, py::arg("gram"));
    m.def(
        "weil",
        [](const std::vector<std::vector<long>>& gram, const std::string& word, bool dual) {
            return embed(rho_word(discriminant_group(to_gram(gram)), Mp2Word(word), dual));
        },
        py::arg("gram"), py::arg("word"), py::arg("dual") = true);

    m.def(
        "hecke_u", [](const std::string& f, std::size_t split, long ell) { return serialize(u_ell_vv(deserialize_vv(f), split, ell)); },
        py::arg("form"), py::arg("split"), py::arg("ell"));
    m.def(
        "hecke_u_jacobi", [](const std::string& phi, long ell) { return serialize(u_ell_jacobi(deserialize_jacobi(phi), ell)); },
        py::arg("phi"), py::arg("ell"));
    m.def(
        "theta_decompose", [](const std::string& f, std::size_t split) { return serialize(theta_decompose(deserialize_vv(f), split)); },
        py::arg("form"), py::arg("split"));
    m.def(
        "theta_compose", [](const std::string& phi) { return serialize(theta_compose(deserialize_jacobi(phi))); }, py::arg("phi"));
    m.def(
        "specialize", [](const std::string& phi) { return serialize(specialize_z0(deserialize_jacobi(phi))); }, py::arg("phi"));
    m.def(
        "theta_series",
        [](const std::vector<std::vector<long>>& gram, const std::string& prec) {
            return serialize(theta_series(to_gram(gram), Rational::parse(prec)));
        },
        py::arg("gram"), py::arg("prec"));
    m.def(
        "e3_a2", [](const std::string& prec) { return serialize(e3_a2_extended(Rational::parse(prec))); }, py::arg("prec"));

    m.def(
        "scalarize", [](const std::string& f) { return serialize(bb_scalarize(deserialize_vv(f))); }, py::arg("form"));
    m.def(
        "to_plus",
        [](const std::string& s, long weight) { return serialize(minus_to_plus(Level3Form{deserialize_scalar(s), weight, false}).series); },
        py::arg("series"), py::arg("weight"));
    m.def(
        "to_level3",
        [](const std::string& s, const std::string& weight) {
            return serialize(plus_to_level3(PlusSpaceForm{deserialize_scalar(s), Rational::parse(weight)}).series);
        },
        py::arg("series"), py::arg("weight"));

    m.def(
        "principal_part_table",
        [](long mm) {
            std::vector<std::pair<std::string, std::string>> rows;
            for (const auto& r : principal_part_table(mm)) rows.emplace_back(r.weight.str(), render_row(r));
            return rows;
        },
        py::arg("m"));
    m.def(
        "product_weight", [](long mm, const Vec3& v) { return product_weight(pullback_setup(mm, v)).str(); }, py::arg("m"),
        py::arg("v"));

    m.def(
        "check_s", [](const std::string& f, std::complex<double> tau, double tol) { return numeric(check_S_transformation(deserialize_vv(f), tau, tol)); },
        py::arg("form"), py::arg("tau"), py::arg("tol") = 1e-6);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::vector<const char*> argv{"weiljac"};
            for (const auto& a : args) argv.push_back(a.c_str());
            std::ostringstream out, err;
            const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
