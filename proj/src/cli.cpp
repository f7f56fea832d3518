#include "weiljac/cli.hpp"

#include "weiljac/borcherds.hpp"
#include "weiljac/errors.hpp"
#include "weiljac/fixtures.hpp"
#include "weiljac/kohnen.hpp"
#include "weiljac/numeric.hpp"
#include "weiljac/operators.hpp"
#include "weiljac/representations.hpp"
#include "weiljac/theta.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace weiljac {

namespace {

using nlohmann::json;

// "-" reads stdin, "fixture:NAME" a bundled fixture, text starting with
// '[' or '{' is taken inline, anything else is a path.
std::string read_source(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    if (arg.rfind("fixture:", 0) == 0) return fixture_text(arg.substr(8));
    const auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{')) return arg;
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + arg + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json parse_json_arg(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error&) {
        throw ParseError(what + ": not valid JSON");
    }
}

std::vector<Integer> int_vec(const std::string& text, const std::string& what) {
    const json a = parse_json_arg(text, what);
    if (!a.is_array()) throw ParseError(what + ": expected an array of integers");
    std::vector<Integer> v;
    for (const auto& x : a) {
        if (!x.is_number_integer()) throw ParseError(what + ": expected an array of integers");
        v.emplace_back(x.get<long>());
    }
    return v;
}

IntMatrix int_matrix(const std::string& text, std::size_t n) {
    if (text.empty()) return IntMatrix(n, n);
    return to_integer(parse_rat_matrix(text));
}

Rational parse_rational(const std::string& text, const std::string& what) {
    const json v = parse_json_arg("\"" + text + "\"", what);
    try {
        mpq_class q(v.get<std::string>());
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw ParseError(what + ": '" + text + "' is not a rational");
    }
}

json cyclotomic_json(const Cyclotomic& c) {
    json coeffs = json::array();
    for (const auto& x : c.coeffs()) coeffs.push_back(x.str());
    return {{"order", c.order()}, {"coeffs", coeffs}};
}

json rat_vec_json(const RatVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

json rep_json(const RepMatrix& r) {
    json rows = json::array();
    for (std::size_t i = 0; i < r.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < r.size(); ++j) row.push_back(cyclotomic_json(r.entries(i, j)));
        rows.push_back(row);
    }
    json elements = json::array();
    for (const auto& g : r.group->elements()) elements.push_back(rat_vec_json(g));
    return {{"dual", r.dual}, {"elements", elements}, {"matrix", rows}};
}

struct Output {
    std::ostream& out;
    std::string path;

    void write(const std::string& text) const {
        if (path.empty() || path == "-") {
            out << text << '\n';
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw DomainError("cannot write '" + path + "'");
        f << text << '\n';
    }
};

template <typename T>
T expect(const AnyExpansion& x, const char* kind) {
    if (const T* p = std::get_if<T>(&x)) return *p;
    throw ParseError(std::string("input is not a ") + kind);
}

VVExpansion read_vv(const std::string& in) { return expect<VVExpansion>(deserialize(read_source(in)), "vvform"); }
JacobiExpansion read_jacobi(const std::string& in) {
    return expect<JacobiExpansion>(deserialize(read_source(in)), "jacobi form");
}
ScalarQSeries read_scalar(const std::string& in) {
    return expect<ScalarQSeries>(deserialize(read_source(in)), "qseries");
}

json numeric_json(const NumericResult& r) { return {{"pass", r.pass}, {"residual", r.residual}, {"tail", r.tail}}; }

// Support, symmetry and (optionally) the functional equations. Returns whether everything passed.
bool run_check(const AnyExpansion& x, bool numeric, double tol, json& report) {
    bool ok = true;
    const Complex taus[] = {Complex(0, 1), Complex(0.3, 1.1)};
    if (const auto* f = std::get_if<VVExpansion>(&x)) {
        const SupportReport s = validate_support(*f);
        report["support"] = s.violations;
        report["symmetry"] = to_string(symmetry_check(*f));
        ok = s.clean();
        if (numeric) {
            json checks = json::array();
            const NumericResult t = check_T_transformation(*f);
            checks.push_back({{"check", "T"}, {"result", numeric_json(t)}});
            ok = ok && t.pass;
            for (Complex tau : taus) {
                const NumericResult r = check_S_transformation(*f, tau, tol);
                checks.push_back({{"check", "S"}, {"tau", {tau.real(), tau.imag()}}, {"result", numeric_json(r)}});
                ok = ok && r.pass;
            }
            report["numeric"] = checks;
        }
    } else if (const auto* phi = std::get_if<JacobiExpansion>(&x)) {
        const SupportReport s = validate_support(*phi);
        report["support"] = s.violations;
        report["symmetry"] = to_string(symmetry_check(*phi));
        ok = s.clean();
        if (numeric) {
            const std::size_t n = phi->n_vars();
            const CVec z(n, Complex(0.3, 0));
            std::vector<HeisenbergElement> hs;
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<Integer> unit(n), zero(n);
                unit[i] = 1;
                IntMatrix diag(n, n);
                diag(i, i) = 1;
                hs.emplace_back(unit, zero, IntMatrix(n, n));
                hs.emplace_back(zero, unit, IntMatrix(n, n));
                hs.emplace_back(unit, unit, diag);
            }
            json checks = json::array();
            for (Complex tau : taus) {
                const NumericResult r = check_S_transformation(*phi, tau, z, tol);
                checks.push_back({{"check", "S"}, {"tau", {tau.real(), tau.imag()}}, {"result", numeric_json(r)}});
                ok = ok && r.pass;
                for (const auto& h : hs) {
                    const NumericResult e = check_elliptic_transformation(*phi, h, tau, z, tol);
                    json lam = json::array(), mu = json::array();
                    for (const auto& v : h.lambda) lam.push_back(v.get_si());
                    for (const auto& v : h.mu) mu.push_back(v.get_si());
                    checks.push_back({{"check", "elliptic"},
                                      {"lambda", lam},
                                      {"mu", mu},
                                      {"tau", {tau.real(), tau.imag()}},
                                      {"result", numeric_json(e)}});
                    ok = ok && e.pass;
                }
            }
            report["numeric"] = checks;
        }
    } else {
        report["support"] = json::array();
        if (numeric) report["numeric"] = "not applicable to scalar series";
    }
    report["pass"] = ok;
    return ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"weiljac: Weil representations, Jacobi forms and theta decompositions in exact arithmetic"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Expand all help");

    std::string in, out_path, gram, word = "S", b_text, lambda_text, mu_text, t_text, name, weight_text;
    long ell = 1, max_m = 30;
    std::size_t split = 0;
    std::string prec_text = "10";
    bool non_dual = false, numeric = false, golden = false;
    double tol = 1e-6;
    std::vector<long> ms;
    std::function<int()> action;
    Output output{out, ""};

    auto add_io = [&](CLI::App* sub, bool with_in = true) {
        if (with_in) sub->add_option("--in", in, "input JSON (path, '-', inline JSON or fixture:NAME)")->required();
        sub->add_option("--out", out_path, "output path (default stdout)");
    };
    auto add_gram = [&](CLI::App* sub) {
        sub->add_option("--gram", gram, "Gram matrix (path or inline JSON)")->required();
    };

    auto* disc = app.add_subcommand("discriminant", "discriminant group of a Gram matrix");
    add_gram(disc);
    add_io(disc, false);
    disc->callback([&] {
        action = [&] {
            auto g = discriminant_group(parse_gram(read_source(gram)));
            json elements = json::array();
            for (std::size_t i = 0; i < g->order(); ++i)
                elements.push_back({{"gamma", rat_vec_json(g->element(i))}, {"q", g->q(i).value().str()}});
            const json j = {{"elements", elements},
                            {"level", g->level()},
                            {"order", g->order()},
                            {"signature", g->signature()},
                            {"gauss_sum", cyclotomic_json(gauss_sum(*g))}};
            output.write(j.dump(1));
            return 0;
        };
    });

    auto* weil = app.add_subcommand("weil", "Weil representation matrix of a word in S, T, t (= T^-1)");
    add_gram(weil);
    weil->add_option("--word", word, "word in S, T, t")->required();
    weil->add_flag("--non-dual", non_dual, "use the non-dual representation");
    weil->add_flag("--dual", [&](std::int64_t) { non_dual = false; }, "use the dual representation (default)");
    add_io(weil, false);
    weil->callback([&] {
        action = [&] {
            auto g = discriminant_group(parse_gram(read_source(gram)));
            const Mp2Word w(word);
            json j = rep_json(rho_word(g, w, !non_dual));
            j["word"] = w.letters();
            output.write(j.dump(1));
            return 0;
        };
    });

    auto* sigma = app.add_subcommand("sigma", "Heisenberg representation sigma_B(lambda, mu, t)");
    add_gram(sigma);
    sigma->add_option("--b", b_text, "B as a JSON matrix of rationals (e x N)")->required();
    sigma->add_option("--lambda", lambda_text, "lambda as a JSON integer array")->required();
    sigma->add_option("--mu", mu_text, "mu as a JSON integer array")->required();
    sigma->add_option("--t", t_text, "t as a JSON integer matrix (default 0)");
    sigma->add_flag("--non-dual", non_dual, "use the non-dual representation");
    add_io(sigma, false);
    sigma->callback([&] {
        action = [&] {
            auto g = discriminant_group(parse_gram(read_source(gram)));
            const RatMatrix b = parse_rat_matrix(b_text);
            const auto l = int_vec(lambda_text, "--lambda");
            const HeisenbergElement h(l, int_vec(mu_text, "--mu"), int_matrix(t_text, l.size()));
            output.write(rep_json(sigma_B(g, b, h, !non_dual)).dump(1));
            return 0;
        };
    });

    auto* hecke = app.add_subcommand("hecke-u", "U_ell on a vector-valued form");
    hecke->add_option("--ell", ell, "ell >= 1")->required()->check(CLI::PositiveNumber);
    hecke->add_option("--split", split, "size e of the first block")->required();
    add_io(hecke);
    hecke->callback([&] {
        action = [&] {
            output.write(serialize(u_ell_vv(read_vv(in), split, ell)));
            return 0;
        };
    });

    auto* hecke_j = app.add_subcommand("hecke-u-jacobi", "U_ell on a Jacobi form");
    hecke_j->add_option("--ell", ell, "ell >= 1")->required()->check(CLI::PositiveNumber);
    add_io(hecke_j);
    hecke_j->callback([&] {
        action = [&] {
            output.write(serialize(u_ell_jacobi(read_jacobi(in), ell)));
            return 0;
        };
    });

    auto* decompose = app.add_subcommand("theta-decompose", "vector-valued form -> Jacobi form");
    decompose->add_option("--split", split, "size e of the first block")->required();
    add_io(decompose);
    decompose->callback([&] {
        action = [&] {
            output.write(serialize(theta_decompose(read_vv(in), split)));
            return 0;
        };
    });

    auto* compose = app.add_subcommand("theta-compose", "Jacobi form -> vector-valued form");
    add_io(compose);
    compose->callback([&] {
        action = [&] {
            output.write(serialize(theta_compose(read_jacobi(in))));
            return 0;
        };
    });

    auto* tseries = app.add_subcommand("theta-series", "Jacobi theta series of a positive definite lattice");
    add_gram(tseries);
    tseries->add_option("--prec", prec_text, "precision (exclusive bound on n)");
    add_io(tseries, false);
    tseries->callback([&] {
        action = [&] {
            output.write(serialize(theta_series(parse_gram(read_source(gram)), parse_rational(prec_text, "--prec"))));
            return 0;
        };
    });

    auto* special = app.add_subcommand("specialize", "z = 0 specialization of a Jacobi form");
    add_io(special);
    special->callback([&] {
        action = [&] {
            output.write(serialize(specialize_z0(read_jacobi(in))));
            return 0;
        };
    });

    auto* kohnen = app.add_subcommand("kohnen", "level 3 / Kohnen plus space bridges");
    kohnen->require_subcommand(1);
    auto* to_plus = kohnen->add_subcommand("to-plus", "level 3 minus-space form of odd weight -> Kohnen plus space");
    to_plus->add_option("--weight", weight_text, "integral weight of the input")->required();
    add_io(to_plus);
    to_plus->callback([&] {
        action = [&] {
            const Rational k = parse_rational(weight_text, "--weight");
            if (!k.is_integer()) throw DomainError("to-plus needs an integral weight");
            const PlusSpaceForm p = minus_to_plus(Level3Form{read_scalar(in), to_long(k.num()), false});
            output.write(serialize(p.series));
            return 0;
        };
    });
    auto* to_level3 = kohnen->add_subcommand("to-level3", "Kohnen plus space -> level 3 plus space");
    to_level3->add_option("--weight", weight_text, "half-integral weight of the input, e.g. 5/2")->required();
    add_io(to_level3);
    to_level3->callback([&] {
        action = [&] {
            const Rational k = parse_rational(weight_text, "--weight");
            if (!(k - Rational(1, 2)).is_integer()) throw DomainError("to-level3 needs a half-integral weight");
            output.write(serialize(plus_to_level3(PlusSpaceForm{read_scalar(in), k}).series));
            return 0;
        };
    });
    auto* scalarize = kohnen->add_subcommand("scalarize", "sum of components after q -> q^level");
    add_io(scalarize);
    scalarize->callback([&] {
        action = [&] {
            output.write(serialize(bb_scalarize(read_vv(in))));
            return 0;
        };
    });

    auto* table = app.add_subcommand("borcherds-table", "weights and principal parts of the quasi-pullbacks");
    table->add_option("--m", ms, "norm(s) m of the primitive vector")->check(CLI::PositiveNumber);
    table->add_flag("--golden", golden, "print the bundled reference rows instead of computing");
    add_io(table, false);
    table->callback([&] {
        action = [&] {
            if (!golden && ms.empty()) throw CLI::RequiredError("--m (or --golden)");
            std::string text;
            if (golden) {
                for (const auto& row : table1_golden())
                    if (ms.empty() || std::find(ms.begin(), ms.end(), row.m) != ms.end()) text += render_row(row) + "\n";
            } else {
                for (long mm : ms)
                    for (const auto& row : principal_part_table(mm)) text += render_row(row) + "\n";
            }
            if (!text.empty()) text.pop_back();
            output.write(text);
            return 0;
        };
    });

    auto* scan = app.add_subcommand("borcherds-scan", "all rows for m = 1 .. max-m as JSON records");
    scan->add_option("--max-m", max_m, "largest m")->check(CLI::PositiveNumber);
    add_io(scan, false);
    scan->callback([&] {
        action = [&] {
            json rows = json::array();
            for (long mm = 1; mm <= max_m; ++mm) {
                if (primitive_vectors(mm).empty()) continue;
                for (const auto& row : principal_part_table(mm))
                    rows.push_back({{"m", row.m},
                                    {"weight", row.weight.str()},
                                    {"principal_part", render_principal_part(row.part)},
                                    {"v", {row.v[0], row.v[1], row.v[2]}}});
            }
            output.write(rows.dump(1));
            return 0;
        };
    });

    auto* check = app.add_subcommand("check", "validate an expansion; --numeric adds functional-equation checks");
    check->add_flag("--numeric", numeric, "evaluate the S, T and elliptic transformation laws");
    check->add_option("--tol", tol, "tolerance for numeric checks")->check(CLI::PositiveNumber);
    add_io(check);
    check->callback([&] {
        action = [&] {
            json report;
            const bool ok = run_check(deserialize(read_source(in)), numeric, tol, report);
            output.write(report.dump(1));
            return ok ? 0 : 1;
        };
    });

    auto* fixtures = app.add_subcommand("fixtures", "list bundled fixtures, or print one with --name");
    fixtures->add_option("--name", name, "fixture to print");
    add_io(fixtures, false);
    fixtures->callback([&] {
        action = [&] {
            if (name.empty()) {
                std::string text;
                for (const auto& n : fixture_names()) text += n + "\n";
                if (!text.empty()) text.pop_back();
                output.write(text);
            } else {
                std::string text = fixture_text(name);
                while (!text.empty() && text.back() == '\n') text.pop_back();
                output.write(text);
            }
            return 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    output.path = out_path;
    try {
        return action();
    } catch (const CLI::RequiredError& e) {
        err << "error: " << e.what() << " is required\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace weiljac
