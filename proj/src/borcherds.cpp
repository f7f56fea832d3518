#include "weiljac/borcherds.hpp"

#include "weiljac/errors.hpp"
#include "weiljac/fixtures.hpp"
#include "weiljac/operators.hpp"
#include "weiljac/theta.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <json.hpp>

namespace weiljac {

std::vector<Vec3> primitive_vectors(long m) {
    if (m < 1) throw DomainError("norm must be positive");
    std::vector<Vec3> out;
    for (long a = 0; 3 * a * a <= m; ++a)
        for (long b = a; a * a + 2 * b * b <= m; ++b) {
            const long rest = m - a * a - b * b;
            const long c = to_long(isqrt_floor(Integer(rest)));
            if (c < b || c * c != rest) continue;
            if (std::gcd(std::gcd(a, b), c) == 1) out.push_back({a, b, c});
        }
    return out;
}

IntMatrix complete_basis(const Vec3& v) {
    if (std::gcd(std::gcd(v[0], v[1]), v[2]) != 1) throw DomainError("vector is not primitive");
    // Row reduce v to a unit vector while tracking U with U v = w.
    std::array<long, 3> w = v;
    IntMatrix u = IntMatrix::identity(3);
    for (;;) {
        std::size_t pivot = 3;
        for (std::size_t i = 0; i < 3; ++i)
            if (w[i] != 0 && (pivot == 3 || std::labs(w[i]) < std::labs(w[pivot]))) pivot = i;
        bool reduced = true;
        for (std::size_t j = 0; j < 3; ++j) {
            if (j == pivot || w[j] == 0) continue;
            const long q = w[j] / w[pivot];
            w[j] -= q * w[pivot];
            for (std::size_t c = 0; c < 3; ++c) u(j, c) -= Integer(q) * u(pivot, c);
            if (w[j] != 0) reduced = false;
        }
        if (reduced) {
            if (pivot != 0) {
                std::swap(w[0], w[pivot]);
                for (std::size_t c = 0; c < 3; ++c) std::swap(u(0, c), u(pivot, c));
            }
            if (w[0] < 0)
                for (std::size_t c = 0; c < 3; ++c) u(0, c) = -u(0, c);
            break;
        }
    }
    IntMatrix basis = to_integer(inverse(to_rational(u)));
    for (std::size_t i = 0; i < 3; ++i)
        if (basis(i, 0) != v[i]) throw InternalError("basis completion lost the first column");
    return basis;
}

PullbackSetup pullback_setup(long m, const Vec3& v) {
    if (v[0] * v[0] + v[1] * v[1] + v[2] * v[2] != m) throw DomainError("v^T v differs from m");
    PullbackSetup s;
    s.m = m;
    s.v = v;
    s.basis = complete_basis(v);
    s.p = IntMatrix(4, 4);
    s.p(0, 0) = 1;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) s.p(1 + i, 1 + j) = s.basis(i, j);

    IntMatrix four(4, 4);
    for (std::size_t i = 0; i < 4; ++i) four(i, i) = 2;
    const GramMatrix sum_of_squares(four);
    const Rebased rebased = rebase(sum_of_squares, s.p);
    s.tilde = rebased.gram;
    TildeSplit split = split_tilde(s.tilde, 2);
    s.s = split.s;
    s.index = split.index;

    DiscriminantGroup source(sum_of_squares);
    auto group = discriminant_group(s.tilde);
    s.f_principal = VVExpansion(group, Rational(-2), true, Rational(1, 4));
    s.f_principal.set(Rational(0), 0, Rational(4));
    for (std::size_t i = 0; i < 4; ++i) {
        RatVec unit(4);
        unit[i] = Rational(1, 2);
        s.f_principal.set(Rational(-1, 4), rebased.element_map.at(source.index_of(unit)), Rational(1));
    }
    return s;
}

namespace {

VVExpansion specialized(const PullbackSetup& setup) { return specialize_z0(theta_decompose(setup.f_principal, 2)); }

Rational weight_of(const VVExpansion& phi0) { return phi0.coeff(Rational(0), 0) / Rational(2); }

VVExpansion nonpositive_part(const VVExpansion& phi0, long m) { return phi0.truncated(Rational(1, 4 * m)); }

}  // namespace

Rational product_weight(const PullbackSetup& setup) { return weight_of(specialized(setup)); }

VVExpansion principal_part(const PullbackSetup& setup) { return nonpositive_part(specialized(setup), setup.m); }

std::vector<PrincipalPartRow> principal_part_table(long m) {
    const auto vectors = primitive_vectors(m);
    if (vectors.empty()) throw NotRepresentableError(std::to_string(m) + " has no primitive representation as a sum of three squares");
    std::vector<PrincipalPartRow> rows;
    for (const auto& v : vectors) {
        const VVExpansion phi0 = specialized(pullback_setup(m, v));
        PrincipalPartRow row{m, weight_of(phi0), nonpositive_part(phi0, m), v};
        const bool seen = std::any_of(rows.begin(), rows.end(), [&](const PrincipalPartRow& r) {
            return r.weight == row.weight && r.part.coeffs == row.part.coeffs;
        });
        if (!seen) rows.push_back(std::move(row));
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const PrincipalPartRow& a, const PrincipalPartRow& b) { return a.weight < b.weight; });
    return rows;
}

namespace {

std::string component(const RatVec& g) {
    std::string s = "e(";
    for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + g[i].str();
    return s + ")";
}

// Second coordinate first, then the first.
bool component_less(const RatVec& a, const RatVec& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

}  // namespace

std::vector<PrincipalTerm> principal_terms(const VVExpansion& part) {
    std::vector<PrincipalTerm> out;
    for (const auto& [k, c] : part.coeffs) out.push_back({k.n, part.group->element(k.gamma), c});
    return out;
}

std::string render_terms(const std::vector<PrincipalTerm>& all) {
    std::map<Rational, std::vector<std::pair<RatVec, Rational>>> by_exponent;
    for (const auto& t : all) by_exponent[t.n].emplace_back(t.gamma, t.c);
    std::vector<Rational> order;
    for (const auto& [n, terms] : by_exponent) order.push_back(n);
    std::stable_sort(order.begin(), order.end(), [](const Rational& a, const Rational& b) { return abs(a) < abs(b); });

    std::string out;
    for (const auto& n : order) {
        auto terms = by_exponent[n];
        std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return component_less(a.first, b.first); });
        std::vector<Rational> coefficient_order;
        for (const auto& t : terms)
            if (std::find(coefficient_order.begin(), coefficient_order.end(), t.second) == coefficient_order.end())
                coefficient_order.push_back(t.second);
        for (const auto& c : coefficient_order) {
            std::vector<std::string> comps;
            for (const auto& t : terms)
                if (t.second == c) comps.push_back(component(t.first));
            if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
            else if (c.sign() < 0) out += "-";
            const Rational a = abs(c);
            if (a != Rational(1)) out += a.str();
            if (!n.is_zero()) out += "q^(" + n.str() + ")";
            if (comps.size() == 1) {
                out += comps.front();
            } else {
                out += "(";
                for (std::size_t i = 0; i < comps.size(); ++i) out += (i ? " + " : "") + comps[i];
                out += ")";
            }
        }
    }
    return out.empty() ? "0" : out;
}

std::string render_principal_part(const VVExpansion& part) { return render_terms(principal_terms(part)); }

std::string render_row(const PrincipalPartRow& row) {
    return std::to_string(row.m) + " | " + row.weight.str() + " | " + render_principal_part(row.part);
}

std::vector<GoldenRow> table1_golden() {
    const auto doc = nlohmann::json::parse(fixture_text("table1"));
    std::vector<GoldenRow> rows;
    for (const auto& r : doc.at("rows")) {
        GoldenRow row{r.at("m").get<long>(), Rational(r.at("weight").get<long>()), {}};
        for (const auto& t : r.at("terms")) {
            RatVec g;
            for (const auto& x : t.at("gamma")) g.push_back(Rational::parse(x.get<std::string>()));
            row.terms.push_back({Rational::parse(t.at("n").get<std::string>()), g, Rational(t.at("c").get<long>())});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string render_row(const GoldenRow& row) {
    return std::to_string(row.m) + " | " + row.weight.str() + " | " + render_terms(row.terms);
}

std::vector<PrincipalTerm> invalid_terms(const GoldenRow& row) {
    auto group = discriminant_group(GramMatrix{{2, 0}, {0, 2 * row.m}});
    std::vector<PrincipalTerm> bad;
    for (const auto& t : row.terms) {
        const auto g = group->find(t.gamma);
        if (!g || !(t.n + group->q(*g).value()).is_integer()) bad.push_back(t);
    }
    return bad;
}

}  // namespace weiljac
