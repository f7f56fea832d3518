#include "weiljac/fixtures.hpp"

#include "weiljac/errors.hpp"
#include "weiljac/theta.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace weiljac {

namespace detail {
const std::map<std::string, std::string>& fixture_table();
}

std::vector<std::string> fixture_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : detail::fixture_table()) names.push_back(k);
    return names;
}

const std::string& fixture_text(const std::string& name) {
    const auto& table = detail::fixture_table();
    auto it = table.find(name);
    if (it == table.end()) throw DomainError("unknown fixture '" + name + "'");
    return it->second;
}

AnyExpansion load_fixture(const std::string& name) {
    if (name == "table1") throw DomainError("'table1' is a table, not an expansion");
    return deserialize(fixture_text(name));
}

namespace {

// Shifted-lattice enumeration for the fixture generators. Bounds are taken in
// double with a margin; every candidate is then kept or dropped on its exact
// integer norm, so the result does not depend on rounding.
struct FastEnumerator {
    const IntMatrix& s;
    std::vector<double> diag;
    std::vector<std::vector<double>> lower;
    std::vector<double> shift;
    std::vector<long> scaled_shift;  // den * shift
    long den;
    long limit;  // keep points with X^T S X < limit, X = den * x
    std::vector<long> k;
    std::map<long, long> counts;

    void run(std::size_t i, double rem) {
        const std::size_t n = diag.size();
        if (i == n) {
            std::vector<long> x(n);
            for (std::size_t a = 0; a < n; ++a) x[a] = den * k[a] + scaled_shift[a];
            long norm = 0;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) norm += x[a] * to_long(s(a, b)) * x[b];
            if (norm < limit) ++counts[norm];
            return;
        }
        double c = shift[i];
        for (std::size_t j = 0; j < i; ++j) c += lower[i][j] * (static_cast<double>(k[j]) + shift[j]);
        const double r = std::sqrt(std::max(rem, 0.0) / diag[i]) + 1e-9;
        const long lo = static_cast<long>(std::ceil(-c - r)), hi = static_cast<long>(std::floor(-c + r));
        for (long v = lo; v <= hi; ++v) {
            const double t = static_cast<double>(v) + c;
            k[i] = v;
            run(i + 1, rem - diag[i] * t * t + 1e-9);
        }
    }
};

}  // namespace

VVExpansion lattice_theta(const GramMatrix& s, const Rational& prec) {
    auto group = discriminant_group(s);
    if (group->signature() != static_cast<int>(s.size())) throw DomainError("lattice theta needs a positive definite Gram matrix");
    const std::size_t n = s.size();
    VVExpansion theta(group, Rational(static_cast<long>(n), 2), false, prec);
    if (prec.sign() <= 0) return theta;
    const RatMatrix half = Rational(1, 2) * s.rational();
    const QuadraticDecomposition qd = decompose_positive_definite(half);
    std::vector<double> diag(n);
    std::vector<std::vector<double>> lower(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        diag[i] = qd.diag[i].to_double();
        for (std::size_t j = 0; j < i; ++j) lower[i][j] = qd.lower(i, j).to_double();
    }
    for (std::size_t g = 0; g < group->order(); ++g) {
        const RatVec& gamma = group->element(g);
        Integer den(1);
        for (const auto& x : gamma) den = lcm(den, x.den());
        const long d = to_long(den);
        FastEnumerator en{s.entries(), diag, lower, {}, {}, d, 0, std::vector<long>(n), {}};
        for (const auto& x : gamma) {
            en.shift.push_back(x.to_double());
            en.scaled_shift.push_back(to_long((x * Rational(den)).num()));
        }
        // x^T S x / 2 < prec  <=>  X^T S X < 2 den^2 prec
        const Rational lim = Rational(2) * Rational(den) * Rational(den) * prec;
        en.limit = to_long(lim.ceil());
        en.run(0, prec.to_double() + 1e-9);
        for (const auto& [norm, count] : en.counts)
            theta.add(Rational(Integer(norm), Integer(2) * den * den), g, Rational(count));
    }
    return theta;
}

VVExpansion e3_a2_extended(const Rational& prec) {
    const GramMatrix e6{{2, 0, -1, 0, 0, 0},  {0, 2, 0, -1, 0, 0},  {-1, 0, 2, -1, 0, 0},
                        {0, -1, -1, 2, -1, 0}, {0, 0, 0, -1, 2, -1}, {0, 0, 0, 0, -1, 2}};
    const VVExpansion theta = lattice_theta(e6, prec);
    auto a2 = discriminant_group(GramMatrix{{2, 1}, {1, 2}});
    // A(E6) and A(A2) are cyclic of order 3 with opposite forms; the sign
    // symmetry of the series makes the choice of isomorphism immaterial.
    const std::size_t target[3] = {0, a2->index_of({Rational(1, 3), Rational(1, 3)}),
                                   a2->index_of({Rational(2, 3), Rational(2, 3)})};
    VVExpansion e3(a2, Rational(3), true, prec);
    for (const auto& [k, c] : theta.coeffs) e3.set(k.n, target[k.gamma], c);
    return e3;
}

VVExpansion e3_a2neg_extended(const Rational& prec) {
    const VVExpansion theta = lattice_theta(GramMatrix{{2, 1}, {1, 2}}, prec);
    auto neg = discriminant_group(GramMatrix{{-2, -1}, {-1, -2}});
    // E_2 = 1 - 24 sum sigma_1(n) q^n
    std::vector<Rational> e2{Rational(1)};
    for (long n = 1; Rational(n) < prec; ++n) {
        long sigma = 0;
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) sigma += d;
        e2.push_back(Rational(-24 * sigma));
    }
    VVExpansion out(neg, Rational(3), true, prec);
    for (const auto& [k, c] : theta.coeffs) {
        const std::size_t g = neg->index_of(theta.group->element(k.gamma));
        out.add(k.n, g, Rational(-12) * k.n * c);
        for (std::size_t j = 0; k.n + Rational(static_cast<long>(j)) < prec; ++j)
            out.add(k.n + Rational(static_cast<long>(j)), g, e2[j] * c);
    }
    return out;
}

}  // namespace weiljac
