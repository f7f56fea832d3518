#pragma once

// Small random generators shared by the property tests. Seeds are fixed so
// failures reproduce.

#include "weiljac/expansions.hpp"
#include "weiljac/lattice.hpp"
#include "weiljac/rational.hpp"

#include <random>

namespace testsupport {

using namespace weiljac;

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(0x5eed1234abcdULL);
    return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rational random_rational(long span = 30, long max_den = 12) {
    return Rational(Integer(uniform(-span, span)), Integer(uniform(1, max_den)));
}

/// Random nondegenerate even Gram matrix of the given size (|det| kept small).
inline GramMatrix random_gram(std::size_t e, long max_det = 60) {
    for (;;) {
        IntMatrix m(e, e);
        for (std::size_t i = 0; i < e; ++i) {
            m(i, i) = 2 * uniform(-3, 3);
            for (std::size_t j = 0; j < i; ++j) m(i, j) = m(j, i) = uniform(-2, 2);
        }
        Integer d = determinant(m);
        if (d != 0 && abs(d) <= max_det) return GramMatrix(m);
    }
}

/// Random positive-definite even Gram matrix.
inline GramMatrix random_positive_gram(std::size_t e, long max_det = 60) {
    for (;;) {
        GramMatrix g = random_gram(e, max_det);
        if (is_positive_definite(g.rational())) return g;
    }
}

/// Random dual-flagged expansion with `terms` nonzero integer coefficients at
/// valid exponents min_n <= n < prec.
inline VVExpansion random_sparse_vv(const GramMatrix& s, const Rational& prec, int terms,
                                    const Rational& min_n = Rational(0), const Rational& weight = Rational(0)) {
    auto group = discriminant_group(s);
    VVExpansion f(group, weight, true, prec);
    for (int i = 0; i < terms; ++i) {
        const auto g = static_cast<std::size_t>(uniform(0, static_cast<long>(group->order()) - 1));
        const Rational q = group->q(g).value();
        std::vector<Rational> ns;
        for (Rational n = Rational((min_n + q).ceil()) - q; n < prec; n += Rational(1)) ns.push_back(n);
        if (ns.empty()) continue;
        long c = 0;
        while (c == 0) c = uniform(-5, 5);
        f.add(ns[static_cast<std::size_t>(uniform(0, static_cast<long>(ns.size()) - 1))], g, Rational(c));
    }
    return f;
}

}  // namespace testsupport
