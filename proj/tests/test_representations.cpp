#include "support.hpp"

#include "weiljac/errors.hpp"
#include "weiljac/representations.hpp"

#include <doctest.h>

using namespace weiljac;
using testsupport::random_gram;
using testsupport::uniform;

namespace {

Cyclotomic zeta(long k, long n) { return Cyclotomic::root_of_unity(k, n); }

std::vector<GramMatrix> battery() {
    std::vector<GramMatrix> out = {
        GramMatrix{{2}},
        GramMatrix{{-2}},
        GramMatrix{{4}},
        GramMatrix{{2, 1}, {1, 2}},
        GramMatrix{{-2, -1}, {-1, -2}},
        GramMatrix{{2, 2}, {2, 8}},
        GramMatrix{{0, 3}, {3, 2}},
        GramMatrix{{2, 1, 0}, {1, 2, 0}, {0, 0, -2}},
        GramMatrix{{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}},
        GramMatrix{{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}},
    };
    for (int i = 0; i < 4; ++i) out.push_back(random_gram(static_cast<std::size_t>(uniform(1, 4)), 16));
    return out;
}

HeisenbergElement random_heisenberg(std::size_t n) {
    std::vector<Integer> l(n), m(n);
    for (auto& x : l) x = uniform(-3, 3);
    for (auto& x : m) x = uniform(-3, 3);
    IntMatrix t(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            Integer sym = uniform(-3, 3);
            t(i, j) = sym + l[i] * m[j];
            t(j, i) = sym + l[j] * m[i];
        }
    return HeisenbergElement(l, m, t);
}

// B = S^-1 K for a random integer e x N matrix K, so S B is integral.
RatMatrix random_b(const GramMatrix& s, std::size_t n) {
    RatMatrix k(s.size(), n);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) k(i, j) = Rational(uniform(-2, 2));
    return inverse(s.rational()) * k;
}

}  // namespace

TEST_CASE("rho_T examples") {
    auto a2 = discriminant_group({{2, 1}, {1, 2}});
    RepMatrix t = rho_T(a2, true);
    CHECK(t.entries(0, 0) == Cyclotomic(1));
    CHECK(t.entries(1, 1) == zeta(-1, 3));
    CHECK(t.entries(2, 2) == zeta(-1, 3));
    CHECK(t.entries(0, 1).is_zero());
    RepMatrix t1 = rho_T(discriminant_group({{2}}), false);
    CHECK(t1.entries(1, 1) == zeta(1, 4));
}

TEST_CASE("rho_S examples") {
    auto a1 = discriminant_group({{2}});
    RepMatrix s = rho_S(a1, true);
    Cyclotomic c = (Cyclotomic(1) + zeta(1, 4)) * Cyclotomic(Rational(1, 2));
    CHECK(s.entries(0, 0) == c);
    CHECK(s.entries(0, 1) == c);
    CHECK(s.entries(1, 1) == -c);

    auto a2 = discriminant_group({{2, 1}, {1, 2}});
    RepMatrix s2 = rho_S(a2, true);
    Cyclotomic g = Cyclotomic(1) + Cyclotomic(2) * zeta(1, 3);
    for (std::size_t b = 0; b < 3; ++b) CHECK(s2.entries(b, 0) == g * Cyclotomic(Rational(1, 3)));
    CHECK(s2.entries(1, 1) == g * Cyclotomic(Rational(1, 3)) * zeta(2, 3));
}

TEST_CASE("mp2 words") {
    CHECK(mp2_factor(IntMatrix{{1, 1}, {0, 1}}).letters() == "T");
    CHECK(mp2_factor(IntMatrix{{0, -1}, {1, 0}}).letters() == "S");
    CHECK(mp2_factor(IntMatrix{{1, 0}, {1, 1}}).matrix() == IntMatrix{{1, 0}, {1, 1}});
    CHECK_THROWS_AS(mp2_factor(IntMatrix{{2, 0}, {0, 1}}), DomainError);
    CHECK_THROWS_AS(Mp2Word("SX"), ParseError);
    for (int t = 0; t < 200; ++t) {
        // random SL2(Z) element as a random word, then refactor
        std::string w;
        for (int k = uniform(0, 12); k > 0; --k) w += "STt"[uniform(0, 2)];
        IntMatrix m = Mp2Word(w).matrix();
        Mp2Word f = mp2_factor(m);
        CHECK(f.matrix() == m);
        CHECK(f.letters().size() <= 4 * w.size() + 4);
    }
}

TEST_CASE("rho_word examples") {
    auto a1 = discriminant_group({{2}});
    RepMatrix ss = rho_word(a1, Mp2Word("SS"), true);
    CHECK(ss.entries == Cyclotomic(zeta(1, 4)) * Matrix<Cyclotomic>::identity(2));
    CHECK(rho_word(a1, Mp2Word(""), true).is_identity());
}

TEST_CASE("unitarity, Mp2 relations and duality on the battery") {
    for (const auto& s : battery()) {
        auto a = discriminant_group(s);
        for (bool dual : {true, false}) {
            RepMatrix rs = rho_S(a, dual), rt = rho_T(a, dual);
            CHECK((rs * rs.conj_transpose()).is_identity());
            CHECK((rt * rt.conj_transpose()).is_identity());
            CHECK(rho_word(a, Mp2Word("STSTST"), dual) == rho_word(a, Mp2Word("SS"), dual));
            RepMatrix s2 = rs * rs, s4 = s2 * s2;
            CHECK((s4 * s4).is_identity());
            // observed action of Z = S^2: e(sig/4) (gamma -> -gamma), dual case
            Cyclotomic z = Cyclotomic::e(Rational(dual ? a->signature() : -a->signature(), 4));
            for (std::size_t g = 0; g < a->order(); ++g) CHECK(s2.entries(a->negate(g), g) == z);
        }
        CHECK(rho_S(a, true).conj() == rho_S(a, false));
        CHECK(rho_T(a, true).conj() == rho_T(a, false));
    }
}

TEST_CASE("Heisenberg group") {
    HeisenbergElement h(std::vector<Integer>{1}, std::vector<Integer>{0}, IntMatrix{{0}});
    HeisenbergElement k(std::vector<Integer>{0}, std::vector<Integer>{1}, IntMatrix{{0}});
    CHECK(heisenberg_mul(h, HeisenbergElement::identity(1)) == h);
    HeisenbergElement hk = heisenberg_mul(h, k);
    CHECK(hk.lambda == std::vector<Integer>{1});
    CHECK(hk.mu == std::vector<Integer>{1});
    CHECK(hk.t == IntMatrix{{1}});
    CHECK_THROWS_AS(HeisenbergElement({1, 0}, {0, 1}, IntMatrix(2, 2)), DomainError);

    for (int t = 0; t < 100; ++t) {
        std::size_t n = static_cast<std::size_t>(uniform(1, 3));
        auto a = random_heisenberg(n), b = random_heisenberg(n), c = random_heisenberg(n);
        CHECK(heisenberg_mul(heisenberg_mul(a, b), c) == heisenberg_mul(a, heisenberg_mul(b, c)));
        CHECK(heisenberg_slash_action(a, IntMatrix::identity(2)) == a);
        auto at = heisenberg_slash_action(a, Mp2Word::t_matrix());
        CHECK(at.lambda == a.lambda);
        for (std::size_t i = 0; i < n; ++i) CHECK(at.mu[i] == a.lambda[i] + a.mu[i]);
        auto as = heisenberg_slash_action(a, Mp2Word::s_matrix());
        CHECK(as.lambda == a.mu);
        for (std::size_t i = 0; i < n; ++i) CHECK(as.mu[i] == -a.lambda[i]);
    }
}

TEST_CASE("sigma_B examples") {
    auto a1 = discriminant_group({{2}});
    RatMatrix b{{Rational(1, 2)}};
    RepMatrix m = sigma_B(a1, b, HeisenbergElement({1}, {0}, IntMatrix{{0}}));
    CHECK(m.entries(1, 0) == Cyclotomic(1));
    CHECK(sigma_B(a1, b, HeisenbergElement::identity(1)).is_identity());
    RepMatrix tm = sigma_B(a1, b, HeisenbergElement({0}, {0}, IntMatrix{{1}}));
    CHECK(tm.entries == Cyclotomic(-zeta(1, 4)) * Matrix<Cyclotomic>::identity(2));
    CHECK_THROWS_AS(sigma_B(a1, RatMatrix{{Rational(1, 4)}}, HeisenbergElement::identity(1)), IndexError);
}

TEST_CASE("sigma_B homomorphism, B mod Z invariance and compatibility") {
    int pairs = 0;
    for (const auto& s : battery()) {
        if (s.size() > 3) continue;
        auto a = discriminant_group(s);
        for (int rep = 0; rep < 2; ++rep, ++pairs) {
            const std::size_t n = static_cast<std::size_t>(uniform(1, 2));
            RatMatrix b = random_b(s, n);
            for (int t = 0; t < 3; ++t) {
                auto h1 = random_heisenberg(n), h2 = random_heisenberg(n);
                RepMatrix s1 = sigma_B(a, b, h1), s2 = sigma_B(a, b, h2);
                CHECK(s1 * s2 == sigma_B(a, b, heisenberg_mul(h1, h2)));

                // shifting B by an integer matrix (keeping SB integral) changes nothing
                RatMatrix shift(s.size(), n);
                for (std::size_t i = 0; i < s.size(); ++i)
                    for (std::size_t j = 0; j < n; ++j) shift(i, j) = Rational(uniform(-2, 2));
                CHECK(sigma_B(a, b + shift, h1) == s1);

                for (const char* g : {"S", "T"}) {
                    Mp2Word w(g);
                    RepMatrix r = rho_word(a, w, true);
                    CHECK(r.conj_transpose() * s1 * r == sigma_B(a, b, heisenberg_slash_action(h1, w.matrix())));
                }
                // non-dual variant is the conjugate
                CHECK(sigma_B(a, b, h1, false) == s1.conj());
            }
        }
    }
    CHECK(pairs >= 10);
}
