#include "support.hpp"

#include "weiljac/errors.hpp"
#include "weiljac/lattice.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace weiljac;
using testsupport::random_gram;
using testsupport::uniform;

namespace {

RatVec rv(std::initializer_list<Rational> xs) { return RatVec(xs); }

// Brute-force discriminant group: points of (1/|det|)Z^e in [0,1)^e with S x integral.
std::set<RatVec> brute_group(const GramMatrix& s) {
    const long d = to_long(abs(s.determinant()));
    const std::size_t e = s.size();
    std::set<RatVec> out;
    std::vector<long> k(e, 0);
    for (;;) {
        RatVec x(e);
        for (std::size_t i = 0; i < e; ++i) x[i] = Rational(Integer(k[i]), Integer(d));
        if (is_integral(s.rational() * x)) out.insert(x);
        std::size_t i = 0;
        while (i < e && ++k[i] == d) k[i++] = 0;
        if (i == e) break;
    }
    return out;
}

// Signature from the characteristic polynomial: it is real-rooted, so
// Descartes' rule counts positive eigenvalues exactly.
int descartes_signature(const GramMatrix& s) {
    const std::size_t n = s.size();
    const RatMatrix a = s.rational();
    // Faddeev-LeVerrier: c_n = 1, M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
    std::vector<Rational> c(n + 1);
    c[n] = Rational(1);
    RatMatrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m + c[n - k + 1] * RatMatrix::identity(n);
        RatMatrix am = a * m;
        Rational tr;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -tr / Rational(static_cast<long>(k));
    }
    auto changes = [](const std::vector<Rational>& p) {
        int count = 0, last = 0;
        for (const auto& x : p) {
            if (x.is_zero()) continue;
            if (last && x.sign() != last) ++count;
            last = x.sign();
        }
        return count;
    };
    std::vector<Rational> neg = c;  // p(-x)
    for (std::size_t i = 1; i <= n; i += 2) neg[i] = -neg[i];
    return changes(c) - changes(neg);
}

}  // namespace

TEST_CASE("gram matrix validation") {
    CHECK_THROWS_AS(GramMatrix({{1}}), DomainError);
    CHECK_THROWS_AS(GramMatrix({{2, 1}, {0, 2}}), DomainError);
    CHECK_THROWS_AS(GramMatrix({{2, 2}, {2, 2}}), DomainError);
    CHECK_NOTHROW(GramMatrix(IntMatrix{{2, 2}, {2, 2}}, true));
    CHECK(GramMatrix().size() == 0);
}

TEST_CASE("discriminant group examples") {
    auto a2 = discriminant_group({{2, 1}, {1, 2}});
    CHECK(a2->order() == 3);
    CHECK(a2->level() == 3);
    CHECK(a2->element(0) == rv({0, 0}));
    CHECK(a2->element(1) == rv({Rational(1, 3), Rational(1, 3)}));
    CHECK(a2->element(2) == rv({Rational(2, 3), Rational(2, 3)}));

    auto a1 = discriminant_group({{2}});
    CHECK(a1->order() == 2);
    CHECK(a1->level() == 4);

    auto g = discriminant_group({{2, 2}, {2, 8}});
    CHECK(g->order() == 12);
    CHECK(g->find(rv({Rational(1, 3), Rational(1, 6)})).has_value());
    CHECK(g->find(rv({Rational(2, 3), Rational(5, 6)})).has_value());
    CHECK(!g->find(rv({Rational(1, 4), 0})).has_value());
    CHECK_THROWS_AS((void)g->index_of(rv({Rational(1, 4), 0})), DomainError);

    auto empty = discriminant_group(GramMatrix());
    CHECK(empty->order() == 1);
    CHECK(empty->level() == 1);
}

TEST_CASE("discriminant group agrees with brute force") {
    for (int t = 0; t < 60; ++t) {
        GramMatrix s = random_gram(static_cast<std::size_t>(uniform(1, 3)), 40);
        DiscriminantGroup a(s);
        std::set<RatVec> brute = brute_group(s);
        CHECK(Integer(static_cast<long>(a.order())) == abs(s.determinant()));
        CHECK(std::set<RatVec>(a.elements().begin(), a.elements().end()) == brute);
        CHECK(std::is_sorted(a.elements().begin(), a.elements().end()));
        for (std::size_t i = 0; i < a.order(); ++i) {
            CHECK(a.q(a.negate(i)) == a.q(i));
            CHECK((Rational(a.level()) * a.q(i).value()).is_integer());
        }
        // level is the least such N
        for (long n = 1; n < a.level(); ++n) {
            bool all = true;
            for (std::size_t i = 0; i < a.order(); ++i) all = all && (Rational(n) * a.q(i).value()).is_integer();
            CHECK(!all);
        }
    }
}

TEST_CASE("q_value and pairing") {
    GramMatrix a2{{2, 1}, {1, 2}};
    RatVec g = rv({Rational(1, 3), Rational(1, 3)});
    CHECK(q_value(a2, g).value() == Rational(1, 3));
    CHECK(q_value(a2, rv({0, 0})).is_zero());
    CHECK(pairing(a2, g, g).value() == Rational(2, 3));
    CHECK(pairing(a2, g, rv({0, 0})).is_zero());
    CHECK(q_value(GramMatrix{{2}}, rv({Rational(1, 2)})).value() == Rational(1, 4));
    CHECK(pairing(GramMatrix{{2}}, rv({Rational(1, 2)}), rv({Rational(1, 2)})).value() == Rational(1, 2));
    CHECK_THROWS_AS(q_value(a2, rv({1})), DomainError);

    for (int t = 0; t < 40; ++t) {
        DiscriminantGroup a(random_gram(static_cast<std::size_t>(uniform(1, 3)), 30));
        for (int r = 0; r < 10; ++r) {
            auto i = static_cast<std::size_t>(uniform(0, static_cast<long>(a.order()) - 1));
            auto j = static_cast<std::size_t>(uniform(0, static_cast<long>(a.order()) - 1));
            auto k = static_cast<std::size_t>(uniform(0, static_cast<long>(a.order()) - 1));
            CHECK(a.pairing(i, j) == a.pairing(j, i));
            CHECK(a.pairing(a.add(i, j), k) == a.pairing(i, k) + a.pairing(j, k));
            // polarization
            CHECK(a.pairing(i, j) == a.q(a.add(i, j)) - a.q(i) - a.q(j));
        }
    }
}

TEST_CASE("signature") {
    CHECK(signature(GramMatrix{{2, 1}, {1, 2}}) == 2);
    CHECK(signature(GramMatrix{{-2, -1}, {-1, -2}}) == -2);
    CHECK(signature(GramMatrix{{2, 0}, {0, -4}}) == 0);
    CHECK(signature(GramMatrix{{0, 1}, {1, 0}}) == 0);
    CHECK(signature(GramMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -2}}) == -1);
    for (int t = 0; t < 100; ++t) {
        GramMatrix s = random_gram(static_cast<std::size_t>(uniform(1, 4)), 200);
        CHECK(signature(s) == descartes_signature(s));
    }
}

TEST_CASE("gauss sums") {
    CHECK(gauss_sum(GramMatrix{{2, 1}, {1, 2}}) ==
          Cyclotomic(1) + Cyclotomic(2) * Cyclotomic::root_of_unity(1, 3));
    CHECK(gauss_sum(GramMatrix{{2}}) == Cyclotomic(1) + Cyclotomic::root_of_unity(1, 4));
    CHECK(gauss_sum(GramMatrix{{-2}}) == Cyclotomic(1) - Cyclotomic::root_of_unity(1, 4));
    // the internal Milgram check runs on each call
    for (int t = 0; t < 60; ++t) CHECK_NOTHROW(gauss_sum(random_gram(static_cast<std::size_t>(uniform(1, 4)), 60)));
}

TEST_CASE("direct sum") {
    CHECK(direct_sum(GramMatrix{{2}}, GramMatrix{{2}}) == GramMatrix{{2, 0}, {0, 2}});
    GramMatrix a2{{2, 1}, {1, 2}};
    CHECK(direct_sum(a2, GramMatrix()) == a2);
    CHECK(direct_sum(a2, GramMatrix{{-2}}) == GramMatrix{{2, 1, 0}, {1, 2, 0}, {0, 0, -2}});
}

TEST_CASE("assemble and split") {
    JacobiIndex i1{RatMatrix{{Rational(3, 4)}}, RatMatrix{{Rational(1, 2)}}};
    CHECK(assemble_tilde(GramMatrix{{2}}, i1) == GramMatrix{{2, 1}, {1, 2}});

    GramMatrix a2neg{{-2, -1}, {-1, -2}};
    JacobiIndex i2{RatMatrix{{Rational(1, 3)}}, RatMatrix{{Rational(-2, 3)}, {Rational(1, 3)}}};
    GramMatrix t2 = assemble_tilde(a2neg, i2);
    CHECK(t2 == GramMatrix(IntMatrix{{-2, -1, 1}, {-1, -2, 0}, {1, 0, 0}}, true));

    auto sp = split_tilde(GramMatrix{{2, 1}, {1, 2}}, 1);
    CHECK(sp.s == GramMatrix{{2}});
    CHECK(sp.index.b == RatMatrix{{Rational(1, 2)}});
    CHECK(sp.index.m == RatMatrix{{Rational(3, 4)}});

    auto sp0 = split_tilde(GramMatrix{{2, 0}, {0, 2}}, 1);
    CHECK(sp0.index.b == RatMatrix{{0}});
    CHECK(sp0.index.m == RatMatrix{{1}});

    auto sp2 = split_tilde(t2, 2);
    CHECK(sp2.index.m == i2.m);
    CHECK(sp2.index.b == i2.b);

    // block case B = 0, M = S2/2
    GramMatrix s2{{2, 1}, {1, 4}};
    JacobiIndex blk{Rational(1, 2) * s2.rational(), RatMatrix(2, 2)};
    CHECK(assemble_tilde(a2neg, blk) == direct_sum(a2neg, s2));

    CHECK_THROWS_AS(assemble_tilde(GramMatrix{{2}}, JacobiIndex{RatMatrix{{Rational(1, 4)}}, RatMatrix{{Rational(1, 4)}}}),
                    IndexError);
    CHECK_THROWS_AS(assemble_tilde(GramMatrix{{2}}, JacobiIndex{RatMatrix{{-1}}, RatMatrix{{0}}}), IndexError);
    CHECK_THROWS_AS(split_tilde(GramMatrix{{2, 1}, {1, -2}}, 1), IndexError);
}

TEST_CASE("split then assemble is the identity on random positive tails") {
    int done = 0;
    while (done < 40) {
        GramMatrix s = random_gram(static_cast<std::size_t>(uniform(1, 2)), 30);
        std::size_t n = static_cast<std::size_t>(uniform(1, 2));
        GramMatrix full = random_gram(s.size() + n, 400);
        IntMatrix m = full.entries();
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = 0; j < s.size(); ++j) m(i, j) = s(i, j);
        if (determinant(m) == 0) continue;
        GramMatrix tilde(m);
        TildeSplit sp;
        try {
            sp = split_tilde(tilde, s.size());
        } catch (const IndexError&) {
            continue;
        }
        CHECK(assemble_tilde(sp.s, sp.index) == tilde);
        ++done;
    }
}

TEST_CASE("smith normal form") {
    for (int t = 0; t < 50; ++t) {
        GramMatrix s = random_gram(static_cast<std::size_t>(uniform(1, 4)), 500);
        SmithForm f = smith_normal_form(s.entries());
        CHECK(f.u * s.entries() * f.v == f.d);
        CHECK(abs(determinant(f.u)) == 1);
        CHECK(abs(determinant(f.v)) == 1);
        for (std::size_t i = 0; i < s.size(); ++i) {
            CHECK(f.d(i, i) > 0);
            if (i + 1 < s.size()) CHECK(f.d(i + 1, i + 1) % f.d(i, i) == 0);
            for (std::size_t j = 0; j < s.size(); ++j)
                if (i != j) CHECK(f.d(i, j) == 0);
        }
    }
}

TEST_CASE("rebase") {
    GramMatrix a2{{2, 1}, {1, 2}};
    Rebased id = rebase(a2, IntMatrix::identity(2));
    CHECK(id.gram == a2);
    CHECK(id.element_map == std::vector<std::size_t>{0, 1, 2});

    GramMatrix four = GramMatrix{{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}};
    IntMatrix p{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}};
    Rebased r = rebase(four, p);
    CHECK(r.gram == GramMatrix{{2, 0, 0, 0}, {0, 4, 2, 0}, {0, 2, 2, 0}, {0, 0, 0, 2}});
    DiscriminantGroup a(four), b(r.gram);
    REQUIRE(a.order() == 16);
    std::set<std::size_t> image(r.element_map.begin(), r.element_map.end());
    CHECK(image.size() == 16);
    for (std::size_t i = 0; i < 16; ++i) CHECK(b.q(r.element_map[i]) == a.q(i));

    CHECK_THROWS_AS(rebase(a2, IntMatrix{{2, 0}, {0, 1}}), DomainError);
}
