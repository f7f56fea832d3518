#include "support.hpp"

#include "weiljac/errors.hpp"
#include "weiljac/fixtures.hpp"
#include "weiljac/operators.hpp"
#include "weiljac/theta.hpp"

#include <doctest.h>

using namespace weiljac;
using testsupport::random_sparse_vv;
using testsupport::uniform;

namespace {

const Rational half(1, 2);

VVExpansion e3() { return std::get<VVExpansion>(load_fixture("E3_A2_dual")); }

// The second index configuration: S = -A2, M = 1/3, B = (-2/3, 1/3).
const GramMatrix second_tilde{{-2, -1, 1}, {-1, -2, 0}, {1, 0, 0}};

std::size_t cls(const JacobiExpansion& phi, std::initializer_list<Rational> g) { return phi.group->index_of(RatVec(g)); }

}  // namespace

TEST_CASE("theta series of (2)") {
    const JacobiExpansion t = theta_series(GramMatrix{{2}}, Rational(2));
    CHECK(t.weight == half);
    CHECK_FALSE(t.dual);
    CHECK(t.index.m == RatMatrix{{Rational(1)}});
    CHECK(t.coeffs.size() == 5);
    CHECK(t.coeff(Rational(0), {Rational(0)}, 0) == Rational(1));
    const std::size_t h = cls(t, {half});
    CHECK(t.coeff(Rational(1, 4), {Rational(1)}, h) == Rational(1));
    CHECK(t.coeff(Rational(1, 4), {Rational(-1)}, h) == Rational(1));
    CHECK(t.coeff(Rational(1), {Rational(2)}, 0) == Rational(1));
    CHECK(t.coeff(Rational(1), {Rational(-2)}, 0) == Rational(1));
}

TEST_CASE("theta series edge cases") {
    const JacobiExpansion empty = theta_series(GramMatrix(), Rational(3));
    CHECK(empty.coeffs.size() == 1);
    CHECK(empty.coeff(Rational(0), {}, 0) == Rational(1));

    const JacobiExpansion t = theta_series(GramMatrix{{2, 0}, {0, 2}}, Rational(1));
    CHECK(t.coeff(half, {Rational(1), Rational(1)}, cls(t, {half, half})) == Rational(1));
    CHECK_THROWS_AS(theta_series(GramMatrix{{-2}}, Rational(1)), DomainError);
}

TEST_CASE("theta series counts agree with brute force over a box") {
    const GramMatrix s{{2, 1, 0}, {1, 4, 1}, {0, 1, 6}};
    const Rational prec(5, 2);
    const JacobiExpansion t = theta_series(s, prec);
    const RatMatrix minv = inverse(Rational(1, 2) * s.rational());
    std::size_t count = 0;
    for (long a = -6; a <= 6; ++a)
        for (long b = -6; b <= 6; ++b)
            for (long c = -6; c <= 6; ++c) {
                const RatVec l{Rational(a), Rational(b), Rational(c)};
                const Rational n = dot(l, minv * l) / Rational(4);
                if (n >= prec) continue;
                ++count;
                CHECK(t.coeff(n, l, t.group->index_of(inverse(s.rational()) * l)) == Rational(1));
            }
    CHECK(t.coeffs.size() == count);
}

TEST_CASE("theta decomposition of E3 over A2") {
    const JacobiExpansion phi = theta_decompose(e3(), 1);
    CHECK(phi.weight == Rational(7, 2));
    CHECK(phi.dual);
    CHECK(phi.index.m == RatMatrix{{Rational(3, 4)}});
    CHECK(phi.index.b == RatMatrix{{half}});
    CHECK(phi.coeff(Rational(1), {Rational(1)}, 0) == Rational(27));
    CHECK(phi.coeff(Rational(0), {Rational(0)}, 0) == Rational(1));
    CHECK(validate_support(phi).clean());
}

TEST_CASE("tilde classes are integral") {
    for (const auto& [tilde, e] : std::vector<std::pair<GramMatrix, std::size_t>>{
             {GramMatrix{{2, 1}, {1, 2}}, 1}, {second_tilde, 2}, {GramMatrix{{2, 2}, {2, 8}}, 1}}) {
        const JacobiExpansion phi = theta_decompose(random_sparse_vv(tilde, Rational(3), 12, Rational(-1)), e);
        const GramMatrix s = assemble_tilde(phi.group->gram(), phi.index);
        CHECK(s == tilde);
        for (const auto& [k, c] : phi.coeffs)
            CHECK(is_integral(s.rational() * tilde_class(phi.group, phi.index, phi.m_inverse(), k.gamma, k.r)));
    }
}

TEST_CASE("roundtrip on the fixtures and both index configurations") {
    for (const char* name : {"E3_A2_dual", "U2_E3_A2"}) {
        const VVExpansion f = std::get<VVExpansion>(load_fixture(name));
        const VVExpansion back = theta_compose(theta_decompose(f, 1));
        CHECK(back.weight == f.weight);
        CHECK(vv_agree(back, f));
        CHECK(vv_equal(back, f.truncated(back.prec)));
    }
    const VVExpansion ext = e3_a2_extended(Rational(8));
    CHECK(vv_agree(theta_compose(theta_decompose(ext, 1)), ext));
    for (int i = 0; i < 10; ++i) {
        const VVExpansion f = random_sparse_vv(second_tilde, Rational(4), 10, Rational(-1), Rational(5, 2));
        const JacobiExpansion phi = theta_decompose(f, 2);
        CHECK(phi.index.m == RatMatrix{{Rational(1, 3)}});
        CHECK(phi.index.b == RatMatrix{{Rational(-2, 3)}, {Rational(1, 3)}});
        const VVExpansion back = theta_compose(phi);
        CHECK(vv_equal(back, f.truncated(back.prec)));
    }
}

TEST_CASE("roundtrip on random sparse expansions") {
    int checked = 0;
    while (checked < 40) {
        const std::size_t e = static_cast<std::size_t>(uniform(1, 2)), n = static_cast<std::size_t>(uniform(1, 2));
        const GramMatrix tilde = testsupport::random_gram(e + n, 40);
        TildeSplit split;
        try {
            split = split_tilde(tilde, e);
        } catch (const IndexError&) {
            continue;  // M not positive definite
        }
        const VVExpansion f = random_sparse_vv(tilde, Rational(uniform(1, 5)), 8);
        const VVExpansion back = theta_compose(theta_decompose(f, e));
        CHECK(vv_equal(back, f.truncated(back.prec)));
        ++checked;
    }
}

TEST_CASE("theta_compose detects inconsistent coefficients") {
    JacobiExpansion phi = theta_decompose(e3(), 1);
    CHECK(vv_agree(theta_compose(phi), e3()));
    // c(1, 1, 0) and c(3/4, -1/2, 1/2) both encode 27 q^(2/3) e_(2/3,2/3);
    // changing one of them must be caught.
    CHECK(phi.coeff(Rational(3, 4), {Rational(-1, 2)}, phi.group->index_of({half})) == Rational(27));
    auto it = phi.coeffs.find(JKey{Rational(1), 0, {Rational(1)}});
    REQUIRE(it != phi.coeffs.end());
    it->second += Rational(1);
    CHECK_THROWS_AS((void)theta_compose(phi), MismatchError);
}

TEST_CASE("pi contraction rule") {
    CHECK(pi_contraction(3, 2, 2) == std::optional<std::size_t>(3));
    CHECK_FALSE(pi_contraction(3, 1, 2).has_value());
}

TEST_CASE("oracle: single coefficient expands over the coset r + 2M Z") {
    const GramMatrix tilde{{2, 0}, {0, 4}};
    auto group = discriminant_group(tilde);
    VVExpansion f(group, Rational(0), true, Rational(3));
    const std::size_t g = group->index_of({half, Rational(1, 4)});
    const Rational n0 = Rational(1) - group->q(g).value();
    f.set(n0, g, Rational(5));
    const JacobiExpansion phi = theta_decompose_oracle_b0(f, 1);
    // M = 2, r = 2 M delta = 1 mod 4.
    std::size_t count = 0;
    for (long mu = -9; mu <= 9; ++mu) {
        if (((mu - 1) % 4 + 4) % 4 != 0) continue;
        const Rational n = n0 + Rational(mu * mu, 8);
        if (n >= Rational(3)) continue;
        ++count;
        CHECK(phi.coeff(n, {Rational(mu)}, phi.group->index_of({half})) == Rational(5));
    }
    CHECK(phi.coeffs.size() == count);
    CHECK(theta_decompose_oracle_b0(VVExpansion(group, Rational(0), true, Rational(3)), 1).is_zero());
}

TEST_CASE("oracle equivalence for B = 0 splits") {
    const std::vector<std::pair<GramMatrix, std::size_t>> cases{
        {GramMatrix{{2, 0}, {0, 2}}, 1},
        {GramMatrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 4}}, 1},
        {GramMatrix{{2, 0, 0}, {0, 2, 0}, {0, 0, 4}}, 2},
        {GramMatrix{{2, 1, 0}, {1, 2, 0}, {0, 0, 2}}, 2},
    };
    for (const auto& [tilde, e] : cases)
        for (int i = 0; i < 10; ++i) {
            const VVExpansion f = random_sparse_vv(tilde, Rational(uniform(1, 4)), 6, Rational(-1));
            CHECK(jacobi_equal(theta_decompose(f, e), theta_decompose_oracle_b0(f, e)));
        }
    CHECK_THROWS_AS((void)theta_decompose_oracle_b0(e3(), 1), DomainError);
}

TEST_CASE("the U_l diagram commutes on both index configurations") {
    for (long ell : {2L, 3L}) {
        const VVExpansion f = e3();
        CHECK(jacobi_equal(u_ell_jacobi(theta_decompose(f, 1), ell), theta_decompose(u_ell_vv(f, 1, ell), 1)));
        for (int i = 0; i < 5; ++i) {
            const VVExpansion g = random_sparse_vv(second_tilde, Rational(3), 10, Rational(-1), Rational(5, 2));
            CHECK(jacobi_equal(u_ell_jacobi(theta_decompose(g, 2), ell), theta_decompose(u_ell_vv(g, 2, ell), 2)));
        }
    }
}

TEST_CASE("theta_decompose rejects bad splits") {
    CHECK_THROWS_AS((void)theta_decompose(std::get<VVExpansion>(load_fixture("E3_A2neg_dual")), 1), IndexError);
}
