#include "weiljac/kohnen.hpp"

#include "weiljac/errors.hpp"

namespace weiljac {

namespace {

long mod(const Integer& n, long m) {
    Integer r = n % m;
    if (r < 0) r += m;
    return r.get_si();
}

std::string describe(const std::vector<Rational>& bad) {
    std::string s;
    for (const auto& e : bad) s += (s.empty() ? "" : ", ") + e.str();
    return s;
}

}  // namespace

std::vector<Rational> check_pattern(const ScalarQSeries& s, Pattern p, long k) {
    std::vector<Rational> bad;
    for (const auto& [e, c] : s.coeffs) {
        if (!e.is_integer()) {
            bad.push_back(e);
            continue;
        }
        switch (p) {
            case Pattern::Level3Plus:
                if (mod(e.num(), 3) == 2) bad.push_back(e);
                break;
            case Pattern::Level3Minus:
                if (mod(e.num(), 3) == 1) bad.push_back(e);
                break;
            case Pattern::Kohnen: {
                const long r = mod(k % 2 ? -e.num() : e.num(), 4);
                if (r != 0 && r != 1) bad.push_back(e);
                break;
            }
        }
    }
    return bad;
}

ScalarQSeries theta_standard(const Rational& prec) {
    ScalarQSeries t(1, prec);
    for (long n = 0; Rational(n * n) < prec; ++n) t.set(Rational(n * n), Rational(n ? 2 : 1));
    return t;
}

PlusSpaceForm minus_to_plus(const Level3Form& f) {
    if (f.plus) throw DomainError("minus_to_plus expects a form in the minus space");
    if (auto bad = check_pattern(f.series, Pattern::Level3Minus); !bad.empty())
        throw DomainError("input violates the minus-space pattern at " + describe(bad));
    const Rational p = f.series.prec;
    ScalarQSeries a = s_rescale_q(s_halve_on_residues(f.series, 3, {1, 2}), Rational(4, 3));
    ScalarQSeries th = s_rescale_q(theta_standard(Rational(4) * p), Rational(1, 3));
    PlusSpaceForm out{s_restrict_integer(s_mul(a, th)), Rational(f.weight) + Rational(1, 2)};
    if (auto bad = check_pattern(out.series, Pattern::Kohnen, f.weight); !bad.empty())
        throw InternalError("plus-space output violates the Kohnen pattern at " + describe(bad));
    return out;
}

Level3Form plus_to_level3(const PlusSpaceForm& f) {
    if (!(f.weight - Rational(1, 2)).is_integer()) throw DomainError("plus-space weight must be k + 1/2");
    const long k = f.k();
    if (auto bad = check_pattern(f.series, Pattern::Kohnen, k); !bad.empty())
        throw DomainError("input violates the Kohnen plus-space pattern at " + describe(bad));
    const Rational p = f.series.prec;
    ScalarQSeries a = s_rescale_q(f.series, Rational(3, 4));
    ScalarQSeries th = s_rescale_q(theta_standard(Rational(3) * p), Rational(1, 4));
    Level3Form out{s_restrict_integer(s_mul(a, th)), k + 1, true};
    if (auto bad = check_pattern(out.series, Pattern::Level3Plus); !bad.empty())
        throw InternalError("level 3 output violates the plus-space pattern at " + describe(bad));
    return out;
}

ScalarQSeries bb_scalarize(const VVExpansion& f) {
    const Rational level(f.group->level());
    ScalarQSeries s(1, f.prec * level);
    for (const auto& [k, c] : f.coeffs) {
        const Rational e = k.n * level;
        if (!e.is_integer()) throw InternalError("scalarization produced the exponent " + e.str());
        s.add(e, c);
    }
    return s;
}

}  // namespace weiljac
