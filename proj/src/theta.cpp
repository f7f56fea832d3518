#include "weiljac/theta.hpp"

#include "weiljac/errors.hpp"

#include <algorithm>

namespace weiljac {

namespace {

struct Enumerator {
    const QuadraticDecomposition& qd;
    const RatVec& shift;
    bool inclusive;
    const std::function<void(const RatVec&)>& visit;
    RatVec x;

    void run(std::size_t i, const Rational& rem) {
        const std::size_t n = shift.size();
        if (i == n) {
            if (inclusive ? rem.sign() >= 0 : rem.sign() > 0) visit(x);
            return;
        }
        // term i is d_i (k + c)^2 with x_i = k + shift_i
        Rational c = shift[i];
        for (std::size_t j = 0; j < i; ++j) c += qd.lower(i, j) * x[j];
        const Integer s = isqrt_floor(rem / qd.diag[i]);
        const Integer lo = (-c).floor() - s - 1, hi = (-c).ceil() + s + 1;
        for (Integer k = lo; k <= hi; ++k) {
            const Rational v = Rational(k) + c;
            const Rational term = qd.diag[i] * v * v;
            if (term > rem) continue;
            x[i] = Rational(k) + shift[i];
            run(i + 1, rem - term);
        }
    }
};

}  // namespace

void for_each_lattice_point(const RatMatrix& a, const RatVec& shift, const Rational& bound, bool inclusive,
                            const std::function<void(const RatVec&)>& visit) {
    if (a.rows() != shift.size()) throw DomainError("shift length does not match the quadratic form");
    if (bound.sign() < 0 || (bound.is_zero() && !inclusive)) return;
    if (shift.empty()) {
        visit(RatVec{});
        return;
    }
    const QuadraticDecomposition qd = decompose_positive_definite(a);
    Enumerator en{qd, shift, inclusive, visit, RatVec(shift.size())};
    en.run(0, bound);
}

Rational min_norm_in_coset(const RatMatrix& a, const RatVec& shift) {
    if (shift.empty()) return Rational(0);
    const RatVec start = frac(shift);
    Rational best = dot(start, a * start);
    for_each_lattice_point(a, shift, best, true, [&](const RatVec& x) { best = std::min(best, dot(x, a * x)); });
    return best;
}

JacobiExpansion theta_series(const GramMatrix& s2, const Rational& prec) {
    const std::size_t n = s2.size();
    auto group = discriminant_group(s2);
    const RatMatrix m = Rational(1, 2) * s2.rational();
    if (n > 0 && !is_positive_definite(m)) throw DomainError("theta series needs a positive-definite Gram matrix");
    JacobiExpansion th(group, Rational(static_cast<long>(n), 2), false, JacobiIndex{m, RatMatrix(n, n)}, prec);
    if (n == 0) {
        if (prec.sign() > 0) th.set(Rational(0), {}, 0, Rational(1));
        return th;
    }
    if (prec.sign() <= 0) return th;
    // Box from Cauchy-Schwarz: lambda_i^2 <= M_ii (lambda^T M^-1 lambda) < 4 prec M_ii.
    std::vector<Integer> box(n);
    for (std::size_t i = 0; i < n; ++i) box[i] = isqrt_floor(Rational(4) * prec * m(i, i));
    const RatMatrix minv = th.m_inverse();
    const RatMatrix s2inv = inverse(s2.rational());
    std::vector<Integer> lam(n);
    for (std::size_t i = 0; i < n; ++i) lam[i] = -box[i];
    for (;;) {
        RatVec r(lam.begin(), lam.end());
        const Rational e = dot(r, minv * r) / Rational(4);
        if (e < prec) th.add(e, r, group->index_of(s2inv * r), Rational(1));
        std::size_t i = 0;
        while (i < n && lam[i] == box[i]) lam[i] = -box[i], ++i;
        if (i == n) break;
        ++lam[i];
    }
    return th;
}

RatVec tilde_class(const GroupPtr& group, const JacobiIndex& index, const RatMatrix& m_inverse, std::size_t gamma,
                   const RatVec& r) {
    const RatVec half = Rational(1, 2) * (m_inverse * r);
    RatVec v = group->element(gamma);
    if (!v.empty()) v = v - index.b * half;
    v.insert(v.end(), half.begin(), half.end());
    return v;
}

JacobiExpansion theta_decompose(const VVExpansion& f, std::size_t e) {
    if (!f.dual) throw DomainError("theta decomposition needs a form for the dual Weil representation");
    TildeSplit sp = split_tilde(f.group->gram(), e);
    const std::size_t n = sp.index.m.rows();
    auto group = discriminant_group(sp.s);
    const Rational floor = f.floor();
    JacobiExpansion phi(group, f.weight + Rational(static_cast<long>(n), 2), true, sp.index, f.prec,
                        std::max(Rational(0), -floor));
    if (f.coeffs.empty()) return phi;

    std::vector<std::vector<std::pair<Rational, Rational>>> by_class(f.group->order());
    for (const auto& [k, c] : f.coeffs) by_class[k.gamma].emplace_back(k.n, c);

    const RatMatrix& minv = phi.m_inverse();
    const RatMatrix quarter = Rational(1, 4) * minv;
    const RatMatrix bts = e ? sp.index.b.transpose() * sp.s.rational() : RatMatrix(n, 0);
    for (std::size_t g = 0; g < group->order(); ++g) {
        const RatVec shift = e ? Rational(-1) * (bts * group->element(g)) : RatVec(n);
        for_each_lattice_point(quarter, shift, f.prec - floor, false, [&](const RatVec& r) {
            const RatVec tc = tilde_class(group, sp.index, minv, g, r);
            auto idx = f.group->find(tc);
            if (!idx) throw InternalError("theta decomposition produced a class outside A(S~)");
            const Rational norm = dot(r, quarter * r);
            for (const auto& [nf, c] : by_class[*idx]) {
                const Rational nn = nf + norm;
                if (nn < phi.prec) phi.coeffs.emplace(JKey{nn, g, r}, c);
            }
        });
    }
    return phi;
}

VVExpansion theta_compose(const JacobiExpansion& phi) {
    if (!phi.dual) throw DomainError("theta composition needs a form for the dual Weil representation");
    const std::size_t n = phi.n_vars();
    if (n == 0) throw DomainError("theta composition needs at least one Jacobi variable");
    if (auto rep = validate_support(phi); !rep.clean()) throw DomainError("invalid Jacobi expansion: " + rep.violations[0]);
    const GramMatrix tilde = assemble_tilde(phi.group->gram(), phi.index);
    auto tgroup = discriminant_group(tilde);
    const RatMatrix& minv = phi.m_inverse();
    const RatMatrix quarter = Rational(1, 4) * minv;

    // coefficient of F -> one key of phi that produced it
    std::map<VVKey, std::pair<JKey, Rational>> seen;
    for (const auto& [k, c] : phi.coeffs) {
        auto idx = tgroup->find(tilde_class(phi.group, phi.index, minv, k.gamma, k.r));
        if (!idx) throw InternalError("Jacobi key maps outside A(S~)");
        VVKey fk{k.n - dot(k.r, quarter * k.r), *idx};
        auto [it, fresh] = seen.emplace(fk, std::make_pair(k, c));
        if (!fresh && it->second.second != c)
            throw MismatchError("coefficients at (n=" + k.n.str() + ", r=" + to_string(k.r) + ") and (n=" +
                                it->second.first.n.str() + ", r=" + to_string(it->second.first.r) + ") disagree: " +
                                c.str() + " vs " + it->second.second.str());
    }

    // Each class of A(S~) is reached by a coset of r; its least norm limits the precision.
    Rational delta_max(0);
    for (std::size_t t = 0; t < tgroup->order(); ++t) {
        const RatVec& v = tgroup->element(t);
        RatVec b(v.begin() + static_cast<std::ptrdiff_t>(phi.group->dim()), v.end());
        delta_max = std::max(delta_max, min_norm_in_coset(phi.index.m, b));
    }

    VVExpansion f(tgroup, phi.weight - Rational(static_cast<long>(n), 2), true, phi.prec - delta_max);
    for (const auto& [fk, src] : seen)
        if (fk.n < f.prec) f.set(fk.n, fk.gamma, src.second);

    // Every other key of phi encoding a known coefficient must carry the same value.
    if (!seen.empty()) {
        const Rational floor = seen.begin()->first.n;
        std::vector<std::vector<std::pair<Rational, Rational>>> by_class(tgroup->order());
        for (const auto& [fk, src] : seen) by_class[fk.gamma].emplace_back(fk.n, src.second);
        const RatMatrix bts = phi.index.b.transpose() * phi.group->gram().rational();
        for (std::size_t g = 0; g < phi.group->order(); ++g) {
            const RatVec shift = phi.group->dim() ? Rational(-1) * (bts * phi.group->element(g)) : RatVec(n);
            for_each_lattice_point(quarter, shift, phi.prec - floor, false, [&](const RatVec& r) {
                const std::size_t idx = tgroup->index_of(tilde_class(phi.group, phi.index, minv, g, r));
                const Rational norm = dot(r, quarter * r);
                for (const auto& [nf, c] : by_class[idx]) {
                    const Rational nn = nf + norm;
                    if (nn >= phi.prec) continue;
                    const Rational have = phi.coeff(nn, r, g);
                    if (have != c)
                        throw MismatchError("coefficient at (n=" + nn.str() + ", r=" + to_string(r) + ", gamma=" +
                                            to_string(phi.group->element(g)) + ") is " + have.str() + ", expected " +
                                            c.str() + " from another representative");
                }
            });
        }
    }
    return f;
}

std::optional<std::size_t> pi_contraction(std::size_t beta, std::size_t gamma, std::size_t delta) {
    if (gamma == delta) return beta;
    return std::nullopt;
}

JacobiExpansion pi_contract(const VVExpansion& f, std::size_t e, const JacobiExpansion& theta) {
    const GramMatrix& st = f.group->gram();
    const GramMatrix& s2 = theta.group->gram();
    const std::size_t n = s2.size();
    if (st.size() != e + n) throw DomainError("contraction: lattice sizes do not match");
    IntMatrix s = st.entries().block(0, 0, e, e);
    for (std::size_t i = 0; i < e; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (st(i, e + j) != 0) throw DomainError("contraction needs a block-diagonal Gram matrix");
    if (!(st.entries().block(e, e, n, n) == s2.entries())) throw DomainError("contraction: lower block is not 2M");
    if (!f.dual || theta.dual) throw DomainError("contraction pairs a dual form with the non-dual theta series");

    auto group = discriminant_group(GramMatrix(s));
    auto split = [&](std::size_t idx, std::size_t& beta, std::size_t& gamma) {
        const RatVec& v = f.group->element(idx);
        beta = group->index_of(RatVec(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(e)));
        gamma = theta.group->index_of(RatVec(v.begin() + static_cast<std::ptrdiff_t>(e), v.end()));
    };
    const Rational floor = f.floor();
    JacobiExpansion phi(group, f.weight + theta.weight, true, JacobiIndex{theta.index.m, RatMatrix(e, n)},
                        std::min(f.prec + theta.floor(), theta.prec + floor), std::max(Rational(0), -floor));
    for (const auto& [kf, cf] : f.coeffs) {
        std::size_t beta = 0, gamma = 0;
        split(kf.gamma, beta, gamma);
        for (const auto& [kt, ct] : theta.coeffs) {
            auto out = pi_contraction(beta, gamma, kt.gamma);
            if (!out) continue;
            const Rational nn = kf.n + kt.n;
            if (nn < phi.prec) phi.add(nn, kt.r, *out, cf * ct);
        }
    }
    return phi;
}

JacobiExpansion theta_decompose_oracle_b0(const VVExpansion& f, std::size_t e) {
    TildeSplit sp = split_tilde(f.group->gram(), e);
    for (std::size_t i = 0; i < sp.index.b.rows(); ++i)
        for (std::size_t j = 0; j < sp.index.b.cols(); ++j)
            if (!sp.index.b(i, j).is_zero()) throw DomainError("oracle needs B = 0");
    const GramMatrix s2(to_integer(Rational(2) * sp.index.m));
    const JacobiExpansion theta = theta_series(s2, f.prec - f.floor());
    JacobiExpansion phi = pi_contract(f, e, theta);
    return phi.truncated(f.prec);
}

}  // namespace weiljac
