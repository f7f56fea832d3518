#include "weiljac/operators.hpp"

#include "weiljac/errors.hpp"

namespace weiljac {

JacobiExpansion u_ell_jacobi(const JacobiExpansion& phi, long ell) {
    if (ell < 1) throw DomainError("U_l needs l >= 1");
    const Rational l(ell);
    JacobiIndex idx{(l * l) * phi.index.m, l * phi.index.b};
    JacobiExpansion r(phi.group, phi.weight, phi.dual, idx, phi.prec, phi.weak_bound);
    for (const auto& [k, c] : phi.coeffs) r.coeffs.emplace(JKey{k.n, k.gamma, l * k.r}, c);
    return r;
}

std::vector<std::optional<std::size_t>> u_ell_projection(const DiscriminantGroup& source,
                                                         const DiscriminantGroup& target, std::size_t e, long ell) {
    std::vector<std::optional<std::size_t>> p(target.order());
    for (std::size_t d = 0; d < target.order(); ++d) {
        RatVec v = target.element(d);
        for (std::size_t i = e; i < v.size(); ++i) v[i] *= Rational(ell);
        p[d] = source.find(v);
        if (p[d] && !(source.q(*p[d]) == target.q(d)))
            throw InternalError("U_l pullback does not preserve the quadratic form at " + to_string(target.element(d)));
    }
    return p;
}

VVExpansion u_ell_vv(const VVExpansion& f, std::size_t e, long ell) {
    if (ell < 1) throw DomainError("U_l needs l >= 1");
    const GramMatrix& s = f.group->gram();
    if (e > s.size()) throw IndexError("split position beyond matrix size");
    IntMatrix t = s.entries();
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (i >= e) t(i, j) *= ell;
            if (j >= e) t(i, j) *= ell;
        }
    auto target = discriminant_group(GramMatrix(t));
    const auto p = u_ell_projection(*f.group, *target, e, ell);

    std::vector<std::vector<std::size_t>> fibre(f.group->order());
    for (std::size_t d = 0; d < p.size(); ++d)
        if (p[d]) fibre[*p[d]].push_back(d);
    VVExpansion r(target, f.weight, f.dual, f.prec);
    for (const auto& [k, c] : f.coeffs)
        for (std::size_t d : fibre[k.gamma]) r.coeffs.emplace(VVKey{k.n, d}, c);
    return r;
}

VVExpansion specialize_z0(const JacobiExpansion& phi) {
    VVExpansion r(phi.group, phi.weight, phi.dual, phi.prec);
    for (const auto& [k, c] : phi.coeffs) r.add(k.n, k.gamma, c);
    return r;
}

std::vector<VVExpansion> z_derivative_at_zero(const JacobiExpansion& phi) {
    std::vector<VVExpansion> out;
    for (std::size_t j = 0; j < phi.n_vars(); ++j) {
        VVExpansion d(phi.group, phi.weight + Rational(1), phi.dual, phi.prec);
        for (const auto& [k, c] : phi.coeffs) d.add(k.n, k.gamma, k.r[j] * c);
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace weiljac
