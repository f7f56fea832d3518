#include "weiljac/numeric.hpp"

#include "weiljac/errors.hpp"
#include "weiljac/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace weiljac {

namespace {

constexpr double two_pi = 2 * std::numbers::pi;

Complex e(Complex x) { return std::exp(Complex(0, two_pi) * x); }

CVec act(const RepMatrix& r, const CVec& v) {
    const std::size_t n = v.size();
    CVec out(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (v[j] == Complex(0)) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const Cyclotomic& c = r.entries(i, j);
            if (!c.is_zero()) out[i] += c.embed(false) * v[j];
        }
    }
    return out;
}

double distance(const CVec& a, const CVec& b) {
    double d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

template <typename Map>
double largest_coeff(const Map& coeffs) {
    double largest = 0;
    for (const auto& [k, c] : coeffs) largest = std::max(largest, std::abs(c.to_double()));
    return largest;
}

double vv_tail(const VVExpansion& f, Complex tau) {
    return std::exp(-two_pi * f.prec.to_double() * tau.imag()) * largest_coeff(f.coeffs);
}

// Bound on the first omitted terms of e(tau l^T M l + 2 l^T M z) Phi(tau, z + l tau).
// Writing n = D + r^T M^-1 r / 4, an omitted term (n >= prec) has size
// |c| exp(-2 pi E) with E = D v + v |u - u0|^2 - y^T M y / v, where u ranges
// over the complement of a ball of radius sqrt(prec - D) whose centre lies at
// distance d from u0, d^2 = (l + y/v)^T M (l + y/v). Minimised over D >= -h.
// For l = 0, y = 0 this is exp(-2 pi prec v) max |c|.
double jacobi_tail(const JacobiExpansion& phi, Complex tau, const CVec& z, const std::vector<double>& lambda) {
    const std::size_t n = phi.n_vars();
    const double v = tau.imag();
    std::vector<double> w(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = z[i].imag();
        w[i] = lambda[i] + y[i] / v;
    }
    double d2 = 0, ymy = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double mij = phi.index.m(i, j).to_double();
            d2 += w[i] * mij * w[j];
            ymy += y[i] * mij * y[j];
        }
    const double d = std::sqrt(d2), prec = phi.prec.to_double(), lo = -phi.weak_bound.to_double();
    double best = prec * v;
    constexpr int steps = 512;
    for (int s = 0; s <= steps && lo < prec; ++s) {
        const double dd = lo + (prec - lo) * s / steps;
        const double gap = std::max(0.0, std::sqrt(std::max(0.0, prec - dd)) - d);
        best = std::min(best, dd * v + v * gap * gap);
    }
    return std::exp(-two_pi * (best - ymy / v)) * largest_coeff(phi.coeffs);
}

std::vector<double> lambda_of(const HeisenbergElement& h) {
    std::vector<double> out;
    for (const auto& x : h.lambda) out.push_back(x.get_d());
    return out;
}

// A check passes only when the truncation itself is below tolerance.
NumericResult verdict(double residual, double tail, double tol) { return {residual < tol && tail < tol, residual, tail}; }

// z^T M z for complex z and rational M.
Complex quadratic(const RatMatrix& m, const CVec& a, const CVec& b) {
    Complex s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * m(i, j).to_double() * b[j];
    return s;
}

CVec real_vec(const std::vector<Integer>& v) {
    CVec out;
    for (const auto& x : v) out.emplace_back(x.get_d(), 0);
    return out;
}

// tau lambda^T M lambda + tr M(2 lambda z^T + t + mu lambda^T)
Complex elliptic_exponent(const JacobiExpansion& phi, const HeisenbergElement& h, Complex tau, const CVec& z) {
    const RatMatrix& m = phi.index.m;
    const CVec lambda = real_vec(h.lambda), mu = real_vec(h.mu);
    Complex s = tau * quadratic(m, lambda, lambda) + 2.0 * quadratic(m, lambda, z) + quadratic(m, lambda, mu);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j).to_double() * h.t(j, i).get_d();
    return s;
}

void check_point(std::size_t n, const CVec& z) {
    if (z.size() != n) throw DomainError("z has " + std::to_string(z.size()) + " entries, expected " + std::to_string(n));
}

}  // namespace

std::string NumericResult::str() const {
    std::ostringstream os;
    os << (pass ? "PASS" : "FAIL") << " residual=" << residual << " tail=" << tail;
    return os.str();
}

CVec eval_vv(const VVExpansion& f, Complex tau, double* tail) {
    if (tau.imag() <= 0) throw DomainError("tau must lie in the upper half plane");
    CVec out(f.group->order());
    for (const auto& [k, c] : f.coeffs) out[k.gamma] += c.to_double() * e(k.n.to_double() * tau);
    if (tail) *tail = vv_tail(f, tau);
    return out;
}

CVec eval_jacobi(const JacobiExpansion& phi, Complex tau, const CVec& z, double* tail) {
    if (tau.imag() <= 0) throw DomainError("tau must lie in the upper half plane");
    check_point(phi.n_vars(), z);
    CVec out(phi.group->order());
    for (const auto& [k, c] : phi.coeffs) {
        Complex x = k.n.to_double() * tau;
        for (std::size_t i = 0; i < z.size(); ++i) x += k.r[i].to_double() * z[i];
        out[k.gamma] += c.to_double() * e(x);
    }
    if (tail) *tail = jacobi_tail(phi, tau, z, std::vector<double>(z.size()));
    return out;
}

NumericResult check_S_transformation(const VVExpansion& f, Complex tau, double tol) {
    double t1 = 0, t2 = 0;
    const CVec lhs = eval_vv(f, -1.0 / tau, &t1);
    const CVec rhs = act(rho_S(f.group, f.dual), eval_vv(f, tau, &t2));
    const Complex factor = std::pow(tau, f.weight.to_double());
    CVec scaled;
    for (const auto& x : rhs) scaled.push_back(factor * x);
    return verdict(distance(lhs, scaled), std::max(t1, t2), tol);
}

NumericResult check_T_transformation(const VVExpansion& f) {
    double residual = 0;
    for (const auto& [k, c] : f.coeffs) {
        const Rational q = f.group->q(k.gamma).value();
        if (((f.dual ? k.n + q : k.n - q)).is_integer()) continue;
        const Complex want = e(Complex(f.dual ? -q.to_double() : q.to_double()));
        residual = std::max(residual, std::abs(e(Complex(k.n.to_double())) - want));
    }
    return {residual == 0, residual, 0};
}

NumericResult check_S_transformation(const JacobiExpansion& phi, Complex tau, const CVec& z, double tol) {
    check_point(phi.n_vars(), z);
    CVec zt;
    for (const auto& x : z) zt.push_back(x / tau);
    double t1 = 0, t2 = 0;
    const CVec lhs = eval_jacobi(phi, -1.0 / tau, zt, &t1);
    const CVec rhs = act(rho_S(phi.group, phi.dual), eval_jacobi(phi, tau, z, &t2));
    const Complex factor = std::pow(tau, phi.weight.to_double()) * e(quadratic(phi.index.m, z, z) / tau);
    CVec scaled;
    for (const auto& x : rhs) scaled.push_back(factor * x);
    return verdict(distance(lhs, scaled), std::max(t1, t2), tol);
}

NumericResult check_elliptic_transformation(const JacobiExpansion& phi, const HeisenbergElement& h, Complex tau,
                                            const CVec& z, double tol) {
    check_point(phi.n_vars(), z);
    if (h.dim() != phi.n_vars()) throw DomainError("Heisenberg element has the wrong dimension");
    // Compared as e(tau l^T M l + ...) Phi(tau, z + l tau + mu) = sigma Phi(tau, z), which keeps
    // both sides at the size of Phi(tau, z) however large the translation.
    CVec shifted = z;
    for (std::size_t i = 0; i < z.size(); ++i) shifted[i] += h.lambda[i].get_d() * tau + h.mu[i].get_d();
    double t2 = 0;
    const Complex factor = e(elliptic_exponent(phi, h, tau, z));
    CVec lhs = eval_jacobi(phi, tau, shifted);
    for (auto& x : lhs) x *= factor;
    const CVec rhs = act(sigma_B(phi.group, phi.index.b, h, phi.dual), eval_jacobi(phi, tau, z, &t2));
    const double t1 = jacobi_tail(phi, tau, z, lambda_of(h));
    return verdict(distance(lhs, rhs), std::max(t1, t2), tol);
}

CVec slash_S(const JacobiExpansion& phi, Complex tau, const CVec& z) {
    check_point(phi.n_vars(), z);
    CVec zt;
    for (const auto& x : z) zt.push_back(x / tau);
    const CVec v = act(rho_S(phi.group, phi.dual).conj_transpose(), eval_jacobi(phi, -1.0 / tau, zt));
    const Complex factor = std::pow(tau, -phi.weight.to_double()) * e(-quadratic(phi.index.m, z, z) / tau);
    CVec out;
    for (const auto& x : v) out.push_back(factor * x);
    return out;
}

CVec slash_heisenberg(const JacobiExpansion& phi, const HeisenbergElement& h, Complex tau, const CVec& z) {
    check_point(phi.n_vars(), z);
    CVec shifted = z;
    for (std::size_t i = 0; i < z.size(); ++i) shifted[i] += h.lambda[i].get_d() * tau + h.mu[i].get_d();
    const CVec v = act(sigma_B(phi.group, phi.index.b, h, phi.dual).conj_transpose(), eval_jacobi(phi, tau, shifted));
    const Complex factor = e(elliptic_exponent(phi, h, tau, z));
    CVec out;
    for (const auto& x : v) out.push_back(factor * x);
    return out;
}

namespace {

CVec scaled_point(const CVec& z, long ell) {
    CVec out;
    for (const auto& x : z) out.push_back(static_cast<double>(ell) * x);
    return out;
}

}  // namespace

NumericResult check_u_slash_compat(const JacobiExpansion& phi, long ell, Complex tau, const CVec& z, double tol) {
    const JacobiExpansion u = u_ell_jacobi(phi, ell);
    const CVec big = scaled_point(z, ell);
    const CVec lhs = slash_S(phi, tau, big);
    const CVec rhs = slash_S(u, tau, z);
    const Complex st = -1.0 / tau;
    CVec zt, bigt;
    for (const auto& x : z) zt.push_back(x / tau);
    for (const auto& x : big) bigt.push_back(x / tau);
    const std::vector<double> none(z.size());
    const double scale = std::abs(std::pow(tau, -phi.weight.to_double()) * e(-quadratic(u.index.m, z, z) / tau));
    const double tail = scale * std::max(jacobi_tail(phi, st, bigt, none), jacobi_tail(u, st, zt, none));
    return verdict(distance(lhs, rhs), tail, tol);
}

NumericResult check_u_slash_compat(const JacobiExpansion& phi, const HeisenbergElement& h, long ell, Complex tau,
                                   const CVec& z, double tol) {
    const JacobiExpansion u = u_ell_jacobi(phi, ell);
    std::vector<Integer> l, m;
    for (const auto& x : h.lambda) l.push_back(ell * x);
    for (const auto& x : h.mu) m.push_back(ell * x);
    const HeisenbergElement big(l, m, Integer(ell * ell) * h.t);
    const CVec bigz = scaled_point(z, ell);
    const CVec lhs = slash_heisenberg(phi, big, tau, bigz);
    const CVec rhs = slash_heisenberg(u, h, tau, z);
    const double tail = std::max(jacobi_tail(phi, tau, bigz, lambda_of(big)), jacobi_tail(u, tau, z, lambda_of(h)));
    return verdict(distance(lhs, rhs), tail, tol);
}

}  // namespace weiljac
