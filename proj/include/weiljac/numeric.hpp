#pragma once

#include "weiljac/expansions.hpp"
#include "weiljac/representations.hpp"

#include <complex>
#include <string>
#include <vector>

namespace weiljac {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

struct NumericResult {
    bool pass = false;
    double residual = 0;
    double tail = 0;  // truncation estimate exp(-2 pi prec Im tau) * max |c|
    [[nodiscard]] std::string str() const;
};

/// Components indexed like the discriminant group. Exponents are evaluated
/// with the principal branch of q^n = exp(2 pi i n tau).
CVec eval_vv(const VVExpansion& f, Complex tau, double* tail = nullptr);
CVec eval_jacobi(const JacobiExpansion& phi, Complex tau, const CVec& z, double* tail = nullptr);

/// f(-1/tau) against tau^k rho(S) f(tau), tau^k on the principal branch.
NumericResult check_S_transformation(const VVExpansion& f, Complex tau, double tol);
/// Exact: every stored exponent must lie in its class; residual is the
/// largest |e(n) - rho(T)_gamma| over the stored terms.
NumericResult check_T_transformation(const VVExpansion& f);
/// Phi(-1/tau, z/tau) against tau^k e(z^T M z / tau) rho(S) Phi(tau, z).
NumericResult check_S_transformation(const JacobiExpansion& phi, Complex tau, const CVec& z, double tol);
/// Phi(tau, z + lambda tau + mu) against the elliptic factor times sigma_B(lambda, mu, t) Phi(tau, z).
NumericResult check_elliptic_transformation(const JacobiExpansion& phi, const HeisenbergElement& h, Complex tau,
                                            const CVec& z, double tol);

/// (Phi | S)(tau, z).
CVec slash_S(const JacobiExpansion& phi, Complex tau, const CVec& z);
/// (Phi | (lambda, mu, t))(tau, z).
CVec slash_heisenberg(const JacobiExpansion& phi, const HeisenbergElement& h, Complex tau, const CVec& z);

/// U_l(Phi | S) against (U_l Phi) | S.
NumericResult check_u_slash_compat(const JacobiExpansion& phi, long ell, Complex tau, const CVec& z, double tol);
/// U_l(Phi | (l lambda, l mu, l^2 t)) against (U_l Phi) | (lambda, mu, t).
NumericResult check_u_slash_compat(const JacobiExpansion& phi, const HeisenbergElement& h, long ell, Complex tau,
                                   const CVec& z, double tol);

}  // namespace weiljac
