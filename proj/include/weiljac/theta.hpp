#pragma once

#include "weiljac/expansions.hpp"

#include <functional>
#include <optional>

namespace weiljac {

/// Calls visit(x) for every x in Z^N + shift with x^T A x < bound (or <= bound
/// when `inclusive`), A positive definite. Exact; points come in no particular order.
void for_each_lattice_point(const RatMatrix& a, const RatVec& shift, const Rational& bound, bool inclusive,
                            const std::function<void(const RatVec&)>& visit);

/// min over x in Z^N + shift of x^T A x.
Rational min_norm_in_coset(const RatMatrix& a, const RatVec& shift);

/// Theta(tau, z) = sum over lambda in Z^N of q^(lambda^T M^-1 lambda / 4) zeta^lambda e_{S2^-1 lambda},
/// M = S2/2: weight N/2, index (M, 0), non-dual.
JacobiExpansion theta_series(const GramMatrix& s2, const Rational& prec);

/// Theta decomposition of a dual-flagged form on S~ split at e.
JacobiExpansion theta_decompose(const VVExpansion& f, std::size_t e);

/// Inverse of theta_decompose; throws MismatchError when two keys of phi that
/// encode the same coefficient of F disagree. The result is reliable below
/// prec(phi) minus the largest minimal norm 1/4 r^T M^-1 r over the classes.
VVExpansion theta_compose(const JacobiExpansion& phi);

/// The class (gamma - B M^-1 r / 2, M^-1 r / 2) of A(S~).
RatVec tilde_class(const GroupPtr& group, const JacobiIndex& index, const RatMatrix& m_inverse, std::size_t gamma,
                   const RatVec& r);

/// pi(e_beta (x) e_gamma (x) e_delta) = e_beta if gamma == delta, else 0.
std::optional<std::size_t> pi_contraction(std::size_t beta, std::size_t gamma, std::size_t delta);

/// pi(F (x) Theta) with F on S (+) 2M (first e coordinates belong to S) and Theta non-dual on 2M.
JacobiExpansion pi_contract(const VVExpansion& f, std::size_t e, const JacobiExpansion& theta);

/// Independent route to theta_decompose when the split has B = 0.
JacobiExpansion theta_decompose_oracle_b0(const VVExpansion& f, std::size_t e);

}  // namespace weiljac
