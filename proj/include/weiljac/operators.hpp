#pragma once

#include "weiljac/expansions.hpp"

#include <optional>
#include <vector>

namespace weiljac {

/// Phi(tau, z) -> Phi(tau, l z): index (M, B) -> (l^2 M, l B), r -> l r.
JacobiExpansion u_ell_jacobi(const JacobiExpansion& phi, long ell);

/// U_l on a form whose Gram matrix splits at e as (S1, U; U^T, S2); the target
/// Gram matrix is (S1, lU; lU^T, l^2 S2) and the coefficient of e_delta is the
/// source coefficient at p(delta) = (delta1, l delta2). Target classes whose
/// image is not in the source discriminant group get coefficient zero.
VVExpansion u_ell_vv(const VVExpansion& f, std::size_t e, long ell);

/// The pullback map p on discriminant group indices (nullopt where undefined).
std::vector<std::optional<std::size_t>> u_ell_projection(const DiscriminantGroup& source,
                                                         const DiscriminantGroup& target, std::size_t e, long ell);

/// Sum over r of c(n, r, gamma).
VVExpansion specialize_z0(const JacobiExpansion& phi);

/// D_j(n, gamma) = sum_r r_j c(n, r, gamma), one table per Jacobi variable; the
/// 2 pi i normalization is dropped and the weight is raised by one.
std::vector<VVExpansion> z_derivative_at_zero(const JacobiExpansion& phi);

}  // namespace weiljac
