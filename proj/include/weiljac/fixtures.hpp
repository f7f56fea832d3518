#pragma once

#include "weiljac/expansions.hpp"

#include <string>
#include <vector>

namespace weiljac {

/// Names of the bundled fixtures (data/fixtures/*.json, embedded at build time).
std::vector<std::string> fixture_names();
/// Raw JSON text; throws DomainError for an unknown name.
const std::string& fixture_text(const std::string& name);
/// Parsed expansion fixture; the "table1" fixture is read with table1_golden().
AnyExpansion load_fixture(const std::string& name);

/// E_3 for the dual Weil representation of A2, computed as the vector-valued
/// theta series of E6 (whose discriminant form is that of -A2).
VVExpansion e3_a2_extended(const Rational& prec);

/// E_3 for the dual Weil representation of -A2: -12 q d/dq Theta + E_2 Theta,
/// Theta the vector-valued theta series of A2.
VVExpansion e3_a2neg_extended(const Rational& prec);

/// Vector-valued theta series sum over gamma of theta_{L + gamma} e_gamma for
/// positive definite S, as a non-dual form of weight e/2.
VVExpansion lattice_theta(const GramMatrix& s, const Rational& prec);

}  // namespace weiljac
