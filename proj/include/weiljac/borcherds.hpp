#pragma once

#include "weiljac/expansions.hpp"
#include "weiljac/lattice.hpp"

#include <array>
#include <string>
#include <vector>

namespace weiljac {

using Vec3 = std::array<long, 3>;

/// Primitive v in Z^3 with v.v = m, one per orbit under permutations and
/// sign changes, written with sorted nonnegative entries.
std::vector<Vec3> primitive_vectors(long m);

/// Unimodular 3x3 integer matrix whose first column is v.
IntMatrix complete_basis(const Vec3& v);

struct PullbackSetup {
    long m = 0;
    Vec3 v{};
    IntMatrix basis;          // 3x3, first column v
    IntMatrix p;              // 4x4 basis of Z^4: (1,0), (0,v1), (0,v2), (0,v3)
    GramMatrix tilde;         // P^T (2 I_4) P
    GramMatrix s;             // diag(2, 2m)
    JacobiIndex index;
    VVExpansion f_principal;  // principal part and constant term on tilde, prec 1/4
};

PullbackSetup pullback_setup(long m, const Vec3& v);

/// Half of the q^0 e_0 coefficient of Phi(tau, 0), Phi the theta decomposition of F.
Rational product_weight(const PullbackSetup& setup);

/// Terms of Phi(tau, 0) with exponent <= 0, on diag(2, 2m).
VVExpansion principal_part(const PullbackSetup& setup);

struct PrincipalPartRow {
    long m = 0;
    Rational weight;
    VVExpansion part;
    Vec3 v{};
};

/// One row per distinct (weight, principal part) over the primitive vectors of
/// norm m, sorted by weight. Throws NotRepresentableError when there are none.
std::vector<PrincipalPartRow> principal_part_table(long m);

struct PrincipalTerm {
    Rational n;
    RatVec gamma;
    Rational c;
};

std::vector<PrincipalTerm> principal_terms(const VVExpansion& part);

/// Canonical text: the constant first, then exponents by increasing |n|;
/// within an exponent, components by second coordinate, then first, with
/// equal coefficients grouped:
/// "6e(0,0) + 2q^(-1/8)(e(0,1/4) + e(0,3/4)) + q^(-1/4)e(1/2,0)".
std::string render_terms(const std::vector<PrincipalTerm>& terms);
std::string render_principal_part(const VVExpansion& part);
/// "m | weight | principal part".
std::string render_row(const PrincipalPartRow& row);

/// A row as printed, kept as raw terms so that misprints survive loading.
struct GoldenRow {
    long m = 0;
    Rational weight;
    std::vector<PrincipalTerm> terms;
};
/// Rows of the bundled fixture "table1".
std::vector<GoldenRow> table1_golden();
std::string render_row(const GoldenRow& row);
/// Printed terms whose exponent is not in Z - Q(gamma) on diag(2, 2m).
std::vector<PrincipalTerm> invalid_terms(const GoldenRow& row);

}  // namespace weiljac
