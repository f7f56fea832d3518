#pragma once

#include "weiljac/lattice.hpp"
#include "weiljac/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace weiljac {

// Precision model: `prec` is an exclusive bound, coefficients are known for
// every exponent n < prec. Absent keys below prec are zero.

struct VVKey {
    Rational n;
    std::size_t gamma = 0;
    friend bool operator==(const VVKey&, const VVKey&) = default;
    friend std::strong_ordering operator<=>(const VVKey&, const VVKey&) = default;
};

/// Truncated expansion sum c(n, gamma) q^n e_gamma of a vector-valued form.
/// For the dual representation n runs over Z - Q(gamma), otherwise over Z + Q(gamma).
struct VVExpansion {
    GroupPtr group;
    Rational weight;
    bool dual = true;
    Rational prec;
    std::map<VVKey, Rational> coeffs;

    VVExpansion() = default;
    VVExpansion(GroupPtr g, Rational k, bool is_dual, Rational precision)
        : group(std::move(g)), weight(std::move(k)), dual(is_dual), prec(std::move(precision)) {}

    [[nodiscard]] Rational coeff(const Rational& n, std::size_t gamma) const;
    /// Stores c (dropping zeros); throws DomainError when n is outside the
    /// exponent class of gamma or not below prec.
    void set(const Rational& n, std::size_t gamma, const Rational& c);
    void add(const Rational& n, std::size_t gamma, const Rational& c);
    [[nodiscard]] bool in_class(const Rational& n, std::size_t gamma) const;
    /// Smallest stored exponent, or prec when empty.
    [[nodiscard]] Rational floor() const;
    [[nodiscard]] bool is_zero() const { return coeffs.empty(); }
    /// Same data with coefficients at n >= p removed and prec lowered to p.
    [[nodiscard]] VVExpansion truncated(const Rational& p) const;
};

struct JKey {
    Rational n;
    std::size_t gamma = 0;
    RatVec r;
    friend bool operator==(const JKey&, const JKey&) = default;
    friend std::strong_ordering operator<=>(const JKey& a, const JKey& b) {
        if (auto c = a.n <=> b.n; c != 0) return c;
        if (auto c = a.gamma <=> b.gamma; c != 0) return c;
        return std::lexicographical_compare_three_way(a.r.begin(), a.r.end(), b.r.begin(), b.r.end());
    }
};

/// Truncated expansion sum c(n, r, gamma) q^n zeta^r e_gamma of a Jacobi form
/// of lattice index (M, B). Stored keys obey the support conditions and
/// 4n - r^T M^-1 r >= -4h with h = weak_bound.
struct JacobiExpansion {
    GroupPtr group;
    Rational weight;
    bool dual = true;
    JacobiIndex index;
    Rational prec;
    Rational weak_bound;
    std::map<JKey, Rational> coeffs;

    JacobiExpansion() = default;
    JacobiExpansion(GroupPtr g, Rational k, bool is_dual, JacobiIndex idx, Rational precision, Rational h = Rational(0));

    [[nodiscard]] std::size_t n_vars() const { return index.m.rows(); }
    [[nodiscard]] Rational coeff(const Rational& n, const RatVec& r, std::size_t gamma) const;
    void set(const Rational& n, const RatVec& r, std::size_t gamma, const Rational& c);
    void add(const Rational& n, const RatVec& r, std::size_t gamma, const Rational& c);
    /// r^T M^-1 r (cached inverse).
    [[nodiscard]] Rational norm(const RatVec& r) const;
    [[nodiscard]] const RatMatrix& m_inverse() const { return m_inv_; }
    [[nodiscard]] Rational floor() const;
    [[nodiscard]] bool is_zero() const { return coeffs.empty(); }
    [[nodiscard]] JacobiExpansion truncated(const Rational& p) const;

private:
    RatMatrix m_inv_;
};

/// Scalar q-series with exponents in (1/denom)Z.
struct ScalarQSeries {
    long denom = 1;
    Rational prec;
    std::map<Rational, Rational> coeffs;

    ScalarQSeries() = default;
    ScalarQSeries(long d, Rational precision) : denom(d), prec(std::move(precision)) {}
    /// From integer-exponent coefficients a_0, a_1, ...; prec = number of terms.
    static ScalarQSeries from_integer_coeffs(const std::vector<Rational>& a);

    [[nodiscard]] Rational coeff(const Rational& e) const;
    void set(const Rational& e, const Rational& c);
    void add(const Rational& e, const Rational& c);
    [[nodiscard]] Rational floor() const;
    [[nodiscard]] ScalarQSeries truncated(const Rational& p) const;
    [[nodiscard]] std::string str() const;
    friend bool operator==(const ScalarQSeries& a, const ScalarQSeries& b) {
        return a.prec == b.prec && a.coeffs == b.coeffs;
    }
};

// -- vector-valued arithmetic -------------------------------------------------

VVExpansion vv_add(const VVExpansion& f, const VVExpansion& g);
VVExpansion vv_sub(const VVExpansion& f, const VVExpansion& g);
VVExpansion vv_scale(const VVExpansion& f, const Rational& c);
/// Exact equality of all data, including prec.
bool vv_equal(const VVExpansion& f, const VVExpansion& g);
/// Coefficient equality for exponents below min(prec) only.
bool vv_agree(const VVExpansion& f, const VVExpansion& g);
/// Product into the direct sum of the two lattices; gamma = (gamma1, gamma2).
VVExpansion vv_tensor(const VVExpansion& f, const VVExpansion& g);

/// Index (M1 + M2, (B1; B2)) on the direct sum; (n, r) convolved jointly.
JacobiExpansion jacobi_tensor(const JacobiExpansion& a, const JacobiExpansion& b);
bool jacobi_equal(const JacobiExpansion& a, const JacobiExpansion& b);

// -- validation -------------------------------------------------------------

struct SupportReport {
    std::vector<std::string> violations;
    [[nodiscard]] bool clean() const { return violations.empty(); }
};

SupportReport validate_support(const VVExpansion& f);
SupportReport validate_support(const JacobiExpansion& phi);

enum class Symmetry { Symmetric, Antisymmetric, Neither, Both };
std::string to_string(Symmetry s);

/// The sign the coefficients must satisfy under (r, gamma) -> (-r, -gamma):
/// (-1)^(k + sig/2) for the dual representation, (-1)^(k - sig/2) otherwise.
/// Throws DomainError when that exponent is not an integer.
int expected_symmetry_sign(const Rational& weight, int signature, bool dual);
Symmetry symmetry_check(const VVExpansion& f);
Symmetry symmetry_check(const JacobiExpansion& phi);

// -- scalar series ------------------------------------------------------------

ScalarQSeries s_add(const ScalarQSeries& a, const ScalarQSeries& b);
ScalarQSeries s_scale(const ScalarQSeries& a, const Rational& c);
ScalarQSeries s_mul(const ScalarQSeries& a, const ScalarQSeries& b);
/// q -> q^s for positive rational s.
ScalarQSeries s_rescale_q(const ScalarQSeries& a, const Rational& s);
/// Keeps integer exponents only.
ScalarQSeries s_restrict_integer(const ScalarQSeries& a);
/// Halves the coefficient of q^n for integer n with n mod modulus in residues.
ScalarQSeries s_halve_on_residues(const ScalarQSeries& a, long modulus, const std::vector<long>& residues);
/// Coefficient equality below min(prec).
bool s_agree(const ScalarQSeries& a, const ScalarQSeries& b);

// -- serialization ------------------------------------------------------------

using AnyExpansion = std::variant<VVExpansion, JacobiExpansion, ScalarQSeries>;

std::string serialize(const VVExpansion& f);
std::string serialize(const JacobiExpansion& phi);
std::string serialize(const ScalarQSeries& s);
std::string serialize(const AnyExpansion& x);
/// Throws ParseError naming the offending field.
AnyExpansion deserialize(const std::string& text);
VVExpansion deserialize_vv(const std::string& text);
JacobiExpansion deserialize_jacobi(const std::string& text);
ScalarQSeries deserialize_scalar(const std::string& text);

/// Gram matrix from JSON text (row-major integer array); throws ParseError.
GramMatrix parse_gram(const std::string& text);
/// Rational matrix from JSON text (nested arrays of "p/q" strings or integers).
RatMatrix parse_rat_matrix(const std::string& text);

}  // namespace weiljac
