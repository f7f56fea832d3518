#pragma once

#include "weiljac/rational.hpp"

#include <complex>
#include <string>
#include <vector>

namespace weiljac {

/// Element of Q(zeta_L), zeta_L = exp(2 pi i / L), in the power basis
/// 1, zeta, ..., zeta^(phi(L)-1) reduced modulo the L-th cyclotomic polynomial.
///
/// Binary operations on elements of different orders work in the field of
/// order lcm(L1, L2). Elements are never demoted to a smaller order, so two
/// equal numbers of different order compare equal only after lifting; use
/// operator== which lifts for you.
class Cyclotomic {
public:
    /// Zero of Q(zeta_1) = Q.
    Cyclotomic();
    Cyclotomic(const Rational& r);  // NOLINT(google-explicit-constructor)
    Cyclotomic(long r) : Cyclotomic(Rational(r)) {}  // NOLINT(google-explicit-constructor)
    Cyclotomic(int r) : Cyclotomic(Rational(r)) {}   // NOLINT(google-explicit-constructor)
    /// Takes power-basis coordinates; reduces them modulo Phi_L.
    Cyclotomic(long order, std::vector<Rational> coeffs);

    /// zeta_den^num.
    static Cyclotomic root_of_unity(const Integer& num, long den);
    /// e(x) = exp(2 pi i x) for rational x.
    static Cyclotomic e(const Rational& x);

    [[nodiscard]] long order() const { return order_; }
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
    [[nodiscard]] bool is_zero() const;

    /// Same number in Q(zeta_L2); throws DomainError unless order() divides L2.
    [[nodiscard]] Cyclotomic lift(long order2) const;
    /// Complex conjugate (the automorphism zeta -> zeta^-1).
    [[nodiscard]] Cyclotomic conj() const;
    /// Value at zeta -> exp(2 pi i / L), or its conjugate.
    [[nodiscard]] std::complex<double> embed(bool conjugate = false) const;
    [[nodiscard]] std::string str() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    [[nodiscard]] Cyclotomic pow(unsigned long k) const;

private:
    long order_ = 1;
    std::vector<Rational> coeffs_;  // length phi(order_)
};

/// Coefficients (constant term first) of the L-th cyclotomic polynomial.
const std::vector<Integer>& cyclotomic_polynomial(long order);
long euler_phi(long n);

}  // namespace weiljac
