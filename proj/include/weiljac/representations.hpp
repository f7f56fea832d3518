#pragma once

#include "weiljac/cyclotomic.hpp"
#include "weiljac/lattice.hpp"
#include "weiljac/matrix.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace weiljac {

/// A word in the generators S, T and T^-1 (written 't') of Mp2(Z), with the
/// SL2(Z) matrix it maps to. Representation values are defined on words.
class Mp2Word {
public:
    Mp2Word() : matrix_(IntMatrix::identity(2)) {}
    /// Letters from {S, T, t}; throws ParseError on anything else.
    explicit Mp2Word(std::string_view letters);

    [[nodiscard]] const std::string& letters() const { return letters_; }
    [[nodiscard]] const IntMatrix& matrix() const { return matrix_; }
    [[nodiscard]] Mp2Word operator*(const Mp2Word& o) const { return Mp2Word(letters_ + o.letters_); }

    static const IntMatrix& s_matrix();
    static const IntMatrix& t_matrix();

private:
    std::string letters_;
    IntMatrix matrix_;
};

/// Word for M in SL2(Z) by the Euclidean algorithm on the first column.
Mp2Word mp2_factor(const IntMatrix& m);

/// Operator on C[A]; entries(beta, gamma) is the coefficient of e_beta in the image of e_gamma.
struct RepMatrix {
    GroupPtr group;
    bool dual = true;
    Matrix<Cyclotomic> entries;

    [[nodiscard]] std::size_t size() const { return entries.rows(); }
    [[nodiscard]] RepMatrix conj_transpose() const;
    [[nodiscard]] RepMatrix conj() const;
    [[nodiscard]] bool is_identity() const;
    [[nodiscard]] std::string str() const;

    friend RepMatrix operator*(const RepMatrix& a, const RepMatrix& b);
    friend bool operator==(const RepMatrix& a, const RepMatrix& b) { return a.entries == b.entries; }
};

RepMatrix rep_identity(const GroupPtr& group, bool dual = true);

/// e(-Q(gamma)) on the diagonal for the dual representation, e(+Q(gamma)) otherwise.
RepMatrix rho_T(const GroupPtr& group, bool dual = true);
/// (G/|A|) e(<gamma,beta>) with G the Gauss sum; all phases conjugated when not dual.
RepMatrix rho_S(const GroupPtr& group, bool dual = true);
RepMatrix rho_word(const GroupPtr& group, const Mp2Word& w, bool dual = true);

/// Element (lambda, mu, t) of the Heisenberg group H_N; t - lambda mu^T is symmetric.
struct HeisenbergElement {
    std::vector<Integer> lambda, mu;
    IntMatrix t;

    HeisenbergElement() = default;
    HeisenbergElement(std::vector<Integer> l, std::vector<Integer> m, IntMatrix tt);
    static HeisenbergElement identity(std::size_t n);
    [[nodiscard]] std::size_t dim() const { return lambda.size(); }
    friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;
};

HeisenbergElement heisenberg_mul(const HeisenbergElement& a, const HeisenbergElement& b);
/// Right action (lambda, mu, t).(a b; c d) = (a lambda + c mu, b lambda + d mu, t).
HeisenbergElement heisenberg_slash_action(const HeisenbergElement& h, const IntMatrix& m);

/// sigma*_B(lambda, mu, t) e_gamma = e(-gamma^T S B mu - tr(B^T S B (t - lambda mu^T))/2) e_{gamma - B lambda}.
/// Phases are conjugated when not dual. Throws IndexError unless S B is integral.
RepMatrix sigma_B(const GroupPtr& group, const RatMatrix& b, const HeisenbergElement& h, bool dual = true);

/// rho*_B(zeta, M) = rho*(M) sigma*_B(zeta).
RepMatrix rho_B(const GroupPtr& group, const RatMatrix& b, const Mp2Word& w, const HeisenbergElement& h,
                bool dual = true);

}  // namespace weiljac
