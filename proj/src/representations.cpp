#include "weiljac/representations.hpp"

#include "weiljac/errors.hpp"

#include <sstream>

namespace weiljac {

const IntMatrix& Mp2Word::s_matrix() {
    static const IntMatrix s{{0, -1}, {1, 0}};
    return s;
}

const IntMatrix& Mp2Word::t_matrix() {
    static const IntMatrix t{{1, 1}, {0, 1}};
    return t;
}

Mp2Word::Mp2Word(std::string_view letters) : letters_(letters), matrix_(IntMatrix::identity(2)) {
    static const IntMatrix tinv{{1, -1}, {0, 1}};
    for (char c : letters_) {
        switch (c) {
            case 'S': matrix_ = matrix_ * s_matrix(); break;
            case 'T': matrix_ = matrix_ * t_matrix(); break;
            case 't': matrix_ = matrix_ * tinv; break;
            default: throw ParseError(std::string("unknown generator '") + c + "' (expected S, T or t)");
        }
    }
}

Mp2Word mp2_factor(const IntMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2) throw DomainError("expected a 2x2 matrix");
    if (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) != 1) throw DomainError("matrix is not in SL2(Z)");
    auto power = [](const Integer& k) {
        if (abs(k) > 1'000'000) throw DomainError("generator exponent too large");
        return std::string(static_cast<std::size_t>(Integer(abs(k)).get_ui()), k > 0 ? 'T' : 't');
    };
    Integer a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
    std::string word;
    // M = T^q S M' with M' = S^-1 T^-q M; the lower-left entry shrinks each step.
    while (c != 0) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
        Integer a2 = c, b2 = d, c2 = -(a - q * c), d2 = -(b - q * d);
        word += power(q);
        word += 'S';
        a = a2, b = b2, c = c2, d = d2;
    }
    // now a = d = +-1
    if (a == 1) word += power(b);
    else word += "SS" + power(-b);
    Mp2Word w(word);
    if (!(w.matrix() == m)) throw InternalError("generator word does not reproduce the matrix");
    return w;
}

RepMatrix RepMatrix::conj_transpose() const {
    RepMatrix r{group, dual, Matrix<Cyclotomic>(size(), size())};
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j) r.entries(j, i) = entries(i, j).conj();
    return r;
}

RepMatrix RepMatrix::conj() const {
    RepMatrix r{group, !dual, entries};
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j) r.entries(i, j) = entries(i, j).conj();
    return r;
}

bool RepMatrix::is_identity() const { return entries == Matrix<Cyclotomic>::identity(size()); }

std::string RepMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < size(); ++i) {
        for (std::size_t j = 0; j < size(); ++j) os << (j ? "\t" : "") << entries(i, j).str();
        os << "\n";
    }
    return os.str();
}

RepMatrix operator*(const RepMatrix& a, const RepMatrix& b) {
    if (a.size() != b.size()) throw DomainError("representation matrices of different size");
    return RepMatrix{a.group, a.dual, a.entries * b.entries};
}

RepMatrix rep_identity(const GroupPtr& group, bool dual) {
    return RepMatrix{group, dual, Matrix<Cyclotomic>::identity(group->order())};
}

RepMatrix rho_T(const GroupPtr& group, bool dual) {
    RepMatrix r{group, dual, Matrix<Cyclotomic>(group->order(), group->order())};
    for (std::size_t i = 0; i < group->order(); ++i) {
        const Rational& q = group->q(i).value();
        r.entries(i, i) = Cyclotomic::e(dual ? -q : q);
    }
    return r;
}

RepMatrix rho_S(const GroupPtr& group, bool dual) {
    const std::size_t n = group->order();
    Cyclotomic scale = gauss_sum(*group) * Cyclotomic(Rational(Integer(1), Integer(static_cast<long>(n))));
    if (!dual) scale = scale.conj();
    RepMatrix r{group, dual, Matrix<Cyclotomic>(n, n)};
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t g = b; g < n; ++g) {
            const Rational p = group->pairing(g, b).value();
            r.entries(b, g) = r.entries(g, b) = scale * Cyclotomic::e(dual ? p : -p);
        }
    return r;
}

RepMatrix rho_word(const GroupPtr& group, const Mp2Word& w, bool dual) {
    RepMatrix r = rep_identity(group, dual);
    if (w.letters().empty()) return r;
    const RepMatrix s = rho_S(group, dual), t = rho_T(group, dual);
    const RepMatrix tinv = t.conj_transpose();
    for (char c : w.letters()) r = r * (c == 'S' ? s : (c == 'T' ? t : tinv));
    return r;
}

HeisenbergElement::HeisenbergElement(std::vector<Integer> l, std::vector<Integer> m, IntMatrix tt)
    : lambda(std::move(l)), mu(std::move(m)), t(std::move(tt)) {
    const std::size_t n = lambda.size();
    if (mu.size() != n || t.rows() != n || t.cols() != n) throw DomainError("Heisenberg element has inconsistent sizes");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (t(i, j) - lambda[i] * mu[j] != t(j, i) - lambda[j] * mu[i])
                throw DomainError("t - lambda mu^T must be symmetric");
}

HeisenbergElement HeisenbergElement::identity(std::size_t n) {
    return HeisenbergElement(std::vector<Integer>(n), std::vector<Integer>(n), IntMatrix(n, n));
}

HeisenbergElement heisenberg_mul(const HeisenbergElement& a, const HeisenbergElement& b) {
    const std::size_t n = a.dim();
    if (b.dim() != n) throw DomainError("Heisenberg elements of different dimension");
    std::vector<Integer> l(n), m(n);
    IntMatrix t = a.t + b.t;
    for (std::size_t i = 0; i < n; ++i) {
        l[i] = a.lambda[i] + b.lambda[i];
        m[i] = a.mu[i] + b.mu[i];
        for (std::size_t j = 0; j < n; ++j) t(i, j) += a.lambda[i] * b.mu[j] - a.mu[i] * b.lambda[j];
    }
    return HeisenbergElement(std::move(l), std::move(m), std::move(t));
}

HeisenbergElement heisenberg_slash_action(const HeisenbergElement& h, const IntMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2) throw DomainError("expected a 2x2 matrix");
    const std::size_t n = h.dim();
    std::vector<Integer> l(n), u(n);
    for (std::size_t i = 0; i < n; ++i) {
        l[i] = m(0, 0) * h.lambda[i] + m(1, 0) * h.mu[i];
        u[i] = m(0, 1) * h.lambda[i] + m(1, 1) * h.mu[i];
    }
    return HeisenbergElement(std::move(l), std::move(u), h.t);
}

RepMatrix sigma_B(const GroupPtr& group, const RatMatrix& b, const HeisenbergElement& h, bool dual) {
    const std::size_t e = group->dim(), n = h.dim();
    if (b.rows() != e || b.cols() != n) throw IndexError("B must have shape e x N");
    const RatMatrix s = group->gram().rational();
    const RatMatrix sb = e ? s * b : RatMatrix(0, n);
    if (!is_integral(sb)) throw IndexError("S*B must be integral");

    auto to_rat = [](const std::vector<Integer>& v) {
        RatVec r;
        for (const auto& x : v) r.emplace_back(x);
        return r;
    };
    const RatVec lambda = to_rat(h.lambda), mu = to_rat(h.mu);
    const RatVec shift = e ? b * lambda : RatVec{};
    const RatVec sbmu = e ? sb * mu : RatVec{};
    // tr(B^T S B (t - lambda mu^T)) / 2
    RatMatrix tt = to_rational(h.t);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) tt(i, j) -= lambda[i] * mu[j];
    Rational tr;
    if (e) {
        const RatMatrix prod = b.transpose() * sb * tt;
        for (std::size_t i = 0; i < n; ++i) tr += prod(i, i);
    }
    const Rational common = tr / Rational(2);

    const std::size_t order = group->order();
    RepMatrix r{group, dual, Matrix<Cyclotomic>(order, order)};
    for (std::size_t g = 0; g < order; ++g) {
        const RatVec& gamma = group->element(g);
        const std::size_t target = e ? group->index_of(gamma - shift) : 0;
        Rational phase = -(e ? dot(gamma, sbmu) : Rational(0)) - common;
        r.entries(target, g) = Cyclotomic::e(dual ? phase : -phase);
    }
    return r;
}

RepMatrix rho_B(const GroupPtr& group, const RatMatrix& b, const Mp2Word& w, const HeisenbergElement& h, bool dual) {
    return rho_word(group, w, dual) * sigma_B(group, b, h, dual);
}

}  // namespace weiljac
