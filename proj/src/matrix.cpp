#include "weiljac/matrix.hpp"

#include <utility>

namespace weiljac {

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

IntMatrix to_integer(const RatMatrix& m) {
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_integer()) throw DomainError("matrix entry " + m(i, j).str() + " is not integral");
            r(i, j) = m(i, j).num();
        }
    return r;
}

bool is_integral(const RatMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_integer()) return false;
    return true;
}

bool is_symmetric(const RatMatrix& m) { return m.is_square() && m == m.transpose(); }

RatMatrix inverse(const RatMatrix& m) {
    if (!m.is_square()) throw DomainError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix a = m, inv = RatMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col).is_zero()) ++piv;
        if (piv == n) throw DomainError("singular matrix");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        Rational p = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col).is_zero()) continue;
            Rational f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

Rational determinant(const RatMatrix& m) {
    if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix a = m;
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col).is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col).is_zero()) continue;
            Rational f = a(i, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return det;
}

Integer determinant(const IntMatrix& m) { return determinant(to_rational(m)).num(); }

bool is_positive_definite(const RatMatrix& m) {
    if (!is_symmetric(m)) return false;
    for (std::size_t k = 1; k <= m.rows(); ++k)
        if (determinant(m.block(0, 0, k, k)).sign() <= 0) return false;
    return true;
}

QuadraticDecomposition decompose_positive_definite(const RatMatrix& a) {
    if (!is_positive_definite(a)) throw DomainError("quadratic form is not positive definite");
    const std::size_t n = a.rows();
    RatMatrix work = a;
    QuadraticDecomposition qd{std::vector<Rational>(n), RatMatrix(n, n)};
    // Complete the square in the last remaining variable, then recurse on the
    // Schur complement.
    for (std::size_t step = 0; step < n; ++step) {
        const std::size_t i = n - 1 - step;
        qd.diag[i] = work(i, i);
        for (std::size_t j = 0; j < i; ++j) qd.lower(i, j) = work(i, j) / work(i, i);
        for (std::size_t r = 0; r < i; ++r)
            for (std::size_t c = 0; c < i; ++c) work(r, c) -= work(r, i) * work(i, c) / work(i, i);
    }
    return qd;
}

}  // namespace weiljac
