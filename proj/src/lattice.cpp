#include "weiljac/lattice.hpp"

#include "weiljac/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

namespace weiljac {

GramMatrix::GramMatrix(IntMatrix entries, bool allow_singular) : m_(std::move(entries)) {
    if (!m_.is_square()) throw DomainError("Gram matrix must be square");
    for (std::size_t i = 0; i < m_.rows(); ++i) {
        if (m_(i, i) % 2 != 0) throw DomainError("Gram matrix diagonal must be even");
        for (std::size_t j = 0; j < i; ++j)
            if (m_(i, j) != m_(j, i)) throw DomainError("Gram matrix must be symmetric");
    }
    if (!allow_singular && m_.rows() > 0 && determinant() == 0) throw DomainError("Gram matrix is degenerate");
}

Integer GramMatrix::determinant() const {
    return m_.rows() == 0 ? Integer(1) : weiljac::determinant(m_);
}

std::string GramMatrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m_.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m_.cols(); ++j) os << (j ? "," : "") << m_(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

// row_dst += f * row_src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& s) {
    const std::size_t n = s.rows(), m = s.cols();
    SmithForm f{s, IntMatrix::identity(n), IntMatrix::identity(m)};
    IntMatrix& a = f.d;
    for (std::size_t t = 0; t < std::min(n, m); ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block becomes the pivot
            std::size_t pi = n, pj = m;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < m; ++j)
                    if (a(i, j) != 0 && (pi == n || abs(a(i, j)) < abs(a(pi, pj)))) pi = i, pj = j;
            if (pi == n) return f;
            swap_rows(a, t, pi);
            swap_rows(f.u, t, pi);
            swap_cols(a, t, pj);
            swap_cols(f.v, t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (a(i, t) == 0) continue;
                Integer q = -floor_div(a(i, t), a(t, t));
                add_row(a, i, t, q);
                add_row(f.u, i, t, q);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < m; ++j) {
                if (a(t, j) == 0) continue;
                Integer q = -floor_div(a(t, j), a(t, t));
                add_col(a, j, t, q);
                add_col(f.v, j, t, q);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            std::size_t bad = n;
            for (std::size_t i = t + 1; i < n && bad == n; ++i)
                for (std::size_t j = t + 1; j < m; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == n) break;
            add_row(a, t, bad, Integer(1));
            add_row(f.u, t, bad, Integer(1));
        }
        if (a(t, t) < 0) {
            for (std::size_t j = 0; j < m; ++j) a(t, j) = -a(t, j);
            for (std::size_t j = 0; j < n; ++j) f.u(t, j) = -f.u(t, j);
        }
    }
    return f;
}

// ---------------------------------------------------------------------------
// quadratic data

QmodZ q_value(const GramMatrix& s, const RatVec& gamma) {
    if (gamma.size() != s.size()) throw DomainError("vector length does not match Gram matrix");
    return QmodZ(dot(gamma, s.rational() * gamma) / Rational(2));
}

QmodZ pairing(const GramMatrix& s, const RatVec& gamma, const RatVec& beta) {
    if (gamma.size() != s.size() || beta.size() != s.size())
        throw DomainError("vector length does not match Gram matrix");
    return QmodZ(dot(gamma, s.rational() * beta));
}

int signature(const RatMatrix& symmetric) {
    if (!is_symmetric(symmetric)) throw DomainError("signature of a non-symmetric matrix");
    RatMatrix a = symmetric;
    std::size_t n = a.rows();
    int sig = 0;
    // Congruence diagonalization: pivot on a nonzero diagonal entry; if the
    // diagonal vanishes, add a row/column with a nonzero off-diagonal entry
    // to create one. Zero rows contribute nothing.
    while (n > 0) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!a(i, i).is_zero()) {
                p = i;
                break;
            }
        if (p == n) {
            std::size_t ri = n, rj = n;
            for (std::size_t i = 0; i < n && ri == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!a(i, j).is_zero()) {
                        ri = i, rj = j;
                        break;
                    }
            if (ri == n) break;  // remaining block is zero
            for (std::size_t k = 0; k < n; ++k) a(ri, k) += a(rj, k);
            for (std::size_t k = 0; k < n; ++k) a(k, ri) += a(k, rj);
            p = ri;
        }
        const Rational piv = a(p, p);
        sig += piv.sign();
        for (std::size_t i = 0; i < n; ++i) {
            if (i == p || a(i, p).is_zero()) continue;
            const Rational f = a(i, p) / piv;
            for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(p, j);
        }
        // drop row/column p (its off-diagonal column entries are now symmetric zero)
        RatMatrix b(n - 1, n - 1);
        for (std::size_t i = 0, bi = 0; i < n; ++i) {
            if (i == p) continue;
            for (std::size_t j = 0, bj = 0; j < n; ++j) {
                if (j == p) continue;
                b(bi, bj++) = a(i, j);
            }
            ++bi;
        }
        a = std::move(b);
        --n;
    }
    return sig;
}

int signature(const GramMatrix& s) { return signature(s.rational()); }

// ---------------------------------------------------------------------------
// discriminant group

DiscriminantGroup::DiscriminantGroup(GramMatrix gram) : gram_(std::move(gram)) {
    const std::size_t e = gram_.size();
    signature_ = e ? weiljac::signature(gram_) : 0;
    if (e == 0) {
        elements_.emplace_back();
    } else {
        // S^-1 = V D^-1 U, so A is generated by the columns of V scaled by 1/d_i.
        SmithForm f = smith_normal_form(gram_.entries());
        std::vector<long> d(e);
        Integer total = 1;
        for (std::size_t i = 0; i < e; ++i) {
            d[i] = to_long(f.d(i, i));
            total *= f.d(i, i);
        }
        if (total > 2'000'000) throw DomainError("discriminant group too large: " + total.get_str());
        std::vector<long> k(e, 0);
        for (;;) {
            RatVec g(e);
            for (std::size_t i = 0; i < e; ++i) {
                if (k[i] == 0) continue;
                Rational c(Integer(k[i]), Integer(d[i]));
                for (std::size_t r = 0; r < e; ++r) g[r] += c * Rational(f.v(r, i));
            }
            elements_.push_back(frac(g));
            std::size_t i = 0;
            while (i < e && ++k[i] == d[i]) k[i++] = 0;
            if (i == e) break;
        }
        std::sort(elements_.begin(), elements_.end());
    }
    for (std::size_t i = 0; i < elements_.size(); ++i) lookup_.emplace(elements_[i], i);
    if (lookup_.size() != elements_.size()) throw InternalError("duplicate discriminant group elements");

    Integer lvl = 1;
    q_values_.reserve(elements_.size());
    negation_.reserve(elements_.size());
    for (const auto& g : elements_) {
        q_values_.push_back(e ? q_value(gram_, g) : QmodZ());
        lvl = lcm(lvl, q_values_.back().value().den());
        negation_.push_back(lookup_.at(frac(Rational(-1) * g)));
    }
    level_ = to_long(lvl);
}

std::optional<std::size_t> DiscriminantGroup::find(const RatVec& coords) const {
    if (coords.size() != dim()) throw DomainError("vector length does not match discriminant group");
    if (dim() > 0 && !is_integral(gram_.rational() * coords)) return std::nullopt;
    auto it = lookup_.find(frac(coords));
    if (it == lookup_.end()) throw InternalError("class missing from discriminant group");
    return it->second;
}

std::size_t DiscriminantGroup::index_of(const RatVec& coords) const {
    auto i = find(coords);
    if (!i) throw DomainError(to_string(coords) + " is not in the dual lattice");
    return *i;
}

QmodZ DiscriminantGroup::pairing(std::size_t i, std::size_t j) const {
    if (dim() == 0) return QmodZ();
    return weiljac::pairing(gram_, elements_.at(i), elements_.at(j));
}

std::size_t DiscriminantGroup::add(std::size_t i, std::size_t j) const {
    return lookup_.at(frac(elements_.at(i) + elements_.at(j)));
}

GroupPtr discriminant_group(const GramMatrix& s) { return std::make_shared<const DiscriminantGroup>(s); }

Cyclotomic gauss_sum(const DiscriminantGroup& group) {
    Cyclotomic g(group.level(), {});
    for (std::size_t i = 0; i < group.order(); ++i) g += Cyclotomic::e(group.q(i).value());
    // Milgram: G = sqrt|A| e(sig/8). Check both the exact norm and the phase.
    const auto order = static_cast<long>(group.order());
    if (!(g * g.conj() == Cyclotomic(order))) throw InternalError("Gauss sum has wrong absolute value");
    const std::complex<double> expected =
        std::sqrt(static_cast<double>(order)) * std::polar(1.0, std::numbers::pi * group.signature() / 4.0);
    if (std::abs(g.embed() - expected) > 1e-9 * std::max(1.0, std::abs(expected)))
        throw InternalError("Gauss sum phase disagrees with the signature");
    return g;
}

Cyclotomic gauss_sum(const GramMatrix& s) { return gauss_sum(DiscriminantGroup(s)); }

GramMatrix direct_sum(const GramMatrix& a, const GramMatrix& b) {
    const std::size_t n = a.size(), m = b.size();
    IntMatrix r(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) r(n + i, n + j) = b(i, j);
    return GramMatrix(std::move(r));
}

// ---------------------------------------------------------------------------
// block assembly

void validate_index(const GramMatrix& s, const JacobiIndex& index) {
    const std::size_t e = s.size(), n = index.m.rows();
    if (!index.m.is_square() || n == 0) throw IndexError("M must be a nonempty square matrix");
    if (index.b.rows() != e || index.b.cols() != n) throw IndexError("B must have shape e x N");
    if (!is_symmetric(index.m)) throw IndexError("M must be symmetric");
    if (!is_positive_definite(index.m)) throw IndexError("M must be positive definite");
    const RatMatrix sb = s.rational() * index.b;
    if (e > 0 && !is_integral(sb)) throw IndexError("S*B must be integral");
    RatMatrix lower = Rational(2) * index.m;
    if (e > 0) lower = lower + index.b.transpose() * sb;
    if (!is_integral(lower)) throw IndexError("2M + B^T S B must be integral");
    for (std::size_t i = 0; i < n; ++i)
        if (!lower(i, i).is_integer() || lower(i, i).num() % 2 != 0)
            throw IndexError("2M + B^T S B must have even diagonal");
}

GramMatrix assemble_tilde(const GramMatrix& s, const JacobiIndex& index) {
    validate_index(s, index);
    const std::size_t e = s.size(), n = index.m.rows();
    const RatMatrix sr = s.rational();
    RatMatrix sb = e ? sr * index.b : RatMatrix(0, n);
    RatMatrix lower = Rational(2) * index.m;
    if (e > 0) lower = lower + index.b.transpose() * sb;
    IntMatrix t(e + n, e + n);
    for (std::size_t i = 0; i < e; ++i) {
        for (std::size_t j = 0; j < e; ++j) t(i, j) = s(i, j);
        for (std::size_t j = 0; j < n; ++j) t(i, e + j) = t(e + j, i) = sb(i, j).num();
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t(e + i, e + j) = lower(i, j).num();
    return GramMatrix(std::move(t), true);
}

TildeSplit split_tilde(const GramMatrix& tilde, std::size_t e) {
    const std::size_t total = tilde.size();
    if (e > total) throw IndexError("split position beyond matrix size");
    if (e == total) throw IndexError("split leaves no Jacobi variables");
    const std::size_t n = total - e;
    IntMatrix s = tilde.entries().block(0, 0, e, e);
    if (e > 0 && determinant(s) == 0) throw IndexError("upper-left block is degenerate");
    GramMatrix sg(s);
    const RatMatrix sr = to_rational(s);
    RatMatrix b = e ? inverse(sr) * to_rational(tilde.entries().block(0, e, e, n)) : RatMatrix(0, n);
    RatMatrix m = to_rational(tilde.entries().block(e, e, n, n));
    if (e > 0) m = m - b.transpose() * sr * b;
    m = Rational(1, 2) * m;
    JacobiIndex idx{std::move(m), std::move(b)};
    validate_index(sg, idx);
    return {std::move(sg), std::move(idx)};
}

Rebased rebase(const GramMatrix& s, const IntMatrix& p) {
    if (!p.is_square() || p.rows() != s.size()) throw DomainError("basis change has the wrong shape");
    const Integer det = determinant(p);
    if (det != 1 && det != -1) throw DomainError("basis change is not unimodular");
    GramMatrix t(p.transpose() * s.entries() * p);
    DiscriminantGroup a(s), b(t);
    const RatMatrix pinv = inverse(to_rational(p));
    Rebased r{t, {}};
    r.element_map.reserve(a.order());
    for (const auto& g : a.elements()) r.element_map.push_back(b.index_of(pinv * g));
    return r;
}

}  // namespace weiljac
