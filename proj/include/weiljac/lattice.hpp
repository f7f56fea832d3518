#pragma once

#include "weiljac/cyclotomic.hpp"
#include "weiljac/matrix.hpp"
#include "weiljac/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace weiljac {

/// Symmetric integer matrix with even diagonal. Nondegenerate unless built
/// with `allow_singular`, which only block assembly uses.
class GramMatrix {
public:
    GramMatrix() = default;  // the empty (size 0) Gram matrix
    explicit GramMatrix(IntMatrix entries, bool allow_singular = false);
    GramMatrix(std::initializer_list<std::initializer_list<Integer>> rows)
        : GramMatrix(IntMatrix(rows)) {}

    [[nodiscard]] std::size_t size() const { return m_.rows(); }
    [[nodiscard]] const IntMatrix& entries() const { return m_; }
    [[nodiscard]] RatMatrix rational() const { return to_rational(m_); }
    [[nodiscard]] Integer determinant() const;
    [[nodiscard]] std::string str() const;

    const Integer& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    friend bool operator==(const GramMatrix& a, const GramMatrix& b) { return a.m_ == b.m_; }

private:
    IntMatrix m_;
};

/// Discriminant group A = S^-1 Z^e / Z^e with its quadratic data. Elements
/// are stored by their representatives in [0,1)^e, sorted lexicographically,
/// and referred to by index into that order. Index 0 is always the zero class.
class DiscriminantGroup {
public:
    explicit DiscriminantGroup(GramMatrix gram);

    [[nodiscard]] const GramMatrix& gram() const { return gram_; }
    [[nodiscard]] std::size_t dim() const { return gram_.size(); }
    [[nodiscard]] std::size_t order() const { return elements_.size(); }
    [[nodiscard]] long level() const { return level_; }
    /// sig(S) = b+ - b-.
    [[nodiscard]] int signature() const { return signature_; }
    [[nodiscard]] int signature_mod8() const { return ((signature_ % 8) + 8) % 8; }

    [[nodiscard]] const std::vector<RatVec>& elements() const { return elements_; }
    [[nodiscard]] const RatVec& element(std::size_t i) const { return elements_.at(i); }
    /// Index of the class of `coords`, reduced mod Z^e; nullopt if S*coords is not integral.
    [[nodiscard]] std::optional<std::size_t> find(const RatVec& coords) const;
    /// As find(), but throws DomainError for vectors outside S^-1 Z^e.
    [[nodiscard]] std::size_t index_of(const RatVec& coords) const;

    [[nodiscard]] const QmodZ& q(std::size_t i) const { return q_values_.at(i); }
    [[nodiscard]] QmodZ pairing(std::size_t i, std::size_t j) const;
    [[nodiscard]] std::size_t negate(std::size_t i) const { return negation_.at(i); }
    [[nodiscard]] std::size_t add(std::size_t i, std::size_t j) const;

private:
    GramMatrix gram_;
    std::vector<RatVec> elements_;
    std::map<RatVec, std::size_t> lookup_;
    std::vector<QmodZ> q_values_;
    std::vector<std::size_t> negation_;
    long level_ = 1;
    int signature_ = 0;
};

using GroupPtr = std::shared_ptr<const DiscriminantGroup>;

/// Builds (and validates) the discriminant group of a nondegenerate Gram matrix.
GroupPtr discriminant_group(const GramMatrix& s);

/// Q(gamma) = gamma^T S gamma / 2 mod 1.
QmodZ q_value(const GramMatrix& s, const RatVec& gamma);
/// <gamma, beta> = gamma^T S beta mod 1.
QmodZ pairing(const GramMatrix& s, const RatVec& gamma, const RatVec& beta);
/// b+ - b- by exact congruence diagonalization.
int signature(const GramMatrix& s);
int signature(const RatMatrix& symmetric);
/// Sum over A of e(Q(gamma)), an element of Q(zeta_level).
Cyclotomic gauss_sum(const DiscriminantGroup& group);
Cyclotomic gauss_sum(const GramMatrix& s);

GramMatrix direct_sum(const GramMatrix& a, const GramMatrix& b);

/// Jacobi index data: M symmetric positive definite (N x N), B rational e x N.
struct JacobiIndex {
    RatMatrix m;
    RatMatrix b;
};

/// Checks S*B integral and 2M + B^T S B integral with even diagonal, and that
/// M is positive definite; throws IndexError naming the violated condition.
void validate_index(const GramMatrix& s, const JacobiIndex& index);

/// The block matrix (S, SB; B^T S, 2M + B^T S B).
GramMatrix assemble_tilde(const GramMatrix& s, const JacobiIndex& index);

struct TildeSplit {
    GramMatrix s;
    JacobiIndex index;
};
/// Inverse of assemble_tilde for the split after the first `e` coordinates.
TildeSplit split_tilde(const GramMatrix& tilde, std::size_t e);

/// Smith normal form D = U S V with U, V unimodular.
struct SmithForm {
    IntMatrix d, u, v;
};
SmithForm smith_normal_form(const IntMatrix& s);

struct Rebased {
    GramMatrix gram;                       // P^T S P
    std::vector<std::size_t> element_map;  // index in A(S) -> index in A(P^T S P)
};
/// Change of basis by a unimodular P; gamma maps to P^-1 gamma.
Rebased rebase(const GramMatrix& s, const IntMatrix& p);

}  // namespace weiljac
