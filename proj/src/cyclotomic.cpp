#include "weiljac/cyclotomic.hpp"

#include "weiljac/errors.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>

namespace weiljac {

namespace {

using IntPoly = std::vector<Integer>;

// Exact quotient of a by the monic polynomial b.
IntPoly divide_exact(IntPoly a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) throw InternalError("cyclotomic division degree underflow");
    IntPoly q(a.size() - db, 0);
    for (std::size_t k = a.size(); k-- > db;) {
        Integer c = a[k];
        q[k - db] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
    }
    for (std::size_t j = 0; j < db; ++j)
        if (a[j] != 0) throw InternalError("cyclotomic division left a remainder");
    return q;
}

IntPoly compute_phi(long n);

struct PhiCache {
    std::mutex mu;
    std::map<long, std::unique_ptr<IntPoly>> table;
};

PhiCache& phi_cache() {
    static PhiCache cache;
    return cache;
}

IntPoly compute_phi(long n) {
    // X^n - 1 divided by Phi_d for every proper divisor d.
    IntPoly p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (long d = 1; d < n; ++d)
        if (n % d == 0) p = divide_exact(p, cyclotomic_polynomial(d));
    return p;
}

// Reduces a dense polynomial (coefficients of zeta^k, k >= 0) modulo Phi_L.
std::vector<Rational> reduce(std::vector<Rational> a, long order) {
    const IntPoly& phi = cyclotomic_polynomial(order);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t k = a.size(); k-- > deg;) {
        if (a[k].is_zero()) continue;
        Rational c = a[k];
        for (std::size_t j = 0; j <= deg; ++j) a[k - deg + j] -= c * Rational(phi[j]);
    }
    a.resize(deg);
    return a;
}

}  // namespace

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<Integer>& cyclotomic_polynomial(long order) {
    if (order < 1) throw DomainError("cyclotomic order must be positive");
    auto& cache = phi_cache();
    {
        std::lock_guard lock(cache.mu);
        auto it = cache.table.find(order);
        if (it != cache.table.end()) return *it->second;
    }
    IntPoly p = order == 1 ? IntPoly{-1, 1} : compute_phi(order);
    std::lock_guard lock(cache.mu);
    auto [it, inserted] = cache.table.emplace(order, std::make_unique<IntPoly>(std::move(p)));
    return *it->second;
}

Cyclotomic::Cyclotomic() : coeffs_(1) {}

Cyclotomic::Cyclotomic(const Rational& r) : coeffs_{r} {}

Cyclotomic::Cyclotomic(long order, std::vector<Rational> coeffs) : order_(order) {
    if (order < 1) throw DomainError("cyclotomic order must be positive");
    coeffs.resize(std::max<std::size_t>(coeffs.size(), static_cast<std::size_t>(euler_phi(order))));
    coeffs_ = reduce(std::move(coeffs), order);
}

Cyclotomic Cyclotomic::root_of_unity(const Integer& num, long den) {
    if (den < 1) throw DomainError("root of unity order must be positive");
    Integer k = num % den;
    if (k < 0) k += den;
    std::vector<Rational> c(static_cast<std::size_t>(k.get_si()) + 1);
    c.back() = Rational(1);
    return Cyclotomic(den, std::move(c));
}

Cyclotomic Cyclotomic::e(const Rational& x) {
    Rational f = x.frac();
    return root_of_unity(f.num(), to_long(f.den()));
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

Cyclotomic Cyclotomic::lift(long order2) const {
    if (order2 < 1 || order2 % order_ != 0)
        throw DomainError("cannot lift order " + std::to_string(order_) + " to " + std::to_string(order2));
    if (order2 == order_) return *this;
    const long scale = order2 / order_;
    std::vector<Rational> c(static_cast<std::size_t>((coeffs_.size() - 1) * scale + 1));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[k * static_cast<std::size_t>(scale)] = coeffs_[k];
    return Cyclotomic(order2, std::move(c));
}

Cyclotomic Cyclotomic::conj() const {
    // zeta^k -> zeta^(L-k).
    std::vector<Rational> c(static_cast<std::size_t>(order_) + 1);
    c[0] = coeffs_[0];
    for (std::size_t k = 1; k < coeffs_.size(); ++k) c[static_cast<std::size_t>(order_) - k] = coeffs_[k];
    return Cyclotomic(order_, std::move(c));
}

std::complex<double> Cyclotomic::embed(bool conjugate) const {
    const double step = (conjugate ? -2.0 : 2.0) * std::numbers::pi / static_cast<double>(order_);
    std::complex<double> s = 0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        s += coeffs_[k].to_double() * std::polar(1.0, step * static_cast<double>(k));
    }
    return s;
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        Rational c = coeffs_[k];
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        Rational a = abs(c);
        if (k == 0) {
            os << a;
        } else {
            if (a != Rational(1)) os << a << "*";
            os << "z" << order_;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    const long l = std::lcm(order_, o.order_);
    Cyclotomic a = lift(l), b = o.lift(l);
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) a.coeffs_[k] += b.coeffs_[k];
    return *this = std::move(a);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    const long l = std::lcm(order_, o.order_);
    Cyclotomic a = lift(l), b = o.lift(l);
    std::vector<Rational> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return *this = Cyclotomic(l, std::move(prod));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    const long l = std::lcm(a.order_, b.order_);
    return a.lift(l).coeffs_ == b.lift(l).coeffs_;
}

Cyclotomic Cyclotomic::pow(unsigned long k) const {
    Cyclotomic result = Cyclotomic(Rational(1)).lift(order_), base = *this;
    while (k) {
        if (k & 1) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

}  // namespace weiljac
