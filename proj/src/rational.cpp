#include "weiljac/rational.hpp"

#include "weiljac/errors.hpp"

#include <cctype>
#include <climits>
#include <ostream>

namespace weiljac {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto bad = [&] { return ParseError("malformed rational '" + std::string(text) + "'"); };
    auto is_int = [](std::string_view s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto strip_plus = [](std::string_view s) {
        return std::string((!s.empty() && s[0] == '+') ? s.substr(1) : s);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(text)) throw bad();
        return Rational(Integer(strip_plus(text)));
    }
    auto n = text.substr(0, slash), d = text.substr(slash + 1);
    if (!is_int(n) || !is_int(d) || d[0] == '-' || d[0] == '+') throw bad();
    Integer den(std::string{d});
    if (den == 0) throw bad();
    return Rational(Integer(strip_plus(n)), den);
}

Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

Integer Rational::ceil() const {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer isqrt_floor(const Rational& x) {
    if (x.sign() < 0) throw DomainError("square root of a negative number");
    Integer f = x.floor(), r;
    mpz_sqrt(r.get_mpz_t(), f.get_mpz_t());
    return r;
}

long to_long(const Integer& z) {
    if (!z.fits_slong_p()) throw DomainError("integer " + z.get_str() + " exceeds machine range");
    return z.get_si();
}

RatVec operator+(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DomainError("vector length mismatch");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DomainError("vector length mismatch");
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RatVec operator*(const Rational& s, const RatVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
    return r;
}

Rational dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DomainError("vector length mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_integral(const RatVec& v) {
    for (const auto& x : v)
        if (!x.is_integer()) return false;
    return true;
}

RatVec frac(const RatVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].frac();
    return r;
}

std::string to_string(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

}  // namespace weiljac
