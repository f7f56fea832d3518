#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace weiljac {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
    Rational(const Integer& v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    /// Accepts unevaluated GMP integer expressions such as `a * b`.
    template <typename Op>
    Rational(const __gmp_expr<mpz_t, Op>& e) : v_(mpz_class(e)) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Parses "p", "p/q", "-p/q"; throws ParseError.
    static Rational parse(std::string_view text);

    [[nodiscard]] Integer num() const { return v_.get_num(); }
    [[nodiscard]] Integer den() const { return v_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return v_; }

    [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
    [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(v_); }

    [[nodiscard]] Integer floor() const;
    [[nodiscard]] Integer ceil() const;
    /// Representative of this value mod 1 in [0, 1).
    [[nodiscard]] Rational frac() const;
    [[nodiscard]] double to_double() const { return v_.get_d(); }
    [[nodiscard]] std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);
Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);
/// floor(sqrt(x)) for x >= 0.
Integer isqrt_floor(const Rational& x);
/// Converts to a machine integer; throws DomainError when out of range.
long to_long(const Integer& z);

/// A value of Q/Z, stored as its representative in [0, 1).
class QmodZ {
public:
    QmodZ() = default;
    explicit QmodZ(const Rational& r) : value_(r.frac()) {}

    [[nodiscard]] const Rational& value() const { return value_; }
    [[nodiscard]] bool is_zero() const { return value_.is_zero(); }

    QmodZ operator-() const { return QmodZ(-value_); }
    friend QmodZ operator+(const QmodZ& a, const QmodZ& b) { return QmodZ(a.value_ + b.value_); }
    friend QmodZ operator-(const QmodZ& a, const QmodZ& b) { return QmodZ(a.value_ - b.value_); }
    friend bool operator==(const QmodZ&, const QmodZ&) = default;
    friend auto operator<=>(const QmodZ&, const QmodZ&) = default;

private:
    Rational value_;
};

using RatVec = std::vector<Rational>;

/// Lexicographic helpers for rational vectors.
RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator*(const Rational& s, const RatVec& v);
Rational dot(const RatVec& a, const RatVec& b);
bool is_integral(const RatVec& v);
RatVec frac(const RatVec& v);
std::string to_string(const RatVec& v);

}  // namespace weiljac
