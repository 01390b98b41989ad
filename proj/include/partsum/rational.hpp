#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace partsum {

using BigInt = mpz_class;

/// Exact rational number in canonical form: gcd(|num|, den) = 1, den > 0,
/// zero stored as 0/1. All arithmetic is exact; equality is decidable.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long value) : q_(value) {}
    Rational(const BigInt& value) : q_(value) {}
    Rational(const BigInt& numerator, const BigInt& denominator)
        : q_(numerator, denominator) {
        if (denominator == 0)
            throw std::domain_error("Rational: zero denominator");
        q_.canonicalize();
    }
    Rational(long numerator, long denominator)
        : Rational(BigInt(numerator), BigInt(denominator)) {}

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    Rational operator-() const { Rational r; r.q_ = -q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) < 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) > 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) <= 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) >= 0; }

    /// "p/q" for proper fractions, plain "p" when the denominator is 1.
    std::string str() const { return q_.get_str(); }

private:
    mpq_class q_;
};

/// 2^e as an exact rational for any integer exponent, e.g. pow2(-1) = 1/2.
Rational pow2(long exponent);

}  // namespace partsum
