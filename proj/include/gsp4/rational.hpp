#pragma once

#include <iosfwd>
#include <string>

#include "gsp4/bigint.hpp"

namespace gsp4 {

// Exact rational number. Always stored in lowest terms with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt numerator) : num_(std::move(numerator)), den_(1) {}
    Rational(long long numerator) : num_(numerator), den_(1) {}
    Rational(int numerator) : num_(numerator), den_(1) {}
    Rational(BigInt numerator, BigInt denominator);
    Rational(long long numerator, long long denominator)
        : Rational(BigInt(numerator), BigInt(denominator)) {}

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }

    // Exact conversion to an integer. Throws std::domain_error naming `what`
    // when the value is not integral; this is the transcription tripwire for
    // every formula evaluated in exact arithmetic.
    BigInt to_integer(const std::string& what) const;

    Rational operator-() const;
    Rational abs() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Rational& value);

private:
    BigInt num_;
    BigInt den_;

    void normalize();
};

}  // namespace gsp4
