#pragma once

#include "kinemetry/bigint.hpp"

namespace kinemetry {

// Exact rational with arbitrary-precision parts; denominator > 0, reduced.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit conversion intended
    Rational(BigInt num, BigInt den);
    static Rational from_strings(const std::string& num, const std::string& den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    double to_double() const { return num_.to_double() / den_.to_double(); }
    std::string to_string() const;  // "p/q" or "p"

private:
    BigInt num_;
    BigInt den_;
    void reduce();
};

// n! as an exact integer.
BigInt factorial(int n);
// n!! (double factorial), n >= -1.
BigInt double_factorial(int n);

}  // namespace kinemetry
