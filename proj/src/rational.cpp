#include "kinemetry/rational.hpp"

#include <stdexcept>

namespace kinemetry {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("Rational: zero denominator");
    reduce();
}

Rational Rational::from_strings(const std::string& num, const std::string& den) {
    return Rational(BigInt::from_decimal(num), BigInt::from_decimal(den));
}

void Rational::reduce() {
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const BigInt g = BigInt::gcd(num_, den_);
    num_ = num_.divided_exact(g);
    den_ = den_.divided_exact(g);
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

std::string Rational::to_string() const {
    if (den_ == BigInt(1)) return num_.to_decimal();
    return num_.to_decimal() + "/" + den_.to_decimal();
}

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative integer");
    BigInt r(1);
    for (int i = 2; i <= n; ++i) r *= BigInt(i);
    return r;
}

BigInt double_factorial(int n) {
    if (n < -1) throw std::invalid_argument("double factorial of n < -1");
    BigInt r(1);
    for (int i = n; i >= 2; i -= 2) r *= BigInt(i);
    return r;
}

}  // namespace kinemetry
