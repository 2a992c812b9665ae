#include "kinemetry/pipoly.hpp"

#include <cmath>
#include <stdexcept>

#include "kinemetry/common.hpp"

namespace kinemetry {

void PiPoly::add_term(int halfPiExp, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(halfPiExp, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PiPoly PiPoly::monomial(Rational coeff, int halfPiExp) {
    PiPoly p;
    p.add_term(halfPiExp, coeff);
    return p;
}

PiPoly operator+(const PiPoly& a, const PiPoly& b) {
    PiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

PiPoly operator-(const PiPoly& a, const PiPoly& b) {
    PiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

PiPoly operator*(const PiPoly& a, const PiPoly& b) {
    PiPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

PiPoly PiPoly::operator-() const {
    PiPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

PiPoly PiPoly::inverse() const {
    if (terms_.size() != 1)
        throw std::domain_error("PiPoly::inverse is defined for monomials only");
    const auto& [e, c] = *terms_.begin();
    return monomial(Rational(1) / c, -e);
}

double PiPoly::to_double() const {
    double s = 0;
    for (const auto& [e, c] : terms_) s += c.to_double() * std::pow(kPi, 0.5 * e);
    return s;
}

std::string PiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.to_string();
        if (e != 0) out += "*pi^(" + std::to_string(e) + "/2)";
    }
    return out;
}

LambdaPiPoly::LambdaPiPoly(const PiPoly& p) {
    for (const auto& [e, c] : p.terms()) terms_.emplace(std::pair{0, e}, c);
}

void LambdaPiPoly::add_term(int lambdaDeg, int halfPiExp, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({lambdaDeg, halfPiExp}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LambdaPiPoly LambdaPiPoly::monomial(Rational coeff, int lambdaDeg, int halfPiExp) {
    if (lambdaDeg < 0) throw std::invalid_argument("lambda degree must be nonnegative");
    LambdaPiPoly p;
    p.add_term(lambdaDeg, halfPiExp, coeff);
    return p;
}

LambdaPiPoly operator+(const LambdaPiPoly& a, const LambdaPiPoly& b) {
    LambdaPiPoly r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
    return r;
}

LambdaPiPoly operator-(const LambdaPiPoly& a, const LambdaPiPoly& b) {
    LambdaPiPoly r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

LambdaPiPoly operator*(const LambdaPiPoly& a, const LambdaPiPoly& b) {
    LambdaPiPoly r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

LambdaPiPoly LambdaPiPoly::operator-() const {
    LambdaPiPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

PiPoly LambdaPiPoly::at_lambda_zero() const {
    PiPoly out;
    for (const auto& [k, c] : terms_)
        if (k.first == 0) out += PiPoly::monomial(c, k.second);
    return out;
}

int LambdaPiPoly::max_lambda_degree() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

std::string LambdaPiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.to_string();
        if (k.first != 0) out += "*lambda^" + std::to_string(k.first);
        if (k.second != 0) out += "*pi^(" + std::to_string(k.second) + "/2)";
    }
    return out;
}

PiPoly omega(int m) {
    if (m < 0) throw std::domain_error("omega: negative dimension");
    if (m % 2 == 0) {
        // pi^(m/2) / (m/2)!
        return PiPoly::monomial(Rational(BigInt(1), factorial(m / 2)), m);
    }
    // pi^((m-1)/2) * 2^((m+1)/2) / m!!
    BigInt pow2(1);
    for (int i = 0; i < (m + 1) / 2; ++i) pow2 *= BigInt(2);
    return PiPoly::monomial(Rational(pow2, double_factorial(m)), m - 1);
}

PiPoly c_coeff(int n, int k, int q) {
    if (q < 0 || n - k + q < 0 || k - 2 * q < 0)
        throw std::domain_error("c_coeff: factorial argument is negative");
    const BigInt denom = factorial(q) * factorial(n - k + q) * factorial(k - 2 * q);
    return PiPoly::constant(Rational(BigInt(1), denom)) * omega(2 * n - k).inverse();
}

}  // namespace kinemetry
