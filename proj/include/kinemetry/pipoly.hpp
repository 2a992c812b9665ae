#pragma once

#include <map>
#include <utility>

#include "kinemetry/rational.hpp"

namespace kinemetry {

// Finite sum of rational multiples of half-integer powers of pi:
//   sum_j q_j * pi^(j/2), keyed by the half-exponent j (any integer sign).
// No zero coefficients are stored.
class PiPoly {
public:
    PiPoly() = default;
    static PiPoly monomial(Rational coeff, int halfPiExp);
    static PiPoly constant(Rational coeff) { return monomial(std::move(coeff), 0); }
    static PiPoly zero() { return PiPoly(); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Rational>& terms() const { return terms_; }

    friend PiPoly operator+(const PiPoly& a, const PiPoly& b);
    friend PiPoly operator-(const PiPoly& a, const PiPoly& b);
    friend PiPoly operator*(const PiPoly& a, const PiPoly& b);
    PiPoly operator-() const;

    PiPoly& operator+=(const PiPoly& o) { return *this = *this + o; }
    PiPoly& operator-=(const PiPoly& o) { return *this = *this - o; }
    PiPoly& operator*=(const PiPoly& o) { return *this = *this * o; }

    friend bool operator==(const PiPoly& a, const PiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const PiPoly& a, const PiPoly& b) { return !(a == b); }

    // Reciprocal; defined for single-term values only.
    PiPoly inverse() const;

    bool is_monomial() const { return terms_.size() == 1; }

    double to_double() const;
    std::string to_string() const;

private:
    std::map<int, Rational> terms_;
    void add_term(int halfPiExp, const Rational& c);
};

// The same ring graded by powers of a formal parameter lambda:
//   sum q * lambda^m * pi^(j/2), keyed by (m, j), m >= 0.
class LambdaPiPoly {
public:
    LambdaPiPoly() = default;
    LambdaPiPoly(const PiPoly& p);  // NOLINT: lambda-degree-0 embedding
    static LambdaPiPoly monomial(Rational coeff, int lambdaDeg, int halfPiExp);
    static LambdaPiPoly zero() { return LambdaPiPoly(); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }

    friend LambdaPiPoly operator+(const LambdaPiPoly& a, const LambdaPiPoly& b);
    friend LambdaPiPoly operator-(const LambdaPiPoly& a, const LambdaPiPoly& b);
    friend LambdaPiPoly operator*(const LambdaPiPoly& a, const LambdaPiPoly& b);
    LambdaPiPoly operator-() const;

    LambdaPiPoly& operator+=(const LambdaPiPoly& o) { return *this = *this + o; }
    LambdaPiPoly& operator-=(const LambdaPiPoly& o) { return *this = *this - o; }
    LambdaPiPoly& operator*=(const LambdaPiPoly& o) { return *this = *this * o; }

    friend bool operator==(const LambdaPiPoly& a, const LambdaPiPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LambdaPiPoly& a, const LambdaPiPoly& b) { return !(a == b); }

    // Coefficient slice at lambda^0.
    PiPoly at_lambda_zero() const;
    int max_lambda_degree() const;

    std::string to_string() const;

private:
    std::map<std::pair<int, int>, Rational> terms_;
    void add_term(int lambdaDeg, int halfPiExp, const Rational& c);
};

// Volume of the unit m-ball as an exact PiPoly monomial.
PiPoly omega(int m);

// Normalization constant 1 / (q! (n-k+q)! (k-2q)! omega_{2n-k}).
PiPoly c_coeff(int n, int k, int q);

}  // namespace kinemetry
