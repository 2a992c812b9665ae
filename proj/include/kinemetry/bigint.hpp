#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kinemetry {

// Arbitrary-precision signed integer, sign-magnitude with base-2^32 limbs.
// Supports exactly the operations the rational coefficient ring needs:
// ring arithmetic, binary gcd, exact division, and decimal I/O.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);  // NOLINT: implicit, mirrors integer literals

    static BigInt from_decimal(const std::string& text);
    std::string to_decimal() const;

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    bool is_odd() const { return sign_ != 0 && (limbs_[0] & 1u); }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator<(const BigInt& a, const BigInt& b);
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    // Greatest common divisor, always nonnegative.
    static BigInt gcd(const BigInt& a, const BigInt& b);

    // Quotient of an exact division; throws std::logic_error if d does not
    // divide *this.
    BigInt divided_exact(const BigInt& d) const;

    double to_double() const;

private:
    int sign_ = 0;                      // -1, 0, +1
    std::vector<std::uint32_t> limbs_;  // little-endian magnitude, trimmed

    void trim();
    static int compare_magnitude(const BigInt& a, const BigInt& b);
    static std::vector<std::uint32_t> add_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
    void shift_right_bits(unsigned bits);
    void shift_left_bits(unsigned bits);
    unsigned trailing_zero_bits() const;
    void mul_add_small(std::uint32_t mul, std::uint32_t add);
    std::uint32_t divmod_small(std::uint32_t d);  // in place, returns remainder
};

}  // namespace kinemetry
