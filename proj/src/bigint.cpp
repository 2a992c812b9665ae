#include "kinemetry/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace kinemetry {

namespace {

constexpr std::uint64_t kBase = 1ull << 32;

}  // namespace

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    unsigned long long mag =
        v > 0 ? static_cast<unsigned long long>(v) : 0ull - static_cast<unsigned long long>(v);
    while (mag != 0) {
        limbs_.push_back(static_cast<std::uint32_t>(mag & 0xFFFFFFFFull));
        mag >>= 32;
    }
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

int BigInt::compare_magnitude(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        std::uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        out.push_back(static_cast<std::uint32_t>(s & 0xFFFFFFFFull));
        carry = s >> 32;
    }
    if (carry) out.push_back(static_cast<std::uint32_t>(carry));
    return out;
}

std::vector<std::uint32_t> BigInt::sub_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) {
            s += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(s));
    }
    return out;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.sign_ = a.sign_;
        r.limbs_ = BigInt::add_magnitude(a.limbs_, b.limbs_);
    } else {
        const int cmp = BigInt::compare_magnitude(a, b);
        if (cmp == 0) return BigInt();
        if (cmp > 0) {
            r.sign_ = a.sign_;
            r.limbs_ = BigInt::sub_magnitude(a.limbs_, b.limbs_);
        } else {
            r.sign_ = b.sign_;
            r.limbs_ = BigInt::sub_magnitude(b.limbs_, a.limbs_);
        }
    }
    r.trim();
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt r;
    r.sign_ = a.sign_ * b.sign_;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
            std::uint64_t cur = r.limbs_[i + j] +
                                static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
            r.limbs_[i + j] = static_cast<std::uint32_t>(cur & 0xFFFFFFFFull);
            carry = cur >> 32;
        }
        std::size_t k = i + b.limbs_.size();
        while (carry) {
            std::uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<std::uint32_t>(cur & 0xFFFFFFFFull);
            carry = cur >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    const int cmp = BigInt::compare_magnitude(a, b);
    return a.sign_ >= 0 ? cmp < 0 : cmp > 0;
}

unsigned BigInt::trailing_zero_bits() const {
    if (sign_ == 0) return 0;
    unsigned bits = 0;
    for (std::uint32_t limb : limbs_) {
        if (limb == 0) {
            bits += 32;
        } else {
            while ((limb & 1u) == 0) {
                ++bits;
                limb >>= 1;
            }
            break;
        }
    }
    return bits;
}

void BigInt::shift_right_bits(unsigned bits) {
    if (sign_ == 0 || bits == 0) return;
    const unsigned limbShift = bits / 32, bitShift = bits % 32;
    if (limbShift >= limbs_.size()) {
        limbs_.clear();
        sign_ = 0;
        return;
    }
    limbs_.erase(limbs_.begin(), limbs_.begin() + limbShift);
    if (bitShift) {
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            limbs_[i] >>= bitShift;
            if (i + 1 < limbs_.size())
                limbs_[i] |= limbs_[i + 1] << (32 - bitShift);
        }
    }
    trim();
}

void BigInt::shift_left_bits(unsigned bits) {
    if (sign_ == 0 || bits == 0) return;
    const unsigned limbShift = bits / 32, bitShift = bits % 32;
    if (bitShift) {
        std::uint32_t carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            const std::uint32_t next = limbs_[i] >> (32 - bitShift);
            limbs_[i] = (limbs_[i] << bitShift) | carry;
            carry = next;
        }
        if (carry) limbs_.push_back(carry);
    }
    limbs_.insert(limbs_.begin(), limbShift, 0u);
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    BigInt x = a.abs(), y = b.abs();
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    const unsigned shift = std::min(x.trailing_zero_bits(), y.trailing_zero_bits());
    x.shift_right_bits(x.trailing_zero_bits());
    for (;;) {
        y.shift_right_bits(y.trailing_zero_bits());
        if (compare_magnitude(x, y) > 0) std::swap(x, y);
        y = y - x;
        if (y.is_zero()) break;
    }
    x.shift_left_bits(shift);
    return x;
}

BigInt BigInt::divided_exact(const BigInt& d) const {
    if (d.is_zero()) throw std::logic_error("BigInt: division by zero");
    if (is_zero()) return BigInt();

    BigInt num = this->abs();
    BigInt den = d.abs();
    const unsigned dz = den.trailing_zero_bits();
    if (num.trailing_zero_bits() < dz)
        throw std::logic_error("BigInt: inexact division");
    num.shift_right_bits(dz);
    den.shift_right_bits(dz);

    // exact division by the odd part via Jebelean's low-to-high algorithm
    // inv = den^{-1} mod 2^32 (Newton iteration; den is odd)
    std::uint32_t inv = den.limbs_[0];
    for (int it = 0; it < 5; ++it) inv *= 2u - den.limbs_[0] * inv;

    if (num.limbs_.size() < den.limbs_.size())
        throw std::logic_error("BigInt: inexact division");

    const std::size_t qLen = num.limbs_.size() - den.limbs_.size() + 1;
    std::vector<std::uint32_t> q(qLen, 0);
    std::vector<std::uint32_t>& rem = num.limbs_;

    for (std::size_t i = 0; i < qLen; ++i) {
        const std::uint32_t qi = rem[i] * inv;
        q[i] = qi;
        if (qi == 0) continue;
        // rem -= qi * den << (32*i)
        std::uint64_t borrow = 0, carry = 0;
        for (std::size_t j = 0; j < den.limbs_.size(); ++j) {
            const std::uint64_t prod = static_cast<std::uint64_t>(qi) * den.limbs_[j] + carry;
            carry = prod >> 32;
            const std::uint64_t sub = (prod & 0xFFFFFFFFull) + borrow;
            const std::uint64_t cur = rem[i + j];
            if (cur < sub) {
                rem[i + j] = static_cast<std::uint32_t>(cur + kBase - sub);
                borrow = 1;
            } else {
                rem[i + j] = static_cast<std::uint32_t>(cur - sub);
                borrow = 0;
            }
        }
        std::size_t k = i + den.limbs_.size();
        std::uint64_t down = carry + borrow;
        while (down) {
            if (k >= rem.size()) throw std::logic_error("BigInt: inexact division");
            const std::uint64_t cur = rem[k];
            if (cur < down) {
                rem[k] = static_cast<std::uint32_t>(cur + kBase - down);
                down = 1;
            } else {
                rem[k] = static_cast<std::uint32_t>(cur - down);
                down = 0;
            }
            ++k;
        }
    }
    for (std::size_t i = qLen; i < rem.size(); ++i)
        if (rem[i] != 0) throw std::logic_error("BigInt: inexact division");

    BigInt out;
    out.limbs_ = std::move(q);
    out.sign_ = sign_ * d.sign_;
    out.trim();
    if (!(out * d == *this)) throw std::logic_error("BigInt: inexact division");
    return out;
}

void BigInt::mul_add_small(std::uint32_t mul, std::uint32_t add) {
    std::uint64_t carry = add;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        const std::uint64_t cur = static_cast<std::uint64_t>(limbs_[i]) * mul + carry;
        limbs_[i] = static_cast<std::uint32_t>(cur & 0xFFFFFFFFull);
        carry = cur >> 32;
    }
    while (carry) {
        limbs_.push_back(static_cast<std::uint32_t>(carry & 0xFFFFFFFFull));
        carry >>= 32;
    }
    if (!limbs_.empty() && sign_ == 0) sign_ = 1;
    trim();
}

std::uint32_t BigInt::divmod_small(std::uint32_t d) {
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        const std::uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    trim();
    return static_cast<std::uint32_t>(rem);
}

BigInt BigInt::from_decimal(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("BigInt: empty decimal string");
    std::size_t pos = 0;
    int sign = 1;
    if (text[0] == '-' || text[0] == '+') {
        sign = text[0] == '-' ? -1 : 1;
        pos = 1;
    }
    if (pos >= text.size()) throw std::invalid_argument("BigInt: no digits");
    BigInt out;
    while (pos < text.size()) {
        std::uint32_t chunk = 0, scale = 1;
        std::size_t stop = std::min(pos + 9, text.size());
        for (; pos < stop; ++pos) {
            const char c = text[pos];
            if (c < '0' || c > '9') throw std::invalid_argument("BigInt: invalid decimal digit");
            chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
            scale *= 10;
        }
        out.mul_add_small(scale, chunk);
    }
    if (out.sign_ != 0) out.sign_ = sign;
    return out;
}

std::string BigInt::to_decimal() const {
    if (is_zero()) return "0";
    BigInt work = abs();
    std::string digits;
    while (!work.is_zero()) {
        std::uint32_t part = work.divmod_small(1000000000u);
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + part % 10));
            part /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

double BigInt::to_double() const {
    double mag = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) mag = mag * 4294967296.0 + limbs_[i];
    return sign_ < 0 ? -mag : mag;
}

}  // namespace kinemetry
