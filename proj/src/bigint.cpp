#include "gsp4/bigint.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace gsp4 {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long value) {
    if (value == 0) return;
    sign_ = value < 0 ? -1 : 1;
    // avoid overflow on LLONG_MIN
    std::uint64_t mag = value < 0 ? ~static_cast<std::uint64_t>(value) + 1 : static_cast<std::uint64_t>(value);
    limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
    if (mag >> 32) limbs_.push_back(static_cast<std::uint32_t>(mag >> 32));
}

BigInt BigInt::from_string(std::string_view text) {
    std::size_t pos = 0;
    int sign = 1;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') sign = -1;
        ++pos;
    }
    if (pos == text.size()) throw std::invalid_argument("BigInt::from_string: empty number");
    BigInt result;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("BigInt::from_string: bad digit in '" + std::string(text) + "'");
        result *= BigInt(10);
        result += BigInt(c - '0');
    }
    if (sign < 0) result = -result;
    return result;
}

bool BigInt::fits_int64() const {
    if (limbs_.size() > 2) return false;
    if (limbs_.size() < 2) return true;
    std::uint64_t mag = (static_cast<std::uint64_t>(limbs_[1]) << 32) | limbs_[0];
    if (sign_ > 0) return mag <= 0x7fffffffffffffffull;
    return mag <= 0x8000000000000000ull;
}

long long BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt::to_int64: value " + to_string() + " out of range");
    std::uint64_t mag = 0;
    if (limbs_.size() >= 1) mag = limbs_[0];
    if (limbs_.size() == 2) mag |= static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (sign_ < 0) return static_cast<long long>(~mag + 1);
    return static_cast<long long>(mag);
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    // repeated division by 10^9
    std::vector<std::uint32_t> work = limbs_;
    std::string digits;
    while (!work.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<std::uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        for (int d = 0; d < 9; ++d) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (sign_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigInt BigInt::abs() const {
    BigInt result = *this;
    if (result.sign_ < 0) result.sign_ = 1;
    return result;
}

BigInt BigInt::operator-() const {
    BigInt result = *this;
    result.sign_ = -result.sign_;
    return result;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

int BigInt::compare_magnitude(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    const auto& longer = a.size() >= b.size() ? a : b;
    const auto& shorter = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> out;
    out.reserve(longer.size() + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < longer.size(); ++i) {
        std::uint64_t sum = carry + longer[i] + (i < shorter.size() ? shorter[i] : 0);
        out.push_back(static_cast<std::uint32_t>(sum & 0xffffffffu));
        carry = sum >> 32;
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
        std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (diff < 0) {
            diff += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<std::uint32_t>(diff));
    }
    return out;
}

std::vector<std::uint32_t> BigInt::mul_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = a[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = out[i + j] + ai * b[j] + carry;
            out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t pos = i + b.size();
        while (carry) {
            std::uint64_t cur = out[pos] + carry;
            out[pos] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++pos;
        }
    }
    return out;
}

// Knuth Algorithm D with 32-bit limbs.
void BigInt::divmod_magnitude(const std::vector<std::uint32_t>& a,
                              const std::vector<std::uint32_t>& b,
                              std::vector<std::uint32_t>& quotient,
                              std::vector<std::uint32_t>& remainder) {
    quotient.clear();
    remainder.clear();
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    if (a.size() < b.size()) {
        remainder = a;
        return;
    }
    if (b.size() == 1) {
        std::uint64_t d = b[0];
        quotient.assign(a.size(), 0);
        std::uint64_t rem = 0;
        for (std::size_t i = a.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | a[i];
            quotient[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!quotient.empty() && quotient.back() == 0) quotient.pop_back();
        if (rem) remainder.push_back(static_cast<std::uint32_t>(rem));
        return;
    }

    // normalize so the top divisor limb has its high bit set
    int shift = 0;
    for (std::uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++shift;
    const std::size_t n = b.size();
    const std::size_t m = a.size() - n;

    auto shifted_left = [shift](const std::vector<std::uint32_t>& src, bool extra_limb) {
        std::vector<std::uint32_t> dst(src.size() + (extra_limb ? 1 : 0), 0);
        for (std::size_t i = 0; i < src.size(); ++i) {
            dst[i] |= src[i] << shift;
            if (shift && i + 1 < dst.size()) dst[i + 1] = src[i] >> (32 - shift);
        }
        return dst;
    };
    std::vector<std::uint32_t> u = shifted_left(a, true);
    std::vector<std::uint32_t> v = shifted_left(b, false);
    if (v.size() > n) v.resize(n);

    quotient.assign(m + 1, 0);
    const std::uint64_t vtop = v[n - 1];
    const std::uint64_t vnext = v[n - 2];
    for (std::size_t j = m + 1; j-- > 0;) {
        std::uint64_t numer = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        std::uint64_t qhat = numer / vtop;
        std::uint64_t rhat = numer % vtop;
        while (qhat >= kBase || qhat * vnext > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += vtop;
            if (rhat >= kBase) break;
        }
        // multiply-subtract
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t prod = qhat * v[i] + carry;
            carry = prod >> 32;
            std::int64_t diff = static_cast<std::int64_t>(u[i + j]) - static_cast<std::int64_t>(prod & 0xffffffffu) - borrow;
            if (diff < 0) {
                diff += static_cast<std::int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<std::uint32_t>(diff);
        }
        std::int64_t diff = static_cast<std::int64_t>(u[j + n]) - static_cast<std::int64_t>(carry) - borrow;
        if (diff < 0) {
            // qhat was one too large: add back
            diff += static_cast<std::int64_t>(kBase);
            --qhat;
            std::uint64_t c2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t sum = static_cast<std::uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<std::uint32_t>(sum & 0xffffffffu);
                c2 = sum >> 32;
            }
            diff += static_cast<std::int64_t>(c2);
            diff &= 0xffffffffll;
        }
        u[j + n] = static_cast<std::uint32_t>(diff);
        quotient[j] = static_cast<std::uint32_t>(qhat);
    }
    while (!quotient.empty() && quotient.back() == 0) quotient.pop_back();
    // denormalize remainder
    remainder.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        remainder[i] = u[i] >> shift;
        if (shift && i + 1 < u.size()) remainder[i] |= u[i + 1] << (32 - shift);
    }
    while (!remainder.empty() && remainder.back() == 0) remainder.pop_back();
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    if (rhs.sign_ == 0) return *this;
    if (sign_ == 0) return *this = rhs;
    if (sign_ == rhs.sign_) {
        limbs_ = add_magnitude(limbs_, rhs.limbs_);
        return *this;
    }
    int cmp = compare_magnitude(*this, rhs);
    if (cmp == 0) return *this = BigInt();
    if (cmp > 0) {
        limbs_ = sub_magnitude(limbs_, rhs.limbs_);
    } else {
        limbs_ = sub_magnitude(rhs.limbs_, limbs_);
        sign_ = rhs.sign_;
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) { return *this += -rhs; }

BigInt& BigInt::operator*=(const BigInt& rhs) {
    if (sign_ == 0 || rhs.sign_ == 0) return *this = BigInt();
    limbs_ = mul_magnitude(limbs_, rhs.limbs_);
    sign_ *= rhs.sign_;
    trim();
    return *this;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& quotient, BigInt& remainder) {
    std::vector<std::uint32_t> q, r;
    divmod_magnitude(a.limbs_, b.limbs_, q, r);
    quotient.limbs_ = std::move(q);
    quotient.sign_ = quotient.limbs_.empty() ? 0 : a.sign_ * b.sign_;
    remainder.limbs_ = std::move(r);
    remainder.sign_ = remainder.limbs_.empty() ? 0 : a.sign_;
}

BigInt& BigInt::operator/=(const BigInt& rhs) {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    return *this = std::move(q);
}

BigInt& BigInt::operator%=(const BigInt& rhs) {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    return *this = std::move(r);
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.sign_ = a.limbs_.empty() ? 0 : 1;
    b.sign_ = b.limbs_.empty() ? 0 : 1;
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt BigInt::pow(BigInt base, unsigned long long exponent) {
    BigInt result(1);
    while (exponent) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return result;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    int cmp = BigInt::compare_magnitude(a, b) * (a.sign_ < 0 ? -1 : 1);
    return cmp <=> 0;
}

std::ostream& operator<<(std::ostream& os, const BigInt& value) { return os << value.to_string(); }

}  // namespace gsp4
