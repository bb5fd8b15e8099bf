#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace gsp4 {

// Arbitrary-precision signed integer. Sign-magnitude representation with
// base 2^32 limbs, little-endian, no leading zero limbs.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long value);
    BigInt(int value) : BigInt(static_cast<long long>(value)) {}

    static BigInt from_string(std::string_view text);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_one() const { return sign_ > 0 && limbs_.size() == 1 && limbs_[0] == 1; }
    int sign() const { return sign_; }

    bool fits_int64() const;
    long long to_int64() const;  // throws std::overflow_error when out of range
    std::string to_string() const;

    BigInt abs() const;
    BigInt operator-() const;

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);
    BigInt& operator/=(const BigInt& rhs);
    BigInt& operator%=(const BigInt& rhs);

    friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
    friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
    friend BigInt operator*(BigInt lhs, const BigInt& rhs) { return lhs *= rhs; }
    friend BigInt operator/(BigInt lhs, const BigInt& rhs) { return lhs /= rhs; }
    friend BigInt operator%(BigInt lhs, const BigInt& rhs) { return lhs %= rhs; }

    // Quotient truncated toward zero, remainder with the sign of the dividend.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& quotient, BigInt& remainder);

    static BigInt gcd(BigInt a, BigInt b);
    static BigInt pow(BigInt base, unsigned long long exponent);

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

    friend std::ostream& operator<<(std::ostream& os, const BigInt& value);

private:
    int sign_ = 0;
    std::vector<std::uint32_t> limbs_;

    void trim();
    static int compare_magnitude(const BigInt& a, const BigInt& b);
    static std::vector<std::uint32_t> add_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
    static void divmod_magnitude(const std::vector<std::uint32_t>& a,
                                 const std::vector<std::uint32_t>& b,
                                 std::vector<std::uint32_t>& quotient,
                                 std::vector<std::uint32_t>& remainder);
};

}  // namespace gsp4
