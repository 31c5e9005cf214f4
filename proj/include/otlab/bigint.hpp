// bigint.hpp
//
// Arbitrary-precision signed integers on 32-bit limbs. Big enough and fast
// enough for binomial rows C(16382, k) and dyadic probability arithmetic;
// schoolbook multiplication and Knuth-D division throughout.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace otlab {

class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    BigInt(unsigned long long v);
    BigInt(long v) : BigInt(static_cast<long long>(v)) {}
    BigInt(unsigned long v) : BigInt(static_cast<unsigned long long>(v)) {}
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}
    BigInt(unsigned v) : BigInt(static_cast<unsigned long long>(v)) {}

    // Decimal string with optional leading '-'. Throws std::invalid_argument.
    static BigInt from_string(std::string_view dec);
    static BigInt pow2(unsigned bits);

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_one() const;
    bool is_negative() const { return sign_ < 0; }
    // true iff |x| is a power of two (x != 0)
    bool is_pow2() const;

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);
    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    // Truncated division (C++ semantics: remainder has the dividend's sign).
    // Throws std::domain_error on zero divisor.
    static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);
    friend BigInt operator/(const BigInt& a, const BigInt& b) { return divmod(a, b).first; }
    friend BigInt operator%(const BigInt& a, const BigInt& b) { return divmod(a, b).second; }

    BigInt operator<<(unsigned bits) const;
    BigInt operator>>(unsigned bits) const;  // arithmetic on magnitude, sign kept

    std::strong_ordering operator<=>(const BigInt& o) const;
    bool operator==(const BigInt& o) const;

    static BigInt gcd(BigInt a, BigInt b);  // binary gcd, result >= 0

    // bits in |x|; 0 for x == 0
    std::size_t bit_length() const;
    // trailing zero bits of |x|; 0 for x == 0
    std::size_t trailing_zero_bits() const;

    bool fits_int64() const;
    std::int64_t to_int64() const;  // throws std::overflow_error if it does not fit
    double to_double() const;       // rounded; +/-inf on overflow

    std::string to_string() const;

    // |this| composed with a small factor/divisor; used by the hot paths.
    BigInt mul_small(std::uint32_t f) const;
    // divides |this| by d, returns remainder; requires d != 0
    std::uint32_t divmod_small_inplace(std::uint32_t d);

private:
    // |value| = sum limbs_[i] * 2^(32 i); no trailing zero limbs; sign_ == 0 iff empty
    int sign_ = 0;
    std::vector<std::uint32_t> limbs_;

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static void add_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static void sub_mag(std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& v,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
    static void shl_mag(std::vector<std::uint32_t>& a, unsigned bits);
    static void shr_mag(std::vector<std::uint32_t>& a, unsigned bits);
};

BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace otlab
