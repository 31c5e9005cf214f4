// test_bigint.cpp
//
// Differential tests of the limb arithmetic against native __int128 on random
// inputs, plus the big-operand paths (decimal round-trips, shifts, gcd).

#include <random>
#include <stdexcept>
#include <limits>

#include "doctest.h"
#include "otlab/bigint.hpp"

using otlab::BigInt;

namespace {

std::int64_t rnd64(std::mt19937_64& rng, int bits) {
    std::uint64_t raw = rng() & ((bits >= 64) ? ~0ull : ((1ull << bits) - 1));
    return (rng() & 1) ? -static_cast<std::int64_t>(raw >> 1)
                       : static_cast<std::int64_t>(raw >> 1);
}

}  // namespace

TEST_CASE("bigint small-value semantics match int128") {
    std::mt19937_64 rng(12345);
    for (int iter = 0; iter < 20000; ++iter) {
        std::int64_t a = rnd64(rng, 62), b = rnd64(rng, 62);
        BigInt A(a), B(b);
        CHECK((A + B).to_string() == std::to_string(a + b));
        CHECK((A - B).to_string() == std::to_string(a - b));
        __int128 p = static_cast<__int128>(a) * b;
        BigInt P = A * B;
        // render the int128 product
        bool neg = p < 0;
        unsigned __int128 up = neg ? -static_cast<unsigned __int128>(p)
                                   : static_cast<unsigned __int128>(p);
        std::string s;
        if (up == 0) s = "0";
        while (up) {
            s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(up % 10)));
            up /= 10;
        }
        if (neg && s != "0") s.insert(s.begin(), '-');
        CHECK(P.to_string() == s);
        if (b != 0) {
            auto [q, r] = BigInt::divmod(A, B);
            CHECK(q.to_string() == std::to_string(a / b));
            CHECK(r.to_string() == std::to_string(a % b));
        }
        CHECK((A <=> B) == (a <=> b));
    }
}

TEST_CASE("bigint decimal round trip") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 200; ++iter) {
        std::string s;
        if (rng() & 1) s += '-';
        int len = 1 + static_cast<int>(rng() % 120);
        s += static_cast<char>('1' + rng() % 9);
        for (int i = 1; i < len; ++i) s += static_cast<char>('0' + rng() % 10);
        CHECK(BigInt::from_string(s).to_string() == s);
    }
    CHECK(BigInt::from_string("0").to_string() == "0");
    CHECK(BigInt::from_string("-0").to_string() == "0");
    CHECK_THROWS_AS(BigInt::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(BigInt::from_string("12x4"), std::invalid_argument);
}

TEST_CASE("bigint divmod reconstructs the dividend on large operands") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 400; ++iter) {
        // random big a, smaller b
        auto big = [&](int limbs) {
            BigInt x(0);
            for (int i = 0; i < limbs; ++i) x = (x << 32) + BigInt(static_cast<unsigned long long>(rng() & 0xffffffffull));
            return (rng() & 1) ? -x : x;
        };
        BigInt a = big(1 + static_cast<int>(rng() % 12));
        BigInt b = big(1 + static_cast<int>(rng() % 6));
        if (b.is_zero()) continue;
        auto [q, r] = BigInt::divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("bigint shifts agree with powers of two") {
    BigInt one(1);
    for (unsigned k : {0u, 1u, 31u, 32u, 33u, 64u, 100u, 1000u}) {
        CHECK((one << k) == BigInt::pow2(k));
        CHECK(((one << k) >> k) == one);
        CHECK(BigInt::pow2(k).is_pow2());
        CHECK(BigInt::pow2(k).bit_length() == k + 1);
        CHECK(BigInt::pow2(k).trailing_zero_bits() == k);
    }
    CHECK((BigInt(12) >> 2) == BigInt(3));
}

TEST_CASE("bigint gcd") {
    std::mt19937_64 rng(21);
    for (int iter = 0; iter < 4000; ++iter) {
        std::int64_t a = rnd64(rng, 40), b = rnd64(rng, 40);
        std::int64_t g = std::gcd(a, b);
        CHECK(BigInt::gcd(BigInt(a), BigInt(b)) == BigInt(g));
    }
    // dyadic fast path stays exact at size
    BigInt big = BigInt::pow2(16384);
    BigInt odd = BigInt::from_string("123456789123456789123456789");
    CHECK(BigInt::gcd(big, odd * BigInt::pow2(100)) == BigInt::pow2(100));
}

TEST_CASE("bigint to_double") {
    CHECK(BigInt(0).to_double() == 0.0);
    CHECK(BigInt(-5).to_double() == -5.0);
    CHECK(BigInt::pow2(100).to_double() == doctest::Approx(std::ldexp(1.0, 100)).epsilon(1e-15));
    CHECK(BigInt::from_string("123456789012345678901234567890").to_double() ==
          doctest::Approx(1.2345678901234568e29).epsilon(1e-12));
}

TEST_CASE("bigint int64 bounds") {
    BigInt max_v(9223372036854775807ll);
    CHECK(max_v.fits_int64());
    CHECK(max_v.to_int64() == 9223372036854775807ll);
    BigInt min_v = -max_v - BigInt(1);
    CHECK(min_v.fits_int64());
    CHECK(min_v.to_int64() == std::numeric_limits<std::int64_t>::min());
    CHECK(!(max_v + BigInt(1)).fits_int64());
    CHECK(!(min_v - BigInt(1)).fits_int64());
}
