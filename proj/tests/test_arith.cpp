#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>

#include "gsp4/bigint.hpp"
#include "gsp4/periodic.hpp"
#include "gsp4/rational.hpp"

using gsp4::BigInt;
using gsp4::Rational;

namespace {

// deterministic xorshift generator for property tests
struct Rng {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    long long next_i64() { return static_cast<long long>(next() >> 2) - (1ll << 61); }
    long long next_small(long long bound) {
        long long v = static_cast<long long>(next() % (2 * bound + 1)) - bound;
        return v;
    }
};

}  // namespace

TEST_CASE("BigInt matches 64-bit arithmetic on random operands") {
    Rng rng;
    for (int i = 0; i < 2000; ++i) {
        long long a = rng.next_small(1ll << 30);
        long long b = rng.next_small(1ll << 30);
        BigInt A(a), B(b);
        CHECK((A + B).to_int64() == a + b);
        CHECK((A - B).to_int64() == a - b);
        CHECK((A * B).to_int64() == a * b);
        if (b != 0) {
            CHECK((A / B).to_int64() == a / b);
            CHECK((A % B).to_int64() == a % b);
        }
    }
}

TEST_CASE("BigInt multi-limb division satisfies a = q*b + r with |r| < |b|") {
    Rng rng;
    for (int i = 0; i < 500; ++i) {
        BigInt a = BigInt(rng.next_i64()) * BigInt(rng.next_i64()) + BigInt(rng.next_i64());
        BigInt b = BigInt(rng.next_i64() | 1);
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        if (!r.is_zero()) CHECK(r.sign() == a.sign());
    }
}

TEST_CASE("BigInt decimal round trip") {
    Rng rng;
    for (int i = 0; i < 200; ++i) {
        BigInt a = BigInt(rng.next_i64()) * BigInt(rng.next_i64()) * BigInt(rng.next_i64());
        CHECK(BigInt::from_string(a.to_string()) == a);
    }
    CHECK(BigInt::from_string("-0").to_string() == "0");
    CHECK(BigInt(0).to_string() == "0");
    CHECK(BigInt::pow(BigInt(10), 30).to_string() == "1000000000000000000000000000000");
}

TEST_CASE("bracket symbol evaluation matches the displayed examples") {
    const auto& c3 = gsp4::named_sequence("c3");
    const auto& f4 = gsp4::named_sequence("f4");
    const auto& c12 = gsp4::named_sequence("c12");
    CHECK(c3(7) == -1);    // 7 mod 3 = 1, entry -1
    CHECK(f4(5) == -4);    // 5 mod 4 = 1, entry -k+1
    CHECK(c12(14) == 0);   // 14 mod 12 = 2, entry 0
    CHECK_THROWS_AS(c3(0), std::invalid_argument);
}

TEST_CASE("constant brackets are periodic; f-brackets are not constant") {
    for (const auto& [name, seq] : gsp4::sequence_catalog()) {
        bool constant = true;
        for (const auto& entry : seq.entries()) constant = constant && entry.alpha == 0;
        if (!constant) continue;  // f4, f6
        const long long n = static_cast<long long>(seq.modulus());
        for (long long k = 1; k <= 1000; ++k) CHECK(seq(k) == seq(k + n));
    }
    CHECK(gsp4::named_sequence("f4").entries()[0].alpha == 1);
    CHECK(gsp4::named_sequence("f6").entries()[1].alpha == -2);
}

TEST_CASE("c3 + c3hat collapses to the bracket [1,0,-1;3]") {
    const auto& c3 = gsp4::named_sequence("c3");
    const auto& c3hat = gsp4::named_sequence("c3hat");
    const gsp4::PeriodicSequence direct({{0, 1}, {0, 0}, {0, -1}});
    for (long long k = 1; k <= 1000; ++k) {
        const long long sum = c3(k) + c3hat(k);
        CHECK(sum >= -1);
        CHECK(sum <= 2);
        CHECK(sum == direct(k));
    }
}

TEST_CASE("Kronecker delta") {
    CHECK(gsp4::kronecker_delta(2, 2) == 1);
    CHECK(gsp4::kronecker_delta(3, 2) == 0);
    CHECK(gsp4::kronecker_delta(35, 35) == 1);
}

TEST_CASE("modified quadratic symbols") {
    CHECK(gsp4::symbol_minus_one(2) == 0);
    CHECK(gsp4::symbol_minus_one(7) == -1);
    CHECK(gsp4::symbol_minus_three(5) == -1);
    CHECK(gsp4::symbol_minus_three(3) == 0);
    CHECK_THROWS_AS(gsp4::symbol_minus_one(9), std::invalid_argument);
    CHECK_THROWS_AS(gsp4::symbol_minus_three(1), std::invalid_argument);
    for (long long p = 2; p < 10000; ++p) {
        if (!gsp4::is_prime(p)) continue;
        const int e1 = gsp4::symbol_minus_one(p);
        const int e3 = gsp4::symbol_minus_three(p);
        CHECK(e1 * e1 <= 1);
        CHECK((e1 == 0) == (p == 2));
        CHECK((e3 == 0) == (p == 3));
    }
}

TEST_CASE("rational arithmetic is exact, associative and commutative") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(7, 1).to_integer("x").to_int64() == 7);
    CHECK_THROWS_AS(Rational(7, 2).to_integer("s_k test value"), std::domain_error);
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);

    Rng rng;
    for (int i = 0; i < 500; ++i) {
        Rational a(rng.next_small(1000), 1 + (rng.next() % 60));
        Rational b(rng.next_small(1000), 1 + (rng.next() % 60));
        Rational c(rng.next_small(1000), 1 + (rng.next() % 60));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("prime power detection") {
    CHECK(gsp4::prime_power_base(2) == 2);
    CHECK(gsp4::prime_power_base(49) == 7);
    CHECK(gsp4::prime_power_base(121) == 11);
    CHECK(gsp4::prime_power_base(12) == 0);
    CHECK(gsp4::prime_power_base(1) == 0);
}
