#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>

#include "gsp4/genfun.hpp"
#include "gsp4/periodic.hpp"

using namespace gsp4;

namespace {

// Independent oracle: coefficients of num/den by naive power-series long
// division over exact rationals (no recurrence, no unit-constant shortcut).
std::vector<Rational> long_division(const IntPolynomial& num, const IntPolynomial& den,
                                    std::size_t order) {
    std::vector<Rational> remainder(order + 1, Rational(0));
    for (std::size_t i = 0; i <= order; ++i) remainder[i] = Rational(num.coefficient(i));
    const Rational lead(den.coefficient(0));
    std::vector<Rational> series(order + 1, Rational(0));
    for (std::size_t k = 0; k <= order; ++k) {
        const Rational c = remainder[k] / lead;
        series[k] = c;
        for (std::size_t j = 0; k + j <= order; ++j) {
            remainder[k + j] -= c * Rational(den.coefficient(j));
        }
    }
    return series;
}

void check_against_long_division(const RationalGeneratingFunction& gf, std::size_t order) {
    const SeriesExpansion fast = expand(gf, order);
    const std::vector<Rational> slow = long_division(gf.num, gf.den, order);
    for (std::size_t k = 0; k <= order; ++k) {
        CHECK(Rational(fast.coefficients[k]) == slow[k]);
    }
}

RationalGeneratingFunction frac(IntPolynomial num, IntPolynomial den) {
    RationalGeneratingFunction gf;
    gf.num = std::move(num);
    gf.den = std::move(den);
    return gf;
}

const std::vector<std::pair<long long, ReprType>>& catalog_keys() {
    static const std::vector<std::pair<long long, ReprType>> keys = [] {
        std::vector<std::pair<long long, ReprType>> out;
        // covers every residue class mod 8 and mod 5 used by the case tables
        for (long long p : {2, 3, 5, 7, 11, 13, 17, 19}) {
            for (const ReprType& type : ReprType::counted_types()) out.push_back({p, type});
        }
        return out;
    }();
    return keys;
}

}  // namespace

TEST_CASE("expand: displayed examples") {
    const IntPolynomial om2 = IntPolynomial::one_minus_power(2);
    const IntPolynomial om6 = IntPolynomial::one_minus_power(6);

    SeriesExpansion geo = expand(frac(IntPolynomial{1}, IntPolynomial{1, -1}), 5);
    for (std::size_t k = 0; k <= 5; ++k) CHECK(geo.coefficients[k] == BigInt(1));

    SeriesExpansion iib = expand(frac(IntPolynomial::monomial(1, 10), om2 * om6), 10);
    for (std::size_t k = 0; k < 10; ++k) CHECK(iib.coefficients[k] == BigInt(0));
    CHECK(iib.coefficients[10] == BigInt(1));

    // t^6/((1-t^2)(1-t^6)): frozen from the long-division oracle
    SeriesExpansion vb3 = expand(frac(IntPolynomial::monomial(1, 6), om2 * om6), 8);
    CHECK(vb3.coefficients[6] == BigInt(1));
    CHECK(vb3.coefficients[7] == BigInt(0));
    CHECK(vb3.coefficients[8] == BigInt(1));
    check_against_long_division(frac(IntPolynomial::monomial(1, 6), om2 * om6), 30);
}

TEST_CASE("expand rejects non-unit denominators") {
    CHECK_THROWS_AS(expand(frac(IntPolynomial{1}, IntPolynomial{2, 1}), 4), std::domain_error);
    CHECK_THROWS_AS(expand(frac(IntPolynomial{1}, IntPolynomial{0, 1}), 4), std::domain_error);
    // -1 constant term is a unit
    SeriesExpansion flipped = expand(frac(IntPolynomial{1}, IntPolynomial{-1, 1}), 3);
    CHECK(flipped.coefficients[0] == BigInt(-1));
    CHECK(flipped.coefficients[1] == BigInt(-1));
}

TEST_CASE("level 1 series: coefficients of the type-I generating function") {
    const RationalGeneratingFunction gf = gf_catalog(2, ReprType(ReprType::Kind::I));
    const SeriesExpansion series = expand(gf, 40);
    CHECK(series.coefficients[10] == BigInt(0));  // weight 10 is exhausted by the lift
    CHECK(series.coefficients[20] == BigInt(1));
    CHECK(series.coefficients[35] == BigInt(1));  // the odd-weight cusp form
    for (std::size_t k = 0; k <= 9; ++k) CHECK(series.coefficients[k] == BigInt(0));
}

TEST_CASE("catalog: displayed small-prime entries") {
    const RationalGeneratingFunction vb3 = gf_catalog(3, ReprType(ReprType::Kind::Vb));
    CHECK(vb3.num == IntPolynomial::monomial(1, 6));
    CHECK(vb3.den == IntPolynomial::one_minus_power(2) * IntPolynomial::one_minus_power(6));

    const RationalGeneratingFunction viby2 = gf_catalog(2, ReprType(ReprType::Kind::VIbY));
    CHECK(viby2.num.is_zero());

    const RationalGeneratingFunction va2 = gf_catalog(2, ReprType(ReprType::Kind::Va));
    // numerator t^15(-t^12+t^2+1)+t^30 = t^15 + t^17 - t^27 + t^30
    CHECK(va2.num.coefficient(15) == BigInt(1));
    CHECK(va2.num.coefficient(17) == BigInt(1));
    CHECK(va2.num.coefficient(27) == BigInt(-1));
    CHECK(va2.num.coefficient(30) == BigInt(1));
    CHECK(va2.num.degree() == 30);
}

TEST_CASE("catalog rejects uncovered pairs") {
    CHECK_THROWS_AS(gf_catalog(4, ReprType(ReprType::Kind::I)), std::invalid_argument);
    CHECK_THROWS_AS(gf_catalog(5, ReprType::zero("IVb")), std::invalid_argument);
}

TEST_CASE("every catalog entry agrees with naive long division through K=60") {
    for (const auto& [p, type] : catalog_keys()) {
        check_against_long_division(gf_catalog(p, type), 60);
    }
}

TEST_CASE("catalog coefficients are non-negative through K=500") {
    for (const auto& [p, type] : catalog_keys()) {
        const SeriesExpansion series = expand(gf_catalog(p, type), 500);
        for (const BigInt& c : series.coefficients) CHECK_FALSE(c.is_negative());
    }
}

TEST_CASE("low-order vanishing: c_0 = c_1 = c_2 = 0 for the small-prime generics") {
    for (long long p : {2, 3}) {
        for (const ReprType& type : ReprType::counted_types()) {
            const SeriesExpansion series = expand(gf_catalog(p, type), 2);
            CHECK(series.coefficients[1] == BigInt(0));
            CHECK(series.coefficients[2] == BigInt(0));
            if (type.is_generic()) CHECK(series.coefficients[0] == BigInt(0));
        }
    }
}

TEST_CASE("rgf_add is linear on catalog pairs") {
    std::uint64_t state = 12345;
    auto next = [&state] {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    const auto& keys = catalog_keys();
    for (int trial = 0; trial < 12; ++trial) {
        const auto& [pa, ta] = keys[next() % keys.size()];
        const auto& [pb, tb] = keys[next() % keys.size()];
        const RationalGeneratingFunction a = gf_catalog(pa, ta);
        const RationalGeneratingFunction b = gf_catalog(pb, tb);
        const SeriesExpansion sum = expand(rgf_add(a, b), 100);
        const SeriesExpansion ea = expand(a, 100);
        const SeriesExpansion eb = expand(b, 100);
        for (std::size_t k = 0; k <= 100; ++k) {
            CHECK(sum.coefficients[k] == ea.coefficients[k] + eb.coefficients[k]);
        }
    }
}
