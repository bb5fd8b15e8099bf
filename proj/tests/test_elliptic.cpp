#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gsp4/classnum.hpp"
#include "gsp4/elliptic.hpp"
#include "gsp4/periodic.hpp"

using namespace gsp4;

TEST_CASE("full level dimensions") {
    CHECK(dim_cusp_sl2(12) == 1);   // the discriminant form
    CHECK(dim_cusp_sl2(2) == 0);    // delta_{k,2} correction active
    CHECK(dim_cusp_sl2(11) == 0);   // odd weight
    CHECK(dim_cusp_sl2(16) == 1);
    CHECK(dim_cusp_sl2(26) == 1);
    CHECK(dim_cusp_sl2(24) == 2);
    CHECK_THROWS_AS(dim_cusp_sl2(0), std::invalid_argument);
}

TEST_CASE("Gamma_0(p) dimensions") {
    CHECK(dim_cusp_gamma0(2, 11) == 1);
    CHECK(dim_cusp_gamma0(4, 19) == 4);
    CHECK(dim_cusp_gamma0(2, 5) == 0);
    CHECK(dim_cusp_gamma0(18, 5) == 7);
    CHECK_THROWS_AS(dim_cusp_gamma0(3, 11), std::invalid_argument);
    CHECK_THROWS_AS(dim_cusp_gamma0(4, 15), std::invalid_argument);
}

TEST_CASE("new subspace dimensions") {
    CHECK(dim_new_gamma0(2, 11) == 1);
    CHECK(dim_new_gamma0(4, 19) == 4);
    CHECK(dim_new_gamma0(18, 5) == dim_cusp_gamma0(18, 5) - 2);  // dim S_18(SL2) = 1
}

TEST_CASE("sign-split new subspaces") {
    CHECK(dim_new_pm(2, 11, -1) == 0);
    CHECK(dim_new_pm(2, 11, +1) == 1);
    CHECK(dim_new_pm(4, 19, -1) == 1);
    // p = 2, k = 18: 18 = 2 mod 8, so the half-correction applies; new = 1
    CHECK(dim_new_gamma0(18, 2) == 1);
    CHECK(dim_new_pm(18, 2, +1) == 1);
    CHECK(dim_new_pm(18, 2, -1) == 0);
    // p = 2,3 at weight 2: empty new space
    CHECK(dim_new_pm(2, 2, +1) == 0);
    CHECK(dim_new_pm(2, 3, -1) == 0);
    CHECK_THROWS_AS(dim_new_pm(5, 11, 1), std::invalid_argument);
}

TEST_CASE("plus and minus parts add to the new dimension") {
    for (long long p = 2; p < 100; ++p) {
        if (!is_prime(p)) continue;
        for (long long k = 2; k <= 100; k += 2) {
            const EllipticDims dims = elliptic_dims(k, p);
            CHECK(dims.plus_new + dims.minus_new == dims.new_part);
            CHECK(dims.full >= dims.new_part);
            CHECK(dims.minus_new >= 0);
            CHECK(dims.plus_new >= 0);
        }
    }
}

TEST_CASE("weight 2 minus-space identity for p >= 5") {
    for (long long p = 5; p < 200; ++p) {
        if (!is_prime(p)) continue;
        const auto data = quadratic_data(p);
        const long long hb = static_cast<long long>(data.b) * data.h;
        const long long new2 = dim_new_gamma0(2, p);
        // (new - hb/2 + 1)/2, evaluated exactly: 2*new - hb + 2 must be
        // divisible by 4
        CHECK((2 * new2 - hb + 2) % 4 == 0);
        CHECK(dim_new_pm(2, p, -1) == (2 * new2 - hb + 2) / 4);
    }
}
