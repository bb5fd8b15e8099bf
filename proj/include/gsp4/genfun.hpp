#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gsp4/polynomial.hpp"
#include "gsp4/repr_type.hpp"

namespace gsp4 {

// Rational generating function with integer-coefficient numerator and
// denominator. The denominator constant term is +1, which guarantees that
// the coefficient stream is integral.
struct RationalGeneratingFunction {
    IntPolynomial num;
    IntPolynomial den = IntPolynomial::constant(BigInt(1));

    std::string to_string() const;  // "num / den" as exponent:coefficient pairs
};

struct SeriesExpansion {
    std::vector<BigInt> coefficients;  // indices 0..order
    std::size_t order() const { return coefficients.size() - 1; }
};

// Expands num/den to the given truncation order using the denominator-driven
// linear recurrence. Requires the denominator constant term to be a unit.
SeriesExpansion expand(const RationalGeneratingFunction& gf, std::size_t order);

BigInt coefficient(const RationalGeneratingFunction& gf, std::size_t k);

RationalGeneratingFunction rgf_add(const RationalGeneratingFunction& a,
                                   const RationalGeneratingFunction& b);

// The generating function of sum_k s_k(p, omega) t^k, assembled exactly from
// the displayed rational expressions. Covered pairs: all primes for I and IIb;
// p = 2, 3 and p >= 5 for the remaining counted types. Throws
// std::invalid_argument for uncovered pairs and forced-zero types.
RationalGeneratingFunction gf_catalog(long long p, const ReprType& omega);

}  // namespace gsp4
