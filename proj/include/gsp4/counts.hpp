#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsp4/bigint.hpp"
#include "gsp4/rational.hpp"
#include "gsp4/repr_type.hpp"

namespace gsp4 {

enum class Route { ClosedForm, Series, Relation, ForcedZero };

std::string route_label(Route route);

// s_k(p, omega): the number of cuspidal automorphic representations with the
// prescribed archimedean weight and local type. `value` is empty exactly for
// the undetermined cells (k = 2, p >= 5, generic omega).
struct CountResult {
    long long k = 0;
    long long p = 0;
    ReprType omega = ReprType(ReprType::Kind::I);
    std::optional<BigInt> value;
    Route route = Route::ClosedForm;

    bool is_unknown() const { return !value.has_value(); }
};

CountResult count(long long k, long long p, const ReprType& omega);

// Value of count(), throwing std::invalid_argument on an Unknown cell.
BigInt count_value(long long k, long long p, const ReprType& omega);

// The lifting route: Saito-Kurokawa types through the sign-split elliptic new
// spaces at weight 2k-2, Yoshida through the product of weight-(2k-2) and
// weight-2 factors. Valid for every prime p and k >= 2.
BigInt count_via_relation(long long k, long long p, const ReprType& omega);

// C(p) = (p-1)/24 + (1-(-1/p))/8 + (1-(-3/p))/6 - 1/2, for p >= 5.
Rational yoshida_cp(long long p);

// Elementwise count over a prime list and a weight list; result[i][j] is the
// cell for primes[i], weights[j].
std::vector<std::vector<CountResult>> count_table(const ReprType& omega,
                                                  const std::vector<long long>& primes,
                                                  const std::vector<long long>& weights);

}  // namespace gsp4
