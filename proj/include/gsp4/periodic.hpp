#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace gsp4 {

// One entry of a bracket symbol [t_0,...,t_{n-1}; n]_k. Each entry is affine
// in the weight: value = alpha*k + beta, selected by k mod n (0-based).
struct AffineCoeff {
    long long alpha = 0;
    long long beta = 0;
};

class PeriodicSequence {
public:
    explicit PeriodicSequence(std::vector<AffineCoeff> entries);

    std::size_t modulus() const { return entries_.size(); }
    const std::vector<AffineCoeff>& entries() const { return entries_; }

    // k >= 1; throws std::invalid_argument otherwise.
    long long operator()(long long k) const;

private:
    std::vector<AffineCoeff> entries_;
};

// Kronecker symbol: 1 iff k == n.
int kronecker_delta(long long k, long long n);

bool is_prime(long long n);
// Returns the prime base when q = p^e with e >= 1, and 0 otherwise.
long long prime_power_base(long long q);

// Modified quadratic symbols (not the usual Legendre symbols: the value at the
// ramified prime is 0 by definition).
//   (-1/2) = 0, (-1/p) = 1 for p = 1 mod 4, -1 for p = 3 mod 4
//   (-3/3) = 0, (-3/p) = 1 for p = 1 mod 3, -1 for p = 2 mod 3
// Throw std::invalid_argument for non-prime input.
int symbol_minus_one(long long p);
int symbol_minus_three(long long p);

// The named bracket symbols, transcribed as one static catalog:
//   f4, f6, c3, c3hat, c4, c4prime, c5, c6, c6prime, c6hat, c12
const std::map<std::string, PeriodicSequence>& sequence_catalog();
const PeriodicSequence& named_sequence(std::string_view name);

}  // namespace gsp4
