#include "gsp4/periodic.hpp"

#include <stdexcept>

namespace gsp4 {

PeriodicSequence::PeriodicSequence(std::vector<AffineCoeff> entries)
    : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("PeriodicSequence: empty entry list");
}

long long PeriodicSequence::operator()(long long k) const {
    if (k < 1) throw std::invalid_argument("PeriodicSequence: weight k must be >= 1");
    const AffineCoeff& e = entries_[static_cast<std::size_t>(k % static_cast<long long>(entries_.size()))];
    return e.alpha * k + e.beta;
}

int kronecker_delta(long long k, long long n) { return k == n ? 1 : 0; }

bool is_prime(long long n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (long long d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

long long prime_power_base(long long q) {
    if (q < 2) return 0;
    for (long long p = 2; p * p <= q; ++p) {
        if (q % p != 0) continue;
        long long rest = q;
        while (rest % p == 0) rest /= p;
        return rest == 1 ? p : 0;
    }
    return q;  // q itself is prime
}

int symbol_minus_one(long long p) {
    if (!is_prime(p)) throw std::invalid_argument("symbol_minus_one: p must be prime");
    if (p == 2) return 0;
    return p % 4 == 1 ? 1 : -1;
}

int symbol_minus_three(long long p) {
    if (!is_prime(p)) throw std::invalid_argument("symbol_minus_three: p must be prime");
    if (p == 3) return 0;
    return p % 3 == 1 ? 1 : -1;
}

const std::map<std::string, PeriodicSequence>& sequence_catalog() {
    // Transcribed entry-for-entry from the displayed bracket definitions.
    // Constant brackets have alpha = 0 everywhere.
    static const std::map<std::string, PeriodicSequence> catalog = {
        {"f4", PeriodicSequence({{1, -2}, {-1, 1}, {-1, 2}, {1, -1}})},
        {"f6", PeriodicSequence({{1, -3}, {-2, 2}, {-2, 4}, {1, 0}, {1, -1}, {1, -2}})},
        {"c3", PeriodicSequence({{0, 1}, {0, -1}, {0, 0}})},
        {"c3hat", PeriodicSequence({{0, 0}, {0, 1}, {0, -1}})},
        {"c4", PeriodicSequence({{0, 1}, {0, 0}, {0, 0}, {0, -1}})},
        {"c4prime", PeriodicSequence({{0, 1}, {0, -1}, {0, -1}, {0, 1}})},
        {"c5", PeriodicSequence({{0, 1}, {0, 0}, {0, 0}, {0, -1}, {0, 0}})},
        {"c6", PeriodicSequence({{0, 1}, {0, 0}, {0, 0}, {0, -1}, {0, 0}, {0, 0}})},
        {"c6prime", PeriodicSequence({{0, 0}, {0, 1}, {0, 0}, {0, 0}, {0, -1}, {0, 0}})},
        {"c6hat", PeriodicSequence({{0, 0}, {0, 1}, {0, 1}, {0, 0}, {0, -1}, {0, -1}})},
        {"c12", PeriodicSequence({{0, 1}, {0, 0}, {0, 0}, {0, -1}, {0, -1}, {0, -1},
                                  {0, -1}, {0, 0}, {0, 0}, {0, 1}, {0, 1}, {0, 1}})},
    };
    return catalog;
}

const PeriodicSequence& named_sequence(std::string_view name) {
    const auto& catalog = sequence_catalog();
    auto it = catalog.find(std::string(name));
    if (it == catalog.end())
        throw std::invalid_argument("named_sequence: unknown bracket symbol '" + std::string(name) + "'");
    return it->second;
}

}  // namespace gsp4
