#include "gsp4/classnum.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "gsp4/periodic.hpp"

namespace gsp4 {

namespace {

void require_prime_ge5(long long p, const char* who) {
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument(std::string(who) + ": p must be a prime >= 5");
}

long long field_discriminant(long long p) { return p % 4 == 3 ? -p : -4 * p; }

// Reduced primitive forms (a,b,c) with b^2 - 4ac = D, |b| <= a <= c,
// gcd(a,b,c) = 1, and b >= 0 whenever |b| = a or a = c.
long long count_reduced_forms(long long D) {
    long long count = 0;
    for (long long a = 1; 3 * a * a <= -D; ++a) {
        for (long long b = -a; b <= a; ++b) {
            long long num = b * b - D;
            if (num % (4 * a) != 0) continue;
            long long c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && (b == -a || a == c)) continue;
            if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
            ++count;
        }
    }
    return count;
}

}  // namespace

long long class_number(long long p) {
    require_prime_ge5(p, "class_number");
    static std::map<long long, long long> memo;
    static std::mutex memo_mutex;
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(p);
        if (it != memo.end()) return it->second;
    }
    long long h = count_reduced_forms(field_discriminant(p));
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(p, h);
    return h;
}

int b_param(long long p) {
    require_prime_ge5(p, "b_param");
    if (p % 4 == 1) return 1;
    if (p % 8 == 7) return 2;
    return 4;  // p = 3 mod 8
}

ImaginaryQuadraticData quadratic_data(long long p) {
    require_prime_ge5(p, "quadratic_data");
    return ImaginaryQuadraticData{p, field_discriminant(p), class_number(p), b_param(p)};
}

}  // namespace gsp4
