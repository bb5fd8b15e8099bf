#include "gsp4/elliptic.hpp"

#include <stdexcept>
#include <string>

#include "gsp4/classnum.hpp"
#include "gsp4/periodic.hpp"
#include "gsp4/rational.hpp"

namespace gsp4 {

namespace {

void require_even_weight(long long k, const char* who) {
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument(std::string(who) + ": weight must be even and >= 2");
}

void require_prime(long long p, const char* who) {
    if (!is_prime(p)) throw std::invalid_argument(std::string(who) + ": level must be prime");
}

long long as_dimension(const Rational& value, const std::string& what) {
    BigInt n = value.to_integer(what);
    if (n.is_negative()) throw std::domain_error("negative dimension from " + what);
    return n.to_int64();
}

int sign_half_k(long long k) { return (k / 2) % 2 == 0 ? 1 : -1; }  // (-1)^(k/2)

}  // namespace

long long dim_cusp_sl2(long long k) {
    if (k < 1) throw std::invalid_argument("dim_cusp_sl2: weight must be >= 1");
    if (k % 2 != 0) return 0;
    const auto& c3 = named_sequence("c3");
    const auto& c3hat = named_sequence("c3hat");
    Rational dim = Rational(k - 1, 12) + Rational(sign_half_k(k), 4) +
                   Rational(c3(k) + c3hat(k), 3) - Rational(1, 2) +
                   Rational(kronecker_delta(k, 2));
    return as_dimension(dim, "dim S_k(SL(2,Z)) at k=" + std::to_string(k));
}

long long dim_cusp_gamma0(long long k, long long p) {
    require_even_weight(k, "dim_cusp_gamma0");
    require_prime(p, "dim_cusp_gamma0");
    const auto& c3 = named_sequence("c3");
    const auto& c3hat = named_sequence("c3hat");
    Rational dim = Rational(k - 1, 12) * Rational(p + 1) +
                   Rational(sign_half_k(k), 4) * Rational(1 + symbol_minus_one(p)) +
                   Rational(c3(k) + c3hat(k), 3) * Rational(1 + symbol_minus_three(p)) -
                   Rational(1) + Rational(kronecker_delta(k, 2));
    return as_dimension(dim, "dim S_k(Gamma_0(p)) at k=" + std::to_string(k) +
                                 ", p=" + std::to_string(p));
}

long long dim_new_gamma0(long long k, long long p) {
    long long value = dim_cusp_gamma0(k, p) - 2 * dim_cusp_sl2(k);
    if (value < 0)
        throw std::domain_error("dim S_k^new(Gamma_0(p)) negative at k=" + std::to_string(k) +
                                ", p=" + std::to_string(p));
    return value;
}

long long dim_new_pm(long long k, long long p, int sign) {
    require_even_weight(k, "dim_new_pm");
    require_prime(p, "dim_new_pm");
    if (sign != 1 && sign != -1) throw std::invalid_argument("dim_new_pm: sign must be +1 or -1");
    // p = 2,3 at weight 2: the new space is empty; both eigenspaces are zero.
    if (p <= 3 && k == 2) return 0;
    Rational half_new(dim_new_gamma0(k, p), 2);
    Rational correction(0);
    if (p >= 5) {
        const ImaginaryQuadraticData data = quadratic_data(p);
        correction = Rational(1, 2) *
                     (Rational(static_cast<long long>(data.b) * data.h, 2) -
                      Rational(kronecker_delta(k, 2)));
    } else if (p == 2) {
        if (k % 8 == 0 || k % 8 == 2) correction = Rational(1, 2);
    } else {  // p == 3
        long long r = k % 12;
        if (r == 0 || r == 2 || r == 6 || r == 8) correction = Rational(1, 2);
    }
    Rational dim = sign > 0 ? half_new + correction : half_new - correction;
    return as_dimension(dim, "dim S_k^{" + std::string(sign > 0 ? "+" : "-") +
                                 ",new}(Gamma_0(p)) at k=" + std::to_string(k) +
                                 ", p=" + std::to_string(p));
}

EllipticDims elliptic_dims(long long k, long long p) {
    EllipticDims dims;
    dims.k = k;
    dims.p = p;
    dims.full = dim_cusp_gamma0(k, p);
    dims.new_part = dim_new_gamma0(k, p);
    dims.plus_new = dim_new_pm(k, p, +1);
    dims.minus_new = dim_new_pm(k, p, -1);
    return dims;
}

}  // namespace gsp4
