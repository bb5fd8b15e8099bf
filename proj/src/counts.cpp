// Closed-form evaluation and dispatch for the counts s_k(p, omega).
//
// Dispatch policy: k = 1 and forced-zero types give 0; types I and IIb use
// their closed forms for every prime; the Saito-Kurokawa/Yoshida types use
// closed forms for p >= 5 and series coefficients for p = 2, 3; the generic
// types use closed forms for p >= 5 and k >= 3, series coefficients for
// p = 2, 3, and are undetermined at k = 2 for p >= 5.

#include "gsp4/counts.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "gsp4/classnum.hpp"
#include "gsp4/elliptic.hpp"
#include "gsp4/genfun.hpp"
#include "gsp4/periodic.hpp"
#include "gsp4/prime_cases.hpp"

namespace gsp4 {

std::string route_label(Route route) {
    switch (route) {
        case Route::ClosedForm: return "closed-form";
        case Route::Series: return "series";
        case Route::Relation: return "relation";
        case Route::ForcedZero: return "forced-zero";
    }
    return "?";
}

namespace {

struct Brackets {
    const PeriodicSequence& f4 = named_sequence("f4");
    const PeriodicSequence& f6 = named_sequence("f6");
    const PeriodicSequence& c3 = named_sequence("c3");
    const PeriodicSequence& c3hat = named_sequence("c3hat");
    const PeriodicSequence& c4 = named_sequence("c4");
    const PeriodicSequence& c4prime = named_sequence("c4prime");
    const PeriodicSequence& c5 = named_sequence("c5");
    const PeriodicSequence& c6 = named_sequence("c6");
    const PeriodicSequence& c6prime = named_sequence("c6prime");
    const PeriodicSequence& c6hat = named_sequence("c6hat");
    const PeriodicSequence& c12 = named_sequence("c12");
};

const Brackets& brackets() {
    static const Brackets b;
    return b;
}

long long sgn(long long k) { return k % 2 == 0 ? 1 : -1; }  // (-1)^k

BigInt finish(const Rational& value, const std::string& what, long long k, long long p) {
    BigInt n = value.to_integer(what + " at k=" + std::to_string(k) + ", p=" + std::to_string(p));
    if (n.is_negative())
        throw std::domain_error("negative count from " + what + " at k=" + std::to_string(k) +
                                ", p=" + std::to_string(p));
    return n;
}

// ---- Saito-Kurokawa type closed forms, p >= 5 ------------------------------

struct LargePrime {
    long long p;
    long long e1;
    long long e3;
    long long bh;
};

LargePrime large_prime(long long p) {
    const ImaginaryQuadraticData quad = quadratic_data(p);
    return LargePrime{p, symbol_minus_one(p), symbol_minus_three(p),
                      static_cast<long long>(quad.b) * quad.h};
}

BigInt closed_i(long long k, long long p) {
    const Brackets& br = brackets();
    const long long s = sgn(k);
    Rational value = Rational((k - 2) * (k - 1), 17280) * Rational(2 * k - 3) +
                     Rational(7 * s * (k - 2) * (k - 1), 1152) + Rational(5, 48) +
                     Rational(kronecker_delta(k, 3)) - Rational(kronecker_delta(k, 2)) -
                     Rational(47 * (2 * k - 3), 3456) + Rational(61 * s, 128) -
                     Rational(13 * br.c3hat(k), 108) - Rational(br.c3(k), 6) +
                     Rational(br.f4(k), 96) - Rational(br.c4prime(k), 8) +
                     Rational(br.c4(k), 8) + Rational(br.c5(k), 5) +
                     Rational(br.f6(k), 108) + Rational(br.c6hat(k), 12) +
                     Rational(br.c6(k), 9) + Rational(br.c12(k), 12) -
                     Rational((2 * k - 3) * s, 16) - Rational(br.c3hat(k) * s, 6);
    return finish(value, "s_k(p,I) closed form", k, p);
}

BigInt closed_iib(long long k, long long p) {
    if (k % 2 != 0) return BigInt(0);
    const Brackets& br = brackets();
    Rational value = Rational(2 * k - 3, 12) - Rational(3, 4) + Rational(br.c3hat(k), 3) +
                     Rational(kronecker_delta(k, 2));
    return finish(value, "s_k(p,IIb) closed form", k, p);
}

BigInt closed_vb(long long k, const LargePrime& d) {
    if (k % 2 != 0) return BigInt(0);
    const Brackets& br = brackets();
    Rational value = Rational((2 * k - 3) * (d.p - 1), 24) + Rational(1 - d.e1, 8) -
                     Rational(br.c3hat(k) * (1 - d.e3), 6) - Rational(d.bh, 4);
    return finish(value, "s_k(p,Vb) closed form", k, d.p);
}

BigInt closed_vibp(long long k, const LargePrime& d) {
    if (k % 2 != 0) return BigInt(0);
    const Brackets& br = brackets();
    Rational value = Rational((2 * k - 3) * (d.p - 1), 24) + Rational(1 - d.e1, 8) -
                     Rational(br.c3hat(k) * (1 - d.e3), 6) + Rational(d.bh, 4) -
                     Rational(kronecker_delta(k, 2));
    return finish(value, "s_k^(P)(p,VIb) closed form", k, d.p);
}

BigInt closed_vic(long long k, const LargePrime& d) {
    if (k % 2 == 0) return BigInt(0);
    const Brackets& br = brackets();
    Rational value = Rational((2 * k - 3) * (d.p - 1), 24) - Rational(1 - d.e1, 8) -
                     Rational(br.c3hat(k) * (1 - d.e3), 6) - Rational(d.bh, 4);
    return finish(value, "s_k(p,VIc) closed form", k, d.p);
}

BigInt closed_viby(long long k, const LargePrime& d) {
    const Brackets& br = brackets();
    const long long s = sgn(k);
    const Rational cp = yoshida_cp(d.p);
    Rational inner = Rational((2 * k - 3) * (d.p - 1), 12) + Rational(s * (1 - d.e1), 4) -
                     Rational(br.c3hat(k) * (1 - d.e3), 3) - Rational(kronecker_delta(k, 2));
    Rational value = cp * inner +
                     Rational((2 - d.bh) * kronecker_delta(k, 2), 4) +
                     Rational(s * (d.bh * d.bh - 2 * d.bh), 8);
    return finish(value, "s_k^(Y)(p,VIb) closed form", k, d.p);
}

// ---- generic type closed forms, p >= 5, k >= 3 -----------------------------

BigInt closed_iia(long long k, const LargePrime& d) {
    const Brackets& br = brackets();
    const long long p = d.p, e1 = d.e1, e3 = d.e3, s = sgn(k);
    Rational value =
        Rational(p * p - 1, 17280) * Rational((k - 2) * (k - 1) * (2 * k - 3)) +
        Rational(-4 * e3 - 3 * e1 + p - 3, 24) + Rational(d.bh, 4) -
        Rational(kronecker_delta(k, 3)) +
        Rational((16 * (p + 3) * e3 + 9 * (p + 4) * e1 - 84 * p + 119) * (2 * k - 3), 3456) +
        Rational(((16 * e3 - p + 12) * (e1 - 1) + 3 * (p - 49)) * s, 384) +
        Rational(s * (2 * k - 3), 24) +
        Rational(((e3 + 1) * (9 * e1 + p - 6) - 4 * (p - 8)) * br.c3hat(k), 216) +
        Rational(s * br.c3hat(k), 6) -
        Rational(br.c4(k) * case8_iia(p), 4) -
        Rational(br.c5(k) * case5_iia(p), 5);
    return finish(value, "s_k(p,IIa) closed form", k, p);
}

BigInt closed_iiia(long long k, const LargePrime& d) {
    const Brackets& br = brackets();
    const long long p = d.p, e1 = d.e1, e3 = d.e3, s = sgn(k), bh = d.bh;
    Rational value =
        Rational((p - 1) * (p * p + p + 2), 34560) * Rational((k - 2) * (k - 1) * (2 * k - 3)) +
        Rational(3 * e1 - p - 2, 48) - Rational(bh, 8) -
        Rational((bh * bh - 2 * bh) * s, 16) - Rational(kronecker_delta(k, 3)) +
        Rational(7 * (p - 1) * (p + 3) * s, 2304) * Rational((k - 2) * (k - 1)) -
        Rational((p - 1) * (-32 * e3 - 27 * e1 + 12 * p - 97) * (2 * k - 3), 6912) -
        Rational(((32 * e3 - 5 * p - 3) * (9 * e1 - 17) - 40 * (p + 7)) * s, 6912) -
        Rational((p - 1) * s * (2 * k - 3), 24) +
        Rational((1 - e3) * br.c3(k), 6) +
        Rational((p + 5) * (1 - e3) * br.c3hat(k), 108) +
        Rational((1 - e3) * br.c3hat(k) * s, 12) +
        Rational(((p + 1) * e1 + p - 3) * br.f4(k), 192) +
        Rational((1 - e1) * br.c4prime(k), 8) +
        Rational(((p + 1) * e3 + p - 3) * br.f6(k), 216) +
        Rational(2 * (e3 - 2) * br.c6(k), 27) +
        Rational((5 * e3 - 13) * br.c6hat(k), 108) +
        Rational(2 * (e3 + 1) * br.c6prime(k), 27) +
        Rational(((e3 + 1) * (e1 + 1) - 4) * br.c12(k), 24) -
        Rational(br.c4(k) * case8_p7(p), 4) -
        Rational(br.c5(k) * case5_iiia(p), 5);
    return finish(value, "s_k(p,IIIa+VIa/b) closed form", k, p);
}

BigInt closed_iva(long long k, const LargePrime& d) {
    const Brackets& br = brackets();
    const long long p = d.p, e1 = d.e1, e3 = d.e3, s = sgn(k);
    Rational value =
        Rational(p - 1, 17280) * Rational(p * p * p - 1) *
            Rational((k - 2) * (k - 1) * (2 * k - 3)) +
        Rational(7 * (p - 1) * (p - 1) * s, 1152) * Rational((k - 2) * (k - 1)) +
        Rational(kronecker_delta(k, 3)) +
        Rational((p - 1) * (16 * e3 + 9 * e1 - 25) * (2 * k - 3), 3456) +
        Rational((e3 - 1) * (9 * e1 + p - 10) * br.c3hat(k), 216) +
        Rational(((16 * e3 - p - 15) * (9 * e1 - 25) - 16 * (p + 31)) * s, 3456) +
        Rational((e1 - 1) * (p - 1) * br.f4(k), 96) +
        Rational((e3 - 1) * (p - 1) * br.f6(k), 108) -
        Rational(4 * (e3 - 2) * br.c6(k), 27) +
        Rational(2 * (e3 + 1) * br.c6hat(k), 27) -
        Rational(4 * (e3 + 1) * br.c6prime(k), 27) +
        Rational((e3 - 1) * (e1 - 1) * br.c12(k), 12) +
        Rational(br.c4(k) * case8_p7(p), 2) +
        Rational(br.c5(k) * case5_iva(p), 5);
    return finish(value, "s_k(p,IVa) closed form", k, p);
}

BigInt closed_va(long long k, const LargePrime& d) {
    const Brackets& br = brackets();
    const long long p = d.p, e1 = d.e1, e3 = d.e3, s = sgn(k), bh = d.bh;
    Rational value =
        Rational(p * (p - 1) * (p - 1), 34560) * Rational((k - 2) * (k - 1) * (2 * k - 3)) +
        Rational(1 - e1, 16) - Rational(bh, 8) + Rational((bh * bh - 2 * bh) * s, 16) -
        Rational(7 * (p - 1) * (p - 1) * s, 2304) * Rational((k - 2) * (k - 1)) +
        Rational((p - 1) * (2 * k - 3) * s, 48) -
        Rational((1 - e3) * br.c3hat(k) * s, 12) -
        Rational((p - 1) * (-32 * e3 - 27 * e1 + 12 * p - 97) * (2 * k - 3), 6912) -
        Rational((p - 4) * (e3 - 1) * br.c3hat(k), 108) +
        Rational(((32 * e3 - 5 * p - 3) * (-9 * e1 + 1) - 40 * (p + 7)) * s, 6912) -
        Rational((p - 1) * (e1 - 1) * br.f4(k), 192) -
        Rational((p - 1) * (e3 - 1) * br.f6(k), 216) +
        Rational(2 * (2 * e3 - 1) * br.c6(k), 27) +
        Rational((e3 + 1) * br.c6hat(k), 27) -
        Rational(2 * (e3 + 1) * br.c6prime(k), 27) -
        Rational((e3 - 1) * (e1 - 1) * br.c12(k), 24) -
        Rational(br.c4(k) * case8_p7(p), 4) +
        Rational(br.c5(k) * case5_va(p), 5);
    return finish(value, "s_k(p,Va) closed form", k, p);
}

// ---- series route with a per-(p, type) expansion cache ---------------------

BigInt series_coefficient(long long k, long long p, const ReprType& omega) {
    static std::map<std::pair<long long, int>, SeriesExpansion> cache;
    static std::mutex cache_mutex;
    const auto key = std::make_pair(p, static_cast<int>(omega.kind()));
    const auto want = static_cast<std::size_t>(k);
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it == cache.end() || it->second.order() < want) {
        std::size_t order = std::max<std::size_t>(want, 256);
        if (it != cache.end()) order = std::max(order, 2 * it->second.order());
        SeriesExpansion expansion = expand(gf_catalog(p, omega), order);
        it = cache.insert_or_assign(key, std::move(expansion)).first;
    }
    BigInt value = it->second.coefficients[want];
    if (value.is_negative())
        throw std::domain_error("negative series coefficient for s_k(p," + omega.label() +
                                ") at k=" + std::to_string(k) + ", p=" + std::to_string(p));
    return value;
}

void validate_inputs(long long k, long long p, const char* who) {
    if (k < 1) throw std::invalid_argument(std::string(who) + ": weight k must be >= 1");
    if (!is_prime(p)) throw std::invalid_argument(std::string(who) + ": p must be prime");
}

}  // namespace

Rational yoshida_cp(long long p) {
    if (p < 5 || !is_prime(p)) throw std::invalid_argument("yoshida_cp: p must be a prime >= 5");
    return Rational(p - 1, 24) + Rational(1 - symbol_minus_one(p), 8) +
           Rational(1 - symbol_minus_three(p), 6) - Rational(1, 2);
}

CountResult count(long long k, long long p, const ReprType& omega) {
    validate_inputs(k, p, "count");
    CountResult result;
    result.k = k;
    result.p = p;
    result.omega = omega;

    if (omega.is_zero_type() || k == 1) {
        result.value = BigInt(0);
        result.route = Route::ForcedZero;
        return result;
    }

    switch (omega.kind()) {
        case ReprType::Kind::I:
            result.value = closed_i(k, p);
            result.route = Route::ClosedForm;
            return result;
        case ReprType::Kind::IIb:
            result.value = closed_iib(k, p);
            result.route = Route::ClosedForm;
            return result;
        case ReprType::Kind::Vb:
        case ReprType::Kind::VIbP:
        case ReprType::Kind::VIc:
        case ReprType::Kind::VIbY: {
            if (p <= 3) {
                result.value = series_coefficient(k, p, omega);
                result.route = Route::Series;
                return result;
            }
            const LargePrime d = large_prime(p);
            switch (omega.kind()) {
                case ReprType::Kind::Vb: result.value = closed_vb(k, d); break;
                case ReprType::Kind::VIbP: result.value = closed_vibp(k, d); break;
                case ReprType::Kind::VIc: result.value = closed_vic(k, d); break;
                default: result.value = closed_viby(k, d); break;
            }
            result.route = Route::ClosedForm;
            return result;
        }
        case ReprType::Kind::IIa:
        case ReprType::Kind::IIIaVIab:
        case ReprType::Kind::IVa:
        case ReprType::Kind::Va: {
            if (p <= 3) {
                result.value = series_coefficient(k, p, omega);
                result.route = Route::Series;
                return result;
            }
            result.route = Route::ClosedForm;
            if (k == 2) return result;  // undetermined: value stays empty
            const LargePrime d = large_prime(p);
            switch (omega.kind()) {
                case ReprType::Kind::IIa: result.value = closed_iia(k, d); break;
                case ReprType::Kind::IIIaVIab: result.value = closed_iiia(k, d); break;
                case ReprType::Kind::IVa: result.value = closed_iva(k, d); break;
                default: result.value = closed_va(k, d); break;
            }
            return result;
        }
        default:
            throw std::invalid_argument("count: unsupported type " + omega.label());
    }
}

BigInt count_value(long long k, long long p, const ReprType& omega) {
    CountResult result = count(k, p, omega);
    if (result.is_unknown())
        throw std::invalid_argument("count_value: s_k(p," + omega.label() + ") is unknown at k=" +
                                    std::to_string(k) + ", p=" + std::to_string(p));
    return *result.value;
}

BigInt count_via_relation(long long k, long long p, const ReprType& omega) {
    validate_inputs(k, p, "count_via_relation");
    if (k < 2) throw std::invalid_argument("count_via_relation: requires k >= 2");
    const long long m = 2 * k - 2;  // elliptic weight
    switch (omega.kind()) {
        case ReprType::Kind::Vb:
            return BigInt(k % 2 == 0 ? dim_new_pm(m, p, -1) : 0);
        case ReprType::Kind::VIbP:
            return BigInt(k % 2 == 0 ? dim_new_pm(m, p, +1) : 0);
        case ReprType::Kind::VIc:
            return BigInt(k % 2 == 0 ? 0 : dim_new_pm(m, p, -1));
        case ReprType::Kind::VIbY: {
            const long long plus2 = dim_new_pm(2, p, +1);
            const long long minus2 = dim_new_pm(2, p, -1);
            if (k % 2 == 0)
                return BigInt(dim_new_pm(m, p, +1) * plus2 + dim_new_pm(m, p, -1) * minus2);
            return BigInt(dim_new_pm(m, p, -1) * plus2 + dim_new_pm(m, p, +1) * minus2);
        }
        default:
            throw std::invalid_argument("count_via_relation: no lifting relation for type " +
                                        omega.label());
    }
}

std::vector<std::vector<CountResult>> count_table(const ReprType& omega,
                                                  const std::vector<long long>& primes,
                                                  const std::vector<long long>& weights) {
    std::vector<std::vector<CountResult>> table;
    table.reserve(primes.size());
    for (long long p : primes) {
        std::vector<CountResult> row;
        row.reserve(weights.size());
        for (long long k : weights) row.push_back(count(k, p, omega));
        table.push_back(std::move(row));
    }
    return table;
}

}  // namespace gsp4
