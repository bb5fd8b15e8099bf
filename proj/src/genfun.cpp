// Catalog of the generating functions sum_k s_k(p, omega) t^k, transcribed
// from their displayed rational expressions, plus the exact series engine.
//
// Every parametric display (p >= 5) is assembled by exact rational-function
// arithmetic over a product-of-factors denominator with unit constant term.
// The combined numerator must come out with integer coefficients; a
// non-integral coefficient aborts with a diagnostic naming the series, which
// makes the assembly itself a transcription check.

#include "gsp4/genfun.hpp"

#include <stdexcept>
#include <utility>

#include "gsp4/classnum.hpp"
#include "gsp4/periodic.hpp"
#include "gsp4/prime_cases.hpp"

namespace gsp4 {

IntPolynomial to_int_polynomial(const RationalPolynomial& poly, const std::string& what) {
    std::vector<BigInt> out;
    out.reserve(poly.coefficients().size());
    for (std::size_t i = 0; i < poly.coefficients().size(); ++i) {
        out.push_back(poly.coefficients()[i].to_integer(what + " (coefficient of t^" +
                                                        std::to_string(i) + ")"));
    }
    return IntPolynomial(std::move(out));
}

std::string RationalGeneratingFunction::to_string() const {
    return "(" + num.to_string() + ") / (" + den.to_string() + ")";
}

SeriesExpansion expand(const RationalGeneratingFunction& gf, std::size_t order) {
    const BigInt den0 = gf.den.coefficient(0);
    if (!(den0 == BigInt(1) || den0 == BigInt(-1)))
        throw std::domain_error("expand: denominator constant term must be a unit, got " +
                                den0.to_string());
    const bool flip = den0 == BigInt(-1);
    SeriesExpansion series;
    series.coefficients.resize(order + 1);
    const std::size_t den_terms = gf.den.coefficients().size();
    for (std::size_t k = 0; k <= order; ++k) {
        BigInt c = gf.num.coefficient(k);
        if (flip) c = -c;
        for (std::size_t j = 1; j < den_terms && j <= k; ++j) {
            BigInt dj = gf.den.coefficient(j);
            if (dj.is_zero()) continue;
            if (flip) dj = -dj;
            c -= dj * series.coefficients[k - j];
        }
        series.coefficients[k] = std::move(c);
    }
    return series;
}

BigInt coefficient(const RationalGeneratingFunction& gf, std::size_t k) {
    return expand(gf, k).coefficients[k];
}

RationalGeneratingFunction rgf_add(const RationalGeneratingFunction& a,
                                   const RationalGeneratingFunction& b) {
    RationalGeneratingFunction out;
    out.num = a.num * b.den + b.num * a.den;
    out.den = a.den * b.den;
    return out;
}

namespace {

using IP = IntPolynomial;

IP om(std::size_t e) { return IP::one_minus_power(e); }  // 1 - t^e

RationalPolynomial to_rational_poly(const IP& poly) {
    std::vector<Rational> out;
    out.reserve(poly.coefficients().size());
    for (const BigInt& c : poly.coefficients()) out.emplace_back(c);
    return RationalPolynomial(std::move(out));
}

// Sum of terms scale_i * num_i / den_i, combined over the product denominator.
class FracSum {
public:
    void add(Rational scale, IP num, IP den) {
        if (scale.is_zero() || num.is_zero()) return;
        terms_.push_back(Term{std::move(scale), std::move(num), std::move(den)});
    }

    RationalGeneratingFunction finish(std::size_t shift, const std::string& what) const {
        IP den = IP{1};
        for (const Term& t : terms_) den *= t.den;
        RationalPolynomial num;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            IP cofactor{1};
            for (std::size_t j = 0; j < terms_.size(); ++j) {
                if (j != i) cofactor *= terms_[j].den;
            }
            num += to_rational_poly(terms_[i].num * cofactor).scaled(terms_[i].scale);
        }
        RationalGeneratingFunction gf;
        gf.num = to_int_polynomial(num, what).shifted(shift);
        gf.den = den;
        if (!(gf.den.coefficient(0) == BigInt(1)))
            throw std::domain_error(what + ": assembled denominator constant term is not 1");
        return gf;
    }

private:
    struct Term {
        Rational scale;
        IP num;
        IP den;
    };
    std::vector<Term> terms_;
};

RationalGeneratingFunction simple_gf(IP num, IP den) {
    RationalGeneratingFunction gf;
    gf.num = std::move(num);
    gf.den = std::move(den);
    return gf;
}

RationalGeneratingFunction gf_type_i() {
    FracSum sum;
    sum.add(Rational(1), IP::monomial(1, 35) + IP{1}, om(4) * om(6) * om(10) * om(12));
    sum.add(Rational(-1), IP{1}, om(4) * om(6));
    sum.add(Rational(-1), IP::monomial(1, 10), om(2) * om(6));
    return sum.finish(0, "series for s_k(p,I)");
}

RationalGeneratingFunction gf_type_iib() {
    return simple_gf(IP::monomial(1, 10), om(2) * om(6));
}

// ---- p = 2, 3: the explicitly displayed series -----------------------------

RationalGeneratingFunction gf_small_prime(long long p, ReprType::Kind kind) {
    const IP den4 = om(4) * om(6) * om(10) * om(12);
    switch (kind) {
        case ReprType::Kind::Vb:
            return p == 2 ? simple_gf(IP::monomial(1, 8), om(4) * om(6))
                          : simple_gf(IP::monomial(1, 6), om(2) * om(6));
        case ReprType::Kind::VIbP:
            return p == 2 ? simple_gf(IP{1, 0, 1, 0, 0, 0, -1}.shifted(6), om(4) * om(6))
                          : simple_gf(IP{1, 0, 0, 0, 1, 0, -1}.shifted(4), om(2) * om(6));
        case ReprType::Kind::VIc:
            return p == 2 ? simple_gf(IP::monomial(1, 11), om(4) * om(6))
                          : simple_gf(IP::monomial(1, 9), om(2) * om(6));
        case ReprType::Kind::VIbY:
            return simple_gf(IP(), IP{1});
        case ReprType::Kind::IIa:
            if (p == 2) {
                IP num = IP{1, 0, 1, 0, 1, 0, -1, 0, -1}.shifted(19) +
                         IP{1, 0, 1, 0, -1, 0, -1, 0, 1}.shifted(16);
                return simple_gf(std::move(num), om(4) * om(4) * om(6) * om(10));
            } else {
                IP num = IP{1, 0, 1, 0, 1, 0, 2, 0, 2, 0, -1, 0, -1, 0, -1}.shifted(15) +
                         IP{1, 0, 1, 0, 1, 0, 2, 0, 0, 0, -1, 0, -1, 0, 1}.shifted(12);
                return simple_gf(std::move(num), om(4) * om(6) * om(6) * om(10));
            }
        case ReprType::Kind::IIIaVIab:
            if (p == 2) {
                IP num = IP{1, 0, 1, 0, 1, 0, 1, 0, 1, 0, -1}.shifted(25) +
                         IP{1, 0, 2, 0, 2, 0, 2, 0, 1, 0, 0, 0, -2, 0, -1, 0, -1, 0, -1,
                            0, 0, 0, 1}
                             .shifted(12);
                return simple_gf(std::move(num), den4);
            } else {
                IP num = IP{1, 0, 1, 0, 1, 0, 2, 0, 3, 0, 2, 0, 2, 0, 2, 0, 1, 0, -1}
                             .shifted(17) +
                         IP{1, 0, 2, 0, 3, 0, 4, 0, 5, 0, 4, 0, 1, 0, 0, 0, -2, 0, -2,
                            0, -2, 0, -1, 0, 0, 0, 1}
                             .shifted(8);
                return simple_gf(std::move(num), den4);
            }
        case ReprType::Kind::IVa:
            if (p == 2) {
                IP num = IP{1, 0, 1, 0, 1, 0, 2, 0, 2, 0, 0, 0, 1, 0, 0, 0, -1, 0, -1,
                            0, 0, 0, 1}
                             .shifted(13) +
                         IP{1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 2, 0, 1, 0, 0, 0, 1, 0, 1,
                            0, 0, 0, -1}
                             .shifted(10);
                return simple_gf(std::move(num), den4);
            } else {
                IP num = IP{1, 0, 2, 0, 5, 0, 6, 0, 8, 0, 9, 0, 9, 0, 5, 0, 5, 0, 2,
                            0, 0, 0, -1, 0, 0, 0, 1}
                             .shifted(9) +
                         IP{1, 0, 2, 0, 5, 0, 6, 0, 8, 0, 7, 0, 7, 0, 7, 0, 5, 0, 2,
                            0, 2, 0, 1, 0, 0, 0, -1}
                             .shifted(6);
                return simple_gf(std::move(num), den4);
            }
        case ReprType::Kind::Va:
            if (p == 2) {
                IP num = IP{1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1}.shifted(15) +
                         IP::monomial(1, 30);
                return simple_gf(std::move(num), den4);
            } else {
                IP num = IP{1, 0, 1, 0, 2, 0, 2, 0, 2, 0, 0, 0, 0, 0, 0, 0, -1, 0, -1}
                             .shifted(11) +
                         (IP{1, 0, 0, 0, 1, 0, 1} * IP{1, 0, 0, 0, 0, 0, 0, 0, 1}).shifted(16);
                return simple_gf(std::move(num), den4);
            }
        default:
            throw std::invalid_argument("gf_small_prime: unsupported type");
    }
}

// ---- p >= 5: the parametric displays ---------------------------------------

struct PrimeData {
    long long p;
    Rational e1;    // (-1/p)
    Rational e3;    // (-3/p)
    Rational bh;    // b * h
    Rational b2h2;  // (b*h)^2
};

PrimeData prime_data(long long p) {
    const ImaginaryQuadraticData quad = quadratic_data(p);
    PrimeData data;
    data.p = p;
    data.e1 = Rational(symbol_minus_one(p));
    data.e3 = Rational(symbol_minus_three(p));
    data.bh = Rational(static_cast<long long>(quad.b) * quad.h);
    data.b2h2 = data.bh * data.bh;
    return data;
}

// C(p) = (p-1)/24 + (1-(-1/p))/8 + (1-(-3/p))/6 - 1/2
Rational yoshida_cp_value(const PrimeData& d) {
    return Rational(d.p - 1, 24) + (Rational(1) - d.e1) / Rational(8) +
           (Rational(1) - d.e3) / Rational(6) - Rational(1, 2);
}

RationalGeneratingFunction gf_vb_large(const PrimeData& d) {
    FracSum sum;
    sum.add(Rational(d.p - 1, 24), IP{1, 0, 3}, om(2) * om(2));
    sum.add((Rational(1) - d.e1) / Rational(8), IP{1}, om(2));
    sum.add((Rational(1) - d.e3) / Rational(6), IP{1}, IP{1, 0, 1, 0, 1});
    sum.add(-d.bh / Rational(4), IP{1}, om(2));
    return sum.finish(2, "series for s_k(p,Vb)");
}

RationalGeneratingFunction gf_vibp_large(const PrimeData& d) {
    FracSum sum;
    sum.add(Rational(d.p - 1, 24), IP{1, 0, 3}, om(2) * om(2));
    sum.add((Rational(1) - d.e1) / Rational(8), IP{1}, om(2));
    sum.add((Rational(1) - d.e3) / Rational(6), IP{1}, IP{1, 0, 1, 0, 1});
    sum.add(d.bh / Rational(4), IP{1}, om(2));
    sum.add(Rational(-1), IP{1}, IP{1});
    return sum.finish(2, "series for s_k^(P)(p,VIb)");
}

RationalGeneratingFunction gf_vic_large(const PrimeData& d) {
    FracSum sum;
    sum.add(Rational(d.p - 1, 24), IP{3, 0, 1}, om(2) * om(2));
    sum.add(-(Rational(1) - d.e1) / Rational(8), IP{1}, om(2));
    sum.add((Rational(1) - d.e3) / Rational(6), IP{0, 0, 1}, IP{1, 0, 1, 0, 1});
    sum.add(-d.bh / Rational(4), IP{1}, om(2));
    return sum.finish(3, "series for s_k(p,VIc)");
}

RationalGeneratingFunction gf_viby_large(const PrimeData& d) {
    const Rational cp = yoshida_cp_value(d);
    FracSum sum;
    sum.add(cp * Rational(d.p - 1, 12), IP{1, 1}, om(1) * om(1));
    sum.add(cp * (Rational(1) - d.e1) / Rational(4), IP{1}, IP{1, 1});
    sum.add(cp * (Rational(1) - d.e3) / Rational(3), IP{1, 1}, IP{1, 1, 1});
    sum.add(-cp, IP{1}, IP{1});
    sum.add((Rational(2) - d.bh) / Rational(4), IP{1}, IP{1});
    sum.add((d.b2h2 - Rational(2) * d.bh) / Rational(8), IP{1}, IP{1, 1});
    return sum.finish(2, "series for s_k^(Y)(p,VIb)");
}

RationalGeneratingFunction gf_iia_large(const PrimeData& d) {
    const long long p = d.p;
    FracSum sum;
    sum.add(Rational(p * p - 1, 2880), IP{1, 1}, om(1) * om(1) * om(1) * om(1));
    sum.add(Rational(-(p - 1), 288), IP{5, 13, 17, 12, 12}, om(2) * om(3));
    sum.add(Rational(1), IP::monomial(1, 7), om(2) * om(6));
    sum.add(d.bh / Rational(4), IP{1}, om(1));
    sum.add(Rational(-1), IP{1}, IP{1});
    sum.add((d.e3 - Rational(1)) * Rational(p, 72), IP{1, 1}, om(1) * om(3));
    sum.add((d.e3 - Rational(1)) / Rational(24), IP{-3, 1, 0, 4}, om(1) * om(3));
    sum.add((d.e1 - Rational(1)) * Rational(p, 96), IP{1}, om(1) * om(2));
    sum.add((d.e1 - Rational(1)) / Rational(24), IP{-4, 2, -1, 3, 3}, om(2) * om(3));
    sum.add(-(d.e3 - Rational(1)) * (d.e1 - Rational(1)) / Rational(24), IP{1},
            IP{1, 1} * IP{1, 1, 1});
    sum.add(Rational(case8_iia(p), 4), IP{1}, IP{1, 1} * IP{1, 0, 1});
    sum.add(Rational(case5_iia(p), 5), IP{1, 1}, IP{1, 1, 1, 1, 1});
    return sum.finish(3, "series for s_k(p,IIa)");
}

RationalGeneratingFunction gf_iiia_large(const PrimeData& d) {
    const long long p = d.p;
    const IP big_n = IP{34, -6, 133, -35, 264, -88, 344, -120, 342, -58, 224, 0, 86, 14, 13, 5};
    const IP c31 = IP{-2, 2, -6, 6, -5, 3, -5, 3, -3, 1};
    const IP c32 = IP{14, -8, -10, 6, -5, -2, 20, -6, -16, 4, 7};
    const IP c11 = IP{-3, -4, 4, -8, 1, -4, 2};
    const IP c12 = IP{12, 10, -43, 0, 40, 0, -36, 10, 13};
    const IP phi6 = IP{1, 0, -1, 0, 1};  // 1 - t^2 + t^4
    const IP phi3sq = IP{1, 0, 1, 0, 1};  // 1 + t^2 + t^4

    FracSum sum;
    sum.add(Rational((p - 1) * (p * p + p + 2), 5760), IP{1, 1},
            om(1) * om(1) * om(1) * om(1));
    sum.add(Rational(-(p - 1) * (p + 3), 1152), IP{13, 2, 19, 0, -2},
            IP{1, 1} * om(2) * om(2));
    sum.add(Rational(p - 1, 144), big_n, IP{1, 0, 1} * IP{1, 0, 1} * om(6) * om(6));
    sum.add(Rational(-1), IP{1}, IP{1});
    sum.add(-(d.e3 - Rational(1)) * Rational(p + 1, 72), c31,
            om(1) * om(1) * phi3sq * phi3sq);
    sum.add(-(d.e3 - Rational(1)) / Rational(36), c32, om(1) * phi6 * om(6));
    sum.add(-(d.e1 - Rational(1)) * Rational(p + 1, 192), c11, om(1) * IP{1, 0, 1} * om(4));
    sum.add(-(d.e1 - Rational(1)) / Rational(96), c12, om(1) * om(4) * phi6);
    sum.add((d.e3 - Rational(1)) * (d.e1 - Rational(1)) / Rational(24), IP{0, -2, -2, 0, 1},
            IP{1, 1} * phi6);
    sum.add(d.b2h2 / Rational(16), IP{1}, IP{1, 1});
    sum.add(-d.bh / Rational(4), IP{1}, om(2));
    sum.add(Rational(case8_p7(p), 4), IP{1}, IP{1, 1} * IP{1, 0, 1});
    sum.add(Rational(case5_iiia(p), 5), IP{1, 1}, IP{1, 1, 1, 1, 1});
    return sum.finish(3, "series for s_k(p,IIIa+VIa/b)");
}

RationalGeneratingFunction gf_iva_large(const PrimeData& d) {
    const long long p = d.p;
    const IP phi6 = IP{1, 0, -1, 0, 1};
    const IP phi3sq = IP{1, 0, 1, 0, 1};

    FracSum sum;
    sum.add(Rational((p - 1), 2880) * Rational(p * p * p - 1), IP{1, 1},
            om(1) * om(1) * om(1) * om(1));
    sum.add(Rational(-7 * (p - 1) * (p - 1), 576), IP{1}, IP{1, 1} * IP{1, 1} * IP{1, 1});
    sum.add(Rational(1), IP{1}, IP{1});
    sum.add((d.e3 - Rational(1)) * Rational(p - 1, 72),
            IP{1, 1} * IP{3, -5, 10, -13, 10, -5, 3}, om(1) * om(1) * phi3sq * phi3sq);
    sum.add((d.e3 - Rational(1)) * Rational(2, 9), IP{1}, IP{1, 0, 0, 1});
    sum.add((d.e1 - Rational(1)) * Rational(p - 1, 96), IP{3, 0, -2, 0, 3},
            om(1) * IP{1, 0, 1} * om(4));
    sum.add(-(d.e3 - Rational(1)) * (d.e1 - Rational(1)) / Rational(24), IP{3, 6, 7, 6, 3},
            IP{1, 1} * IP{1, 1, 1} * phi6);
    sum.add(Rational(-case8_p7(p), 2), IP{1}, IP{1, 1} * IP{1, 0, 1});
    sum.add(Rational(-case5_iva(p), 5), IP{1, 1}, IP{1, 1, 1, 1, 1});
    return sum.finish(3, "series for s_k(p,IVa)");
}

RationalGeneratingFunction gf_va_large(const PrimeData& d) {
    const long long p = d.p;
    const IP phi6 = IP{1, 0, -1, 0, 1};
    const IP phi3sq = IP{1, 0, 1, 0, 1};

    FracSum sum;
    sum.add(Rational(p * (p - 1) * (p - 1), 5760), IP{1, 1}, om(1) * om(1) * om(1) * om(1));
    sum.add(Rational((p - 1) * (p - 1), 1152), IP{1, -30, -5, 0, 2},
            om(1) * om(1) * IP{1, 1} * IP{1, 1} * IP{1, 1});
    sum.add(Rational(p - 1, 24), IP{0, 5, 0, -1}, om(2) * om(2));
    sum.add(-d.b2h2 / Rational(16), IP{1}, IP{1, 1});
    sum.add(-d.bh / Rational(4), IP{0, 1}, om(2));
    sum.add((d.e3 - Rational(1)) * Rational(p - 1, 72),
            IP{2, -2, 9, -7, 7, -5, 3, -1}.shifted(2), om(1) * om(1) * phi3sq * phi3sq);
    sum.add((d.e3 - Rational(1)) / Rational(18), IP{-2, 0, 1, 3, 2}, IP{1, 1} * phi3sq);
    sum.add(-(d.e1 - Rational(1)) * Rational(p - 1, 192), IP{1, -4, -4, -8, 5, -4, 2},
            om(1) * IP{1, 0, 1} * om(4));
    sum.add(-(d.e1 - Rational(1)) / Rational(32), IP{1, 3}, om(2));
    sum.add((d.e3 - Rational(1)) * (d.e1 - Rational(1)) / Rational(24), IP{2, 2, 0, 0, 1},
            IP{1, 1} * phi6);
    sum.add(Rational(case8_p7(p), 4), IP{1}, IP{1, 1} * IP{1, 0, 1});
    sum.add(Rational(-case5_va(p), 5), IP{1, 1}, IP{1, 1, 1, 1, 1});
    return sum.finish(3, "series for s_k(p,Va)");
}

}  // namespace

RationalGeneratingFunction gf_catalog(long long p, const ReprType& omega) {
    if (!is_prime(p)) throw std::invalid_argument("gf_catalog: p must be prime");
    switch (omega.kind()) {
        case ReprType::Kind::I:
            return gf_type_i();
        case ReprType::Kind::IIb:
            return gf_type_iib();
        case ReprType::Kind::Vb:
        case ReprType::Kind::VIbP:
        case ReprType::Kind::VIc:
        case ReprType::Kind::VIbY:
        case ReprType::Kind::IIa:
        case ReprType::Kind::IIIaVIab:
        case ReprType::Kind::IVa:
        case ReprType::Kind::Va:
            break;
        default:
            throw std::invalid_argument("gf_catalog: no generating function for type " +
                                        omega.label());
    }
    if (p <= 3) return gf_small_prime(p, omega.kind());
    const PrimeData data = prime_data(p);
    switch (omega.kind()) {
        case ReprType::Kind::Vb: return gf_vb_large(data);
        case ReprType::Kind::VIbP: return gf_vibp_large(data);
        case ReprType::Kind::VIc: return gf_vic_large(data);
        case ReprType::Kind::VIbY: return gf_viby_large(data);
        case ReprType::Kind::IIa: return gf_iia_large(data);
        case ReprType::Kind::IIIaVIab: return gf_iiia_large(data);
        case ReprType::Kind::IVa: return gf_iva_large(data);
        case ReprType::Kind::Va: return gf_va_large(data);
        default: break;
    }
    throw std::invalid_argument("gf_catalog: unreachable");
}

}  // namespace gsp4
