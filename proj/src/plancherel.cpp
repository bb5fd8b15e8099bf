#include "gsp4/plancherel.hpp"

#include <stdexcept>
#include <vector>

#include "gsp4/counts.hpp"
#include "gsp4/periodic.hpp"

namespace gsp4 {

std::string mass_class_label(MassClass mass_class) {
    switch (mass_class) {
        case MassClass::I: return "I";
        case MassClass::II: return "II";
        case MassClass::III: return "III";
        case MassClass::IV: return "IV";
        case MassClass::V: return "V";
        case MassClass::VI: return "VI";
        case MassClass::IIIplusVI: return "III+VI";
    }
    return "?";
}

const RationalPolynomial& mass_polynomial(MassClass mass_class) {
    static const RationalPolynomial m_i{Rational(1)};
    static const RationalPolynomial m_ii{Rational(-1), Rational(0), Rational(1)};
    // (q-1)(q^2+q+2)/2 = (q^3 + q - 2)/2
    static const RationalPolynomial m_iii{Rational(-1), Rational(1, 2), Rational(0),
                                          Rational(1, 2)};
    // (q-1)(q^3-1) = q^4 - q^3 - q + 1
    static const RationalPolynomial m_iv{Rational(1), Rational(-1), Rational(0), Rational(-1),
                                         Rational(1)};
    // q(q-1)^2/2 = (q^3 - 2q^2 + q)/2
    static const RationalPolynomial m_v{Rational(0), Rational(1, 2), Rational(-1),
                                        Rational(1, 2)};
    static const RationalPolynomial m_vi{};
    switch (mass_class) {
        case MassClass::I: return m_i;
        case MassClass::II: return m_ii;
        case MassClass::III:
        case MassClass::IIIplusVI: return m_iii;  // m_{III+VI} = m_III + m_VI = m_III
        case MassClass::IV: return m_iv;
        case MassClass::V: return m_v;
        case MassClass::VI: return m_vi;
    }
    throw std::invalid_argument("mass_polynomial: unsupported class");
}

Rational plancherel_mass(long long q, MassClass mass_class) {
    if (q < 2) throw std::invalid_argument("plancherel_mass: q must be >= 2");
    return mass_polynomial(mass_class).evaluate(Rational(q));
}

Rational parahoric_volume(long long q, Parahoric subgroup) {
    if (q < 2) throw std::invalid_argument("parahoric_volume: q must be >= 2");
    const Rational one(1);
    const Rational q1(1 + q);
    const Rational q2(1 + q * q);
    switch (subgroup) {
        case Parahoric::K: return one;
        case Parahoric::ParamodularP: return one / q2;
        case Parahoric::KlingenP: return one / (q1 * q2);
        case Parahoric::SiegelP: return one / (q1 * q2);
        case Parahoric::Iwahori: return one / (q1 * q1 * q2);
    }
    throw std::invalid_argument("parahoric_volume: unsupported subgroup");
}

// Both sides are polynomials in q of degree <= 4, so this check is
// meaningful at any integer point; agreement at six or more points proves
// the identity.
bool verify_mass_system(long long q) {
    if (q < 2) throw std::invalid_argument("verify_mass_system: q must be >= 2");
    struct Row {
        Parahoric subgroup;
        // tempered fixed-vector dimensions per class I..VI
        int d[6];
    };
    static const std::vector<Row> rows = {
        {Parahoric::K, {1, 0, 0, 0, 0, 0}},
        {Parahoric::ParamodularP, {2, 1, 0, 0, 0, 0}},
        {Parahoric::KlingenP, {4, 2, 1, 0, 1, 1}},
        {Parahoric::SiegelP, {4, 1, 2, 0, 0, 2}},
        {Parahoric::Iwahori, {8, 4, 4, 1, 2, 4}},
    };
    static const MassClass classes[6] = {MassClass::I,  MassClass::II, MassClass::III,
                                         MassClass::IV, MassClass::V,  MassClass::VI};
    for (const Row& row : rows) {
        Rational lhs = Rational(1) / parahoric_volume(q, row.subgroup);
        Rational rhs(0);
        for (int i = 0; i < 6; ++i) {
            if (row.d[i] == 0) continue;
            rhs += Rational(row.d[i]) * plancherel_mass(q, classes[i]);
        }
        if (!(lhs == rhs)) return false;
    }
    return true;
}

BigInt dim_xi(long long k, long long j) {
    if (k < 3) throw std::invalid_argument("dim_xi: k must be >= 3");
    if (j < 0) throw std::invalid_argument("dim_xi: j must be >= 0");
    Rational value = Rational(j + 1) * Rational(k - 2) * Rational(k + j - 1) *
                     Rational(2 * k + j - 3) / Rational(6);
    return value.to_integer("dim xi_{k,j} at k=" + std::to_string(k) +
                            ", j=" + std::to_string(j));
}

AsymptoticCoefficients asymptotic_coefficients(long long p, const ReprType& omega) {
    if (!is_prime(p)) throw std::invalid_argument("asymptotic_coefficients: p must be prime");
    switch (omega.kind()) {
        case ReprType::Kind::I:
            return {Rational(1), Rational(1)};
        case ReprType::Kind::IIa:
            return {Rational(p * p - 1), Rational(0)};
        case ReprType::Kind::IIIaVIab:
            return {Rational((p - 1) * (p * p + p + 2), 2), Rational((p - 1) * (p + 3), 2)};
        case ReprType::Kind::IVa:
            return {Rational(p - 1) * Rational(p * p * p - 1), Rational((p - 1) * (p - 1))};
        case ReprType::Kind::Va:
            return {Rational(p * (p - 1) * (p - 1), 2), Rational(-(p - 1) * (p - 1), 2)};
        default:
            throw std::invalid_argument("asymptotic_coefficients: type " + omega.label() +
                                        " is not generic");
    }
}

Rational limit_ratio(long long k, long long p, const ReprType& omega) {
    if (k < 3) throw std::invalid_argument("limit_ratio: k must be >= 3");
    if (!omega.is_generic())
        throw std::invalid_argument("limit_ratio: type " + omega.label() + " is not generic");
    BigInt s = count_value(k, p, omega);
    return Rational(BigInt(2880) * s, dim_xi(k, 0));
}

}  // namespace gsp4
