#pragma once

#include <string>

#include "gsp4/polynomial.hpp"
#include "gsp4/rational.hpp"
#include "gsp4/repr_type.hpp"

namespace gsp4 {

// The six tempered mass classes, plus the combined III+VI key that matches
// the combined count. Only the square-integrable members carry mass; the
// VIa/b packet is tempered but not square-integrable, so m_VI = 0.
enum class MassClass { I, II, III, IV, V, VI, IIIplusVI };

std::string mass_class_label(MassClass mass_class);

// Plancherel mass as a polynomial in the residue field size q:
//   m_I = 1, m_II = q^2-1, m_III = (q-1)(q^2+q+2)/2, m_IV = (q-1)(q^3-1),
//   m_V = q(q-1)^2/2, m_VI = 0.
const RationalPolynomial& mass_polynomial(MassClass mass_class);

// Mass evaluated exactly at q >= 2.
Rational plancherel_mass(long long q, MassClass mass_class);

enum class Parahoric { K, ParamodularP, KlingenP, SiegelP, Iwahori };

// Volumes for the Haar measure normalized by Vol(K) = 1.
Rational parahoric_volume(long long q, Parahoric subgroup);

// Checks 1/Vol(H) = sum_Omega d_{H,Omega} m_Omega over the five parahorics,
// with the tempered fixed-vector rows. Exact, at any q >= 2.
bool verify_mass_system(long long q);

// dim xi_{k,j} = (j+1)(k-2)(k+j-1)(2k+j-3)/6 for k >= 3, j >= 0.
BigInt dim_xi(long long k, long long j);

// Leading coefficients of the count asymptotics for the generic types:
// s_k = a * (k-2)(k-1)(2k-3)/17280 + b * 7(-1)^k (k-2)(k-1)/1152 + O(k).
struct AsymptoticCoefficients {
    Rational a;
    Rational b;
};

AsymptoticCoefficients asymptotic_coefficients(long long p, const ReprType& omega);

// 2880 * s_k(p, omega) / dim xi_{k,0}; converges to the Plancherel mass.
Rational limit_ratio(long long k, long long p, const ReprType& omega);

// Signed measure of PGSp(4,Q)\PGSp(4,A) in the normalization of the
// automorphic Plancherel density theorem. Recorded for reference only; it
// drives no computation here.
inline const Rational kSignedGlobalMeasure = Rational(-1, 1440);

}  // namespace gsp4
