#pragma once

#include <string>
#include <vector>

#include "gsp4/repr_type.hpp"

namespace gsp4 {

struct CheckFailure {
    std::string where;     // coordinates of the failing case
    std::string expected;  // value from the reference route
    std::string actual;    // value from the route under test
};

struct CheckReport {
    std::string suite;
    long long cases = 0;
    std::vector<CheckFailure> failures;

    bool ok() const { return failures.empty(); }
};

// One golden table block: values[i][j] = s_{weights[j]}(primes[i], type).
struct AppendixTable {
    ReprType type = ReprType(ReprType::Kind::IIa);
    std::vector<long long> weights;
    std::vector<long long> primes;
    std::vector<std::vector<long long>> values;
};

// The transcribed golden tables (embedded at build time).
const std::vector<AppendixTable>& appendix_tables();

// Every golden cell against the computed count, exact.
CheckReport check_appendix();

// Closed form vs generating-series coefficient for the ten counted types,
// p in {5,7,11,13,17,19}, 3 <= k <= 200; and series vs lifting relation for
// the Saito-Kurokawa/Yoshida types at p = 2, 3, k <= 200.
CheckReport check_series_vs_closed();

// Lifting identities: s_k(p,IIb) = dim S_{2k-2}^-(SL(2,Z)) for k <= 100, and
// the Vb / VIb(P) / VIc / VIb(Y) counts against the sign-split new-space
// dimensions for k <= 100, p < 50.
CheckReport check_relations();

// Volume/mass linear system at every prime power q <= 121, and a_Omega = m_Omega
// for the generic types at every prime p < 100.
CheckReport check_plancherel();

// |2880 s_k / dim xi_{k,0} - m_Omega| <= m_Omega * 110/(2k-3) at
// k in {5000, 5001, 10000, 10001}, generic types, p in {2,3,5,7}.
CheckReport check_limit();

std::vector<CheckReport> run_all_checks();

}  // namespace gsp4
