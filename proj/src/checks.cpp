#include "gsp4/checks.hpp"

#include <sstream>
#include <stdexcept>

#include "gsp4/appendix_fixture.hpp"
#include "gsp4/counts.hpp"
#include "gsp4/elliptic.hpp"
#include "gsp4/genfun.hpp"
#include "gsp4/periodic.hpp"
#include "gsp4/plancherel.hpp"

namespace gsp4 {

namespace {

std::vector<AppendixTable> parse_fixture(const char* text) {
    std::vector<AppendixTable> tables;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string tag;
        fields >> tag;
        if (tag == "table") {
            std::string label;
            fields >> label;
            auto type = ReprType::parse(label);
            if (!type) throw std::runtime_error("appendix fixture: unknown type " + label);
            tables.push_back(AppendixTable{*type, {}, {}, {}});
        } else if (tag == "k") {
            if (tables.empty()) throw std::runtime_error("appendix fixture: k line before table");
            long long k;
            while (fields >> k) tables.back().weights.push_back(k);
        } else if (tag == "p") {
            if (tables.empty()) throw std::runtime_error("appendix fixture: p line before table");
            AppendixTable& table = tables.back();
            long long p;
            fields >> p;
            table.primes.push_back(p);
            std::vector<long long> row;
            long long value;
            while (fields >> value) row.push_back(value);
            if (row.size() != table.weights.size())
                throw std::runtime_error("appendix fixture: row length mismatch at p=" +
                                         std::to_string(p));
            table.values.push_back(std::move(row));
        } else {
            throw std::runtime_error("appendix fixture: unexpected line '" + line + "'");
        }
    }
    return tables;
}

void record(CheckReport& report, const std::string& where, const std::string& expected,
            const std::string& actual) {
    ++report.cases;
    if (expected != actual) report.failures.push_back(CheckFailure{where, expected, actual});
}

std::string cell(const ReprType& type, long long p, long long k) {
    return "type=" + type.label() + " p=" + std::to_string(p) + " k=" + std::to_string(k);
}

constexpr long long kSmallPrimes[] = {2, 3};
constexpr long long kTablePrimes[] = {5, 7, 11, 13, 17, 19};
constexpr long long kLimitPrimes[] = {2, 3, 5, 7};

}  // namespace

const std::vector<AppendixTable>& appendix_tables() {
    static const std::vector<AppendixTable> tables = parse_fixture(detail::kAppendixFixture);
    return tables;
}

CheckReport check_appendix() {
    CheckReport report{"appendix", 0, {}};
    for (const AppendixTable& table : appendix_tables()) {
        for (std::size_t i = 0; i < table.primes.size(); ++i) {
            for (std::size_t j = 0; j < table.weights.size(); ++j) {
                const long long p = table.primes[i];
                const long long k = table.weights[j];
                const BigInt computed = count_value(k, p, table.type);
                record(report, cell(table.type, p, k), std::to_string(table.values[i][j]),
                       computed.to_string());
            }
        }
    }
    return report;
}

CheckReport check_series_vs_closed() {
    CheckReport report{"series-vs-closed", 0, {}};
    const long long kmax = 200;
    for (long long p : kTablePrimes) {
        for (const ReprType& type : ReprType::counted_types()) {
            const SeriesExpansion series = expand(gf_catalog(p, type), kmax);
            for (long long k = 3; k <= kmax; ++k) {
                const BigInt closed = count_value(k, p, type);
                record(report, cell(type, p, k) + " closed-vs-series", closed.to_string(),
                       series.coefficients[static_cast<std::size_t>(k)].to_string());
            }
        }
    }
    for (long long p : kSmallPrimes) {
        for (const ReprType& type : ReprType::counted_types()) {
            if (!type.is_lift() || type.kind() == ReprType::Kind::IIb) continue;
            const SeriesExpansion series = expand(gf_catalog(p, type), kmax);
            for (long long k = 2; k <= kmax; ++k) {
                const BigInt relation = count_via_relation(k, p, type);
                record(report, cell(type, p, k) + " series-vs-relation",
                       series.coefficients[static_cast<std::size_t>(k)].to_string(),
                       relation.to_string());
            }
        }
    }
    return report;
}

CheckReport check_relations() {
    CheckReport report{"relations", 0, {}};
    // s_k(p,IIb) = dim S_{2k-2}^-(SL(2,Z)): the full space for even k, 0 for odd k.
    for (long long k = 2; k <= 100; ++k) {
        const BigInt lhs = count_value(k, 2, ReprType(ReprType::Kind::IIb));
        const long long rhs = k % 2 == 0 ? dim_cusp_sl2(2 * k - 2) : 0;
        record(report, "type=IIb k=" + std::to_string(k), std::to_string(rhs), lhs.to_string());
    }
    static const ReprType lifts[] = {ReprType(ReprType::Kind::Vb), ReprType(ReprType::Kind::VIbP),
                                     ReprType(ReprType::Kind::VIc),
                                     ReprType(ReprType::Kind::VIbY)};
    for (long long p = 2; p < 50; ++p) {
        if (!is_prime(p)) continue;
        for (const ReprType& type : lifts) {
            for (long long k = 2; k <= 100; ++k) {
                const BigInt direct = count_value(k, p, type);
                const BigInt relation = count_via_relation(k, p, type);
                record(report, cell(type, p, k) + " count-vs-relation", relation.to_string(),
                       direct.to_string());
            }
        }
    }
    return report;
}

CheckReport check_plancherel() {
    CheckReport report{"plancherel", 0, {}};
    for (long long q = 2; q <= 121; ++q) {
        if (prime_power_base(q) == 0) continue;
        record(report, "mass system q=" + std::to_string(q), "ok",
               verify_mass_system(q) ? "ok" : "violated");
    }
    static const ReprType generic[] = {
        ReprType(ReprType::Kind::I), ReprType(ReprType::Kind::IIa),
        ReprType(ReprType::Kind::IIIaVIab), ReprType(ReprType::Kind::IVa),
        ReprType(ReprType::Kind::Va)};
    static const MassClass classes[] = {MassClass::I, MassClass::II, MassClass::IIIplusVI,
                                        MassClass::IV, MassClass::V};
    for (long long p = 2; p < 100; ++p) {
        if (!is_prime(p)) continue;
        for (int i = 0; i < 5; ++i) {
            const Rational a = asymptotic_coefficients(p, generic[i]).a;
            const Rational m = plancherel_mass(p, classes[i]);
            record(report, "a=m type=" + generic[i].label() + " p=" + std::to_string(p),
                   m.to_string(), a.to_string());
        }
    }
    return report;
}

CheckReport check_limit() {
    CheckReport report{"limit", 0, {}};
    static const long long weights[] = {5000, 5001, 10000, 10001};
    static const ReprType generic[] = {
        ReprType(ReprType::Kind::I), ReprType(ReprType::Kind::IIa),
        ReprType(ReprType::Kind::IIIaVIab), ReprType(ReprType::Kind::IVa),
        ReprType(ReprType::Kind::Va)};
    static const MassClass classes[] = {MassClass::I, MassClass::II, MassClass::IIIplusVI,
                                        MassClass::IV, MassClass::V};
    for (long long p : kLimitPrimes) {
        for (int i = 0; i < 5; ++i) {
            for (long long k : weights) {
                const Rational ratio = limit_ratio(k, p, generic[i]);
                const Rational mass = plancherel_mass(p, classes[i]);
                const Rational bound = mass * Rational(110, 2 * k - 3);
                const Rational gap = (ratio - mass).abs();
                record(report,
                       "limit type=" + generic[i].label() + " p=" + std::to_string(p) +
                           " k=" + std::to_string(k),
                       "|ratio-mass| <= " + bound.to_string(),
                       gap <= bound ? "|ratio-mass| <= " + bound.to_string()
                                    : "gap " + gap.to_string());
            }
        }
    }
    return report;
}

std::vector<CheckReport> run_all_checks() {
    return {check_appendix(), check_series_vs_closed(), check_relations(), check_plancherel(),
            check_limit()};
}

}  // namespace gsp4
