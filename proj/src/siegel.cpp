// Dimensions of Siegel cusp form spaces at prime level, reconstructed from
// the counts through the solved fixed-vector linear system.

#include "gsp4/siegel.hpp"

#include <stdexcept>

#include "gsp4/counts.hpp"
#include "gsp4/rational.hpp"

namespace gsp4 {

std::string subgroup_label(SubgroupKind kind) {
    switch (kind) {
        case SubgroupKind::Full: return "full";
        case SubgroupKind::Paramodular: return "paramodular";
        case SubgroupKind::Siegel: return "siegel";
        case SubgroupKind::Klingen: return "klingen";
        case SubgroupKind::Borel: return "borel";
    }
    return "?";
}

std::optional<SubgroupKind> parse_subgroup(const std::string& text) {
    if (text == "full") return SubgroupKind::Full;
    if (text == "paramodular") return SubgroupKind::Paramodular;
    if (text == "siegel") return SubgroupKind::Siegel;
    if (text == "klingen") return SubgroupKind::Klingen;
    if (text == "borel") return SubgroupKind::Borel;
    return std::nullopt;
}

const std::map<std::string, int>& fixed_vector_dims(SubgroupKind kind) {
    static const std::map<SubgroupKind, std::map<std::string, int>> table = {
        {SubgroupKind::Full, {{"I", 1}, {"IIb", 1}}},
        {SubgroupKind::Paramodular,
         {{"I", 2}, {"IIa", 1}, {"IIb", 1}, {"Vb", 1}, {"VIc", 1}}},
        {SubgroupKind::Siegel,
         {{"I", 4}, {"IIa", 1}, {"IIb", 3}, {"IIIa", 2}, {"Vb", 1}, {"VIa", 1}, {"VIb", 1}}},
        {SubgroupKind::Klingen,
         {{"I", 4}, {"IIa", 2}, {"IIb", 2}, {"IIIa", 1}, {"Va", 1}, {"Vb", 1}, {"VIa", 1},
          {"VIc", 1}}},
        {SubgroupKind::Borel,
         {{"I", 8}, {"IIa", 4}, {"IIb", 4}, {"IIIa", 4}, {"IVa", 1}, {"Va", 2}, {"Vb", 2},
          {"VIa", 3}, {"VIb", 1}, {"VIc", 1}}},
    };
    return table.at(kind);
}

namespace {

struct Counts {
    bool unknown = false;
    BigInt i, iia, iib, comb, iva, va, vb, vic, vibp, viby;
};

Counts gather_counts(long long k, long long p) {
    Counts c;
    auto fetch = [&](ReprType::Kind kind) -> BigInt {
        CountResult result = count(k, p, ReprType(kind));
        if (result.is_unknown()) {
            c.unknown = true;
            return BigInt(0);
        }
        return *result.value;
    };
    c.i = fetch(ReprType::Kind::I);
    c.iia = fetch(ReprType::Kind::IIa);
    c.iib = fetch(ReprType::Kind::IIb);
    c.comb = fetch(ReprType::Kind::IIIaVIab);
    c.iva = fetch(ReprType::Kind::IVa);
    c.va = fetch(ReprType::Kind::Va);
    c.vb = fetch(ReprType::Kind::Vb);
    c.vic = fetch(ReprType::Kind::VIc);
    c.vibp = fetch(ReprType::Kind::VIbP);
    c.viby = fetch(ReprType::Kind::VIbY);
    return c;
}

BigInt as_dim(const Rational& value, const std::string& what, long long k, long long p) {
    BigInt n = value.to_integer(what + " at k=" + std::to_string(k) + ", p=" + std::to_string(p));
    if (n.is_negative())
        throw std::domain_error("negative dimension from " + what + " at k=" + std::to_string(k) +
                                ", p=" + std::to_string(p));
    return n;
}

// The four level-p dimensions, solved from the fixed-vector system in terms
// of the combined count for IIIa and the VIa/b packet pieces.
struct SolvedDims {
    Rational paramodular, siegel, klingen, borel;
};

SolvedDims solve_dims(const Counts& c) {
    SolvedDims dims;
    dims.paramodular = Rational(BigInt(2) * c.i + c.iia + c.iib + c.vb + c.vic);
    dims.siegel = dims.paramodular + Rational(BigInt(2) * (c.i + c.iib + c.comb)) +
                  Rational(c.vibp) + Rational(c.viby) - Rational(c.vic);
    dims.klingen = dims.siegel * Rational(1, 2) + dims.paramodular * Rational(3, 2) +
                   Rational(c.va) - Rational(c.i) - Rational(c.iib) - Rational(c.vb) -
                   Rational(c.vibp + c.viby + c.vic) * Rational(1, 2);
    dims.borel = Rational(c.iva) - dims.paramodular + dims.siegel +
                 dims.klingen * Rational(2) - Rational(BigInt(2) * (c.i + c.iib));
    return dims;
}

}  // namespace

std::optional<BigInt> dim_siegel_cusp(long long k, long long p, SubgroupKind kind) {
    if (kind == SubgroupKind::Full) {
        BigInt value = count_value(k, p, ReprType(ReprType::Kind::I)) +
                       count_value(k, p, ReprType(ReprType::Kind::IIb));
        return value;
    }
    const Counts c = gather_counts(k, p);
    if (c.unknown) return std::nullopt;
    const SolvedDims dims = solve_dims(c);
    const std::string what = "dim S_k(" + subgroup_label(kind) + ")";
    switch (kind) {
        case SubgroupKind::Paramodular: return as_dim(dims.paramodular, what, k, p);
        case SubgroupKind::Siegel: return as_dim(dims.siegel, what, k, p);
        case SubgroupKind::Klingen: return as_dim(dims.klingen, what, k, p);
        case SubgroupKind::Borel: return as_dim(dims.borel, what, k, p);
        default: break;
    }
    throw std::invalid_argument("dim_siegel_cusp: unsupported subgroup");
}

std::optional<BigInt> dim_newforms(long long k, long long p, SubgroupKind kind) {
    if (kind == SubgroupKind::Full)
        throw std::invalid_argument("dim_newforms: no newform notion at full level");
    const Counts c = gather_counts(k, p);
    if (c.unknown) return std::nullopt;
    switch (kind) {
        case SubgroupKind::Paramodular: return c.iia + c.vb + c.vic;
        case SubgroupKind::Borel: return c.iva;
        case SubgroupKind::Siegel:
            return c.iia + BigInt(2) * c.comb + c.vb + c.vibp + c.viby;
        case SubgroupKind::Klingen: return c.comb + c.va;
        default: break;
    }
    throw std::invalid_argument("dim_newforms: unsupported subgroup");
}

std::optional<BigInt> dim_newforms_paramodular_general(long long k, long long p) {
    CountResult result = count(k, p, ReprType(ReprType::Kind::IIa));
    if (result.is_unknown()) return std::nullopt;
    return *result.value;
}

}  // namespace gsp4
