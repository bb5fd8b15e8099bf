#pragma once

#include <map>
#include <optional>
#include <string>

#include "gsp4/bigint.hpp"

namespace gsp4 {

// The level-p congruence subgroups of Sp(4,Q), plus the full modular group.
enum class SubgroupKind {
    Full,         // Sp(4,Z)
    Paramodular,  // K(p)
    Siegel,       // Gamma_0(p)
    Klingen,      // Gamma_0'(p)
    Borel,        // B(p)
};

std::string subgroup_label(SubgroupKind kind);
std::optional<SubgroupKind> parse_subgroup(const std::string& text);

// d_{H,Omega}: dimension of the space of H-fixed vectors per representation
// type, keyed by type label. Only types with nonzero fixed vectors appear.
const std::map<std::string, int>& fixed_vector_dims(SubgroupKind kind);

// dim S_k(Gamma_p), reconstructed from the counts. Empty optional means the
// value is undetermined (k = 2, p >= 5).
std::optional<BigInt> dim_siegel_cusp(long long k, long long p, SubgroupKind kind);

// Newform space dimensions; the Full group has no newform notion.
std::optional<BigInt> dim_newforms(long long k, long long p, SubgroupKind kind);

// dim S_k^{new,(G)}(K(p)) = s_k(p, IIa).
std::optional<BigInt> dim_newforms_paramodular_general(long long k, long long p);

}  // namespace gsp4
