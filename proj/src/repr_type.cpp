#include "gsp4/repr_type.hpp"

#include <stdexcept>

namespace gsp4 {

ReprType ReprType::zero(std::string name) { return ReprType(Kind::Zero, std::move(name)); }

void ReprType::throw_zero_needs_name() {
    throw std::invalid_argument("ReprType: forced-zero types need a name; use ReprType::zero");
}

std::string ReprType::label() const {
    switch (kind_) {
        case Kind::I: return "I";
        case Kind::IIa: return "IIa";
        case Kind::IIb: return "IIb";
        case Kind::IIIaVIab: return "IIIa+VIa/b";
        case Kind::IVa: return "IVa";
        case Kind::Va: return "Va";
        case Kind::Vb: return "Vb";
        case Kind::VIc: return "VIc";
        case Kind::VIbP: return "VIb(P)";
        case Kind::VIbY: return "VIb(Y)";
        case Kind::Zero: return zero_name_;
    }
    return "?";
}

std::optional<ReprType> ReprType::parse(std::string_view text) {
    for (const ReprType& type : counted_types()) {
        if (text == type.label()) return type;
    }
    // aliases friendlier to shells than the canonical labels
    if (text == "IIIaVIab" || text == "IIIa+VIab") return ReprType(Kind::IIIaVIab);
    if (text == "VIbP") return ReprType(Kind::VIbP);
    if (text == "VIbY") return ReprType(Kind::VIbY);
    for (const ReprType& type : zero_types()) {
        if (text == type.label()) return type;
    }
    return std::nullopt;
}

const std::vector<ReprType>& ReprType::counted_types() {
    static const std::vector<ReprType> types = {
        ReprType(Kind::I),    ReprType(Kind::IIa), ReprType(Kind::IIb),
        ReprType(Kind::IIIaVIab), ReprType(Kind::IVa), ReprType(Kind::Va),
        ReprType(Kind::Vb),   ReprType(Kind::VIc), ReprType(Kind::VIbP),
        ReprType(Kind::VIbY),
    };
    return types;
}

const std::vector<ReprType>& ReprType::zero_types() {
    static const std::vector<ReprType> types = {
        ReprType::zero("IIIb"), ReprType::zero("IVb"), ReprType::zero("IVc"),
        ReprType::zero("IVd"),  ReprType::zero("Vd"),  ReprType::zero("VId"),
        ReprType::zero("(B)"),  ReprType::zero("(Q)"),
    };
    return types;
}

}  // namespace gsp4
