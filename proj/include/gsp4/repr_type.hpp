#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gsp4 {

// A counted Iwahori-spherical representation type, or a named type whose
// multiplicity is identically zero (never-unitary types, one-dimensionals, and
// the packet types (B) and (Q)). The family Vc is a twist of Vb and is not
// carried as a separate type.
class ReprType {
public:
    enum class Kind {
        I,
        IIa,
        IIb,
        IIIaVIab,  // the combined count IIIa + VIa/b
        IVa,
        Va,
        Vb,
        VIc,
        VIbP,  // Saito-Kurokawa packet part of VIb
        VIbY,  // Yoshida packet part of VIb
        Zero,  // forced-zero type, identified by zero_name()
    };

    ReprType(Kind kind) : kind_(kind) {
        if (kind == Kind::Zero) throw_zero_needs_name();
    }
    static ReprType zero(std::string name);

    Kind kind() const { return kind_; }
    const std::string& zero_name() const { return zero_name_; }

    bool is_zero_type() const { return kind_ == Kind::Zero; }
    // the five generic (type (G)) families
    bool is_generic() const {
        return kind_ == Kind::I || kind_ == Kind::IIa || kind_ == Kind::IIIaVIab ||
               kind_ == Kind::IVa || kind_ == Kind::Va;
    }
    // types tied to the Saito-Kurokawa / Yoshida lifting relations
    bool is_lift() const {
        return kind_ == Kind::IIb || kind_ == Kind::Vb || kind_ == Kind::VIc ||
               kind_ == Kind::VIbP || kind_ == Kind::VIbY;
    }

    // canonical display label, e.g. "IIIa+VIa/b", "VIb(P)"
    std::string label() const;

    static std::optional<ReprType> parse(std::string_view text);

    // the ten counted types, in table order
    static const std::vector<ReprType>& counted_types();
    // the forced-zero names: IIIb, IVb, IVc, IVd, Vd, VId, (B), (Q)
    static const std::vector<ReprType>& zero_types();

    friend bool operator==(const ReprType& a, const ReprType& b) {
        return a.kind_ == b.kind_ && a.zero_name_ == b.zero_name_;
    }

private:
    Kind kind_;
    std::string zero_name_;

    ReprType(Kind kind, std::string name) : kind_(kind), zero_name_(std::move(name)) {}
    [[noreturn]] static void throw_zero_needs_name();
};

}  // namespace gsp4
