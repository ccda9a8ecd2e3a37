#pragma once
// Formats the modular identity implied by a certified divergence. No module theory is done
// here; the statement is read off a torsion-probe report.

#include <cstdint>
#include <string>

#include "klrtor/bmp/probe.hpp"

namespace klrtor {

struct StratumLabel {
    std::string name;
    Permutation perm; // vertex of the probed moment graph
};

struct ModularIdentity {
    StratumLabel lower; // smaller stratum, where the divergence sits
    StratumLabel upper;
    std::uint32_t p = 0;
    std::string grothendieck; // class equation after reduction mod p
    std::string geometric;    // splitting of the parity sheaf after extension of scalars
};

inline ModularIdentity predicted_modular_identity(const bmp::ComparisonReport& report, const StratumLabel& lower, const StratumLabel& upper) {
    if (report.verdict != bmp::Verdict::Divergent)
        throw DomainError("predicted_modular_identity: no torsion certified (verdict " + bmp::to_string(report.verdict) + ")");
    if (lower.perm == upper.perm || !bruhat_leq(lower.perm, upper.perm))
        throw DomainError("predicted_modular_identity: closure order violated, " + lower.name + " is not strictly below " + upper.name);
    if (!report.divergent_at_vertex(lower.perm))
        throw DomainError("predicted_modular_identity: no torsion certified at " + lower.name + " (" + lower.perm.to_string() + ")");
    if (!(upper.perm == report.w))
        throw DomainError("predicted_modular_identity: " + upper.name + " must label the top of the probed interval");

    ModularIdentity id{lower, upper, report.p, {}, {}};
    const std::string p = std::to_string(report.p);
    id.grothendieck = "[L(" + lower.name + ", Z_" + p + ") ⊗ F_" + p + "] = [L(" + lower.name + ", F_" + p + ")] + [L(" + upper.name +
                      ", F_" + p + ")]";
    id.geometric = "E(" + upper.name + ", Z_" + p + ") ⊗ Q_" + p + " ≅ IC(" + upper.name + ") ⊕ IC(" + lower.name + ")";
    return id;
}

} // namespace klrtor
