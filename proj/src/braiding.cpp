#include "vir/braiding.hpp"

#include "vir/errors.hpp"

namespace vir {

PhaseExponent twist_exponent(const KacLabel& a, const CentralCharge& cc) {
    return PhaseExponent{kac_h(a, cc)};
}

std::vector<std::pair<KacLabel, PhaseExponent>> monodromy_exponents(
    const KacLabel& T, const KacLabel& X, const CentralCharge& cc) {
    if (!cc.is_symbolic())
        throw NonGenericMode("monodromy data is defined in symbolic mode only");
    const Scalar base = kac_h(T, cc) + kac_h(X, cc);
    std::vector<std::pair<KacLabel, PhaseExponent>> out;
    for (const auto& [z, mult] : fuse(T, X, cc).terms)
        out.emplace_back(z, PhaseExponent{kac_h(z, cc) - base});
    return out;
}

TransparencyResult is_transparent(const KacLabel& T, const CentralCharge& cc) {
    for (const KacLabel& x : {KacLabel{1, 2}, KacLabel{2, 1}}) {
        for (const auto& [z, e] : monodromy_exponents(T, x, cc))
            if (!e.is_trivial()) return {false, TransparencyWitness{x, z, e}};
    }
    return {true, std::nullopt};
}

ScanReport nondegeneracy_scan(int window, const CentralCharge& cc) {
    ScanReport rep;
    rep.window = window;
    for (int r = 1; r <= window; ++r)
        for (int s = 1; s <= window; ++s) {
            const KacLabel l{r, s};
            TransparencyResult res = is_transparent(l, cc);
            if (res.transparent)
                rep.transparent.push_back(l);
            else
                rep.witnesses.emplace_back(l, *res.witness);
        }
    return rep;
}

}  // namespace vir
