#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vir/fusion.hpp"

namespace vir {

// A phase e^{2*pi*i*alpha} represented exactly by its exponent alpha in Q(t).
// Two exponents give the same phase for all generic t iff they differ by a
// constant integer.
struct PhaseExponent {
    Scalar value;

    bool is_trivial() const { return value.is_integer_constant(); }
    bool phase_equal(const PhaseExponent& o) const {
        return (value - o.value).is_integer_constant();
    }
    friend bool operator==(const PhaseExponent&, const PhaseExponent&) = default;
};

// Twist: the action of e^{2*pi*i*L_0} on L_{r,s}, i.e. exponent h_{r,s}(t).
PhaseExponent twist_exponent(const KacLabel& a, const CentralCharge& cc);

// Monodromy eigenvalue exponents from the balancing relation: on each fusion
// summand Z of T x X the double braiding acts by e^{2*pi*i (h_Z - h_T - h_X)}.
std::vector<std::pair<KacLabel, PhaseExponent>> monodromy_exponents(
    const KacLabel& T, const KacLabel& X, const CentralCharge& cc);

struct TransparencyWitness {
    KacLabel x;
    KacLabel summand;
    PhaseExponent exponent;
};

struct TransparencyResult {
    bool transparent;
    std::optional<TransparencyWitness> witness;
};

// Tests monodromy triviality against the generators L_{1,2} and L_{2,1}
// (every simple is a fusion product of these, and monodromy is multiplicative
// in the second argument, so the generators suffice).
TransparencyResult is_transparent(const KacLabel& T, const CentralCharge& cc);

struct ScanReport {
    int window = 0;
    std::vector<KacLabel> transparent;
    std::vector<std::pair<KacLabel, TransparencyWitness>> witnesses;
    // Non-degeneracy at window scale: only the unit is transparent.
    bool ok() const {
        return transparent.size() == 1 && transparent[0] == KacLabel{1, 1};
    }
};

ScanReport nondegeneracy_scan(int window, const CentralCharge& cc);

}  // namespace vir
