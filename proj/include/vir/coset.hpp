#pragma once

#include <map>
#include <string>
#include <vector>

#include "vir/scalar.hpp"

namespace vir {

// Two-variable truncated characters for the sl2 GKO coset check.  Weights are
// integers (simple root = 2); each weight sector carries a base exponent in
// Q(l) (the indeterminate printed as "l") and integer coefficients for
// q^0..q^order above it.
struct CharSector {
    Scalar base;
    std::vector<long long> coeffs;
};

struct CharSeries {
    int order = 0;
    std::map<int, CharSector> sectors;
};

// Sugawara ground energy of the level-l generalized Verma with sl2 weight mu,
// shifted to level l+shift: mu(mu+2) / (4(l+2+shift)).
Scalar sugawara_delta(int mu, int level_shift);

// Character of the generalized Verma V_l(mu): chi_mu(z) q^{Delta_mu(l)} over
// prod_{n>=1} (1-q^n)(1-z^2 q^n)(1-z^-2 q^n).
CharSeries affine_verma_char(int mu, int order);

// Character of the level-one simple L_1(lambda), lambda in {0,1}: the lattice
// form sum_{m in Z+lambda/2} z^{2m} q^{m^2} / prod (1-q^n), base lambda^2/4.
CharSeries level_one_char(int lambda, int order);

// Virasoro t-parameter used to label coset modules: t = (l+3)/(l+2).
Scalar coset_t_param();

struct SectorVerdict {
    int nu;
    bool exponent_ok;
    int match_order;  // coefficients agree up to this q-order
};

struct BranchingReport {
    int lambda = 0;
    int mu = 0;
    int order = 0;
    bool pass = false;
    std::vector<SectorVerdict> verdicts;
    std::string diagnostic;  // set when extraction aborts
};

// Verifies the sl2 coset branching L_1(lambda) (x) V_l(mu) =
// (+)_nu V_{l+1}(nu) (x) L_{mu+1,nu+1} at the character level, with the
// common affine denominator cancelled.  Per sector: (i) the base-exponent
// identity in Q(l), (ii) integer coefficient equality through q^order.
// Sector checks run OpenMP-parallel; verify_coset_serial is the plain
// reference.  Throws OrderTooLarge above order 64.
BranchingReport verify_coset(int lambda, int mu, int order);
BranchingReport verify_coset_serial(int lambda, int mu, int order);

}  // namespace vir
