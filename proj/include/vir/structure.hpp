#pragma once

#include <vector>

#include "vir/verma.hpp"

namespace vir {

// Shape of the embedding diagram of V_{r,s}: a single embedded Verma for
// generic t, chains or braids (infinite for t > 0, finite for t < 0) at
// rational t.
enum class EmbeddingShape { GenericPair, ChainInfinite, BraidInfinite, ChainFinite, BraidFinite };

const char* shape_name(EmbeddingShape s);

struct HcQuery {
    Scalar h;
    std::vector<KacLabel> matches;
};

// All labels (r,s) in the window with h_{r,s} = h; at most one in symbolic
// mode.
HcQuery kac_labels_of(const Scalar& h, const CentralCharge& cc, int rmax, int smax);

// Classification per the Feigin-Fuchs embedding structure.  Throws InvalidT
// only through CentralCharge construction (t = 0 is unrepresentable here).
EmbeddingShape embedding_shape(const KacLabel& label, const CentralCharge& cc);

// dim L_{r,s} / C_1(L_{r,s}) in symbolic mode, computed level-by-level: at
// each level m < rs, decide by exact linear algebra whether L_{-1}^m |1> lies
// in sum_{n>=2} L_{-n} (level m-n).  Below level rs the quotient by the
// singular submodule agrees with the Verma module, so the check runs there.
int c1_quotient_dim(const KacLabel& label, const CentralCharge& cc);

// q^0..q^order coefficients of (1 - q^{rs}) / prod_{n>=1} (1-q^n): the graded
// dimension of L_{r,s} above its ground state for generic t.
std::vector<long long> generic_simple_character(const KacLabel& label, int order);

// Partition numbers p(0..upto).
std::vector<long long> partition_numbers(int upto);

}  // namespace vir
