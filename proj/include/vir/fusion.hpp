#pragma once

#include <map>
#include <string>
#include <vector>

#include "vir/bipoly.hpp"
#include "vir/verma.hpp"

namespace vir {

// Semisimple fusion decomposition: multiset of Kac labels with
// multiplicities.
struct FusionDecomp {
    std::map<KacLabel, int> terms;

    void add(const KacLabel& l, int mult = 1);
    int summand_count() const;  // with multiplicity
    friend bool operator==(const FusionDecomp&, const FusionDecomp&) = default;
    std::string str() const;
};

enum class GSide { Row, Col };

// The quadratic Zhu-bimodule factors:
//   g'_r(x,y) = (x-y-h_{r,1})(x-y-h_{-(r-2),1}) - (r-1)^2 t y   (row)
//   g_s(x,y)  = (x-y-h_{1,s})(x-y-h_{1,-(s-2)}) - (s-1)^2 t^{-1} y (col)
// with g_1 = g'_1 = x - y.
BiPoly g_poly(int index, GSide side, const CentralCharge& cc);

// f_{r,1} = g'_r g'_{r-2} ... (down to g'_2 or g'_1), and f_{1,s} likewise on
// the column side.
BiPoly f_poly(int index, GSide side, const CentralCharge& cc);

struct ZhuPolys {
    BiPoly g_row, g_col, f_row, f_col;
};
ZhuPolys zhu_polys(int r, int s, const CentralCharge& cc);

// All (r',s') in the window with f_{r,1}(h_{r',s'}, h_{1,s}) = 0 and
// f_{1,s}(h_{r',s'}, h_{r,1}) = 0, evaluated exactly over Q(t).
std::vector<KacLabel> fz_candidates(int r, int s, int window, const CentralCharge& cc);

// Generic fusion product L_{r1,s1} x L_{r2,s2}: labels range over
// |r1-r2|+1 .. r1+r2-1 and |s1-s2|+1 .. s1+s2-1 in steps of 2, each with
// multiplicity 1.  Throws NonGenericMode for rational t.
FusionDecomp fuse(const KacLabel& a, const KacLabel& b, const CentralCharge& cc);
FusionDecomp fuse(const FusionDecomp& a, const FusionDecomp& b, const CentralCharge& cc);

struct RingReport {
    int window = 0;
    int labels = 0;
    long triples = 0;
    bool unit_ok = false;
    bool commutative = false;
    bool associative = false;
    bool counts_ok = false;
    std::string failure;  // empty on success
    bool ok() const { return unit_ok && commutative && associative && counts_ok; }
};

// Exhaustive unit/commutativity/associativity/summand-count check over all
// labels with r,s <= window.
RingReport verify_ring(int window, const CentralCharge& cc);

}  // namespace vir
