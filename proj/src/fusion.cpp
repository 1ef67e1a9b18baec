#include "vir/fusion.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "vir/errors.hpp"

namespace vir {

void FusionDecomp::add(const KacLabel& l, int mult) {
    terms[l] += mult;
}

int FusionDecomp::summand_count() const {
    int n = 0;
    for (const auto& [l, m] : terms) n += m;
    return n;
}

std::string FusionDecomp::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [l, m] : terms) {
        if (!first) os << " + ";
        first = false;
        if (m != 1) os << m << "*";
        os << l.str();
    }
    return os.str();
}

BiPoly g_poly(int index, GSide side, const CentralCharge& cc) {
    const BiPoly x = BiPoly::x();
    const BiPoly y = BiPoly::y();
    if (index == 1) return x - y;
    const long k = index - 1;
    if (side == GSide::Row) {
        BiPoly a = x - y - BiPoly::constant(kac_h_signed(index, 1, cc));
        BiPoly b = x - y - BiPoly::constant(kac_h_signed(-(index - 2), 1, cc));
        return a * b - BiPoly::constant(Scalar(k * k) * cc.t()) * y;
    }
    BiPoly a = x - y - BiPoly::constant(kac_h_signed(1, index, cc));
    BiPoly b = x - y - BiPoly::constant(kac_h_signed(1, -(index - 2), cc));
    return a * b - BiPoly::constant(Scalar(k * k) * cc.t().inverse()) * y;
}

BiPoly f_poly(int index, GSide side, const CentralCharge& cc) {
    BiPoly f = BiPoly::constant(Scalar(1));
    for (int j = index; j >= 1; j -= 2) f = f * g_poly(j, side, cc);
    return f;
}

ZhuPolys zhu_polys(int r, int s, const CentralCharge& cc) {
    return ZhuPolys{g_poly(r, GSide::Row, cc), g_poly(s, GSide::Col, cc),
                    f_poly(r, GSide::Row, cc), f_poly(s, GSide::Col, cc)};
}

std::vector<KacLabel> fz_candidates(int r, int s, int window, const CentralCharge& cc) {
    const BiPoly f_row = f_poly(r, GSide::Row, cc);
    const BiPoly f_col = f_poly(s, GSide::Col, cc);
    const Scalar h_1s = kac_h_signed(1, s, cc);
    const Scalar h_r1 = kac_h_signed(r, 1, cc);

    std::vector<KacLabel> out;
    for (int rp = 1; rp <= window; ++rp)
        for (int sp = 1; sp <= window; ++sp) {
            const Scalar x0 = kac_h_signed(rp, sp, cc);
            if (f_row.eval(x0, h_1s).is_zero() && f_col.eval(x0, h_r1).is_zero())
                out.push_back({rp, sp});
        }
    return out;
}

FusionDecomp fuse(const KacLabel& a, const KacLabel& b, const CentralCharge& cc) {
    if (!cc.is_symbolic())
        throw NonGenericMode("fusion rules are proven for generic central charge only");
    FusionDecomp d;
    for (int r = std::abs(a.r - b.r) + 1; r <= a.r + b.r - 1; r += 2)
        for (int s = std::abs(a.s - b.s) + 1; s <= a.s + b.s - 1; s += 2)
            d.add({r, s});
    return d;
}

FusionDecomp fuse(const FusionDecomp& a, const FusionDecomp& b, const CentralCharge& cc) {
    FusionDecomp d;
    for (const auto& [la, ma] : a.terms)
        for (const auto& [lb, mb] : b.terms) {
            FusionDecomp p = fuse(la, lb, cc);
            for (const auto& [l, m] : p.terms) d.add(l, m * ma * mb);
        }
    return d;
}

RingReport verify_ring(int window, const CentralCharge& cc) {
    RingReport rep;
    rep.window = window;
    std::vector<KacLabel> labels;
    for (int r = 1; r <= window; ++r)
        for (int s = 1; s <= window; ++s) labels.push_back({r, s});
    rep.labels = static_cast<int>(labels.size());

    const KacLabel unit{1, 1};
    rep.unit_ok = true;
    for (const auto& l : labels) {
        FusionDecomp expect;
        expect.add(l);
        if (fuse(unit, l, cc) != expect || fuse(l, unit, cc) != expect) {
            rep.unit_ok = false;
            rep.failure = "unit law fails at " + l.str();
            return rep;
        }
    }

    rep.commutative = true;
    rep.counts_ok = true;
    for (const auto& a : labels)
        for (const auto& b : labels) {
            const FusionDecomp ab = fuse(a, b, cc);
            if (ab != fuse(b, a, cc)) {
                rep.commutative = false;
                rep.failure = "commutativity fails at " + a.str() + " x " + b.str();
                return rep;
            }
            if (ab.summand_count() != std::min(a.r, b.r) * std::min(a.s, b.s)) {
                rep.counts_ok = false;
                rep.failure = "summand count off at " + a.str() + " x " + b.str();
                return rep;
            }
        }

    rep.associative = true;
    for (const auto& a : labels)
        for (const auto& b : labels)
            for (const auto& c : labels) {
                ++rep.triples;
                FusionDecomp da;
                da.add(a);
                FusionDecomp db;
                db.add(b);
                FusionDecomp dc;
                dc.add(c);
                if (fuse(fuse(da, db, cc), dc, cc) != fuse(da, fuse(db, dc, cc), cc)) {
                    rep.associative = false;
                    rep.failure = "associativity fails at (" + a.str() + ", " + b.str() +
                                  ", " + c.str() + ")";
                    return rep;
                }
            }
    return rep;
}

}  // namespace vir
