#include "vir/verma.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>

#include "vir/errors.hpp"

namespace vir {

std::string KacLabel::str() const {
    return "L[" + std::to_string(r) + "," + std::to_string(s) + "]";
}

CentralCharge::CentralCharge(bool symbolic, BigRat tv, Scalar t)
    : symbolic_(symbolic), t_value_(std::move(tv)), t_(std::move(t)) {
    c_ = Scalar(13) - Scalar(6) * t_ - Scalar(6) * t_.inverse();
}

CentralCharge CentralCharge::symbolic() {
    return CentralCharge(true, BigRat(0), Scalar::t());
}

CentralCharge CentralCharge::rational(const BigRat& t) {
    if (t == 0) throw InvalidT("t must be a nonzero rational");
    return CentralCharge(false, t, Scalar(t));
}

const BigRat& CentralCharge::t_value() const {
    if (symbolic_) throw std::logic_error("t_value: symbolic mode");
    return t_value_;
}

Scalar kac_h_signed(int r, int s, const CentralCharge& cc) {
    const Scalar& t = cc.t();
    return Scalar::frac(long(r) * r - 1, 4) * t - Scalar::frac(long(r) * s - 1, 2) +
           Scalar::frac(long(s) * s - 1, 4) * t.inverse();
}

Scalar kac_h(const KacLabel& label, const CentralCharge& cc) {
    return kac_h_signed(label.r, label.s, cc);
}

int Partition::level() const {
    int n = 0;
    for (int p : parts) n += p;
    return n;
}

std::string Partition::str() const {
    std::string s = "[";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + "]";
}

std::string Partition::monomial() const {
    if (parts.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < parts.size();) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (i) os << "*";
        os << "L[-" << parts[i] << "]";
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

namespace {

// Partitions of n with all parts <= maxpart, tails enumerated in basis order.
void gen_bounded(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition{cur});
        return;
    }
    for (int p = 1; p <= std::min(n, maxpart); ++p) {
        cur.push_back(p);
        gen_bounded(n - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

const std::vector<Partition>& partitions_of(int n) {
    // deque keeps references stable while the cache grows
    static std::deque<std::vector<Partition>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (n < 0) {
        static const std::vector<Partition> empty;
        return empty;
    }
    while (static_cast<int>(cache.size()) <= n) {
        const int m = static_cast<int>(cache.size());
        std::vector<Partition> out;
        std::vector<int> cur;
        // First part enumerated ascending, so [1,1,...] comes first; parts are
        // stored descending within each partition.
        for (int p = 1; p <= m; ++p) {
            std::vector<Partition> tails;
            std::vector<int> tcur;
            gen_bounded(m - p, p, tcur, tails);
            for (auto& t : tails) {
                Partition full;
                full.parts.reserve(t.parts.size() + 1);
                full.parts.push_back(p);
                for (int q : t.parts) full.parts.push_back(q);
                out.push_back(std::move(full));
            }
        }
        if (m == 0) out.push_back(Partition{});
        std::sort(out.begin(), out.end());
        cache.push_back(std::move(out));
    }
    return cache[n];
}

int partition_count(int n) { return static_cast<int>(partitions_of(n).size()); }

void VermaVector::add(const Partition& p, const Scalar& v) {
    if (v.is_zero()) return;
    auto it = coeffs.find(p);
    if (it == coeffs.end()) {
        coeffs.emplace(p, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) coeffs.erase(it);
}

namespace {

int g_level_bound = 12;

void check_level(int level) {
    if (level > level_bound())
        throw LevelTooLarge("level " + std::to_string(level) + " exceeds bound " +
                            std::to_string(level_bound()));
}

// L_{-i} L_{-J} |1> straightened into the PBW basis:
// if i < j_0, commute through with [L_{-i}, L_{-j0}] = (j0 - i) L_{-(i+j0)}.
VermaVector prepend(int i, const Partition& J) {
    if (J.parts.empty() || i >= J.parts[0]) {
        Partition out;
        out.parts.reserve(J.parts.size() + 1);
        out.parts.push_back(i);
        for (int q : J.parts) out.parts.push_back(q);
        VermaVector v;
        v.level = i + J.level();
        v.coeffs.emplace(std::move(out), Scalar(1));
        return v;
    }
    const int j0 = J.parts[0];
    Partition rest;
    rest.parts.assign(J.parts.begin() + 1, J.parts.end());

    VermaVector out;
    out.level = i + J.level();
    VermaVector a = prepend(i, rest);
    for (const auto& [k, coef] : a.coeffs) {
        VermaVector b = prepend(j0, k);
        for (const auto& [k2, coef2] : b.coeffs) out.add(k2, coef * coef2);
    }
    VermaVector c = prepend(i + j0, rest);
    const Scalar f(j0 - i);
    for (const auto& [k, coef] : c.coeffs) out.add(k, f * coef);
    return out;
}

// L_n L_{-J} |1> for any mode n, expanded in the PBW basis at level |J| - n.
// Uses [L_n, L_{-j0}] = (n + j0) L_{n-j0} + delta_{n,j0} (n^3-n)/12 c.
VermaVector act(int n, const Partition& J, const Scalar& h, const CentralCharge& cc) {
    VermaVector out;
    out.level = J.level() - n;
    if (J.parts.empty()) {
        if (n > 0) return out;
        if (n == 0) {
            out.add(J, h);
            return out;
        }
        Partition p;
        p.parts.push_back(-n);
        out.add(p, Scalar(1));
        return out;
    }
    if (n < 0) return prepend(-n, J);
    if (n == 0) {
        out.add(J, h + Scalar(J.level()));
        return out;
    }
    const int j0 = J.parts[0];
    Partition rest;
    rest.parts.assign(J.parts.begin() + 1, J.parts.end());

    VermaVector a = act(n, rest, h, cc);
    for (const auto& [k, coef] : a.coeffs) {
        VermaVector b = prepend(j0, k);
        for (const auto& [k2, coef2] : b.coeffs) out.add(k2, coef * coef2);
    }
    VermaVector b = act(n - j0, rest, h, cc);
    const Scalar f(n + j0);
    for (const auto& [k, coef] : b.coeffs) out.add(k, f * coef);
    if (n == j0) {
        BigRat central(long(n) * n * n - n, 12);
        central.canonicalize();
        const Scalar f2 = Scalar(central) * cc.c();
        out.add(rest, f2);
    }
    return out;
}

Scalar gram_entry(const Partition& row, const Partition& col, const Scalar& h,
                  const CentralCharge& cc) {
    // <L_{-J}|1>, L_{-I}|1>> = highest-weight component of L_{j_n}...L_{j_1}
    // applied to L_{-I}|1>; the rightmost factor L_{j_1} (largest part) acts
    // first.
    VermaVector v;
    v.level = col.level();
    v.coeffs.emplace(col, Scalar(1));
    for (int j : row.parts) {
        VermaVector next;
        next.level = v.level - j;
        for (const auto& [k, coef] : v.coeffs) {
            VermaVector w = act(j, k, h, cc);
            for (const auto& [k2, coef2] : w.coeffs) next.add(k2, coef * coef2);
        }
        v = std::move(next);
        if (v.is_zero()) return Scalar(0);
    }
    auto it = v.coeffs.find(Partition{});
    return it == v.coeffs.end() ? Scalar(0) : it->second;
}

ExactMatrix gram_fill(int level, const Scalar& h, const CentralCharge& cc, bool parallel) {
    check_level(level);
    const auto& basis = partitions_of(level);
    const int n = static_cast<int>(basis.size());
    ExactMatrix g(n, n);
    // Upper triangle flattened, symmetric fill.
    const int total = n * (n + 1) / 2;
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int k = 0; k < total; ++k) {
            int i = 0;
            int rem = k;
            while (rem >= n - i) {
                rem -= n - i;
                ++i;
            }
            const int j = i + rem;
            Scalar e = gram_entry(basis[i], basis[j], h, cc);
            g.at(i, j) = e;
            if (i != j) g.at(j, i) = std::move(e);
        }
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                Scalar e = gram_entry(basis[i], basis[j], h, cc);
                g.at(i, j) = e;
                if (i != j) g.at(j, i) = std::move(e);
            }
    }
    return g;
}

}  // namespace

int level_bound() { return g_level_bound; }

void set_level_bound(int bound) { g_level_bound = bound; }

VermaVector lower_action(int m, const VermaVector& v) {
    VermaVector out;
    out.level = v.level + m;
    for (const auto& [k, coef] : v.coeffs) {
        VermaVector w = prepend(m, k);
        for (const auto& [k2, coef2] : w.coeffs) out.add(k2, coef * coef2);
    }
    return out;
}

VermaVector raise_action(int m, const VermaVector& v, const Scalar& h,
                         const CentralCharge& cc) {
    VermaVector out;
    out.level = v.level - m;
    for (const auto& [k, coef] : v.coeffs) {
        VermaVector w = act(m, k, h, cc);
        for (const auto& [k2, coef2] : w.coeffs) out.add(k2, coef * coef2);
    }
    return out;
}

ExactMatrix raise_matrix(int m, int level, const Scalar& h, const CentralCharge& cc) {
    check_level(level);
    const auto& cols = partitions_of(level);
    const auto& rows = partitions_of(level - m);
    std::map<Partition, int> row_index;
    for (size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], static_cast<int>(i));

    ExactMatrix a(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
        VermaVector w = act(m, cols[j], h, cc);
        for (const auto& [k, coef] : w.coeffs) a.at(row_index.at(k), static_cast<int>(j)) = coef;
    }
    return a;
}

ExactMatrix gram_matrix(int level, const Scalar& h, const CentralCharge& cc) {
    return gram_fill(level, h, cc, true);
}

ExactMatrix gram_matrix_serial(int level, const Scalar& h, const CentralCharge& cc) {
    return gram_fill(level, h, cc, false);
}

VermaVector singular_vector(const KacLabel& label, const CentralCharge& cc) {
    const int level = label.r * label.s;
    check_level(level);
    const Scalar h = kac_h(label, cc);
    ExactMatrix stacked = ExactMatrix::vstack(raise_matrix(1, level, h, cc),
                                              raise_matrix(2, level, h, cc));
    auto basis = stacked.kernel();
    if (basis.empty())
        throw NoSingularVector("no singular vector at level " + std::to_string(level) +
                               " for " + label.str());
    if (basis.size() > 1)
        throw AmbiguousKernel("kernel dimension " + std::to_string(basis.size()) +
                              " at level " + std::to_string(level) + " for " + label.str());

    const auto& parts = partitions_of(level);
    // (1,...,1) is the first basis partition; normalize its coefficient to 1.
    const Scalar& lead = basis[0][0];
    if (lead.is_zero())
        throw NoSingularVector("singular vector has zero L[-1]^" + std::to_string(level) +
                               " coefficient");
    VermaVector v;
    v.level = level;
    const Scalar inv = lead.inverse();
    for (size_t j = 0; j < parts.size(); ++j) v.add(parts[j], basis[0][j] * inv);
    return v;
}

std::vector<std::pair<int, int>> detect_singular_levels(const Scalar& h,
                                                        const CentralCharge& cc,
                                                        int maxlevel) {
    check_level(maxlevel);
    std::vector<std::pair<int, int>> out;
    for (int n = 1; n <= maxlevel; ++n) {
        ExactMatrix stacked =
            ExactMatrix::vstack(raise_matrix(1, n, h, cc), raise_matrix(2, n, h, cc));
        out.emplace_back(n, static_cast<int>(stacked.kernel().size()));
    }
    return out;
}

}  // namespace vir
