#include "vir/structure.hpp"

#include "vir/errors.hpp"

namespace vir {

const char* shape_name(EmbeddingShape s) {
    switch (s) {
        case EmbeddingShape::GenericPair: return "GenericPair";
        case EmbeddingShape::ChainInfinite: return "ChainInfinite";
        case EmbeddingShape::BraidInfinite: return "BraidInfinite";
        case EmbeddingShape::ChainFinite: return "ChainFinite";
        case EmbeddingShape::BraidFinite: return "BraidFinite";
    }
    return "?";
}

HcQuery kac_labels_of(const Scalar& h, const CentralCharge& cc, int rmax, int smax) {
    HcQuery q{h, {}};
    for (int r = 1; r <= rmax; ++r)
        for (int s = 1; s <= smax; ++s)
            if (kac_h_signed(r, s, cc) == h) q.matches.push_back({r, s});
    return q;
}

EmbeddingShape embedding_shape(const KacLabel& label, const CentralCharge& cc) {
    if (cc.is_symbolic()) return EmbeddingShape::GenericPair;
    const BigRat& t = cc.t_value();
    if (t == 0) throw InvalidT("t must be nonzero");
    // t = +-q/p in lowest terms; chain if r is a multiple of p or s a multiple
    // of q, braid otherwise; infinite diagrams for t > 0, finite for t < 0.
    BigInt q = t.get_num();
    if (q < 0) q = -q;
    const BigInt& p = t.get_den();
    const bool chain = mpz_divisible_p(BigInt(label.r).get_mpz_t(), p.get_mpz_t()) ||
                       mpz_divisible_p(BigInt(label.s).get_mpz_t(), q.get_mpz_t());
    if (t > 0) return chain ? EmbeddingShape::ChainInfinite : EmbeddingShape::BraidInfinite;
    return chain ? EmbeddingShape::ChainFinite : EmbeddingShape::BraidFinite;
}

namespace {

// Span of C_1 at level m of the Verma module: columns L_{-n} L_{-I} |1> for
// n = 2..m, I a partition of m-n.
ExactMatrix c1_span_matrix(int m) {
    const auto& basis = partitions_of(m);
    std::map<Partition, int> row_index;
    for (size_t i = 0; i < basis.size(); ++i) row_index.emplace(basis[i], static_cast<int>(i));

    std::vector<VermaVector> cols;
    for (int n = 2; n <= m; ++n) {
        for (const auto& tail : partitions_of(m - n)) {
            VermaVector v;
            v.level = m - n;
            v.coeffs.emplace(tail, Scalar(1));
            cols.push_back(lower_action(n, v));
        }
    }
    ExactMatrix a(static_cast<int>(basis.size()), static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (const auto& [k, coef] : cols[j].coeffs)
            a.at(row_index.at(k), static_cast<int>(j)) = coef;
    return a;
}

}  // namespace

int c1_quotient_dim(const KacLabel& label, const CentralCharge& cc) {
    if (!cc.is_symbolic())
        throw NonGenericMode("C_1-quotient dimensions are computed in symbolic mode only");
    const int level = label.r * label.s;
    if (level > level_bound())
        throw LevelTooLarge("rs = " + std::to_string(level) + " exceeds bound " +
                            std::to_string(level_bound()));
    int dim = 0;
    for (int m = 0; m < level; ++m) {
        ExactMatrix span = c1_span_matrix(m);
        if (span.cols() == 0) {
            ++dim;  // no C_1 vectors at this level at all
            continue;
        }
        // L_{-1}^m |1> is the first basis vector; test membership by rank.
        ExactMatrix aug(span.rows(), span.cols() + 1);
        for (int i = 0; i < span.rows(); ++i)
            for (int j = 0; j < span.cols(); ++j) aug.at(i, j) = span.at(i, j);
        aug.at(0, span.cols()) = Scalar(1);
        if (aug.rank() > span.rank()) ++dim;
    }
    return dim;
}

std::vector<long long> partition_numbers(int upto) {
    // p(n) by the restricted-part recurrence: add parts 1..upto one at a time.
    std::vector<long long> p(upto + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= upto; ++part)
        for (int n = part; n <= upto; ++n) p[n] += p[n - part];
    return p;
}

std::vector<long long> generic_simple_character(const KacLabel& label, int order) {
    const long long rs = static_cast<long long>(label.r) * label.s;
    const auto p = partition_numbers(order);
    std::vector<long long> out(order + 1);
    for (int n = 0; n <= order; ++n)
        out[n] = p[n] - (n >= rs ? p[n - rs] : 0);
    return out;
}

}  // namespace vir
