#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vir/matrix.hpp"
#include "vir/scalar.hpp"

namespace vir {

// A Kac label (r,s), r,s >= 1, naming the Verma module V_{r,s} of highest
// weight h_{r,s}(t) and its simple quotient L_{r,s}.
struct KacLabel {
    int r;
    int s;
    friend bool operator==(const KacLabel&, const KacLabel&) = default;
    friend auto operator<=>(const KacLabel&, const KacLabel&) = default;
    std::string str() const;
};

// Central charge c = 13 - 6t - 6/t, with t either the indeterminate of Q(t)
// (symbolic mode, modelling generic/irrational t) or a fixed nonzero rational.
class CentralCharge {
public:
    static CentralCharge symbolic();
    static CentralCharge rational(const BigRat& t);  // throws InvalidT if t = 0

    bool is_symbolic() const { return symbolic_; }
    const BigRat& t_value() const;  // rational mode only
    const Scalar& t() const { return t_; }
    const Scalar& c() const { return c_; }

private:
    CentralCharge(bool symbolic, BigRat tv, Scalar t);
    bool symbolic_;
    BigRat t_value_;
    Scalar t_;
    Scalar c_;
};

// h_{r,s}(t) = (r^2-1)/4 t - (rs-1)/2 + (s^2-1)/4 t^{-1}.  The signed variant
// accepts any integers (the formula extends to the h_{-r,s} etc. used
// internally by the structure and fusion analysis).
Scalar kac_h(const KacLabel& label, const CentralCharge& cc);
Scalar kac_h_signed(int r, int s, const CentralCharge& cc);

// A partition i_1 >= ... >= i_n >= 1 indexing the PBW monomial
// L_{-i_1} ... L_{-i_n} |1>.  Within a level, basis order is the
// lexicographic order of the descending part-lists ([1,1] < [2]).
struct Partition {
    std::vector<int> parts;
    int level() const;
    friend bool operator==(const Partition&, const Partition&) = default;
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
    std::string str() const;       // bracketed descending list, e.g. [2,1,1]
    std::string monomial() const;  // e.g. L[-2]*L[-1]^2; L[-0]... empty = "1"
};

// All partitions of n in basis order.
const std::vector<Partition>& partitions_of(int n);
int partition_count(int n);

// Homogeneous element of a Verma module at a fixed level: map from partitions
// of that level to Q(t) coefficients, zeros not stored.
struct VermaVector {
    int level = 0;
    std::map<Partition, Scalar> coeffs;

    void add(const Partition& p, const Scalar& v);
    bool is_zero() const { return coeffs.empty(); }
    friend bool operator==(const VermaVector&, const VermaVector&) = default;
};

// Configurable cap on the levels at which PBW bases are materialized
// (default 12, p(12) = 77 monomials).
int level_bound();
void set_level_bound(int bound);

// L_{-m} v, straightened into the PBW basis (m >= 1).
VermaVector lower_action(int m, const VermaVector& v);

// L_m v for m >= 1, via iterated commutators and the highest-weight rules
// L_n|1> = 0 (n > 0), L_0|1> = h|1>.
VermaVector raise_action(int m, const VermaVector& v, const Scalar& h, const CentralCharge& cc);

// Matrix of L_m : level N -> level N-m in the PBW bases (columns indexed by
// partitions of N, rows by partitions of N-m).
ExactMatrix raise_matrix(int m, int level, const Scalar& h, const CentralCharge& cc);

// Shapovalov pairings <L_{-J}|1>, L_{-I}|1>> at the given level; symmetric,
// entries computed by fully raising one monomial against the other.
// gram_matrix fills entries OpenMP-parallel; gram_matrix_serial is the plain
// reference.  Throws LevelTooLarge beyond the configured bound.
ExactMatrix gram_matrix(int level, const Scalar& h, const CentralCharge& cc);
ExactMatrix gram_matrix_serial(int level, const Scalar& h, const CentralCharge& cc);

// The singular vector of V_{r,s} at level rs: the joint kernel of the L_1 and
// L_2 raising maps, normalized so the coefficient of (1,...,1) is exactly 1.
// Throws NoSingularVector / AmbiguousKernel if the kernel dimension is not 1.
VermaVector singular_vector(const KacLabel& label, const CentralCharge& cc);

// For each level N = 1..maxlevel, the dimension of the space of singular
// vectors at level N in V(c,h).
std::vector<std::pair<int, int>> detect_singular_levels(const Scalar& h,
                                                        const CentralCharge& cc,
                                                        int maxlevel);

}  // namespace vir
