#pragma once

#include <vector>

#include "vir/scalar.hpp"

namespace vir {

// Dense matrix over Q(t).  Kernel bases are canonical (the RREF null-space
// basis over the free columns), so independent elimination routes agree
// entry-for-entry.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Scalar& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    static ExactMatrix vstack(const ExactMatrix& top, const ExactMatrix& bottom);

    std::vector<Scalar> mul_vec(const std::vector<Scalar>& v) const;

    // Fraction-free Bareiss elimination on denominator-cleared rows, pivot
    // chosen by smallest polynomial size, row updates OpenMP-parallel.
    // Returns the canonical null-space basis; empty iff full column rank.
    std::vector<std::vector<Scalar>> kernel() const;

    // Textbook Gauss-Jordan over Q(t) field arithmetic.  Kept as the serial
    // reference: an independent elimination route producing the same
    // canonical basis.
    std::vector<std::vector<Scalar>> kernel_serial() const;

    int rank() const;

    Scalar det() const;         // Bareiss, fraction-free
    Scalar det_serial() const;  // cofactor expansion reference (small n)

    bool operator==(const ExactMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    int rows_, cols_;
    std::vector<Scalar> a_;
};

}  // namespace vir
