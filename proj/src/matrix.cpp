#include "vir/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace vir {

ExactMatrix ExactMatrix::vstack(const ExactMatrix& top, const ExactMatrix& bottom) {
    if (top.cols_ != bottom.cols_ && top.rows_ != 0 && bottom.rows_ != 0)
        throw std::logic_error("vstack: column mismatch");
    const int cols = top.rows_ != 0 ? top.cols_ : bottom.cols_;
    ExactMatrix r(top.rows_ + bottom.rows_, cols);
    for (int i = 0; i < top.rows_; ++i)
        for (int j = 0; j < cols; ++j) r.at(i, j) = top.at(i, j);
    for (int i = 0; i < bottom.rows_; ++i)
        for (int j = 0; j < cols; ++j) r.at(top.rows_ + i, j) = bottom.at(i, j);
    return r;
}

std::vector<Scalar> ExactMatrix::mul_vec(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::logic_error("mul_vec: size mismatch");
    std::vector<Scalar> r(rows_, Scalar(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

namespace {

// State of a fraction-free (Bareiss) echelon reduction.  Rows are the input
// rows scaled integral by clearing denominators; row scaling does not change
// the kernel, and the cleared factors are recorded for determinants.
struct Echelon {
    std::vector<std::vector<IntPoly>> m;  // rows-major
    std::vector<int> pivot_col;           // per echelon row, ascending
    std::vector<Scalar> clear_factor;     // per original row
    int swaps = 0;
    IntPoly last_pivot;                   // after full elimination of a square matrix
};

std::vector<IntPoly> clear_row(const ExactMatrix& m, int i, Scalar& factor) {
    IntPoly l(1);
    for (int j = 0; j < m.cols(); ++j) l = IntPoly::lcm(l, m.at(i, j).den());
    std::vector<IntPoly> row(m.cols());
    for (int j = 0; j < m.cols(); ++j)
        row[j] = m.at(i, j).num() * IntPoly::div_exact(l, m.at(i, j).den());
    factor = Scalar(l, IntPoly(1));
    return row;
}

// Bareiss elimination with column order fixed and pivot rows chosen by the
// smallest polynomial size (deterministic tie-break by row index).  Entries
// stay in Z[t]: each update divides exactly by the previous pivot.
Echelon bareiss(const ExactMatrix& mat) {
    Echelon e;
    e.m.resize(mat.rows());
    e.clear_factor.resize(mat.rows());
    for (int i = 0; i < mat.rows(); ++i) e.m[i] = clear_row(mat, i, e.clear_factor[i]);

    IntPoly prev(1);
    int r = 0;
    for (int c = 0; c < mat.cols() && r < mat.rows(); ++c) {
        int pivot = -1;
        long best = 0;
        for (int i = r; i < mat.rows(); ++i) {
            if (e.m[i][c].is_zero()) continue;
            const long sz = e.m[i][c].size_measure();
            if (pivot < 0 || sz < best) {
                pivot = i;
                best = sz;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r) {
            std::swap(e.m[pivot], e.m[r]);
            ++e.swaps;
        }
        const std::vector<IntPoly>& prow = e.m[r];
        const IntPoly& p = prow[c];
#pragma omp parallel for schedule(dynamic)
        for (int i = r + 1; i < mat.rows(); ++i) {
            if (e.m[i][c].is_zero()) {
                for (int j = c + 1; j < mat.cols(); ++j)
                    if (!e.m[i][j].is_zero())
                        e.m[i][j] = IntPoly::div_exact(p * e.m[i][j], prev);
            } else {
                const IntPoly f = e.m[i][c];
                for (int j = c + 1; j < mat.cols(); ++j)
                    e.m[i][j] = IntPoly::div_exact(p * e.m[i][j] - f * prow[j], prev);
                e.m[i][c] = IntPoly();
            }
        }
        prev = p;
        e.pivot_col.push_back(c);
        ++r;
    }
    e.last_pivot = prev;
    return e;
}

std::vector<std::vector<Scalar>> kernel_from_echelon(
    const std::vector<std::vector<Scalar>>& rows, const std::vector<int>& pivot_col,
    int cols) {
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(cols, Scalar(0));
        v[f] = Scalar(1);
        for (int k = static_cast<int>(pivot_col.size()) - 1; k >= 0; --k) {
            const int pc = pivot_col[k];
            Scalar acc(0);
            for (int j = pc + 1; j < cols; ++j)
                if (!rows[k][j].is_zero() && !v[j].is_zero()) acc += rows[k][j] * v[j];
            v[pc] = -acc / rows[k][pc];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

std::vector<std::vector<Scalar>> ExactMatrix::kernel() const {
    Echelon e = bareiss(*this);
    std::vector<std::vector<Scalar>> rows(e.pivot_col.size());
    for (size_t k = 0; k < e.pivot_col.size(); ++k) {
        rows[k].resize(cols_);
        for (int j = 0; j < cols_; ++j) rows[k][j] = Scalar(e.m[k][j], IntPoly(1));
    }
    return kernel_from_echelon(rows, e.pivot_col, cols_);
}

std::vector<std::vector<Scalar>> ExactMatrix::kernel_serial() const {
    std::vector<std::vector<Scalar>> m(rows_, std::vector<Scalar>(cols_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m[i][j] = at(i, j);

    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int pivot = -1;
        for (int i = r; i < rows_; ++i)
            if (!m[i][c].is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[r]);
        const Scalar inv = m[r][c].inverse();
        for (int j = c; j < cols_; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            const Scalar f = m[i][c];
            for (int j = c; j < cols_; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    return kernel_from_echelon(m, pivot_col, cols_);
}

int ExactMatrix::rank() const {
    return static_cast<int>(bareiss(*this).pivot_col.size());
}

Scalar ExactMatrix::det() const {
    if (rows_ != cols_) throw std::logic_error("det: matrix not square");
    if (rows_ == 0) return Scalar(1);
    Echelon e = bareiss(*this);
    if (static_cast<int>(e.pivot_col.size()) < rows_) return Scalar(0);
    Scalar d(e.last_pivot, IntPoly(1));
    if (e.swaps % 2 != 0) d = -d;
    for (const Scalar& f : e.clear_factor) d /= f;
    return d;
}

Scalar ExactMatrix::det_serial() const {
    if (rows_ != cols_) throw std::logic_error("det: matrix not square");
    if (rows_ == 0) return Scalar(1);
    if (rows_ == 1) return at(0, 0);
    Scalar acc(0);
    for (int i = 0; i < rows_; ++i) {
        if (at(i, 0).is_zero()) continue;
        ExactMatrix minor(rows_ - 1, cols_ - 1);
        for (int r = 0, mr = 0; r < rows_; ++r) {
            if (r == i) continue;
            for (int c = 1; c < cols_; ++c) minor.at(mr, c - 1) = at(r, c);
            ++mr;
        }
        Scalar term = at(i, 0) * minor.det_serial();
        acc += (i % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace vir
