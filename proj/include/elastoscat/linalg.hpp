// Dense complex linear algebra for the Nystrom systems: row-major matrix,
// blocked LU with partial pivoting, and a Hager-style 1-norm condition
// estimate. The trailing-block update runs through the dispatched kernel in
// simd.hpp.
#pragma once

#include <span>
#include <vector>

#include "elastoscat/core.hpp"

namespace elast {

class CMatrix {
public:
    CMatrix() = default;
    CMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    cd& operator()(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const cd& operator()(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }
    cd* row(int i) { return a_.data() + std::size_t(i) * cols_; }
    const cd* row(int i) const { return a_.data() + std::size_t(i) * cols_; }
    cd* data() { return a_.data(); }
    const cd* data() const { return a_.data(); }

    double norm1() const;  // max column sum of |a_ij|

    bool operator==(const CMatrix&) const = default;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<cd> a_;
};

// P A = L U factorization of a square matrix (in place, partial pivoting)
class LuFactor {
public:
    explicit LuFactor(CMatrix a);  // throws numerical_error on exact singularity

    void solve_in_place(std::span<cd> b) const;       // A x = b
    void solve_herm_in_place(std::span<cd> b) const;  // A^H x = b
    std::vector<cd> solve(std::span<const cd> b) const;

    // ||A||_1 * estimate of ||A^{-1}||_1
    double cond1_estimate(double a_norm1) const;

    int size() const { return lu_.rows(); }

private:
    CMatrix lu_;
    std::vector<int> piv_;
};

}  // namespace elast
