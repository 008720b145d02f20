#pragma once
// Dense exact-rational matrices and the deterministic eliminations everything
// else is built on.  Degenerate shapes (0xN, Nx0, 0x0) are first-class: the
// 0x0 matrix is invertible and equal to its own inverse.
//
// Vectors are columns; a linear map X -> Y is a dim(Y) x dim(X) matrix and
// composition is matrix multiplication.

#include "sia/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sia {

class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    Mat(std::size_t rows, std::size_t cols, std::vector<Rat> entries);

    static Mat identity(std::size_t n);
    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
    static Mat from_columns(std::size_t rows, const std::vector<std::vector<Rat>>& cols);
    static Mat column(const std::vector<Rat>& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    Rat& operator()(std::size_t r, std::size_t c) { return at(r, c); }
    const Rat& operator()(std::size_t r, std::size_t c) const { return at(r, c); }

    const std::vector<Rat>& entries() const { return a_; }

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat operator*(const Mat& o) const;  // dispatches to kernels::mul
    Mat scaled(const Rat& c) const;

    Mat transpose() const;
    bool is_zero() const;
    bool is_identity() const;

    std::vector<Rat> column_vec(std::size_t c) const;
    void set_column(std::size_t c, const std::vector<Rat>& v);
    std::vector<Rat> apply(const std::vector<Rat>& v) const;  // matrix * column

    // Stacks blocks; dimensions must agree on the shared axis.
    static Mat hstack(const Mat& a, const Mat& b);
    static Mat vstack(const Mat& a, const Mat& b);

    std::size_t hash() const;
    std::string to_string() const;  // small-matrix display for diagnostics

private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

struct RrefResult {
    Mat r;
    std::vector<std::size_t> pivots;  // sorted pivot column indices
};

// Reduced row echelon form; deterministic (leftmost pivot column, first
// nonzero row, free choices in index order everywhere downstream).
RrefResult rref(const Mat& m);

// Columns form a basis of the null space, one column per free column of
// rref(m), in ascending free-column order; each basis vector has a single 1
// in its own free coordinate.
Mat kernel_basis(const Mat& m);

// Solves m*x = b with free variables set to zero; nullopt iff b is outside
// the column span. The matrix overload solves all columns simultaneously.
std::optional<std::vector<Rat>> solve(const Mat& m, const std::vector<Rat>& b);
std::optional<Mat> solve(const Mat& m, const Mat& b);

std::size_t rank(const Mat& m);
bool is_invertible(const Mat& m);
Mat inverse(const Mat& m);  // throws std::domain_error on non-square/singular

namespace kernels {
// Hot loops exist in an OpenMP flavour (the default entry points) and a
// serial reference flavour kept for differential testing and benchmarking.
Mat mul(const Mat& a, const Mat& b);
Mat mul_serial(const Mat& a, const Mat& b);
Mat kron(const Mat& a, const Mat& b);  // left-factor-major Kronecker product
Mat kron_serial(const Mat& a, const Mat& b);
// One elimination sweep: assumes m(pivotRow, pivotCol) == 1 and clears the
// pivot column in every other row.
void eliminate(Mat& m, std::size_t pivotRow, std::size_t pivotCol);
void eliminate_serial(Mat& m, std::size_t pivotRow, std::size_t pivotCol);
}  // namespace kernels

}  // namespace sia
