#pragma once

#include <optional>
#include <vector>

#include "hoca/numeric.hpp"

namespace hoca {

// Dense integer matrix, row-major. Zero-dimensional matrices are legal and
// behave as the unique map between the corresponding free modules.
class IntMat {
public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
    IntMat(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMat identity(int n);
    static IntMat zero(int rows, int cols) { return IntMat(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool is_zero() const;
    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    IntMat operator*(const IntMat& o) const;
    IntMat operator+(const IntMat& o) const;
    IntMat operator-(const IntMat& o) const;
    IntMat operator-() const;
    IntMat scaled(const Int& c) const;
    IntMat transposed() const;

    std::vector<Int> apply(const std::vector<Int>& v) const; // matrix * column vector
    IntMat col(int j) const;
    void set_col(int j, const std::vector<Int>& v);
    std::vector<Int> col_vec(int j) const;

    // Columns of `o` appended on the right.
    IntMat hcat(const IntMat& o) const;
    // Rows of `o` appended below.
    IntMat vcat(const IntMat& o) const;
    // Block diagonal.
    IntMat dsum(const IntMat& o) const;
    IntMat submatrix(int r0, int r1, int c0, int c1) const; // half-open ranges

private:
    int rows_, cols_;
    std::vector<Int> a_;
};

struct SmithResult {
    IntMat U, D, V; // D = U * A * V, U and V unimodular, D diagonal, d1 | d2 | ...
    int rank = 0;   // number of nonzero diagonal entries
};

// Deterministic SNF: pivot = smallest nonzero absolute value, ties broken by
// lowest (row, col). Diagonal entries are non-negative.
SmithResult smith_normal_form(const IntMat& A);

// Basis of the integer kernel lattice {x : A x = 0}, as columns.
IntMat kernel_lattice(const IntMat& A);

// One solution of A x = b over the integers (deterministic: free SNF
// coordinates set to zero), or nullopt.
std::optional<std::vector<Int>> solve_integer(const IntMat& A, const std::vector<Int>& b);

Int determinant(const IntMat& A); // Bareiss fraction-free elimination

} // namespace hoca
