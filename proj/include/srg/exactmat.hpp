// Exact dense rational linear algebra: the kernel under every spectral check.
// No floating point anywhere; operations are pure and never mutate inputs.
#pragma once

#include <srg/bitmatrix.hpp>
#include <srg/numeric.hpp>

#include <cstddef>
#include <vector>

namespace srg {

struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols);  // zero-filled

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix constant(std::size_t rows, std::size_t cols, const Rat& value);
    static ExactMatrix all_ones(std::size_t n) { return constant(n, n, 1); }
    static ExactMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rat& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Rat& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_integer() const;
    bool is_zero_one() const;
    bool has_zero_diagonal() const;

    ExactMatrix transpose() const;
    ExactMatrix operator+(const ExactMatrix& other) const;
    ExactMatrix operator-(const ExactMatrix& other) const;
    ExactMatrix operator*(const ExactMatrix& other) const;
    ExactMatrix scaled(const Rat& factor) const;
    bool operator==(const ExactMatrix& other) const;
    bool operator!=(const ExactMatrix& other) const { return !(*this == other); }

    // Minor with one row and one column removed.
    ExactMatrix without_row_col(std::size_t row, std::size_t col) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> entries_;
};

// Exact determinant via fraction-free (Bareiss-style) elimination with row pivoting.
// DomainError on non-square input.
Rat det(const ExactMatrix& m);

// Exact inverse via augmented Gauss-Jordan elimination; m * inverse(m) == I exactly.
// SingularMatrixError when det(m) == 0, DomainError on non-square input.
ExactMatrix inverse(const ExactMatrix& m);

// B * B^T as an exact integer matrix.
ExactMatrix gram(const BitMatrix& b);

// Exact positive-semidefiniteness by rational LDL^T with pivot-sign inspection:
// a zero pivot forces the rest of its column to vanish, a negative pivot refutes.
// DomainError on non-symmetric input.
bool psd_check(const ExactMatrix& m);

}  // namespace srg
