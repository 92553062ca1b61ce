// Packed 0/1 matrices: adjacency storage and the B matrices of Gram factorizations.
#pragma once

#include <srg/numeric.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace srg {

class ExactMatrix;

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    // One string per row, characters '0'/'1'.
    static BitMatrix from_strings(const std::vector<std::string>& rows);
    // Lossless iff every entry of m is 0 or 1; DomainError otherwise.
    static BitMatrix from_exact(const ExactMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, bool value);

    std::size_t row_sum(std::size_t i) const;
    // popcount(row i AND row j of other); both matrices must have equal column count.
    std::size_t row_dot(std::size_t i, const BitMatrix& other, std::size_t j) const;

    BitMatrix transpose() const;
    ExactMatrix to_exact() const;
    std::string row_string(std::size_t i) const;

    bool operator==(const BitMatrix& other) const;
    bool operator!=(const BitMatrix& other) const { return !(*this == other); }
    // Lexicographic on (rows, cols, row-major bits); a deterministic total order.
    bool operator<(const BitMatrix& other) const;

    const std::uint64_t* row_words(std::size_t i) const { return bits_.data() + i * words_per_row_; }
    std::size_t words_per_row() const { return words_per_row_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;

    void check_index(std::size_t i, std::size_t j) const;
};

}  // namespace srg
