#include <srg/bitmatrix.hpp>

#include <srg/exactmat.hpp>

#include <bit>

namespace srg {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64), bits_(rows * words_per_row_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    BitMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DomainError("bit rows of unequal length");
        for (std::size_t j = 0; j < c; ++j) {
            const char ch = rows[i][j];
            if (ch != '0' && ch != '1') throw DomainError("bit row contains a non-binary character");
            if (ch == '1') m.set(i, j, true);
        }
    }
    return m;
}

BitMatrix BitMatrix::from_exact(const ExactMatrix& src) {
    BitMatrix m(src.rows(), src.cols());
    for (std::size_t i = 0; i < src.rows(); ++i)
        for (std::size_t j = 0; j < src.cols(); ++j) {
            const Rat& v = src.at(i, j);
            if (v == 1)
                m.set(i, j, true);
            else if (v != 0)
                throw DomainError("matrix entry is neither 0 nor 1: " + v.get_str());
        }
    return m;
}

void BitMatrix::check_index(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw DomainError("bit matrix index out of range");
}

bool BitMatrix::get(std::size_t i, std::size_t j) const {
    check_index(i, j);
    return (bits_[i * words_per_row_ + j / 64] >> (j % 64)) & 1u;
}

void BitMatrix::set(std::size_t i, std::size_t j, bool value) {
    check_index(i, j);
    std::uint64_t& word = bits_[i * words_per_row_ + j / 64];
    const std::uint64_t mask = std::uint64_t(1) << (j % 64);
    if (value)
        word |= mask;
    else
        word &= ~mask;
}

std::size_t BitMatrix::row_sum(std::size_t i) const {
    if (i >= rows_) throw DomainError("bit matrix row index out of range");
    std::size_t total = 0;
    const std::uint64_t* w = row_words(i);
    for (std::size_t k = 0; k < words_per_row_; ++k) total += std::popcount(w[k]);
    return total;
}

std::size_t BitMatrix::row_dot(std::size_t i, const BitMatrix& other, std::size_t j) const {
    if (cols_ != other.cols_) throw DomainError("row_dot requires equal column counts");
    std::size_t total = 0;
    const std::uint64_t* a = row_words(i);
    const std::uint64_t* b = other.row_words(j);
    for (std::size_t k = 0; k < words_per_row_; ++k) total += std::popcount(a[k] & b[k]);
    return total;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (get(i, j)) t.set(j, i, true);
    return t;
}

ExactMatrix BitMatrix::to_exact() const {
    ExactMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (get(i, j)) m.at(i, j) = 1;
    return m;
}

std::string BitMatrix::row_string(std::size_t i) const {
    std::string s(cols_, '0');
    for (std::size_t j = 0; j < cols_; ++j)
        if (get(i, j)) s[j] = '1';
    return s;
}

bool BitMatrix::operator==(const BitMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && bits_ == other.bits_;
}

bool BitMatrix::operator<(const BitMatrix& other) const {
    if (rows_ != other.rows_) return rows_ < other.rows_;
    if (cols_ != other.cols_) return cols_ < other.cols_;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const bool a = get(i, j);
            const bool b = other.get(i, j);
            if (a != b) return b;  // 0 sorts before 1
        }
    return false;
}

}  // namespace srg
