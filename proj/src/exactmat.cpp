#include <srg/exactmat.hpp>

#include <utility>

namespace srg {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rat(0)) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::constant(std::size_t rows, std::size_t cols, const Rat& value) {
    ExactMatrix m(rows, cols);
    for (auto& e : m.entries_) e = value;
    return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    ExactMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DomainError("matrix rows of unequal length");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

bool ExactMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool ExactMatrix::is_integer() const {
    for (const auto& e : entries_)
        if (e.get_den() != 1) return false;
    return true;
}

bool ExactMatrix::is_zero_one() const {
    for (const auto& e : entries_)
        if (e != 0 && e != 1) return false;
    return true;
}

bool ExactMatrix::has_zero_diagonal() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        if (at(i, i) != 0) return false;
    return true;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DomainError("matrix shape mismatch in addition");
    ExactMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] + other.entries_[i];
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw DomainError("matrix shape mismatch in subtraction");
    ExactMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] - other.entries_[i];
    return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& other) const {
    if (cols_ != other.rows_) throw DomainError("matrix shape mismatch in multiplication");
    ExactMatrix r(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& f = at(i, k);
            if (f == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                if (other.at(k, j) == 0) continue;
                r.at(i, j) += f * other.at(k, j);
            }
        }
    return r;
}

ExactMatrix ExactMatrix::scaled(const Rat& factor) const {
    ExactMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = entries_[i] * factor;
    return r;
}

bool ExactMatrix::operator==(const ExactMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

ExactMatrix ExactMatrix::without_row_col(std::size_t row, std::size_t col) const {
    if (row >= rows_ || col >= cols_) throw DomainError("minor index out of range");
    ExactMatrix r(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, ri = 0; i < rows_; ++i) {
        if (i == row) continue;
        for (std::size_t j = 0, rj = 0; j < cols_; ++j) {
            if (j == col) continue;
            r.at(ri, rj) = at(i, j);
            ++rj;
        }
        ++ri;
    }
    return r;
}

// Bareiss elimination: each update divides by the previous pivot, which is exact
// division when the input is integral, keeping intermediate swell polynomial.
Rat det(const ExactMatrix& m) {
    if (!m.is_square()) throw DomainError("determinant requires a square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    ExactMatrix work = m;
    Rat prev_pivot = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot_row = k;
        while (pivot_row < n && work.at(pivot_row, k) == 0) ++pivot_row;
        if (pivot_row == n) return 0;
        if (pivot_row != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(work.at(k, j), work.at(pivot_row, j));
            sign = -sign;
        }
        const Rat pivot = work.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                work.at(i, j) = (work.at(i, j) * pivot - work.at(i, k) * work.at(k, j)) / prev_pivot;
            work.at(i, k) = 0;
        }
        prev_pivot = pivot;
    }
    return sign > 0 ? work.at(n - 1, n - 1) : Rat(-work.at(n - 1, n - 1));
}

ExactMatrix inverse(const ExactMatrix& m) {
    if (!m.is_square()) throw DomainError("inverse requires a square matrix");
    const std::size_t n = m.rows();
    ExactMatrix work = m;
    ExactMatrix inv = ExactMatrix::identity(n);

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot_row = k;
        while (pivot_row < n && work.at(pivot_row, k) == 0) ++pivot_row;
        if (pivot_row == n) throw SingularMatrixError("matrix is singular");
        if (pivot_row != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work.at(k, j), work.at(pivot_row, j));
                std::swap(inv.at(k, j), inv.at(pivot_row, j));
            }
        const Rat pivot = work.at(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            work.at(k, j) /= pivot;
            inv.at(k, j) /= pivot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const Rat factor = work.at(i, k);
            if (factor == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                work.at(i, j) -= factor * work.at(k, j);
                inv.at(i, j) -= factor * inv.at(k, j);
            }
        }
    }
    return inv;
}

ExactMatrix gram(const BitMatrix& b) {
    const std::size_t n = b.rows();
    ExactMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const Rat v(static_cast<unsigned long>(b.row_dot(i, b, j)));
            g.at(i, j) = v;
            g.at(j, i) = v;
        }
    return g;
}

bool psd_check(const ExactMatrix& m) {
    if (!m.is_symmetric()) throw DomainError("psd_check requires a symmetric matrix");
    const std::size_t n = m.rows();
    ExactMatrix work = m;
    for (std::size_t k = 0; k < n; ++k) {
        const Rat pivot = work.at(k, k);
        if (pivot < 0) return false;
        if (pivot == 0) {
            // A PSD matrix with a zero diagonal pivot must have the whole
            // remaining row/column equal to zero.
            for (std::size_t i = k + 1; i < n; ++i)
                if (work.at(i, k) != 0) return false;
            continue;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const Rat factor = work.at(i, k) / pivot;
            if (factor == 0) continue;
            for (std::size_t j = k + 1; j <= i; ++j) {
                work.at(i, j) -= factor * work.at(k, j);
                work.at(j, i) = work.at(i, j);
            }
        }
    }
    return true;
}

}  // namespace srg
