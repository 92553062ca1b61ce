#include <srg/starcomp.hpp>

#include <algorithm>

namespace srg {

bool star_complement_check(const ExactMatrix& a_q, const ParamTriple& t) {
    if (!a_q.is_square()) throw DomainError("star complement adjacency must be square");
    const DerivedParams d = derive(t);
    if (!d.m2 || !is_integer(*d.m2)) return false;
    if (Rat(static_cast<unsigned long>(a_q.rows())) != *d.m2 + 1) return false;
    ExactMatrix shifted = ExactMatrix::identity(a_q.rows()).scaled(Rat(t.e)) - a_q;
    return det(shifted) != 0;
}

ExactMatrix r_matrix(const ExactMatrix& a_q, const ParamTriple& t) {
    if (!a_q.is_square()) throw DomainError("r_matrix needs a square adjacency");
    const std::size_t n = a_q.rows();
    const Int &a = t.a, &c = t.c, &e = t.e;
    ExactMatrix r = ExactMatrix::constant(n, n, Rat(c));
    const Rat diag(e * (e + c - a));
    const Rat off(a - c);
    const ExactMatrix a_sq = a_q * a_q;
    for (std::size_t i = 0; i < n; ++i) {
        r.at(i, i) += diag;
        for (std::size_t j = 0; j < n; ++j) r.at(i, j) += off * a_q.at(i, j) - a_sq.at(i, j);
    }
    return r;
}

Rflat r_flat(const ExactMatrix& a_n, std::size_t hub, const ParamTriple& t) {
    if (!a_n.is_square()) throw DomainError("r_flat needs a square adjacency");
    const std::size_t n = a_n.rows();
    if (hub >= n) throw DomainError("hub index out of range");
    for (std::size_t j = 0; j < n; ++j) {
        if (j == hub) continue;
        if (a_n.at(hub, j) != 1)
            throw DomainError("hub " + std::to_string(hub) + " is not adjacent to vertex " +
                              std::to_string(j));
    }

    const ExactMatrix full = r_matrix(a_n, t);
    for (std::size_t j = 0; j < n; ++j)
        if (full.at(hub, j) != 0 || full.at(j, hub) != 0)
            throw DomainError("hub row/column of R does not vanish at " + std::to_string(j) +
                              "; parameters do not match the closed neighbourhood");

    // Same formula on the hub-deleted matrices: A_2 is the hub-deleted square
    // of A_N, not the square of the hub-deleted A_N.
    const ExactMatrix a1 = a_n.without_row_col(hub, hub);
    const ExactMatrix a2 = (a_n * a_n).without_row_col(hub, hub);
    const std::size_t k = n - 1;
    const Int &a = t.a, &c = t.c, &e = t.e;
    ExactMatrix rf = ExactMatrix::constant(k, k, Rat(c));
    const Rat diag(e * (e + c - a));
    const Rat off(a - c);
    for (std::size_t i = 0; i < k; ++i) {
        rf.at(i, i) += diag;
        for (std::size_t j = 0; j < k; ++j) rf.at(i, j) += off * a1.at(i, j) - a2.at(i, j);
    }
    if (rf != full.without_row_col(hub, hub))
        throw std::logic_error("hub-deleted R disagrees with the direct formula");
    return {std::move(rf), hub};
}

ExactMatrix windmill_r_flat(long e) {
    if (e < 1) throw DomainError("windmill_r_flat needs e >= 1");
    const long blocks = e * e + 2 * e + 2;
    const long k = e * blocks;
    const Rat u_diag(Int(e) * Int(e + 1) * Int(e + 1));
    const Rat v_val(Int(e) * Int(e) + e - 1);
    ExactMatrix r(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j) {
            if (i / e == j / e)
                r.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = (i == j) ? u_diag : Rat(0);
            else
                r.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v_val;
        }
    return r;
}

ReconstructionProblem make_reconstruction_problem(const Graph& star_complement, const ParamTriple& t) {
    const DerivedParams d = derive(t);
    if (!d.m1 || !is_integer(*d.m1) || !d.m2 || !is_integer(*d.m2))
        throw DomainError("parameters have non-integral multiplicities");
    const ExactMatrix a_q = star_complement.adjacency_exact();
    if (!star_complement_check(a_q, t))
        throw DomainError("subgraph is not a star complement for these parameters (size " +
                          std::to_string(star_complement.n()) + ", need m2+1 = " +
                          rat_to_string(*d.m2 + 1) + " and e not an eigenvalue)");
    ReconstructionProblem problem{t, a_q, r_matrix(a_q, t), to_long(to_int(*d.m1))};
    return problem;
}

namespace {

// Rows of B are found depth-first; within a row, columns are decided left to
// right. Symmetry is broken two ways: columns inside a block stay in
// nonincreasing lexicographic order (row 0 most significant), and consecutive
// blocks of equal shape (width, column sum) stay in nonincreasing order of
// their concatenated columns. A column or block may exceed its left neighbour
// only where earlier rows already separated the pair.
class GramSearch {
public:
    GramSearch(const ExactMatrix& r, long m, const BSearchConfig& config)
        : m_(static_cast<std::size_t>(m)), rows_(r.rows()), config_(config) {
        target_.resize(rows_, std::vector<long>(rows_));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < rows_; ++j) target_[i][j] = to_long(to_int(r.at(i, j)));

        block_of_.resize(m_);
        column_target_.assign(m_, -1);
        if (config.block_hints.empty()) {
            block_of_.assign(m_, 0);
            block_start_ = {0};
            block_width_ = {m_};
            same_shape_as_next_ = {0};
        } else {
            std::size_t col = 0;
            std::size_t block_id = 0;
            for (const BlockHint& hint : config.block_hints) {
                if (hint.width < 1 || hint.count < 1) throw DomainError("bad block hint");
                for (long b = 0; b < hint.count; ++b, ++block_id) {
                    block_start_.push_back(col);
                    block_width_.push_back(static_cast<std::size_t>(hint.width));
                    same_shape_as_next_.push_back(b + 1 < hint.count ? 1 : 0);
                    for (long w = 0; w < hint.width; ++w) {
                        if (col >= m_) throw DomainError("block hints exceed the column count");
                        block_of_[col] = block_id;
                        column_target_[col] = hint.column_sum;
                        ++col;
                    }
                }
            }
            if (col != m_) throw DomainError("block hints do not cover all columns");
        }

        current_.assign(rows_, std::vector<char>(m_, 0));
        column_sum_.assign(m_, 0);
        tied_.assign(rows_ + 1, std::vector<char>(m_, 0));
        for (std::size_t j = 0; j + 1 < m_; ++j)
            tied_[0][j] = (block_of_[j] == block_of_[j + 1]) ? 1 : 0;
        block_tied_.assign(rows_ + 1, std::vector<char>(block_start_.size(), 0));
        for (std::size_t b = 0; b < block_start_.size(); ++b)
            block_tied_[0][b] = same_shape_as_next_[b];
    }

    BSearchResult run() {
        BSearchResult result;
        capped_ = false;
        nodes_ = 0;
        solutions_.clear();
        place_row(0);
        result.status = capped_ ? BSearchStatus::CappedInconclusive : BSearchStatus::Complete;
        result.nodes_explored = nodes_;
        std::sort(solutions_.begin(), solutions_.end());
        result.solutions = std::move(solutions_);
        return result;
    }

private:
    std::size_t m_;
    std::size_t rows_;
    BSearchConfig config_;
    std::vector<std::vector<long>> target_;
    std::vector<std::size_t> block_of_;
    std::vector<long> column_target_;
    std::vector<std::size_t> block_start_;
    std::vector<std::size_t> block_width_;
    std::vector<char> same_shape_as_next_;

    std::vector<std::vector<char>> current_;
    std::vector<long> column_sum_;
    // tied_[i][j]: columns j and j+1 belong to the same block and agree on all
    // rows before i, so row i must not set bit j+1 without bit j.
    std::vector<std::vector<char>> tied_;
    // block_tied_[i][b]: blocks b and b+1 have the same shape and identical
    // column ranges on all rows before i, so in row i block b+1 must not
    // lexicographically exceed block b.
    std::vector<std::vector<char>> block_tied_;

    std::vector<BitMatrix> solutions_;
    std::int64_t nodes_ = 0;
    bool capped_ = false;

    void record_solution() {
        BitMatrix b(rows_, m_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < m_; ++j)
                if (current_[i][j]) b.set(i, j, true);
        solutions_.push_back(std::move(b));
    }

    bool columns_can_finish(std::size_t next_row) const {
        const long rows_left = static_cast<long>(rows_ - next_row);
        for (std::size_t j = 0; j < m_; ++j) {
            if (column_target_[j] < 0) continue;
            const long need = column_target_[j] - column_sum_[j];
            if (need < 0 || need > rows_left) return false;
        }
        return true;
    }

    void place_row(std::size_t i) {
        if (capped_) return;
        if (i == rows_) {
            record_solution();
            return;
        }
        if (!columns_can_finish(i)) return;
        std::vector<long> dots(i, 0);
        extend_row(i, 0, target_[i][i], dots);
    }

    // Choose bits of row i from column `col` on; `remaining` ones still to
    // place; dots[j] = partial dot with earlier row j.
    void extend_row(std::size_t i, std::size_t col, long remaining, std::vector<long>& dots) {
        if (capped_) return;
        if (remaining == 0) {
            for (std::size_t x = col; x < m_; ++x) current_[i][x] = 0;
            finish_row(i, dots);
            return;
        }
        if (static_cast<long>(m_ - col) < remaining) return;

        // Try bit 1 at col unless a constraint forbids it.
        bool can_set = true;
        if (column_target_[col] >= 0 && column_sum_[col] + 1 > column_target_[col]) can_set = false;
        if (can_set && col > 0 && tied_[i][col - 1] && !current_[i][col - 1]) can_set = false;
        if (can_set && !block_tie_allows_one(i, col)) can_set = false;
        if (can_set)
            for (std::size_t j = 0; j < i; ++j)
                if (current_[j][col] && dots[j] + 1 > target_[i][j]) {
                    can_set = false;
                    break;
                }
        if (can_set) {
            current_[i][col] = 1;
            ++column_sum_[col];
            for (std::size_t j = 0; j < i; ++j)
                if (current_[j][col]) ++dots[j];
            extend_row(i, col + 1, remaining - 1, dots);
            for (std::size_t j = 0; j < i; ++j)
                if (current_[j][col]) --dots[j];
            --column_sum_[col];
            current_[i][col] = 0;
        }

        // Bit 0 at col: only if enough columns remain and no earlier row still
        // needs an overlap that can no longer be reached.
        if (static_cast<long>(m_ - col - 1) >= remaining) {
            current_[i][col] = 0;
            extend_row(i, col + 1, remaining, dots);
        }
    }

    // In row i, may column col take the value 1 under the block-order rule?
    bool block_tie_allows_one(std::size_t i, std::size_t col) const {
        const std::size_t b = block_of_[col];
        if (b == 0 || !block_tied_[i][b - 1]) return true;
        const std::size_t offset = col - block_start_[b];
        const std::size_t left = block_start_[b - 1];
        for (std::size_t t = 0; t < offset; ++t)
            if (current_[i][block_start_[b] + t] != current_[i][left + t]) return true;
        return current_[i][left + offset] == 1;
    }

    void finish_row(std::size_t i, const std::vector<long>& dots) {
        if (++nodes_ > config_.node_cap) {
            capped_ = true;
            return;
        }
        for (std::size_t j = 0; j < i; ++j)
            if (dots[j] != target_[i][j]) return;
        // Update column and block ties for the next row.
        for (std::size_t j = 0; j + 1 < m_; ++j)
            tied_[i + 1][j] = (tied_[i][j] && current_[i][j] == current_[i][j + 1]) ? 1 : 0;
        for (std::size_t b = 0; b + 1 < block_start_.size(); ++b) {
            char still = block_tied_[i][b];
            if (still)
                for (std::size_t t = 0; t < block_width_[b]; ++t)
                    if (current_[i][block_start_[b] + t] != current_[i][block_start_[b + 1] + t]) {
                        still = 0;
                        break;
                    }
            block_tied_[i + 1][b] = still;
        }
        place_row(i + 1);
    }
};

}  // namespace

BSearchResult b_search(const ExactMatrix& r, long m, const BSearchConfig& config) {
    if (!r.is_symmetric()) throw DomainError("b_search needs a symmetric matrix");
    if (!r.is_integer()) throw DomainError("b_search needs an integer matrix");
    if (m < 1) throw DomainError("b_search needs m >= 1");
    for (std::size_t i = 0; i < r.rows(); ++i)
        if (r.at(i, i) < 0) throw DomainError("b_search needs a nonnegative diagonal");
    if (!psd_check(r)) throw NotPsdError("target Gram matrix is not positive semi-definite");

    GramSearch search(r, m, config);
    BSearchResult result = search.run();
    for (const BitMatrix& b : result.solutions)
        if (gram(b) != r) throw std::logic_error("search produced a B with the wrong Gram matrix");
    return result;
}

ExactMatrix reconstruct(const ExactMatrix& a_q, const BitMatrix& b, const Int& e) {
    if (!a_q.is_square()) throw DomainError("reconstruct needs a square adjacency");
    if (b.rows() != a_q.rows())
        throw DomainError("B must have one row per star-complement vertex");
    const std::size_t m = b.cols();

    const ExactMatrix shifted = ExactMatrix::identity(a_q.rows()).scaled(Rat(e)) - a_q;
    const ExactMatrix middle = inverse(shifted);  // SingularMatrixError when e is an eigenvalue
    const ExactMatrix bt = b.to_exact().transpose();
    const ExactMatrix product = bt * middle * b.to_exact();

    ExactMatrix a_p = ExactMatrix::identity(m).scaled(Rat(e)) - product;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const Rat& v = a_p.at(i, j);
            if (v != 0 && v != 1) throw NotZeroOneError(i, j, rat_to_string(v));
            if (i == j && v != 0) throw NotZeroOneError(i, j, rat_to_string(v));
        }
    if (!a_p.is_symmetric()) throw VerificationError("reconstructed A_P is not symmetric");
    return a_p;
}

AssembledGraph assemble_and_verify(const ExactMatrix& a_p, const BitMatrix& b, const ExactMatrix& a_q,
                                   const ParamTriple& t) {
    const std::size_t p_size = a_p.rows();
    const std::size_t q_size = a_q.rows();
    if (b.rows() != q_size || b.cols() != p_size)
        throw DomainError("B must be |Q| x |P| to assemble the partitioned adjacency");
    const std::size_t n = p_size + q_size;

    BitMatrix adj(n, n);
    for (std::size_t i = 0; i < p_size; ++i)
        for (std::size_t j = 0; j < p_size; ++j)
            if (a_p.at(i, j) == 1) adj.set(i, j, true);
    for (std::size_t i = 0; i < q_size; ++i)
        for (std::size_t j = 0; j < q_size; ++j)
            if (a_q.at(i, j) == 1) adj.set(p_size + i, p_size + j, true);
    for (std::size_t i = 0; i < q_size; ++i)
        for (std::size_t j = 0; j < p_size; ++j)
            if (b.get(i, j)) {
                adj.set(p_size + i, j, true);
                adj.set(j, p_size + i, true);
            }

    Graph g{std::move(adj)};
    const SrgVerification check = verify_srg(g);
    if (!check.ok()) throw VerificationError("assembled graph is not strongly regular: " + check.failure);

    const DerivedParams d = derive(t);
    const SrgCertificate& cert = *check.certificate;
    if (Int(cert.k) != d.k || Int(cert.a) != t.a || Int(cert.c) != t.c || Rat((unsigned long)n) != d.n)
        throw VerificationError("assembled graph parameters (" + std::to_string(n) + "," +
                                std::to_string(cert.k) + "," + std::to_string(cert.a) + "," +
                                std::to_string(cert.c) + ") do not match the requested triple");
    return {std::move(g), cert};
}

ClosedNbhdReport closed_nbhd_theorem_check(const Int& a, const Int& e) {
    if (!(e > a && a >= 0)) throw DomainError("closed neighbourhood theorem needs e > a >= 0");
    const FamilyParams family = algebraic_family(a, e);
    const Int& c = family.triple.c;

    ClosedNbhdReport report;
    report.k = family.derived.k;
    report.m2 = to_int(*family.derived.m2);
    // (k - e)(e + 1) = c(c + 2e - a) is the algebraic route to m2 = k.
    const bool identity_ok = (report.k - e) * (e + 1) == c * (c + 2 * e - a);
    report.multiplicity_ok = identity_ok && report.m2 == report.k;

    report.eigenvalue_gap = e * e - a * e - report.k;
    const Int expected_gap = -e * (e + 1) * (e + 1);
    if (report.eigenvalue_gap != expected_gap)
        throw std::logic_error("eigenvalue gap is not -e(e+1)^2");
    report.eigenvalue_excluded = report.eigenvalue_gap != 0;
    return report;
}

ClosedNbhdReport closed_nbhd_theorem_check(const Int& a, const Int& e, const Graph& g) {
    ClosedNbhdReport report = closed_nbhd_theorem_check(a, e);
    const ParamTriple t{a, e * (e + 1), e};
    for (std::size_t v = 0; v < g.n(); ++v) {
        const InducedSubgraph nbhd = closed_neighborhood(g, v);
        ++report.vertices_checked;
        if (!star_complement_check(nbhd.graph.adjacency_exact(), t)) {
            report.all_closed_neighborhoods_ok = false;
            break;
        }
    }
    return report;
}

BitMatrix canonical_columns(const BitMatrix& b, const std::vector<BlockHint>& hints) {
    const std::size_t m = b.cols();
    std::vector<std::string> columns(m);
    const BitMatrix bt = b.transpose();
    for (std::size_t j = 0; j < m; ++j) columns[j] = bt.row_string(j);

    std::vector<std::size_t> order(m);
    if (hints.empty()) {
        for (std::size_t j = 0; j < m; ++j) order[j] = j;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t x, std::size_t y) { return columns[x] > columns[y]; });
    } else {
        // Two-level canonical form: sort columns inside each block, then sort
        // equal-shape blocks by their concatenated content.
        order.clear();
        std::size_t col = 0;
        for (const BlockHint& hint : hints) {
            std::vector<std::vector<std::size_t>> blocks;
            for (long blk = 0; blk < hint.count; ++blk) {
                std::vector<std::size_t> members;
                for (long w = 0; w < hint.width; ++w) {
                    if (col >= m) throw DomainError("block hints exceed the column count");
                    members.push_back(col++);
                }
                std::sort(members.begin(), members.end(),
                          [&](std::size_t x, std::size_t y) { return columns[x] > columns[y]; });
                blocks.push_back(std::move(members));
            }
            const auto content = [&](const std::vector<std::size_t>& members) {
                std::string s;
                for (std::size_t j : members) s += columns[j];
                return s;
            };
            std::sort(blocks.begin(), blocks.end(),
                      [&](const auto& x, const auto& y) { return content(x) > content(y); });
            for (const auto& block : blocks) order.insert(order.end(), block.begin(), block.end());
        }
        if (col != m) throw DomainError("block hints do not cover all columns");
    }

    BitMatrix out(b.rows(), m);
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < b.rows(); ++i)
            if (b.get(i, order[j])) out.set(i, j, true);
    return out;
}

}  // namespace srg
