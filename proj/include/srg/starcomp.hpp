// Star complement machinery: the R matrices, eigenvalue exclusion, the 0/1
// Gram-factorization search for B, and graph reconstruction from eI - A_P =
// B^T (eI - A_Q)^{-1} B.
#pragma once

#include <srg/exactmat.hpp>
#include <srg/graphs.hpp>
#include <srg/params.hpp>

#include <cstdint>
#include <vector>

namespace srg {

// R is not positive semi-definite, so no B with BB^T = R can exist.
struct NotPsdError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A reconstructed A_P entry is not 0/1: this B does not extend to a graph.
struct NotZeroOneError : std::runtime_error {
    std::size_t row;
    std::size_t col;
    std::string value;

    NotZeroOneError(std::size_t r, std::size_t c, std::string v)
        : std::runtime_error("reconstructed entry (" + std::to_string(r) + "," + std::to_string(c) +
                             ") = " + v + " is not 0/1"),
          row(r), col(c), value(std::move(v)) {}
};

// Assembled adjacency failed strong-regularity verification.
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The data of a star-complement search: parameters, the star complement
// adjacency A_Q, the target Gram matrix R, and the column count m for B
// (the multiplicity of e). Invariants: |Q| = m2 + 1 = n - m and e is not an
// eigenvalue of A_Q.
struct ReconstructionProblem {
    ParamTriple params;
    ExactMatrix a_q;
    ExactMatrix r;
    long m;
};

// Validates the size and eigenvalue invariants; DomainError on violation.
ReconstructionProblem make_reconstruction_problem(const Graph& star_complement, const ParamTriple& t);

// size(A_Q) == m2 + 1 and det(eI - A_Q) != 0.
bool star_complement_check(const ExactMatrix& a_q, const ParamTriple& t);

// R = cJ + e(e+c-a)I + (a-c)A_Q - A_Q^2 (symmetric, integer).
ExactMatrix r_matrix(const ExactMatrix& a_q, const ParamTriple& t);

// R with the hub row/column removed, for a closed neighbourhood N whose hub is
// adjacent to every other vertex of N.
struct Rflat {
    ExactMatrix matrix;
    std::size_t hub;
};

// Checks the hub is universal in N and that the hub row/column of the full R
// vanish, then returns cJ + e(e+c-a)I + (a-c)A_1 - A_2 where A_1, A_2 are the
// hub-deleted A_N and A_N^2.
Rflat r_flat(const ExactMatrix& a_n, std::size_t hub, const ParamTriple& t);

// Reference block-circulant R-flat of the generalized windmill with parameters
// a = e-1, c = e(e+1): e^2+2e+2 diagonal blocks e(e+1)^2 I_e, off-diagonal
// blocks (e^2+e-1) J_e.
ExactMatrix windmill_r_flat(long e);

// `count` consecutive column blocks of `width` columns each; every column in
// the group must have column sum `column_sum`. Lexicographic symmetry breaking
// applies within each block.
struct BlockHint {
    long width;
    long count;
    long column_sum;
};

struct BSearchConfig {
    std::int64_t node_cap = 10'000'000;
    std::vector<BlockHint> block_hints;  // empty: single block spanning all m columns, no sum constraint
};

enum class BSearchStatus { Complete, CappedInconclusive };

// Every returned B satisfies gram(B) = R exactly. Complete guarantees all
// solutions were found up to column permutation; with hints, up to column
// permutation within blocks and permutation of equal-shape blocks. Solutions
// are sorted canonically.
struct BSearchResult {
    BSearchStatus status = BSearchStatus::Complete;
    std::vector<BitMatrix> solutions;
    std::int64_t nodes_explored = 0;
};

// Depth-first search over the rows of B: row i has row sum R_ii and pairwise
// dot products R_ij with the earlier rows. Throws NotPsdError immediately when
// psd_check(R) fails; no search is attempted.
BSearchResult b_search(const ExactMatrix& r, long m, const BSearchConfig& config = {});

// A_P = eI - B^T (eI - A_Q)^{-1} B. SingularMatrixError when e is an eigenvalue
// of A_Q; NotZeroOneError (with the offending entry) when B does not extend to
// a graph.
ExactMatrix reconstruct(const ExactMatrix& a_q, const BitMatrix& b, const Int& e);

struct AssembledGraph {
    Graph graph;
    SrgCertificate certificate;
};

// Builds [[A_P, B^T], [B, A_Q]] (P vertices first), runs verify_srg, and checks
// the certificate against derive(t); VerificationError with witness otherwise.
AssembledGraph assemble_and_verify(const ExactMatrix& a_p, const BitMatrix& b, const ExactMatrix& a_q,
                                   const ParamTriple& t);

// For c = e(e+1), e > a >= 0: m2 = k via (k-e)(e+1) = c(c+2e-a), and e is never
// an eigenvalue of the closed neighbourhood since e^2 - ae - k = -e(e+1)^2 != 0.
// The graph overload additionally runs star_complement_check on every closed
// neighbourhood.
struct ClosedNbhdReport {
    Int k;
    Int m2;
    bool multiplicity_ok = false;       // m2 == k
    Int eigenvalue_gap;                 // e^2 - ae - k
    bool eigenvalue_excluded = false;   // gap != 0 (and equals -e(e+1)^2)
    long vertices_checked = 0;
    bool all_closed_neighborhoods_ok = true;

    bool ok() const { return multiplicity_ok && eigenvalue_excluded && all_closed_neighborhoods_ok; }
};

ClosedNbhdReport closed_nbhd_theorem_check(const Int& a, const Int& e);
ClosedNbhdReport closed_nbhd_theorem_check(const Int& a, const Int& e, const Graph& g);

// Columns sorted into nonincreasing lexicographic order (row 0 most
// significant). With hints: columns sorted within each block, then equal-shape
// blocks sorted by their concatenated content.
BitMatrix canonical_columns(const BitMatrix& b, const std::vector<BlockHint>& hints = {});

}  // namespace srg
