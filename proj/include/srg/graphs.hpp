// Graph values, constructors for the concrete families, strong-regularity
// certification, subconstituents. Graphs are immutable after construction.
#pragma once

#include <srg/bitmatrix.hpp>
#include <srg/exactmat.hpp>

#include <optional>
#include <string>
#include <vector>

namespace srg {

// Dense undirected simple graph; adjacency symmetric with zero diagonal.
class Graph {
public:
    static constexpr std::size_t max_vertices = 1024;

    // Validates symmetry, zero diagonal, and the size cap.
    explicit Graph(BitMatrix adjacency);

    std::size_t n() const { return n_; }
    bool adjacent(std::size_t u, std::size_t v) const { return adj_.get(u, v); }
    std::size_t degree(std::size_t v) const { return adj_.row_sum(v); }
    std::vector<std::size_t> neighbors(std::size_t v) const;

    const BitMatrix& adjacency() const { return adj_; }
    ExactMatrix adjacency_exact() const { return adj_.to_exact(); }

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    std::size_t n_;
    BitMatrix adj_;
};

struct SrgCertificate {
    long k = 0;
    long a = 0;
    long c = 0;
    bool connected = false;
    bool identityChecked = false;
};

// Certificate present iff the graph passed every strong-regularity check;
// otherwise `failure` names the first violated condition (with witness pair).
struct SrgVerification {
    std::optional<SrgCertificate> certificate;
    std::string failure;

    bool ok() const { return certificate.has_value(); }
};

// Regular, connected, non-complete, constant common-neighbour counts a
// (adjacent pairs) and c >= 1 (non-adjacent pairs), verified both by pair
// counting and by the exact identities A^2 - (a-c)A - (k-c)I = cJ, AJ = kJ.
SrgVerification verify_srg(const Graph& g);

// --- constructors (vertex orders are fixed and documented per family) ---

// Vertices 0..n-1 in cycle order.
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
// Parts {0..m-1} and {m..m+n-1}.
Graph complete_bipartite(std::size_t m, std::size_t n);
// Vertices are the 2-subsets of {0..4} in lexicographic order; disjoint pairs adjacent.
Graph petersen();
// Hub vertex 0, then t edges {1,2}, {3,4}, ...; every non-hub adjacent to the hub.
Graph windmill(std::size_t t);
// Hub vertex 0 joined to e^2+2e+2 disjoint cliques of size e, laid out
// consecutively: e^2+2e+2 copies of K_{e+1} sharing the hub.
Graph generalized_windmill(std::size_t e);
// Vertices are the edges of g sorted lexicographically (u < v); adjacency = shared endpoint.
Graph line_graph(const Graph& g);
Graph complement(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<std::size_t> vertices;  // subgraph index -> parent vertex
};

// Subgraph induced on the vertices at exact distance 1 or 2 from v.
InducedSubgraph subconstituent(const Graph& g, std::size_t v, int distance);

// Subgraph induced on {v} union its neighbours; v is placed first.
InducedSubgraph closed_neighborhood(const Graph& g, std::size_t v);

// If every connected component of the distance-1 subconstituent is complete,
// the sorted component sizes; nullopt otherwise.
std::optional<std::vector<std::size_t>> local_cliques(const Graph& g, std::size_t v);

// DOT export for documentation figures; DomainError for n > 30.
std::string to_dot(const Graph& g);

}  // namespace srg
