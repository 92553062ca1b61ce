#include <srg/graphs.hpp>

#include <algorithm>
#include <queue>
#include <sstream>

namespace srg {

Graph::Graph(BitMatrix adjacency) : n_(adjacency.rows()), adj_(std::move(adjacency)) {
    if (adj_.rows() != adj_.cols()) throw DomainError("adjacency matrix must be square");
    if (n_ > max_vertices)
        throw DomainError("graph exceeds the " + std::to_string(max_vertices) + "-vertex cap");
    for (std::size_t i = 0; i < n_; ++i) {
        if (adj_.get(i, i)) throw DomainError("adjacency matrix has a loop at vertex " + std::to_string(i));
        for (std::size_t j = i + 1; j < n_; ++j)
            if (adj_.get(i, j) != adj_.get(j, i))
                throw DomainError("adjacency matrix is not symmetric at (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
    }
}

std::vector<std::size_t> Graph::neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < n_; ++u)
        if (adj_.get(v, u)) out.push_back(u);
    return out;
}

namespace {

bool is_connected(const Graph& g) {
    const std::size_t n = g.n();
    if (n == 0) return false;
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> queue;
    queue.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop();
        for (std::size_t u = 0; u < n; ++u)
            if (g.adjacent(v, u) && !seen[u]) {
                seen[u] = true;
                ++reached;
                queue.push(u);
            }
    }
    return reached == n;
}

std::string pair_str(std::size_t u, std::size_t v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

SrgVerification verify_srg(const Graph& g) {
    SrgVerification result;
    const std::size_t n = g.n();
    if (n < 3) {
        result.failure = "graph has fewer than 3 vertices";
        return result;
    }

    const std::size_t k = g.degree(0);
    for (std::size_t v = 1; v < n; ++v)
        if (g.degree(v) != k) {
            result.failure = "not regular: deg(0) = " + std::to_string(k) + ", deg(" + std::to_string(v) +
                             ") = " + std::to_string(g.degree(v));
            return result;
        }
    if (k == n - 1) {
        result.failure = "graph is complete";
        return result;
    }
    if (!is_connected(g)) {
        result.failure = "graph is not connected";
        return result;
    }

    // Route 1: common-neighbour counts for every pair, first violation reported.
    const BitMatrix& adj = g.adjacency();
    long a = -1, c = -1;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            const long common = static_cast<long>(adj.row_dot(u, adj, v));
            if (g.adjacent(u, v)) {
                if (a < 0) a = common;
                if (common != a) {
                    result.failure = "adjacent pair " + pair_str(u, v) + " has " + std::to_string(common) +
                                     " common neighbours, expected a = " + std::to_string(a);
                    return result;
                }
            } else {
                if (c < 0) c = common;
                if (common != c) {
                    result.failure = "non-adjacent pair " + pair_str(u, v) + " has " + std::to_string(common) +
                                     " common neighbours, expected c = " + std::to_string(c);
                    return result;
                }
            }
        }
    if (c < 1) {
        result.failure = "c = " + std::to_string(c) + " < 1 (disconnected complement structure)";
        return result;
    }

    // Route 2: the exact matrix identities A^2 - (a-c)A - (k-c)I = cJ and
    // AJ = kJ. A^2 is computed exactly over the integers from the bit rows
    // (entries are common-neighbour counts plus the degree diagonal, all < n).
    for (std::size_t u = 0; u < n; ++u) {
        long row_sum = 0;
        for (std::size_t v = 0; v < n; ++v) {
            const long a2 = static_cast<long>(adj.row_dot(u, adj, v));
            const long adj_uv = g.adjacent(u, v) ? 1 : 0;
            const long eye = (u == v) ? 1 : 0;
            if (a2 - (a - c) * adj_uv - (static_cast<long>(k) - c) * eye != c) {
                result.failure = "matrix identity fails at entry " + pair_str(u, v);
                return result;
            }
            row_sum += adj_uv;
        }
        if (row_sum != static_cast<long>(k)) {
            result.failure = "AJ = kJ fails at row " + std::to_string(u);
            return result;
        }
    }

    result.certificate = SrgCertificate{static_cast<long>(k), a, c, true, true};
    return result;
}

Graph cycle(std::size_t n) {
    if (n < 3) throw DomainError("cycle needs at least 3 vertices");
    BitMatrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        adj.set(i, (i + 1) % n, true);
        adj.set((i + 1) % n, i, true);
    }
    return Graph(std::move(adj));
}

Graph complete(std::size_t n) {
    if (n < 1) throw DomainError("complete graph needs at least 1 vertex");
    BitMatrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) adj.set(i, j, true);
    return Graph(std::move(adj));
}

Graph complete_bipartite(std::size_t m, std::size_t n) {
    if (m < 1 || n < 1) throw DomainError("complete bipartite graph needs non-empty parts");
    BitMatrix adj(m + n, m + n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            adj.set(i, m + j, true);
            adj.set(m + j, i, true);
        }
    return Graph(std::move(adj));
}

Graph petersen() {
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < 5; ++x)
        for (int y = x + 1; y < 5; ++y) pairs.emplace_back(x, y);
    BitMatrix adj(10, 10);
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = i + 1; j < 10; ++j) {
            const auto& [a, b] = pairs[i];
            const auto& [c, d] = pairs[j];
            if (a != c && a != d && b != c && b != d) {
                adj.set(i, j, true);
                adj.set(j, i, true);
            }
        }
    return Graph(std::move(adj));
}

Graph windmill(std::size_t t) {
    if (t < 1) throw DomainError("windmill needs at least one triangle");
    const std::size_t n = 1 + 2 * t;
    BitMatrix adj(n, n);
    for (std::size_t i = 1; i < n; ++i) {
        adj.set(0, i, true);
        adj.set(i, 0, true);
    }
    for (std::size_t b = 0; b < t; ++b) {
        adj.set(1 + 2 * b, 2 + 2 * b, true);
        adj.set(2 + 2 * b, 1 + 2 * b, true);
    }
    return Graph(std::move(adj));
}

Graph generalized_windmill(std::size_t e) {
    if (e < 1) throw DomainError("generalized windmill needs e >= 1");
    const std::size_t cliques = e * e + 2 * e + 2;
    const std::size_t n = 1 + e * cliques;
    BitMatrix adj(n, n);
    for (std::size_t i = 1; i < n; ++i) {
        adj.set(0, i, true);
        adj.set(i, 0, true);
    }
    for (std::size_t b = 0; b < cliques; ++b)
        for (std::size_t x = 0; x < e; ++x)
            for (std::size_t y = x + 1; y < e; ++y) {
                const std::size_t u = 1 + b * e + x;
                const std::size_t v = 1 + b * e + y;
                adj.set(u, v, true);
                adj.set(v, u, true);
            }
    return Graph(std::move(adj));
}

Graph line_graph(const Graph& g) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < g.n(); ++u)
        for (std::size_t v = u + 1; v < g.n(); ++v)
            if (g.adjacent(u, v)) edges.emplace_back(u, v);
    const std::size_t m = edges.size();
    BitMatrix adj(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const auto& [a, b] = edges[i];
            const auto& [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) {
                adj.set(i, j, true);
                adj.set(j, i, true);
            }
        }
    return Graph(std::move(adj));
}

Graph complement(const Graph& g) {
    const std::size_t n = g.n();
    BitMatrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && !g.adjacent(i, j)) adj.set(i, j, true);
    return Graph(std::move(adj));
}

namespace {

Graph induce(const Graph& g, const std::vector<std::size_t>& vertices) {
    const std::size_t m = vertices.size();
    BitMatrix adj(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (g.adjacent(vertices[i], vertices[j])) {
                adj.set(i, j, true);
                adj.set(j, i, true);
            }
    return Graph(std::move(adj));
}

std::vector<int> bfs_distances(const Graph& g, std::size_t v) {
    std::vector<int> dist(g.n(), -1);
    std::queue<std::size_t> queue;
    dist[v] = 0;
    queue.push(v);
    while (!queue.empty()) {
        const std::size_t x = queue.front();
        queue.pop();
        for (std::size_t u = 0; u < g.n(); ++u)
            if (g.adjacent(x, u) && dist[u] < 0) {
                dist[u] = dist[x] + 1;
                queue.push(u);
            }
    }
    return dist;
}

}  // namespace

InducedSubgraph subconstituent(const Graph& g, std::size_t v, int distance) {
    if (v >= g.n()) throw DomainError("vertex index out of range");
    if (distance != 1 && distance != 2) throw DomainError("subconstituent distance must be 1 or 2");
    const std::vector<int> dist = bfs_distances(g, v);
    std::vector<std::size_t> vertices;
    for (std::size_t u = 0; u < g.n(); ++u)
        if (dist[u] == distance) vertices.push_back(u);
    return {induce(g, vertices), std::move(vertices)};
}

InducedSubgraph closed_neighborhood(const Graph& g, std::size_t v) {
    if (v >= g.n()) throw DomainError("vertex index out of range");
    std::vector<std::size_t> vertices{v};
    for (std::size_t u : g.neighbors(v)) vertices.push_back(u);
    return {induce(g, vertices), std::move(vertices)};
}

std::optional<std::vector<std::size_t>> local_cliques(const Graph& g, std::size_t v) {
    const InducedSubgraph sub = subconstituent(g, v, 1);
    const Graph& x1 = sub.graph;
    const std::size_t m = x1.n();
    std::vector<int> component(m, -1);
    std::vector<std::size_t> sizes;
    for (std::size_t start = 0; start < m; ++start) {
        if (component[start] >= 0) continue;
        const int id = static_cast<int>(sizes.size());
        std::vector<std::size_t> members;
        std::queue<std::size_t> queue;
        component[start] = id;
        queue.push(start);
        while (!queue.empty()) {
            const std::size_t x = queue.front();
            queue.pop();
            members.push_back(x);
            for (std::size_t u = 0; u < m; ++u)
                if (x1.adjacent(x, u) && component[u] < 0) {
                    component[u] = id;
                    queue.push(u);
                }
        }
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (!x1.adjacent(members[i], members[j])) return std::nullopt;
        sizes.push_back(members.size());
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

std::string to_dot(const Graph& g) {
    if (g.n() > 30) throw DomainError("DOT export is limited to 30 vertices");
    std::ostringstream out;
    out << "graph G {\n";
    for (std::size_t v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
    for (std::size_t u = 0; u < g.n(); ++u)
        for (std::size_t v = u + 1; v < g.n(); ++v)
            if (g.adjacent(u, v)) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace srg
