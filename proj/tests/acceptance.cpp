// Acceptance suite: one timed pass/fail line per criterion, all comparisons
// exact. Run with --tool <srgtool path> and --fixtures <fixtures dir>.
#include <srg/fixture.hpp>
#include <srg/graph6.hpp>
#include <srg/hermitian.hpp>
#include <srg/serialize.hpp>
#include <srg/starcomp.hpp>

#include <json.hpp>

#include "oracles.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace srg;

std::string g_tool = "./srgtool";
std::string g_fixtures = "fixtures";

struct Check {
    std::vector<std::string> failures;

    void require(bool condition, const std::string& what) {
        if (!condition) failures.push_back(what);
    }
};

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_tool(const std::string& args) {
    const std::string command = g_tool + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string output;
    std::array<char, 4096> buffer{};
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

// Degree multiset, per-vertex triangle counts, and the common-neighbour
// profile over all pairs keyed by adjacency.
struct Fingerprint {
    std::multiset<std::size_t> degrees;
    std::multiset<long> triangles;
    std::map<std::pair<bool, long>, long> pair_profile;

    bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const Graph& g) {
    Fingerprint fp;
    const std::size_t n = g.n();
    std::vector<long> triangle_count(n, 0);
    for (std::size_t u = 0; u < n; ++u) fp.degrees.insert(g.degree(u));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            const long common = static_cast<long>(g.adjacency().row_dot(u, g.adjacency(), v));
            const bool adj = g.adjacent(u, v);
            ++fp.pair_profile[{adj, common}];
            if (adj) {
                triangle_count[u] += common;
                triangle_count[v] += common;
            }
        }
    for (std::size_t u = 0; u < n; ++u) fp.triangles.insert(triangle_count[u] / 2);
    return fp;
}

void criterion_enumerate_cli(Check& check) {
    const RunResult r = run_tool("enumerate --a 1 --e 4 --format json");
    check.require(r.exit_code == 0, "enumerate exited with " + std::to_string(r.exit_code));
    if (r.exit_code != 0) return;
    const auto records = nlohmann::json::parse(r.output, nullptr, false);
    check.require(!records.is_discarded() && records.is_array() && records.size() == 3,
                  "expected exactly three records");
    if (!records.is_array() || records.size() != 3) return;
    const std::array<std::array<const char*, 3>, 3> expected = {
        {{"2", "243", "22"}, {"8", "378", "52"}, {"20", "729", "112"}}};
    for (std::size_t i = 0; i < 3; ++i) {
        check.require(records[i]["c"] == expected[i][0], "record c mismatch");
        check.require(records[i]["n"] == expected[i][1], "record n mismatch");
        check.require(records[i]["k"] == expected[i][2], "record k mismatch");
    }
}

void criterion_krein_regression(Check& check) {
    check.require(krein_c_max(1, 1) == 5, "krein_c_max(1,1) != 5");
    const auto list = feasible_c_list(1, 1);
    check.require(list.size() == 3, "feasible_c_list(1,1) size != 3");
    const long expected_c[] = {2, 3, 5};
    const long expected_n[] = {9, 15, 27};
    for (std::size_t i = 0; i < list.size() && i < 3; ++i) {
        check.require(list[i].c == expected_c[i], "feasible c mismatch");
        check.require(list[i].derived.n == expected_n[i], "feasible n mismatch");
    }
    const FeasibilityResult r = feasibility({1, 11, 1});
    check.require(r.verdict.status == FeasibilityStatus::FailKrein, "(1,11,1) not FailKrein");
    check.require(r.derived.K2 == -66, "K2(1,11,1) != -66");
}

void criterion_bounds_table(Check& check) {
    const long expected_min[] = {4, 50, 154, 342, 638, 1066, 1650, 2413, 3381, 4577};
    const long expected_max[] = {16, 100, 324, 784, 1600, 2916, 4900, 7744, 11664, 16900};
    for (long e = 1; e <= 10; ++e) {
        const NBounds b = n_bounds(0, e);
        check.require(b.n_min == expected_min[e - 1],
                      "n_min(0," + std::to_string(e) + ") mismatch");
        check.require(b.n_max == expected_max[e - 1],
                      "n_max(0," + std::to_string(e) + ") mismatch");
    }
    check.require(n_bounds(0, 11).n_min == 6025, "n_min(0,11) != 6025");
}

void criterion_scan_consistency(Check& check) {
    const auto big = scan(1000);
    for (const auto& rec : big)
        if (rec.triple.a == 0)
            check.require(rec.triple.e <= 5, "a=0 record with e > 5 at n <= 1000");

    const auto small = scan(100);
    std::vector<oracle::BruteRecord> a0;
    for (const auto& rec : small) {
        if (rec.triple.a != 0) continue;
        a0.push_back({to_long(rec.triple.a), to_long(rec.triple.c), to_long(rec.triple.e),
                      to_long(to_int(rec.derived.n)), to_long(rec.derived.k)});
    }
    const std::vector<std::array<long, 3>> expected = {{10, 3, 1},  {16, 5, 2},  {50, 7, 1},
                                                       {56, 10, 2}, {77, 16, 4}, {100, 22, 6}};
    check.require(a0.size() == expected.size(), "a=0 scan(100) size mismatch");
    for (std::size_t i = 0; i < a0.size() && i < expected.size(); ++i) {
        check.require(a0[i].n == expected[i][0], "scan n mismatch");
        check.require(a0[i].k == expected[i][1], "scan k mismatch");
        check.require(a0[i].c == expected[i][2], "scan c mismatch");
    }

    // Cross-validate the full scan against the independent brute-force filter.
    std::vector<oracle::BruteRecord> ours;
    for (const auto& rec : small)
        ours.push_back({to_long(rec.triple.a), to_long(rec.triple.c), to_long(rec.triple.e),
                        to_long(to_int(rec.derived.n)), to_long(rec.derived.k)});
    std::sort(ours.begin(), ours.end());
    check.require(ours == oracle::brute_force_scan(100), "scan(100) disagrees with the oracle");
}

void check_hermitian(Check& check, long q, long n, long k, long a, long c) {
    const auto s = rank_one_set(q);
    check.require(static_cast<long>(s.size()) == k, "rank-1 set size mismatch at q=" + std::to_string(q));
    const Graph g = cayley_graph(q);
    const SrgVerification v = verify_srg(g);
    check.require(v.ok(), "cayley graph q=" + std::to_string(q) + " not certified");
    if (!v.ok()) return;
    check.require(static_cast<long>(g.n()) == n && v.certificate->k == k && v.certificate->a == a &&
                      v.certificate->c == c,
                  "cayley graph q=" + std::to_string(q) + " has wrong parameters");
    const std::vector<std::size_t> expected(static_cast<std::size_t>(q * q + 1),
                                            static_cast<std::size_t>(q - 1));
    for (std::size_t vtx = 0; vtx < g.n(); ++vtx) {
        const auto cliques = local_cliques(g, vtx);
        if (!cliques || *cliques != expected) {
            check.require(false, "local clique structure fails at vertex " + std::to_string(vtx));
            return;
        }
    }
}

void criterion_hermitian(Check& check) {
    check_hermitian(check, 2, 16, 5, 0, 2);
    check_hermitian(check, 3, 81, 20, 1, 6);
    check_hermitian(check, 4, 256, 51, 2, 12);
}

void criterion_hermitian_extended(Check& check) {
    check_hermitian(check, 5, 625, 104, 3, 20);
    // Largest in-scope graph: the codec must round-trip it bit-exactly.
    const Graph g = cayley_graph(5);
    check.require(graph6_decode(graph6_encode(g)) == g, "graph6 round-trip fails at n = 625");
}

void criterion_closed_neighbourhoods(Check& check) {
    const ClosedNbhdReport q2 = closed_nbhd_theorem_check(0, 1, cayley_graph(2));
    check.require(q2.ok() && q2.vertices_checked == 16, "q=2 closed neighbourhood check failed");
    const ClosedNbhdReport q3 = closed_nbhd_theorem_check(1, 2, cayley_graph(3));
    check.require(q3.ok() && q3.vertices_checked == 81, "q=3 closed neighbourhood check failed");
    check.require(q3.m2 == 20 && q3.k == 20, "q=3 multiplicity mismatch");
}

void criterion_pentagon_pipeline(Check& check) {
    const ProblemFixture f = load_fixture(g_fixtures + "/petersen_from_pentagon.json");
    const Graph q = graph6_decode(f.star_complement_g6);
    const ReconstructionProblem problem = make_reconstruction_problem(q, f.params);
    const BSearchResult search = b_search(problem.r, problem.m);
    check.require(search.status == BSearchStatus::Complete, "search not complete");
    check.require(search.solutions.size() == 1, "expected a unique B up to column permutation");
    if (search.solutions.size() != 1) return;
    check.require(search.solutions[0] == BitMatrix::identity(5), "B != I");

    const ExactMatrix a_p = reconstruct(problem.a_q, search.solutions[0], f.params.e);
    const ExactMatrix pentagram = ExactMatrix::all_ones(5) - ExactMatrix::identity(5) - problem.a_q;
    check.require(a_p == pentagram, "A_P != J - I - A_Q");

    const AssembledGraph assembled =
        assemble_and_verify(a_p, search.solutions[0], problem.a_q, f.params);
    check.require(assembled.graph.n() == 10 && assembled.certificate.k == 3 &&
                      assembled.certificate.a == 0 && assembled.certificate.c == 1,
                  "assembled graph is not SR(10,3,0,1)");
}

void criterion_k33_pipeline(Check& check) {
    const ProblemFixture f = load_fixture(g_fixtures + "/triangular_from_k33.json");
    const Graph q = graph6_decode(f.star_complement_g6);
    const ReconstructionProblem problem = make_reconstruction_problem(q, f.params);
    check.require(problem.r == *f.r, "R does not match the stored block matrix");

    const BSearchResult search = b_search(problem.r, problem.m);
    check.require(search.status == BSearchStatus::Complete, "search not complete");
    bool found = false;
    const BitMatrix canon = canonical_columns(*f.b);
    for (const BitMatrix& b : search.solutions)
        if (canonical_columns(b) == canon) found = true;
    check.require(found, "stored B not among the search solutions");

    const ExactMatrix a_p = reconstruct(problem.a_q, *f.b, f.params.e);
    ExactMatrix expected(9, 9);
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = 0; j < 9; ++j)
            if (i / 3 != j / 3 && i % 3 != j % 3) expected.at(i, j) = 1;
    check.require(a_p == expected, "A_P is not the 3x3 rook block form");

    const AssembledGraph assembled = assemble_and_verify(a_p, *f.b, problem.a_q, f.params);
    check.require(assembled.graph.n() == 15 && assembled.certificate.k == 6 &&
                      assembled.certificate.a == 1 && assembled.certificate.c == 3,
                  "assembled graph is not SR(15,6,1,3)");
}

void criterion_clebsch_pipeline(Check& check) {
    const ProblemFixture f = load_fixture(g_fixtures + "/clebsch_from_windmill.json");
    const Graph q = graph6_decode(f.star_complement_g6);
    const ReconstructionProblem problem = make_reconstruction_problem(q, f.params);

    // gram of the corrected hub-deleted factor equals circ[4,1,1,1,1].
    BitMatrix b_flat(5, 10);
    for (std::size_t i = 1; i < 6; ++i)
        for (std::size_t j = 0; j < 10; ++j)
            if (f.b->get(i, j)) b_flat.set(i - 1, j, true);
    check.require(gram(b_flat) == windmill_r_flat(1), "gram(B_flat) != circ[4,1,1,1,1]");

    BSearchConfig config;
    config.block_hints = {{2, 3, 2}, {1, 4, 2}};
    const BSearchResult search = b_search(problem.r, problem.m, config);
    check.require(search.status == BSearchStatus::Complete, "search not complete");
    bool found = false;
    const BitMatrix canon = canonical_columns(*f.b, config.block_hints);
    for (const BitMatrix& b : search.solutions)
        if (canonical_columns(b, config.block_hints) == canon) found = true;
    check.require(found, "stored B not among the hinted search solutions");

    const ExactMatrix a_p = reconstruct(problem.a_q, *f.b, f.params.e);
    const AssembledGraph assembled = assemble_and_verify(a_p, *f.b, problem.a_q, f.params);
    check.require(assembled.graph.n() == 16 && assembled.certificate.k == 5 &&
                      assembled.certificate.a == 0 && assembled.certificate.c == 2,
                  "assembled graph is not SR(16,5,0,2)");
    check.require(fingerprint(assembled.graph) == fingerprint(cayley_graph(2)),
                  "fingerprint differs from the q=2 cayley graph");
}

void criterion_property_suites(Check& check) {
    // Divisibility necessity and the double-formula identities over the grid.
    for (long a = 0; a <= 8; ++a)
        for (long e = 1; e <= 8; ++e) {
            const Int c_max = krein_c_max(a, e);
            for (Int c = 1; c <= c_max; ++c) {
                const ParamTriple t{a, c, e};
                const DerivedParams d = derive(t);  // asserts K2 and m2 double routes
                const Int ac = t.a - t.c;
                const Int kc = d.k - t.c;
                check.require(t.e * t.e - ac * t.e - kc == 0, "eigenvalue equation fails for e");
                check.require(d.lambda2 * d.lambda2 - ac * d.lambda2 - kc == 0,
                              "eigenvalue equation fails for lambda2");
                if (d.lambda2 < 0 && is_integer(d.l) && is_integer(*d.m1) && is_integer(*d.m2))
                    check.require(divisibility_ok(t), "necessity fails on the grid");
                if (a == e || a == e - 1)
                    check.require(special_divisibility(t) == divisibility_ok(t),
                                  "single-divisor form disagrees");
            }
        }

    // m2 = k across the algebraically feasible family.
    for (long e = 1; e <= 8; ++e)
        for (long a = 0; a < e; ++a) {
            const FamilyParams f = algebraic_family(a, e);
            check.require(*f.derived.m2 == Rat(f.derived.k), "m2 != k in the family");
        }

    // graph6 round-trips across the constructed set.
    const Graph graphs[] = {petersen(),          cycle(5),           complete_bipartite(3, 3),
                            line_graph(complete(6)), complete(63),   generalized_windmill(4),
                            cayley_graph(2),     cayley_graph(3),    cayley_graph(4)};
    for (const Graph& g : graphs)
        check.require(graph6_decode(graph6_encode(g)) == g, "graph6 round-trip failed");

    // Field axioms, exhaustive for q <= 25.
    for (long q : {2L, 3L, 4L, 5L, 8L, 9L, 16L, 25L}) {
        const FieldSpecPtr f = make_field(q);
        bool ok = true;
        for (long i = 0; i < q && ok; ++i)
            for (long j = 0; j < q && ok; ++j) {
                const FieldElem x = fe_from_index(f, i);
                const FieldElem y = fe_from_index(f, j);
                if (!(fe_add(x, y) == fe_add(y, x)) || !(fe_mul(x, y) == fe_mul(y, x))) ok = false;
                for (long l = 0; l < q && ok; ++l) {
                    const FieldElem z = fe_from_index(f, l);
                    if (!(fe_mul(fe_mul(x, y), z) == fe_mul(x, fe_mul(y, z)))) ok = false;
                    if (!(fe_mul(x, fe_add(y, z)) == fe_add(fe_mul(x, y), fe_mul(x, z)))) ok = false;
                }
            }
        for (long i = 1; i < q; ++i)
            if (!(fe_mul(fe_inv(fe_from_index(f, i)), fe_from_index(f, i)) == fe_one(f))) ok = false;
        check.require(ok, "field axioms fail for q=" + std::to_string(q));
    }
    for (long q : {2L, 3L, 4L, 5L}) {
        const QuadraticExtension ext(q);
        bool ok = true;
        for (long i = 0; i < q * q && ok; ++i)
            for (long j = 0; j < q * q && ok; ++j) {
                const FieldElem x = fe_from_index(ext.ext(), i);
                const FieldElem y = fe_from_index(ext.ext(), j);
                if (!(ext.conj(fe_add(x, y)) == fe_add(ext.conj(x), ext.conj(y)))) ok = false;
                if (!(ext.conj(fe_mul(x, y)) == fe_mul(ext.conj(x), ext.conj(y)))) ok = false;
            }
        check.require(ok, "conj automorphism fails for q=" + std::to_string(q));
    }

    // Reconstruction round-trip on every fixture.
    for (const char* name :
         {"petersen_from_pentagon.json", "triangular_from_k33.json", "clebsch_from_windmill.json"}) {
        const ProblemFixture f = load_fixture(g_fixtures + "/" + name);
        const Graph q = graph6_decode(f.star_complement_g6);
        const ReconstructionProblem problem = make_reconstruction_problem(q, f.params);
        if (f.r) check.require(problem.r == *f.r, std::string(name) + ": stored R mismatch");
        const ExactMatrix a_p = reconstruct(problem.a_q, *f.b, f.params.e);
        const AssembledGraph assembled = assemble_and_verify(a_p, *f.b, problem.a_q, f.params);
        // Re-extract B from the assembled graph (P first, Q last) and rebuild.
        const std::size_t p_size = a_p.rows();
        const std::size_t q_size = problem.a_q.rows();
        BitMatrix b_again(q_size, p_size);
        for (std::size_t i = 0; i < q_size; ++i)
            for (std::size_t j = 0; j < p_size; ++j)
                if (assembled.graph.adjacent(p_size + i, j)) b_again.set(i, j, true);
        check.require(b_again == *f.b, std::string(name) + ": extracted B differs");
        check.require(reconstruct(problem.a_q, b_again, f.params.e) == a_p,
                      std::string(name) + ": round-trip A_P differs");
    }

    // Round-trip through the hermitian closed neighbourhoods.
    for (long qv : {2L, 3L}) {
        const Graph g = cayley_graph(qv);
        const ParamTriple t{qv - 2, qv * (qv - 1), qv - 1};
        const InducedSubgraph nbhd = closed_neighborhood(g, 0);
        std::vector<char> in_q(g.n(), 0);
        for (std::size_t v : nbhd.vertices) in_q[v] = 1;
        std::vector<std::size_t> p_vertices;
        for (std::size_t v = 0; v < g.n(); ++v)
            if (!in_q[v]) p_vertices.push_back(v);
        ExactMatrix a_q(nbhd.vertices.size(), nbhd.vertices.size());
        for (std::size_t i = 0; i < nbhd.vertices.size(); ++i)
            for (std::size_t j = 0; j < nbhd.vertices.size(); ++j)
                if (g.adjacent(nbhd.vertices[i], nbhd.vertices[j])) a_q.at(i, j) = 1;
        BitMatrix b(nbhd.vertices.size(), p_vertices.size());
        for (std::size_t i = 0; i < nbhd.vertices.size(); ++i)
            for (std::size_t j = 0; j < p_vertices.size(); ++j)
                if (g.adjacent(nbhd.vertices[i], p_vertices[j])) b.set(i, j, true);
        ExactMatrix a_p(p_vertices.size(), p_vertices.size());
        for (std::size_t i = 0; i < p_vertices.size(); ++i)
            for (std::size_t j = 0; j < p_vertices.size(); ++j)
                if (g.adjacent(p_vertices[i], p_vertices[j])) a_p.at(i, j) = 1;
        check.require(reconstruct(a_q, b, t.e) == a_p,
                      "hermitian round-trip fails at q=" + std::to_string(qv));
    }

    // b_search completeness against brute-force row enumeration (R = I5).
    const BSearchResult identity_search = b_search(ExactMatrix::identity(5), 5);
    check.require(identity_search.status == BSearchStatus::Complete &&
                      identity_search.solutions.size() == 1 &&
                      identity_search.solutions[0] == BitMatrix::identity(5),
                  "identity search mismatch");
}

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<void(Check&)> body;
};

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        if (flag == "--tool") g_tool = argv[i + 1];
        if (flag == "--fixtures") g_fixtures = argv[i + 1];
    }

    const std::vector<Criterion> criteria = {
        {1, "enumerate a=1 e=4 emits c in {2,8,20} via the CLI", 0.1, criterion_enumerate_cli},
        {2, "krein bound and feasibility regression at a=1", 0.1, criterion_krein_regression},
        {3, "n_min/n_max table for a=0, e=1..11", 0.1, criterion_bounds_table},
        {4, "scan consistency and brute-force cross-validation", 2.0, criterion_scan_consistency},
        {5, "hermitian cayley graphs certified for q=2,3,4", 5.0, criterion_hermitian},
        {6, "closed neighbourhoods are star complements on q=2,3 graphs", 5.0,
         criterion_closed_neighbourhoods},
        {7, "pentagon pipeline reconstructs SR(10,3,0,1)", 1.0, criterion_pentagon_pipeline},
        {8, "K33 pipeline reconstructs SR(15,6,1,3)", 10.0, criterion_k33_pipeline},
        {9, "windmill pipeline with block hints reconstructs SR(16,5,0,2)", 30.0,
         criterion_clebsch_pipeline},
        {10, "module property suites", 60.0, criterion_property_suites},
        {11, "hermitian cayley graph certified for q=5 (extended)", 60.0,
         criterion_hermitian_extended},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.body(check);
        } catch (const std::exception& err) {
            check.failures.push_back(std::string("exception: ") + err.what());
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (elapsed >= criterion.limit_seconds)
            check.failures.push_back("time limit exceeded: " + std::to_string(elapsed) + " s");

        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(3);
        if (check.failures.empty()) {
            line << "[PASS] criterion " << criterion.id << ": " << criterion.name << " (" << elapsed
                 << " s, limit " << criterion.limit_seconds << " s)";
        } else {
            ++failures;
            line << "[FAIL] criterion " << criterion.id << ": " << criterion.name << " (" << elapsed
                 << " s, limit " << criterion.limit_seconds << " s)";
            for (const std::string& failure : check.failures) line << "\n       - " << failure;
        }
        std::cout << line.str() << "\n";
    }

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
