// Parameter algebra for strongly regular graphs built from the triple (a, c, e):
// derived quantities, Krein conditions, divisibility conditions, feasibility
// verdicts, enumeration and scanning. All arithmetic is arbitrary precision.
#pragma once

#include <srg/numeric.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace srg {

// Complement parameters fall outside the working constraints (k > c >= 1, ...).
struct NotInScopeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a: common neighbours of an adjacent pair, c: of a non-adjacent pair,
// e: the positive eigenvalue.
struct ParamTriple {
    Int a;
    Int c;
    Int e;

    bool valid() const { return a >= 0 && c >= 1 && e >= 1; }
};

// Everything derivable from a triple. l, n, m1, m2 are exact rationals;
// integrality is judged separately by feasibility(). m1/m2 are absent only in
// the degenerate case s == 0 (a == c + 2e), where the multiplicity formulas
// divide by zero; that regime is always rejected as FailBasic.
struct DerivedParams {
    Int k;        // degree: (e+1)c + e(e-a)
    Int s;        // c + 2e - a; s^2 = (a-c)^2 + 4(k-c)
    Int lambda2;  // a - c - e
    Rat l;        // k(k-a-1)/c, size of the distance-2 subconstituent
    Rat n;        // 1 + k + l
    std::optional<Rat> m1;
    std::optional<Rat> m2;
    Int K1;
    Int K2;
    Int D;  // e(e+1)(e-a)(e-a-1)
    Int E;  // (e+1)^2 (ae + 3e - a)
    Int F;  // (e+1)(e^2 + 2e - a)(e^2 + 3e - a)
    Int G;  // (e+1)(e+2)
    Int H;  // 2e^3 + (3-2a)e^2 - (1+4a)e - a
    Int P;  // (e+1)(e-a)(e^2 - e + a)
    Int Q;  // e^3 + (2a+1)e + a
    std::optional<Int> c_prime;  // D/c when c | D
};

enum class FeasibilityStatus { Feasible, FailBasic, FailKrein, FailIntegrality };

std::string to_string(FeasibilityStatus status);

struct FeasibilityVerdict {
    FeasibilityStatus status = FeasibilityStatus::FailBasic;
    std::string detail;  // which check failed, with its exact value

    bool feasible() const { return status == FeasibilityStatus::Feasible; }
};

struct FeasibilityResult {
    FeasibilityVerdict verdict;
    DerivedParams derived;
};

// Total for valid triples. m2 is computed both from the multiplicity formula and
// from the reduced form k(k-e)(e+1)/(c(c+2e-a)) and the two are asserted equal.
DerivedParams derive(const ParamTriple& t);

// (K1, K2). K2 is evaluated as P + Qc - ec^2 and asserted equal to the direct
// (k, lambda1, lambda2) formula.
std::pair<Int, Int> krein_eval(const ParamTriple& t);

// Upper bound on c implied by K2 >= 0: e^2+e+2a for e >= 3, e^2+e+3a for e in {1,2}.
Int krein_c_max(const Int& a, const Int& e);

// c | D and (c+2e-a) | F. D == 0 counts as divisible by every c.
bool divisibility_ok(const ParamTriple& t);

// Single-divisor form available when a == e or a == e-1; DomainError otherwise.
bool special_divisibility(const ParamTriple& t);

// Authoritative feasibility: basic constraints, both Krein conditions, then
// direct integrality of l, m1, m2. The divisibility conditions are asserted
// necessary whenever integrality holds.
FeasibilityResult feasibility(const ParamTriple& t);

// Recover e from (k, a, c); nullopt when the discriminant is not a perfect
// square (conference-type parameters) or e < 1, with the reason in *why.
std::optional<ParamTriple> triple_from_kac(const Int& k, const Int& a, const Int& c,
                                           std::string* why = nullptr);

struct FeasibleEntry {
    Int c;
    DerivedParams derived;
};

// All c in [1, krein_c_max(a, e)] with a Feasible verdict, ascending c.
std::vector<FeasibleEntry> feasible_c_list(const Int& a, const Int& e);

// n as a function of c: Gc + H + D/c, equal to 1 + k + l exactly.
Rat n_of_c(const Int& a, const Int& e, const Int& c);

struct NBounds {
    Int n_min;  // ceil(H + 2*sqrt(DG)), the real minimum of the convex n(c)
    Int n_max;  // (e^2 + 3e - a)^2
};

NBounds n_bounds(const Int& a, const Int& e);

struct ScanRecord {
    ParamTriple triple;
    DerivedParams derived;
};

// Every Feasible triple with n <= max_n, each exactly once, sorted by
// (n, k, c, a). Exhaustive over e in [1, N], a in [0, N-3],
// c in [max(1, a-e+1), krein_c_max(a, e)], pruned by the convex lower bound on
// n(c) clamped to that interval. Output is independent of the worker count.
std::vector<ScanRecord> scan(const Int& max_n, int jobs = 1);

// (a*, c*, e*) = (n-2-2k+c, n-2k+a, c+e-a-1); an involution.
// NotInScopeError when the complement violates k* > c* >= 1.
ParamTriple complement_params(const ParamTriple& t);

struct FamilyParams {
    ParamTriple triple;
    DerivedParams derived;
};

// The algebraically feasible family c = e(e+1), for e > a >= 0. Always passes
// divisibility_ok; k = e(e^2+3e-a+1) and n = (e^2+3e-a)^2.
FamilyParams algebraic_family(const Int& a, const Int& e);

}  // namespace srg
