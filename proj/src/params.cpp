#include <srg/params.hpp>

#include <algorithm>
#include <cmath>
#include <thread>

namespace srg {

namespace {

void require_valid(const ParamTriple& t) {
    if (!t.valid())
        throw DomainError("invalid parameter triple (need a >= 0, c >= 1, e >= 1): a=" + t.a.get_str() +
                          " c=" + t.c.get_str() + " e=" + t.e.get_str());
}

}  // namespace

std::string to_string(FeasibilityStatus status) {
    switch (status) {
        case FeasibilityStatus::Feasible: return "Feasible";
        case FeasibilityStatus::FailBasic: return "FailBasic";
        case FeasibilityStatus::FailKrein: return "FailKrein";
        case FeasibilityStatus::FailIntegrality: return "FailIntegrality";
    }
    return "?";
}

DerivedParams derive(const ParamTriple& t) {
    require_valid(t);
    const Int &a = t.a, &c = t.c, &e = t.e;

    DerivedParams d;
    d.k = (e + 1) * c + e * (e - a);
    d.s = c + 2 * e - a;
    d.lambda2 = a - c - e;
    d.l = make_rat(d.k * (d.k - a - 1), c);
    d.n = Rat(1) + Rat(d.k) + d.l;

    d.D = e * (e + 1) * (e - a) * (e - a - 1);
    d.E = (e + 1) * (e + 1) * (a * e + 3 * e - a);
    d.F = (e + 1) * (e * e + 2 * e - a) * (e * e + 3 * e - a);
    d.G = (e + 1) * (e + 2);
    d.H = 2 * e * e * e + (3 - 2 * a) * e * e - (1 + 4 * a) * e - a;
    d.P = (e + 1) * (e - a) * (e * e - e + a);
    d.Q = e * e * e + (2 * a + 1) * e + a;
    if (divides(c, d.D)) d.c_prime = Int(d.D / c);

    // Krein parameters in terms of (k, lambda1=e, lambda2), plus the quadratic
    // form of K2 in c; the two routes must agree identically.
    const Int& l2 = d.lambda2;
    d.K1 = (d.k + e) * (l2 + 1) * (l2 + 1) - (e + 1) * (d.k + e + 2 * e * l2);
    d.K2 = (d.k + l2) * (e + 1) * (e + 1) - (l2 + 1) * (d.k + l2 + 2 * e * l2);
    const Int k2_quadratic = d.P + d.Q * c - e * c * c;
    if (d.K2 != k2_quadratic)
        throw std::logic_error("K2 route mismatch: " + d.K2.get_str() + " vs " + k2_quadratic.get_str());

    if (d.s != 0) {
        const Int two_cs = 2 * c * d.s;
        d.m1 = make_rat(d.k * ((d.k + c - a - 1) * (d.s + c - a) - 2 * c), two_cs);
        d.m2 = make_rat(d.k * ((d.k + c - a - 1) * (d.s - c + a) + 2 * c), two_cs);
        const Rat m2_reduced = make_rat(d.k * (d.k - e) * (e + 1), c * d.s);
        if (*d.m2 != m2_reduced)
            throw std::logic_error("m2 route mismatch: " + d.m2->get_str() + " vs " + m2_reduced.get_str());
    }
    return d;
}

std::pair<Int, Int> krein_eval(const ParamTriple& t) {
    const DerivedParams d = derive(t);
    return {d.K1, d.K2};
}

Int krein_c_max(const Int& a, const Int& e) {
    if (a < 0 || e < 1) throw DomainError("krein_c_max requires a >= 0 and e >= 1");
    if (e >= 3) return e * e + e + 2 * a;
    return e * e + e + 3 * a;
}

bool divisibility_ok(const ParamTriple& t) {
    require_valid(t);
    const DerivedParams d = derive(t);
    return divides(t.c, d.D) && divides(d.s, d.F);
}

bool special_divisibility(const ParamTriple& t) {
    require_valid(t);
    const Int &a = t.a, &c = t.c, &e = t.e;
    if (a == e) {
        const Int rhs = e * e * (e + 1) * (e + 1) * (e + 2);
        return divides(c + e, rhs);
    }
    if (a == e - 1) {
        const Int rhs = (e + 1) * (e + 1) * (e + 1) * (e * e + e + 1);
        return divides(c + e + 1, rhs);
    }
    throw DomainError("special_divisibility requires a == e or a == e-1");
}

FeasibilityResult feasibility(const ParamTriple& t) {
    require_valid(t);
    FeasibilityResult r{{}, derive(t)};
    const DerivedParams& d = r.derived;
    auto fail = [&](FeasibilityStatus status, const std::string& detail) {
        r.verdict.status = status;
        r.verdict.detail = detail;
        return r;
    };

    if (d.k < 3) return fail(FeasibilityStatus::FailBasic, "k = " + d.k.get_str() + " < 3");
    if (d.k <= t.c)
        return fail(FeasibilityStatus::FailBasic, "k = " + d.k.get_str() + " <= c = " + t.c.get_str());
    if (d.lambda2 >= 0)
        return fail(FeasibilityStatus::FailBasic, "lambda2 = " + d.lambda2.get_str() + " >= 0");
    // lambda2 < 0 gives s = e - lambda2 >= e + 1 > 0, so m1/m2 exist below.
    if (d.l < 1) return fail(FeasibilityStatus::FailBasic, "l = " + rat_to_string(d.l) + " < 1");
    if (*d.m1 < 1) return fail(FeasibilityStatus::FailBasic, "m1 = " + rat_to_string(*d.m1) + " < 1");
    if (*d.m2 < 1) return fail(FeasibilityStatus::FailBasic, "m2 = " + rat_to_string(*d.m2) + " < 1");

    if (d.K1 < 0) return fail(FeasibilityStatus::FailKrein, "K1 = " + d.K1.get_str() + " < 0");
    if (d.K2 < 0) return fail(FeasibilityStatus::FailKrein, "K2 = " + d.K2.get_str() + " < 0");

    if (!is_integer(d.l))
        return fail(FeasibilityStatus::FailIntegrality, "l = " + rat_to_string(d.l) + " is not an integer");
    if (!is_integer(*d.m1))
        return fail(FeasibilityStatus::FailIntegrality, "m1 = " + rat_to_string(*d.m1) + " is not an integer");
    if (!is_integer(*d.m2))
        return fail(FeasibilityStatus::FailIntegrality, "m2 = " + rat_to_string(*d.m2) + " is not an integer");

    // Integrality of l, m1, m2 implies the divisibility conditions; the
    // converse is not assumed anywhere.
    if (!divisibility_ok(t))
        throw std::logic_error("integrality holds but divisibility fails for a=" + t.a.get_str() +
                               " c=" + t.c.get_str() + " e=" + t.e.get_str());

    r.verdict.status = FeasibilityStatus::Feasible;
    return r;
}

std::optional<ParamTriple> triple_from_kac(const Int& k, const Int& a, const Int& c, std::string* why) {
    auto reject = [&](const std::string& reason) -> std::optional<ParamTriple> {
        if (why) *why = reason;
        return std::nullopt;
    };
    if (a < 0 || c < 1 || k < 1) return reject("need k >= 1, a >= 0, c >= 1");
    const Int disc = (a - c) * (a - c) + 4 * (k - c);
    if (disc <= 0) return reject("discriminant " + disc.get_str() + " is not positive");
    if (!is_perfect_square(disc))
        return reject("discriminant " + disc.get_str() +
                      " is not a perfect square (conference-type parameters)");
    const Int s = floor_sqrt(disc);
    const Int twice_e = a - c + s;
    if (!divides(Int(2), twice_e)) return reject("eigenvalue (a-c+s)/2 is not an integer");
    const Int e = twice_e / 2;
    if (e < 1) return reject("positive eigenvalue e = " + e.get_str() + " < 1");
    ParamTriple t{a, c, e};
    if (derive(t).k != k)
        throw std::logic_error("degree reconstruction mismatch for k=" + k.get_str());
    return t;
}

std::vector<FeasibleEntry> feasible_c_list(const Int& a, const Int& e) {
    const Int c_max = krein_c_max(a, e);
    std::vector<FeasibleEntry> out;
    for (Int c = 1; c <= c_max; ++c) {
        FeasibilityResult r = feasibility({a, c, e});
        if (r.verdict.feasible()) out.push_back({c, std::move(r.derived)});
    }
    return out;
}

Rat n_of_c(const Int& a, const Int& e, const Int& c) {
    if (c < 1) throw DomainError("n_of_c requires c >= 1");
    const DerivedParams d = derive({a, c, e});
    const Rat via_coefficients = Rat(d.G * c + d.H) + make_rat(d.D, c);
    if (via_coefficients != d.n)
        throw std::logic_error("n(c) identity failed at a=" + a.get_str() + " e=" + e.get_str() +
                               " c=" + c.get_str());
    return d.n;
}

NBounds n_bounds(const Int& a, const Int& e) {
    if (a < 0 || e < 1) throw DomainError("n_bounds requires a >= 0 and e >= 1");
    const Int D = e * (e + 1) * (e - a) * (e - a - 1);
    const Int G = (e + 1) * (e + 2);
    const Int H = 2 * e * e * e + (3 - 2 * a) * e * e - (1 + 4 * a) * e - a;
    // ceil(H + 2 sqrt(DG)) with 2 sqrt(DG) = sqrt(4DG), all integer arithmetic.
    NBounds b;
    b.n_min = H + ceil_sqrt(4 * D * G);
    const Int root = e * e + 3 * e - a;
    b.n_max = root * root;
    return b;
}

namespace {

// The scan walks roughly max_n^2 (e, a) pairs, so the per-pair pruning runs on
// machine integers when the ranges provably fit and falls back to mpz beyond.
// For max_n <= 100000 every intermediate below is < 2^127 by direct bounding
// (c <= e^2+e+3a < 1.2e10, G < 1.1e10, |H| < 4.1e15, D < 1e20, 4GD < 4.4e30,
// and inside the window n <= max_n forces k <= max_n).
using i128 = __int128;

i128 i128_floor_sqrt(i128 x) {
    if (x <= 0) return 0;
    auto r = static_cast<i128>(sqrtl(static_cast<long double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

// feasibility() restated over a fast integer type; must accept exactly the
// triples feasibility() marks Feasible. Requires n(c) <= max_n already checked
// (so k fits comfortably once lambda2 < 0 holds).
template <typename I>
bool prescreen(I a, I c, I e) {
    const I k = (e + 1) * c + e * (e - a);
    if (k < 3 || k <= c) return false;
    const I lambda2 = a - c - e;
    if (lambda2 >= 0) return false;
    const I s = c + 2 * e - a;
    const I l_num = k * (k - a - 1);  // l = l_num / c
    if (l_num < c) return false;
    const I den = 2 * c * s;
    const I m1_num = k * ((k + c - a - 1) * (s + c - a) - 2 * c);
    if (m1_num < den) return false;
    const I m2_num = k * ((k + c - a - 1) * (s - c + a) + 2 * c);
    if (m2_num < den) return false;
    const I K1 = (k + e) * (lambda2 + 1) * (lambda2 + 1) - (e + 1) * (k + e + 2 * e * lambda2);
    if (K1 < 0) return false;
    const I P = (e + 1) * (e - a) * (e * e - e + a);
    const I Q = e * e * e + (2 * a + 1) * e + a;
    const I K2 = P + Q * c - e * c * c;
    if (K2 < 0) return false;
    if (l_num % c != 0) return false;
    if (m1_num % den != 0 || m2_num % den != 0) return false;
    return true;
}

// n(c) <= max_n without rationals: Gc^2 + Hc + D <= max_n * c (valid for c > 0).
template <typename I>
bool n_at_most(I G, I H, I D, I c, I max_n) {
    return G * c * c + H * c + D <= max_n * c;
}

// One (e, a) pair: locate the integer window of c in [lo, hi] where
// n(c) = Gc + H + D/c stays <= max_n (n is convex in c with D >= 0, so the
// window is an interval), then prescreen each candidate.
template <typename I, typename Sqrt, typename Sink>
void scan_pair(I e, I a, I max_n, Sqrt fsqrt, Sink&& sink) {
    I lo = a - e + 1;
    if (lo < 1) lo = 1;
    const I hi = (e >= 3) ? e * e + e + 2 * a : e * e + e + 3 * a;
    if (lo > hi) return;

    const I D = e * (e + 1) * (e - a) * (e - a - 1);
    const I G = (e + 1) * (e + 2);
    const I H = 2 * e * e * e + (3 - 2 * a) * e * e - (1 + 4 * a) * e - a;

    const I A = max_n - H;
    if (A <= 0) return;  // Gc^2 + Hc + D <= max_n*c needs A > 0 since D >= 0
    const I disc = A * A - 4 * G * D;
    if (disc < 0) return;
    const I isq = fsqrt(disc);

    I c_low = (A > isq) ? (A - isq) / (2 * G) : I(0);
    if (c_low < lo) c_low = lo;
    I c_high = (A + isq) / (2 * G);
    if (c_high > hi) c_high = hi;

    // The estimates are within a couple of units of the true endpoints;
    // nudge them onto the exact integer window.
    while (c_low > lo && n_at_most<I>(G, H, D, c_low - 1, max_n)) --c_low;
    while (c_low <= c_high && !n_at_most<I>(G, H, D, c_low, max_n)) ++c_low;
    while (c_high < hi && n_at_most<I>(G, H, D, c_high + 1, max_n)) ++c_high;
    while (c_high >= c_low && !n_at_most<I>(G, H, D, c_high, max_n)) --c_high;

    for (I c = c_low; c <= c_high; ++c)
        if (prescreen<I>(a, c, e)) sink(c);
}

void scan_eval_range(const Int& max_n, long e_begin, long e_step, long e_end,
                     std::vector<ScanRecord>& out) {
    const bool fast = max_n <= 100000;
    const long max_n_l = to_long(max_n);
    const long a_end = max_n_l - 3;

    auto record = [&](const Int& a, const Int& c, const Int& e) {
        FeasibilityResult r = feasibility({a, c, e});
        if (!r.verdict.feasible())
            throw std::logic_error("scan prescreen accepted an infeasible triple");
        out.push_back({{a, c, e}, std::move(r.derived)});
    };

    for (long e = e_begin; e <= e_end; e += e_step) {
        for (long a = 0; a <= a_end; ++a) {
            if (fast) {
                scan_pair<i128>(e, a, max_n_l, i128_floor_sqrt,
                                [&](i128 c) { record(Int(a), Int(static_cast<long>(c)), Int(e)); });
            } else {
                scan_pair<Int>(Int(e), Int(a), max_n, [](const Int& x) { return floor_sqrt(x); },
                               [&](const Int& c) { record(Int(a), c, Int(e)); });
            }
        }
    }
}

}  // namespace

std::vector<ScanRecord> scan(const Int& max_n, int jobs) {
    if (max_n < 5) throw DomainError("scan requires max_n >= 5");
    if (jobs < 1) jobs = 1;
    const long e_end = to_long(max_n);

    std::vector<std::vector<ScanRecord>> partial(static_cast<std::size_t>(jobs));
    if (jobs == 1) {
        scan_eval_range(max_n, 1, 1, e_end, partial[0]);
    } else {
        std::vector<std::thread> workers;
        workers.reserve(static_cast<std::size_t>(jobs));
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back(scan_eval_range, std::cref(max_n), w + 1, jobs, e_end,
                                 std::ref(partial[static_cast<std::size_t>(w)]));
        for (auto& th : workers) th.join();
    }

    std::vector<ScanRecord> records;
    for (auto& part : partial)
        for (auto& rec : part) records.push_back(std::move(rec));
    std::sort(records.begin(), records.end(), [](const ScanRecord& x, const ScanRecord& y) {
        if (x.derived.n != y.derived.n) return x.derived.n < y.derived.n;
        if (x.derived.k != y.derived.k) return x.derived.k < y.derived.k;
        if (x.triple.c != y.triple.c) return x.triple.c < y.triple.c;
        return x.triple.a < y.triple.a;
    });
    return records;
}

ParamTriple complement_params(const ParamTriple& t) {
    const DerivedParams d = derive(t);
    if (!is_integer(d.n))
        throw DomainError("complement parameters need integral n, got " + rat_to_string(d.n));
    const Int n = to_int(d.n);
    ParamTriple comp{n - 2 - 2 * d.k + t.c, n - 2 * d.k + t.a, t.c + t.e - t.a - 1};
    const Int k_comp = n - 1 - d.k;  // degree of the complement, l of the original
    if (comp.a < 0 || comp.c < 1 || comp.e < 1 || k_comp <= comp.c)
        throw NotInScopeError("complement violates k > c >= 1 (k*=" + k_comp.get_str() +
                              ", a*=" + comp.a.get_str() + ", c*=" + comp.c.get_str() +
                              ", e*=" + comp.e.get_str() + ")");
    return comp;
}

FamilyParams algebraic_family(const Int& a, const Int& e) {
    if (!(e > a && a >= 0)) throw DomainError("algebraic family requires e > a >= 0");
    FamilyParams f;
    f.triple = {a, e * (e + 1), e};
    f.derived = derive(f.triple);
    const Int expected_k = e * (e * e + 3 * e - a + 1);
    const Int root = e * e + 3 * e - a;
    if (f.derived.k != expected_k || f.derived.n != Rat(root * root) || !divisibility_ok(f.triple))
        throw std::logic_error("algebraic family identities failed at a=" + a.get_str() +
                               " e=" + e.get_str());
    return f;
}

}  // namespace srg
