#include <srg/finitefield.hpp>

#include <algorithm>
#include <optional>

namespace srg {

namespace {

constexpr long kMaxGroundOrder = 64;
constexpr long kMaxFieldOrder = kMaxGroundOrder * kMaxGroundOrder;

// Polynomials over F_p as ascending-degree int vectors.
using Poly = std::vector<int>;

int poly_degree(const Poly& f) {
    for (int d = static_cast<int>(f.size()) - 1; d >= 0; --d)
        if (f[static_cast<std::size_t>(d)] != 0) return d;
    return -1;
}

Poly poly_mul(const Poly& f, const Poly& g, long p) {
    if (f.empty() || g.empty()) return {};
    Poly out(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j)
            out[i + j] = static_cast<int>((out[i + j] + static_cast<long>(f[i]) * g[j]) % p);
    }
    return out;
}

// Remainder of f modulo the monic polynomial m.
Poly poly_mod(Poly f, const Poly& m, long p) {
    const int dm = poly_degree(m);
    for (int d = poly_degree(f); d >= dm; d = poly_degree(f)) {
        const long lead = f[static_cast<std::size_t>(d)];
        for (int i = 0; i <= dm; ++i) {
            auto& coeff = f[static_cast<std::size_t>(d - dm + i)];
            coeff = static_cast<int>(((coeff - lead * m[static_cast<std::size_t>(i)]) % p + p) % p);
        }
    }
    f.resize(static_cast<std::size_t>(dm));
    return f;
}

// Monic polynomial of degree d whose non-leading coefficients are the base-p
// digits of `code`, most significant digit = highest coefficient. Enumerating
// code = 0, 1, ... walks the lexicographic order used by make_field.
Poly poly_from_code(long code, int d, long p) {
    Poly f(static_cast<std::size_t>(d) + 1, 0);
    f[static_cast<std::size_t>(d)] = 1;
    for (int i = 0; i < d; ++i) {
        f[static_cast<std::size_t>(i)] = static_cast<int>(code % p);
        code /= p;
    }
    return f;
}

bool poly_is_irreducible(const Poly& f, long p) {
    const int d = poly_degree(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    if (f[0] == 0) return false;  // divisible by x
    // Trial division by every monic polynomial of degree 1..d/2.
    for (int dd = 1; 2 * dd <= d; ++dd) {
        long count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (long code = 0; code < count; ++code) {
            const Poly divisor = poly_from_code(code, dd, p);
            if (poly_degree(poly_mod(f, divisor, p)) < 0) return false;
        }
    }
    return true;
}

struct PrimePower {
    long p;
    int k;
};

std::optional<PrimePower> factor_prime_power(long q) {
    if (q < 2) return std::nullopt;
    long p = 0;
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return PrimePower{q, 1};
    int k = 0;
    long rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1) return std::nullopt;
    return PrimePower{p, k};
}

FieldSpecPtr make_field_with_cap(long q, long cap) {
    const auto pk = factor_prime_power(q);
    if (!pk) throw DomainError(std::to_string(q) + " is not a prime power");
    if (q > cap) throw DomainError("field order " + std::to_string(q) + " exceeds the desk-scale cap");

    long count = 1;
    for (int i = 0; i < pk->k; ++i) count *= pk->p;
    // Ascending code walks coefficient tuples (c_{k-1}, ..., c_0) in
    // lexicographic order: high coefficients are the significant digits.
    for (long code = 0; code < count; ++code) {
        const Poly f = poly_from_code(code, pk->k, pk->p);
        if (poly_is_irreducible(f, pk->p)) {
            auto spec = std::make_shared<FieldSpec>();
            spec->p = pk->p;
            spec->k = pk->k;
            spec->modulus = f;
            spec->q = q;
            return spec;
        }
    }
    throw std::logic_error("no irreducible modulus found for q = " + std::to_string(q));
}

void require_same_spec(const FieldElem& x, const FieldElem& y) {
    if (!x.spec || !y.spec) throw DomainError("field element without a spec");
    if (x.spec != y.spec && !(*x.spec == *y.spec)) throw DomainError("mixed field specs");
}

}  // namespace

bool FieldElem::operator==(const FieldElem& other) const {
    return spec && other.spec && *spec == *other.spec && coeffs == other.coeffs;
}

bool FieldElem::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

FieldSpecPtr make_field(long q) { return make_field_with_cap(q, kMaxGroundOrder); }

FieldElem fe_zero(const FieldSpecPtr& spec) {
    return {spec, std::vector<int>(static_cast<std::size_t>(spec->k), 0)};
}

FieldElem fe_one(const FieldSpecPtr& spec) {
    FieldElem x = fe_zero(spec);
    x.coeffs[0] = 1;
    return x;
}

FieldElem fe_from_index(const FieldSpecPtr& spec, long idx) {
    if (idx < 0 || idx >= spec->q) throw DomainError("field element index out of range");
    FieldElem x = fe_zero(spec);
    for (int i = 0; i < spec->k; ++i) {
        x.coeffs[static_cast<std::size_t>(i)] = static_cast<int>(idx % spec->p);
        idx /= spec->p;
    }
    return x;
}

long fe_index(const FieldElem& x) {
    long idx = 0;
    for (int i = x.spec->k - 1; i >= 0; --i) idx = idx * x.spec->p + x.coeffs[static_cast<std::size_t>(i)];
    return idx;
}

FieldElem fe_add(const FieldElem& x, const FieldElem& y) {
    require_same_spec(x, y);
    FieldElem out = x;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i)
        out.coeffs[i] = static_cast<int>((out.coeffs[i] + y.coeffs[i]) % x.spec->p);
    return out;
}

FieldElem fe_neg(const FieldElem& x) {
    FieldElem out = x;
    for (auto& c : out.coeffs) c = static_cast<int>((x.spec->p - c) % x.spec->p);
    return out;
}

FieldElem fe_sub(const FieldElem& x, const FieldElem& y) { return fe_add(x, fe_neg(y)); }

FieldElem fe_mul(const FieldElem& x, const FieldElem& y) {
    require_same_spec(x, y);
    const Poly product = poly_mod(poly_mul(x.coeffs, y.coeffs, x.spec->p), x.spec->modulus, x.spec->p);
    FieldElem out = fe_zero(x.spec);
    for (std::size_t i = 0; i < product.size() && i < out.coeffs.size(); ++i) out.coeffs[i] = product[i];
    return out;
}

FieldElem fe_pow(const FieldElem& x, long exponent) {
    if (exponent < 0) throw DomainError("negative exponent");
    FieldElem result = fe_one(x.spec);
    FieldElem base = x;
    while (exponent > 0) {
        if (exponent & 1) result = fe_mul(result, base);
        base = fe_mul(base, base);
        exponent >>= 1;
    }
    return result;
}

FieldElem fe_inv(const FieldElem& x) {
    if (x.is_zero()) throw DivisionByZeroError("inverse of zero field element");
    // x^(q-2) = x^{-1} by Lagrange; ample at desk scale.
    return fe_pow(x, x.spec->q - 2);
}

QuadraticExtension::QuadraticExtension(long q)
    : ground_(make_field(q)), ext_(make_field_with_cap(q * q, kMaxFieldOrder)) {
    // Locate the smallest-index root of the ground modulus inside the
    // extension; mapping the ground generator to it is a field embedding.
    FieldElem root;
    bool found = false;
    for (long idx = 0; idx < ext_->q && !found; ++idx) {
        const FieldElem cand = fe_from_index(ext_, idx);
        FieldElem value = fe_zero(ext_);
        for (int d = ground_->k; d >= 0; --d) {
            value = fe_mul(value, cand);
            FieldElem coeff = fe_zero(ext_);
            coeff.coeffs[0] = ground_->modulus[static_cast<std::size_t>(d)];
            value = fe_add(value, coeff);
        }
        if (value.is_zero()) {
            root = cand;
            found = true;
        }
    }
    if (!found) throw std::logic_error("ground modulus has no root in the extension");

    embed_.assign(static_cast<std::size_t>(ground_->q), -1);
    section_.assign(static_cast<std::size_t>(ext_->q), -1);
    for (long idx = 0; idx < ground_->q; ++idx) {
        const FieldElem x = fe_from_index(ground_, idx);
        FieldElem image = fe_zero(ext_);
        for (int d = ground_->k - 1; d >= 0; --d) {
            image = fe_mul(image, root);
            FieldElem coeff = fe_zero(ext_);
            coeff.coeffs[0] = x.coeffs[static_cast<std::size_t>(d)];
            image = fe_add(image, coeff);
        }
        const long image_idx = fe_index(image);
        embed_[static_cast<std::size_t>(idx)] = image_idx;
        if (section_[static_cast<std::size_t>(image_idx)] != -1)
            throw std::logic_error("embedding is not injective");
        section_[static_cast<std::size_t>(image_idx)] = idx;
    }
}

FieldElem QuadraticExtension::embed(const FieldElem& ground_elem) const {
    if (!(*ground_elem.spec == *ground_)) throw DomainError("element is not in the ground field");
    return fe_from_index(ext_, embed_[static_cast<std::size_t>(fe_index(ground_elem))]);
}

FieldElem QuadraticExtension::conj(const FieldElem& x) const {
    if (!(*x.spec == *ext_)) throw DomainError("conj expects an element of the quadratic extension");
    return fe_pow(x, ground_->q);
}

bool QuadraticExtension::in_ground(const FieldElem& x) const {
    return section_[static_cast<std::size_t>(fe_index(x))] != -1;
}

FieldElem QuadraticExtension::to_ground(const FieldElem& x) const {
    if (!(*x.spec == *ext_)) throw DomainError("element is not in the extension field");
    const long idx = section_[static_cast<std::size_t>(fe_index(x))];
    if (idx < 0) throw DomainError("element is not fixed by conj, hence not in the ground field");
    return fe_from_index(ground_, idx);
}

FieldElem QuadraticExtension::norm(const FieldElem& x) const {
    return to_ground(fe_mul(x, conj(x)));
}

}  // namespace srg
