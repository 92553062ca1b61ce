// Arithmetic in GF(p^k) with the Frobenius conjugation x -> x^q needed for
// Hermitian matrices over the quadratic extension of F_q.
#pragma once

#include <srg/numeric.hpp>

#include <memory>
#include <vector>

namespace srg {

struct DivisionByZeroError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Immutable description of GF(p^k): the modulus is the lexicographically
// smallest monic irreducible of degree k over F_p (coefficient tuples compared
// from the degree-(k-1) coefficient down), verified by exhaustive trial division.
struct FieldSpec {
    long p;
    int k;
    std::vector<int> modulus;  // length k+1, ascending degree, monic
    long q;                    // p^k

    bool operator==(const FieldSpec& other) const {
        return p == other.p && k == other.k && modulus == other.modulus;
    }
};

using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

// Coefficient vector of length k over F_p, ascending degree.
struct FieldElem {
    FieldSpecPtr spec;
    std::vector<int> coeffs;

    bool operator==(const FieldElem& other) const;
    bool operator!=(const FieldElem& other) const { return !(*this == other); }
    bool is_zero() const;
};

// DomainError unless q is a prime power with q <= 64 (desk scale).
FieldSpecPtr make_field(long q);

FieldElem fe_zero(const FieldSpecPtr& spec);
FieldElem fe_one(const FieldSpecPtr& spec);
// Element with index idx in the fixed enumeration: coefficients are the
// little-endian base-p digits of idx. Deterministic across runs.
FieldElem fe_from_index(const FieldSpecPtr& spec, long idx);
long fe_index(const FieldElem& x);

FieldElem fe_add(const FieldElem& x, const FieldElem& y);
FieldElem fe_sub(const FieldElem& x, const FieldElem& y);
FieldElem fe_neg(const FieldElem& x);
FieldElem fe_mul(const FieldElem& x, const FieldElem& y);
FieldElem fe_inv(const FieldElem& x);  // DivisionByZeroError for 0
FieldElem fe_pow(const FieldElem& x, long exponent);

// F_{q^2} as a degree-2k extension of F_p together with an explicit embedding
// of F_q, computed at construction by mapping the ground modulus root to its
// smallest-index root in the extension; ground membership = fixed by conj.
class QuadraticExtension {
public:
    explicit QuadraticExtension(long q);

    long q() const { return ground_->q; }
    const FieldSpecPtr& ground() const { return ground_; }
    const FieldSpecPtr& ext() const { return ext_; }

    FieldElem embed(const FieldElem& ground_elem) const;
    // x -> x^q on the extension field; an involutory automorphism fixing F_q.
    FieldElem conj(const FieldElem& x) const;
    // x * conj(x), returned as an element of the ground field.
    FieldElem norm(const FieldElem& x) const;

    bool in_ground(const FieldElem& x) const;
    FieldElem to_ground(const FieldElem& x) const;  // DomainError if not conj-fixed

private:
    FieldSpecPtr ground_;
    FieldSpecPtr ext_;
    std::vector<long> embed_;    // ground index -> extension index
    std::vector<long> section_;  // extension index -> ground index, or -1
};

}  // namespace srg
