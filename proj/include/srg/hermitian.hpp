// Cayley graph on 2x2 Hermitian matrices over F_{q^2} with the rank-1
// connection set: vertices are the q^4 matrices, M ~ M' iff M - M' has rank 1.
#pragma once

#include <srg/finitefield.hpp>
#include <srg/graphs.hpp>

#include <vector>

namespace srg {

// m21 = conj(m12) is implicit; m11 and m22 live in the ground field F_q.
struct HermMatrix {
    FieldElem m11;
    FieldElem m22;
    FieldElem m12;  // in F_{q^2}
};

class HermitianSpace {
public:
    // DomainError unless q is a prime power with q <= 5 (n = q^4 <= 625).
    explicit HermitianSpace(long q);

    long q() const { return field_.q(); }
    long size() const;  // q^4

    // Vertex indexing is the mixed-radix encoding
    //   index = i(m11) + q * i(m22) + q^2 * i(m12)
    // over the field-element enumeration order; fixed so fixtures are stable.
    HermMatrix matrix_at(long index) const;
    long index_of(const HermMatrix& m) const;

    HermMatrix add(const HermMatrix& x, const HermMatrix& y) const;
    HermMatrix subtract(const HermMatrix& x, const HermMatrix& y) const;
    HermMatrix negate(const HermMatrix& x) const;
    bool is_zero(const HermMatrix& x) const;
    // m11 * m22 - norm(m12), in the ground field.
    FieldElem det(const HermMatrix& x) const;
    bool is_rank_one(const HermMatrix& x) const { return !is_zero(x) && det(x).is_zero(); }

    const QuadraticExtension& field() const { return field_; }

private:
    QuadraticExtension field_;
};

// All rank-1 Hermitian matrices, by exhaustive enumeration; |S| = (q-1)(q^2+1)
// and S = -S.
std::vector<HermMatrix> rank_one_set(long q);

// The Cayley graph (H, S) on q^4 vertices in the fixed enumeration order,
// certified SR(q^4, (q-1)(q^2+1), q-2, q(q-1)) before being returned.
Graph cayley_graph(long q);

}  // namespace srg
