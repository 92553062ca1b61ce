#include <srg/hermitian.hpp>

namespace srg {

HermitianSpace::HermitianSpace(long q) : field_(q) {
    if (q > 5) throw DomainError("hermitian construction is capped at q <= 5 (n = q^4 <= 625)");
}

long HermitianSpace::size() const {
    const long qq = q();
    return qq * qq * qq * qq;
}

HermMatrix HermitianSpace::matrix_at(long index) const {
    const long qq = q();
    if (index < 0 || index >= size()) throw DomainError("hermitian matrix index out of range");
    HermMatrix m;
    m.m11 = fe_from_index(field_.ground(), index % qq);
    index /= qq;
    m.m22 = fe_from_index(field_.ground(), index % qq);
    index /= qq;
    m.m12 = fe_from_index(field_.ext(), index);
    return m;
}

long HermitianSpace::index_of(const HermMatrix& m) const {
    const long qq = q();
    return fe_index(m.m11) + qq * fe_index(m.m22) + qq * qq * fe_index(m.m12);
}

HermMatrix HermitianSpace::add(const HermMatrix& x, const HermMatrix& y) const {
    return {fe_add(x.m11, y.m11), fe_add(x.m22, y.m22), fe_add(x.m12, y.m12)};
}

HermMatrix HermitianSpace::subtract(const HermMatrix& x, const HermMatrix& y) const {
    return {fe_sub(x.m11, y.m11), fe_sub(x.m22, y.m22), fe_sub(x.m12, y.m12)};
}

HermMatrix HermitianSpace::negate(const HermMatrix& x) const {
    return {fe_neg(x.m11), fe_neg(x.m22), fe_neg(x.m12)};
}

bool HermitianSpace::is_zero(const HermMatrix& x) const {
    return x.m11.is_zero() && x.m22.is_zero() && x.m12.is_zero();
}

FieldElem HermitianSpace::det(const HermMatrix& x) const {
    return fe_sub(fe_mul(x.m11, x.m22), field_.norm(x.m12));
}

std::vector<HermMatrix> rank_one_set(long q) {
    HermitianSpace space(q);
    std::vector<HermMatrix> set;
    for (long idx = 0; idx < space.size(); ++idx) {
        const HermMatrix m = space.matrix_at(idx);
        if (space.is_rank_one(m)) set.push_back(m);
    }
    const long expected = (q - 1) * (q * q + 1);
    if (static_cast<long>(set.size()) != expected)
        throw std::logic_error("rank-1 set has size " + std::to_string(set.size()) + ", expected " +
                               std::to_string(expected));
    return set;
}

Graph cayley_graph(long q) {
    HermitianSpace space(q);
    const std::vector<HermMatrix> connection = rank_one_set(q);
    const long n = space.size();

    BitMatrix adj(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (long v = 0; v < n; ++v) {
        const HermMatrix m = space.matrix_at(v);
        for (const HermMatrix& s : connection) {
            const long w = space.index_of(space.add(m, s));
            adj.set(static_cast<std::size_t>(v), static_cast<std::size_t>(w), true);
        }
    }
    Graph g{std::move(adj)};

    const SrgVerification check = verify_srg(g);
    if (!check.ok())
        throw std::logic_error("hermitian cayley graph failed certification: " + check.failure);
    const SrgCertificate& cert = *check.certificate;
    if (cert.k != (q - 1) * (q * q + 1) || cert.a != q - 2 || cert.c != q * (q - 1))
        throw std::logic_error("hermitian cayley graph has unexpected parameters");
    return g;
}

}  // namespace srg
