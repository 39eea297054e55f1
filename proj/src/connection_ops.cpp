#include "lierine/connection_ops.hpp"

#include "lierine/errors.hpp"

namespace lierine {

Form curvature(const Connection& c)
{
    const LieRinehartData& alg = *c.algebra();
    const unsigned m = static_cast<unsigned>(alg.rank());
    Form out(c.algebra(), 2, ValueKind::Endo, c.rank());
    for (const auto& s : out.basis_subsets()) {
        const unsigned i = s[0], j = s[1];
        const PolyMatrix& gi = c.christoffel(i);
        const PolyMatrix& gj = c.christoffel(j);
        PolyMatrix r = alg.anchor(i).apply(gj) - alg.anchor(j).apply(gi) + gi * gj - gj * gi;
        if (const auto* k = alg.bracket_coefficients(i, j))
            for (unsigned l = 0; l < m; ++l)
                if (!(*k)[l].is_zero())
                    r -= (*k)[l] * c.christoffel(l);
        out.set(s, std::move(r));
    }
    return out;
}

Form curvature_by_commutator(const Connection& c)
{
    const LieRinehartData& alg = *c.algebra();
    const Ring& ring = alg.ring();
    const std::size_t r = c.rank();
    Form out(c.algebra(), 2, ValueKind::Endo, r);
    for (const auto& s : out.basis_subsets()) {
        GElement di = alg.basis(s[0]);
        GElement dj = alg.basis(s[1]);
        GElement bracket = bracket_general(alg, di, dj);
        PolyMatrix value(ring, r, r);
        for (std::size_t col = 0; col < r; ++col) {
            PolyMatrix e(ring, r, 1);
            e(col, 0) = Polynomial::constant(ring, 1);
            PolyMatrix image = apply_connection(c, di, apply_connection(c, dj, e)) -
                               apply_connection(c, dj, apply_connection(c, di, e)) -
                               apply_connection(c, bracket, e);
            for (std::size_t row = 0; row < r; ++row)
                value(row, col) = image(row, 0);
        }
        out.set(s, std::move(value));
    }
    return out;
}

bool is_flat(const Connection& c)
{
    return curvature(c).is_zero();
}

namespace {

void check_same_algebra(const Connection& a, const Connection& b, const char* op)
{
    if (!same_algebra(a.algebra(), b.algebra()))
        throw StructuralError(std::string(op) + ": connections live over different algebras");
}

} // namespace

Connection direct_sum(const Connection& a, const Connection& b)
{
    check_same_algebra(a, b, "direct_sum");
    std::vector<PolyMatrix> g;
    g.reserve(a.christoffel().size());
    for (std::size_t j = 0; j < a.christoffel().size(); ++j)
        g.push_back(block_diagonal(a.christoffel(j), b.christoffel(j)));
    return Connection(a.algebra(), a.rank() + b.rank(), std::move(g), "(" + a.label() + "⊕" + b.label() + ")",
                      ConnectionOrigin{ConnectionOrigin::Kind::DirectSum, {a.label(), b.label()}});
}

Connection tensor(const Connection& a, const Connection& b)
{
    check_same_algebra(a, b, "tensor");
    const Ring& ring = a.algebra()->ring();
    auto ida = PolyMatrix::identity(ring, a.rank());
    auto idb = PolyMatrix::identity(ring, b.rank());
    std::vector<PolyMatrix> g;
    g.reserve(a.christoffel().size());
    for (std::size_t j = 0; j < a.christoffel().size(); ++j)
        g.push_back(kron(a.christoffel(j), idb) + kron(ida, b.christoffel(j)));
    return Connection(a.algebra(), a.rank() * b.rank(), std::move(g), "(" + a.label() + "⊗" + b.label() + ")",
                      ConnectionOrigin{ConnectionOrigin::Kind::Tensor, {a.label(), b.label()}});
}

Connection add_one_form(const Connection& c, const Form& phi)
{
    if (phi.kind() != ValueKind::Endo || phi.degree() != 1)
        throw StructuralError("add_one_form needs an End W-valued 1-form");
    if (phi.rank() != c.rank())
        throw StructuralError("add_one_form: rank mismatch");
    if (!same_algebra(phi.algebra(), c.algebra()))
        throw StructuralError("add_one_form: algebra mismatch");
    std::vector<PolyMatrix> g = c.christoffel();
    for (std::size_t j = 0; j < g.size(); ++j)
        g[j] += phi.value(j);
    return Connection(c.algebra(), c.rank(), std::move(g), c.label());
}

Form connection_difference(const Connection& a, const Connection& b)
{
    check_same_algebra(a, b, "connection_difference");
    if (a.rank() != b.rank())
        throw StructuralError("connection_difference: rank mismatch");
    Form out(a.algebra(), 1, ValueKind::Endo, a.rank());
    for (std::size_t j = 0; j < a.christoffel().size(); ++j)
        out.value(j) = a.christoffel(j) - b.christoffel(j);
    return out;
}

} // namespace lierine
