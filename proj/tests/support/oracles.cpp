#include "oracles.hpp"

#include "lierine/lie_rinehart.hpp"

#include <algorithm>
#include <numeric>

using namespace lierine;

namespace oracle {

PolyMatrix literal_curvature(const Connection& c, const GElement& d, const GElement& e, const PolyMatrix& w)
{
    const GElement de = bracket_general(*c.algebra(), d, e);
    return apply_connection(c, d, apply_connection(c, e, w)) - apply_connection(c, e, apply_connection(c, d, w)) -
           apply_connection(c, de, w);
}

PolyMatrix curvature_double_sum(const Connection& c, const Form& psi, std::span<const GElement> args)
{
    const std::size_t n = args.size();
    PolyMatrix total(c.algebra()->ring(), c.rank(), 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<GElement> rest;
            for (std::size_t k = 0; k < n; ++k)
                if (k != i && k != j)
                    rest.push_back(args[k]);
            PolyMatrix term = literal_curvature(c, args[i], args[j], psi.evaluate(rest));
            if ((i + j + 1) % 2 == 0)
                total += term;
            else
                total -= term;
        }
    return total;
}

namespace {

int parity(const std::vector<std::size_t>& perm)
{
    int inversions = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
        for (std::size_t b = a + 1; b < perm.size(); ++b)
            inversions += perm[a] > perm[b] ? 1 : 0;
    return inversions % 2;
}

PolyMatrix product(const Form& phi, const PolyMatrix& a, const Form& psi, const PolyMatrix& b)
{
    if (phi.kind() == ValueKind::Scalar && psi.kind() != ValueKind::Scalar)
        return a(0, 0) * b;
    if (psi.kind() == ValueKind::Scalar && phi.kind() != ValueKind::Scalar)
        return b(0, 0) * a;
    return a * b;
}

} // namespace

Form wedge_by_permutations(const Form& phi, const Form& psi)
{
    const Algebra& alg = phi.algebra();
    const unsigned p = phi.degree(), q = psi.degree();
    ValueKind kind = phi.kind();
    if (phi.kind() == ValueKind::Scalar || psi.kind() == ValueKind::Module)
        kind = psi.kind();
    const std::size_t rank = std::max(phi.rank(), psi.rank());
    Form out(alg, p + q, kind, rank);
    const Rational scale = Rational(1) / Rational(Integer(factorial(p) * factorial(q)));
    const auto subsets = out.basis_subsets();
    for (std::size_t s = 0; s < subsets.size(); ++s) {
        std::vector<std::size_t> perm(p + q);
        std::iota(perm.begin(), perm.end(), 0);
        PolyMatrix acc(alg->ring(), out.value_rows(), out.value_cols());
        do {
            std::vector<GElement> first, second;
            for (std::size_t k = 0; k < p + q; ++k)
                (k < p ? first : second).push_back(alg->basis(subsets[s][perm[k]]));
            PolyMatrix term = product(phi, phi.evaluate(first), psi, psi.evaluate(second));
            if (parity(perm))
                acc -= term;
            else
                acc += term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        out.value(s) = scale * acc;
    }
    return out;
}

} // namespace oracle
