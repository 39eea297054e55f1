#include "lierine/lie_rinehart.hpp"

#include "lierine/errors.hpp"

#include <algorithm>

namespace lierine {

Derivation::Derivation(Ring ring, std::vector<Polynomial> coefficients)
    : ring_(std::move(ring)), coefficients_(std::move(coefficients))
{
    if (coefficients_.size() != ring_->size())
        throw StructuralError("derivation needs one coefficient per ring variable");
    for (const auto& c : coefficients_)
        if (!same_ring(c.ring(), ring_))
            throw StructuralError("derivation coefficient lives in a different ring");
    // D(x_i^d) = d x_i^{d-1} c_i lies in the monomial ideal iff x_i^{d-1} c_i
    // reduces to zero.
    for (std::size_t i = 0; i < ring_->size(); ++i) {
        auto bound = ring_->bound(i);
        if (!bound)
            continue;
        Exponents e(ring_->size(), 0);
        e[i] = *bound - 1;
        if (!(Polynomial::monomial(ring_, e) * coefficients_[i]).is_zero())
            ideal_violations_.push_back(i);
    }
}

Derivation Derivation::zero(Ring ring)
{
    std::vector<Polynomial> c(ring->size(), Polynomial(ring));
    return Derivation(ring, std::move(c));
}

Polynomial Derivation::apply(const Polynomial& a) const
{
    Polynomial out(ring_);
    for (std::size_t i = 0; i < coefficients_.size(); ++i)
        if (!coefficients_[i].is_zero())
            out += coefficients_[i] * derive(a, i);
    return out;
}

PolyMatrix Derivation::apply(const PolyMatrix& m) const
{
    return m.map([this](const Polynomial& p) { return apply(p); });
}

Derivation commutator(const Derivation& d, const Derivation& e)
{
    const Ring& ring = d.ring();
    std::vector<Polynomial> c;
    c.reserve(ring->size());
    for (std::size_t v = 0; v < ring->size(); ++v)
        c.push_back(d.apply(e.coefficients()[v]) - e.apply(d.coefficients()[v]));
    return Derivation(ring, std::move(c));
}

bool GElement::is_zero() const
{
    return std::all_of(coefficients.begin(), coefficients.end(), [](const Polynomial& p) { return p.is_zero(); });
}

GElement operator+(const GElement& a, const GElement& b)
{
    if (a.coefficients.size() != b.coefficients.size())
        throw StructuralError("element length mismatch");
    GElement r = a;
    for (std::size_t i = 0; i < r.coefficients.size(); ++i)
        r.coefficients[i] += b.coefficients[i];
    return r;
}

GElement operator-(const GElement& a, const GElement& b)
{
    if (a.coefficients.size() != b.coefficients.size())
        throw StructuralError("element length mismatch");
    GElement r = a;
    for (std::size_t i = 0; i < r.coefficients.size(); ++i)
        r.coefficients[i] -= b.coefficients[i];
    return r;
}

GElement operator*(const Polynomial& a, const GElement& d)
{
    GElement r = d;
    for (auto& c : r.coefficients)
        c = a * c;
    return r;
}

LieRinehartData::LieRinehartData(Ring ring, std::size_t rank, std::vector<Derivation> anchor,
                                 std::vector<Bracket> brackets)
    : ring_(std::move(ring)), rank_(rank), anchor_(std::move(anchor))
{
    if (rank_ == 0)
        throw StructuralError("algebra rank must be positive");
    if (rank_ > kMaxAlgebraRank)
        throw StructuralError("algebra rank " + std::to_string(rank_) + " exceeds the limit of " +
                              std::to_string(kMaxAlgebraRank));
    if (anchor_.size() != rank_)
        throw StructuralError("anchor must list one derivation per basis vector");
    for (const auto& d : anchor_)
        if (!same_ring(d.ring(), ring_))
            throw StructuralError("anchor derivation lives in a different ring");
    constants_.assign(rank_ * (rank_ - 1) / 2, {});
    for (auto& b : brackets) {
        if (b.i >= b.j)
            throw StructuralError("brackets must have i<j");
        if (b.j >= rank_)
            throw StructuralError("bracket index out of range");
        if (b.coefficients.size() != rank_)
            throw StructuralError("bracket needs one coefficient per basis vector");
        for (const auto& c : b.coefficients)
            if (!same_ring(c.ring(), ring_))
                throw StructuralError("structure constant lives in a different ring");
        auto& slot = constants_[pair_index(b.i, b.j)];
        if (!slot.empty())
            throw StructuralError("duplicate bracket entry");
        bool zero = std::all_of(b.coefficients.begin(), b.coefficients.end(),
                                [](const Polynomial& p) { return p.is_zero(); });
        if (!zero)
            slot = std::move(b.coefficients);
    }
}

std::size_t LieRinehartData::pair_index(std::size_t i, std::size_t j) const
{
    // Row-major index of (i, j), i < j, in the strict upper triangle.
    return i * rank_ - i * (i + 1) / 2 + (j - i - 1);
}

const std::vector<Polynomial>* LieRinehartData::bracket_coefficients(std::size_t i, std::size_t j) const
{
    const auto& slot = constants_[pair_index(i, j)];
    return slot.empty() ? nullptr : &slot;
}

Polynomial LieRinehartData::structure_constant(std::size_t i, std::size_t j, std::size_t k) const
{
    if (i >= rank_ || j >= rank_ || k >= rank_)
        throw StructuralError("structure constant index out of range");
    if (i == j)
        return Polynomial(ring_);
    bool swapped = i > j;
    const auto* c = swapped ? bracket_coefficients(j, i) : bracket_coefficients(i, j);
    if (!c)
        return Polynomial(ring_);
    return swapped ? -(*c)[k] : (*c)[k];
}

GElement LieRinehartData::basis(std::size_t i) const
{
    GElement e = zero_element();
    e.coefficients.at(i) = Polynomial::constant(ring_, 1);
    return e;
}

GElement LieRinehartData::zero_element() const
{
    return GElement{std::vector<Polynomial>(rank_, Polynomial(ring_))};
}

int LieRinehartData::anchor_degree() const
{
    int d = -1;
    for (const auto& a : anchor_)
        for (const auto& c : a.coefficients())
            d = std::max(d, c.degree());
    return d;
}

int LieRinehartData::structure_degree() const
{
    int d = -1;
    for (const auto& slot : constants_)
        for (const auto& c : slot)
            d = std::max(d, c.degree());
    return d;
}

bool LieRinehartData::operator==(const LieRinehartData& other) const
{
    return same_ring(ring_, other.ring_) && rank_ == other.rank_ && anchor_ == other.anchor_ &&
           constants_ == other.constants_;
}

Algebra make_algebra(Ring ring, std::size_t rank, std::vector<Derivation> anchor,
                     std::vector<LieRinehartData::Bracket> brackets)
{
    return std::make_shared<const LieRinehartData>(std::move(ring), rank, std::move(anchor), std::move(brackets));
}

bool same_algebra(const Algebra& a, const Algebra& b)
{
    return a == b || (a && b && *a == *b);
}

namespace {

void check_element(const LieRinehartData& algebra, const GElement& d)
{
    if (d.coefficients.size() != algebra.rank())
        throw StructuralError("element has " + std::to_string(d.coefficients.size()) + " coefficients, algebra rank is " +
                              std::to_string(algebra.rank()));
    for (const auto& c : d.coefficients)
        if (!same_ring(c.ring(), algebra.ring()))
            throw StructuralError("element coefficient lives in a different ring");
}

} // namespace

Derivation anchor_of(const LieRinehartData& algebra, const GElement& d)
{
    check_element(algebra, d);
    const Ring& ring = algebra.ring();
    std::vector<Polynomial> c(ring->size(), Polynomial(ring));
    for (std::size_t i = 0; i < algebra.rank(); ++i) {
        if (d.coefficients[i].is_zero())
            continue;
        const auto& ai = algebra.anchor(i).coefficients();
        for (std::size_t v = 0; v < ring->size(); ++v)
            c[v] += d.coefficients[i] * ai[v];
    }
    return Derivation(ring, std::move(c));
}

Polynomial anchor_apply(const LieRinehartData& algebra, const GElement& d, const Polynomial& a)
{
    check_element(algebra, d);
    if (!same_ring(a.ring(), algebra.ring()))
        throw StructuralError("ring mismatch in anchor_apply");
    Polynomial out(algebra.ring());
    for (std::size_t i = 0; i < algebra.rank(); ++i)
        if (!d.coefficients[i].is_zero())
            out += d.coefficients[i] * algebra.anchor(i).apply(a);
    return out;
}

GElement bracket_general(const LieRinehartData& algebra, const GElement& d, const GElement& e)
{
    check_element(algebra, d);
    check_element(algebra, e);
    const std::size_t m = algebra.rank();
    GElement out = algebra.zero_element();
    // [d_i g_i, e_j g_j] = d_i e_j [g_i, g_j] + d_i α_i(e_j) g_j - e_j α_j(d_i) g_i
    for (std::size_t i = 0; i < m; ++i) {
        const Polynomial& di = d.coefficients[i];
        if (di.is_zero())
            continue;
        for (std::size_t j = 0; j < m; ++j) {
            const Polynomial& ej = e.coefficients[j];
            if (ej.is_zero())
                continue;
            if (i != j) {
                const auto* c = i < j ? algebra.bracket_coefficients(i, j) : algebra.bracket_coefficients(j, i);
                if (c) {
                    Polynomial de = di * ej;
                    if (i > j)
                        de = -de;
                    for (std::size_t k = 0; k < m; ++k)
                        if (!(*c)[k].is_zero())
                            out.coefficients[k] += de * (*c)[k];
                }
            }
            out.coefficients[j] += di * algebra.anchor(i).apply(ej);
            out.coefficients[i] -= ej * algebra.anchor(j).apply(di);
        }
    }
    return out;
}

AxiomReport verify_axioms(const LieRinehartData& algebra)
{
    AxiomReport report;
    const std::size_t m = algebra.rank();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            GElement b = bracket_general(algebra, algebra.basis(i), algebra.basis(j));
            Derivation lhs = anchor_of(algebra, b);
            Derivation rhs = commutator(algebra.anchor(i), algebra.anchor(j));
            if (!(lhs == rhs))
                report.anchor_violations.push_back({i, j});
        }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k) {
                GElement gi = algebra.basis(i), gj = algebra.basis(j), gk = algebra.basis(k);
                GElement sum = bracket_general(algebra, gi, bracket_general(algebra, gj, gk)) +
                               bracket_general(algebra, gj, bracket_general(algebra, gk, gi)) +
                               bracket_general(algebra, gk, bracket_general(algebra, gi, gj));
                if (!sum.is_zero())
                    report.jacobi_violations.push_back({i, j, k});
            }
    for (std::size_t i = 0; i < m; ++i)
        if (!algebra.anchor(i).well_defined())
            report.truncation_violations.push_back(i);
    return report;
}

} // namespace lierine
