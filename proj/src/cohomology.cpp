#include "lierine/cohomology.hpp"

#include "lierine/connection_ops.hpp"
#include "lierine/errors.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <tuple>

namespace lierine {

Regime Regime::parse(std::string_view text)
{
    if (text == "finite")
        return finite();
    constexpr std::string_view prefix = "degree:";
    if (text.substr(0, prefix.size()) == prefix) {
        std::string_view digits = text.substr(prefix.size());
        unsigned d = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty())
            return degree_bounded(d);
    }
    throw ParseError("regime must be 'finite' or 'degree:D', got '" + std::string(text) + "'");
}

std::string Regime::to_string() const
{
    return mode == Mode::Finite ? "finite" : "degree:" + std::to_string(bound);
}

namespace {

std::vector<Exponents> finite_monomials(const RingSpec& ring)
{
    std::vector<Exponents> out{Exponents(ring.size(), 0)};
    for (std::size_t v = 0; v < ring.size(); ++v) {
        std::vector<Exponents> next;
        for (const auto& e : out)
            for (unsigned k = 0; k < *ring.bound(v); ++k) {
                Exponents f = e;
                f[v] = k;
                next.push_back(std::move(f));
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

void bounded_monomials(std::size_t n, unsigned budget, Exponents& cur, std::size_t v, std::vector<Exponents>& out)
{
    if (v == n) {
        out.push_back(cur);
        return;
    }
    for (unsigned k = 0; k <= budget; ++k) {
        cur[v] = k;
        bounded_monomials(n, budget - k, cur, v + 1, out);
    }
    cur[v] = 0;
}

std::vector<Exponents> degree_bounded_monomials(const RingSpec& ring, unsigned d)
{
    std::vector<Exponents> out;
    Exponents cur(ring.size(), 0);
    bounded_monomials(ring.size(), d, cur, 0, out);
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

void check_regime(const RingSpec& ring, Regime regime)
{
    if (regime.mode == Regime::Mode::Finite && !ring.finite())
        throw PreconditionError("finite regime needs a finite-dimensional base ring (every variable truncated)");
    if (regime.mode == Regime::Mode::DegreeBounded && ring.truncated())
        throw PreconditionError("degree-bounded regime needs an untruncated polynomial ring");
}

int max_coefficient_degree(const Form& f)
{
    int d = -1;
    for (std::size_t k = 0; k < f.size(); ++k) {
        const PolyMatrix& v = f.value(k);
        for (std::size_t i = 0; i < v.rows(); ++i)
            for (std::size_t j = 0; j < v.cols(); ++j)
                d = std::max(d, v(i, j).degree());
    }
    return d;
}

using CoordKey = std::tuple<std::size_t, Exponents, std::size_t, std::size_t>;

} // namespace

CochainSpace::CochainSpace(Algebra algebra, unsigned degree, ValueKind kind, std::size_t rank, Regime regime)
    : algebra_(std::move(algebra)),
      degree_(degree),
      kind_(kind),
      rank_(kind == ValueKind::Scalar ? 1 : rank),
      regime_(regime)
{
    const RingSpec& ring = *algebra_->ring();
    check_regime(ring, regime_);
    monomials_ = regime_.mode == Regime::Mode::Finite ? finite_monomials(ring)
                                                      : degree_bounded_monomials(ring, regime_.bound);
    const std::size_t nsub = binomial(static_cast<unsigned>(algebra_->rank()), degree_);
    const std::size_t rows = kind_ == ValueKind::Scalar ? 1 : rank_;
    const std::size_t cols = kind_ == ValueKind::Endo ? rank_ : 1;
    for (std::size_t s = 0; s < nsub; ++s)
        for (const auto& mono : monomials_)
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    coordinates_.push_back({s, mono, i, j});
    for (std::size_t k = 0; k < coordinates_.size(); ++k) {
        const Coordinate& c = coordinates_[k];
        index_.emplace(CoordKey{c.subset, c.monomial, c.row, c.col}, k);
    }
}

Form CochainSpace::basis_form(std::size_t index) const
{
    const Coordinate& c = coordinates_.at(index);
    Form f(algebra_, degree_, kind_, rank_);
    f.value(c.subset)(c.row, c.col) = Polynomial::monomial(algebra_->ring(), c.monomial);
    return f;
}

Form CochainSpace::form_from(std::span<const Rational> coords) const
{
    if (coords.size() != coordinates_.size())
        throw StructuralError("coordinate vector has the wrong length");
    Form f(algebra_, degree_, kind_, rank_);
    for (std::size_t k = 0; k < coords.size(); ++k) {
        if (coords[k] == 0)
            continue;
        const Coordinate& c = coordinates_[k];
        f.value(c.subset)(c.row, c.col) += Polynomial::monomial(algebra_->ring(), c.monomial, coords[k]);
    }
    return f;
}

std::vector<Rational> CochainSpace::coordinates_of(const Form& f) const
{
    if (f.degree() != degree_ || f.kind() != kind_ || f.rank() != rank_)
        throw StructuralError("form does not belong to this cochain space");
    std::vector<Rational> out(coordinates_.size(), Rational(0));
    for (std::size_t s = 0; s < f.size(); ++s) {
        const PolyMatrix& v = f.value(s);
        for (std::size_t i = 0; i < v.rows(); ++i)
            for (std::size_t j = 0; j < v.cols(); ++j)
                for (const auto& [e, coeff] : v(i, j).terms()) {
                    auto it = index_.find(CoordKey{s, e, i, j});
                    if (it == index_.end())
                        throw StructuralError("form has a coefficient outside the flattened space");
                    out[it->second] = coeff;
                }
    }
    return out;
}

CochainSpace flatten(const Algebra& algebra, unsigned degree, ValueKind kind, std::size_t rank, Regime regime)
{
    return CochainSpace(algebra, degree, kind, rank, regime);
}

RationalMatrix differential_matrix(const CochainSpace& source, const CochainSpace& target, const Action& action)
{
    if (target.degree() != source.degree() + 1)
        throw StructuralError("differential_matrix: target degree must be source degree + 1");
    RationalMatrix m(target.dimension(), source.dimension());
    for (std::size_t col = 0; col < source.dimension(); ++col) {
        auto image = target.coordinates_of(differential(source.basis_form(col), action));
        for (std::size_t row = 0; row < image.size(); ++row)
            m(row, col) = image[row];
    }
    return m;
}

int differential_degree_shift(const Action& action)
{
    return std::max({0, action.degree_shift(), action.algebra()->structure_degree()});
}

namespace {

void require_flat(const Action& action)
{
    if (action.kind() == ValueKind::Scalar) {
        if (!verify_axioms(*action.algebra()).passed())
            throw PreconditionError(
                "the canonical action is not flat: the Lie-Rinehart axioms fail, so d∘d != 0 on C*(g, A)");
        return;
    }
    Connection c(action.algebra(), action.rank(), action.christoffel());
    if (!is_flat(c))
        throw PreconditionError("connection is not flat: nonzero curvature obstructs d∘d = 0, no cohomology");
}

} // namespace

CohomologyReport betti_numbers(const Action& action, Regime regime)
{
    if (regime.mode != Regime::Mode::Finite)
        throw PreconditionError("Betti numbers are only computed in the finite regime");
    check_regime(*action.algebra()->ring(), regime);
    require_flat(action);
    const unsigned m = static_cast<unsigned>(action.algebra()->rank());
    CohomologyReport report{regime, {}, {}, {}};
    std::vector<CochainSpace> spaces;
    for (unsigned p = 0; p <= m; ++p) {
        spaces.push_back(flatten(action.algebra(), p, action.kind(), action.rank(), regime));
        report.dims.push_back(spaces.back().dimension());
    }
    for (unsigned p = 0; p < m; ++p)
        report.ranks.push_back(rank(differential_matrix(spaces[p], spaces[p + 1], action)));
    for (unsigned p = 0; p <= m; ++p) {
        std::size_t b = report.dims[p];
        if (p < m)
            b -= report.ranks[p];
        if (p > 0)
            b -= report.ranks[p - 1];
        report.betti.push_back(b);
    }
    return report;
}

const char* to_string(PrimitiveResult::Status s)
{
    switch (s) {
    case PrimitiveResult::Status::Found:
        return "found";
    case PrimitiveResult::Status::NotFoundWithinBound:
        return "not_found_within_bound";
    case PrimitiveResult::Status::NotExact:
        return "not_exact";
    }
    return "?";
}

PrimitiveResult find_primitive(const Form& target, const Action& action, Regime regime)
{
    check_regime(*target.algebra()->ring(), regime);
    if (!differential(target, action).is_zero())
        throw PreconditionError("find_primitive: target form is not closed");
    const unsigned p = target.degree();
    if (target.is_zero()) {
        if (p == 0)
            return {PrimitiveResult::Status::Found, std::nullopt, regime.bound};
        return {PrimitiveResult::Status::Found, Form(target.algebra(), p - 1, target.kind(), target.rank()),
                regime.bound};
    }
    if (p == 0)
        return {PrimitiveResult::Status::NotExact, std::nullopt, regime.bound};

    CochainSpace source = flatten(target.algebra(), p - 1, target.kind(), target.rank(), regime);
    std::optional<std::vector<Rational>> x;
    if (regime.mode == Regime::Mode::Finite) {
        CochainSpace space = flatten(target.algebra(), p, target.kind(), target.rank(), regime);
        RationalMatrix m = differential_matrix(source, space, action);
        auto b = space.coordinates_of(target);
        x = solve(m, b);
    } else {
        const int shift = differential_degree_shift(action);
        std::vector<Form> images;
        images.reserve(source.dimension());
        for (std::size_t k = 0; k < source.dimension(); ++k) {
            images.push_back(differential(source.basis_form(k), action));
            const int deg = static_cast<int>(total_degree(source.coordinates()[k].monomial));
            if (deg + shift <= static_cast<int>(regime.bound) &&
                max_coefficient_degree(images.back()) > static_cast<int>(regime.bound))
                throw PreconditionError("degree-bounded soundness guard: d raised a degree-" + std::to_string(deg) +
                                        " basis element past the bound " + std::to_string(regime.bound) +
                                        " although the computed shift is " + std::to_string(shift));
        }
        // Rows: every coordinate that occurs in an image or in the target.
        std::map<CoordKey, std::size_t> rows;
        auto collect = [&rows](const Form& f) {
            for (std::size_t s = 0; s < f.size(); ++s) {
                const PolyMatrix& v = f.value(s);
                for (std::size_t i = 0; i < v.rows(); ++i)
                    for (std::size_t j = 0; j < v.cols(); ++j)
                        for (const auto& term : v(i, j).terms())
                            rows.emplace(CoordKey{s, term.first, i, j}, 0);
            }
        };
        for (const auto& img : images)
            collect(img);
        collect(target);
        std::size_t next = 0;
        for (auto& [key, idx] : rows)
            idx = next++;
        RationalMatrix m(rows.size(), source.dimension());
        std::vector<Rational> b(rows.size(), Rational(0));
        auto scatter = [&rows](const Form& f, auto&& put) {
            for (std::size_t s = 0; s < f.size(); ++s) {
                const PolyMatrix& v = f.value(s);
                for (std::size_t i = 0; i < v.rows(); ++i)
                    for (std::size_t j = 0; j < v.cols(); ++j)
                        for (const auto& [e, c] : v(i, j).terms())
                            put(rows.at(CoordKey{s, e, i, j}), c);
            }
        };
        for (std::size_t k = 0; k < images.size(); ++k)
            scatter(images[k], [&m, k](std::size_t row, const Rational& c) { m(row, k) = c; });
        scatter(target, [&b](std::size_t row, const Rational& c) { b[row] = c; });
        x = solve(m, b);
    }

    if (!x)
        return {regime.mode == Regime::Mode::Finite ? PrimitiveResult::Status::NotExact
                                                    : PrimitiveResult::Status::NotFoundWithinBound,
                std::nullopt, regime.bound};
    Form witness = source.form_from(*x);
    if (!(differential(witness, action) == target))
        throw std::logic_error("find_primitive: witness failed exact re-verification");
    return {PrimitiveResult::Status::Found, std::move(witness), regime.bound};
}

const char* to_string(ClassVerdict v)
{
    switch (v) {
    case ClassVerdict::Equal:
        return "equal";
    case ClassVerdict::Unequal:
        return "unequal";
    case ClassVerdict::Unknown:
        return "unknown";
    }
    return "?";
}

ClassVerdict classes_equal(const Form& a, const Form& b, const Action& action, Regime regime)
{
    if (a.degree() != b.degree() || a.kind() != b.kind() || a.rank() != b.rank())
        throw StructuralError("classes_equal: forms of different degree or kind");
    if (!differential(a, action).is_zero() || !differential(b, action).is_zero())
        throw PreconditionError("classes_equal: both forms must be closed");
    switch (find_primitive(a - b, action, regime).status) {
    case PrimitiveResult::Status::Found:
        return ClassVerdict::Equal;
    case PrimitiveResult::Status::NotExact:
        return ClassVerdict::Unequal;
    case PrimitiveResult::Status::NotFoundWithinBound:
        return ClassVerdict::Unknown;
    }
    return ClassVerdict::Unknown;
}

} // namespace lierine
