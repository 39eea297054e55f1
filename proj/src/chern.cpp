#include "lierine/chern.hpp"

#include "lierine/connection_ops.hpp"
#include "lierine/errors.hpp"

#include <algorithm>

namespace lierine {

ChernForm::ChernForm(std::vector<Form> components) : components_(std::move(components))
{
    if (components_.empty())
        throw StructuralError("Chern form needs at least the degree-0 component");
    for (std::size_t n = 0; n < components_.size(); ++n) {
        const Form& f = components_[n];
        if (f.kind() != ValueKind::Scalar || f.degree() != 2 * n)
            throw StructuralError("Chern component " + std::to_string(n) + " must be a scalar form of degree " +
                                  std::to_string(2 * n));
        if (!same_algebra(f.algebra(), components_.front().algebra()))
            throw StructuralError("Chern components live over different algebras");
    }
}

ChernForm ChernForm::zero(const Algebra& algebra)
{
    std::vector<Form> c;
    for (unsigned n = 0; 2 * n <= algebra->rank(); ++n)
        c.emplace_back(algebra, 2 * n, ValueKind::Scalar);
    return ChernForm(std::move(c));
}

ChernForm& ChernForm::operator+=(const ChernForm& other)
{
    if (other.size() != size())
        throw StructuralError("Chern forms of different length");
    for (std::size_t n = 0; n < size(); ++n)
        components_[n] += other.components_[n];
    return *this;
}

ChernForm& ChernForm::operator-=(const ChernForm& other)
{
    if (other.size() != size())
        throw StructuralError("Chern forms of different length");
    for (std::size_t n = 0; n < size(); ++n)
        components_[n] -= other.components_[n];
    return *this;
}

ChernForm operator*(const Rational& c, ChernForm a)
{
    for (auto& f : a.components_)
        f = c * f;
    return a;
}

ChernForm wedge(const ChernForm& a, const ChernForm& b)
{
    if (a.size() != b.size())
        throw StructuralError("Chern forms of different length");
    ChernForm out = ChernForm::zero(a.algebra());
    std::vector<Form> c = out.components();
    for (std::size_t n = 0; n < a.size(); ++n)
        for (std::size_t k = 0; k <= n; ++k)
            c[n] += wedge(a.component(k), b.component(n - k));
    return ChernForm(std::move(c));
}

Form curvature_power(const Form& curvature, unsigned n)
{
    if (curvature.kind() != ValueKind::Endo || curvature.degree() != 2)
        throw StructuralError("curvature_power needs an End W-valued 2-form");
    Form power = Form::identity(curvature.algebra(), curvature.rank());
    for (unsigned k = 0; k < n; ++k)
        power = wedge(power, curvature);
    return power;
}

Form chern_component(const Connection& c, unsigned n)
{
    Form tr = trace_form(curvature_power(curvature(c), n));
    return make_rational(1, factorial(n)) * tr;
}

ChernForm chern_character(const Connection& c)
{
    Form r = curvature(c);
    std::vector<Form> comps;
    Form power = Form::identity(c.algebra(), c.rank());
    for (unsigned n = 0; 2 * n <= c.algebra()->rank(); ++n) {
        if (n > 0)
            power = wedge(power, r);
        comps.push_back(make_rational(1, factorial(n)) * trace_form(power));
    }
    return ChernForm(std::move(comps));
}

bool ClosednessReport::passed() const
{
    return std::all_of(components.begin(), components.end(), [](const Component& c) { return c.closed; });
}

ClosednessReport verify_closed(const ChernForm& ch)
{
    ClosednessReport report;
    for (std::size_t n = 0; n < ch.size(); ++n) {
        const Form& f = ch.component(n);
        report.components.push_back({static_cast<unsigned>(n), f.degree(), differential(f).is_zero()});
    }
    return report;
}

ClosednessReport verify_closed(const Connection& c)
{
    return verify_closed(chern_character(c));
}

} // namespace lierine
