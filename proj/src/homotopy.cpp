#include "lierine/homotopy.hpp"

#include "lierine/connection_ops.hpp"
#include "lierine/errors.hpp"
#include "lierine/sampling.hpp"

#include <algorithm>

namespace lierine {

namespace {

Ring extended_ring(const RingSpec& base, std::size_t& t_index)
{
    std::string name = "t";
    while (base.index_of(name))
        name += '_';
    std::vector<std::string> vars = base.variables();
    std::vector<std::optional<unsigned>> bounds;
    for (std::size_t i = 0; i < base.size(); ++i)
        bounds.push_back(base.bound(i));
    t_index = vars.size();
    vars.push_back(name);
    bounds.push_back(std::nullopt);
    return make_ring(std::move(vars), std::move(bounds));
}

} // namespace

ScalarExtension::ScalarExtension(Algebra base) : base_(std::move(base))
{
    Ring ring = extended_ring(*base_->ring(), t_index_);
    const std::size_t m = base_->rank();
    // The constructor of extended_ can't call embed() before extended_ exists,
    // so lift polynomials against the new ring directly.
    auto lift = [&](const Polynomial& p) {
        Terms raw;
        for (const auto& [e, c] : p.terms()) {
            Exponents f = e;
            f.push_back(0);
            raw.emplace(std::move(f), c);
        }
        return Polynomial::from_terms(ring, raw);
    };
    std::vector<Derivation> anchor;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<Polynomial> c;
        for (const auto& p : base_->anchor(i).coefficients())
            c.push_back(lift(p));
        c.emplace_back(ring);
        anchor.emplace_back(ring, std::move(c));
    }
    std::vector<LieRinehartData::Bracket> brackets;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (const auto* k = base_->bracket_coefficients(i, j)) {
                std::vector<Polynomial> c;
                for (const auto& p : *k)
                    c.push_back(lift(p));
                brackets.push_back({i, j, std::move(c)});
            }
    extended_ = make_algebra(ring, m, std::move(anchor), std::move(brackets));
}

Polynomial ScalarExtension::parameter() const
{
    return Polynomial::variable(extended_->ring(), t_index_);
}

Polynomial ScalarExtension::embed(const Polynomial& p) const
{
    if (!same_ring(p.ring(), base_->ring()))
        throw StructuralError("embed: polynomial does not live in the base ring");
    Terms raw;
    for (const auto& [e, c] : p.terms()) {
        Exponents f = e;
        f.push_back(0);
        raw.emplace(std::move(f), c);
    }
    return Polynomial::from_terms(extended_->ring(), raw);
}

PolyMatrix ScalarExtension::embed(const PolyMatrix& m) const
{
    PolyMatrix out(extended_->ring(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = embed(m(i, j));
    return out;
}

GElement ScalarExtension::embed(const GElement& d) const
{
    GElement out;
    for (const auto& c : d.coefficients)
        out.coefficients.push_back(embed(c));
    return out;
}

Form ScalarExtension::embed(const Form& f) const
{
    if (!same_algebra(f.algebra(), base_))
        throw StructuralError("embed: form does not live over the base algebra");
    Form out(extended_, f.degree(), f.kind(), f.rank());
    for (std::size_t k = 0; k < f.size(); ++k)
        out.value(k) = embed(f.value(k));
    return out;
}

Connection ScalarExtension::embed(const Connection& c) const
{
    if (!same_algebra(c.algebra(), base_))
        throw StructuralError("embed: connection does not live over the base algebra");
    std::vector<PolyMatrix> g;
    for (const auto& m : c.christoffel())
        g.push_back(embed(m));
    return Connection(extended_, c.rank(), std::move(g), c.label(), c.origin());
}

Polynomial ScalarExtension::evaluate(const Polynomial& p, int at) const
{
    if (at != 0 && at != 1)
        throw StructuralError("evaluation point must be 0 or 1");
    if (!same_ring(p.ring(), extended_->ring()))
        throw StructuralError("evaluate: polynomial does not live in A[t]");
    Terms raw;
    for (const auto& [e, c] : p.terms()) {
        if (at == 0 && e[t_index_] > 0)
            continue;
        Exponents f(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(t_index_));
        raw[f] += c;
    }
    return Polynomial::from_terms(base_->ring(), raw);
}

PolyMatrix ScalarExtension::evaluate(const PolyMatrix& m, int at) const
{
    PolyMatrix out(base_->ring(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = evaluate(m(i, j), at);
    return out;
}

Form ScalarExtension::evaluate(const Form& f, int at) const
{
    if (!same_algebra(f.algebra(), extended_))
        throw StructuralError("evaluate: form does not live over g[t]");
    Form out(base_, f.degree(), f.kind(), f.rank());
    for (std::size_t k = 0; k < f.size(); ++k)
        out.value(k) = evaluate(f.value(k), at);
    return out;
}

Connection ScalarExtension::evaluate(const Connection& c, int at) const
{
    if (!same_algebra(c.algebra(), extended_))
        throw StructuralError("evaluate: connection does not live over g[t]");
    std::vector<PolyMatrix> g;
    for (const auto& m : c.christoffel())
        g.push_back(evaluate(m, at));
    return Connection(base_, c.rank(), std::move(g), c.label(), c.origin());
}

ExtendedConnection extend_scalars(const Connection& c)
{
    ScalarExtension ext(c.algebra());
    Connection lifted = ext.embed(c);
    return {std::move(ext), std::move(lifted)};
}

Connection interpolate_connection(const ScalarExtension& ext, const Connection& c0, const Connection& c1)
{
    if (!same_algebra(c0.algebra(), ext.base()) || !same_algebra(c1.algebra(), ext.base()))
        throw StructuralError("interpolate_connection: connections must live over the base algebra");
    if (c0.rank() != c1.rank())
        throw StructuralError("interpolate_connection: rank mismatch");
    const Polynomial t = ext.parameter();
    const Polynomial one_minus_t = Polynomial::constant(t.ring(), 1) - t;
    std::vector<PolyMatrix> g;
    for (std::size_t j = 0; j < c0.christoffel().size(); ++j)
        g.push_back(t * ext.embed(c1.christoffel(j)) + one_minus_t * ext.embed(c0.christoffel(j)));
    return Connection(ext.extended(), c0.rank(), std::move(g), "[" + c0.label() + "~" + c1.label() + "]");
}

Form evaluate_at(const ScalarExtension& ext, const Form& f, int at)
{
    return ext.evaluate(f, at);
}

bool EvaluationReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

EvaluationReport verify_evaluation_identities(const Connection& c0, const Connection& c1, std::uint64_t seed)
{
    ScalarExtension ext(c0.algebra());
    const Connection ct = interpolate_connection(ext, c0, c1);
    const Algebra& gt = ext.extended();
    const unsigned m = static_cast<unsigned>(gt->rank());
    const std::size_t r = c0.rank();
    Sampler sampler(seed);
    EvaluationReport report;

    const Form rt = curvature(ct);
    const ChernForm cht = chern_character(ct);

    for (int at : {0, 1}) {
        const Connection& ci = at == 0 ? c0 : c1;
        auto check = [&](std::string name, bool ok) { report.checks.push_back({std::move(name), at, ok}); };

        check("connection", ext.evaluate(ct, at).same_data(ci));

        bool chain_scalar = true, chain_module = true, chain_endo = true;
        for (unsigned p = 0; p < m; ++p) {
            Form phi = sampler.form(gt, p, ValueKind::Scalar, 1, 2);
            chain_scalar = chain_scalar && ext.evaluate(differential(phi), at) == differential(ext.evaluate(phi, at));
            Form psi = sampler.form(gt, p, ValueKind::Module, r, 2);
            chain_module = chain_module && ext.evaluate(differential(psi, Action::on_module(ct)), at) ==
                                               differential(ext.evaluate(psi, at), Action::on_module(ci));
            Form chi = sampler.form(gt, p, ValueKind::Endo, r, 2);
            chain_endo = chain_endo && ext.evaluate(differential(chi, ad_connection(ct)), at) ==
                                           differential(ext.evaluate(chi, at), ad_connection(ci));
        }
        check("chain_map_scalar", chain_scalar);
        check("chain_map_module", chain_module);
        check("chain_map_endo", chain_endo);

        bool wedge_ok = true;
        for (unsigned p = 0; p <= m; ++p)
            for (unsigned q = 0; p + q <= m; ++q) {
                Form a = sampler.form(gt, p, ValueKind::Scalar, 1, 2);
                Form b = sampler.form(gt, q, ValueKind::Endo, r, 1);
                Form e = sampler.form(gt, q, ValueKind::Endo, r, 1);
                wedge_ok = wedge_ok && ext.evaluate(wedge(a, b), at) == wedge(ext.evaluate(a, at), ext.evaluate(b, at));
                Form f = sampler.form(gt, p, ValueKind::Endo, r, 1);
                wedge_ok = wedge_ok && ext.evaluate(wedge(f, e), at) == wedge(ext.evaluate(f, at), ext.evaluate(e, at));
            }
        check("wedge", wedge_ok);

        bool trace_ok = true;
        for (unsigned p = 0; p <= m; ++p) {
            Form f = sampler.form(gt, p, ValueKind::Endo, r, 2);
            trace_ok = trace_ok && ext.evaluate(trace_form(f), at) == trace_form(ext.evaluate(f, at));
        }
        check("trace", trace_ok);

        const Form ri = ext.evaluate(rt, at);
        check("curvature", ri == curvature(ci));

        bool powers_ok = true, trace_powers_ok = true;
        for (unsigned k = 0; 2 * k <= m; ++k) {
            Form rtk = curvature_power(rt, k);
            Form rik = curvature_power(ri, k);
            powers_ok = powers_ok && ext.evaluate(rtk, at) == rik;
            trace_powers_ok = trace_powers_ok && ext.evaluate(trace_form(rtk), at) == trace_form(rik);
        }
        check("curvature_power", powers_ok);
        check("trace_power", trace_powers_ok);

        const ChernForm chi = chern_character(ci);
        bool chern_ok = true;
        for (std::size_t n = 0; n < cht.size(); ++n)
            chern_ok = chern_ok && ext.evaluate(cht.component(n), at) == chi.component(n);
        check("chern", chern_ok);
    }
    return report;
}

} // namespace lierine
