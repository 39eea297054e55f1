#include "lierine/cli.hpp"

#include "lierine/chern.hpp"
#include "lierine/cohomology.hpp"
#include "lierine/connection_ops.hpp"
#include "lierine/errors.hpp"
#include "lierine/homotopy.hpp"
#include "lierine/k0ring.hpp"

namespace lierine {

using json = nlohmann::ordered_json;

namespace {

void expect_args(const std::string& command, const RunOptions& options, std::size_t n, const char* usage)
{
    if (options.args.size() != n)
        throw PreconditionError(command + " expects " + usage);
}

Regime default_regime(const Manifest& manifest, const RunOptions& options)
{
    if (options.regime)
        return Regime::parse(*options.regime);
    return manifest.algebra->ring()->finite() ? Regime::finite() : Regime::degree_bounded(3);
}

json index_list(const auto& items)
{
    json out = json::array();
    for (const auto& item : items) {
        json entry = json::array();
        for (std::size_t i : item)
            entry.push_back(i + 1);
        out.push_back(std::move(entry));
    }
    return out;
}

Report run_check(const Manifest& manifest)
{
    Report report;
    const AxiomReport axioms = verify_axioms(*manifest.algebra);
    json ax = json::object();
    ax["anchor_violations"] = index_list(axioms.anchor_violations);
    ax["jacobi_violations"] = index_list(axioms.jacobi_violations);
    json trunc = json::array();
    for (std::size_t i : axioms.truncation_violations)
        trunc.push_back(i + 1);
    ax["truncation_violations"] = std::move(trunc);
    report.results["rank"] = manifest.algebra->rank();
    report.results["variables"] = manifest.algebra->ring()->variables();
    report.results["axioms"] = std::move(ax);
    json modules = json::array();
    for (const auto& c : manifest.connections)
        modules.push_back({{"name", c.label()}, {"rank", c.rank()}, {"flat", is_flat(c)}});
    report.results["modules"] = std::move(modules);
    report.verdicts.push_back({"anchor_compatibility", axioms.anchor_violations.empty()});
    report.verdicts.push_back({"jacobi", axioms.jacobi_violations.empty()});
    report.verdicts.push_back({"anchor_preserves_ideal", axioms.truncation_violations.empty()});
    return report;
}

Report run_curvature(const Manifest& manifest, const RunOptions& options)
{
    expect_args("curvature", options, 1, "one module label");
    const Connection& c = manifest.module(options.args[0]);
    Report report;
    const Form r = curvature(c);
    report.results["module"] = c.label();
    report.results["rank"] = c.rank();
    report.results["curvature"] = to_json(r);
    report.results["flat"] = r.is_zero();
    report.verdicts.push_back({"curvature_matches_commutator", r == curvature_by_commutator(c)});
    report.verdicts.push_back({"bianchi", differential(r, ad_connection(c)).is_zero()});
    return report;
}

Report run_chern(const Manifest& manifest, const RunOptions& options)
{
    expect_args("chern", options, 1, "one module label");
    const Connection& c = manifest.module(options.args[0]);
    Report report;
    const ChernForm ch = chern_character(c);
    const ClosednessReport closed = verify_closed(ch);
    report.results["module"] = c.label();
    report.results["chern"] = to_json(ch);
    json cl = json::array();
    for (const auto& comp : closed.components) {
        cl.push_back({{"n", comp.n}, {"degree", comp.degree}, {"closed", comp.closed}});
        report.verdicts.push_back({"closed_ch_" + std::to_string(comp.n), comp.closed});
    }
    report.results["closedness"] = std::move(cl);
    return report;
}

bool d_squared_vanishes(const Action& action, const std::vector<CochainSpace>& spaces)
{
    for (std::size_t p = 0; p < spaces.size(); ++p)
        for (std::size_t k = 0; k < spaces[p].dimension(); ++k)
            if (!differential(differential(spaces[p].basis_form(k), action), action).is_zero())
                return false;
    return true;
}

Report run_cohomology(const Manifest& manifest, const RunOptions& options)
{
    expect_args("cohomology", options, 0, "no positional arguments");
    const Regime regime = options.regime ? Regime::parse(*options.regime) : Regime::finite();
    const Action action =
        options.module ? Action::on_module(manifest.module(*options.module)) : Action::canonical(manifest.algebra);
    const unsigned m = static_cast<unsigned>(manifest.algebra->rank());
    Report report;
    report.results["regime"] = regime.to_string();
    report.results["coefficients"] = options.module ? *options.module : std::string("A");
    std::vector<CochainSpace> spaces;
    if (regime.mode == Regime::Mode::Finite) {
        const CohomologyReport coh = betti_numbers(action, regime);
        report.results["dims"] = coh.dims;
        report.results["ranks"] = coh.ranks;
        report.results["betti"] = coh.betti;
        for (unsigned p = 0; p <= m; ++p)
            spaces.push_back(flatten(manifest.algebra, p, action.kind(), action.rank(), regime));
    } else {
        const unsigned shift = static_cast<unsigned>(differential_degree_shift(action));
        std::vector<std::size_t> dims;
        std::vector<std::size_t> ranks;
        for (unsigned p = 0; p <= m; ++p) {
            spaces.push_back(flatten(manifest.algebra, p, action.kind(), action.rank(), regime));
            dims.push_back(spaces.back().dimension());
        }
        for (unsigned p = 0; p < m; ++p) {
            CochainSpace target = flatten(manifest.algebra, p + 1, action.kind(), action.rank(),
                                          Regime::degree_bounded(regime.bound + shift));
            ranks.push_back(rank(differential_matrix(spaces[p], target, action)));
        }
        report.results["dims"] = dims;
        report.results["ranks"] = ranks;
        report.results["degree_shift"] = shift;
    }
    report.verdicts.push_back({"d_squared_zero", d_squared_vanishes(action, spaces)});
    return report;
}

Report run_compare(const Manifest& manifest, const RunOptions& options)
{
    expect_args("compare", options, 2, "two module labels");
    const Connection& a = manifest.module(options.args[0]);
    const Connection& b = manifest.module(options.args[1]);
    if (a.rank() != b.rank())
        throw PreconditionError("compare needs modules of equal rank");
    const Regime regime = default_regime(manifest, options);
    Report report;
    report.results["modules"] = {a.label(), b.label()};
    report.results["regime"] = regime.to_string();

    const EvaluationReport eval = verify_evaluation_identities(a, b);
    json checks = json::array();
    for (const auto& c : eval.checks)
        checks.push_back({{"identity", c.identity}, {"at", c.at}, {"passed", c.passed}});
    report.results["homotopy_identities"] = std::move(checks);
    report.verdicts.push_back({"homotopy_identities", eval.passed()});

    const Action scalar = Action::canonical(manifest.algebra);
    json primitives = json::array();
    const unsigned top = static_cast<unsigned>(manifest.algebra->rank() / 2);
    for (unsigned n = 1; n <= top; ++n) {
        const Form diff = chern_component(a, n) - chern_component(b, n);
        const PrimitiveResult res = find_primitive(diff, scalar, regime);
        json entry = json::object();
        entry["n"] = n;
        entry["difference"] = to_json(diff);
        entry["status"] = to_string(res.status);
        if (res.witness)
            entry["witness"] = to_json(*res.witness);
        primitives.push_back(std::move(entry));
        report.verdicts.push_back(
            {"primitive_ch_" + std::to_string(n), res.status == PrimitiveResult::Status::Found});
    }
    report.results["primitives"] = std::move(primitives);
    return report;
}

Report run_k0(const Manifest& manifest, const RunOptions& options)
{
    expect_args("k0", options, 1, "one expression");
    ConnectionRegistry registry(manifest.algebra);
    for (const auto& c : manifest.connections)
        registry.add(c);
    const K0Element element = parse_k0_expression(registry, options.args[0]);
    const ChernForm ch = chern_on_k0(registry, element);
    Report report;
    report.results["expression"] = options.args[0];
    report.results["element"] = to_json(element);
    report.results["chern"] = to_json(ch);

    bool additive = true;
    bool multiplicative = true;
    for (const auto& label : registry.labels()) {
        const Connection& c = registry.get(label);
        const auto& parts = c.origin().parts;
        if (c.origin().kind == ConnectionOrigin::Kind::DirectSum) {
            additive = additive && chern_character(c) ==
                                       chern_character(registry.get(parts[0])) + chern_character(registry.get(parts[1]));
        } else if (c.origin().kind == ConnectionOrigin::Kind::Tensor) {
            ChernForm product = chern_character(registry.get(parts[0]));
            for (std::size_t k = 1; k < parts.size(); ++k)
                product = wedge(product, chern_character(registry.get(parts[k])));
            multiplicative = multiplicative && chern_character(c) == product;
        }
    }
    report.verdicts.push_back({"chern_additive_on_sums", additive});
    report.verdicts.push_back({"chern_multiplicative_on_tensors", multiplicative});
    report.verdicts.push_back({"chern_closed", verify_closed(ch).passed()});
    return report;
}

} // namespace

const std::vector<std::string>& subcommands()
{
    static const std::vector<std::string> names{"check", "curvature", "chern", "cohomology", "compare", "k0"};
    return names;
}

Report run_subcommand(const std::string& command, const Manifest& manifest, const RunOptions& options)
{
    Report report;
    if (command == "check")
        report = run_check(manifest);
    else if (command == "curvature")
        report = run_curvature(manifest, options);
    else if (command == "chern")
        report = run_chern(manifest, options);
    else if (command == "cohomology")
        report = run_cohomology(manifest, options);
    else if (command == "compare")
        report = run_compare(manifest, options);
    else if (command == "k0")
        report = run_k0(manifest, options);
    else
        throw PreconditionError("unknown subcommand '" + command + "'");
    report.subcommand = command;
    report.inputs["manifest_digest"] = manifest_digest(manifest);
    report.inputs["args"] = options.args;
    if (options.regime)
        report.inputs["regime"] = *options.regime;
    if (options.module)
        report.inputs["module"] = *options.module;
    return report;
}

} // namespace lierine
