#include "doctest.h"

#include "instances.hpp"
#include "oracles.hpp"

#include "lierine/chern.hpp"
#include "lierine/connection_ops.hpp"
#include "lierine/errors.hpp"
#include "lierine/sampling.hpp"

using namespace lierine;

namespace {

Polynomial P(const std::string& s, const Ring& r)
{
    return parse_polynomial(s, r);
}

PolyMatrix M(const Ring& r, std::size_t n, const std::vector<std::string>& entries)
{
    PolyMatrix m(r, n, entries.size() / n);
    for (std::size_t k = 0; k < entries.size(); ++k)
        m(k / m.cols(), k % m.cols()) = P(entries[k], r);
    return m;
}

std::vector<instances::Instance> sample_instances(std::uint64_t seed, int count, std::size_t max_rank = 4)
{
    Sampler s(seed);
    std::vector<instances::Instance> out;
    for (int k = 0; k < count; ++k)
        out.push_back(instances::random_instance(s, static_cast<instances::Family>(k % 3), max_rank));
    return out;
}

} // namespace

TEST_CASE("apply_connection examples")
{
    Algebra line1 = instances::de_rham(1);
    const Ring& r1 = line1->ring();
    Connection zero = Connection::trivial(line1, 1);
    CHECK(apply_connection(zero, line1->basis(0), M(r1, 1, {"x^2"})) == M(r1, 1, {"2*x"}));

    Algebra plane = instances::de_rham(2);
    const Ring& r = plane->ring();
    Connection line = instances::line_bundle(plane, 1);
    CHECK(apply_connection(line, plane->basis(1), M(r, 1, {"1"})) == M(r, 1, {"x"}));
    CHECK_THROWS_AS(apply_connection(line, plane->basis(1), M(r, 2, {"1", "0"})), StructuralError);
}

TEST_CASE("Leibniz property of connections on random inputs")
{
    Sampler s(4);
    for (const auto& inst : sample_instances(1, 30)) {
        const Algebra& alg = inst.algebra;
        Connection c = s.connection(alg, static_cast<std::size_t>(s.uniform(1, 2)), 2);
        GElement d = s.element(*alg, 2);
        Polynomial a = s.polynomial(alg->ring(), 2);
        PolyMatrix w = s.matrix(alg->ring(), c.rank(), 1, 2);
        CHECK(apply_connection(c, d, a * w) - a * apply_connection(c, d, w) == anchor_apply(*alg, d, a) * w);
        CHECK(apply_connection(c, a * d, w) == a * apply_connection(c, d, w));
    }
}

TEST_CASE("curvature examples")
{
    Algebra plane = instances::de_rham(2);
    const Ring& r = plane->ring();
    Form R = curvature(instances::line_bundle(plane, 1));
    CHECK(R.at({0, 1}) == M(r, 1, {"1"}));
    CHECK_FALSE(is_flat(instances::line_bundle(plane, 1)));

    Connection flat = Connection::trivial(plane, 2);
    CHECK(curvature(flat).is_zero());
    CHECK(is_flat(flat));

    Algebra sl2 = instances::sl2();
    CHECK(is_flat(Connection::trivial(sl2, 1)));
}

TEST_CASE("curvature: explicit formula, commutator on basis vectors and literal commutator agree")
{
    Sampler s(6);
    for (const auto& inst : sample_instances(2, 40)) {
        const Algebra& alg = inst.algebra;
        Connection c = s.connection(alg, static_cast<std::size_t>(s.uniform(1, 2)), 2);
        const Form R = curvature(c);
        CHECK(R == curvature_by_commutator(c));
        GElement d = s.element(*alg, 1), e = s.element(*alg, 1);
        PolyMatrix w = s.matrix(alg->ring(), c.rank(), 1, 1);
        std::vector<GElement> args{d, e};
        CHECK(R.evaluate(args) * w == oracle::literal_curvature(c, d, e, w));
    }
}

TEST_CASE("direct_sum examples")
{
    Algebra plane = instances::de_rham(2);
    Connection a = instances::line_bundle(plane, 1, "a");
    Sampler s(9);
    Connection b = s.connection(plane, 2, 1, "b");
    Connection sum = direct_sum(a, b);
    CHECK(sum.rank() == 3);
    CHECK(sum.label() == "(a⊕b)");
    CHECK(sum.origin().kind == ConnectionOrigin::Kind::DirectSum);
    CHECK(sum.origin().parts == std::vector<std::string>{"a", "b"});
    CHECK(curvature(sum) == endo_direct_sum(curvature(a), curvature(b)));
    CHECK(is_flat(direct_sum(Connection::trivial(plane, 1), Connection::trivial(plane, 2))));
    CHECK_THROWS_AS(direct_sum(a, Connection::trivial(instances::sl2(), 1)), StructuralError);
}

TEST_CASE("tensor examples")
{
    Algebra plane = instances::de_rham(2);
    const Ring& r = plane->ring();
    Connection a = instances::line_bundle(plane, 1, "a");
    Connection b = instances::line_bundle(plane, 2, "b");
    Connection t = tensor(a, b);
    CHECK(t.label() == "(a⊗b)");
    CHECK(t.christoffel(1) == M(r, 1, {"3*x"}));
    CHECK(t.christoffel(0) == M(r, 1, {"0"}));
    CHECK(curvature(t).at({0, 1}) == M(r, 1, {"3"}));
    CHECK(curvature(t) == endo_tensor_identity(curvature(a), 1) + identity_tensor_endo(1, curvature(b)));

    Sampler s(10);
    Connection c = s.connection(plane, 2, 2);
    CHECK(tensor(c, Connection::trivial(plane, 1)).same_data(c));
    CHECK(tensor(Connection::trivial(plane, 1), c).same_data(c));
}

TEST_CASE("tensor uses the (i, j) -> i*r2 + j Kronecker ordering")
{
    Algebra ab = instances::abelian_over_q(1);
    const Ring& r = ab->ring();
    Connection a(ab, 2, {M(r, 2, {"1", "2", "3", "4"})});
    Connection b(ab, 2, {M(r, 2, {"5", "6", "7", "8"})});
    // Γ⊗I + I⊗Γ' written out by hand.
    CHECK(tensor(a, b).christoffel(0) == M(r, 4, {"6",  "6",  "2", "0",  //
                                                  "7",  "9",  "0", "2",  //
                                                  "3",  "0",  "9", "6",  //
                                                  "0",  "3",  "7", "12"}));
}

TEST_CASE("tensor is associative under the fixed Kronecker ordering")
{
    Sampler s(12);
    for (const auto& inst : sample_instances(3, 12)) {
        Connection a = s.connection(inst.algebra, 2, 1);
        Connection b = s.connection(inst.algebra, 1, 1);
        Connection c = s.connection(inst.algebra, 2, 1);
        CHECK(tensor(tensor(a, b), c).same_data(tensor(a, tensor(b, c))));
    }
}

TEST_CASE("torsor structure: add_one_form and connection_difference")
{
    Algebra plane = instances::de_rham(2);
    const Ring& r = plane->ring();
    Connection c0 = instances::line_bundle(plane, 1);
    Connection c1 = instances::line_bundle(plane, 2);
    CHECK(add_one_form(c0, Form(plane, 1, ValueKind::Endo, 1)).same_data(c0));

    Form phi(plane, 1, ValueKind::Endo, 1);
    phi.set({1}, M(r, 1, {"x"}));
    CHECK(add_one_form(c0, phi).same_data(c1));

    Form diff = connection_difference(c0, c1);
    CHECK(diff.at({0}) == M(r, 1, {"0"}));
    CHECK(diff.at({1}) == M(r, 1, {"-x"}));
    CHECK(connection_difference(c0, c0).is_zero());
    CHECK_THROWS_AS(connection_difference(c0, Connection::trivial(plane, 2)), StructuralError);
    CHECK_THROWS_AS(add_one_form(c0, Form(plane, 1, ValueKind::Endo, 2)), StructuralError);

    Sampler s(14);
    for (const auto& inst : sample_instances(4, 20)) {
        Connection c = s.connection(inst.algebra, 2, 2);
        Form f = s.form(inst.algebra, 1, ValueKind::Endo, 2, 2);
        CHECK(connection_difference(add_one_form(c, f), c) == f);
        Connection other = s.connection(inst.algebra, 2, 2);
        CHECK(add_one_form(c, connection_difference(other, c)).same_data(other));
    }
}

TEST_CASE("ad_connection examples")
{
    Sampler s(15);
    Algebra plane = instances::de_rham(2);
    const Ring& r = plane->ring();
    Connection c = s.connection(plane, 2, 2);
    const Action ad = ad_connection(c);
    for (std::size_t j = 0; j < 2; ++j)
        CHECK(ad.apply_basis(j, PolyMatrix::identity(r, 2)).is_zero());

    Connection zero = Connection::trivial(plane, 2);
    PolyMatrix v = s.matrix(r, 2, 2, 3);
    for (std::size_t j = 0; j < 2; ++j)
        CHECK(ad_connection(zero).apply_basis(j, v) == plane->anchor(j).apply(v));

    // ad∇_δ(φ) = ∇_δ∘φ − φ∘∇_δ applied to a vector.
    GElement d = s.element(*plane, 1);
    PolyMatrix w = s.matrix(r, 2, 1, 2);
    CHECK(ad.apply(d, v) * w == apply_connection(c, d, v * w) - v * apply_connection(c, d, w));

    Connection line = instances::line_bundle(plane, 1);
    CHECK(differential(curvature(line), ad_connection(line)).is_zero());
}

TEST_CASE("Bianchi identity for random connections")
{
    Sampler s(16);
    for (const auto& inst : sample_instances(5, 60)) {
        Connection c = s.connection(inst.algebra, static_cast<std::size_t>(s.uniform(1, 2)), 2);
        CHECK(differential(curvature(c), ad_connection(c)).is_zero());
    }
}

TEST_CASE("curvature identities r1-r4 on random pairs")
{
    Sampler s(18);
    const auto insts = sample_instances(6, 50);
    for (int k = 0; k < 100; ++k) {
        const Algebra& alg = insts[static_cast<std::size_t>(k) % insts.size()].algebra;
        Connection a = s.connection(alg, static_cast<std::size_t>(s.uniform(1, 2)), 2);
        Connection b = s.connection(alg, static_cast<std::size_t>(s.uniform(1, 2)), 2);
        const Form Ra = curvature(a), Rb = curvature(b);
        CHECK(curvature(direct_sum(a, b)) == endo_direct_sum(Ra, Rb));
        const Form Ra1 = endo_tensor_identity(Ra, b.rank());
        const Form Rb1 = identity_tensor_endo(a.rank(), Rb);
        CHECK(curvature(tensor(a, b)) == Ra1 + Rb1);
        CHECK(wedge(Ra1, Rb1) == wedge(Rb1, Ra1));
        const Form Rs = curvature(direct_sum(a, b));
        for (unsigned n = 0; n <= 2; ++n)
            CHECK(curvature_power(Rs, n) == endo_direct_sum(curvature_power(Ra, n), curvature_power(Rb, n)));
    }
}
