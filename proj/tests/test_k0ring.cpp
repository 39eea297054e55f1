#include "doctest.h"

#include "instances.hpp"

#include "lierine/chern.hpp"
#include "lierine/connection_ops.hpp"
#include "lierine/errors.hpp"
#include "lierine/k0ring.hpp"
#include "lierine/sampling.hpp"

using namespace lierine;

namespace {

struct PlaneFixture {
    Algebra plane = instances::de_rham(2);
    ConnectionRegistry reg{plane};

    PlaneFixture()
    {
        reg.add(instances::line_bundle(plane, 1, "line"));
        reg.add(instances::line_bundle(plane, 2, "line2"));
        reg.add(instances::line_bundle(plane, 5, "line5"));
    }

    K0Element sym(const std::string& l) const { return k0_symbol(reg, l); }
};

K0Element of(std::initializer_list<std::pair<const std::string, long long>> items)
{
    return K0Element{std::map<std::string, long long>(items)};
}

} // namespace

TEST_CASE("registry basics")
{
    PlaneFixture f;
    CHECK(f.reg.contains("1"));
    CHECK(f.reg.get("1").rank() == 1);
    CHECK(is_flat(f.reg.get("1")));
    CHECK_THROWS_AS(f.reg.add(instances::line_bundle(f.plane, 3, "line")), StructuralError);
    CHECK_THROWS_AS(f.reg.add(instances::line_bundle(f.plane, 3)), StructuralError);
    CHECK_THROWS_AS(f.reg.get("nope"), StructuralError);
    CHECK_THROWS_AS(f.reg.add(Connection::trivial(instances::sl2(), 1, "s")), StructuralError);
}

TEST_CASE("direct sums normalise to their summands")
{
    PlaneFixture f;
    const std::string s = f.reg.add_direct_sum("line", "line2", "sum");
    CHECK(s == "sum");
    CHECK(f.reg.get("sum").rank() == 2);
    CHECK(f.sym("sum") == of({{"line", 1}, {"line2", 1}}));
    const std::string nested = f.reg.add_direct_sum("sum", "line", "nested");
    CHECK(f.sym(nested) == of({{"line", 2}, {"line2", 1}}));

    const K0Element a = f.sym("line5");
    CHECK(k0_combine(f.reg, a, a, -1).is_zero());
    CHECK(k0_combine(f.reg, k0_scale(f.reg, a, 2), a, -1) == a);
    CHECK(k0_combine(f.reg, f.sym("sum"), f.sym("line"), -1) == f.sym("line2"));
    CHECK_THROWS(k0_combine(f.reg, a, a, 2));
    CHECK(k0_scale(f.reg, a, 0).is_zero());
}

TEST_CASE("products")
{
    PlaneFixture f;
    const K0Element unit = f.sym("1");
    const K0Element l = f.sym("line");
    const K0Element l2 = f.sym("line2");
    CHECK(k0_product(f.reg, unit, l) == l);
    CHECK(k0_product(f.reg, l, unit) == l);

    const K0Element p = k0_product(f.reg, l, l2);
    REQUIRE(p.coefficients.size() == 1);
    const std::string label = p.coefficients.begin()->first;
    CHECK(p.coefficients.begin()->second == 1);
    const Connection& t = f.reg.get(label);
    // line ⊗ line2 has Gamma_2 = x + 2x.
    CHECK(t.christoffel(1)(0, 0) == parse_polynomial("3*x", f.plane->ring()));
    CHECK(k0_product(f.reg, l2, l) == p);

    // Bilinearity: (l + l2)·l5 = l·l5 + l2·l5 and (2l)·l2 = 2(l·l2).
    const K0Element l5 = f.sym("line5");
    const K0Element lhs = k0_product(f.reg, k0_combine(f.reg, l, l2, 1), l5);
    const K0Element rhs = k0_combine(f.reg, k0_product(f.reg, l, l5), k0_product(f.reg, l2, l5), 1);
    CHECK(lhs == rhs);
    CHECK(k0_product(f.reg, k0_scale(f.reg, l, 2), l2) == k0_scale(f.reg, p, 2));
    CHECK(k0_product(f.reg, k0_combine(f.reg, l, l, -1), l2).is_zero());

    // A named tensor is reused for the same factors.
    PlaneFixture g;
    g.reg.add_tensor("line", "line2", "prod");
    CHECK(k0_product(g.reg, g.sym("line2"), g.sym("line")) == g.sym("prod"));
}

TEST_CASE("chern character on K0")
{
    PlaneFixture f;
    f.reg.add_direct_sum("line", "line2", "sum");
    const ChernForm s = chern_on_k0(f.reg, f.sym("sum"));
    CHECK(s == chern_character(f.reg.get("line")) + chern_character(f.reg.get("line2")));
    CHECK(s == chern_character(f.reg.get("sum")));
    CHECK(chern_on_k0(f.reg, K0Element{}) == ChernForm::zero(f.plane));

    const K0Element a = f.sym("line");
    const K0Element b = f.sym("line5");
    CHECK(chern_on_k0(f.reg, k0_product(f.reg, a, b)) == wedge(chern_on_k0(f.reg, a), chern_on_k0(f.reg, b)));

    // ch of the relation [W ⊕ W'] - [W] - [W'] computed without normalising.
    K0Element relation;
    relation.coefficients = {{"sum", 1}, {"line", -1}, {"line2", -1}};
    CHECK(chern_on_k0(f.reg, relation) == ChernForm::zero(f.plane));
}

TEST_CASE("expression parser")
{
    PlaneFixture f;
    f.reg.add_direct_sum("line", "line2", "sum");
    f.reg.add_tensor("line", "line2", "prod");
    const K0Element e = parse_k0_expression(f.reg, "(line+line2)*line5 - 2*sum + prod");
    const ChernForm ch = chern_on_k0(f.reg, e);
    // rank: 2 - 4 + 1; ch_1 on g1∧g2: 6 + 7 - 2·3 + 3.
    CHECK(ch.component(0).value(0)(0, 0) == parse_polynomial("-1", f.plane->ring()));
    CHECK(ch.component(1).value(0)(0, 0) == parse_polynomial("10", f.plane->ring()));

    CHECK(parse_k0_expression(f.reg, "3") == k0_scale(f.reg, f.sym("1"), 3));
    CHECK(parse_k0_expression(f.reg, "-line + line").is_zero());
    CHECK(parse_k0_expression(f.reg, " sum - line ") == f.sym("line2"));
    CHECK(parse_k0_expression(f.reg, "line*(line2*line5)") == parse_k0_expression(f.reg, "(line5*line)*line2"));

    CHECK_THROWS_AS(parse_k0_expression(f.reg, "line +"), ParseError);
    CHECK_THROWS_AS(parse_k0_expression(f.reg, "(line"), ParseError);
    CHECK_THROWS_AS(parse_k0_expression(f.reg, "line line2"), ParseError);
    CHECK_THROWS_AS(parse_k0_expression(f.reg, "ghost"), ParseError);
    CHECK_THROWS_AS(parse_k0_expression(f.reg, "line / 2"), ParseError);
    CHECK_THROWS_AS(parse_k0_expression(f.reg, ""), ParseError);
}

TEST_CASE("property: ring axioms and ch compatibility on random triples")
{
    Sampler s(123);
    for (int k = 0; k < 8; ++k) {
        const instances::Instance inst = instances::random_instance(s, static_cast<instances::Family>(k % 3), 3);
        ConnectionRegistry reg(inst.algebra);
        for (const char* name : {"a", "b", "c"})
            reg.add(s.connection(inst.algebra, static_cast<std::size_t>(s.uniform(1, 2)), 1, name));
        const K0Element a = k0_symbol(reg, "a");
        const K0Element b = k0_symbol(reg, "b");
        const K0Element c = k0_symbol(reg, "c");
        CHECK(k0_product(reg, a, b) == k0_product(reg, b, a));
        CHECK(k0_product(reg, k0_product(reg, a, b), c) == k0_product(reg, a, k0_product(reg, b, c)));
        CHECK(k0_product(reg, a, k0_combine(reg, b, c, 1)) ==
              k0_combine(reg, k0_product(reg, a, b), k0_product(reg, a, c), 1));

        const ChernForm cha = chern_on_k0(reg, a);
        const ChernForm chb = chern_on_k0(reg, b);
        const ChernForm chc = chern_on_k0(reg, c);
        CHECK_MESSAGE(chern_on_k0(reg, k0_product(reg, a, b)) == wedge(cha, chb), inst.description);
        CHECK(chern_on_k0(reg, k0_combine(reg, a, c, -1)) == cha - chc);
        const std::string sum = reg.add_direct_sum("a", "b");
        CHECK(chern_character(reg.get(sum)) == cha + chb);
        CHECK(chern_on_k0(reg, k0_symbol(reg, sum)) == chern_character(reg.get(sum)));
    }
}
