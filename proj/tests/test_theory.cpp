#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ohk/theory.hpp"

using namespace ohk;

TEST_CASE("builtin presentations") {
    auto grp = builtin_theory("Grp");
    CHECK(grp.ops.size() == 3);
    CHECK(grp.eqs.size() == 7);
    CHECK(grp.has_omega_group());

    auto ab = builtin_theory("Ab");
    CHECK(ab.eqs.size() == 8);

    auto skb = builtin_theory("SKB");
    auto rad = builtin_theory("RadRng");
    CHECK(skb.ops == rad.ops);
    CHECK(rad.eqs.size() == skb.eqs.size() + 2);
    CHECK(skb.groups.size() == 2);

    auto digrp = builtin_theory("DiGrp");
    CHECK(digrp.groups.size() == 2);
    CHECK(digrp.eqs.size() == 14);

    CHECK(builtin_theory("Mon").eqs.size() == 4);
    CHECK_THROWS_AS(builtin_theory("Ring"), std::invalid_argument);
}

TEST_CASE("parse theory text") {
    const std::string grp_text = R"(# the theory of groups
theory Grp
op mul : 2
op one : 0
op inv : 1
eq mul(x, mul(y, z)) = mul(mul(x, y), z)
eq mul(x, one()) = x = mul(one(), x)
eq mul(x, inv(x)) = one() = mul(inv(x), x)
group mul one inv
)";
    auto grp = parse_theory(grp_text);
    CHECK(grp.ops.size() == 3);
    CHECK(grp.eqs.size() == 7);
    CHECK(grp.omega_group().mul == "mul");

    CHECK_THROWS_AS(parse_theory("theory T\nop f : 2\neq f(x) = x\n"), ParseError);
    CHECK_THROWS_AS(parse_theory("theory T\nop f : 1\nop f : 2\n"), ParseError);
    CHECK_THROWS_AS(parse_theory("op f : 1\n"), ParseError);
    CHECK_THROWS_AS(parse_theory("theory T\neq g(x) = x\n"), ParseError);
}

TEST_CASE("explicit vars clause") {
    auto th = parse_theory(
        "theory T\nop f : 2\neq f(x, y) = f(y, x) vars y x\n");
    // Declared order y, x: the lhs is f(var1, var0).
    CHECK(th.eqs.size() == 1);
    CHECK(th.eqs[0].nvars == 2);
    CHECK(th.eqs[0].lhs == Term::apply("f", {Term::var(1), Term::var(0)}));
    CHECK_THROWS_AS(
        parse_theory("theory T\nop f : 1\neq f(x) = x vars y\n"), ParseError);
}

TEST_CASE("print parse round trip") {
    for (const char* name : {"Mon", "Grp", "Ab", "SKB", "DiGrp", "RadRng"}) {
        auto th = builtin_theory(name);
        auto back = parse_theory(print_theory(th));
        CHECK(back == th);
    }
}

TEST_CASE("skew brace compatibility axiom present") {
    auto skb = builtin_theory("SKB");
    Term a = Term::var(0), b = Term::var(1), c = Term::var(2);
    Term lhs = Term::apply("mul", {a, Term::apply("add", {b, c})});
    bool found = false;
    for (const Equation& e : skb.eqs)
        if (e.lhs == lhs || e.rhs == lhs) found = true;
    CHECK(found);
}

TEST_CASE("omega group validation") {
    for (const char* name : {"Grp", "Ab", "SKB", "DiGrp", "RadRng"}) {
        auto rep = validate_omega_group(builtin_theory(name));
        CHECK(rep.all_known());
    }
    // A binary op with no unit equation stays unknown.
    auto th = parse_theory(
        "theory T\nop mul : 2\nop one : 0\nop inv : 1\nop f : 2\n"
        "eq mul(x, mul(y, z)) = mul(mul(x, y), z)\n"
        "eq mul(x, one()) = x = mul(one(), x)\n"
        "eq mul(x, inv(x)) = one() = mul(inv(x), x)\n"
        "group mul one inv\n");
    auto rep = validate_omega_group(th);
    bool saw_unknown = false;
    for (auto& [op, st] : rep.per_op)
        if (op == "f") saw_unknown = (st == UnitStatus::Unknown);
    CHECK(saw_unknown);
    // With a unit equation it becomes derivable.
    auto th2 = parse_theory(
        "theory T\nop mul : 2\nop one : 0\nop inv : 1\nop f : 2\n"
        "eq mul(x, mul(y, z)) = mul(mul(x, y), z)\n"
        "eq mul(x, one()) = x = mul(one(), x)\n"
        "eq mul(x, inv(x)) = one() = mul(inv(x), x)\n"
        "eq f(x, y) = mul(x, y) vars x y\n"
        "group mul one inv\n");
    auto rep2 = validate_omega_group(th2);
    CHECK(rep2.all_known());
    CHECK_THROWS_AS(validate_omega_group(builtin_theory("Mon")),
                    std::invalid_argument);
}

TEST_CASE("theory morphisms") {
    auto grp = builtin_theory("Grp");
    auto id = identity_on_ops(grp, grp);
    auto rep = check_morphism(id);
    CHECK(rep.valid);
    CHECK(rep.surjective);
    CHECK(rep.model_level_eqs.empty());

    auto skb = builtin_theory("SKB");
    auto rad = builtin_theory("RadRng");
    auto rep2 = check_morphism(identity_on_ops(skb, rad));
    CHECK(rep2.valid);
    CHECK(rep2.surjective);
    CHECK(rep2.model_level_eqs.empty());
    // RadRng -> SKB leaves the two radical-ring laws unmatched.
    auto rep3 = check_morphism(identity_on_ops(rad, skb));
    CHECK(rep3.valid);
    CHECK(rep3.model_level_eqs.size() == 2);

    // Grp -> SKB sending the group ops to the additive family.
    TheoryMorphism m{grp, skb, {{"mul", "add"}, {"one", "one"}, {"inv", "neg"}}};
    auto rep4 = check_morphism(m);
    CHECK(rep4.valid);
    CHECK_FALSE(rep4.surjective);
    CHECK(rep4.model_level_eqs.empty());

    TheoryMorphism bad{grp, skb, {{"mul", "add"}, {"one", "one"}}};
    CHECK_FALSE(check_morphism(bad).valid);
}
