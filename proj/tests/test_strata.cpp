#include <doctest.h>

#include <sstream>

#include "sigma45/strata.hpp"

using namespace sigma45;

namespace {

SymId S(std::initializer_list<int> idx) {
    Indices v;
    for (int i : idx) v.push_back(uint8_t(i));
    return symtab::intern(v);
}

CoeffFrac Q(long n, long d = 1) { return CoeffFrac(Rational(n, d)); }

} // namespace

TEST_CASE("solving order") {
    // more indices first
    CHECK(symtab::cmp_strata(S({6, 6, 6}), S({5, 6})) > 0);
    // same count: higher sorted-descending tuple first
    CHECK(symtab::cmp_strata(S({1, 5, 5}), S({3, 3, 4})) > 0);
    CHECK(symtab::cmp_strata(S({1, 5, 5}), S({2, 3, 5})) > 0);
    CHECK(symtab::cmp_strata(S({2, 2, 6}), S({1, 4, 6})) < 0);
    CHECK(symtab::cmp_strata(S({1, 2, 4}), S({2, 2, 2})) > 0);
    // u0 order: fewer 2-indices first
    CHECK(symtab::cmp_u0(S({3, 4}), S({2, 2})) > 0);
    CHECK(symtab::cmp_u0(S({2, 3, 4}), S({2, 2, 2})) > 0);
    CHECK(symtab::cmp_u0(S({1, 3, 4}), S({3, 4})) > 0);
    CHECK(symtab::cmp_u0(S({3, 4, 5, 6}), S({2, 2, 5, 6})) > 0);
}

TEST_CASE("master expansion reproduces the displayed coefficients") {
    MasterExpansion mx = master_expansion(5);
    // xi^0: sigma itself
    CHECK(mx.coeff[0] == LinExpr::single(S({})));
    // xi^1: -sigma_6
    CHECK(mx.coeff[1] == LinExpr::single(S({6}), Q(-1)));
    // xi^2: 1/2 (sigma_66 - sigma_5)
    {
        LinExpr want;
        want.add(S({6, 6}), Q(1, 2));
        want.add(S({5}), Q(-1, 2));
        CHECK(mx.coeff[2] == want);
    }
    // xi^3: 1/2 s56 - 1/3 s4 - 1/6 s666
    {
        LinExpr want;
        want.add(S({5, 6}), Q(1, 2));
        want.add(S({4}), Q(-1, 3));
        want.add(S({6, 6, 6}), Q(-1, 6));
        CHECK(mx.coeff[3] == want);
    }
    // xi^4: 1/8 s55 + 1/3 s46 - 1/4 s566 + 1/24 s6666
    {
        LinExpr want;
        want.add(S({5, 5}), Q(1, 8));
        want.add(S({4, 6}), Q(1, 3));
        want.add(S({5, 6, 6}), Q(-1, 4));
        want.add(S({6, 6, 6, 6}), Q(1, 24));
        CHECK(mx.coeff[4] == want);
    }
    // xi^5: 1/12 s5666 + 1/6 s45 - 1/120 s66666 - 1/6 s466 - 1/8 s556 + 1/20 mu4 s6
    {
        LinExpr want;
        want.add(S({5, 6, 6, 6}), Q(1, 12));
        want.add(S({4, 5}), Q(1, 6));
        want.add(S({6, 6, 6, 6, 6}), Q(-1, 120));
        want.add(S({4, 6, 6}), Q(-1, 6));
        want.add(S({5, 5, 6}), Q(-1, 8));
        want.add(S({6}), CoeffFrac(CoeffScalar::mu(4).scale(Rational(1, 20))));
        CHECK(mx.coeff[5] == want);
    }
}

TEST_CASE("index shift appends indices") {
    MasterExpansion mx = master_expansion(3);
    // shift of sigma(u^) by [6] -> sigma_6
    CHECK(mx.shifted_coeff(0, S({6})) == LinExpr::single(S({6})));
    // xi^2 coefficient shifted by [6]: 1/2 (s666 - s56)
    LinExpr want;
    want.add(S({6, 6, 6}), Q(1, 2));
    want.add(S({5, 6}), Q(-1, 2));
    CHECK(mx.shifted_coeff(2, S({6})) == want);
    // shift by [2,3] of the xi^0 term
    CHECK(mx.shifted_coeff(0, S({2, 3})) == LinExpr::single(S({2, 3})));
}

TEST_CASE("descent from sigma=0 yields the level-4 rules") {
    MasterExpansion mx = master_expansion(6);
    RelationSet theta5("theta5");
    theta5.add_rule(S({}), LinExpr(), "defining");
    RelationSet t4 = descend(theta5, mx, 4);

    // the five displayed rules, exactly
    REQUIRE(t4.has(S({6})));
    CHECK(t4.rule(S({6}))->rhs.is_zero());

    REQUIRE(t4.has(S({6, 6})));
    CHECK(t4.rule(S({6, 6}))->rhs == LinExpr::single(S({5})));

    REQUIRE(t4.has(S({6, 6, 6})));
    {
        LinExpr want;
        want.add(S({5, 6}), Q(3));
        want.add(S({4}), Q(-2));
        CHECK(t4.rule(S({6, 6, 6}))->rhs == want);
    }
    REQUIRE(t4.has(S({6, 6, 6, 6})));
    {
        LinExpr want;
        want.add(S({5, 6, 6}), Q(6));
        want.add(S({4, 6}), Q(-8));
        want.add(S({5, 5}), Q(-3));
        CHECK(t4.rule(S({6, 6, 6, 6}))->rhs == want);
    }
    REQUIRE(t4.has(S({6, 6, 6, 6, 6})));
    {
        LinExpr want;
        want.add(S({5, 6, 6, 6}), Q(10));
        want.add(S({4, 6, 6}), Q(-20));
        want.add(S({5, 5, 6}), Q(-15));
        want.add(S({4, 5}), Q(20));
        want.add(S({6}), CoeffFrac(CoeffScalar::mu(4).scale(Rational(6))));
        CHECK(t4.rule(S({6, 6, 6, 6, 6}))->rhs == want);
    }
}

TEST_CASE("reduction is a deterministic fixpoint") {
    MasterExpansion mx = master_expansion(6);
    RelationSet theta5("theta5");
    theta5.add_rule(S({}), LinExpr(), "defining");
    RelationSet t4 = descend(theta5, mx, 4);

    LinExpr e;
    e.add(S({6, 6, 6}), Q(1));
    e.add(S({2, 3}), Q(5));
    LinExpr r1 = t4.reduce(e);
    CHECK(r1 == t4.reduce(r1));
    // already-reduced symbol is a fixpoint
    LinExpr basis = LinExpr::single(S({2, 3}));
    CHECK(t4.reduce(basis) == basis);
}

TEST_CASE("relation serialization round-trip") {
    MasterExpansion mx = master_expansion(6);
    RelationSet theta5("theta5");
    theta5.add_rule(S({}), LinExpr(), "defining");
    RelationSet t4 = descend(theta5, mx, 4);

    std::ostringstream os;
    t4.write(os);
    std::istringstream is(os.str());
    RelationSet back = RelationSet::read(is);
    REQUIRE(back.size() == t4.size());
    for (size_t i = 0; i < t4.size(); ++i) {
        CHECK(back.rules()[i].lhs == t4.rules()[i].lhs);
        CHECK(back.rules()[i].rhs == t4.rules()[i].rhs);
    }
    std::ostringstream os2;
    back.write(os2);
    CHECK(os.str() == os2.str());
}

TEST_CASE("every derived relation is isobaric") {
    MasterExpansion mx = master_expansion(8);
    RelationSet theta5("theta5");
    theta5.add_rule(S({}), LinExpr(), "defining");
    RelationSet t4 = descend(theta5, mx, 4);
    for (const auto& r : t4.rules()) {
        LinExpr e = LinExpr::single(r.lhs) - r.rhs;
        auto w = e.weight();
        CHECK(w.isobaric);
    }
}

TEST_CASE("cyclic transform fixes mu-coefficient relations") {
    LinExpr e;
    e.add(S({6, 6, 6}), Q(1));
    e.add(S({5, 6}), Q(-3));
    e.add(S({4}), Q(2));
    LinExpr t = cyclic_transform(e);
    // isobaric mu-coefficient relation transforms by an overall iota power
    LinExpr expect = e;
    expect.scale(CoeffFrac(CoeffScalar::iota(((-symtab::weight(S({6, 6, 6}))) % 4 + 4) % 4)));
    CHECK(t == expect);
}
