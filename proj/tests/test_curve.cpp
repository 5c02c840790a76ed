#include <doctest.h>

#include "sigma45/curve.hpp"

using namespace sigma45;
using namespace sigma45::curve;

namespace {

// coefficient of xi^j in u_i carries weight w(u_i) - j
void check_isobaric(const ScalarSeries& s, int total) {
    for (int k = s.lo(); k < s.trunc(); ++k) {
        CoeffScalar c = s.at(k);
        if (c.is_zero()) continue;
        auto w = c.weight();
        CHECK(w.isobaric);
        CHECK(w.value + k * param_weight(s.param()) == total);
    }
}

} // namespace

TEST_CASE("curve relation holds at infinity") {
    int order = 12;
    ScalarSeries s = s_at_infinity(order);
    ScalarSeries f = curve_poly(t_at_infinity(order + 24));
    ScalarSeries s4 = s.pow(4);
    int check_to = std::min(s4.trunc(), f.trunc());
    CHECK((s4 - f).eq_to(ScalarSeries(Param::Xi, check_to), check_to));
    // principal branch: s = xi^-5 (1 + 1/4 mu4 xi^4 + ...)
    CHECK(s.at(-5) == CoeffScalar(1));
    CHECK(s.at(-1) == CoeffScalar::term(Rational(1, 4), [] { Monomial m; m.e[GMu4] = 1; return m; }()));
}

TEST_CASE("holomorphic differentials at infinity") {
    int order = 8;
    // leading powers (10,6,5,2,1,0), all with coefficient -1
    int lead[6] = {10, 6, 5, 2, 1, 0};
    for (int i = 1; i <= 6; ++i) {
        ScalarSeries du = du_infinity(i, order + 11);
        CHECK(du.val() == lead[i - 1]);
        CHECK(du.at(lead[i - 1]) == CoeffScalar(-1));
    }
    // du6 = -1 + 1/4 mu4 xi^4 + O(xi^5)
    ScalarSeries du6 = du_infinity(6, 5);
    CHECK(du6.at(0) == CoeffScalar(-1));
    CHECK(du6.at(4) == CoeffScalar::mu(4).scale(Rational(1, 4)));
    // du1 = -xi^10 + O(xi^11)
    ScalarSeries du1 = du_infinity(1, 11);
    CHECK(du1.at(10) == CoeffScalar(-1));
}

TEST_CASE("abel series leading terms and grading") {
    // u1 = -xi^11/11, u2 = -xi^7/7, u3 = -xi^6/6, u4 = -xi^3/3, u5 = -xi^2/2, u6 = -xi
    int leads[6] = {11, 7, 6, 3, 2, 1};
    for (int i = 1; i <= 6; ++i) {
        ScalarSeries u = abel_series(i, 16);
        CHECK(u.val() == leads[i - 1]);
        CoeffScalar c = u.at(leads[i - 1]);
        CHECK(c == CoeffScalar(Rational(-1, leads[i - 1])));
        check_isobaric(u, kUWeight[i - 1]);
        // differentiating reproduces du_i exactly
        CHECK(u.derivative().eq_to(du_infinity(i, 15), 15));
    }
    // u6 = -xi + O(xi^5): next term at xi^5
    ScalarSeries u6 = abel_series(6, 6);
    CHECK(u6.at(2).is_zero());
    CHECK(u6.at(3).is_zero());
    CHECK(u6.at(4).is_zero());
    CHECK(u6.at(5) == CoeffScalar::mu(4).scale(Rational(1, 20)));
    // u1 = -xi^11/11 + O(xi^15)
    ScalarSeries u1 = abel_series(1, 16);
    for (int k = 12; k < 15; ++k) CHECK(u1.at(k).is_zero());
    CHECK_FALSE(u1.at(15).is_zero());
}

TEST_CASE("second derivatives match the displayed expansions") {
    // d2u5/dxi2 = -1 + 5/2 mu4 xi^4 + O(xi^5)
    ScalarSeries d5 = second_derivative_series(5, 5);
    CHECK(d5.at(0) == CoeffScalar(-1));
    CHECK(d5.at(4) == CoeffScalar::mu(4).scale(Rational(5, 2)));
    // d2u1/dxi2 = -10 xi^9 + O(xi^10)
    ScalarSeries d1 = second_derivative_series(1, 10);
    CHECK(d1.at(9) == CoeffScalar(Rational(-10)));
    // d2u6/dxi2 = mu4 xi^3 + O(xi^4)
    ScalarSeries d6 = second_derivative_series(6, 4);
    CHECK(d6.at(3) == CoeffScalar::mu(4));
    // definitional: equals differentiating the abel series twice
    for (int i = 1; i <= 6; ++i)
        CHECK(second_derivative_series(i, 9).eq_to(abel_series(i, 11).derivative().derivative(), 9));
}

TEST_CASE("expansion at the origin on each sheet") {
    for (int N = 0; N < 4; ++N) {
        ScalarSeries s = s_at_origin(N, 6);
        // constant term iota^N rho
        CHECK(s.at(0) == CoeffScalar::iota(N) * CoeffScalar::rho());
        // linear term iota^N rho mu1/(4 mu0)
        CoeffScalar expect = CoeffScalar::iota(N) * CoeffScalar::rho() * CoeffScalar::mu(1) *
                             CoeffScalar::mu(0, -1);
        expect.scale(Rational(1, 4));
        CHECK(s.at(1) == expect);
        // fourth power reproduces the curve polynomial
        ScalarSeries f = curve_poly(ScalarSeries::var(Param::T, 8));
        ScalarSeries s4 = s.pow(4);
        CHECK(s4.eq_to(f, std::min(s4.trunc(), f.trunc())));
    }
}

TEST_CASE("cyclic action on u-polynomials") {
    auto sig = Signature::u6();
    GradedPoly u3 = GradedPoly::variable(sig, 2);
    CHECK(cyclic_action(u3) == -u3);
    GradedPoly u6 = GradedPoly::variable(sig, 5);
    GradedPoly want = u6;
    want.scale(CoeffScalar::iota(3));
    CHECK(cyclic_action(u6) == want);
    // fourth power of the action is the identity
    GradedPoly p = GradedPoly::variable(sig, 0) * GradedPoly::variable(sig, 4) +
                   GradedPoly::variable(sig, 5, 3);
    GradedPoly q = p;
    for (int k = 0; k < 4; ++k) q = cyclic_action(q);
    CHECK(q == p);
}

TEST_CASE("second kind numerators pair with the holomorphic weights") {
    auto h = second_kind_numerators();
    // dr_j = h_j/(4 s^3) dt must have weight -w(u_j)
    for (int j = 0; j < 6; ++j) {
        auto w = h[j].weight();
        REQUIRE(w.isobaric);
        // weight(dr_j) = w(h_j) + w(dt) - 3 w(s) = w(h_j) - 4 + 15
        CHECK(w.value - 4 + 15 == -kUWeight[j]);
    }
}
