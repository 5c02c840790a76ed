#include <doctest.h>

#include "sigma45/coeff.hpp"
#include "sigma45/linsolve.hpp"
#include "sigma45/poly.hpp"
#include "sigma45/series.hpp"

using namespace sigma45;

namespace {

// small deterministic generator for property tests
struct Rng {
    uint64_t s = 0x9e3779b97f4a7c15ull;
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long val(long lo, long hi) { return lo + long(next() % uint64_t(hi - lo + 1)); }
};

CoeffScalar random_scalar(Rng& rng, int terms = 3) {
    CoeffScalar c;
    for (int i = 0; i < terms; ++i) {
        Monomial m;
        m.e[GMu0] = int16_t(rng.val(-2, 2));
        m.e[GMu1] = int16_t(rng.val(0, 2));
        m.e[GMu4] = int16_t(rng.val(0, 2));
        m.e[GIota] = int16_t(rng.val(0, 3));
        m.e[GRho] = int16_t(rng.val(0, 5));
        long num = rng.val(-9, 9);
        long den = rng.val(1, 7);
        c += CoeffScalar::term(Rational(num, den), m);
    }
    return c;
}

GradedPoly random_upoly(Rng& rng, int terms = 4) {
    auto sig = Signature::u6();
    GradedPoly p(sig);
    for (int i = 0; i < terms; ++i) {
        ExpVec e(6, 0);
        for (int v = 0; v < 6; ++v) e[v] = int16_t(rng.val(0, 2));
        p.add_term(e, random_scalar(rng, 2));
    }
    return p;
}

} // namespace

TEST_CASE("defining relations of the extension generators") {
    // iota * iota = -1
    CHECK(CoeffScalar::iota() * CoeffScalar::iota() == CoeffScalar(-1));
    // rho^5 = mu0 * rho
    CHECK(CoeffScalar::rho(5) == CoeffScalar::mu(0) * CoeffScalar::rho());
    // iota^(6N) for N=1 reduces to -1
    CHECK(CoeffScalar::iota(6) == CoeffScalar(-1));
    // repeated-multiplication oracle for iota powers
    CoeffScalar acc(1);
    for (int k = 0; k < 6; ++k) acc *= CoeffScalar::iota();
    CHECK(acc == CoeffScalar::iota(6));
}

TEST_CASE("unit inversion in the localized ring") {
    CoeffScalar u = CoeffScalar::term(Rational(-3, 4), [] {
        Monomial m;
        m.e[GMu0] = -2;
        m.e[GIota] = 1;
        m.e[GRho] = 3;
        return m;
    }());
    CHECK(u.is_unit());
    CHECK(u * u.unit_inverse() == CoeffScalar(1));
    CHECK_FALSE((CoeffScalar::mu(1)).is_unit());
}

TEST_CASE("ring axioms on random triples") {
    Rng rng;
    for (int it = 0; it < 30; ++it) {
        CoeffScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + (b + c) == (a + b) + c);
    }
}

TEST_CASE("graded poly ring axioms and isobaric closure") {
    Rng rng;
    for (int it = 0; it < 10; ++it) {
        GradedPoly a = random_upoly(rng), b = random_upoly(rng), c = random_upoly(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
    }
    // isobaric product adds weights
    auto sig = Signature::u6();
    GradedPoly p = GradedPoly::variable(sig, 5); // u6, weight 1
    GradedPoly q = GradedPoly::variable(sig, 0); // u1, weight 11
    GradedPoly pq = p * q;
    auto w = pq.weight();
    CHECK(w.isobaric);
    CHECK(w.value == 12);
}

TEST_CASE("weight bookkeeping") {
    // u6^15 has weight 15
    auto sig = Signature::u6();
    GradedPoly p = GradedPoly::variable(sig, 5, 15);
    auto w = p.weight();
    CHECK(w.isobaric);
    CHECK(w.value == 15);
    // mu4 * u1 -> -4 + 11 = 7
    GradedPoly q = GradedPoly::variable(sig, 0);
    q.scale(CoeffScalar::mu(4));
    CHECK(q.weight().value == 7);
    // zero polynomial reports the zero flag
    GradedPoly z(sig);
    CHECK(z.weight().zero);
    // rho^4 and mu0 weigh the same
    CHECK(CoeffScalar::rho(4).weight().value == -20);
    CHECK(CoeffScalar::mu(0).weight().value == -20);
}

TEST_CASE("coeff fraction normalization") {
    CoeffScalar n = CoeffScalar::mu(1) * CoeffScalar::mu(0);
    CoeffScalar d = CoeffScalar::mu(0, 2);
    CoeffFrac f(n, d);
    CHECK(f.den_is_one()); // mu0 is invertible
    CHECK(f == CoeffFrac(CoeffScalar::mu(1) * CoeffScalar::mu(0, -1)));

    // polynomial cancellation through exact division
    CoeffScalar g = CoeffScalar::mu(1) + CoeffScalar::mu(2);
    CoeffFrac h(g * g, g);
    CHECK(h.den_is_one());
    CHECK(h == CoeffFrac(g));
}

TEST_CASE("series reversion round-trip") {
    Rng rng;
    int order = 10;
    for (int it = 0; it < 5; ++it) {
        ScalarSeries f(Param::X, order);
        f.set(1, CoeffScalar(rng.val(1, 5)));
        for (int k = 2; k < order; ++k) f.set(k, CoeffScalar(rng.val(-4, 4)));
        ScalarSeries g = f.revert();
        ScalarSeries back = f.compose(g);
        for (int k = 1; k < back.trunc(); ++k)
            CHECK(back.at(k) == (k == 1 ? CoeffScalar(1) : CoeffScalar()));
    }
    // identity maps to identity
    ScalarSeries id = ScalarSeries::var(Param::X, order);
    CHECK(id.revert().eq_to(id, order));
}

TEST_CASE("series composition associativity") {
    Rng rng;
    int order = 9;
    auto rand_series = [&](bool unit_lead) {
        ScalarSeries f(Param::X, order);
        f.set(1, CoeffScalar(unit_lead ? 1 : rng.val(1, 3)));
        for (int k = 2; k < order; ++k) f.set(k, CoeffScalar(rng.val(-3, 3)));
        return f;
    };
    for (int it = 0; it < 5; ++it) {
        ScalarSeries f = rand_series(false), g = rand_series(false), h = rand_series(true);
        ScalarSeries lhs = f.compose(g).compose(h);
        ScalarSeries rhs = f.compose(g.compose(h));
        CHECK(lhs.eq_to(rhs, std::min(lhs.trunc(), rhs.trunc())));
    }
}

TEST_CASE("linear solve: identity and Cramer oracle") {
    LinearSystem sys;
    sys.unknowns = {"x", "y"};
    sys.add_row({CoeffFrac(1), CoeffFrac(0)}, CoeffFrac(CoeffScalar::mu(3)));
    sys.add_row({CoeffFrac(0), CoeffFrac(1)}, CoeffFrac(7));
    auto sol = linear_solve(sys);
    REQUIRE(sol.status == LinearSolution::Status::Unique);
    CHECK(sol.verified);
    CHECK(sol.values[0].constant == CoeffFrac(CoeffScalar::mu(3)));
    CHECK(sol.values[1].constant == CoeffFrac(7));

    // 2x2 with mu-polynomial entries vs Cramer determinants
    CoeffFrac a11(CoeffScalar::mu(0) + CoeffScalar::mu(4));
    CoeffFrac a12(CoeffScalar::mu(1));
    CoeffFrac a21(CoeffScalar(2));
    CoeffFrac a22(CoeffScalar::mu(2) * CoeffScalar::mu(0, -1));
    CoeffFrac b1(CoeffScalar::mu(3)), b2(CoeffScalar(1));
    LinearSystem s2;
    s2.unknowns = {"x", "y"};
    s2.add_row({a11, a12}, b1);
    s2.add_row({a21, a22}, b2);
    auto sol2 = linear_solve(s2);
    REQUIRE(sol2.status == LinearSolution::Status::Unique);
    CHECK(sol2.verified);
    CoeffFrac det = a11 * a22 - a12 * a21;
    CHECK(sol2.values[0].constant == (b1 * a22 - a12 * b2) / det);
    CHECK(sol2.values[1].constant == (a11 * b2 - b1 * a21) / det);
}

TEST_CASE("linear solve: inconsistent and underdetermined") {
    LinearSystem sys;
    sys.unknowns = {"x", "y"};
    sys.add_row({CoeffFrac(1), CoeffFrac(1)}, CoeffFrac(1));
    sys.add_row({CoeffFrac(2), CoeffFrac(2)}, CoeffFrac(3));
    CHECK(linear_solve(sys).status == LinearSolution::Status::Inconsistent);

    LinearSystem s2;
    s2.unknowns = {"x", "y", "z"};
    s2.add_row({CoeffFrac(1), CoeffFrac(1), CoeffFrac(0)}, CoeffFrac(2));
    auto sol = linear_solve(s2);
    REQUIRE(sol.status == LinearSolution::Status::Underdetermined);
    CHECK(sol.free_vars.size() == 2);
    CHECK(sol.verified);
}
