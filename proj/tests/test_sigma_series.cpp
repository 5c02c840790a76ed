#include <doctest.h>

#include <chrono>
#include <sstream>

#include "sigma45/curve.hpp"
#include "sigma45/sigma_series.hpp"
#include "sigma45/strata.hpp"

using namespace sigma45;

namespace {

// shared descent chain for the relation-backed constraint families
const DescentChain& chain() {
    static DescentChain ch = derive_chain(17, 4);
    return ch;
}

const SigmaExpansion& table23() {
    static SigmaExpansion t = [] {
        BuildOptions opt;
        opt.depth = 23;
        opt.theta1 = &chain().theta1;
        opt.theta2 = &chain().theta2;
        return build_expansion(opt);
    }();
    return t;
}

ExpVec ev(std::initializer_list<int> l) {
    ExpVec e;
    for (int x : l) e.push_back(int16_t(x));
    return e;
}

} // namespace

TEST_CASE("displayed seed polynomial") {
    GradedPoly sw = schur_weierstrass();
    const CoeffScalar* c = sw.coeff(ev({0, 0, 0, 0, 0, 15}));
    REQUIRE(c);
    CHECK(*c == CoeffScalar(Rational(1, 8382528)));
    c = sw.coeff(ev({0, 0, 0, 5, 0, 0}));
    REQUIRE(c);
    CHECK(*c == CoeffScalar(Rational(1, 4)));
    CHECK(sw.negate_vars() == -sw);
    CHECK(sw.all_terms_odd_degree());
    auto w = sw.weight();
    CHECK(w.isobaric);
    CHECK(w.value == 15);
}

TEST_CASE("candidate counts match a brute-force enumeration") {
    auto oracle = [](int weight) {
        const int w[6] = {11, 7, 6, 3, 2, 1};
        size_t n = 0;
        for (int e1 = 0; e1 * w[0] <= weight; ++e1)
            for (int e2 = 0; e1 * w[0] + e2 * w[1] <= weight; ++e2)
                for (int e3 = 0; e1 * w[0] + e2 * w[1] + e3 * w[2] <= weight; ++e3)
                    for (int e4 = 0; e1 * w[0] + e2 * w[1] + e3 * w[2] + e4 * w[3] <= weight; ++e4)
                        for (int e5 = 0;
                             e1 * w[0] + e2 * w[1] + e3 * w[2] + e4 * w[3] + e5 * w[4] <= weight;
                             ++e5) {
                            int e6 = weight - e1 * w[0] - e2 * w[1] - e3 * w[2] - e4 * w[3] -
                                     e5 * w[4];
                            if ((e1 + e2 + e3 + e4 + e5 + e6) % 2 == 1) ++n;
                        }
        return n;
    };
    CHECK(count_ck_candidates(15) == oracle(15));
    CHECK(count_ck_candidates(19) == oracle(19)); // single mu-monomial, mu4
    CHECK(count_ck_candidates(23) == 2 * oracle(23));
}

TEST_CASE("weight-15 layer reproduces the seed in under a second") {
    auto t0 = std::chrono::steady_clock::now();
    SigmaExpansion t;
    BuildOptions opt;
    opt.depth = 15;
    opt.theta1 = &chain().theta1;
    CkInfo info = build_ck(t, 15, opt);
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(t.layer(15) == schur_weierstrass());
    CHECK(info.fully_determined);
    CHECK(dt < 1.0);
}

TEST_CASE("higher layers are odd, isobaric, and constraint-consistent") {
    const SigmaExpansion& t = table23();
    for (int k = 15; k <= 23; k += 4) {
        const GradedPoly& c = t.layer(k);
        CHECK(c.all_terms_odd_degree());
        CHECK(c.negate_vars() == -c);
        auto w = c.weight();
        CHECK(w.isobaric);
        CHECK(w.value == 15);
        CHECK_FALSE(c.is_zero());
    }
    for (auto idx : {Indices{}, Indices{6}, Indices{5}, Indices{4}, Indices{3}}) {
        SymId s = symtab::intern(idx);
        ScalarSeries ser = t.deriv_series(s);
        CHECK(ser.known_zero());
    }
}

TEST_CASE("two-point vanishing holds for the stored expansion") {
    // sigma(u(xi1)+u(xi2)) = 0: evaluate on lines xi2 = c*xi1; an identity of
    // this bidegree cannot vanish on all of them without vanishing as a
    // bivariate series
    const SigmaExpansion& t = table23();
    int td = t.depth() + 4 - 15;
    for (long c : {2L, 3L, 5L, 7L, 11L}) {
        ScalarSeries acc(Param::Xi, td);
        std::array<std::vector<ScalarSeries>, 6> pows;
        for (int i = 0; i < 6; ++i) {
            ScalarSeries ui = curve::abel_series(i + 1, td);
            ScalarSeries scaled(Param::Xi, td);
            Rational cj(1);
            for (int j = 0; j < td; ++j) {
                if (j >= 1) cj *= Rational(c);
                if (j < ui.val()) continue;
                CoeffScalar cc = ui.at(j);
                if (cc.is_zero()) continue;
                cc.scale(cj);
                scaled.add(j, cc);
            }
            ScalarSeries sum = ui + scaled;
            pows[i].push_back(ScalarSeries::monomial(Param::Xi, CoeffScalar(1), 0, td));
            pows[i].push_back(sum);
        }
        auto upow = [&](int i, int e) -> const ScalarSeries& {
            while (int(pows[i].size()) <= e) {
                ScalarSeries nxt = pows[i].back() * pows[i][1];
                nxt.truncate(td);
                pows[i].push_back(std::move(nxt));
            }
            return pows[i][size_t(e)];
        };
        for (int k = 15; k <= t.depth(); k += 4) {
            for (const auto& [e, coefficient] : t.layer(k).terms()) {
                ScalarSeries prod = ScalarSeries::monomial(Param::Xi, CoeffScalar(1), 0, td);
                for (int i = 0; i < 6; ++i) {
                    if (e[i] == 0) continue;
                    prod = prod * upow(i, e[i]);
                    prod.truncate(td);
                }
                prod.scale(coefficient);
                acc += prod;
            }
        }
        CHECK(acc.known_zero());
    }
}

TEST_CASE("table import/export round-trip") {
    const SigmaExpansion& t = table23();
    std::ostringstream os;
    t.write(os);
    std::istringstream is(os.str());
    SigmaExpansion back = SigmaExpansion::read(is);
    CHECK(back.depth() == t.depth());
    for (int k = 15; k <= t.depth(); k += 4) CHECK(back.layer(k) == t.layer(k));
    std::ostringstream os2;
    back.write(os2);
    CHECK(os.str() == os2.str());
}

TEST_CASE("derivative series are truncation-stable") {
    const SigmaExpansion& t = table23();
    SymId s23 = symtab::intern({2, 3});
    ScalarSeries a = t.deriv_series(s23);
    ScalarSeries b = t.deriv_series(s23, 5);
    for (int j = std::min(a.val(), b.val()); j < 5; ++j) CHECK(a.at(j) == b.at(j));
}
