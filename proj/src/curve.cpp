#include "sigma45/curve.hpp"

#include <stdexcept>

namespace sigma45 {
namespace curve {

ScalarSeries quarter_power(const ScalarSeries& g, int num_quarters) {
    int order = g.trunc();
    Rational alpha(num_quarters, 4);
    ScalarSeries res = ScalarSeries::monomial(Param(g.param()), CoeffScalar(1), 0, order);
    if (order <= 1) return res;
    if (g.val() < 1) throw std::domain_error("quarter_power: series must vanish at 0");
    ScalarSeries gk = ScalarSeries::monomial(Param(g.param()), CoeffScalar(1), 0, order);
    Rational binom(1);
    int vg = g.val();
    for (int k = 1; k * vg < order; ++k) {
        gk = gk * g;
        gk.truncate(order);
        binom *= (alpha - Rational(k - 1)) / Rational(k);
        ScalarSeries piece = gk;
        piece.scale(CoeffScalar(binom));
        res += piece;
    }
    return res.truncate(order), res;
}

// g(xi) with 1+g = xi^20 * f(xi^-4)
static ScalarSeries infinity_g(int order) {
    ScalarSeries g(Param::Xi, order);
    const int mu_exp[4] = {4, 8, 12, 16}; // mu4 xi^4 .. mu1 xi^16
    for (int j = 0; j < 4; ++j)
        if (mu_exp[j] < order) g.add(mu_exp[j], CoeffScalar::mu(4 - j));
    if (20 < order) g.add(20, CoeffScalar::mu(0));
    return g;
}

ScalarSeries t_at_infinity(int order) {
    return ScalarSeries::monomial(Param::Xi, CoeffScalar(1), -4, order);
}

ScalarSeries s_at_infinity(int order) {
    ScalarSeries r = quarter_power(infinity_g(order + 5), 1).shifted(-5);
    r.truncate(order);
    return r;
}

ScalarSeries du_infinity(int i, int order) {
    if (i < 1 || i > 6) throw std::invalid_argument("du_infinity: index out of range");
    auto [a, b] = kHoloNumerator[i - 1];
    // g_i dt/(4 s^3) = -xi^(10-4a-5b) (1+g)^((b-3)/4)
    int lead = 10 - 4 * a - 5 * b;
    ScalarSeries r = quarter_power(infinity_g(order - lead), b - 3).shifted(lead);
    r.scale(CoeffScalar(-1));
    r.truncate(order);
    return r;
}

ScalarSeries abel_series(int i, int order) {
    return du_infinity(i, order - 1).integrated();
}

ScalarSeries second_derivative_series(int i, int order) {
    return du_infinity(i, order + 1).derivative();
}

ScalarSeries s_at_origin(int sheet, int order) {
    // f(t)/mu0 = 1 + (mu1 t + mu2 t^2 + mu3 t^3 + mu4 t^4 + t^5)/mu0
    ScalarSeries h(Param::T, order);
    for (int j = 1; j <= 5; ++j) {
        if (j >= order) break;
        CoeffScalar c = (j == 5) ? CoeffScalar(1) : CoeffScalar::mu(j);
        h.add(j, c * CoeffScalar::mu(0, -1));
    }
    ScalarSeries r = quarter_power(h, 1);
    CoeffScalar lead = CoeffScalar::iota(sheet) * CoeffScalar::rho();
    r.scale(lead);
    return r;
}

ScalarSeries curve_poly(const ScalarSeries& t) {
    ScalarSeries acc = ScalarSeries::monomial(t.param(), CoeffScalar::mu(0), 0, t.trunc() + 8);
    ScalarSeries tk = ScalarSeries::monomial(t.param(), CoeffScalar(1), 0, t.trunc() + 8);
    for (int j = 1; j <= 5; ++j) {
        tk = tk * t;
        ScalarSeries piece = tk;
        piece.scale(j == 5 ? CoeffScalar(1) : CoeffScalar::mu(j));
        acc += piece;
    }
    return acc;
}

GradedPoly cyclic_action(const GradedPoly& p) {
    // u1,u2,u4 pick up iota; u3,u5 a sign; u6 maps to -iota u6 = iota^3 u6
    if (p.sig()->size() != 6) throw std::invalid_argument("cyclic_action: u-polynomials only");
    GradedPoly r(p.sig());
    for (const auto& [e, c] : p.terms()) {
        int iexp = e[0] + e[1] + e[3] + 3 * e[5];
        int sexp = e[2] + e[4];
        CoeffScalar f = CoeffScalar::iota(iexp);
        if (sexp % 2) f = -f;
        r.add_term(e, c * f);
    }
    return r;
}

std::shared_ptr<const Signature> ts_signature() {
    static std::shared_ptr<const Signature> s = Signature::make({"t", "s"}, {-4, -5});
    return s;
}

std::array<GradedPoly, 6> second_kind_numerators() {
    auto sig = ts_signature();
    auto mono = [&](long c, int et, int es, CoeffScalar mu = CoeffScalar(1)) {
        GradedPoly p(sig);
        ExpVec e{int16_t(et), int16_t(es)};
        p.add_term(e, mu.scale(Rational(c)));
        return p;
    };
    std::array<GradedPoly, 6> h;
    h[0] = mono(-11, 3, 2) + mono(-8, 2, 2, CoeffScalar::mu(4)) + mono(-5, 1, 2, CoeffScalar::mu(3)) +
           mono(-2, 0, 2, CoeffScalar::mu(2));
    h[1] = mono(-7, 2, 2) + mono(-4, 1, 2, CoeffScalar::mu(4)) + mono(-1, 0, 2, CoeffScalar::mu(3));
    h[2] = mono(-6, 3, 1) + mono(-4, 2, 1, CoeffScalar::mu(4)) + mono(-2, 1, 1, CoeffScalar::mu(3));
    h[3] = mono(-3, 1, 2);
    h[4] = mono(-2, 2, 1);
    h[5] = mono(-1, 3, 0);
    return h;
}

} // namespace curve
} // namespace sigma45
