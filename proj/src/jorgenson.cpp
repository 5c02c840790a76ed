#include "sigma45/jorgenson.hpp"

#include "sigma45/curve.hpp"
#include "sigma45/series.hpp"

#include <stdexcept>

namespace sigma45 {

std::shared_ptr<const Signature> jorgenson_signature() {
    static std::shared_ptr<const Signature> s = [] {
        std::vector<std::string> names;
        std::vector<int> weights;
        for (int j = 1; j <= 6; ++j) { names.push_back("a" + std::to_string(j)); weights.push_back(0); }
        for (int j = 1; j <= 6; ++j) { names.push_back("b" + std::to_string(j)); weights.push_back(0); }
        for (int j = 1; j <= 4; ++j) { names.push_back("t" + std::to_string(j)); weights.push_back(-4); }
        for (int j = 1; j <= 4; ++j) { names.push_back("s" + std::to_string(j)); weights.push_back(-5); }
        return Signature::make(std::move(names), std::move(weights));
    }();
    return s;
}

namespace {

using Matrix = std::vector<std::vector<GradedPoly>>;

GradedPoly det(const Matrix& m, std::vector<int> rows, std::vector<int> cols) {
    auto sig = jorgenson_signature();
    if (rows.size() == 1) return m[rows[0]][cols[0]];
    // expand along the column with the most zero entries
    size_t best = 0, best_zeros = 0;
    for (size_t c = 0; c < cols.size(); ++c) {
        size_t z = 0;
        for (int r : rows)
            if (m[r][cols[c]].is_zero()) ++z;
        if (z >= best_zeros) { best_zeros = z; best = c; }
    }
    std::vector<int> subcols;
    for (size_t c = 0; c < cols.size(); ++c)
        if (c != best) subcols.push_back(cols[c]);
    GradedPoly acc(sig);
    for (size_t i = 0; i < rows.size(); ++i) {
        const GradedPoly& piv = m[rows[i]][cols[best]];
        if (piv.is_zero()) continue;
        std::vector<int> subrows;
        for (size_t r = 0; r < rows.size(); ++r)
            if (r != i) subrows.push_back(rows[r]);
        GradedPoly minor = det(m, subrows, subcols);
        minor *= piv;
        if ((i + best) % 2) acc -= minor;
        else acc += minor;
    }
    return acc;
}

GradedPoly determinant(const Matrix& m) {
    std::vector<int> idx;
    for (size_t i = 0; i < m.size(); ++i) idx.push_back(int(i));
    return det(m, idx, idx);
}

// divide num and den by the numerator's content and leading sign
void normalize_quotient(GradedPoly& num, GradedPoly& den) {
    if (num.is_zero() || den.is_zero()) return;
    Rational g(0);
    for (const auto& [e, c] : num.terms()) g = Rational::content_gcd(g, c.content());
    const CoeffScalar& lead = num.terms().rbegin()->second;
    if (lead.leading_rational().sgn() < 0) g = -g;
    Rational inv = g.inv();
    num.scale(inv);
    den.scale(inv);
}

// entry of the column d^m u/dxi^m at xi = 0
GradedPoly limit_entry(int i, int m) {
    ScalarSeries du = curve::du_infinity(i, m + 2);
    for (int d = 1; d < m; ++d) du = du.derivative();
    return GradedPoly(jorgenson_signature(), du.at(0));
}

} // namespace

JorgensonResult jorgenson_reduce(int k) {
    if (k < 2 || k > 5) throw std::invalid_argument("jorgenson_reduce: k in 2..5");
    auto sig = jorgenson_signature();
    auto var = [&](const std::string& n) { return GradedPoly::variable(sig, sig->index_of(n)); };

    JorgensonResult res;
    res.k = k;

    auto build = [&](bool aside) {
        Matrix m(6, std::vector<GradedPoly>(6, GradedPoly(sig)));
        for (int r = 0; r < 6; ++r)
            m[r][0] = var((aside ? "a" : "b") + std::to_string(r + 1));
        // k-1 finite points with the numerator vector (1, t, s, t^2, ts, s^2)
        for (int p = 1; p <= k - 1; ++p) {
            GradedPoly t = var("t" + std::to_string(p)), s = var("s" + std::to_string(p));
            m[0][p] = GradedPoly(sig, CoeffScalar(1));
            m[1][p] = t;
            m[2][p] = s;
            m[3][p] = t * t;
            m[4][p] = t * s;
            m[5][p] = s * s;
        }
        // the last point heads into infinity: derivative columns at xi = 0
        for (int c = k; c < 6; ++c) {
            int order = c - k + 1;
            for (int r = 0; r < 6; ++r) m[r][c] = limit_entry(r + 1, order);
        }
        return m;
    };

    res.quotient_num = determinant(build(true));
    res.quotient_den = determinant(build(false));

    if (res.quotient_num.is_zero()) {
        // singular: the derivative columns all vanish at xi=0; descend the
        // two-point identity instead, expanding the second point at infinity
        res.singular = true;
        JorgensonResult j3 = jorgenson_reduce(3);
        int order = 12;
        ScalarSeries t2s = curve::t_at_infinity(order);
        ScalarSeries s2s = curve::s_at_infinity(order);
        int it2 = sig->index_of("t2"), is2 = sig->index_of("s2");
        auto descend_pt = [&](const GradedPoly& p) {
            Series<GradedPoly> acc(Param::Xi, order);
            for (const auto& [e, c] : p.terms()) {
                ExpVec rest(e);
                int et = rest[it2], es = rest[is2];
                rest[it2] = 0;
                rest[is2] = 0;
                GradedPoly base(sig);
                base.add_term(rest, c);
                ScalarSeries fac = ScalarSeries::monomial(Param::Xi, CoeffScalar(1), 0, order);
                for (int q = 0; q < et; ++q) fac = fac * t2s;
                for (int q = 0; q < es; ++q) fac = fac * s2s;
                for (int x = fac.lo(); x < std::min(fac.trunc(), order); ++x) {
                    CoeffScalar cc = fac.at(x);
                    if (cc.is_zero()) continue;
                    GradedPoly piece = base;
                    piece.scale(cc);
                    acc.add(x, piece);
                }
            }
            return acc;
        };
        Series<GradedPoly> ns = descend_pt(j3.quotient_num);
        Series<GradedPoly> ds = descend_pt(j3.quotient_den);
        int v = std::min(ns.val(), ds.val());
        res.quotient_num = ns.at(v);
        res.quotient_den = ds.at(v);
    }

    normalize_quotient(res.quotient_num, res.quotient_den);

    for (int j = 1; j <= 6; ++j) {
        GradedPoly da = res.quotient_num.derivative(sig->index_of("a" + std::to_string(j)));
        if (da.is_zero()) res.independent_a.push_back(j);
    }
    return res;
}

} // namespace sigma45
