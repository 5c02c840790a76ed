#include "sigma45/strata.hpp"

#include "sigma45/curve.hpp"

#include <atomic>
#include <thread>

namespace sigma45 {

LinExpr MasterExpansion::shifted_coeff(int m, SymId base) const {
    return coeff[m].shifted(symtab::indices(base));
}

MasterExpansion master_expansion(int order) {
    MasterExpansion mx;
    mx.order = order;
    mx.coeff.assign(size_t(order) + 1, LinExpr());

    std::array<ScalarSeries, 6> u;
    for (int i = 1; i <= 6; ++i) u[i - 1] = curve::abel_series(i, order + 1);

    // enumerate exponent vectors alpha with sum alpha_i * w_i <= order
    Indices idx;
    Rational fact(1);
    ScalarSeries prod = ScalarSeries::monomial(Param::Xi, CoeffScalar(1), 0, order + 1);

    auto emit = [&](const ScalarSeries& p, const Rational& f) {
        SymId s = symtab::intern(idx);
        for (int m = std::max(p.val(), 0); m <= order; ++m) {
            CoeffScalar c = p.at(m);
            if (c.is_zero()) continue;
            c.scale(f);
            mx.coeff[m].add(s, CoeffFrac(std::move(c)));
        }
    };

    // depth-first over variables; multiplicity factorials accumulated in fact
    auto rec = [&](auto&& self, int var, int budget, const ScalarSeries& p, Rational f) -> void {
        if (var == 7) {
            emit(p, f);
            return;
        }
        int w = curve::kUWeight[var - 1];
        self(self, var + 1, budget, p, f);
        ScalarSeries q = p;
        long mult = 0;
        int pushes = 0;
        while (budget - w >= 0) {
            budget -= w;
            mult += 1;
            q = q * u[var - 1];
            q.truncate(order + 1);
            f /= Rational(mult);
            idx.push_back(uint8_t(var));
            ++pushes;
            self(self, var + 1, budget, q, f);
        }
        while (pushes--) idx.pop_back();
    };
    rec(rec, 1, order, prod, fact);
    return mx;
}

RelationSet descend(const RelationSet& from, const MasterExpansion& master, int level_to,
                    int threads) {
    const int order = master.order;
    const auto& rules = from.rules();

    // per-rule equation lists, computed independently and merged in order
    std::vector<std::vector<std::pair<std::string, LinExpr>>> slots(rules.size());

    auto work = [&](size_t j) {
        const Rule& r = rules[j];
        LinExpr eq0 = LinExpr::single(r.lhs) - r.rhs;
        int maxm = order - symtab::valuation(r.lhs);
        auto& out = slots[j];
        for (int m = 0; m <= maxm; ++m) {
            std::vector<LinExpr::Term> items;
            for (const auto& [t, c] : eq0.terms()) {
                const Indices& tidx = symtab::indices(t);
                for (const auto& [i, mc] : master.coeff[m].terms())
                    items.emplace_back(symtab::shift(i, tidx), c * mc);
            }
            LinExpr e = LinExpr::from_items(std::move(items));
            if (e.is_zero()) continue;
            out.emplace_back("L" + std::to_string(level_to) + " xi^" + std::to_string(m) +
                                 " of " + symtab::str(r.lhs),
                             std::move(e));
        }
    };

    if (threads <= 1) {
        for (size_t j = 0; j < rules.size(); ++j) work(j);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                while (true) {
                    size_t j = next.fetch_add(1);
                    if (j >= rules.size()) break;
                    work(j);
                }
            });
        for (auto& th : pool) th.join();
    }

    // triangularize with ascending leading symbols: rules then build up from
    // the bottom and memoized normal forms rarely need invalidation
    struct Ref {
        SymId lead;
        size_t slot, pos;
    };
    std::vector<Ref> refs;
    for (size_t j = 0; j < slots.size(); ++j)
        for (size_t p = 0; p < slots[j].size(); ++p)
            refs.push_back(Ref{*slots[j][p].second.leading(from.cmp()), j, p});
    std::stable_sort(refs.begin(), refs.end(), [&](const Ref& a, const Ref& b) {
        int c = from.cmp()(a.lead, b.lead);
        return c < 0;
    });

    // Batched elimination: every equation in a batch is reduced against the
    // rule set as of the batch start (in parallel, read-only), then the
    // nonzero residuals are triangularized in fixed order.  Batch boundaries
    // are fixed, so the output is identical for every thread count.
    RelationSet out("theta" + std::to_string(level_to), from.cmp());
    const size_t batch = 256;
    std::vector<LinExpr> red(refs.size());
    for (size_t pos = 0; pos < refs.size(); pos += batch) {
        size_t end = std::min(pos + batch, refs.size());
        if (out.size() == 0) {
            for (size_t i = pos; i < end; ++i)
                red[i] = std::move(slots[refs[i].slot][refs[i].pos].second);
        } else {
            out.warm();
            std::atomic<size_t> next{pos};
            auto filter = [&] {
                while (true) {
                    size_t i = next.fetch_add(1);
                    if (i >= end) break;
                    red[i] = out.reduce(slots[refs[i].slot][refs[i].pos].second);
                }
            };
            if (threads <= 1) {
                filter();
            } else {
                std::vector<std::thread> pool;
                for (int t = 0; t < threads; ++t) pool.emplace_back(filter);
                for (auto& th : pool) th.join();
            }
        }
        for (size_t i = pos; i < end; ++i) {
            if (red[i].is_zero()) continue;
            out.add_equation(std::move(red[i]), slots[refs[i].slot][refs[i].pos].first);
        }
    }
    return out;
}

DescentChain derive_chain(int xi_order, int threads) {
    MasterExpansion mx = master_expansion(xi_order);
    RelationSet theta5("theta5");
    theta5.add_rule(symtab::intern({}), LinExpr(), "defining");
    DescentChain ch;
    ch.theta4 = descend(theta5, mx, 4, threads);
    ch.theta3 = descend(ch.theta4, mx, 3, threads);
    ch.theta2 = descend(ch.theta3, mx, 2, threads);
    ch.theta1 = descend(ch.theta2, mx, 1, threads);
    return ch;
}

Theta1Report check_theta1(const RelationSet& t1) {
    Theta1Report rep;
    auto zero_rule = [&](SymId s) {
        const Rule* r = t1.rule(s);
        return r && r->rhs.is_zero();
    };
    rep.sigma1_zero = zero_rule(symtab::intern({1}));
    rep.sigma2_zero = zero_rule(symtab::intern({2}));
    // every 1- and 2-index symbol except the basis {s22, s23, s34} must be ruled
    for (int i = 1; i <= 6; ++i)
        if (!t1.has(symtab::intern({uint8_t(i)})))
            rep.unresolved_low.push_back(symtab::intern({uint8_t(i)}));
    for (int i = 1; i <= 6; ++i)
        for (int j = i; j <= 6; ++j) {
            bool basis = (i == 2 && j == 2) || (i == 2 && j == 3) || (i == 3 && j == 4);
            if (basis) continue;
            SymId s = symtab::intern({uint8_t(i), uint8_t(j)});
            if (!t1.has(s)) rep.unresolved_low.push_back(s);
        }
    return rep;
}

LinExpr cyclic_transform(const LinExpr& e) {
    LinExpr out;
    for (const auto& [s, c] : e.terms()) {
        int w = symtab::weight(s);
        int exp = ((-w) % 4 + 4) % 4;
        out.add(s, c * CoeffFrac(CoeffScalar::iota(exp)));
    }
    return out;
}

} // namespace sigma45
