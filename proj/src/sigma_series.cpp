#include "sigma45/sigma_series.hpp"

#include "sigma45/curve.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sigma45 {

// ------------------------------------------------------------------- SW_{4,5}

GradedPoly schur_weierstrass() {
    struct T {
        long n, d;
        int e1, e2, e3, e4, e5, e6;
    };
    // the displayed weight-15 odd seed, 32 terms
    static const T terms[] = {
        {1, 8382528, 0, 0, 0, 0, 0, 15},
        {1, 336, 0, 0, 0, 1, 2, 8},
        {-1, 12, 1, 0, 0, 0, 0, 4},
        {-1, 126, 0, 0, 1, 0, 1, 7},
        {-1, 6, 0, 0, 1, 1, 1, 4},
        {-1, 72, 0, 0, 0, 3, 0, 6},
        {-1, 33264, 0, 0, 0, 0, 2, 11},
        {1, 27, 0, 0, 0, 0, 6, 3},
        {2, 3, 0, 0, 1, 1, 3, 0},
        {-2, 1, 0, 0, 1, 2, 1, 1},
        {-1, 1, 0, 2, 0, 0, 0, 1},
        {-2, 9, 0, 0, 1, 0, 3, 3},
        {-1, 1, 0, 0, 2, 1, 0, 0},
        {1, 12, 0, 0, 0, 4, 0, 3},
        {-1, 3024, 0, 0, 0, 2, 0, 9},
        {-1, 756, 0, 0, 0, 0, 4, 7},
        {1, 1008, 0, 1, 0, 0, 0, 8},
        {1, 3, 0, 1, 0, 0, 4, 0},
        {1, 3, 0, 0, 2, 0, 0, 3},
        {-1, 9, 0, 0, 0, 1, 6, 0},
        {1, 399168, 0, 0, 0, 1, 0, 12},
        {1, 1, 0, 1, 0, 1, 2, 1},
        {1, 4, 0, 0, 0, 5, 0, 0},
        {2, 1, 0, 1, 1, 0, 1, 0},
        {1, 6, 0, 1, 0, 0, 2, 4},
        {1, 12, 0, 1, 0, 1, 0, 5},
        {-1, 2, 0, 1, 0, 2, 0, 2},
        {1, 2, 0, 0, 0, 3, 2, 2},
        {-1, 3, 0, 0, 0, 2, 4, 1},
        {-1, 36, 0, 0, 0, 1, 4, 4},
        {1, 1, 1, 0, 0, 1, 0, 1},
        {-1, 1, 1, 0, 0, 0, 2, 0},
    };
    GradedPoly p(Signature::u6());
    for (const T& t : terms) {
        ExpVec e{int16_t(t.e1), int16_t(t.e2), int16_t(t.e3),
                 int16_t(t.e4), int16_t(t.e5), int16_t(t.e6)};
        p.add_term(e, CoeffScalar(Rational(t.n, t.d)));
    }
    return p;
}

// ------------------------------------------------------- candidate monomials

namespace {

constexpr int kW[6] = {11, 7, 6, 3, 2, 1};

std::vector<ExpVec> odd_umonomials(int weight) {
    std::vector<ExpVec> out;
    ExpVec cur(6, 0);
    std::function<void(int, int, long)> go = [&](int var, int rem, long deg) {
        if (var == 6) {
            if (rem == 0 && deg % 2 == 1) out.push_back(cur);
            return;
        }
        for (int e = 0; e * kW[var] <= rem; ++e) {
            cur[var] = int16_t(e);
            go(var + 1, rem - e * kW[var], deg + e);
        }
        cur[var] = 0;
    };
    go(0, weight, 0);
    std::sort(out.begin(), out.end(), GradedLexLess{});
    return out;
}

// mu-monomials of the given weight (<= 0); exponents of mu0..mu4
std::vector<std::array<int16_t, 5>> mu_monomials(int weight) {
    std::vector<std::array<int16_t, 5>> out;
    std::array<int16_t, 5> cur{};
    const int w[5] = {-20, -16, -12, -8, -4};
    std::function<void(int, int)> go = [&](int var, int rem) {
        if (var == 5) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        for (int e = 0; e * (-w[var]) <= -rem; ++e) {
            cur[var] = int16_t(e);
            go(var + 1, rem - e * w[var]);
        }
        cur[var] = 0;
    };
    if (weight <= 0) go(0, weight);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

size_t count_ck_candidates(int k) {
    return odd_umonomials(k).size() * mu_monomials(15 - k).size();
}

// ----------------------------------------------------- multi-point expansion

namespace {

struct BiKey {
    int16_t a = 0, b = 0, c = 0;
    int total() const { return a + b + c; }
    friend bool operator<(const BiKey& x, const BiKey& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.c < y.c;
    }
    friend bool operator==(const BiKey& x, const BiKey& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }
};

// truncated expansion at a sum of up to three one-point images; exponents of
// (xi1, xi2, xi3) with total degree capped, unused slots stay zero
struct NSer {
    std::vector<std::pair<BiKey, CoeffScalar>> t; // sorted
};

NSer nmul(const NSer& x, const NSer& y, int td) {
    std::map<BiKey, CoeffScalar> acc;
    for (const auto& [kx, cx] : x.t) {
        for (const auto& [ky, cy] : y.t) {
            BiKey k{int16_t(kx.a + ky.a), int16_t(kx.b + ky.b), int16_t(kx.c + ky.c)};
            if (k.total() >= td) continue;
            acc[k] += cx * cy;
        }
    }
    NSer r;
    for (auto& [k, c] : acc)
        if (!c.is_zero()) r.t.emplace_back(k, std::move(c));
    return r;
}

struct VecHash {
    size_t operator()(const ExpVec& v) const {
        size_t h = 1469598103934665603ull;
        for (int16_t x : v) {
            h ^= size_t(uint16_t(x));
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct MonCache {
    int arity, td;
    std::array<NSer, 6> base;
    std::unordered_map<ExpVec, NSer, VecHash> memo;

    MonCache(int arity_, int td_) : arity(arity_), td(td_) {
        for (int i = 1; i <= 6; ++i) {
            ScalarSeries u = curve::abel_series(i, td);
            NSer& b = base[i - 1];
            for (int j = u.val(); j < td; ++j) {
                CoeffScalar c = u.at(j);
                if (c.is_zero()) continue;
                b.t.emplace_back(BiKey{int16_t(j), 0, 0}, c);
                if (arity >= 2) b.t.emplace_back(BiKey{0, int16_t(j), 0}, c);
                if (arity >= 3) b.t.emplace_back(BiKey{0, 0, int16_t(j)}, c);
            }
            std::sort(b.t.begin(), b.t.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
        }
        NSer one;
        one.t.emplace_back(BiKey{}, CoeffScalar(1));
        memo.emplace(ExpVec(6, 0), std::move(one));
    }

    const NSer& get(const ExpVec& e) {
        auto it = memo.find(e);
        if (it != memo.end()) return it->second;
        int var = 0;
        for (int i = 5; i >= 0; --i)
            if (e[i] > 0) { var = i; break; }
        ExpVec e2(e);
        e2[var] = int16_t(e2[var] - 1);
        NSer r = nmul(get(e2), base[var], td);
        return memo.emplace(e, std::move(r)).first->second;
    }
};

// ------------------------------------------------------------- row assembly

struct RowKey {
    int16_t rel = 0;
    int16_t arity = 1;
    BiKey tup;
    std::array<int16_t, 5> mu{};

    friend bool operator<(const RowKey& x, const RowKey& y) {
        if (x.arity != y.arity) return x.arity < y.arity;
        if (x.rel != y.rel) return x.rel < y.rel;
        if (!(x.tup == y.tup)) return x.tup < y.tup;
        return x.mu < y.mu;
    }
    friend bool operator==(const RowKey& x, const RowKey& y) {
        return x.arity == y.arity && x.rel == y.rel && x.tup == y.tup && x.mu == y.mu;
    }
};

struct Candidate {
    std::array<int16_t, 5> mu;
    ExpVec alpha;
};

struct FamRelation {
    LinExpr expr;
    int sym_weight = 0; // common symbol weight; relations mixing weights are skipped
};

std::optional<int> uniform_symbol_weight(const LinExpr& e) {
    std::optional<int> w;
    for (const auto& [s, c] : e.terms()) {
        int ws = symtab::weight(s);
        if (!w) w = ws;
        else if (*w != ws) return std::nullopt;
    }
    return w;
}

// falling factorial prod alpha_i! / (alpha_i - mult_i(I))!
Rational deriv_factor(const ExpVec& alpha, const Indices& idx) {
    std::array<int, 6> need{};
    for (uint8_t i : idx) need[i - 1]++;
    Rational f(1);
    for (int i = 0; i < 6; ++i) {
        if (alpha[i] < need[i]) return Rational(0);
        for (int q = 0; q < need[i]; ++q) f *= Rational(long(alpha[i] - q));
    }
    return f;
}

std::optional<ExpVec> sub_exponent(const ExpVec& alpha, const Indices& idx) {
    ExpVec b(alpha);
    for (uint8_t i : idx) {
        if (b[i - 1] == 0) return std::nullopt;
        b[i - 1] = int16_t(b[i - 1] - 1);
    }
    return b;
}

// ------------------------------------------------------------ sparse solver

struct SpRow {
    std::vector<std::pair<uint32_t, Rational>> a; // sorted by column
    Rational rhs;
    size_t nnz() const { return a.size(); }
};

struct SparseSolver {
    std::map<uint32_t, SpRow> pivots; // keyed by leading column

    bool insert(SpRow row) {
        while (!row.a.empty()) {
            uint32_t lead = row.a.front().first;
            auto it = pivots.find(lead);
            if (it == pivots.end()) {
                Rational inv = row.a.front().second.inv();
                for (auto& [c, v] : row.a) v *= inv;
                row.rhs *= inv;
                pivots.emplace(lead, std::move(row));
                return true;
            }
            const SpRow& p = it->second;
            Rational f = row.a.front().second;
            std::vector<std::pair<uint32_t, Rational>> out;
            out.reserve(row.a.size() + p.a.size());
            auto ia = row.a.begin(), ea = row.a.end();
            auto ib = p.a.begin(), eb = p.a.end();
            while (ia != ea && ib != eb) {
                if (ia->first < ib->first) out.push_back(std::move(*ia++));
                else if (ib->first < ia->first) {
                    out.emplace_back(ib->first, -(f * ib->second));
                    ++ib;
                } else {
                    Rational v = ia->second - f * ib->second;
                    if (!v.is_zero()) out.emplace_back(ia->first, std::move(v));
                    ++ia;
                    ++ib;
                }
            }
            out.insert(out.end(), std::make_move_iterator(ia), std::make_move_iterator(ea));
            for (; ib != eb; ++ib) out.emplace_back(ib->first, -(f * ib->second));
            row.a = std::move(out);
            row.rhs -= f * p.rhs;
        }
        if (!row.rhs.is_zero())
            throw std::runtime_error("sigma expansion: inconsistent constraint system");
        return false;
    }

    std::vector<Rational> back_substitute(size_t ncols) const {
        std::vector<Rational> val(ncols, Rational(0));
        for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
            const SpRow& r = it->second;
            Rational acc = r.rhs;
            for (size_t j = 1; j < r.a.size(); ++j)
                acc -= r.a[j].second * val[r.a[j].first];
            val[it->first] = std::move(acc);
        }
        return val;
    }

    size_t rank() const { return pivots.size(); }
};

} // namespace

// ----------------------------------------------------------- SigmaExpansion

const GradedPoly& SigmaExpansion::layer(int k) const {
    if (!has_layer(k)) throw std::out_of_range("SigmaExpansion: no layer " + std::to_string(k));
    return layers_[size_t((k - 15) / 4)];
}

bool SigmaExpansion::has_layer(int k) const {
    return k >= 15 && k <= depth_ && (k - 15) % 4 == 0 && size_t((k - 15) / 4) < layers_.size();
}

ScalarSeries SigmaExpansion::deriv_series(SymId I) const {
    return deriv_series(I, certified_order(I));
}

ScalarSeries SigmaExpansion::deriv_series(SymId I, int trunc) const {
    ScalarSeries acc(Param::Xi, trunc);
    if (trunc <= 0) return acc;
    std::array<std::vector<ScalarSeries>, 6> pows;
    for (int i = 0; i < 6; ++i)
        pows[i].push_back(ScalarSeries::monomial(Param::Xi, CoeffScalar(1), 0, trunc));
    auto upow = [&](int i, int e) -> const ScalarSeries& {
        while (int(pows[i].size()) <= e) {
            ScalarSeries nxt = pows[i].back() * curve::abel_series(i + 1, trunc);
            nxt.truncate(trunc);
            pows[i].push_back(std::move(nxt));
        }
        return pows[i][size_t(e)];
    };
    const Indices& idx = symtab::indices(I);
    for (int k = 15; k <= depth_; k += 4) {
        if (!has_layer(k)) continue;
        for (const auto& [alpha, c] : layer(k).terms()) {
            Rational f = deriv_factor(alpha, idx);
            if (f.is_zero()) continue;
            ExpVec beta = *sub_exponent(alpha, idx);
            ScalarSeries prod = ScalarSeries::monomial(Param::Xi, CoeffScalar(1), 0, trunc);
            for (int i = 0; i < 6; ++i) {
                if (beta[i] == 0) continue;
                prod = prod * upow(i, beta[i]);
                prod.truncate(trunc);
            }
            CoeffScalar cc = c;
            cc.scale(f);
            prod.scale(cc);
            acc += prod;
        }
    }
    return acc;
}

void SigmaExpansion::write(std::ostream& os) const {
    os << "sigma-expansion depth " << depth_ << "\n";
    for (int k = 15; k <= depth_; k += 4) {
        os << "C " << k << "\n";
        for (const auto& [e, c] : layer(k).terms()) {
            os << c.str() << " :";
            for (int i = 0; i < 6; ++i) os << " " << e[i];
            os << "\n";
        }
        os << "end\n";
    }
}

SigmaExpansion SigmaExpansion::read(std::istream& is) {
    SigmaExpansion t;
    std::string word;
    if (!(is >> word) || word != "sigma-expansion")
        throw std::invalid_argument("bad expansion table header");
    is >> word >> t.depth_;
    std::string line;
    std::getline(is, line);
    int k = 0;
    GradedPoly cur(Signature::u6());
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == 'C' && line[1] == ' ') {
            k = std::stoi(line.substr(2));
            cur = GradedPoly(Signature::u6());
            continue;
        }
        if (line.rfind("end", 0) == 0) {
            t.layers_.push_back(cur);
            CkInfo info;
            info.k = k;
            info.determined_by = "imported";
            info.fully_determined = true;
            t.info_.push_back(info);
            continue;
        }
        size_t colon = line.find(':');
        std::vector<std::string> toks;
        std::istringstream cs(line.substr(0, colon));
        std::string tk;
        while (cs >> tk) toks.push_back(tk);
        CoeffFrac c = parse_scalar_product(toks, 0, toks.size(), std::nullopt);
        if (!c.den_is_one()) throw std::invalid_argument("bad expansion coefficient");
        std::istringstream tail(line.substr(colon + 1));
        ExpVec e(6, 0);
        for (int i = 0; i < 6; ++i) {
            int v;
            tail >> v;
            e[i] = int16_t(v);
        }
        cur.add_term(e, c.num());
    }
    return t;
}

// ------------------------------------------------------------------ builder

struct ExpansionBuilder {
    SigmaExpansion& table;
    int k;
    const BuildOptions& opt;

    std::vector<Candidate> cands;

    static std::vector<FamRelation> build_family(const RelationSet* rules, int defining_downto) {
        std::vector<FamRelation> fams;
        fams.push_back({LinExpr::single(symtab::intern({})), 15});
        for (int i = 6; i >= defining_downto; --i) {
            SymId s = symtab::intern({uint8_t(i)});
            fams.push_back({LinExpr::single(s), symtab::weight(s)});
        }
        if (rules) {
            for (const auto& r : rules->rules()) {
                if (symtab::count(r.lhs) > 4) continue;
                if (r.rhs.size() > 12) continue;
                LinExpr e = LinExpr::single(r.lhs) - r.rhs;
                auto w = uniform_symbol_weight(e);
                if (!w) continue;
                bool clean = true;
                for (const auto& [s, c] : e.terms())
                    if (!c.den_is_one()) clean = false;
                if (!clean) continue;
                fams.push_back({std::move(e), *w});
            }
        }
        return fams;
    }

    template <class Sink>
    void emit_terms(const std::vector<FamRelation>& fams, int arity, MonCache& cache,
                    const std::array<int16_t, 5>& mu_shift, const ExpVec& alpha,
                    const CoeffScalar& scale, Sink&& sink) {
        for (size_t fi = 0; fi < fams.size(); ++fi) {
            const FamRelation& R = fams[fi];
            int jstar = k - 15 + R.sym_weight;
            if (jstar < arity) continue;
            for (const auto& [I, cI] : R.expr.terms()) {
                const Indices& idx = symtab::indices(I);
                Rational f = deriv_factor(alpha, idx);
                if (f.is_zero()) continue;
                ExpVec beta = *sub_exponent(alpha, idx);
                const NSer& ser = cache.get(beta);
                for (const auto& [key, cs] : ser.t) {
                    if (key.total() != jstar) continue;
                    if (arity >= 2 && (key.a < 1 || key.a > key.b)) continue;
                    if (arity >= 3 && (key.b < 1 || key.b > key.c)) continue;
                    CoeffScalar val = cs * cI.num();
                    val.scale(f);
                    if (!scale.is_one()) val = val * scale;
                    for (const auto& term : val.terms()) {
                        RowKey rk;
                        rk.rel = int16_t(fi);
                        rk.arity = int16_t(arity);
                        rk.tup = key;
                        bool ok = true;
                        for (int g = 0; g < kNumGens; ++g) {
                            if (g >= GMu0 && g <= GMu4) continue;
                            if (term.m.e[g] != 0) ok = false;
                        }
                        if (!ok)
                            throw std::logic_error("sigma expansion: non-mu coefficient");
                        for (int g = 0; g < 5; ++g)
                            rk.mu[g] = int16_t(term.m.e[GMu0 + g] + mu_shift[g]);
                        sink(rk, term.c);
                    }
                }
            }
        }
    }

    CkInfo run() {
        CkInfo info;
        info.k = k;

        auto umon = odd_umonomials(k);
        auto mmon = mu_monomials(15 - k);
        for (const auto& m : mmon)
            for (const auto& a : umon) cands.push_back(Candidate{m, a});
        info.candidates = cands.size();
        if (cands.empty()) throw std::logic_error("no candidates for this weight");

        std::vector<FamRelation> fam1 = build_family(opt.theta1, 3);
        std::vector<FamRelation> fam2 = build_family(opt.theta2, 4);
        std::vector<FamRelation> fam3 = build_family(opt.theta3, 5);

        SparseSolver solver;

        if (k == 15) {
            // vanishing conditions are scale-free; pin the displayed u6^15
            // coefficient
            ExpVec top(6, 0);
            top[5] = 15;
            for (uint32_t c = 0; c < cands.size(); ++c) {
                if (cands[c].alpha == top) {
                    SpRow row;
                    row.a.emplace_back(c, Rational(1));
                    row.rhs = Rational(1, 8382528);
                    solver.insert(std::move(row));
                    break;
                }
            }
        }

        auto run_stage = [&](const std::vector<FamRelation>& fams, int arity, size_t max_rel) {
            std::vector<FamRelation> use(fams.begin(),
                                         fams.begin() + std::min(max_rel, fams.size()));
            if (use.empty()) return;
            MonCache cache(arity, k + 1);

            std::vector<std::tuple<RowKey, uint32_t, Rational>> entries;
            for (uint32_t c = 0; c < cands.size(); ++c) {
                CoeffScalar one(1);
                emit_terms(use, arity, cache, cands[c].mu, cands[c].alpha, one,
                           [&](const RowKey& rk, const Rational& v) {
                               entries.emplace_back(rk, c, v);
                           });
            }
            std::map<RowKey, Rational> rhs;
            static const std::array<int16_t, 5> no_shift{};
            for (int kk = 15; kk < k; kk += 4) {
                if (!table.has_layer(kk)) continue;
                for (const auto& [alpha, cc] : table.layer(kk).terms())
                    emit_terms(use, arity, cache, no_shift, alpha, cc,
                               [&](const RowKey& rk, const Rational& v) { rhs[rk] += v; });
            }

            std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) {
                if (!(std::get<0>(x) == std::get<0>(y))) return std::get<0>(x) < std::get<0>(y);
                return std::get<1>(x) < std::get<1>(y);
            });

            std::vector<SpRow> rows;
            std::vector<RowKey> keys;
            for (size_t i = 0; i < entries.size();) {
                const RowKey rk = std::get<0>(entries[i]);
                SpRow row;
                size_t j = i;
                while (j < entries.size() && std::get<0>(entries[j]) == rk) {
                    uint32_t col = std::get<1>(entries[j]);
                    Rational acc = std::get<2>(entries[j]);
                    ++j;
                    while (j < entries.size() && std::get<0>(entries[j]) == rk &&
                           std::get<1>(entries[j]) == col) {
                        acc += std::get<2>(entries[j]);
                        ++j;
                    }
                    if (!acc.is_zero()) row.a.emplace_back(col, std::move(acc));
                }
                auto rit = rhs.find(rk);
                if (rit != rhs.end()) row.rhs = -rit->second;
                if (!row.a.empty() || !row.rhs.is_zero()) {
                    rows.push_back(std::move(row));
                    keys.push_back(rk);
                }
                i = j;
            }
            for (const auto& [rk, v] : rhs) {
                if (std::binary_search(keys.begin(), keys.end(), rk)) continue;
                if (!v.is_zero())
                    throw std::runtime_error("sigma expansion: lower layers violate a constraint");
            }

            std::vector<size_t> ord(rows.size());
            for (size_t i = 0; i < ord.size(); ++i) ord[i] = i;
            std::stable_sort(ord.begin(), ord.end(),
                             [&](size_t x, size_t y) { return rows[x].nnz() < rows[y].nnz(); });
            for (size_t i : ord) {
                if (solver.rank() == cands.size()) break;
                solver.insert(std::move(rows[i]));
            }
        };

        run_stage(fam1, 1, 5);
        info.free_after_one_point = cands.size() - solver.rank();
        std::string used = "one-point defining";
        if (solver.rank() < cands.size() && fam1.size() > 5) {
            run_stage(fam1, 1, fam1.size());
            used = "one-point defining + stratum relations";
        }
        if (solver.rank() < cands.size()) {
            run_stage(fam2, 2, fam2.size());
            used = "one- and two-point defining + stratum relations";
        }
        if (solver.rank() < cands.size()) {
            run_stage(fam3, 3, fam3.size());
            used = "defining + stratum relations at up to three points";
        }
        info.determined_by = used;
        info.fully_determined = solver.rank() == cands.size();
        if (!info.fully_determined) {
            std::string msg = "sigma expansion: C_" + std::to_string(k) + " left " +
                              std::to_string(cands.size() - solver.rank()) +
                              " coefficients free:";
            for (uint32_t c = 0; c < cands.size(); ++c) {
                if (solver.pivots.count(c)) continue;
                msg += " [";
                for (int g = 0; g < 5; ++g)
                    if (cands[c].mu[g]) msg += " mu" + std::to_string(g) + "^" + std::to_string(cands[c].mu[g]);
                msg += " u:";
                for (int i = 0; i < 6; ++i) msg += " " + std::to_string(cands[c].alpha[i]);
                msg += "]";
            }
            throw std::runtime_error(msg);
        }

        std::vector<Rational> vals = solver.back_substitute(cands.size());
        GradedPoly poly(Signature::u6());
        for (size_t c = 0; c < cands.size(); ++c) {
            if (vals[c].is_zero()) continue;
            Monomial m;
            for (int g = 0; g < 5; ++g) m.e[GMu0 + g] = cands[c].mu[g];
            poly.add_term(cands[c].alpha, CoeffScalar::term(vals[c], m));
        }

        if (int(table.layers_.size()) != (k - 15) / 4)
            throw std::logic_error("build_ck: lower layers missing");
        table.layers_.push_back(std::move(poly));
        table.info_.push_back(info);
        table.depth_ = k;
        return info;
    }
};

CkInfo build_ck(SigmaExpansion& table, int k, const BuildOptions& opt) {
    if (k < 15 || (k - 15) % 4 != 0)
        throw std::invalid_argument("build_ck: weight must be 15 mod 4");
    ExpansionBuilder b{table, k, opt};
    return b.run();
}

SigmaExpansion build_expansion(const BuildOptions& opt) {
    SigmaExpansion t;
    for (int k = 15; k <= opt.depth; k += 4) build_ck(t, k, opt);
    return t;
}

} // namespace sigma45
