#include "sigma45/relation.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sigma45 {

const Rule* RelationSet::rule(SymId s) const {
    auto it = by_lhs_.find(s);
    return it == by_lhs_.end() ? nullptr : &rules_[it->second];
}

void RelationSet::add_rule(SymId lhs, LinExpr rhs, std::string prov) {
    if (by_lhs_.count(lhs)) throw std::logic_error("RelationSet: duplicate rule for " + symtab::str(lhs));
    for (const auto& [s, c] : rhs.terms())
        if (cmp_(s, lhs) >= 0)
            throw std::logic_error("RelationSet: rhs not below lhs in " + symtab::str(lhs));
    by_lhs_.emplace(lhs, rules_.size());
    rules_.push_back(Rule{lhs, std::move(rhs), std::move(prov)});
    // invalidate memoized normal forms that mention the newly ruled symbol
    auto it = rdep_.find(lhs);
    if (it != rdep_.end()) {
        for (SymId z : it->second) stats_.nf_invalidated += nf_.erase(z);
        rdep_.erase(it);
    }
    nf_.erase(lhs);
}

const LinExpr& RelationSet::nf_ref(SymId s) const {
    auto it = nf_.find(s);
    if (it != nf_.end()) return it->second;
    LinExpr base;
    std::vector<std::pair<CoeffFrac, const LinExpr*>> parts;
    for (const auto& [y, c] : rule(s)->rhs.terms()) {
        if (has(y)) parts.emplace_back(c, &nf_ref(y));
        else base.add(y, c);
    }
    LinExpr out = LinExpr::merge(base, parts);
    stats_.nf_computed++;
    stats_.nf_terms += out.size();
    for (const auto& [y, c] : out.terms()) rdep_[y].push_back(s);
    return nf_.emplace(s, std::move(out)).first->second;
}

LinExpr RelationSet::normal_form(SymId s) const {
    if (!has(s)) return LinExpr::single(s);
    return nf_ref(s);
}

void RelationSet::warm() const {
    for (const auto& r : rules_) nf_ref(r.lhs);
}

LinExpr RelationSet::reduce(const LinExpr& e) const {
    LinExpr base;
    std::vector<std::pair<CoeffFrac, const LinExpr*>> parts;
    for (const auto& [s, c] : e.terms()) {
        if (has(s)) parts.emplace_back(c, &nf_ref(s));
        else base.add(s, c);
    }
    return LinExpr::merge(base, parts);
}

RelationSet::Outcome RelationSet::add_equation(LinExpr e, const std::string& prov) {
    std::vector<SymId> order;
    while (true) {
        // walk the symbols top-down, peeling ruled ones until the first
        // irreducible; merges are deferred to one combine pass
        order.clear();
        order.reserve(e.size());
        for (const auto& [s, c] : e.terms()) order.push_back(s);
        std::sort(order.begin(), order.end(), [this](SymId a, SymId b) { return cmp_(a, b) > 0; });

        std::vector<std::pair<CoeffFrac, const LinExpr*>> pending;
        size_t k = 0;
        while (k < order.size() && has(order[k])) {
            CoeffFrac c = e.take(order[k]);
            pending.emplace_back(std::move(c), &nf_ref(order[k]));
            ++k;
        }
        if (pending.empty()) {
            if (order.empty()) return Outcome::Dependent;
            CoeffFrac cl = e.take(order[0]);
            e.scale(-cl.inv());
            add_rule(order[0], std::move(e), prov);
            return Outcome::NewRule;
        }
        for (const auto& [c, p] : pending) stats_.merge_items += p->size();
        e = LinExpr::merge(e, pending);
    }
}

// ---------------------------------------------------------------- text form

static std::string scalar_product_str(const CoeffScalar::Term& t) {
    std::ostringstream os;
    os << t.c.str();
    for (int g = 0; g < kNumGens; ++g) {
        if (t.m.e[g] == 0) continue;
        os << " " << kGenName[g];
        if (t.m.e[g] != 1) os << "^" << int(t.m.e[g]);
    }
    return os.str();
}

static std::string coeff_str(const CoeffFrac& c) {
    if (c.den_is_one() && c.num().single_term()) return scalar_product_str(c.num().terms()[0]);
    std::ostringstream os;
    os << "{" << c.num().str();
    if (!c.den_is_one()) os << " | " << c.den().str();
    os << "}";
    return os.str();
}

std::string rule_to_string(const Rule& r, bool with_prov) {
    std::ostringstream os;
    os << symtab::str(r.lhs) << " =";
    if (r.rhs.is_zero()) {
        os << " 0";
    } else {
        bool first = true;
        for (const auto& [s, c] : r.rhs.terms()) {
            std::string cs = coeff_str(c);
            bool neg = !cs.empty() && cs[0] == '-';
            if (first) {
                os << " " << cs;
            } else if (neg) {
                os << " - " << cs.substr(1);
            } else {
                os << " + " << cs;
            }
            first = false;
            os << " " << symtab::str(s);
        }
    }
    if (with_prov && !r.prov.empty()) os << "  # " << r.prov;
    return os.str();
}

namespace {

bool is_symbol_tok(const std::string& t) { return t.rfind("s[", 0) == 0; }

Rational parse_rational_tok(const std::string& t) { return Rational(t); }

// token like mu3^2, i, iN^3, r^-1, a2
void apply_factor_tok(const std::string& tok, Monomial& m, std::optional<int> sheetN, bool& iN_used) {
    size_t caret = tok.find('^');
    std::string name = tok.substr(0, caret == std::string::npos ? tok.size() : caret);
    int exp = 1;
    if (caret != std::string::npos) exp = std::stoi(tok.substr(caret + 1));
    if (name == "iN") {
        if (!sheetN) throw std::invalid_argument("iN factor needs a sheet index");
        m.e[GIota] = int16_t(m.e[GIota] + exp * (*sheetN));
        iN_used = true;
        return;
    }
    for (int g = 0; g < kNumGens; ++g) {
        if (name == kGenName[g]) {
            m.e[g] = int16_t(m.e[g] + exp);
            return;
        }
    }
    throw std::invalid_argument("unknown factor token: " + tok);
}

bool looks_like_rational(const std::string& t) {
    return !t.empty() && (std::isdigit(uint8_t(t[0])) || ((t[0] == '-' || t[0] == '+') && t.size() > 1 && std::isdigit(uint8_t(t[1]))));
}

} // namespace

static CoeffFrac parse_braced_coeff(const std::string& text, std::optional<int> sheetN);

CoeffFrac parse_scalar_product(const std::vector<std::string>& toks, size_t lo, size_t hi,
                               std::optional<int> sheetN) {
    Rational c(1);
    Monomial m;
    bool iN_used = false;
    CoeffFrac braced(1);
    for (size_t i = lo; i < hi; ++i) {
        const std::string& t = toks[i];
        if (t == "+") continue;
        if (t == "-") { c = -c; continue; }
        if (t[0] == '{') { braced *= parse_braced_coeff(t, sheetN); continue; }
        if (looks_like_rational(t)) c *= parse_rational_tok(t);
        else apply_factor_tok(t, m, sheetN, iN_used);
    }
    return braced * CoeffFrac(CoeffScalar::term(c, m));
}

// signed sum of scalar products, e.g. "-1/120 + 1/20 mu4"
static CoeffScalar parse_scalar_sum(const std::string& text, std::optional<int> sheetN) {
    std::istringstream is(text);
    std::string t;
    std::vector<std::string> toks;
    while (is >> t) toks.push_back(t);
    CoeffScalar out;
    size_t start = 0;
    for (size_t i = 0; i <= toks.size(); ++i) {
        bool boundary = (i == toks.size()) || ((toks[i] == "+" || toks[i] == "-") && i > start);
        if (!boundary) continue;
        if (i > start) {
            CoeffFrac piece = parse_scalar_product(toks, start, i, sheetN);
            out += piece.num();
        }
        start = i;
    }
    return out;
}

// "{num}" or "{num | den}"
static CoeffFrac parse_braced_coeff(const std::string& text, std::optional<int> sheetN) {
    std::string inner = text.substr(1, text.size() - 2);
    size_t bar = inner.find('|');
    if (bar == std::string::npos) return CoeffFrac(parse_scalar_sum(inner, sheetN));
    return CoeffFrac(parse_scalar_sum(inner.substr(0, bar), sheetN),
                     parse_scalar_sum(inner.substr(bar + 1), sheetN));
}

Rule rule_from_string(const std::string& line, std::optional<int> sheetN) {
    std::string body = line;
    size_t hash = body.find('#');
    std::string prov;
    if (hash != std::string::npos) {
        prov = body.substr(hash + 1);
        size_t b = prov.find_first_not_of(" \t");
        prov = (b == std::string::npos) ? "" : prov.substr(b);
        body = body.substr(0, hash);
    }
    size_t eq = body.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("rule line without '=': " + line);

    auto tokenize = [](const std::string& s) {
        std::vector<std::string> toks;
        std::istringstream is(s);
        std::string t;
        while (is >> t) {
            // split leading sign stuck to a token
            if (t.size() > 1 && (t[0] == '+' || t[0] == '-') && !looks_like_rational(t)) {
                toks.push_back(std::string(1, t[0]));
                toks.push_back(t.substr(1));
            } else {
                toks.push_back(t);
            }
        }
        return toks;
    };

    std::string lhs_text = body.substr(0, eq);
    size_t b = lhs_text.find_first_not_of(" \t");
    size_t e2 = lhs_text.find_last_not_of(" \t");
    lhs_text = lhs_text.substr(b, e2 - b + 1);
    SymId lhs = symtab::parse(lhs_text);

    Rule r;
    r.lhs = lhs;
    r.prov = prov;

    std::vector<std::string> raw = tokenize(body.substr(eq + 1));
    if (raw.size() == 1 && raw[0] == "0") return r;

    // rejoin brace groups split by the whitespace tokenizer
    std::vector<std::string> toks;
    for (size_t i = 0; i < raw.size(); ++i) {
        if (!raw[i].empty() && raw[i][0] == '{') {
            std::string g = raw[i];
            while (g.back() != '}' && i + 1 < raw.size()) g += " " + raw[++i];
            toks.push_back(std::move(g));
        } else {
            toks.push_back(raw[i]);
        }
    }

    size_t start = 0;
    for (size_t i = 0; i < toks.size(); ++i) {
        if (!is_symbol_tok(toks[i])) continue;
        CoeffFrac c = parse_scalar_product(toks, start, i, sheetN);
        r.rhs.add(symtab::parse(toks[i]), c);
        start = i + 1;
    }
    if (start != toks.size()) throw std::invalid_argument("trailing tokens in rule: " + line);
    return r;
}

void RelationSet::write(std::ostream& os) const {
    os << "set " << tag_ << "\n";
    for (const auto& r : rules_) os << rule_to_string(r) << "\n";
}

RelationSet RelationSet::read(std::istream& is, Cmp cmp) {
    RelationSet out("", cmp);
    std::string line;
    while (std::getline(is, line)) {
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        if (line[b] == '#') continue;
        if (line.compare(b, 4, "set ") == 0) {
            out.tag_ = line.substr(b + 4);
            continue;
        }
        Rule r = rule_from_string(line);
        out.add_rule(r.lhs, std::move(r.rhs), r.prov);
    }
    return out;
}

} // namespace sigma45
