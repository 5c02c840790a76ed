#include "sigma45/linexpr.hpp"

#include <algorithm>
#include <sstream>

namespace sigma45 {

LinExpr LinExpr::single(SymId s, CoeffFrac c) {
    LinExpr e;
    if (!c.is_zero()) e.t_.emplace_back(s, std::move(c));
    return e;
}

void LinExpr::add(SymId s, const CoeffFrac& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(t_.begin(), t_.end(), s,
                               [](const Term& t, SymId v) { return t.first < v; });
    if (it != t_.end() && it->first == s) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    } else {
        t_.insert(it, Term{s, c});
    }
}

const CoeffFrac* LinExpr::coeff(SymId s) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), s,
                               [](const Term& t, SymId v) { return t.first < v; });
    if (it != t_.end() && it->first == s) return &it->second;
    return nullptr;
}

LinExpr LinExpr::operator-() const {
    LinExpr r(*this);
    for (auto& [s, c] : r.t_) c = -c;
    return r;
}

LinExpr& LinExpr::operator+=(const LinExpr& o) {
    if (t_.empty()) { t_ = o.t_; return *this; }
    std::vector<Term> out;
    out.reserve(t_.size() + o.t_.size());
    auto a = t_.begin(), ae = t_.end();
    auto b = o.t_.begin(), be = o.t_.end();
    while (a != ae && b != be) {
        if (a->first < b->first) out.push_back(std::move(*a++));
        else if (b->first < a->first) out.push_back(*b++);
        else {
            CoeffFrac c = a->second + b->second;
            if (!c.is_zero()) out.emplace_back(a->first, std::move(c));
            ++a; ++b;
        }
    }
    out.insert(out.end(), std::make_move_iterator(a), std::make_move_iterator(ae));
    out.insert(out.end(), b, be);
    t_ = std::move(out);
    return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& o) { return *this += -o; }

LinExpr& LinExpr::scale(const CoeffFrac& c) {
    if (c.is_zero()) { t_.clear(); return *this; }
    for (auto& [s, cc] : t_) cc *= c;
    return *this;
}

LinExpr& LinExpr::scale(const Rational& r) {
    if (r.is_zero()) { t_.clear(); return *this; }
    for (auto& [s, cc] : t_) cc.scale(r);
    return *this;
}

bool LinExpr::operator==(const LinExpr& o) const {
    if (t_.size() != o.t_.size()) return false;
    for (size_t i = 0; i < t_.size(); ++i)
        if (t_[i].first != o.t_[i].first || t_[i].second != o.t_[i].second) return false;
    return true;
}

void LinExpr::add_scaled(const CoeffFrac& c, const LinExpr& o) {
    if (c.is_zero()) return;
    LinExpr tmp(o);
    tmp.scale(c);
    *this += tmp;
}

void LinExpr::substitute(SymId s, const LinExpr& replacement) {
    const CoeffFrac* c = coeff(s);
    if (!c) return;
    CoeffFrac cc = *c;
    auto it = std::lower_bound(t_.begin(), t_.end(), s,
                               [](const Term& t, SymId v) { return t.first < v; });
    t_.erase(it);
    add_scaled(cc, replacement);
}

CoeffFrac LinExpr::take(SymId s) {
    auto it = std::lower_bound(t_.begin(), t_.end(), s,
                               [](const Term& t, SymId v) { return t.first < v; });
    if (it == t_.end() || it->first != s) return CoeffFrac();
    CoeffFrac c = std::move(it->second);
    t_.erase(it);
    return c;
}

LinExpr LinExpr::from_items(std::vector<Term>&& items) {
    std::sort(items.begin(), items.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    LinExpr out;
    out.t_.reserve(items.size());
    for (size_t i = 0; i < items.size();) {
        SymId s = items[i].first;
        CoeffFrac c = std::move(items[i].second);
        size_t j = i + 1;
        while (j < items.size() && items[j].first == s) c += items[j++].second;
        if (!c.is_zero()) out.t_.emplace_back(s, std::move(c));
        i = j;
    }
    return out;
}

LinExpr LinExpr::merge(const LinExpr& base,
                       const std::vector<std::pair<CoeffFrac, const LinExpr*>>& parts) {
    size_t total = base.t_.size();
    for (const auto& [c, p] : parts) total += p->t_.size();
    std::vector<Term> items;
    items.reserve(total);
    items.insert(items.end(), base.t_.begin(), base.t_.end());
    for (const auto& [c, p] : parts)
        for (const auto& [s, cc] : p->t_) items.emplace_back(s, c * cc);
    return from_items(std::move(items));
}

LinExpr LinExpr::shifted(const Indices& J) const {
    LinExpr r;
    for (const auto& [s, c] : t_) r.add(symtab::shift(s, J), c);
    return r;
}

std::optional<SymId> LinExpr::leading(int (*cmp)(SymId, SymId)) const {
    if (t_.empty()) return std::nullopt;
    SymId best = t_[0].first;
    for (size_t i = 1; i < t_.size(); ++i)
        if (cmp(t_[i].first, best) > 0) best = t_[i].first;
    return best;
}

CoeffScalar::Weight LinExpr::weight() const {
    CoeffScalar::Weight w;
    if (t_.empty()) { w.zero = true; w.isobaric = true; return w; }
    bool first = true;
    for (const auto& [s, c] : t_) {
        auto cw = c.weight();
        if (!cw.isobaric) return {};
        int tw = cw.value + symtab::weight(s);
        if (first) { w.value = tw; w.isobaric = true; first = false; }
        else if (tw != w.value) return {};
    }
    return w;
}

std::string LinExpr::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ") " << symtab::str(s);
    }
    return os.str();
}

} // namespace sigma45
