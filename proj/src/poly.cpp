#include "sigma45/poly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sigma45 {

int Signature::index_of(const std::string& n) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == n) return int(i);
    throw std::invalid_argument("Signature: unknown variable " + n);
}

std::shared_ptr<const Signature> Signature::make(std::vector<std::string> names,
                                                 std::vector<int> weights) {
    auto s = std::make_shared<Signature>();
    s->names = std::move(names);
    s->weights = std::move(weights);
    return s;
}

std::shared_ptr<const Signature> Signature::u6() {
    static std::shared_ptr<const Signature> s =
        make({"u1", "u2", "u3", "u4", "u5", "u6"}, {11, 7, 6, 3, 2, 1});
    return s;
}

std::shared_ptr<const Signature> Signature::u6ts() {
    static std::shared_ptr<const Signature> s =
        make({"u1", "u2", "u3", "u4", "u5", "u6", "t", "s"}, {11, 7, 6, 3, 2, 1, -4, -5});
    return s;
}

bool GradedLexLess::operator()(const ExpVec& a, const ExpVec& b) const {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    return a < b;
}

GradedPoly::GradedPoly(std::shared_ptr<const Signature> sig, const CoeffScalar& c)
    : sig_(std::move(sig)) {
    if (!c.is_zero()) terms_.emplace(ExpVec(sig_->size(), 0), c);
}

GradedPoly GradedPoly::variable(std::shared_ptr<const Signature> sig, int var, int exp) {
    GradedPoly p(sig);
    ExpVec e(p.sig_->size(), 0);
    e[var] = int16_t(exp);
    p.terms_.emplace(std::move(e), CoeffScalar(1));
    return p;
}

void GradedPoly::add_term(const ExpVec& e, const CoeffScalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

const CoeffScalar* GradedPoly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? nullptr : &it->second;
}

GradedPoly GradedPoly::operator-() const {
    GradedPoly r(sig_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
    if (!sig_) sig_ = o.sig_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
    if (!sig_) sig_ = o.sig_;
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
    GradedPoly r(a.sig_ ? a.sig_ : b.sig_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            ExpVec e(ea);
            for (size_t i = 0; i < e.size(); ++i) e[i] = int16_t(e[i] + eb[i]);
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

GradedPoly& GradedPoly::scale(const CoeffScalar& c) {
    if (c.is_zero()) { terms_.clear(); return *this; }
    std::map<ExpVec, CoeffScalar, GradedLexLess> out;
    for (const auto& [e, cc] : terms_) {
        CoeffScalar v = cc * c;
        if (!v.is_zero()) out.emplace(e, std::move(v));
    }
    terms_ = std::move(out);
    return *this;
}

GradedPoly& GradedPoly::scale(const Rational& r) {
    if (r.is_zero()) { terms_.clear(); return *this; }
    for (auto& [e, c] : terms_) c.scale(r);
    return *this;
}

GradedPoly GradedPoly::derivative(int var) const {
    GradedPoly r(sig_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        ExpVec ee(e);
        ee[var] = int16_t(ee[var] - 1);
        CoeffScalar cc = c;
        cc.scale(Rational(long(e[var])));
        r.add_term(ee, cc);
    }
    return r;
}

GradedPoly GradedPoly::negate_vars() const {
    GradedPoly r(sig_);
    for (const auto& [e, c] : terms_) {
        long deg = std::accumulate(e.begin(), e.end(), 0L);
        r.terms_.emplace(e, (deg % 2) ? -c : c);
    }
    return r;
}

bool GradedPoly::all_terms_odd_degree() const {
    for (const auto& [e, c] : terms_) {
        long deg = std::accumulate(e.begin(), e.end(), 0L);
        if (deg % 2 == 0) return false;
    }
    return true;
}

CoeffScalar::Weight GradedPoly::weight() const {
    CoeffScalar::Weight w;
    if (terms_.empty()) { w.zero = true; w.isobaric = true; return w; }
    bool first = true;
    for (const auto& [e, c] : terms_) {
        auto cw = c.weight();
        if (!cw.isobaric) return {};
        int tw = cw.value;
        for (size_t i = 0; i < e.size(); ++i) tw += int(e[i]) * sig_->weights[i];
        if (first) { w.value = tw; w.isobaric = true; first = false; }
        else if (tw != w.value) return {};
    }
    return w;
}

std::string GradedPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << " " << sig_->names[i];
            if (e[i] != 1) os << "^" << int(e[i]);
        }
    }
    return os.str();
}

} // namespace sigma45
