#include "sigma45/coeff.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sigma45 {

const char* const kGenName[kNumGens] = {
    "mu0", "mu1", "mu2", "mu3", "mu4", "i", "r", "a1", "a2", "a3", "a4",
};

bool Monomial::is_unit() const {
    for (int g = GMu1; g <= GMu4; ++g)
        if (e[g] != 0) return false;
    for (int g = GA1; g <= GA4; ++g)
        if (e[g] != 0) return false;
    return true; // mu0, iota, rho are invertible
}

int Monomial::weight() const {
    int w = 0;
    for (int g = 0; g < kNumGens; ++g) w += int(e[g]) * kGenWeight[g];
    return w;
}

// iota^2 -> -1, rho^4 -> mu0; returns the sign absorbed into the coefficient
static int normalize_monomial(Monomial& m) {
    int sign = 1;
    int ei = m.e[GIota];
    int r = ((ei % 4) + 4) % 4;
    if (r >= 2) { sign = -sign; r -= 2; }
    m.e[GIota] = int16_t(r);

    int er = m.e[GRho];
    int q = (er >= 0) ? er / 4 : -((-er + 3) / 4);
    int rr = er - 4 * q;
    m.e[GRho] = int16_t(rr);
    m.e[GMu0] = int16_t(m.e[GMu0] + q);
    return sign;
}

void CoeffScalar::add_term(Monomial m, Rational c) {
    if (c.is_zero()) return;
    int s = normalize_monomial(m);
    if (s < 0) c = -c;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& mm) { return t.m < mm; });
    if (it != terms_.end() && it->m == m) {
        it->c += c;
        if (it->c.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, Term{m, std::move(c)});
    }
}

CoeffScalar CoeffScalar::term(Rational c, Monomial m) {
    CoeffScalar r;
    r.add_term(m, std::move(c));
    return r;
}

CoeffScalar CoeffScalar::gen(Gen g, int exp) {
    Monomial m;
    m.e[g] = int16_t(exp);
    return term(Rational(1), m);
}

bool CoeffScalar::is_one() const {
    return terms_.size() == 1 && terms_[0].m == Monomial{} && terms_[0].c.is_one();
}

bool CoeffScalar::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m == Monomial{});
}

CoeffScalar CoeffScalar::operator-() const {
    CoeffScalar r(*this);
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

CoeffScalar& CoeffScalar::operator+=(const CoeffScalar& o) {
    if (terms_.empty()) { *this = o; return *this; }
    // merge two sorted term lists
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), ae = terms_.end();
    auto b = o.terms_.begin(), be = o.terms_.end();
    while (a != ae && b != be) {
        if (a->m < b->m) out.push_back(std::move(*a++));
        else if (b->m < a->m) out.push_back(*b++);
        else {
            Rational c = a->c + b->c;
            if (!c.is_zero()) out.push_back(Term{a->m, std::move(c)});
            ++a; ++b;
        }
    }
    out.insert(out.end(), std::make_move_iterator(a), std::make_move_iterator(ae));
    out.insert(out.end(), b, be);
    terms_ = std::move(out);
    return *this;
}

CoeffScalar& CoeffScalar::operator-=(const CoeffScalar& o) { return *this += -o; }

CoeffScalar operator*(const CoeffScalar& a, const CoeffScalar& b) {
    CoeffScalar r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            Monomial m = ta.m;
            for (int g = 0; g < kNumGens; ++g) m.e[g] = int16_t(m.e[g] + tb.m.e[g]);
            r.add_term(m, ta.c * tb.c);
        }
    }
    return r;
}

CoeffScalar& CoeffScalar::scale(const Rational& r) {
    if (r.is_zero()) { terms_.clear(); return *this; }
    for (auto& t : terms_) t.c *= r;
    return *this;
}

bool CoeffScalar::operator==(const CoeffScalar& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c) return false;
    return true;
}

CoeffScalar CoeffScalar::unit_inverse() const {
    if (!is_unit()) throw std::domain_error("CoeffScalar: not a unit");
    const Term& t = terms_[0];
    Monomial m;
    for (int g = 0; g < kNumGens; ++g) m.e[g] = int16_t(-t.m.e[g]);
    CoeffScalar r;
    r.add_term(m, t.c.inv()); // add_term rewrites i^-1 = -i, r^-k = mu0^-1 r^(4-k)
    return r;
}

std::optional<CoeffScalar> CoeffScalar::div_term(const Term& d) const {
    CoeffScalar out;
    for (const auto& t : terms_) {
        Monomial m;
        for (int g = 0; g < kNumGens; ++g) {
            m.e[g] = int16_t(t.m.e[g] - d.m.e[g]);
            bool localized = (g == GMu0 || g == GIota || g == GRho);
            if (!localized && m.e[g] < 0) return std::nullopt;
        }
        out.add_term(m, t.c / d.c);
    }
    return out;
}

std::optional<CoeffScalar> CoeffScalar::div_exact(const CoeffScalar& d) const {
    if (d.is_zero()) throw std::domain_error("CoeffScalar: division by zero");
    if (d.terms_.size() == 1) return div_term(d.terms_[0]);
    CoeffScalar rem(*this), quot;
    const Term& lead = d.terms_.back();
    int guard = 0;
    while (!rem.is_zero()) {
        if (++guard > 100000) return std::nullopt;
        const Term& rt = rem.terms_.back();
        Monomial m;
        for (int g = 0; g < kNumGens; ++g) {
            m.e[g] = int16_t(rt.m.e[g] - lead.m.e[g]);
            bool localized = (g == GMu0 || g == GIota || g == GRho);
            if (!localized && m.e[g] < 0) return std::nullopt;
        }
        Rational c = rt.c / lead.c;
        int s = normalize_monomial(m);
        if (s < 0) c = -c;
        CoeffScalar piece = CoeffScalar::term(c, m);
        CoeffScalar check = piece * d;
        // leading terms must cancel, otherwise division fails
        rem -= check;
        quot += piece;
        if (!rem.is_zero() && !(rem.terms_.back().m < rt.m)) return std::nullopt;
    }
    return quot;
}

Rational CoeffScalar::content() const {
    Rational g(0);
    for (const auto& t : terms_) g = Rational::content_gcd(g, t.c);
    return g;
}

Monomial CoeffScalar::exponent_floor() const {
    Monomial m = terms_.front().m;
    for (const auto& t : terms_)
        for (int g = 0; g < kNumGens; ++g) m.e[g] = std::min(m.e[g], t.m.e[g]);
    return m;
}

void CoeffScalar::shift_exponents(const Monomial& m) {
    std::vector<Term> old;
    old.swap(terms_);
    for (auto& t : old) {
        Monomial mm = t.m;
        for (int g = 0; g < kNumGens; ++g) mm.e[g] = int16_t(mm.e[g] + m.e[g]);
        add_term(mm, std::move(t.c));
    }
}

CoeffScalar::Weight CoeffScalar::weight() const {
    Weight w;
    if (terms_.empty()) { w.zero = true; w.isobaric = true; return w; }
    w.value = terms_[0].m.weight();
    w.isobaric = true;
    for (const auto& t : terms_)
        if (t.m.weight() != w.value) { w.isobaric = false; break; }
    return w;
}

std::string CoeffScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.c;
        if (!first) {
            os << (c.sgn() < 0 ? " - " : " + ");
            if (c.sgn() < 0) c = -c;
        } else if (c.sgn() < 0) {
            os << "-";
            c = -c;
        }
        first = false;
        bool mono = (t.m == Monomial{});
        if (!c.is_one() || mono) os << c.str();
        bool needsp = !c.is_one() || mono;
        for (int g = 0; g < kNumGens; ++g) {
            if (t.m.e[g] == 0) continue;
            if (needsp) os << " ";
            os << kGenName[g];
            if (t.m.e[g] != 1) os << "^" << int(t.m.e[g]);
            needsp = true;
        }
    }
    return os.str();
}

size_t CoeffScalar::hash() const {
    size_t h = 14695981039346656037ull;
    for (const auto& t : terms_) {
        for (int g = 0; g < kNumGens; ++g) { h ^= size_t(uint16_t(t.m.e[g])); h *= 1099511628211ull; }
        h ^= t.c.hash();
        h *= 1099511628211ull;
    }
    return h;
}

// ------------------------------------------------------------------ CoeffFrac

CoeffFrac::CoeffFrac(CoeffScalar n, CoeffScalar d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("CoeffFrac: zero denominator");
    normalize();
}

void CoeffFrac::normalize() {
    if (num_.is_zero()) { den_ = CoeffScalar(1); return; }
    if (den_.is_one()) return;
    if (den_.is_unit()) {
        num_ = num_ * den_.unit_inverse();
        den_ = CoeffScalar(1);
        return;
    }
    // cancel monomial content (localized generators may shift freely)
    {
        Monomial fn = num_.exponent_floor(), fd = den_.exponent_floor();
        Monomial shift{};
        bool any = false;
        for (int g = 0; g < kNumGens; ++g) {
            bool localized = (g == GMu0 || g == GIota || g == GRho);
            int s;
            if (localized) s = -fd.e[g];
            else s = -std::min(fn.e[g], fd.e[g]);
            if (s != 0) { shift.e[g] = int16_t(s); any = true; }
        }
        if (any) { num_.shift_exponents(shift); den_.shift_exponents(shift); }
    }
    if (auto q = num_.div_exact(den_)) {
        num_ = std::move(*q);
        den_ = CoeffScalar(1);
        return;
    }
    // rational content of the denominator, sign of its leading term
    Rational c = den_.content();
    if (den_.terms().back().c.sgn() < 0) c = -c;
    if (!c.is_one()) {
        Rational ci = c.inv();
        num_.scale(ci);
        den_.scale(ci);
    }
}

CoeffFrac CoeffFrac::operator-() const {
    CoeffFrac r(*this);
    r.num_ = -r.num_;
    return r;
}

CoeffFrac& CoeffFrac::operator+=(const CoeffFrac& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) { *this = o; return *this; }
    if (den_ == o.den_) {
        num_ += o.num_;
        normalize();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

CoeffFrac& CoeffFrac::operator-=(const CoeffFrac& o) { return *this += -o; }

CoeffFrac operator*(const CoeffFrac& a, const CoeffFrac& b) {
    if (a.is_zero() || b.is_zero()) return CoeffFrac();
    return CoeffFrac(a.num_ * b.num_, a.den_ * b.den_);
}

CoeffFrac operator/(const CoeffFrac& a, const CoeffFrac& b) {
    if (b.is_zero()) throw std::domain_error("CoeffFrac: division by zero");
    if (a.is_zero()) return CoeffFrac();
    return CoeffFrac(a.num_ * b.den_, a.den_ * b.num_);
}

bool CoeffFrac::operator==(const CoeffFrac& o) const {
    if (den_ == o.den_) return num_ == o.num_;
    return num_ * o.den_ == o.num_ * den_;
}

CoeffFrac CoeffFrac::inv() const {
    if (is_zero()) throw std::domain_error("CoeffFrac: inverse of zero");
    return CoeffFrac(den_, num_);
}

CoeffScalar::Weight CoeffFrac::weight() const {
    auto wn = num_.weight();
    auto wd = den_.weight();
    CoeffScalar::Weight w;
    if (wn.zero) { w.zero = true; w.isobaric = true; return w; }
    w.isobaric = wn.isobaric && wd.isobaric;
    if (w.isobaric) w.value = wn.value - wd.value;
    return w;
}

std::string CoeffFrac::str() const {
    if (den_.is_one()) {
        if (num_.single_term()) return num_.str();
        return "(" + num_.str() + ")";
    }
    std::string n = num_.single_term() ? num_.str() : "(" + num_.str() + ")";
    std::string d = den_.single_term() ? den_.str() : "(" + den_.str() + ")";
    return n + " / " + d;
}

} // namespace sigma45
