#pragma once

#include "sigma45/coeff.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sigma45 {

// Formal expansion parameters.
enum class Param { Xi, T, W1, X };

inline const char* param_name(Param p) {
    switch (p) {
        case Param::Xi: return "xi";
        case Param::T: return "t";
        case Param::W1: return "w1";
        default: return "x";
    }
}

inline int param_weight(Param p) {
    switch (p) {
        case Param::Xi: return 1;
        case Param::T: return -4;
        case Param::W1: return 11;
        default: return 0;
    }
}

inline CoeffScalar ring_inverse(const CoeffScalar& c) {
    if (!c.is_unit()) throw std::domain_error("series: leading coefficient not invertible");
    return c.unit_inverse();
}
inline CoeffFrac ring_inverse(const CoeffFrac& c) { return c.inv(); }

// Truncated Laurent series: coefficients for exponents [lo, trunc) are exact,
// everything at or beyond trunc is unknown.  A finite pole part is allowed
// (lo may be negative).
template <class R>
class Series {
  public:
    Series() : Series(Param::X, 0) {}
    Series(Param p, int trunc) : param_(p), lo_(0), trunc_(trunc) {}

    static Series monomial(Param p, R c, int exp, int trunc) {
        Series s(p, trunc);
        if (exp < trunc) s.set(exp, std::move(c));
        return s;
    }
    static Series var(Param p, int trunc) { return monomial(p, R(1), 1, trunc); }

    Param param() const { return param_; }
    int trunc() const { return trunc_; }
    int lo() const { return lo_; }

    // first exponent with nonzero known coefficient; trunc() when all known
    // coefficients vanish
    int val() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return lo_ + int(i);
        return trunc_;
    }
    bool known_zero() const { return val() == trunc_; }

    R at(int k) const {
        if (k >= trunc_)
            throw std::logic_error("series: coefficient beyond truncation order");
        if (k < lo_ || k >= lo_ + int(c_.size())) return R();
        return c_[k - lo_];
    }

    void set(int k, R v) {
        if (k >= trunc_) throw std::logic_error("series: set beyond truncation order");
        reserve_down(k);
        reserve_up(k);
        c_[k - lo_] = std::move(v);
    }

    void add(int k, const R& v) {
        if (k >= trunc_) return; // silently drop above truncation
        reserve_down(k);
        reserve_up(k);
        c_[k - lo_] += v;
    }

    Series& truncate(int k) {
        if (k < trunc_) {
            trunc_ = k;
            if (lo_ + int(c_.size()) > k) c_.resize(std::max(0, k - lo_));
        }
        return *this;
    }

    Series operator-() const {
        Series r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }

    Series& operator+=(const Series& o) {
        check_param(o);
        trunc_ = std::min(trunc_, o.trunc_);
        for (int k = o.lo_; k < std::min(o.lo_ + int(o.c_.size()), trunc_); ++k) {
            if (!o.c_[k - o.lo_].is_zero()) add(k, o.c_[k - o.lo_]);
        }
        truncate(trunc_);
        return *this;
    }
    Series& operator-=(const Series& o) { return *this += -o; }
    friend Series operator+(Series a, const Series& b) { a += b; return a; }
    friend Series operator-(Series a, const Series& b) { a -= b; return a; }

    // full ring product (requires R*R)
    friend Series operator*(const Series& a, const Series& b)
        requires requires(const R& x, const R& y) { x * y; }
    {
        a.check_param(b);
        int av = a.val(), bv = b.val();
        int tr = std::min(a.trunc_ + bv, b.trunc_ + av);
        Series r(a.param_, tr);
        for (int i = 0; i < int(a.c_.size()); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; j < int(b.c_.size()); ++j) {
                if (b.c_[j].is_zero()) continue;
                int k = a.lo_ + i + b.lo_ + j;
                if (k < tr) r.add(k, a.c_[i] * b.c_[j]);
            }
        }
        return r;
    }

    template <class S>
    Series& scale(const S& s) {
        for (auto& c : c_) c = c * s;
        return *this;
    }

    Series shifted(int k) const { // multiply by x^k
        Series r(*this);
        r.lo_ += k;
        r.trunc_ += k;
        return r;
    }

    Series derivative() const {
        Series r(param_, trunc_ - 1);
        for (int i = 0; i < int(c_.size()); ++i) {
            int k = lo_ + i;
            if (k == 0 || c_[i].is_zero()) continue;
            R v = c_[i];
            v.scale(Rational(long(k)));
            if (k - 1 < r.trunc_) r.add(k - 1, v);
        }
        return r;
    }

    // term-wise primitive with zero constant
    Series integrated() const {
        Series r(param_, trunc_ + 1);
        for (int i = 0; i < int(c_.size()); ++i) {
            int k = lo_ + i;
            if (c_[i].is_zero()) continue;
            if (k == -1) throw std::domain_error("series: cannot integrate 1/x term");
            R v = c_[i];
            v.scale(Rational(1, long(k + 1)));
            r.add(k + 1, v);
        }
        return r;
    }

    Series pow(int n) const
        requires requires(const R& x, const R& y) { x * y; }
    {
        if (n < 0) throw std::invalid_argument("series: negative power");
        if (n == 0) return Series::monomial(param_, R(1), 0, trunc_);
        Series r = Series::monomial(param_, R(1), 0, trunc_ + (n - 1) * val());
        Series base(*this);
        // plain repeated multiplication; orders here are small
        for (int i = 0; i < n; ++i) r = r * base;
        return r;
    }

    // quotient; the denominator's lowest known coefficient must be invertible
    friend Series operator/(const Series& a, const Series& b) {
        a.check_param(b);
        int bv = b.val();
        if (bv == b.trunc_)
            throw std::domain_error("series: denominator is zero to its truncation order");
        R lead_inv = ring_inverse(b.at(bv));
        int av = a.val();
        int tq = std::min(a.trunc_ - bv, a.val() + b.trunc_ - 2 * bv);
        Series q(a.param_, tq);
        if (av == a.trunc_) return q; // zero numerator to known order
        for (int k = av - bv; k < tq; ++k) {
            R acc = a.at(k + bv);
            for (int j = av - bv; j < k; ++j) {
                const R qj = q.at(j);
                if (qj.is_zero()) continue;
                acc -= qj * b.at(k + bv - j);
            }
            q.set(k, acc * lead_inv);
        }
        return q;
    }

    // substitute g (valuation >= 1, same parameter space for the result)
    Series compose(const Series& g) const
        requires requires(const R& x, const R& y) { x * y; }
    {
        int vg = g.val();
        if (vg < 1) throw std::domain_error("series: composition needs valuation >= 1");
        int F = trunc_;
        int tr = std::min(F * vg, g.trunc_ + (lo_ - 1) * vg);
        Series res(g.param_, tr);
        // Horner over descending exponents of *this
        for (int k = lo_ + int(c_.size()) - 1; k >= lo_; --k) {
            res = res * g;
            const R& ck = c_[k - lo_];
            if (!ck.is_zero()) res.add(0, ck);
        }
        if (lo_ != 0) {
            Series glo = Series::monomial(g.param_, R(1), 0, tr);
            if (lo_ > 0) glo = g.pow(lo_);
            else {
                Series one = Series::monomial(g.param_, R(1), 0, tr + vg * (-lo_) + 1);
                glo = one / g.pow(-lo_);
            }
            res = res * glo;
        }
        return res.truncate(tr), res;
    }

    // compositional inverse by Newton iteration on f(g) = x
    Series revert() const
        requires requires(const R& x, const R& y) { x * y; }
    {
        if (val() != 1) throw std::domain_error("series: reversion needs valuation 1");
        int target = trunc_;
        R c1inv = ring_inverse(at(1));
        Series g = Series::monomial(param_, c1inv, 1, 2);
        while (g.trunc_ < target) {
            int w = std::min(2 * g.trunc_, target);
            Series gw = g;
            gw.trunc_ = w;
            Series f = *this;
            f.truncate(std::min(target, w + 1));
            Series err = f.compose(gw) - Series::var(param_, w);
            Series der = f.derivative().compose(gw);
            Series upd = err / der;
            upd.truncate(w);
            gw -= upd;
            gw.trunc_ = w;
            g = gw;
        }
        return g;
    }

    bool eq_to(const Series& o, int order) const {
        if (order > trunc_ || order > o.trunc_)
            throw std::logic_error("series: comparison beyond truncation");
        int klo = std::min(lo_, o.lo_);
        for (int k = klo; k < order; ++k)
            if (!(at(k) == o.at(k))) return false;
        return true;
    }

    std::string str() const {
        std::ostringstream os;
        bool some = false;
        for (int i = 0; i < int(c_.size()); ++i) {
            if (c_[i].is_zero()) continue;
            if (some) os << " + ";
            some = true;
            os << "(" << c_[i].str() << ")*" << param_name(param_) << "^" << (lo_ + i);
        }
        if (!some) os << "0";
        os << " + O(" << param_name(param_) << "^" << trunc_ << ")";
        return os.str();
    }

  private:
    void check_param(const Series& o) const {
        if (param_ != o.param_) throw std::logic_error("series: parameter mismatch");
    }
    void reserve_down(int k) {
        if (c_.empty()) { lo_ = k; c_.resize(1); return; }
        if (k < lo_) {
            c_.insert(c_.begin(), size_t(lo_ - k), R());
            lo_ = k;
        }
    }
    void reserve_up(int k) {
        if (k >= lo_ + int(c_.size())) c_.resize(size_t(k - lo_ + 1));
    }

    Param param_;
    int lo_;
    std::vector<R> c_;
    int trunc_;
};

using ScalarSeries = Series<CoeffScalar>;
using FracSeries = Series<CoeffFrac>;

} // namespace sigma45
