#pragma once

#include <gmp.h>
#include <cstdint>
#include <string>
#include <iosfwd>

namespace sigma45 {

// Arbitrary-precision rational with an inline int64 fast path.  Values are
// always canonical: reduced, positive denominator, demoted to the inline
// representation whenever they fit.
class Rational {
  public:
    Rational() : num_(0), den_(1), big_(nullptr) {}
    Rational(long n) : num_(n), den_(1), big_(nullptr) {}
    Rational(long n, long d);
    explicit Rational(const std::string& s);

    Rational(const Rational& o);
    Rational(Rational&& o) noexcept : num_(o.num_), den_(o.den_), big_(o.big_) {
        o.big_ = nullptr;
        o.num_ = 0;
        o.den_ = 1;
    }
    Rational& operator=(const Rational& o);
    Rational& operator=(Rational&& o) noexcept;
    ~Rational() { drop_big(); }

    bool is_zero() const { return big_ ? false : num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    int sgn() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);

    Rational inv() const;
    Rational abs() const;

    // gcd(num)/lcm(den); gcd(0,x) = |x|.  Used for content extraction.
    static Rational content_gcd(const Rational& a, const Rational& b);

    double to_double() const;
    std::string str() const; // "n" or "n/d"
    size_t hash() const;

  private:
    // small: den_ > 0, reduced; big: big_ != nullptr (num_/den_ unused)
    int64_t num_;
    int64_t den_;
    mpq_ptr big_;

    void drop_big();
    void make_big(); // promote current small value into big_
    void shrink();   // demote big_ to small when it fits
    static Rational from_small128(__int128 n, __int128 d);
    const __mpq_struct* as_mpq(mpq_t tmp) const; // view (small writes into tmp)
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace sigma45
