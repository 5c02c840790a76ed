#pragma once

#include "sigma45/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace sigma45 {

// Generators of the coefficient ring.  iota^2 = -1, rho^4 = mu0, and the
// ring is localized at mu0 (negative mu0 exponents allowed).  a1..a4 are the
// free constants of the mapping integrand.
enum Gen : int {
    GMu0 = 0, GMu1, GMu2, GMu3, GMu4,
    GIota,
    GRho,
    GA1, GA2, GA3, GA4,
    kNumGens
};

// Sato weights of the generators.
inline constexpr std::array<int, kNumGens> kGenWeight = {
    -20, -16, -12, -8, -4,   // mu0..mu4
    0,                       // iota
    -5,                      // rho = mu0^{1/4}
    4, 8, 12, 16             // a1..a4
};

extern const char* const kGenName[kNumGens];

struct Monomial {
    std::array<int16_t, kNumGens> e{};

    bool operator==(const Monomial&) const = default;
    // Fixed total order on monomials (lex over the generator list).
    bool operator<(const Monomial& o) const { return e < o.e; }
    bool is_unit() const;
    int weight() const;
};

// Element of the graded coefficient ring: sparse sum rational * monomial,
// terms sorted by the fixed monomial order, normalized (iota exponent in
// {0,1}, rho exponent in {0..3}, no zero coefficients).
class CoeffScalar {
  public:
    struct Term {
        Monomial m;
        Rational c;
    };

    CoeffScalar() = default;
    CoeffScalar(long n) { if (n != 0) terms_.push_back({Monomial{}, Rational(n)}); }
    CoeffScalar(const Rational& r) { if (!r.is_zero()) terms_.push_back({Monomial{}, r}); }

    static CoeffScalar term(Rational c, Monomial m);
    static CoeffScalar gen(Gen g, int exp = 1);
    static CoeffScalar mu(int i, int exp = 1) { return gen(Gen(GMu0 + i), exp); }
    static CoeffScalar iota(int exp = 1) { return gen(GIota, exp); }
    static CoeffScalar rho(int exp = 1) { return gen(GRho, exp); }
    // mu0^{k/4} for any integer k
    static CoeffScalar mu0_quarter(int k) { return gen(GRho, k); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_rational() const;
    bool single_term() const { return terms_.size() == 1; }
    size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    CoeffScalar operator-() const;
    CoeffScalar& operator+=(const CoeffScalar& o);
    CoeffScalar& operator-=(const CoeffScalar& o);
    friend CoeffScalar operator+(CoeffScalar a, const CoeffScalar& b) { a += b; return a; }
    friend CoeffScalar operator-(CoeffScalar a, const CoeffScalar& b) { a -= b; return a; }
    friend CoeffScalar operator*(const CoeffScalar& a, const CoeffScalar& b);
    CoeffScalar& operator*=(const CoeffScalar& o) { *this = *this * o; return *this; }
    CoeffScalar& scale(const Rational& r);

    bool operator==(const CoeffScalar& o) const;

    // Single invertible term (unit of the localized ring)?
    bool is_unit() const { return terms_.size() == 1 && terms_[0].m.is_unit(); }
    CoeffScalar unit_inverse() const;

    // Exact division by a single-term divisor; nullopt if any term fails.
    std::optional<CoeffScalar> div_term(const Term& t) const;
    // Exact multivariate division; nullopt when the remainder is nonzero.
    std::optional<CoeffScalar> div_exact(const CoeffScalar& d) const;

    // gcd of the rational coefficients (positive); zero for the zero element.
    Rational content() const;
    // componentwise min of exponents over all terms (valid only if nonzero)
    Monomial exponent_floor() const;
    void shift_exponents(const Monomial& m); // multiply every term by m (no normalization needed beyond iota/rho)

    // Common Sato weight of all terms, if isobaric.  Zero reports isobaric
    // of every weight via the `zero` flag.
    struct Weight {
        bool zero = false;
        bool isobaric = false;
        int value = 0;
    };
    Weight weight() const;

    const Rational& leading_rational() const { return terms_.front().c; }

    std::string str() const;

    size_t hash() const;

  private:
    void add_term(Monomial m, Rational c); // normalizes iota/rho, merges
    friend class CoeffFrac;
    std::vector<Term> terms_;
};

// Fraction num/den over CoeffScalar with light normalization: content and
// monomial cancellation, exact-division collapse, unit denominators absorbed.
class CoeffFrac {
  public:
    CoeffFrac() : num_(), den_(1) {}
    CoeffFrac(long n) : num_(n), den_(1) {}
    CoeffFrac(const Rational& r) : num_(r), den_(1) {}
    CoeffFrac(CoeffScalar n) : num_(std::move(n)), den_(1) {}
    CoeffFrac(CoeffScalar n, CoeffScalar d);

    const CoeffScalar& num() const { return num_; }
    const CoeffScalar& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool den_is_one() const { return den_.is_one(); }

    CoeffFrac operator-() const;
    CoeffFrac& operator+=(const CoeffFrac& o);
    CoeffFrac& operator-=(const CoeffFrac& o);
    friend CoeffFrac operator+(CoeffFrac a, const CoeffFrac& b) { a += b; return a; }
    friend CoeffFrac operator-(CoeffFrac a, const CoeffFrac& b) { a -= b; return a; }
    friend CoeffFrac operator*(const CoeffFrac& a, const CoeffFrac& b);
    friend CoeffFrac operator/(const CoeffFrac& a, const CoeffFrac& b);
    CoeffFrac& operator*=(const CoeffFrac& o) { *this = *this * o; return *this; }
    CoeffFrac& operator/=(const CoeffFrac& o) { *this = *this / o; return *this; }
    CoeffFrac& scale(const Rational& r) {
        num_.scale(r);
        if (num_.is_zero()) den_ = CoeffScalar(1);
        return *this;
    }

    bool operator==(const CoeffFrac& o) const; // exact (cross-multiplied)
    bool operator!=(const CoeffFrac& o) const { return !(*this == o); }

    CoeffFrac inv() const;

    CoeffScalar::Weight weight() const;

    std::string str() const;

  private:
    void normalize();
    CoeffScalar num_, den_;
};

} // namespace sigma45
