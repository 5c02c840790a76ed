#pragma once

#include "sigma45/coeff.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace sigma45 {

// Variable list with Sato weights. Shared by all polynomials over it.
struct Signature {
    std::vector<std::string> names;
    std::vector<int> weights;

    size_t size() const { return names.size(); }
    int index_of(const std::string& n) const;

    // u1..u6 with weights (11,7,6,3,2,1)
    static std::shared_ptr<const Signature> u6();
    // u1..u6, t, s
    static std::shared_ptr<const Signature> u6ts();
    static std::shared_ptr<const Signature> make(std::vector<std::string> names,
                                                 std::vector<int> weights);
};

using ExpVec = std::vector<int16_t>;

// graded-lex: total degree first, then lex on exponents
struct GradedLexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Sparse multivariate polynomial over CoeffScalar with a fixed signature.
class GradedPoly {
  public:
    GradedPoly() = default;
    explicit GradedPoly(std::shared_ptr<const Signature> sig) : sig_(std::move(sig)) {}
    GradedPoly(std::shared_ptr<const Signature> sig, const CoeffScalar& c);

    static GradedPoly variable(std::shared_ptr<const Signature> sig, int var, int exp = 1);

    const std::shared_ptr<const Signature>& sig() const { return sig_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::map<ExpVec, CoeffScalar, GradedLexLess>& terms() const { return terms_; }

    void add_term(const ExpVec& e, const CoeffScalar& c);
    const CoeffScalar* coeff(const ExpVec& e) const;

    GradedPoly operator-() const;
    GradedPoly& operator+=(const GradedPoly& o);
    GradedPoly& operator-=(const GradedPoly& o);
    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { a += b; return a; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { a -= b; return a; }
    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
    GradedPoly& operator*=(const GradedPoly& o) { *this = *this * o; return *this; }
    GradedPoly& scale(const CoeffScalar& c);
    GradedPoly& scale(const Rational& r);

    bool operator==(const GradedPoly& o) const { return sig_same(o) && terms_ == o.terms_; }

    GradedPoly derivative(int var) const;
    // substitute u_var -> -u_var for all vars (parity check helper)
    GradedPoly negate_vars() const;
    // total degree in the variables of each term is odd for every term
    bool all_terms_odd_degree() const;

    // Sato weight: sum of var exponents * weights + coefficient weight
    CoeffScalar::Weight weight() const;

    std::string str() const;

  private:
    bool sig_same(const GradedPoly& o) const { return sig_.get() == o.sig_.get(); }
    std::shared_ptr<const Signature> sig_;
    std::map<ExpVec, CoeffScalar, GradedLexLess> terms_;
};

} // namespace sigma45
