#pragma once

#include "sigma45/coeff.hpp"
#include "sigma45/symbols.hpp"

#include <functional>
#include <vector>

namespace sigma45 {

// Linear combination of sigma-derivative symbols with CoeffFrac coefficients,
// kept sorted by symbol id.  Relations between sigma-derivatives are always
// linear, so this is the workhorse of the descent engine.
class LinExpr {
  public:
    using Term = std::pair<SymId, CoeffFrac>;

    LinExpr() = default;
    LinExpr(long) {} // zero; present so Series<LinExpr> can instantiate

    static LinExpr single(SymId s, CoeffFrac c = CoeffFrac(1));

    bool is_zero() const { return t_.empty(); }
    size_t size() const { return t_.size(); }
    const std::vector<Term>& terms() const { return t_; }

    void add(SymId s, const CoeffFrac& c);
    const CoeffFrac* coeff(SymId s) const;

    LinExpr operator-() const;
    LinExpr& operator+=(const LinExpr& o);
    LinExpr& operator-=(const LinExpr& o);
    friend LinExpr operator+(LinExpr a, const LinExpr& b) { a += b; return a; }
    friend LinExpr operator-(LinExpr a, const LinExpr& b) { a -= b; return a; }
    LinExpr& scale(const CoeffFrac& c);
    LinExpr& scale(const Rational& r);
    friend LinExpr operator*(LinExpr a, const CoeffFrac& c) { a.scale(c); return a; }

    bool operator==(const LinExpr& o) const;

    // add c * o
    void add_scaled(const CoeffFrac& c, const LinExpr& o);
    // drop symbol s and add coeff(s) * replacement instead
    void substitute(SymId s, const LinExpr& replacement);
    // remove a symbol, returning its coefficient (zero if absent)
    CoeffFrac take(SymId s);
    // apply an index shift to every symbol
    LinExpr shifted(const Indices& J) const;

    // single-pass combination of unsorted (symbol, coefficient) items
    static LinExpr from_items(std::vector<Term>&& items);
    // base + sum scale_i * part_i in one sort-and-combine pass
    static LinExpr merge(const LinExpr& base,
                         const std::vector<std::pair<CoeffFrac, const LinExpr*>>& parts);

    // largest symbol under cmp (+1 means solve-first); zero expr -> nullopt
    std::optional<SymId> leading(int (*cmp)(SymId, SymId)) const;

    // isobaric Sato weight of coeff*symbol across terms
    CoeffScalar::Weight weight() const;

    std::string str() const;

  private:
    std::vector<Term> t_;
};

} // namespace sigma45
