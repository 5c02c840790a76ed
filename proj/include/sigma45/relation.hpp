#pragma once

#include "sigma45/linexpr.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace sigma45 {

struct Rule {
    SymId lhs;
    LinExpr rhs;      // lhs = rhs, every rhs symbol strictly below lhs
    std::string prov; // which expansion coefficient produced it
};

// Ordered triangular rewrite system: at most one rule per symbol, rhs symbols
// strictly smaller than the lhs under the solving order, hence rewriting
// terminates and normal forms are unique.
class RelationSet {
  public:
    using Cmp = int (*)(SymId, SymId);

    explicit RelationSet(std::string tag = "", Cmp cmp = symtab::cmp_strata)
        : tag_(std::move(tag)), cmp_(cmp) {}

    const std::string& tag() const { return tag_; }
    Cmp cmp() const { return cmp_; }
    const std::vector<Rule>& rules() const { return rules_; }
    size_t size() const { return rules_.size(); }

    bool has(SymId s) const { return by_lhs_.count(s) != 0; }
    const Rule* rule(SymId s) const;

    void add_rule(SymId lhs, LinExpr rhs, std::string prov);

    // Fully reduced right-hand side (only irreducible symbols); identity for
    // unruled symbols.
    LinExpr normal_form(SymId s) const;
    // memoized reference version, valid for ruled symbols until the next
    // add_rule
    const LinExpr& nf_ref(SymId s) const;

    // Exhaustive rewriting of a linear expression; deterministic fixpoint.
    // Safe to call concurrently once warm() has filled the memo and no rules
    // are being added.
    LinExpr reduce(const LinExpr& e) const;

    // Materialize normal forms for every rule (makes reduce() read-only).
    void warm() const;

    enum class Outcome { Dependent, NewRule };
    // Triangularization step: repeatedly substitute the normal form of the
    // leading symbol while it is already ruled, then solve for the leading
    // symbol that remains.
    Outcome add_equation(LinExpr e, const std::string& prov);

    void write(std::ostream& os) const;
    static RelationSet read(std::istream& is, Cmp cmp = symtab::cmp_strata);

    struct Stats {
        size_t nf_computed = 0;
        size_t nf_terms = 0;
        size_t nf_invalidated = 0;
        size_t merge_items = 0;
    };
    const Stats& stats() const { return stats_; }

  private:
    std::string tag_;
    Cmp cmp_;
    std::vector<Rule> rules_;
    std::unordered_map<SymId, size_t> by_lhs_;

    // normal-form memo with reverse dependencies for invalidation
    mutable std::unordered_map<SymId, LinExpr> nf_;
    mutable std::unordered_map<SymId, std::vector<SymId>> rdep_;
    mutable Stats stats_;
};

// One rule line in the canonical text format, e.g.
//   s[6,6,6] = 3 s[5,6] - 2 s[4]  # L4 xi^3
// Coefficients: rational, then monomial factors mu0..mu4, i, r, a1..a4 with
// optional ^exp; `iN^k` denotes iota^(k*N) and needs a concrete sheet.
std::string rule_to_string(const Rule& r, bool with_prov = true);
Rule rule_from_string(const std::string& line, std::optional<int> sheetN = std::nullopt);
CoeffFrac parse_scalar_product(const std::vector<std::string>& toks, size_t lo, size_t hi,
                               std::optional<int> sheetN);

} // namespace sigma45
