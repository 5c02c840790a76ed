#pragma once

#include "sigma45/poly.hpp"
#include "sigma45/relation.hpp"
#include "sigma45/series.hpp"
#include "sigma45/symbols.hpp"

#include <iosfwd>
#include <optional>

namespace sigma45 {

// The weight-15 seed of the expansion, exactly as displayed.
GradedPoly schur_weierstrass();

struct CkInfo {
    int k = 0;
    size_t candidates = 0;            // ansatz monomials of this layer
    size_t free_after_one_point = 0;  // unknowns the one-point defining family leaves open
    std::string determined_by;        // which constraint family pinned the layer
    bool fully_determined = false;
};

// sigma(u) = C15(u) + C19(u) + ... as isobaric layers.
class SigmaExpansion {
  public:
    int depth() const { return depth_; }
    const std::vector<CkInfo>& info() const { return info_; }
    const GradedPoly& layer(int k) const;
    bool has_layer(int k) const;

    // sigma_I(u(xi)); trusted strictly below depth + weight(I) - 11
    int certified_order(SymId I) const { return depth_ + symtab::weight(I) - 11; }
    ScalarSeries deriv_series(SymId I) const;
    ScalarSeries deriv_series(SymId I, int trunc) const;

    void write(std::ostream& os) const;
    static SigmaExpansion read(std::istream& is);

    friend struct ExpansionBuilder;

  private:
    int depth_ = 11; // no layers yet
    std::vector<GradedPoly> layers_;
    std::vector<CkInfo> info_;
};

struct BuildOptions {
    int depth = 35;
    int threads = 1;
    // derived relation sets supplying the one/two/three-point constraint
    // families; higher layers need the deeper sets
    const RelationSet* theta1 = nullptr;
    const RelationSet* theta2 = nullptr;
    const RelationSet* theta3 = nullptr;
};

// Append layer k (all lower layers present).  Throws if the constraint
// families cannot pin every coefficient.
CkInfo build_ck(SigmaExpansion& table, int k, const BuildOptions& opt);

SigmaExpansion build_expansion(const BuildOptions& opt);

// Candidate monomials of the weight-k layer: odd isobaric u-monomials paired
// with weight-(15-k) mu-monomials.
size_t count_ck_candidates(int k);

} // namespace sigma45
