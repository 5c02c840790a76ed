#pragma once

#include "sigma45/relation.hpp"
#include "sigma45/series.hpp"

#include <array>
#include <vector>

namespace sigma45 {

// Multivariate Taylor data for sigma(u^ + u_xi): coefficient of xi^m is a
// linear expression in sigma-derivative symbols at u^ with scalar weights
// supplied by the one-point expansions of the curve.
struct MasterExpansion {
    int order = 0;                // coefficients for xi^m, m = 0..order
    std::vector<LinExpr> coeff;   // size order+1

    // expansion of sigma_base(u^ + u_xi): append base's indices everywhere
    LinExpr shifted_coeff(int m, SymId base) const;
};

MasterExpansion master_expansion(int order);

// Descend a relation set one stratum: expand every rule, collect
// xi-coefficients up to xi_order, set them to zero and triangularize.
RelationSet descend(const RelationSet& from, const MasterExpansion& master, int level_to,
                    int threads = 1);

struct DescentChain {
    RelationSet theta4, theta3, theta2, theta1;
};

DescentChain derive_chain(int xi_order, int threads = 1);

// Expected eliminations on Theta^[1]; used as the order-insufficiency probe.
struct Theta1Report {
    bool sigma1_zero = false;
    bool sigma2_zero = false;
    std::vector<SymId> unresolved_low; // 1/2-index symbols outside the basis without rules
    bool complete() const { return sigma1_zero && sigma2_zero && unresolved_low.empty(); }
};

Theta1Report check_theta1(const RelationSet& t1);

// Transport of a linear relation by the cyclic symmetry: each symbol picks up
// iota^(-weight).  A valid relation set is closed under this map.
LinExpr cyclic_transform(const LinExpr& e);

} // namespace sigma45
