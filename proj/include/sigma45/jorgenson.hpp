#pragma once

#include "sigma45/poly.hpp"

#include <vector>

namespace sigma45 {

// Bordered-determinant reductions defining the strata.  For u on the k-point
// stratum the quotient of sigma-derivative combinations equals a quotient of
// determinants in the points; letting the last point run into the branch
// point at infinity kills columns and forces sigma-derivatives to vanish one
// stratum down.
struct JorgensonResult {
    int k = 0;
    bool singular = false;          // direct construction degenerates (k=2)
    std::vector<int> independent_a; // indices j with no a_j dependence => sigma_j = 0
    GradedPoly quotient_num;        // reduced quotient identity (a-side)
    GradedPoly quotient_den;        // b-side
};

JorgensonResult jorgenson_reduce(int k);

// signature a1..a6, b1..b6, t1..t4, s1..s4 used by the reductions
std::shared_ptr<const Signature> jorgenson_signature();

} // namespace sigma45
