#pragma once

#include "sigma45/coeff.hpp"

#include <string>
#include <vector>

namespace sigma45 {

// Dense linear system A x = b over the coefficient ring, solved exactly.
struct LinearSystem {
    std::vector<std::vector<CoeffFrac>> a; // rows
    std::vector<CoeffFrac> b;
    std::vector<std::string> unknowns;

    size_t rows() const { return a.size(); }
    size_t cols() const { return unknowns.size(); }

    void add_row(std::vector<CoeffFrac> row, CoeffFrac rhs) {
        a.push_back(std::move(row));
        b.push_back(std::move(rhs));
    }
};

// x_i = constant + sum coeff_j * x_{free_j}
struct AffineValue {
    CoeffFrac constant;
    std::vector<std::pair<size_t, CoeffFrac>> lin;

    bool is_constant() const { return lin.empty(); }
    std::string str(const std::vector<std::string>& names) const;
};

struct LinearSolution {
    enum class Status { Unique, Underdetermined, Inconsistent };
    Status status = Status::Inconsistent;
    std::vector<AffineValue> values; // one per unknown (frees map to themselves)
    std::vector<size_t> free_vars;
    bool verified = false; // back-substitution with free variables at zero
};

// Exact elimination over the localized ring with fraction bookkeeping
// (Bareiss-style cross-multiplication, one normalization per step), followed
// by exact back-substitution and verification.
LinearSolution linear_solve(const LinearSystem& sys);

} // namespace sigma45
