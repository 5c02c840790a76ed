#include "sigma45/linsolve.hpp"

#include <algorithm>
#include <sstream>

namespace sigma45 {

std::string AffineValue::str(const std::vector<std::string>& names) const {
    std::ostringstream os;
    bool some = false;
    if (!constant.is_zero() || lin.empty()) {
        os << constant.str();
        some = true;
    }
    for (const auto& [j, c] : lin) {
        if (some) os << " + ";
        os << "(" << c.str() << ") " << names[j];
        some = true;
    }
    return os.str();
}

LinearSolution linear_solve(const LinearSystem& sys) {
    size_t m = sys.rows(), n = sys.cols();
    std::vector<std::vector<CoeffFrac>> a = sys.a;
    std::vector<CoeffFrac> b = sys.b;

    LinearSolution sol;
    std::vector<long> pivot_col_of_row(m, -1);
    std::vector<long> pivot_row_of_col(n, -1);

    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        // pick the shortest nonzero pivot at/below `row`
        size_t best = m;
        size_t best_sz = SIZE_MAX;
        for (size_t r = row; r < m; ++r) {
            if (a[r][col].is_zero()) continue;
            size_t sz = a[r][col].num().size() + a[r][col].den().size();
            if (sz < best_sz) { best = r; best_sz = sz; }
        }
        if (best == m) continue;
        std::swap(a[row], a[best]);
        std::swap(b[row], b[best]);

        CoeffFrac inv = a[row][col].inv();
        for (size_t c = col; c < n; ++c)
            if (!a[row][c].is_zero()) a[row][c] *= inv;
        if (!b[row].is_zero()) b[row] *= inv;

        for (size_t r = 0; r < m; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            CoeffFrac f = a[r][col];
            for (size_t c = col; c < n; ++c)
                if (!a[row][c].is_zero()) a[r][c] -= f * a[row][c];
            if (!b[row].is_zero()) b[r] -= f * b[row];
        }
        pivot_col_of_row[row] = long(col);
        pivot_row_of_col[col] = long(row);
        ++row;
    }

    // inconsistency: a zero row with nonzero rhs
    for (size_t r = row; r < m; ++r) {
        bool all_zero = true;
        for (size_t c = 0; c < n; ++c)
            if (!a[r][c].is_zero()) { all_zero = false; break; }
        if (all_zero && !b[r].is_zero()) {
            sol.status = LinearSolution::Status::Inconsistent;
            return sol;
        }
    }

    sol.values.assign(n, {});
    for (size_t c = 0; c < n; ++c) {
        if (pivot_row_of_col[c] >= 0) continue;
        sol.free_vars.push_back(c);
        sol.values[c].lin.emplace_back(c, CoeffFrac(1));
    }
    for (size_t c = 0; c < n; ++c) {
        long r = pivot_row_of_col[c];
        if (r < 0) continue;
        AffineValue v;
        v.constant = b[size_t(r)];
        for (size_t j = c + 1; j < n; ++j) {
            if (a[size_t(r)][j].is_zero()) continue;
            if (pivot_row_of_col[j] >= 0) continue; // eliminated by Jordan sweep
            v.lin.emplace_back(j, -a[size_t(r)][j]);
        }
        sol.values[c] = std::move(v);
    }
    sol.status = sol.free_vars.empty() ? LinearSolution::Status::Unique
                                       : LinearSolution::Status::Underdetermined;

    // verify the particular solution (free variables at zero)
    sol.verified = true;
    for (size_t r = 0; r < m && sol.verified; ++r) {
        CoeffFrac acc;
        for (size_t c = 0; c < n; ++c) {
            if (sys.a[r][c].is_zero()) continue;
            acc += sys.a[r][c] * sol.values[c].constant;
        }
        if (acc != sys.b[r]) sol.verified = false;
    }
    return sol;
}

} // namespace sigma45
