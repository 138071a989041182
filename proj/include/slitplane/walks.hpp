#pragma once

#include "slitplane/series.hpp"

#include <vector>

namespace slitplane {

// A point of the removed half-line {(-k, 0) : k >= 0}. Walks may start at
// the origin but never land here at a later step.
inline bool on_slit(int i, int j)
{
    return j == 0 && i <= 0;
}

// Exact counts a_{i,j}(n) of n-step slit-plane walks from the origin to
// (i, j), for all 0 <= n <= max_steps. Counts are arbitrary-precision.
class WalkTable {
public:
    explicit WalkTable(int max_steps);

    int max_steps() const { return max_steps_; }
    // Zero outside the reachable range.
    const Integer& count(int n, int i, int j) const;
    Integer& at(int n, int i, int j);

private:
    int max_steps_;
    int side_; // 2*max_steps + 1
    std::vector<std::vector<Integer>> layers_;
    static const Integer zero_;
};

// Forward dynamic programming over step layers.
WalkTable enumerate(int max_steps);

// Exhaustive 4^n path listing; validates the DP itself. max_steps <= 12.
WalkTable enumerate_exhaustive(int max_steps);

// sum_n a_{i,j}(n) t^n as a scalar series of order max_steps.
Series endpoint_series(const WalkTable& table, int i, int j);

// Series whose t^n coefficient is sum_{i,j} a_{i,j}(n) x^i y^j.
Series full_series(const WalkTable& table);

// Series collecting the diagonal counts: coefficient of y^i t^m is a_{i,i}(m)
// (nonzero only for even m).
Series diagonal_series(const WalkTable& table);

} // namespace slitplane
