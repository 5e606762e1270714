#pragma once

#include <cstdint>
#include <vector>

namespace curvlab {

// Hopcroft-Karp. adj[l] lists right vertices 0..right_count-1. Returns the
// partner of every left vertex (-1 when unmatched).
std::vector<int> maximum_matching(int right_count, const std::vector<std::vector<int>>& adj);

struct Assignment {
    std::int64_t cost = 0;
    std::vector<int> column_of_row;
};

// Minimum-cost perfect assignment on a square integer matrix (Hungarian
// method with integer potentials, so the optimum is exact).
Assignment solve_assignment(const std::vector<std::vector<std::int64_t>>& cost);

struct Transportation {
    std::int64_t cost = 0;
    std::vector<std::vector<std::int64_t>> flow;  // supply index x demand index
};

// Balanced transportation problem with integer supplies/demands and costs,
// solved by successive shortest paths.
Transportation solve_transportation(const std::vector<std::int64_t>& supply,
                                    const std::vector<std::int64_t>& demand,
                                    const std::vector<std::vector<std::int64_t>>& cost);

}  // namespace curvlab
