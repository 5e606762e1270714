#pragma once

#include "curvlab/graph.hpp"

#include <optional>
#include <vector>

namespace curvlab {

// Returns phi with a ~ b  <=>  phi[a] ~ phi[b], or nullopt.
// Joint colour refinement seeded by degree and distance profile, then
// individualisation with backtracking. Intended for a few hundred vertices.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b);

inline bool are_isomorphic(const Graph& a, const Graph& b) {
    return find_isomorphism(a, b).has_value();
}

bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<Vertex>& phi);

}  // namespace curvlab
