#pragma once

#include "curvlab/error.hpp"
#include "curvlab/rational.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace curvlab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;

    // Throws SelfLoop, DuplicateEdge, VertexOutOfRange.
    static Graph from_edges(int n, const std::vector<Edge>& edges,
                            std::vector<std::string> labels = {});

    int order() const { return static_cast<int>(adj_.size()); }
    std::size_t size() const { return edge_count_; }

    std::span<const Vertex> neighbours(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(Vertex u, Vertex v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    // Adjacency row as packed 64-bit words (words() of them).
    std::span<const std::uint64_t> row(Vertex v) const {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
    }
    std::size_t words() const { return words_; }

    // Common degree when regular (and non-empty).
    std::optional<int> regular_degree() const;
    int max_degree() const;

    // Edges (u,v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(Vertex v) const;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::uint64_t> bits_;
    std::size_t words_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::string> labels_;
};

// All-pairs BFS hop counts.
class DistanceOracle {
public:
    static constexpr int kInfinity = std::numeric_limits<int>::max();

    explicit DistanceOracle(const Graph& g);

    int operator()(Vertex u, Vertex v) const { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
    int order() const { return n_; }
    int diameter() const { return diameter_; }
    bool is_connected() const { return connected_; }
    int eccentricity(Vertex x) const;

    std::vector<Vertex> sphere(Vertex x, int k) const;
    std::vector<Vertex> ball(Vertex x, int k) const;

private:
    int n_ = 0;
    int diameter_ = 0;
    bool connected_ = true;
    std::vector<int> dist_;
};

DistanceOracle distances(const Graph& g);

// Throws Disconnected unless d.is_connected(); NotRegular unless g is regular.
void require_connected(const DistanceOracle& d);
int require_regular(const Graph& g);

struct DegreeTriple {
    int d_minus = 0;
    int d_zero = 0;
    int d_plus = 0;
};

struct SphereAverages {
    Rational in;
    Rational spherical;
    Rational out;
};

// Convention for edgeless graphs (k == 0): lambda is a wildcard, stored as nullopt.
struct SrgParams {
    int nu = 0;
    int k = 0;
    std::optional<int> lambda;
    int mu = 0;

    bool matches(const SrgParams& other) const;
    std::string to_string() const;
};

struct IntersectionArray {
    std::vector<int> b;  // b_0..b_{L-1}
    std::vector<int> c;  // c_1..c_L
};

struct PoleStructure {
    std::vector<std::vector<Vertex>> antipoles;
    bool self_centered = false;
};

// { z : d(x,z) + d(z,y) = d(x,y) }, ascending.
std::vector<Vertex> interval(const DistanceOracle& d, Vertex x, Vertex y);

DegreeTriple degree_triple(const Graph& g, const DistanceOracle& d, Vertex x, Vertex y);

// Throws EmptySphere.
SphereAverages sphere_averages(const Graph& g, const DistanceOracle& d, Vertex x, int k);

// |N_xy|; throws NotAnEdge.
int triangle_count(const Graph& g, Vertex x, Vertex y);
// Triangles through x.
int triangle_count(const Graph& g, Vertex x);

// Common neighbours, ascending.
std::vector<Vertex> common_neighbours(const Graph& g, Vertex x, Vertex y);

// Induced subgraph on N_xz; throws WrongDistance unless d(x,z) = 2.
Graph mu_graph(const Graph& g, const DistanceOracle& d, Vertex x, Vertex z);

// Vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);

std::optional<int> is_cocktail_party(const Graph& g);
std::optional<SrgParams> is_strongly_regular(const Graph& g);
std::optional<IntersectionArray> intersection_array(const Graph& g, const DistanceOracle& d);

// Vertex (a, b) has index a * |V2| + b.
Graph cartesian_product(const Graph& g1, const Graph& g2);

PoleStructure poles_and_antipoles(const DistanceOracle& d);

}  // namespace curvlab
