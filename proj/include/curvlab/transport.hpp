#pragma once

#include "curvlab/graph.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <vector>

namespace curvlab {

// Sparse probability measure with exact masses.
struct Measure {
    std::map<Vertex, Rational> mass;

    Rational total() const;
    Rational at(Vertex v) const;
};

struct TransportPlan {
    std::map<Edge, Rational> entries;  // (source vertex, target vertex) -> mass

    Rational cost(const DistanceOracle& d) const;
    Measure source_marginal() const;
    Measure target_marginal() const;
};

nlohmann::json to_json(const TransportPlan& plan);

enum class Flavour { KappaP, Kappa, KappaLLY };
enum class Method { Assignment, MatchingFastPath, ProductFormula };

std::string_view to_string(Method m);

struct CurvatureValue {
    Rational value;
    Flavour flavour = Flavour::Kappa;
    Rational p;  // idleness, meaningful for KappaP
    Method method = Method::Assignment;
};

struct WassersteinResult {
    Rational distance;
    TransportPlan plan;
};

// mu_x^p: mass p at x, (1-p)/d_x on each neighbour. Throws BadIdleness.
Measure idle_measure(const Graph& g, Vertex x, const Rational& p);

// Exact W1. Equal-mass supports of equal size go through the assignment
// solver, everything else through min-cost flow on the integer scaling.
// Throws Disconnected when some mass cannot reach the other support.
WassersteinResult wasserstein(const DistanceOracle& d, const Measure& m1, const Measure& m2);

// 1 - W1(mu_x^p, mu_y^p) / d(x,y). Throws SamePair, NotRegular, BadIdleness.
CurvatureValue kappa_p(const Graph& g, const DistanceOracle& d, Vertex x, Vertex y, const Rational& p);

// (D+1)/D * kappa_{1/(D+1)}. Adjacent pairs try the matching fast path first.
CurvatureValue kappa(const Graph& g, const DistanceOracle& d, Vertex x, Vertex y);
// Same value, always through the assignment solver.
CurvatureValue kappa_by_assignment(const Graph& g, const DistanceOracle& d, Vertex x, Vertex y);
// Regular graphs only, where it coincides with kappa.
CurvatureValue kappa_lly(const Graph& g, const DistanceOracle& d, Vertex x, Vertex y);

// Minimum-cost plan between mu_x and mu_y at p = 1/(D+1).
WassersteinResult optimal_plan(const Graph& g, const DistanceOracle& d, Vertex x, Vertex y);

// The non-triangle remainders N_x \ (N_xy + y) and N_y \ (N_xy + x), ascending.
struct NeighbourhoodSplit {
    std::vector<Vertex> common;
    std::vector<Vertex> left;
    std::vector<Vertex> right;
};
NeighbourhoodSplit split_neighbourhoods(const Graph& g, Vertex x, Vertex y);

// Maximum adjacency matching between the two remainders as (left, right) pairs.
std::vector<Edge> remainder_matching(const Graph& g, Vertex x, Vertex y);

// (2+m)/D when the remainder matching is perfect, nullopt otherwise.
// Throws NotAnEdge, NotRegular.
std::optional<CurvatureValue> curvature_via_matching(const Graph& g, const DistanceOracle& d, Vertex x, Vertex y);

// True iff plan couples m1 to m2 and cost(plan) = sum phi (m1 - m2).
// phi is indexed by vertex. Throws NotLipschitz if |phi(u)-phi(v)| > d(u,v)
// somewhere on the union of supports.
bool certify_duality(const DistanceOracle& d, const Measure& m1, const Measure& m2, const TransportPlan& plan,
                     const std::vector<Rational>& phi);

struct TransportMap {
    std::map<Vertex, Vertex> assignment;  // B1(x) -> B1(y)
    std::map<Vertex, int> displacement;
    Rational unit_mass;                   // mass carried by each point

    Rational cost() const;
    TransportPlan plan() const;
};

// Identity on B1(x) n B1(y), the given matching on the remainders.
// Throws NotAnEdge, NotPerfectMatching.
TransportMap tpm_transport_map(const Graph& g, const DistanceOracle& d, Vertex x, Vertex y,
                               const std::vector<Edge>& matching);

// The transport map of an edge when the remainder matching is forced: every
// remainder vertex has exactly one admissible partner. Throws NotBMSharp when
// no perfect matching exists, AmbiguousTransportMap when it is not forced.
TransportMap unique_tpm_transport_map(const Graph& g, const DistanceOracle& d, Vertex x, Vertex y);

struct TransportGeodesic {
    std::vector<Vertex> base;       // x_0..x_L
    std::vector<Vertex> waypoints;  // z(0)..z(L)
    int length = 0;                 // d(z(0), z(L))
    bool geodesic = false;          // length equals the sum of step lengths
};

// Throws NotFullLength, NotBMSharp, AmbiguousTransportMap, BadParam (z not in B1(x_0)).
TransportGeodesic transport_geodesic(const Graph& g, const DistanceOracle& d, const std::vector<Vertex>& path,
                                     Vertex z);

// A diameter geodesic x = x_0, x_1, ..., x_L passing through the given
// intermediate vertices in order (each must lie on a geodesic). Lexicographically
// smallest choices elsewhere.
std::vector<Vertex> geodesic_through(const DistanceOracle& d, const Graph& g, const std::vector<Vertex>& stops);

// The vertex of [x,y] at distance d(x,y) from x1, found by brute force and via
// the transport geodesic; the two must agree. Throws NoAntipole, BadParam.
Vertex interval_antipole(const Graph& g, const DistanceOracle& d, Vertex x, Vertex y, Vertex x1);
std::optional<Vertex> interval_antipole_brute_force(const DistanceOracle& d, Vertex x, Vertex y, Vertex x1);

// sigma on N_xy for a distance-2 pair whose mu-graph is a cocktail party graph.
// Throws WrongDistance, MuGraphNotCP.
std::map<Vertex, Vertex> switching_map(const Graph& g, const DistanceOracle& d, Vertex x, Vertex y);

// Curvature of a product edge from the factor that changes, scaled by its
// degree share. u, v are product indices a * |V2| + b.
CurvatureValue kappa_product_edge(const Graph& g1, const DistanceOracle& d1, const Graph& g2,
                                  const DistanceOracle& d2, Vertex u, Vertex v);

}  // namespace curvlab
