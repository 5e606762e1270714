#pragma once

#include "curvlab/families.hpp"
#include "curvlab/graph.hpp"
#include "curvlab/transport.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace curvlab {

struct SharpnessVerdict {
    Rational inf_edge_kappa;
    Rational two_over_L;
    bool is_bm_sharp = false;
    bool diameter_at_most_degree = false;  // L <= D
    bool diameter_divides_twice_degree = false;  // L | 2D
    Edge witness_edge{-1, -1};
};

// kappa on every edge of g.edges(), in that order.
std::vector<CurvatureValue> edge_curvatures(const Graph& g, const DistanceOracle& d, int jobs = 1);

// Throws NotRegular, Disconnected.
SharpnessVerdict bm_sharpness(const Graph& g, const DistanceOracle& d, int jobs = 1);

struct LambdaVerdict {
    int m = 0;
    bool passes = false;
    std::vector<Edge> failing_edges;
};

// Every edge has >= m triangles and a perfect matching between the remainders.
LambdaVerdict lambda_m_check(const Graph& g, const DistanceOracle& d, int m);

struct PoleFacts {
    bool triangles_ok = false;   // every edge at x in exactly 2D/L - 2 triangles
    bool matching_ok = false;    // remainder matching perfect on every edge at x
    bool cost_ok = false;        // triangle/matching plan costs (D+1-2D/L)/(D+1) and is optimal
    std::optional<Edge> first_failure;
    Rational expected_triangles;  // 2D/L - 2
    Rational expected_cost;

    bool ok() const { return triangles_ok && matching_ok && cost_ok; }
};

// Throws NotAPole.
PoleFacts pole_facts(const Graph& g, const DistanceOracle& d, Vertex x);

struct RecursionVerdict {
    bool ok = false;
    std::optional<Vertex> first_violation;
};

// d+ - d- = D(1-2k/L), 2d+ + d0 = 2D(1-k/L), 2d- + d0 = 2kD/L on S_k(x).
// Throws NotAPole.
RecursionVerdict degree_recursions(const Graph& g, const DistanceOracle& d, Vertex x);

struct CoverVerdict {
    bool ok = false;
    std::optional<Edge> first_violation;  // antipole pair with [x,y] != V
};

CoverVerdict interval_cover_check(const DistanceOracle& d);

struct AntipoleVerdict {
    bool at_most_one = false;
    bool exactly_one = false;
    std::optional<Vertex> first_violation;
};

AntipoleVerdict unique_antipole_check(const DistanceOracle& d);

// Antipodality of the subgraph induced on subset, in its own metric.
// Throws DisconnectedSubset.
bool is_antipodal(const Graph& g, const std::vector<Vertex>& subset);

enum class IntervalMetric { Induced, Ambient };

struct SphericityVerdict {
    bool antipodal = false;
    bool strongly_spherical = false;
    std::optional<Edge> failing_interval;  // (x,y) whose interval is not antipodal
    std::optional<Vertex> failing_vertex;  // z without a partner in it
};

SphericityVerdict is_strongly_spherical(const Graph& g, const DistanceOracle& d,
                                        IntervalMetric metric = IntervalMetric::Induced, int jobs = 1);

struct MuGraphVerdict {
    bool all_cp = false;
    std::map<int, int> m_counts;  // m -> number of (unordered) distance-2 pairs
    std::optional<Edge> first_failure;
};

MuGraphVerdict mu_graphs_all_cp(const Graph& g, const DistanceOracle& d);

struct LocalSrgVerdict {
    bool ok = false;
    SrgParams expected;
    Rational expected_theta;
    std::optional<Vertex> first_failure;
};

// Throws PreconditionUnmet unless g is self-centered, BM-sharp, L >= 2 and all
// mu-graphs are CP(m) with m = (D-L)/(L(L-1)) + 1.
LocalSrgVerdict local_srg_check(const Graph& g, const DistanceOracle& d);

struct SspNcp {
    bool ssp = false;
    bool ncp = false;
};

SspNcp ssp_ncp(const Graph& g, const DistanceOracle& d, Vertex x);

struct FourCycleStatus {
    Edge edge;
    int triangles = 0;
    Rational kappa;
    bool applies = false;       // triangle-free with kappa >= 2/D
    bool in_four_cycles = false;  // every path w~x~y and x~y~w closes to a 4-cycle
};

struct FourCycleVerdict {
    std::vector<FourCycleStatus> edges;
    std::vector<Edge> violations;  // applies but not in_four_cycles
};

FourCycleVerdict four_cycle_lemma_check(const Graph& g, const DistanceOracle& d);

struct ClassificationMatch {
    std::optional<FamilySpec> matched;
    std::vector<Vertex> iso_witness;  // generated graph vertex -> input vertex
    bool in_classified_territory = false;  // self-centered and BM-sharp
    std::string reason;
};

// Recognises the self-centered BM-sharp list (Q^n, CP(n), J(2n,n), the
// demi-cubes of even dimension, Gosset) and products with equal D/L.
ClassificationMatch classify(const Graph& g, const DistanceOracle& d);

}  // namespace curvlab
