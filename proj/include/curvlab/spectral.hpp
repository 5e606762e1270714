#pragma once

#include "curvlab/graph.hpp"

#include <optional>
#include <vector>

namespace curvlab {

inline constexpr double kEigenTolerance = 1e-9;
inline constexpr double kClusterRadius = 1e-7;

struct SpectralSummary {
    double lambda1 = 0.0;             // smallest positive eigenvalue of -Laplacian
    int lambda1_multiplicity = 0;
    double theta1 = 0.0;              // second largest adjacency eigenvalue
    std::vector<double> full_spectrum;  // eigenvalues of -Laplacian, ascending
    std::vector<double> adjacency_spectrum;  // ascending
};

// (Delta f)(x) = (1/d_x) sum_{y~x} (f(y) - f(x)), exact. Throws IsolatedVertex.
std::vector<Rational> normalized_laplacian_apply(const Graph& g, const std::vector<Rational>& f);

// Ascending adjacency eigenvalues.
std::vector<double> adjacency_spectrum(const Graph& g);

// Throws Disconnected.
SpectralSummary spectral_summary(const Graph& g);

struct EigenfunctionCheck {
    bool ok = false;
    std::optional<Vertex> first_violation;
};

// Exact check of Delta f + (2/L) f = 0 for f = d(x,.) - L/2.
EigenfunctionCheck verify_distance_eigenfunction(const Graph& g, const DistanceOracle& d, Vertex x);

struct LichnerowiczVerdict {
    bool sharp = false;
    Rational inf_kappa;
    double lambda1 = 0.0;
    // set when some pole passes the exact eigenfunction identity with 2/L = inf kappa
    bool exact_certificate = false;
};

// Throws Disconnected, NotRegular.
LichnerowiczVerdict is_lichnerowicz_sharp(const Graph& g, const DistanceOracle& d);

}  // namespace curvlab
