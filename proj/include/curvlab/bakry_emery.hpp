#pragma once

#include "curvlab/graph.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace curvlab {

inline constexpr double kSharpTolerance = 1e-7;

// f -> form(f)(x) as f^T M f with f restricted to basis (ascending vertex list).
struct QuadraticForm {
    std::vector<Vertex> basis;
    std::vector<std::vector<Rational>> matrix;

    Eigen::MatrixXd to_dense() const;
    // f is a function on all vertices of the graph.
    Rational evaluate(const std::vector<Rational>& f) const;
};

struct GammaForms {
    QuadraticForm gamma;   // on B1(x)
    QuadraticForm gamma2;  // on B2(x)
};

// Exact matrices of Gamma(.)(x) and Gamma_2(.)(x) for the normalized Laplacian.
GammaForms gamma_forms(const Graph& g, Vertex x);

struct BEReport {
    Vertex vertex = 0;
    double curvature = 0.0;            // Schur-complement value (bisection if Schur unavailable)
    double bisection_curvature = 0.0;  // largest K with Gamma_2 - K Gamma PSD
    bool schur_used = false;
    std::optional<Rational> upper_bound;  // regular graphs only
    bool is_sharp = false;
    bool s1_out_regular = false;
    std::optional<double> s1pp_lambda1;
    std::optional<bool> s1pp_passes;
};

// Throws Disconnected.
BEReport be_curvature(const Graph& g, Vertex x);
BEReport be_curvature(const Graph& g, const DistanceOracle& d, Vertex x);

// 2/D + #triangles(x)/D^2, cross-checked against (3 + D - av_1^+(x)) / (2D).
// Throws NotRegular.
Rational be_upper_bound(const Graph& g, const DistanceOracle& d, Vertex x);

struct S1ppTest {
    bool applicable = false;
    double lambda1 = 0.0;  // spectral gap of S1''; 0 when disconnected, infinity for D = 1
    bool passes = false;
};

S1ppTest s1pp_sharpness_test(const Graph& g, const DistanceOracle& d, Vertex x);

struct ConjectureReport {
    double inf_curvature = 0.0;
    Vertex minimizer = 0;
    Rational bound;            // 1/D + 1/L
    double margin = 0.0;       // bound - inf_curvature
    bool holds = false;        // inf <= bound + 1e-9
    Rational weaker_bound;     // 1/D + 1/L + max #triangles(x) / (2 D^2)
    bool weaker_holds = false;
};

// Throws NotRegular, Disconnected.
ConjectureReport conjecture_scan(const Graph& g, const DistanceOracle& d, int jobs = 1);

}  // namespace curvlab
