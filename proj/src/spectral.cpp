#include "curvlab/spectral.hpp"
#include "curvlab/sharpness.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace curvlab {

std::vector<Rational> normalized_laplacian_apply(const Graph& g, const std::vector<Rational>& f) {
    if (static_cast<int>(f.size()) != g.order()) throw Error(ErrorKind::BadParam, "function size mismatch");
    std::vector<Rational> out(g.order());
    for (Vertex x = 0; x < g.order(); ++x) {
        if (g.degree(x) == 0) throw Error(ErrorKind::IsolatedVertex, "vertex " + std::to_string(x));
        Rational s = 0;
        for (Vertex y : g.neighbours(x)) s += f[y] - f[x];
        out[x] = s / g.degree(x);
    }
    return out;
}

std::vector<double> adjacency_spectrum(const Graph& g) {
    int n = g.order();
    if (n == 0) return {};
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    return {ev.data(), ev.data() + n};
}

SpectralSummary spectral_summary(const Graph& g) {
    DistanceOracle d(g);
    require_connected(d);
    int n = g.order();
    SpectralSummary s;
    // -Delta is similar to I - D^{-1/2} A D^{-1/2}
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
    for (auto [u, v] : g.edges()) {
        double w = -1.0 / std::sqrt(static_cast<double>(g.degree(u)) * g.degree(v));
        m(u, v) = m(v, u) = w;
    }
    if (n == 1) m(0, 0) = 0.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    s.full_spectrum.assign(ev.data(), ev.data() + n);
    for (double lam : s.full_spectrum) {
        if (lam > kEigenTolerance) {
            s.lambda1 = lam;
            break;
        }
    }
    s.lambda1_multiplicity = static_cast<int>(std::count_if(
        s.full_spectrum.begin(), s.full_spectrum.end(),
        [&](double lam) { return s.lambda1 > 0 && std::abs(lam - s.lambda1) < kClusterRadius; }));
    s.adjacency_spectrum = adjacency_spectrum(g);
    s.theta1 = n >= 2 ? s.adjacency_spectrum[n - 2] : 0.0;
    return s;
}

EigenfunctionCheck verify_distance_eigenfunction(const Graph& g, const DistanceOracle& d, Vertex x) {
    int L = d.diameter();
    EigenfunctionCheck out;
    if (L == 0) return out;
    std::vector<Rational> f(g.order());
    for (Vertex v = 0; v < g.order(); ++v) f[v] = Rational(d(x, v)) - Rational(L, 2);
    auto lf = normalized_laplacian_apply(g, f);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (lf[v] + Rational(2, L) * f[v] != 0) {
            out.first_violation = v;
            return out;
        }
    }
    out.ok = true;
    return out;
}

LichnerowiczVerdict is_lichnerowicz_sharp(const Graph& g, const DistanceOracle& d) {
    require_connected(d);
    require_regular(g);
    LichnerowiczVerdict v;
    v.inf_kappa = bm_sharpness(g, d).inf_edge_kappa;
    v.lambda1 = spectral_summary(g).lambda1;
    v.sharp = std::abs(to_double(v.inf_kappa) - v.lambda1) < kEigenTolerance;
    int L = d.diameter();
    if (v.sharp && L > 0 && v.inf_kappa == Rational(2, L)) {
        for (Vertex x = 0; x < g.order(); ++x) {
            if (d.eccentricity(x) != L) continue;
            if (verify_distance_eigenfunction(g, d, x).ok) {
                v.exact_certificate = true;
                break;
            }
        }
    }
    return v;
}

}  // namespace curvlab
