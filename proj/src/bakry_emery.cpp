#include "curvlab/bakry_emery.hpp"
#include "curvlab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace curvlab {

namespace {

using RMatrix = std::vector<std::vector<Rational>>;

RMatrix zeros(std::size_t n) { return RMatrix(n, std::vector<Rational>(n, Rational(0))); }

double min_eigenvalue(const Eigen::MatrixXd& m) {
    if (m.rows() == 0) return std::numeric_limits<double>::infinity();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

bool is_psd(const Eigen::MatrixXd& m) {
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    return min_eigenvalue(m) >= -1e-11 * scale;
}

// Drops row/column `skip`.
Eigen::MatrixXd without(const Eigen::MatrixXd& m, Eigen::Index skip) {
    Eigen::Index n = m.rows() - 1;
    Eigen::MatrixXd out(n, n);
    for (Eigen::Index i = 0, r = 0; i <= n; ++i) {
        if (i == skip) continue;
        for (Eigen::Index j = 0, c = 0; j <= n; ++j) {
            if (j == skip) continue;
            out(r, c++) = m(i, j);
        }
        ++r;
    }
    return out;
}

}  // namespace

Eigen::MatrixXd QuadraticForm::to_dense() const {
    auto n = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) m(i, j) = to_double(matrix[i][j]);
    return m;
}

Rational QuadraticForm::evaluate(const std::vector<Rational>& f) const {
    Rational s = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (f[basis[i]] == 0) continue;
        for (std::size_t j = 0; j < basis.size(); ++j) s += f[basis[i]] * matrix[i][j] * f[basis[j]];
    }
    return s;
}

GammaForms gamma_forms(const Graph& g, Vertex x) {
    if (x < 0 || x >= g.order()) throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(x));
    if (g.degree(x) == 0) throw Error(ErrorKind::IsolatedVertex, "vertex " + std::to_string(x));
    // B2(x) in ascending order
    std::vector<int> depth(g.order(), -1);
    depth[x] = 0;
    for (Vertex y : g.neighbours(x)) depth[y] = 1;
    for (Vertex y : g.neighbours(x))
        for (Vertex z : g.neighbours(y))
            if (depth[z] < 0) depth[z] = 2;
    std::vector<Vertex> b2, b1;
    std::vector<int> index(g.order(), -1);
    for (Vertex v = 0; v < g.order(); ++v)
        if (depth[v] >= 0) {
            index[v] = static_cast<int>(b2.size());
            b2.push_back(v);
            if (depth[v] <= 1) b1.push_back(v);
        }
    const std::size_t n = b2.size();

    // M_v: Gamma(.)(v) = sum_{w~v} (f(w)-f(v))^2 / (2 d_v), on the B2 basis
    auto gamma_at = [&](Vertex v) {
        RMatrix m = zeros(n);
        Rational c(1, 2 * g.degree(v));
        int iv = index[v];
        for (Vertex w : g.neighbours(v)) {
            int iw = index[w];
            m[iw][iw] += c;
            m[iv][iv] += c;
            m[iv][iw] -= c;
            m[iw][iv] -= c;
        }
        return m;
    };
    // Laplacian row of u on the B2 basis
    auto laplacian_row = [&](Vertex u) {
        std::vector<Rational> row(n, Rational(0));
        row[index[u]] = -1;
        for (Vertex w : g.neighbours(u)) row[index[w]] += Rational(1, g.degree(u));
        return row;
    };

    RMatrix mx = gamma_at(x);
    // 2 Gamma_2 = sum_v P_xv M_v - M_x P - P^T M_x
    RMatrix two_g2 = zeros(n);
    auto px = laplacian_row(x);
    for (Vertex v : b1) {
        Rational coeff = px[index[v]];
        if (coeff == 0) continue;
        RMatrix mv = gamma_at(v);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (mv[i][j] != 0) two_g2[i][j] += coeff * mv[i][j];
    }
    std::vector<std::vector<Rational>> prows;  // P rows for t in B1(x)
    for (Vertex t : b1) prows.push_back(laplacian_row(t));
    for (std::size_t a = 0; a < b1.size(); ++a) {
        int ia = index[b1[a]];
        for (std::size_t t = 0; t < b1.size(); ++t) {
            Rational m = mx[ia][index[b1[t]]];
            if (m == 0) continue;
            for (std::size_t b = 0; b < n; ++b) {
                if (prows[t][b] == 0) continue;
                Rational term = m * prows[t][b];
                two_g2[ia][b] -= term;  // M_x P
                two_g2[b][ia] -= term;  // P^T M_x
            }
        }
    }
    GammaForms out;
    out.gamma2.basis = b2;
    out.gamma2.matrix = zeros(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.gamma2.matrix[i][j] = two_g2[i][j] / 2;
    out.gamma.basis = b1;
    out.gamma.matrix = zeros(b1.size());
    for (std::size_t i = 0; i < b1.size(); ++i)
        for (std::size_t j = 0; j < b1.size(); ++j) out.gamma.matrix[i][j] = mx[index[b1[i]]][index[b1[j]]];
    return out;
}

BEReport be_curvature(const Graph& g, Vertex x) { return be_curvature(g, DistanceOracle(g), x); }

BEReport be_curvature(const Graph& g, const DistanceOracle& d, Vertex x) {
    require_connected(d);
    auto forms = gamma_forms(g, x);
    const auto& b2 = forms.gamma2.basis;
    const auto n = static_cast<Eigen::Index>(b2.size());
    Eigen::Index ix = std::find(b2.begin(), b2.end(), x) - b2.begin();

    // embed Gamma into the B2 basis, then fix f(x) = 0 by dropping x
    Eigen::MatrixXd gamma_full = Eigen::MatrixXd::Zero(n, n);
    const auto& b1 = forms.gamma.basis;
    for (std::size_t i = 0; i < b1.size(); ++i)
        for (std::size_t j = 0; j < b1.size(); ++j) {
            auto bi = std::find(b2.begin(), b2.end(), b1[i]) - b2.begin();
            auto bj = std::find(b2.begin(), b2.end(), b1[j]) - b2.begin();
            gamma_full(bi, bj) = to_double(forms.gamma.matrix[i][j]);
        }
    Eigen::MatrixXd G = without(gamma_full, ix);
    Eigen::MatrixXd H = without(forms.gamma2.to_dense(), ix);

    // split reduced coordinates into S1 (in Gamma's range) and S2
    std::vector<Eigen::Index> s1, s2;
    for (Eigen::Index i = 0, r = 0; i < n; ++i) {
        if (i == ix) continue;
        (d(x, b2[i]) == 1 ? s1 : s2).push_back(r++);
    }
    auto block = [](const Eigen::MatrixXd& m, const std::vector<Eigen::Index>& rows,
                    const std::vector<Eigen::Index>& cols) {
        Eigen::MatrixXd out(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
        return out;
    };

    BEReport r;
    r.vertex = x;
    Eigen::MatrixXd A = block(H, s1, s1), B = block(H, s1, s2), C = block(H, s2, s2), G1 = block(G, s1, s1);
    std::optional<double> schur;
    if (s2.empty() || min_eigenvalue(C) > 1e-12) {
        Eigen::MatrixXd Q = s2.empty() ? A : Eigen::MatrixXd(A - B * C.ldlt().solve(B.transpose()));
        Q = (Q + Q.transpose()) / 2;
        Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(Q, G1, Eigen::EigenvaluesOnly);
        schur = es.eigenvalues()(0);
    }

    // bisection on K with a PSD test of Gamma_2 - K Gamma
    auto feasible = [&](double k) { return is_psd(H - k * G); };
    double lo = schur ? *schur - 1.0 : -1.0, hi = schur ? *schur + 1.0 : 1.0;
    while (!feasible(lo)) lo -= 2 * (hi - lo);
    while (feasible(hi)) hi += 2 * (hi - lo);
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
        double mid = (lo + hi) / 2;
        (feasible(mid) ? lo : hi) = mid;
    }
    r.bisection_curvature = lo;
    r.schur_used = schur.has_value();
    r.curvature = schur.value_or(lo);

    if (g.regular_degree()) {
        r.upper_bound = be_upper_bound(g, d, x);
        r.is_sharp = std::abs(r.curvature - to_double(*r.upper_bound)) < kSharpTolerance;
        auto t = s1pp_sharpness_test(g, d, x);
        r.s1_out_regular = t.applicable;
        if (t.applicable) {
            r.s1pp_lambda1 = t.lambda1;
            r.s1pp_passes = t.passes;
        }
    }
    return r;
}

Rational be_upper_bound(const Graph& g, const DistanceOracle& d, Vertex x) {
    int D = require_regular(g);
    Rational by_triangles = Rational(2, D) + Rational(triangle_count(g, x), static_cast<std::int64_t>(D) * D);
    Rational by_out_degree = (3 + D - sphere_averages(g, d, x, 1).out) / (2 * D);
    if (by_triangles != by_out_degree)
        throw std::logic_error("upper bound expressions disagree: " + to_string(by_triangles) + " vs " +
                               to_string(by_out_degree));
    return by_triangles;
}

S1ppTest s1pp_sharpness_test(const Graph& g, const DistanceOracle& d, Vertex x) {
    int D = require_regular(g);
    S1ppTest t;
    auto s1 = d.sphere(x, 1);
    auto s2 = d.sphere(x, 2);
    if (s1.empty()) return t;
    int out0 = degree_triple(g, d, x, s1.front()).d_plus;
    for (Vertex y : s1)
        if (degree_triple(g, d, x, y).d_plus != out0) return t;
    t.applicable = true;

    const auto k = static_cast<Eigen::Index>(s1.size());
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(k, k);  // w'' = w + w'
    std::vector<int> in_degree(s2.size());
    for (std::size_t z = 0; z < s2.size(); ++z) in_degree[z] = degree_triple(g, d, x, s2[z]).d_minus;
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j) {
            if (i == j) continue;
            double weight = g.adjacent(s1[i], s1[j]) ? 1.0 : 0.0;
            for (std::size_t z = 0; z < s2.size(); ++z)
                if (g.adjacent(s1[i], s2[z]) && g.adjacent(s2[z], s1[j])) weight += 1.0 / in_degree[z];
            w(i, j) = weight;
        }
    // -Delta'' = diag(w 1) - w, positive semidefinite
    Eigen::MatrixXd lap = Eigen::MatrixXd(w.rowwise().sum().asDiagonal()) - w;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lap, Eigen::EigenvaluesOnly);
    // second-smallest eigenvalue with multiplicity, so a disconnected S1''
    // has gap 0; a single vertex has no gap at all
    t.lambda1 = k > 1 ? std::max(0.0, es.eigenvalues()(1)) : std::numeric_limits<double>::infinity();
    if (t.lambda1 < 1e-9) t.lambda1 = 0.0;
    t.passes = t.lambda1 >= D / 2.0 - kSharpTolerance;
    return t;
}

ConjectureReport conjecture_scan(const Graph& g, const DistanceOracle& d, int jobs) {
    require_connected(d);
    int D = require_regular(g);
    int L = d.diameter();
    std::vector<double> k(g.order());
    parallel_for(k.size(), jobs, [&](std::size_t v) { k[v] = be_curvature(g, d, static_cast<Vertex>(v)).curvature; });
    ConjectureReport r;
    r.minimizer = static_cast<Vertex>(std::min_element(k.begin(), k.end()) - k.begin());
    r.inf_curvature = k[r.minimizer];
    r.bound = Rational(1, D) + Rational(1, L);
    r.margin = to_double(r.bound) - r.inf_curvature;
    r.holds = r.inf_curvature <= to_double(r.bound) + 1e-9;
    int max_triangles = 0;
    for (Vertex v = 0; v < g.order(); ++v) max_triangles = std::max(max_triangles, triangle_count(g, v));
    r.weaker_bound = r.bound + Rational(max_triangles, 2 * static_cast<std::int64_t>(D) * D);
    r.weaker_holds = r.inf_curvature <= to_double(r.weaker_bound) + 1e-9;
    return r;
}

}  // namespace curvlab
