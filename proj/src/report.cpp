#include "curvlab/report.hpp"

#include "curvlab/bakry_emery.hpp"
#include "curvlab/families.hpp"
#include "curvlab/sharpness.hpp"
#include "curvlab/spectral.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace curvlab {

double round12(double x) {
    if (!std::isfinite(x)) return x;
    if (std::abs(x) < 1e-12) return 0.0;  // eigen-solver noise around zero
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

namespace {

nlohmann::json float_or_null(double x) {
    if (!std::isfinite(x)) return nullptr;
    return round12(x);
}

nlohmann::json srg_json(const SrgParams& p) {
    nlohmann::json j;
    j["nu"] = p.nu;
    j["k"] = p.k;
    j["lambda"] = p.lambda ? nlohmann::json(*p.lambda) : nlohmann::json("*");
    j["mu"] = p.mu;
    return j;
}

}  // namespace

nlohmann::json analyze(const Graph& g, const AnalysisOptions& opts) {
    DistanceOracle d(g);
    require_connected(d);
    int D = require_regular(g);
    int L = d.diameter();

    nlohmann::json r;
    r["graph"] = {{"name", opts.name}, {"vertices", g.order()}, {"edges", g.size()}};
    r["D"] = D;
    r["L"] = L;

    auto bm = bm_sharpness(g, d, opts.jobs);
    r["inf_kappa"] = to_string(bm.inf_edge_kappa);
    r["bm_sharp"] = bm.is_bm_sharp;
    r["witness_edge"] = {bm.witness_edge.first, bm.witness_edge.second};
    r["dl_constraints"] = {{"L_le_D", bm.diameter_at_most_degree}, {"L_divides_2D", bm.diameter_divides_twice_degree}};

    auto spec = spectral_summary(g);
    r["spectral"] = {{"lambda1", round12(spec.lambda1)},
                     {"lambda1_multiplicity", spec.lambda1_multiplicity},
                     {"theta1", round12(spec.theta1)}};

    auto lich = is_lichnerowicz_sharp(g, d);
    r["lichnerowicz_sharp"] = lich.sharp;

    // Lambda(m) at the value m = 2D/L - 2 tied to Bonnet-Myers sharpness.
    nlohmann::json lm;
    if (L > 0 && (2 * D) % L == 0 && 2 * D / L >= 2) {
        int m = 2 * D / L - 2;
        auto v = lambda_m_check(g, d, m);
        lm = {{"m", m}, {"passes", v.passes}, {"failing_edges", v.failing_edges.size()}};
    }
    r["lambda_m"] = lm;

    auto poles = poles_and_antipoles(d);
    r["self_centered"] = poles.self_centered;

    if (opts.skip_spherical) {
        r["strongly_spherical"] = nullptr;
    } else {
        auto s = is_strongly_spherical(g, d, IntervalMetric::Induced, opts.jobs);
        r["strongly_spherical"] = s.strongly_spherical;
    }

    auto mu = mu_graphs_all_cp(g, d);
    nlohmann::json counts = nlohmann::json::object();
    for (auto [m, c] : mu.m_counts) counts["CP(" + std::to_string(m) + ")"] = c;
    r["mu_graphs"] = {{"all_cp", mu.all_cp}, {"counts", counts}};

    try {
        auto ls = local_srg_check(g, d);
        r["local_srg"] = {{"applicable", true},
                          {"ok", ls.ok},
                          {"expected", srg_json(ls.expected)},
                          {"expected_theta", to_string(ls.expected_theta)}};
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::PreconditionUnmet) throw;
        r["local_srg"] = {{"applicable", false}};
    }

    auto srg = is_strongly_regular(g);
    r["srg"] = srg ? srg_json(*srg) : nlohmann::json(nullptr);
    auto ia = intersection_array(g, d);
    r["intersection_array"] = ia ? nlohmann::json{{"b", ia->b}, {"c", ia->c}} : nlohmann::json(nullptr);

    auto cls = classify(g, d);
    r["classification"] = {{"matched", cls.matched ? nlohmann::json(to_string(*cls.matched)) : nlohmann::json(nullptr)},
                           {"in_classified_territory", cls.in_classified_territory},
                           {"reason", cls.reason}};

    if (opts.skip_be) {
        r["bakry_emery"] = nullptr;
    } else {
        auto c = conjecture_scan(g, d, opts.jobs);
        r["bakry_emery"] = {{"inf_curvature", float_or_null(c.inf_curvature)},
                            {"minimizer", c.minimizer},
                            {"bound", to_string(c.bound)},
                            {"holds", c.holds},
                            {"weaker_bound", to_string(c.weaker_bound)},
                            {"weaker_holds", c.weaker_holds}};
    }
    return r;
}

}  // namespace curvlab
