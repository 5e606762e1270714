#include "curvlab/transport.hpp"
#include "curvlab/solvers.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace curvlab {

namespace {

void check_vertex(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.order()) throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v));
}

std::vector<Vertex> closed_neighbourhood(const Graph& g, Vertex x) {
    std::vector<Vertex> b(g.neighbours(x).begin(), g.neighbours(x).end());
    b.insert(std::lower_bound(b.begin(), b.end(), x), x);
    return b;
}

std::map<Vertex, Rational> nonzero(const std::map<Vertex, Rational>& m) {
    std::map<Vertex, Rational> out;
    for (const auto& [v, r] : m)
        if (r != 0) out.emplace(v, r);
    return out;
}

// Waypoints of z under T_j for consecutive steps of path (no length check).
std::vector<Vertex> push_forward(const Graph& g, const DistanceOracle& d, const std::vector<Vertex>& path, Vertex z) {
    std::vector<Vertex> out{z};
    for (std::size_t j = 1; j < path.size(); ++j) {
        auto t = unique_tpm_transport_map(g, d, path[j - 1], path[j]);
        out.push_back(t.assignment.at(out.back()));
    }
    return out;
}

void append_geodesic(const Graph& g, const DistanceOracle& d, std::vector<Vertex>& path, Vertex target) {
    Vertex cur = path.back();
    while (cur != target) {
        Vertex next = -1;
        for (Vertex w : g.neighbours(cur))
            if (d(w, target) == d(cur, target) - 1) {
                next = w;
                break;
            }
        if (next < 0) throw Error(ErrorKind::Disconnected, "no path to target");
        path.push_back(next);
        cur = next;
    }
}

}  // namespace

Rational Measure::total() const {
    Rational t = 0;
    for (const auto& [v, m] : mass) t += m;
    return t;
}

Rational Measure::at(Vertex v) const {
    auto it = mass.find(v);
    return it == mass.end() ? Rational(0) : it->second;
}

Rational TransportPlan::cost(const DistanceOracle& d) const {
    Rational c = 0;
    for (const auto& [uv, m] : entries) c += m * d(uv.first, uv.second);
    return c;
}

Measure TransportPlan::source_marginal() const {
    Measure out;
    for (const auto& [uv, m] : entries) out.mass[uv.first] += m;
    return out;
}

Measure TransportPlan::target_marginal() const {
    Measure out;
    for (const auto& [uv, m] : entries) out.mass[uv.second] += m;
    return out;
}

nlohmann::json to_json(const TransportPlan& plan) {
    auto entries = nlohmann::json::array();
    for (const auto& [uv, m] : plan.entries) entries.push_back({uv.first, uv.second, to_string(m)});
    return nlohmann::json{{"entries", std::move(entries)}};
}

std::string_view to_string(Method m) {
    switch (m) {
        case Method::Assignment: return "assignment";
        case Method::MatchingFastPath: return "matching";
        case Method::ProductFormula: return "product";
    }
    return "unknown";
}

Measure idle_measure(const Graph& g, Vertex x, const Rational& p) {
    check_vertex(g, x);
    if (p < 0 || p > 1) throw Error(ErrorKind::BadIdleness, "idleness must lie in [0,1], got " + to_string(p));
    Measure m;
    if (p != 0) m.mass[x] = p;
    if (p != 1) {
        if (g.degree(x) == 0) throw Error(ErrorKind::IsolatedVertex, "vertex " + std::to_string(x));
        Rational each = (1 - p) / g.degree(x);
        for (Vertex y : g.neighbours(x)) m.mass[y] = each;
    }
    return m;
}

WassersteinResult wasserstein(const DistanceOracle& d, const Measure& m1, const Measure& m2) {
    auto a = nonzero(m1.mass);
    auto b = nonzero(m2.mass);
    for (const auto* m : {&a, &b})
        for (const auto& [v, r] : *m)
            if (r < 0) throw Error(ErrorKind::BadParam, "negative mass");
    if (m1.total() != m2.total()) throw Error(ErrorKind::BadParam, "measures have different total mass");
    std::vector<Vertex> src, dst;
    std::vector<Rational> ms, md;
    for (const auto& [v, r] : a) src.push_back(v), ms.push_back(r);
    for (const auto& [v, r] : b) dst.push_back(v), md.push_back(r);
    for (Vertex u : src)
        for (Vertex v : dst)
            if (d(u, v) == DistanceOracle::kInfinity)
                throw Error(ErrorKind::Disconnected, "supports lie in different components");

    WassersteinResult out;
    if (src.empty()) return out;
    const Rational unit = ms.front();
    bool uniform = src.size() == dst.size() && std::all_of(ms.begin(), ms.end(), [&](auto r) { return r == unit; }) &&
                   std::all_of(md.begin(), md.end(), [&](auto r) { return r == unit; });
    if (uniform) {
        std::vector<std::vector<std::int64_t>> cost(src.size(), std::vector<std::int64_t>(dst.size()));
        for (std::size_t i = 0; i < src.size(); ++i)
            for (std::size_t j = 0; j < dst.size(); ++j) cost[i][j] = d(src[i], dst[j]);
        auto sol = solve_assignment(cost);
        for (std::size_t i = 0; i < src.size(); ++i) out.plan.entries[{src[i], dst[sol.column_of_row[i]]}] += unit;
        out.distance = unit * sol.cost;
        return out;
    }
    std::int64_t scale = 1;
    for (const auto& r : ms) scale = std::lcm(scale, r.denominator());
    for (const auto& r : md) scale = std::lcm(scale, r.denominator());
    std::vector<std::int64_t> supply, demand;
    for (const auto& r : ms) supply.push_back((r * scale).numerator());
    for (const auto& r : md) demand.push_back((r * scale).numerator());
    std::vector<std::vector<std::int64_t>> cost(src.size(), std::vector<std::int64_t>(dst.size()));
    for (std::size_t i = 0; i < src.size(); ++i)
        for (std::size_t j = 0; j < dst.size(); ++j) cost[i][j] = d(src[i], dst[j]);
    auto sol = solve_transportation(supply, demand, cost);
    for (std::size_t i = 0; i < src.size(); ++i)
        for (std::size_t j = 0; j < dst.size(); ++j)
            if (sol.flow[i][j] > 0) out.plan.entries[{src[i], dst[j]}] = Rational(sol.flow[i][j], scale);
    out.distance = Rational(sol.cost, scale);
    return out;
}

CurvatureValue kappa_p(const Graph& g, const DistanceOracle& d, Vertex x, Vertex y, const Rational& p) {
    check_vertex(g, x);
    check_vertex(g, y);
    if (x == y) throw Error(ErrorKind::SamePair, "x = y");
    require_regular(g);
    require_connected(d);
    auto w = wasserstein(d, idle_measure(g, x, p), idle_measure(g, y, p));
    return {1 - w.distance / d(x, y), Flavour::KappaP, p, Method::Assignment};
}

WassersteinResult optimal_plan(const Graph& g, const DistanceOracle& d, Vertex x, Vertex y) {
    int D = require_regular(g);
    return wasserstein(d, idle_measure(g, x, Rational(1, D + 1)), idle_measure(g, y, Rational(1, D + 1)));
}

CurvatureValue kappa_by_assignment(const Graph& g, const DistanceOracle& d, Vertex x, Vertex y) {
    check_vertex(g, x);
    check_vertex(g, y);
    if (x == y) throw Error(ErrorKind::SamePair, "x = y");
    int D = require_regular(g);
    require_connected(d);
    if (D == 0) throw Error(ErrorKind::IsolatedVertex, "degree 0");
    auto bx = closed_neighbourhood(g, x);
    auto by = closed_neighbourhood(g, y);
    std::vector<std::vector<std::int64_t>> cost(bx.size(), std::vector<std::int64_t>(by.size()));
    for (std::size_t i = 0; i < bx.size(); ++i)
        for (std::size_t j = 0; j < by.size(); ++j) cost[i][j] = d(bx[i], by[j]);
    auto sol = solve_assignment(cost);
    // kappa = (D+1)/D * (1 - (C/(D+1)) / k) = (D+1)/D - C/(D k)
    Rational value = Rational(D + 1, D) - Rational(sol.cost, static_cast<std::int64_t>(D) * d(x, y));
    return {value, Flavour::Kappa, Rational(1, D + 1), Method::Assignment};
}

CurvatureValue kappa(const Graph& g, const DistanceOracle& d, Vertex x, Vertex y) {
    check_vertex(g, x);
    check_vertex(g, y);
    if (x == y) throw Error(ErrorKind::SamePair, "x = y");
    require_regular(g);
    require_connected(d);
    if (g.adjacent(x, y))
        if (auto fast = curvature_via_matching(g, d, x, y)) return *fast;
    return kappa_by_assignment(g, d, x, y);
}

CurvatureValue kappa_lly(const Graph& g, const DistanceOracle& d, Vertex x, Vertex y) {
    auto v = kappa(g, d, x, y);
    v.flavour = Flavour::KappaLLY;
    return v;
}

NeighbourhoodSplit split_neighbourhoods(const Graph& g, Vertex x, Vertex y) {
    NeighbourhoodSplit s;
    for (Vertex v : g.neighbours(x)) {
        if (v == y) continue;
        (g.adjacent(v, y) ? s.common : s.left).push_back(v);
    }
    for (Vertex v : g.neighbours(y))
        if (v != x && !g.adjacent(v, x)) s.right.push_back(v);
    return s;
}

std::vector<Edge> remainder_matching(const Graph& g, Vertex x, Vertex y) {
    auto s = split_neighbourhoods(g, x, y);
    std::vector<std::vector<int>> adj(s.left.size());
    for (std::size_t i = 0; i < s.left.size(); ++i)
        for (std::size_t j = 0; j < s.right.size(); ++j)
            if (g.adjacent(s.left[i], s.right[j])) adj[i].push_back(static_cast<int>(j));
    auto match = maximum_matching(static_cast<int>(s.right.size()), adj);
    std::vector<Edge> out;
    for (std::size_t i = 0; i < s.left.size(); ++i)
        if (match[i] >= 0) out.emplace_back(s.left[i], s.right[match[i]]);
    return out;
}

std::optional<CurvatureValue> curvature_via_matching(const Graph& g, const DistanceOracle& d, Vertex x, Vertex y) {
    check_vertex(g, x);
    check_vertex(g, y);
    if (!g.adjacent(x, y)) throw Error(ErrorKind::NotAnEdge, std::to_string(x) + "," + std::to_string(y));
    int D = require_regular(g);
    (void)d;
    auto s = split_neighbourhoods(g, x, y);
    auto matching = remainder_matching(g, x, y);
    if (matching.size() != s.left.size() || s.left.size() != s.right.size()) return std::nullopt;
    int m = static_cast<int>(s.common.size());
    return CurvatureValue{Rational(2 + m, D), Flavour::Kappa, Rational(1, D + 1), Method::MatchingFastPath};
}

bool certify_duality(const DistanceOracle& d, const Measure& m1, const Measure& m2, const TransportPlan& plan,
                     const std::vector<Rational>& phi) {
    std::set<Vertex> support;
    for (const auto& [v, r] : m1.mass) support.insert(v);
    for (const auto& [v, r] : m2.mass) support.insert(v);
    for (const auto& [uv, r] : plan.entries) support.insert(uv.first), support.insert(uv.second);
    for (Vertex v : support)
        if (v < 0 || v >= static_cast<Vertex>(phi.size()))
            throw Error(ErrorKind::BadParam, "potential undefined at vertex " + std::to_string(v));
    for (Vertex u : support)
        for (Vertex v : support)
            if (u < v && abs(phi[u] - phi[v]) > d(u, v))
                throw Error(ErrorKind::NotLipschitz,
                            "|phi(" + std::to_string(u) + ") - phi(" + std::to_string(v) + ")| > d");
    for (const auto& [uv, r] : plan.entries)
        if (r < 0) return false;
    if (nonzero(plan.source_marginal().mass) != nonzero(m1.mass)) return false;
    if (nonzero(plan.target_marginal().mass) != nonzero(m2.mass)) return false;
    Rational dual = 0;
    for (Vertex v : support) dual += phi[v] * (m1.at(v) - m2.at(v));
    return plan.cost(d) == dual;
}

Rational TransportMap::cost() const {
    Rational c = 0;
    for (const auto& [v, k] : displacement) c += unit_mass * k;
    return c;
}

TransportPlan TransportMap::plan() const {
    TransportPlan p;
    for (const auto& [u, v] : assignment) p.entries[{u, v}] = unit_mass;
    return p;
}

TransportMap tpm_transport_map(const Graph& g, const DistanceOracle& d, Vertex x, Vertex y,
                               const std::vector<Edge>& matching) {
    check_vertex(g, x);
    check_vertex(g, y);
    if (!g.adjacent(x, y)) throw Error(ErrorKind::NotAnEdge, std::to_string(x) + "," + std::to_string(y));
    int D = require_regular(g);
    auto s = split_neighbourhoods(g, x, y);
    std::set<Vertex> left(s.left.begin(), s.left.end()), right(s.right.begin(), s.right.end());
    if (matching.size() != left.size() || left.size() != right.size())
        throw Error(ErrorKind::NotPerfectMatching, "matching does not cover the remainders");
    TransportMap t;
    t.unit_mass = Rational(1, D + 1);
    for (Vertex v : s.common) t.assignment[v] = v;
    t.assignment[x] = x;
    t.assignment[y] = y;
    for (auto [a, b] : matching) {
        if (!left.erase(a) || !right.erase(b) || !g.adjacent(a, b))
            throw Error(ErrorKind::NotPerfectMatching,
                        "pair (" + std::to_string(a) + "," + std::to_string(b) + ") is not admissible");
        t.assignment[a] = b;
    }
    for (const auto& [u, v] : t.assignment) t.displacement[u] = d(u, v);
    return t;
}

TransportMap unique_tpm_transport_map(const Graph& g, const DistanceOracle& d, Vertex x, Vertex y) {
    auto s = split_neighbourhoods(g, x, y);
    auto matching = remainder_matching(g, x, y);
    if (matching.size() != s.left.size() || s.left.size() != s.right.size())
        throw Error(ErrorKind::NotBMSharp, "no perfect matching on edge " + std::to_string(x) + "," + std::to_string(y));
    // forced when every remainder vertex has a single admissible partner;
    // otherwise look for a second perfect matching avoiding one used pair
    auto partners = [&](Vertex v, const std::vector<Vertex>& other) {
        return std::count_if(other.begin(), other.end(), [&](Vertex w) { return g.adjacent(v, w); });
    };
    bool forced = std::all_of(s.left.begin(), s.left.end(), [&](Vertex v) { return partners(v, s.right) == 1; }) &&
                  std::all_of(s.right.begin(), s.right.end(), [&](Vertex v) { return partners(v, s.left) == 1; });
    if (!forced) {
        for (auto [a, b] : matching) {
            std::vector<std::vector<int>> adj(s.left.size());
            for (std::size_t i = 0; i < s.left.size(); ++i)
                for (std::size_t j = 0; j < s.right.size(); ++j)
                    if (g.adjacent(s.left[i], s.right[j]) && !(s.left[i] == a && s.right[j] == b))
                        adj[i].push_back(static_cast<int>(j));
            auto alt = maximum_matching(static_cast<int>(s.right.size()), adj);
            if (std::count(alt.begin(), alt.end(), -1) == 0)
                throw Error(ErrorKind::AmbiguousTransportMap,
                            "edge " + std::to_string(x) + "," + std::to_string(y) + " has several transport maps");
        }
    }
    return tpm_transport_map(g, d, x, y, matching);
}

TransportGeodesic transport_geodesic(const Graph& g, const DistanceOracle& d, const std::vector<Vertex>& path,
                                     Vertex z) {
    require_connected(d);
    int L = d.diameter();
    if (static_cast<int>(path.size()) != L + 1 || d(path.front(), path.back()) != L)
        throw Error(ErrorKind::NotFullLength, "path must be a geodesic of length diam = " + std::to_string(L));
    for (std::size_t j = 1; j < path.size(); ++j)
        if (!g.adjacent(path[j - 1], path[j])) throw Error(ErrorKind::NotFullLength, "path has a non-edge step");
    check_vertex(g, z);
    if (d(path.front(), z) > 1) throw Error(ErrorKind::BadParam, "z must lie in B1(x_0)");
    TransportGeodesic out;
    out.base = path;
    out.waypoints = push_forward(g, d, path, z);
    out.length = d(out.waypoints.front(), out.waypoints.back());
    int steps = 0;
    for (std::size_t j = 1; j < out.waypoints.size(); ++j) steps += d(out.waypoints[j - 1], out.waypoints[j]);
    out.geodesic = steps == out.length;
    return out;
}

std::vector<Vertex> geodesic_through(const DistanceOracle& d, const Graph& g, const std::vector<Vertex>& stops) {
    if (stops.empty()) throw Error(ErrorKind::BadParam, "no stops");
    require_connected(d);
    std::vector<Vertex> path{stops.front()};
    for (std::size_t i = 1; i < stops.size(); ++i) {
        if (d(stops.front(), stops[i]) != d(stops.front(), stops[i - 1]) + d(stops[i - 1], stops[i]))
            throw Error(ErrorKind::BadParam, "stops are not on a common geodesic");
        append_geodesic(g, d, path, stops[i]);
    }
    Vertex x = stops.front();
    int L = d.diameter();
    if (d(x, path.back()) < L) {
        Vertex end = -1;
        for (Vertex w = 0; w < d.order() && end < 0; ++w)
            if (d(x, w) == L && d(x, path.back()) + d(path.back(), w) == L) end = w;
        if (end < 0) throw Error(ErrorKind::NotFullLength, "no diameter geodesic extends the stops");
        append_geodesic(g, d, path, end);
    }
    return path;
}

std::optional<Vertex> interval_antipole_brute_force(const DistanceOracle& d, Vertex x, Vertex y, Vertex x1) {
    std::optional<Vertex> found;
    for (Vertex z : interval(d, x, y)) {
        if (d(x1, z) != d(x, y)) continue;
        if (found) return std::nullopt;  // not unique
        found = z;
    }
    return found;
}

Vertex interval_antipole(const Graph& g, const DistanceOracle& d, Vertex x, Vertex y, Vertex x1) {
    check_vertex(g, x);
    check_vertex(g, y);
    check_vertex(g, x1);
    int k = d(x, y);
    if (x == y || d(x, x1) != 1 || d(x1, y) != k - 1)
        throw Error(ErrorKind::BadParam, "x1 must be a neighbour of x inside [x,y]");
    auto brute = interval_antipole_brute_force(d, x, y, x1);
    if (!brute) throw Error(ErrorKind::NoAntipole, "no unique antipole of x1 in [x,y]");
    std::vector<Vertex> path{x};
    append_geodesic(g, d, path, x1);
    append_geodesic(g, d, path, y);
    Vertex via = push_forward(g, d, path, x).back();
    if (via != *brute)
        throw Error(ErrorKind::NoAntipole, "transport gives " + std::to_string(via) + ", brute force gives " +
                                               std::to_string(*brute));
    return via;
}

std::map<Vertex, Vertex> switching_map(const Graph& g, const DistanceOracle& d, Vertex x, Vertex y) {
    auto mu = mu_graph(g, d, x, y);
    if (!is_cocktail_party(mu)) throw Error(ErrorKind::MuGraphNotCP, "mu-graph is not a cocktail party graph");
    auto common = common_neighbours(g, x, y);
    std::map<Vertex, Vertex> sigma;
    for (Vertex a : common)
        for (Vertex b : common)
            if (a != b && !g.adjacent(a, b)) sigma[a] = b;
    return sigma;
}

CurvatureValue kappa_product_edge(const Graph& g1, const DistanceOracle& d1, const Graph& g2,
                                  const DistanceOracle& d2, Vertex u, Vertex v) {
    int n2 = g2.order();
    int D1 = require_regular(g1), D2 = require_regular(g2);
    Vertex a1 = u / n2, b1 = u % n2, a2 = v / n2, b2 = v % n2;
    CurvatureValue out;
    if (b1 == b2 && a1 != a2 && g1.adjacent(a1, a2)) {
        out = kappa(g1, d1, a1, a2);
        out.value *= Rational(D1, D1 + D2);
    } else if (a1 == a2 && b1 != b2 && g2.adjacent(b1, b2)) {
        out = kappa(g2, d2, b1, b2);
        out.value *= Rational(D2, D1 + D2);
    } else {
        throw Error(ErrorKind::NotAnEdge, std::to_string(u) + "," + std::to_string(v));
    }
    out.method = Method::ProductFormula;
    out.p = Rational(1, D1 + D2 + 1);
    return out;
}

}  // namespace curvlab
