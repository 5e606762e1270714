#include "curvlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>

namespace curvlab {

namespace {

int common_count(const Graph& g, Vertex x, Vertex y) {
    auto a = g.row(x);
    auto b = g.row(y);
    int count = 0;
    for (std::size_t w = 0; w < a.size(); ++w) count += std::popcount(a[w] & b[w]);
    return count;
}

void check_vertex(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.order())
        throw Error(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v));
}

}  // namespace

Graph Graph::from_edges(int n, const std::vector<Edge>& edges, std::vector<std::string> labels) {
    if (n < 0) throw Error(ErrorKind::BadParam, "negative vertex count");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw Error(ErrorKind::BadParam, "label count differs from vertex count");
    Graph g;
    g.adj_.assign(n, {});
    g.words_ = (static_cast<std::size_t>(n) + 63) / 64;
    g.bits_.assign(static_cast<std::size_t>(n) * g.words_, 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(ErrorKind::VertexOutOfRange,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v) throw Error(ErrorKind::SelfLoop, "vertex " + std::to_string(u));
        if (g.adjacent(u, v))
            throw Error(ErrorKind::DuplicateEdge,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        g.bits_[static_cast<std::size_t>(u) * g.words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
        g.bits_[static_cast<std::size_t>(v) * g.words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    g.edge_count_ = edges.size();
    g.labels_ = std::move(labels);
    return g;
}

std::optional<int> Graph::regular_degree() const {
    if (adj_.empty()) return std::nullopt;
    int d = degree(0);
    for (Vertex v = 1; v < order(); ++v)
        if (degree(v) != d) return std::nullopt;
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < order(); ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::string Graph::label(Vertex v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

DistanceOracle::DistanceOracle(const Graph& g) : n_(g.order()) {
    dist_.assign(static_cast<std::size_t>(n_) * n_, kInfinity);
    std::vector<Vertex> queue(n_);
    for (Vertex s = 0; s < n_; ++s) {
        int* row = dist_.data() + static_cast<std::size_t>(s) * n_;
        row[s] = 0;
        std::size_t head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            Vertex u = queue[head++];
            for (Vertex w : g.neighbours(u)) {
                if (row[w] == kInfinity) {
                    row[w] = row[u] + 1;
                    queue[tail++] = w;
                }
            }
        }
        if (static_cast<int>(tail) != n_) connected_ = false;
        for (Vertex v = 0; v < n_; ++v)
            if (row[v] != kInfinity) diameter_ = std::max(diameter_, row[v]);
    }
}

int DistanceOracle::eccentricity(Vertex x) const {
    int e = 0;
    for (Vertex v = 0; v < n_; ++v) e = std::max(e, (*this)(x, v));
    return e;
}

std::vector<Vertex> DistanceOracle::sphere(Vertex x, int k) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; ++v)
        if ((*this)(x, v) == k) out.push_back(v);
    return out;
}

std::vector<Vertex> DistanceOracle::ball(Vertex x, int k) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; ++v)
        if ((*this)(x, v) <= k) out.push_back(v);
    return out;
}

DistanceOracle distances(const Graph& g) { return DistanceOracle(g); }

void require_connected(const DistanceOracle& d) {
    if (!d.is_connected() || d.order() == 0)
        throw Error(ErrorKind::Disconnected, "graph is not connected");
}

int require_regular(const Graph& g) {
    auto deg = g.regular_degree();
    if (!deg) throw Error(ErrorKind::NotRegular, "graph is not regular");
    return *deg;
}

bool SrgParams::matches(const SrgParams& o) const {
    if (nu != o.nu || k != o.k || mu != o.mu) return false;
    if (k == 0) return true;
    return lambda == o.lambda;
}

std::string SrgParams::to_string() const {
    return "(" + std::to_string(nu) + "," + std::to_string(k) + "," +
           (lambda ? std::to_string(*lambda) : std::string("*")) + "," + std::to_string(mu) + ")";
}

std::vector<Vertex> interval(const DistanceOracle& d, Vertex x, Vertex y) {
    std::vector<Vertex> out;
    int dxy = d(x, y);
    if (dxy == DistanceOracle::kInfinity) return out;
    for (Vertex z = 0; z < d.order(); ++z) {
        int a = d(x, z), b = d(z, y);
        if (a != DistanceOracle::kInfinity && b != DistanceOracle::kInfinity && a + b == dxy)
            out.push_back(z);
    }
    return out;
}

DegreeTriple degree_triple(const Graph& g, const DistanceOracle& d, Vertex x, Vertex y) {
    DegreeTriple t;
    int k = d(x, y);
    for (Vertex z : g.neighbours(y)) {
        int dz = d(x, z);
        if (dz == k - 1) ++t.d_minus;
        else if (dz == k) ++t.d_zero;
        else ++t.d_plus;
    }
    return t;
}

SphereAverages sphere_averages(const Graph& g, const DistanceOracle& d, Vertex x, int k) {
    auto s = d.sphere(x, k);
    if (s.empty())
        throw Error(ErrorKind::EmptySphere, "S_" + std::to_string(k) + "(" + std::to_string(x) + ")");
    std::int64_t in = 0, sph = 0, out = 0;
    for (Vertex y : s) {
        auto t = degree_triple(g, d, x, y);
        in += t.d_minus;
        sph += t.d_zero;
        out += t.d_plus;
    }
    auto n = static_cast<std::int64_t>(s.size());
    return {Rational(in, n), Rational(sph, n), Rational(out, n)};
}

int triangle_count(const Graph& g, Vertex x, Vertex y) {
    check_vertex(g, x);
    check_vertex(g, y);
    if (!g.adjacent(x, y))
        throw Error(ErrorKind::NotAnEdge, std::to_string(x) + "," + std::to_string(y));
    return common_count(g, x, y);
}

int triangle_count(const Graph& g, Vertex x) {
    int twice = 0;
    for (Vertex y : g.neighbours(x)) twice += common_count(g, x, y);
    return twice / 2;
}

std::vector<Vertex> common_neighbours(const Graph& g, Vertex x, Vertex y) {
    std::vector<Vertex> out;
    std::set_intersection(g.neighbours(x).begin(), g.neighbours(x).end(), g.neighbours(y).begin(),
                          g.neighbours(y).end(), std::back_inserter(out));
    return out;
}

Graph mu_graph(const Graph& g, const DistanceOracle& d, Vertex x, Vertex z) {
    if (d(x, z) != 2)
        throw Error(ErrorKind::WrongDistance, "mu-graph needs a distance-2 pair");
    return induced_subgraph(g, common_neighbours(g, x, z));
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j]))
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        if (!g.labels().empty()) labels.push_back(g.labels()[vertices[i]]);
    }
    return Graph::from_edges(static_cast<int>(vertices.size()), edges, std::move(labels));
}

std::optional<int> is_cocktail_party(const Graph& g) {
    int n = g.order();
    if (n < 2 || n % 2 != 0) return std::nullopt;
    auto deg = g.regular_degree();
    if (!deg || *deg != n - 2) return std::nullopt;
    return n / 2;
}

std::optional<SrgParams> is_strongly_regular(const Graph& g) {
    auto deg = g.regular_degree();
    if (!deg) return std::nullopt;
    int n = g.order();
    if (*deg == 0) return SrgParams{n, 0, std::nullopt, 0};
    if (*deg == n - 1) return std::nullopt;  // complete: mu undefined
    std::optional<int> lambda, mu;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            int c = common_count(g, u, v);
            auto& slot = g.adjacent(u, v) ? lambda : mu;
            if (!slot) slot = c;
            else if (*slot != c) return std::nullopt;
        }
    }
    return SrgParams{n, *deg, lambda, mu.value_or(0)};
}

std::optional<IntersectionArray> intersection_array(const Graph& g, const DistanceOracle& d) {
    auto deg = g.regular_degree();
    if (!deg || !d.is_connected()) return std::nullopt;
    int L = d.diameter();
    std::vector<int> b(L + 1, -1), c(L + 1, -1);
    for (Vertex x = 0; x < g.order(); ++x) {
        for (Vertex y = 0; y < g.order(); ++y) {
            int j = d(x, y);
            auto t = degree_triple(g, d, x, y);
            int cj = j == 0 ? 0 : t.d_minus;
            if (c[j] == -1) c[j] = cj, b[j] = t.d_plus;
            else if (c[j] != cj || b[j] != t.d_plus) return std::nullopt;
        }
    }
    IntersectionArray out;
    out.b.assign(b.begin(), b.begin() + L);
    out.c.assign(c.begin() + 1, c.end());
    return out;
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
    int n1 = g1.order(), n2 = g2.order();
    std::vector<Edge> edges;
    edges.reserve(g1.size() * n2 + g2.size() * n1);
    for (Vertex a = 0; a < n1; ++a)
        for (auto [u, v] : g2.edges()) edges.emplace_back(a * n2 + u, a * n2 + v);
    for (auto [u, v] : g1.edges())
        for (Vertex b = 0; b < n2; ++b) edges.emplace_back(u * n2 + b, v * n2 + b);
    std::vector<std::string> labels;
    if (!g1.labels().empty() || !g2.labels().empty()) {
        labels.reserve(static_cast<std::size_t>(n1) * n2);
        for (Vertex a = 0; a < n1; ++a)
            for (Vertex b = 0; b < n2; ++b)
                labels.push_back("(" + g1.label(a) + "," + g2.label(b) + ")");
    }
    return Graph::from_edges(n1 * n2, edges, std::move(labels));
}

PoleStructure poles_and_antipoles(const DistanceOracle& d) {
    require_connected(d);
    PoleStructure ps;
    ps.antipoles.resize(d.order());
    ps.self_centered = true;
    for (Vertex x = 0; x < d.order(); ++x) {
        ps.antipoles[x] = d.sphere(x, d.diameter());
        if (ps.antipoles[x].empty()) ps.self_centered = false;
    }
    return ps;
}

}  // namespace curvlab
