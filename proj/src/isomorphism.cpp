#include "curvlab/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace curvlab {

namespace {

using Colouring = std::vector<int>;

// Distance profile: counts of vertices at each distance (unreachable last).
std::vector<std::vector<int>> distance_profiles(const Graph& g) {
    DistanceOracle d(g);
    std::vector<std::vector<int>> out(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        auto& p = out[v];
        p.assign(g.order() + 1, 0);
        for (Vertex w = 0; w < g.order(); ++w) {
            int k = d(v, w);
            ++p[k == DistanceOracle::kInfinity ? g.order() : k];
        }
    }
    return out;
}

// Relabels signatures to dense colours shared by both graphs. Returns false if
// the colour class sizes differ between the graphs.
template <class Sig>
bool relabel(const std::vector<Sig>& sa, const std::vector<Sig>& sb, Colouring& ca, Colouring& cb) {
    std::map<Sig, std::pair<int, int>> counts;
    for (const auto& s : sa) ++counts[s].first;
    for (const auto& s : sb) ++counts[s].second;
    std::map<Sig, int> ids;
    int next = 0;
    for (const auto& [s, c] : counts) {
        if (c.first != c.second) return false;
        ids[s] = next++;
    }
    for (std::size_t i = 0; i < sa.size(); ++i) ca[i] = ids[sa[i]];
    for (std::size_t i = 0; i < sb.size(); ++i) cb[i] = ids[sb[i]];
    return true;
}

int colour_count(const Colouring& c) {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Refines to the coarsest equitable partition; false on a mismatch.
bool refine(const Graph& a, const Graph& b, Colouring& ca, Colouring& cb) {
    using Sig = std::pair<int, std::vector<int>>;
    int n = a.order();
    int classes = colour_count(ca);
    while (true) {
        std::vector<Sig> sa(n), sb(n);
        for (Vertex v = 0; v < n; ++v) {
            sa[v].first = ca[v];
            for (Vertex w : a.neighbours(v)) sa[v].second.push_back(ca[w]);
            std::sort(sa[v].second.begin(), sa[v].second.end());
            sb[v].first = cb[v];
            for (Vertex w : b.neighbours(v)) sb[v].second.push_back(cb[w]);
            std::sort(sb[v].second.begin(), sb[v].second.end());
        }
        if (!relabel(sa, sb, ca, cb)) return false;
        int now = colour_count(ca);
        if (now == classes) return true;
        classes = now;
    }
}

bool search(const Graph& a, const Graph& b, Colouring ca, Colouring cb, std::vector<Vertex>& phi) {
    if (!refine(a, b, ca, cb)) return false;
    int n = a.order();
    int classes = colour_count(ca);
    if (classes == n) {
        std::vector<Vertex> inv(n);
        for (Vertex w = 0; w < n; ++w) inv[cb[w]] = w;
        for (Vertex v = 0; v < n; ++v) phi[v] = inv[ca[v]];
        return is_isomorphism(a, b, phi);
    }
    // smallest non-singleton cell
    std::vector<int> size(classes, 0);
    for (int c : ca) ++size[c];
    int target = -1;
    for (int c = 0; c < classes; ++c)
        if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
    Vertex v = static_cast<Vertex>(std::find(ca.begin(), ca.end(), target) - ca.begin());
    for (Vertex w = 0; w < n; ++w) {
        if (cb[w] != target) continue;
        Colouring na = ca, nb = cb;
        na[v] = classes;
        nb[w] = classes;
        if (search(a, b, std::move(na), std::move(nb), phi)) return true;
    }
    return false;
}

}  // namespace

bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<Vertex>& phi) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    if (static_cast<int>(phi.size()) != a.order()) return false;
    std::vector<char> hit(b.order(), 0);
    for (Vertex v : phi) {
        if (v < 0 || v >= b.order() || hit[v]) return false;
        hit[v] = 1;
    }
    for (auto [u, v] : a.edges())
        if (!b.adjacent(phi[u], phi[v])) return false;
    return true;
}

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
    int n = a.order();
    if (n == 0) return std::vector<Vertex>{};
    auto pa = distance_profiles(a);
    auto pb = distance_profiles(b);
    Colouring ca(n), cb(n);
    if (!relabel(pa, pb, ca, cb)) return std::nullopt;
    std::vector<Vertex> phi(n);
    if (search(a, b, ca, cb, phi)) return phi;
    return std::nullopt;
}

}  // namespace curvlab
