#include "curvlab/families.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace curvlab {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw Error(ErrorKind::BadParam, msg);
}

std::string bits_label(std::uint32_t v, int n) {
    std::string s(n, '0');
    for (int i = 0; i < n; ++i)
        if ((v >> (n - 1 - i)) & 1u) s[i] = '1';
    return s;
}

std::string subset_label(std::uint32_t mask) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < 32; ++i) {
        if (!((mask >> i) & 1u)) continue;
        if (!first) s += ",";
        s += std::to_string(i + 1);
        first = false;
    }
    return s + "}";
}

// k-subsets of {0..n-1} as bitmasks, in lexicographic order of sorted elements.
std::vector<std::uint32_t> subsets(int n, int k) {
    std::vector<std::uint32_t> out;
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
        std::uint32_t m = 0;
        for (int i : pick) m |= 1u << i;
        out.push_back(m);
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

// Graph on subsets where adjacency depends on the intersection size.
template <class Pred>
Graph subset_graph(int n, int k, Pred adjacent_if) {
    auto sets = subsets(n, k);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (adjacent_if(std::popcount(sets[i] & sets[j])))
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    std::vector<std::string> labels;
    for (auto m : sets) labels.push_back(subset_label(m));
    return Graph::from_edges(static_cast<int>(sets.size()), edges, std::move(labels));
}

Graph power(const Graph& g, int d) {
    Graph out = g;
    for (int i = 1; i < d; ++i) out = cartesian_product(out, g);
    return out;
}

struct NameEntry {
    Family family;
    std::string_view name;
};

constexpr NameEntry kNames[] = {
    {Family::Hypercube, "hypercube"},       {Family::CocktailParty, "cocktailparty"},
    {Family::Complete, "complete"},         {Family::Johnson, "johnson"},
    {Family::Kneser, "kneser"},             {Family::DemiCube, "demicube"},
    {Family::Gosset, "gosset"},             {Family::Schlafli, "schlafli"},
    {Family::Shrikhande, "shrikhande"},     {Family::Hamming, "hamming"},
    {Family::Doob, "doob"},                 {Family::Lattice, "lattice"},
    {Family::Triangular, "triangular"},     {Family::Product, "product"},
};

std::size_t param_count(Family f) {
    switch (f) {
        case Family::Gosset:
        case Family::Schlafli:
        case Family::Shrikhande:
        case Family::Product: return 0;
        case Family::Johnson:
        case Family::Kneser:
        case Family::Hamming:
        case Family::Doob: return 2;
        default: return 1;
    }
}

}  // namespace

std::string_view family_name(Family f) {
    for (const auto& e : kNames)
        if (e.family == f) return e.name;
    return "unknown";
}

Family family_from_name(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    lower.erase(std::remove_if(lower.begin(), lower.end(), [](char c) { return c == '_' || c == '-'; }),
                lower.end());
    for (const auto& e : kNames)
        if (e.name == lower) return e.family;
    throw Error(ErrorKind::BadParam, "unknown family '" + std::string(name) + "'");
}

std::string to_string(const FamilySpec& spec) {
    std::string s(family_name(spec.family));
    if (spec.family == Family::Product) {
        s += "(";
        for (std::size_t i = 0; i < spec.factors.size(); ++i) {
            if (i) s += ",";
            s += to_string(spec.factors[i]);
        }
        return s + ")";
    }
    for (int p : spec.params) s += ":" + std::to_string(p);
    return s;
}

FamilySpec parse_family_token(std::string_view token) {
    FamilySpec spec;
    if (auto open = token.find('('); open != std::string_view::npos) {
        require(token.back() == ')', "unbalanced parentheses in '" + std::string(token) + "'");
        spec.family = family_from_name(token.substr(0, open));
        require(spec.family == Family::Product, "only product takes factor arguments");
        auto inner = token.substr(open + 1, token.size() - open - 2);
        int depth = 0;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= inner.size(); ++i) {
            if (i == inner.size() || (inner[i] == ',' && depth == 0)) {
                spec.factors.push_back(parse_family_token(inner.substr(start, i - start)));
                start = i + 1;
            } else if (inner[i] == '(') {
                ++depth;
            } else if (inner[i] == ')') {
                --depth;
            }
        }
        return spec;
    }
    auto colon = token.find(':');
    spec.family = family_from_name(token.substr(0, colon));
    while (colon != std::string_view::npos) {
        token.remove_prefix(colon + 1);
        colon = token.find(':');
        auto part = std::string(token.substr(0, colon));
        try {
            std::size_t used = 0;
            spec.params.push_back(std::stoi(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw Error(ErrorKind::BadParam, "bad integer parameter '" + part + "'");
        }
    }
    return spec;
}

nlohmann::json to_json(const FamilySpec& spec) {
    nlohmann::json j;
    j["family"] = std::string(family_name(spec.family));
    j["params"] = spec.params;
    auto factors = nlohmann::json::array();
    for (const auto& f : spec.factors) factors.push_back(to_json(f));
    j["factors"] = std::move(factors);
    return j;
}

FamilySpec family_spec_from_json(const nlohmann::json& j) {
    try {
        FamilySpec spec;
        spec.family = family_from_name(j.at("family").get<std::string>());
        if (j.contains("params")) spec.params = j["params"].get<std::vector<int>>();
        if (j.contains("factors"))
            for (const auto& f : j["factors"]) spec.factors.push_back(family_spec_from_json(f));
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::BadParam, std::string("family spec JSON: ") + e.what());
    }
}

Graph from_spec(const FamilySpec& spec) {
    if (spec.family == Family::Product) {
        require(spec.factors.size() >= 2, "product needs at least two factors");
        require(spec.params.empty(), "product takes no parameters");
        std::vector<Graph> gs;
        for (const auto& f : spec.factors) gs.push_back(from_spec(f));
        return product(gs);
    }
    require(spec.factors.empty(), std::string(family_name(spec.family)) + " takes no factors");
    require(spec.params.size() == param_count(spec.family),
            std::string(family_name(spec.family)) + " expects " +
                std::to_string(param_count(spec.family)) + " parameter(s)");
    const auto& p = spec.params;
    switch (spec.family) {
        case Family::Hypercube: return hypercube(p[0]);
        case Family::CocktailParty: return cocktail_party(p[0]);
        case Family::Complete: return complete_graph(p[0]);
        case Family::Johnson: return johnson(p[0], p[1]);
        case Family::Kneser: return kneser(p[0], p[1]);
        case Family::DemiCube: return demi_cube(p[0]);
        case Family::Gosset: return gosset();
        case Family::Schlafli: return schlafli();
        case Family::Shrikhande: return shrikhande();
        case Family::Hamming: return hamming(p[0], p[1]);
        case Family::Doob: return doob(p[0], p[1]);
        case Family::Lattice: return lattice(p[0]);
        case Family::Triangular: return triangular(p[0]);
        case Family::Product: break;
    }
    throw Error(ErrorKind::BadParam, "unhandled family");
}

Graph hypercube(int n) {
    require(n >= 1 && n <= 20, "hypercube needs 1 <= n <= 20");
    std::uint32_t count = 1u << n;
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (std::uint32_t v = 0; v < count; ++v) {
        labels.push_back(bits_label(v, n));
        for (int i = 0; i < n; ++i) {
            std::uint32_t w = v ^ (1u << i);
            if (v < w) edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(w));
        }
    }
    return Graph::from_edges(static_cast<int>(count), edges, std::move(labels));
}

Graph cocktail_party(int n) {
    require(n >= 1, "cocktail party needs n >= 1");
    // u_i = 2i, v_i = 2i+1; adjacent unless they share the subscript
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (int a = 0; a < 2 * n; ++a) {
        labels.push_back((a % 2 ? "v" : "u") + std::to_string(a / 2 + 1));
        for (int b = a + 1; b < 2 * n; ++b)
            if (a / 2 != b / 2) edges.emplace_back(a, b);
    }
    return Graph::from_edges(2 * n, edges, std::move(labels));
}

Graph complete_graph(int n) {
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    return Graph::from_edges(n, edges);
}

Graph johnson(int n, int k) {
    require(k >= 1 && k <= n - 1 && n <= 30, "johnson needs 1 <= k <= n-1, n <= 30");
    return subset_graph(n, k, [k](int common) { return common == k - 1; });
}

Graph kneser(int n, int k) {
    require(k >= 1 && n >= 2 * k && n <= 30, "kneser needs k >= 1, n >= 2k, n <= 30");
    return subset_graph(n, k, [](int common) { return common == 0; });
}

Graph demi_cube(int n) {
    require(n >= 2 && n <= 20, "demi-cube needs 2 <= n <= 20");
    std::vector<std::uint32_t> verts;
    for (std::uint32_t v = 0; v < (1u << n); ++v)
        if (std::popcount(v) % 2 == 0) verts.push_back(v);
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        labels.push_back(bits_label(verts[i], n));
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (std::popcount(verts[i] ^ verts[j]) == 2)
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
    return Graph::from_edges(static_cast<int>(verts.size()), edges, std::move(labels));
}

Graph gosset() {
    // two copies of the 28 pairs of an 8-set; index i < 28 is {a,b}, i + 28 is {a,b}'
    auto pairs = subsets(8, 2);
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (auto m : pairs) labels.push_back(subset_label(m));
    for (auto m : pairs) labels.push_back(subset_label(m) + "'");
    for (int i = 0; i < 28; ++i) {
        for (int j = i + 1; j < 28; ++j) {
            if (std::popcount(pairs[i] & pairs[j]) == 1) {
                edges.emplace_back(i, j);
                edges.emplace_back(i + 28, j + 28);
            }
        }
        for (int j = 0; j < 28; ++j)
            if ((pairs[i] & pairs[j]) == 0) edges.emplace_back(i, j + 28);
    }
    return Graph::from_edges(56, edges, std::move(labels));
}

Graph schlafli() {
    Graph g = gosset();
    std::vector<Vertex> nb(g.neighbours(0).begin(), g.neighbours(0).end());
    return induced_subgraph(g, nb);
}

Graph shrikhande() {
    const int shifts[6][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (int v = 0; v < 16; ++v) {
        int a = v / 4, b = v % 4;
        labels.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
        for (const auto& s : shifts) {
            int w = ((a + s[0]) % 4) * 4 + (b + s[1]) % 4;
            if (v < w) edges.emplace_back(v, w);
        }
    }
    return Graph::from_edges(16, edges, std::move(labels));
}

Graph hamming(int n, int d) {
    require(n >= 2 && d >= 1, "hamming needs n >= 2, d >= 1");
    return power(complete_graph(n), d);
}

Graph doob(int n, int m) {
    require(n >= 0 && m >= 1, "doob needs n >= 0, m >= 1");
    Graph g = power(shrikhande(), m);
    if (n > 0) g = cartesian_product(power(complete_graph(4), n), g);
    return g;
}

Graph lattice(int n) {
    require(n >= 2, "lattice needs n >= 2");
    return cartesian_product(complete_graph(n), complete_graph(n));
}

Graph triangular(int n) {
    require(n >= 3, "triangular needs n >= 3");
    return johnson(n, 2);
}

Graph product(const std::vector<Graph>& factors) {
    require(!factors.empty(), "product needs factors");
    Graph g = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) g = cartesian_product(g, factors[i]);
    return g;
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
    require(n >= 1, "path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph empty_graph(int n) {
    require(n >= 0, "empty graph needs n >= 0");
    return Graph::from_edges(n, {});
}

}  // namespace curvlab
