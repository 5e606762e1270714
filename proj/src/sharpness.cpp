#include "curvlab/sharpness.hpp"
#include "curvlab/isomorphism.hpp"
#include "curvlab/parallel.hpp"
#include "curvlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace curvlab {

namespace {

void require_pole(const DistanceOracle& d, Vertex x) {
    require_connected(d);
    if (x < 0 || x >= d.order() || d.eccentricity(x) != d.diameter())
        throw Error(ErrorKind::NotAPole, "vertex " + std::to_string(x) + " is not a pole");
}

// BFS distances inside the subgraph induced on members (mask over V).
std::vector<int> induced_distances(const Graph& g, const std::vector<Vertex>& members, const std::vector<int>& index) {
    const int k = static_cast<int>(members.size());
    std::vector<int> dist(static_cast<std::size_t>(k) * k, DistanceOracle::kInfinity);
    std::vector<int> queue(k);
    for (int s = 0; s < k; ++s) {
        int* row = dist.data() + static_cast<std::size_t>(s) * k;
        row[s] = 0;
        int head = 0, tail = 0;
        queue[tail++] = s;
        while (head < tail) {
            int u = queue[head++];
            for (Vertex w : g.neighbours(members[u])) {
                int j = index[w];
                if (j >= 0 && row[j] == DistanceOracle::kInfinity) {
                    row[j] = row[u] + 1;
                    queue[tail++] = j;
                }
            }
        }
    }
    return dist;
}

// First local index z with no antipode in the given k x k metric, or -1.
int first_non_antipodal(int k, const std::vector<int>& dist) {
    for (int z = 0; z < k; ++z) {
        const int* rz = dist.data() + static_cast<std::size_t>(z) * k;
        int ecc = *std::max_element(rz, rz + k);
        bool found = false;
        for (int w = 0; w < k && !found; ++w) {
            if (rz[w] != ecc || w == z) continue;
            const int* rw = dist.data() + static_cast<std::size_t>(w) * k;
            bool covers = true;
            for (int v = 0; v < k && covers; ++v) covers = rz[v] + rw[v] == ecc;
            found = covers;
        }
        if (!found && k > 1) return z;
    }
    return k == 1 ? 0 : -1;
}

struct Atom {
    FamilySpec spec;
    long long order;
    int degree;
    int diameter;
};

long long binomial(int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<Atom> list_atoms(long long max_order) {
    std::vector<Atom> atoms;
    for (int n = 1; n <= 20 && (1LL << n) <= max_order; ++n)
        atoms.push_back({{Family::Hypercube, {n}, {}}, 1LL << n, n, n});
    for (int n = 3; 2LL * n <= max_order; ++n)
        atoms.push_back({{Family::CocktailParty, {n}, {}}, 2LL * n, 2 * n - 2, 2});
    for (int n = 3; n <= 15 && binomial(2 * n, n) <= max_order; ++n)
        atoms.push_back({{Family::Johnson, {2 * n, n}, {}}, binomial(2 * n, n), n * n, n});
    for (int n = 3; 2 * n <= 20 && (1LL << (2 * n - 1)) <= max_order; ++n)
        atoms.push_back({{Family::DemiCube, {2 * n}, {}}, 1LL << (2 * n - 1), 2 * n * n - n, n});
    if (max_order >= 56) atoms.push_back({{Family::Gosset, {}, {}}, 56, 27, 3});
    return atoms;
}

}  // namespace

std::vector<CurvatureValue> edge_curvatures(const Graph& g, const DistanceOracle& d, int jobs) {
    require_connected(d);
    require_regular(g);
    auto edges = g.edges();
    std::vector<CurvatureValue> out(edges.size());
    parallel_for(edges.size(), jobs, [&](std::size_t i) { out[i] = kappa(g, d, edges[i].first, edges[i].second); });
    return out;
}

SharpnessVerdict bm_sharpness(const Graph& g, const DistanceOracle& d, int jobs) {
    require_connected(d);
    int D = require_regular(g);
    SharpnessVerdict v;
    int L = d.diameter();
    auto edges = g.edges();
    if (edges.empty()) throw Error(ErrorKind::PreconditionUnmet, "graph has no edges");
    auto values = edge_curvatures(g, d, jobs);
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i].value < values[best].value) best = i;
    v.inf_edge_kappa = values[best].value;
    v.witness_edge = edges[best];
    v.two_over_L = Rational(2, L);
    v.is_bm_sharp = v.inf_edge_kappa == v.two_over_L;
    v.diameter_at_most_degree = L <= D;
    v.diameter_divides_twice_degree = (2 * D) % L == 0;
    return v;
}

LambdaVerdict lambda_m_check(const Graph& g, const DistanceOracle& d, int m) {
    require_regular(g);
    (void)d;
    LambdaVerdict v;
    v.m = m;
    for (auto [x, y] : g.edges()) {
        auto s = split_neighbourhoods(g, x, y);
        bool ok = static_cast<int>(s.common.size()) >= m && s.left.size() == s.right.size() &&
                  remainder_matching(g, x, y).size() == s.left.size();
        if (!ok) v.failing_edges.emplace_back(x, y);
    }
    v.passes = v.failing_edges.empty();
    return v;
}

PoleFacts pole_facts(const Graph& g, const DistanceOracle& d, Vertex x) {
    require_pole(d, x);
    int D = require_regular(g);
    int L = d.diameter();
    PoleFacts f;
    f.expected_triangles = Rational(2 * D, L) - 2;
    f.expected_cost = (Rational(D + 1) - Rational(2 * D, L)) / (D + 1);
    f.triangles_ok = f.matching_ok = f.cost_ok = true;
    for (Vertex y : g.neighbours(x)) {
        auto s = split_neighbourhoods(g, x, y);
        bool tri = Rational(static_cast<std::int64_t>(s.common.size())) == f.expected_triangles;
        auto matching = remainder_matching(g, x, y);
        bool perfect = matching.size() == s.left.size() && s.left.size() == s.right.size();
        bool cost = false;
        if (perfect) {
            auto t = tpm_transport_map(g, d, x, y, matching);
            cost = t.cost() == f.expected_cost && optimal_plan(g, d, x, y).distance == t.cost();
        }
        if ((!tri || !perfect || !cost) && !f.first_failure) f.first_failure = Edge{x, y};
        f.triangles_ok = f.triangles_ok && tri;
        f.matching_ok = f.matching_ok && perfect;
        f.cost_ok = f.cost_ok && cost;
    }
    return f;
}

RecursionVerdict degree_recursions(const Graph& g, const DistanceOracle& d, Vertex x) {
    require_pole(d, x);
    int D = require_regular(g);
    int L = d.diameter();
    RecursionVerdict v;
    for (Vertex y = 0; y < g.order(); ++y) {
        if (y == x) continue;
        int k = d(x, y);
        auto t = degree_triple(g, d, x, y);
        Rational diff(t.d_plus - t.d_minus), out_sum(2 * t.d_plus + t.d_zero), in_sum(2 * t.d_minus + t.d_zero);
        bool ok = diff == D * (1 - Rational(2 * k, L)) && out_sum == 2 * D * (1 - Rational(k, L)) &&
                  in_sum == Rational(2 * k * D, L);
        if (!ok) {
            v.first_violation = y;
            return v;
        }
    }
    v.ok = true;
    return v;
}

CoverVerdict interval_cover_check(const DistanceOracle& d) {
    require_connected(d);
    CoverVerdict v;
    int L = d.diameter();
    for (Vertex x = 0; x < d.order(); ++x) {
        for (Vertex y = x + 1; y < d.order(); ++y) {
            if (d(x, y) != L) continue;
            if (static_cast<int>(interval(d, x, y).size()) != d.order()) {
                v.first_violation = Edge{x, y};
                return v;
            }
        }
    }
    v.ok = true;
    return v;
}

AntipoleVerdict unique_antipole_check(const DistanceOracle& d) {
    auto ps = poles_and_antipoles(d);
    AntipoleVerdict v;
    v.at_most_one = v.exactly_one = true;
    for (Vertex x = 0; x < d.order(); ++x) {
        auto count = ps.antipoles[x].size();
        if (count > 1) {
            v.at_most_one = false;
            if (!v.first_violation) v.first_violation = x;
        }
        if (count != 1) v.exactly_one = false;
    }
    return v;
}

bool is_antipodal(const Graph& g, const std::vector<Vertex>& subset) {
    std::vector<Vertex> members(subset);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty()) throw Error(ErrorKind::DisconnectedSubset, "empty subset");
    std::vector<int> index(g.order(), -1);
    for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = static_cast<int>(i);
    int k = static_cast<int>(members.size());
    auto dist = induced_distances(g, members, index);
    if (std::find(dist.begin(), dist.end(), DistanceOracle::kInfinity) != dist.end())
        throw Error(ErrorKind::DisconnectedSubset, "subset does not induce a connected subgraph");
    return first_non_antipodal(k, dist) < 0;
}

SphericityVerdict is_strongly_spherical(const Graph& g, const DistanceOracle& d, IntervalMetric metric, int jobs) {
    require_connected(d);
    SphericityVerdict v;
    const int n = g.order();
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    v.antipodal = n > 1 && is_antipodal(g, all);
    if (!v.antipodal) return v;

    // one slot per x: first (y, z) failure with y > x
    std::vector<std::optional<std::pair<Vertex, Vertex>>> failure(n);
    parallel_for(static_cast<std::size_t>(n), jobs, [&](std::size_t xi) {
        Vertex x = static_cast<Vertex>(xi);
        std::vector<int> index(n, -1);
        for (Vertex y = x + 1; y < n; ++y) {
            auto members = interval(d, x, y);
            int k = static_cast<int>(members.size());
            std::vector<int> dist;
            if (metric == IntervalMetric::Induced) {
                for (int i = 0; i < k; ++i) index[members[i]] = i;
                dist = induced_distances(g, members, index);
                for (int i = 0; i < k; ++i) index[members[i]] = -1;
            } else {
                // ambient: [z,w] must equal the interval as a subset of V
                for (int zi = 0; zi < k; ++zi) {
                    Vertex z = members[zi];
                    bool found = false;
                    for (int wi = 0; wi < k && !found; ++wi) {
                        Vertex w = members[wi];
                        if (w == z) continue;
                        found = static_cast<int>(interval(d, z, w).size()) == k && [&] {
                            for (Vertex u : members)
                                if (d(z, u) + d(u, w) != d(z, w)) return false;
                            return true;
                        }();
                    }
                    if (!found) {
                        failure[x] = std::make_pair(y, z);
                        return;
                    }
                }
                continue;
            }
            int bad = first_non_antipodal(k, dist);
            if (bad >= 0) {
                failure[x] = std::make_pair(y, members[bad]);
                return;
            }
        }
    });
    for (Vertex x = 0; x < n; ++x) {
        if (failure[x]) {
            v.failing_interval = Edge{x, failure[x]->first};
            v.failing_vertex = failure[x]->second;
            return v;
        }
    }
    v.strongly_spherical = true;
    return v;
}

MuGraphVerdict mu_graphs_all_cp(const Graph& g, const DistanceOracle& d) {
    require_connected(d);
    MuGraphVerdict v;
    v.all_cp = true;
    for (Vertex x = 0; x < g.order(); ++x) {
        for (Vertex z = x + 1; z < g.order(); ++z) {
            if (d(x, z) != 2) continue;
            auto m = is_cocktail_party(mu_graph(g, d, x, z));
            if (m) {
                ++v.m_counts[*m];
            } else if (v.all_cp) {
                v.all_cp = false;
                v.first_failure = Edge{x, z};
            }
        }
    }
    return v;
}

LocalSrgVerdict local_srg_check(const Graph& g, const DistanceOracle& d) {
    require_connected(d);
    int D = require_regular(g);
    int L = d.diameter();
    auto fail = [](const std::string& why) { throw Error(ErrorKind::PreconditionUnmet, why); };
    if (L < 2) fail("diameter must be at least 2");
    if (!poles_and_antipoles(d).self_centered) fail("graph is not self-centered");
    if (!bm_sharpness(g, d).is_bm_sharp) fail("graph is not Bonnet-Myers sharp");
    Rational m = Rational(D - L, L * (L - 1)) + 1;
    auto mu = mu_graphs_all_cp(g, d);
    if (m.denominator() != 1 || !mu.all_cp || mu.m_counts.size() != 1 || mu.m_counts.begin()->first != m.numerator())
        fail("mu-graphs are not uniformly CP(" + to_string(m) + ")");

    Rational k = Rational(2 * D, L) - 2;
    Rational lambda = Rational(D - 1, L - 1) - 3;
    Rational mu_param = Rational(2 * (D - L), L * (L - 1));
    if (k.denominator() != 1 || lambda.denominator() != 1 || mu_param.denominator() != 1)
        fail("local srg parameters are not integral");
    LocalSrgVerdict v;
    v.expected = SrgParams{D, static_cast<int>(k.numerator()), static_cast<int>(lambda.numerator()),
                           static_cast<int>(mu_param.numerator())};
    if (v.expected.k == 0) v.expected.lambda.reset();
    v.expected_theta = Rational((D - L) * (L - 2), L * (L - 1));
    for (Vertex x = 0; x < g.order(); ++x) {
        std::vector<Vertex> s1(g.neighbours(x).begin(), g.neighbours(x).end());
        auto sphere = induced_subgraph(g, s1);
        auto params = is_strongly_regular(sphere);
        auto spec = adjacency_spectrum(sphere);
        double theta = spec.size() >= 2 ? spec[spec.size() - 2] : 0.0;
        if (!params || !params->matches(v.expected) || std::abs(theta - to_double(v.expected_theta)) > kEigenTolerance) {
            v.first_failure = x;
            return v;
        }
    }
    v.ok = true;
    return v;
}

SspNcp ssp_ncp(const Graph& g, const DistanceOracle& d, Vertex x) {
    int D = require_regular(g);
    auto s1 = d.sphere(x, 1);
    auto s2 = d.sphere(x, 2);
    SspNcp out;
    out.ssp = static_cast<long long>(s2.size()) <= static_cast<long long>(D) * (D - 1) / 2;
    bool premise = std::all_of(s2.begin(), s2.end(), [&](Vertex z) { return degree_triple(g, d, x, z).d_minus == 2; });
    out.ncp = true;
    if (premise) {
        for (std::size_t i = 0; i < s1.size() && out.ncp; ++i)
            for (std::size_t j = i + 1; j < s1.size() && out.ncp; ++j) {
                int shared = 0;
                for (Vertex z : s2)
                    if (g.adjacent(s1[i], z) && g.adjacent(z, s1[j])) ++shared;
                out.ncp = shared <= 1;
            }
    }
    return out;
}

FourCycleVerdict four_cycle_lemma_check(const Graph& g, const DistanceOracle& d) {
    int D = require_regular(g);
    FourCycleVerdict v;
    // w ~ a ~ b closes to a 4-cycle through some u != a with w ~ u ~ b
    auto closes = [&](Vertex a, Vertex b) {
        for (Vertex w : g.neighbours(a)) {
            if (w == b) continue;
            bool found = false;
            for (Vertex u : g.neighbours(b))
                if (u != a && u != w && g.adjacent(u, w)) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
        return true;
    };
    for (auto [x, y] : g.edges()) {
        FourCycleStatus s;
        s.edge = {x, y};
        s.triangles = triangle_count(g, x, y);
        s.kappa = kappa(g, d, x, y).value;
        s.applies = s.triangles == 0 && s.kappa >= Rational(2, D);
        s.in_four_cycles = closes(x, y) && closes(y, x);
        if (s.applies && !s.in_four_cycles) v.violations.push_back(s.edge);
        v.edges.push_back(s);
    }
    return v;
}

ClassificationMatch classify(const Graph& g, const DistanceOracle& d) {
    ClassificationMatch out;
    if (!d.is_connected() || g.order() < 2) {
        out.reason = "disconnected or trivial graph: outside classified territory";
        return out;
    }
    auto deg = g.regular_degree();
    if (!deg) {
        out.reason = "not regular: outside classified territory";
        return out;
    }
    if (!poles_and_antipoles(d).self_centered) {
        out.reason = "not self-centered: outside classified territory";
        return out;
    }
    if (!bm_sharpness(g, d).is_bm_sharp) {
        out.reason = "not Bonnet-Myers sharp: outside classified territory";
        return out;
    }
    out.in_classified_territory = true;
    const long long n = g.order();
    const int D = *deg, L = d.diameter();
    const Rational ratio(D, L);
    auto atoms = list_atoms(n);
    std::vector<const Atom*> usable;
    for (const auto& a : atoms)
        if (n % a.order == 0 && Rational(a.degree, a.diameter) == ratio) usable.push_back(&a);

    // factor multisets in non-decreasing atom order, at most one hypercube factor
    std::vector<std::vector<const Atom*>> candidates;
    std::vector<const Atom*> current;
    auto extend = [&](auto&& self, std::size_t from, long long order, int degree, int diameter) -> void {
        if (order == n && degree == D && diameter == L) {
            candidates.push_back(current);
            return;
        }
        for (std::size_t i = from; i < usable.size(); ++i) {
            const Atom* a = usable[i];
            if ((n / order) % a->order != 0 || degree + a->degree > D || diameter + a->diameter > L) continue;
            bool cube = a->spec.family == Family::Hypercube;
            if (cube && std::any_of(current.begin(), current.end(),
                                    [](const Atom* c) { return c->spec.family == Family::Hypercube; }))
                continue;
            current.push_back(a);
            self(self, i, order * a->order, degree + a->degree, diameter + a->diameter);
            current.pop_back();
        }
    };
    extend(extend, 0, 1, 0, 0);
    std::stable_sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });

    for (const auto& c : candidates) {
        FamilySpec spec;
        if (c.size() == 1) {
            spec = c.front()->spec;
        } else {
            spec.family = Family::Product;
            for (const Atom* a : c) spec.factors.push_back(a->spec);
        }
        auto candidate = from_spec(spec);
        if (auto phi = find_isomorphism(candidate, g)) {
            out.matched = spec;
            out.iso_witness = *phi;
            out.reason = "matched " + to_string(spec);
            return out;
        }
    }
    out.reason = "self-centered and Bonnet-Myers sharp, but no list member or product matches";
    return out;
}

}  // namespace curvlab
