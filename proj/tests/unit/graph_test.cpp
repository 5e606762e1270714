#include "curvlab/families.hpp"
#include "curvlab/graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace curvlab;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) e.push_back({u, v});
    return Graph::from_edges(n, e);
}

// Floyd-Warshall, independent of the BFS oracle.
std::vector<std::vector<int>> floyd(const Graph& g) {
    const int n = g.order(), inf = 1 << 20;
    std::vector<std::vector<int>> w(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) {
        w[v][v] = 0;
        for (Vertex u : g.neighbours(v)) w[v][u] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) w[i][j] = std::min(w[i][j], w[i][k] + w[k][j]);
    return w;
}

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no exception");
    return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("build_graph accepts simple graphs and rejects bad edge lists") {
    auto k2 = Graph::from_edges(2, {{0, 1}});
    CHECK(k2.degree(0) == 1);
    CHECK(k2.degree(1) == 1);
    auto c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(c4.regular_degree() == 2);
    CHECK(c4.size() == 4);
    CHECK(kind_of([] { Graph::from_edges(3, {{0, 1}, {0, 1}}); }) == ErrorKind::DuplicateEdge);
    CHECK(kind_of([] { Graph::from_edges(3, {{0, 1}, {1, 0}}); }) == ErrorKind::DuplicateEdge);
    CHECK(kind_of([] { Graph::from_edges(3, {{1, 1}}); }) == ErrorKind::SelfLoop);
    CHECK(kind_of([] { Graph::from_edges(3, {{0, 3}}); }) == ErrorKind::VertexOutOfRange);
    CHECK(kind_of([] { Graph::from_edges(3, {{-1, 2}}); }) == ErrorKind::VertexOutOfRange);
}

TEST_CASE("adjacency lists are sorted and symmetric") {
    std::mt19937 rng(7);
    for (int t = 0; t < 20; ++t) {
        auto g = random_graph(30, 0.2, rng);
        for (Vertex v = 0; v < g.order(); ++v) {
            auto nb = g.neighbours(v);
            CHECK(std::is_sorted(nb.begin(), nb.end()));
            for (Vertex u : nb) {
                CHECK(g.adjacent(u, v));
                CHECK(std::binary_search(g.neighbours(u).begin(), g.neighbours(u).end(), v));
            }
        }
    }
}

TEST_CASE("diameters of the family representatives") {
    CHECK(DistanceOracle(hypercube(3)).diameter() == 3);
    CHECK(DistanceOracle(cocktail_party(3)).diameter() == 2);
    CHECK(DistanceOracle(gosset()).diameter() == 3);
    auto split = Graph::from_edges(4, {{0, 1}, {2, 3}});
    DistanceOracle d(split);
    CHECK_FALSE(d.is_connected());
    CHECK(d(0, 2) == DistanceOracle::kInfinity);
    CHECK_THROWS_AS(require_connected(d), Error);
}

TEST_CASE("BFS distances agree with Floyd-Warshall and satisfy the metric axioms") {
    std::mt19937 rng(11);
    for (int t = 0; t < 25; ++t) {
        auto g = random_graph(18, 0.15, rng);
        DistanceOracle d(g);
        auto w = floyd(g);
        int diam = 0;
        bool connected = true;
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < g.order(); ++v) {
                if (w[u][v] >= (1 << 20)) {
                    connected = false;
                    CHECK(d(u, v) == DistanceOracle::kInfinity);
                    continue;
                }
                diam = std::max(diam, w[u][v]);
                CHECK(d(u, v) == w[u][v]);
                CHECK(d(u, v) == d(v, u));
                CHECK((d(u, v) == 1) == g.adjacent(u, v));
            }
        CHECK(d.is_connected() == connected);
        if (connected) {
            CHECK(d.diameter() == diam);
            for (int a = 0; a < g.order(); ++a)
                for (int b = 0; b < g.order(); ++b)
                    for (int c = 0; c < g.order(); ++c) CHECK(d(a, c) <= d(a, b) + d(b, c));
        }
    }
}

TEST_CASE("intervals match a brute-force scan") {
    auto q3 = hypercube(3);
    DistanceOracle d(q3);
    CHECK(interval(d, 0, 7).size() == 8);
    CHECK(interval(d, 5, 5) == std::vector<Vertex>{5});
    auto c4 = cycle_graph(4);
    DistanceOracle dc(c4);
    CHECK(interval(dc, 0, 2).size() == 4);

    auto j = johnson(6, 3);
    DistanceOracle dj(j);
    for (Vertex x = 0; x < j.order(); ++x)
        for (Vertex y = 0; y < j.order(); ++y) {
            std::vector<Vertex> brute;
            for (Vertex z = 0; z < j.order(); ++z)
                if (dj(x, z) + dj(z, y) == dj(x, y)) brute.push_back(z);
            CHECK(interval(dj, x, y) == brute);
        }
}

TEST_CASE("degree triples") {
    auto q3 = hypercube(3);
    DistanceOracle d(q3);
    auto t = degree_triple(q3, d, 0, 1);
    CHECK(t.d_minus == 1);
    CHECK(t.d_zero == 0);
    CHECK(t.d_plus == 2);

    auto cp = cocktail_party(3);
    DistanceOracle dc(cp);
    Vertex y = cp.neighbours(0)[0];
    t = degree_triple(cp, dc, 0, y);
    CHECK(t.d_minus == 1);
    CHECK(t.d_zero == 2);
    CHECK(t.d_plus == 1);

    auto g = gosset();
    DistanceOracle dg(g);
    for (Vertex w : g.neighbours(0)) {
        t = degree_triple(g, dg, 0, w);
        CHECK(t.d_minus == 1);
        CHECK(t.d_zero == 16);
        CHECK(t.d_plus == 10);
    }
}

TEST_CASE("degree triples sum to the degree") {
    std::mt19937 rng(3);
    auto g = random_graph(20, 0.25, rng);
    DistanceOracle d(g);
    for (Vertex x = 0; x < g.order(); ++x)
        for (Vertex y = 0; y < g.order(); ++y) {
            if (x == y || d(x, y) == DistanceOracle::kInfinity) continue;
            auto t = degree_triple(g, d, x, y);
            CHECK(t.d_minus + t.d_zero + t.d_plus == g.degree(y));
        }
}

TEST_CASE("sphere averages") {
    auto q3 = hypercube(3);
    DistanceOracle d(q3);
    auto a = sphere_averages(q3, d, 0, 1);
    CHECK(a.in == Rational(1));
    CHECK(a.spherical == Rational(0));
    CHECK(a.out == Rational(2));
    a = sphere_averages(q3, d, 0, 3);
    CHECK(a.in == Rational(3));
    CHECK(a.spherical == Rational(0));
    CHECK(a.out == Rational(0));
    CHECK_THROWS_AS(sphere_averages(q3, d, 0, 4), Error);

    auto j = johnson(6, 3);
    DistanceOracle dj(j);
    CHECK(sphere_averages(j, dj, 0, 2).in == Rational(4));
}

TEST_CASE("triangle counts") {
    for (int n = 2; n <= 5; ++n) {
        auto q = hypercube(n);
        for (auto [x, y] : q.edges()) CHECK(triangle_count(q, x, y) == 0);
    }
    auto g = gosset();
    for (auto [x, y] : g.edges()) CHECK(triangle_count(g, x, y) == 16);
    auto cp = cocktail_party(3);
    for (auto [x, y] : cp.edges()) CHECK(triangle_count(cp, x, y) == 2);
    CHECK_THROWS_AS(triangle_count(cp, 0, 1), Error);  // u_0, v_0 are not adjacent

    // vertex form is half the sum over incident edges
    std::mt19937 rng(5);
    auto r = random_graph(25, 0.3, rng);
    for (Vertex x = 0; x < r.order(); ++x) {
        int sum = 0;
        for (Vertex y : r.neighbours(x)) sum += triangle_count(r, x, y);
        CHECK(2 * triangle_count(r, x) == sum);
    }
}

TEST_CASE("mu-graphs of the families") {
    auto q = hypercube(4);
    DistanceOracle dq(q);
    auto m = mu_graph(q, dq, 0, 3);
    CHECK(m.order() == 2);
    CHECK(m.size() == 0);
    CHECK(is_cocktail_party(m) == 1);

    auto j = johnson(6, 3);
    DistanceOracle dj(j);
    for (Vertex z : dj.sphere(0, 2)) CHECK(is_cocktail_party(mu_graph(j, dj, 0, z)) == 2);

    auto g = gosset();
    DistanceOracle dg(g);
    for (Vertex z : dg.sphere(0, 2)) CHECK(is_cocktail_party(mu_graph(g, dg, 0, z)) == 5);
    CHECK_THROWS_AS(mu_graph(g, dg, 0, g.neighbours(0)[0]), Error);
}

TEST_CASE("cocktail party recognition") {
    CHECK(is_cocktail_party(cocktail_party(3)) == 3);
    CHECK(is_cocktail_party(empty_graph(2)) == 1);
    CHECK(is_cocktail_party(cycle_graph(4)) == 2);
    CHECK_FALSE(is_cocktail_party(cycle_graph(5)));
    CHECK_FALSE(is_cocktail_party(empty_graph(3)));
    CHECK_FALSE(is_cocktail_party(complete_graph(4)));
}

TEST_CASE("strongly regular parameters") {
    auto s = is_strongly_regular(schlafli());
    REQUIRE(s);
    CHECK(s->matches(SrgParams{27, 16, 10, 8}));
    // K_3 x K_3 has degree 2(n-1) = 4
    s = is_strongly_regular(lattice(3));
    REQUIRE(s);
    CHECK(s->matches(SrgParams{9, 4, 1, 2}));
    CHECK_FALSE(is_strongly_regular(path_graph(3)));
    s = is_strongly_regular(empty_graph(4));
    REQUIRE(s);
    CHECK(s->k == 0);
    CHECK_FALSE(s->lambda);
    CHECK(s->to_string() == "(4,0,*,0)");
    CHECK_FALSE(is_strongly_regular(complete_graph(5)));

    // feasibility identity mu(nu-k-1) = k(k-lambda-1)
    for (const auto& g : {kneser(5, 2), shrikhande(), triangular(7), demi_cube(5), schlafli(), lattice(4)}) {
        auto p = is_strongly_regular(g);
        REQUIRE(p);
        CHECK(p->mu * (p->nu - p->k - 1) == p->k * (p->k - *p->lambda - 1));
    }
}

TEST_CASE("intersection arrays") {
    for (int n = 2; n <= 5; ++n) {
        auto q = hypercube(n);
        auto ia = intersection_array(q, DistanceOracle(q));
        REQUIRE(ia);
        for (int j = 1; j <= n; ++j) CHECK(ia->c[j - 1] == j);
    }
    auto j = johnson(6, 3);
    auto ia = intersection_array(j, DistanceOracle(j));
    REQUIRE(ia);
    CHECK(ia->c == std::vector<int>{1, 4, 9});
    CHECK(ia->b == std::vector<int>{9, 4, 1});
    auto g = gosset();
    ia = intersection_array(g, DistanceOracle(g));
    REQUIRE(ia);
    CHECK(ia->c[1] == 10);
    CHECK(ia->c[2] == 27);
    auto p = path_graph(4);
    CHECK_FALSE(intersection_array(p, DistanceOracle(p)));
}

TEST_CASE("Cartesian products") {
    auto k2 = complete_graph(2);
    auto c4 = cartesian_product(k2, k2);
    CHECK(is_cocktail_party(c4) == 2);
    auto q3 = cartesian_product(hypercube(2), hypercube(1));
    CHECK(q3.order() == 8);
    CHECK(q3.regular_degree() == 3);
    CHECK(DistanceOracle(q3).diameter() == 3);

    auto a = cocktail_party(3), b = johnson(5, 2);
    auto p = cartesian_product(a, b);
    DistanceOracle dp(p), da(a), db(b);
    CHECK(p.regular_degree() == *a.regular_degree() + *b.regular_degree());
    CHECK(dp.diameter() == da.diameter() + db.diameter());
    // product metric is the sum of factor metrics
    int n2 = b.order();
    for (Vertex u = 0; u < p.order(); u += 7)
        for (Vertex v = 0; v < p.order(); ++v)
            CHECK(dp(u, v) == da(u / n2, v / n2) + db(u % n2, v % n2));

    auto doob11 = doob(1, 1);
    CHECK(doob11.regular_degree() == 9);
}

TEST_CASE("poles and antipoles") {
    auto q = hypercube(4);
    auto ps = poles_and_antipoles(DistanceOracle(q));
    CHECK(ps.self_centered);
    for (Vertex v = 0; v < q.order(); ++v) CHECK(ps.antipoles[v] == std::vector<Vertex>{v ^ 15});

    auto p = path_graph(3);
    ps = poles_and_antipoles(DistanceOracle(p));
    CHECK_FALSE(ps.self_centered);
    CHECK(ps.antipoles[1].empty());
}
