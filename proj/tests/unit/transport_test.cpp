#include "curvlab/families.hpp"
#include "curvlab/transport.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

using namespace curvlab;

namespace {

// kappa from the cheapest bijection B1(x) -> B1(y) by exhaustive search; at
// p = 1/(D+1) both measures are uniform, so some permutation is optimal.
Rational kappa_by_permutations(const Graph& g, const DistanceOracle& d, Vertex x, Vertex y) {
    int D = *g.regular_degree();
    std::vector<Vertex> bx{x}, by{y};
    for (Vertex v : g.neighbours(x)) bx.push_back(v);
    for (Vertex v : g.neighbours(y)) by.push_back(v);
    std::sort(by.begin(), by.end());
    long long best = -1;
    do {
        long long c = 0;
        for (std::size_t i = 0; i < bx.size(); ++i) c += d(bx[i], by[i]);
        if (best < 0 || c < best) best = c;
    } while (std::next_permutation(by.begin(), by.end()));
    Rational w(best, D + 1);
    return Rational(D + 1, D) * (1 - w / d(x, y));
}

// W1 as the best integer Kantorovich potential on the joint support, by
// exhaustive search (integrality of an optimal potential).
Rational w1_by_potentials(const DistanceOracle& d, const Measure& a, const Measure& b) {
    std::vector<Vertex> s;
    for (const auto& [v, m] : a.mass) s.push_back(v);
    for (const auto& [v, m] : b.mass) s.push_back(v);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    int span = 0;
    for (Vertex u : s)
        for (Vertex v : s) span = std::max(span, d(u, v));
    std::vector<int> phi(s.size(), 0);
    Rational best = 0;
    bool any = false;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == s.size()) {
            Rational val = 0;
            for (std::size_t k = 0; k < s.size(); ++k) val += phi[k] * (a.at(s[k]) - b.at(s[k]));
            if (!any || val > best) best = val, any = true;
            return;
        }
        for (int f = -span; f <= span; ++f) {
            bool ok = true;
            for (std::size_t k = 0; k < i && ok; ++k) ok = std::abs(f - phi[k]) <= d(s[i], s[k]);
            if (!ok) continue;
            phi[i] = f;
            rec(i + 1);
        }
    };
    rec(1);  // phi(s[0]) = 0 by shift invariance
    return best;
}

std::vector<Rational> distance_potential(const DistanceOracle& d, Vertex x) {
    std::vector<Rational> phi(d.order());
    for (Vertex v = 0; v < d.order(); ++v) phi[v] = d(x, v);
    return phi;
}

}  // namespace

TEST_CASE("idle measures") {
    auto g = cycle_graph(5);
    auto m = idle_measure(g, 0, Rational(1, 3));
    CHECK(m.total() == Rational(1));
    CHECK(m.at(0) == Rational(1, 3));
    CHECK(m.at(1) == Rational(1, 3));
    CHECK(m.at(2) == Rational(0));
    CHECK(idle_measure(g, 0, 0).mass.size() == 2);
    CHECK_THROWS_AS(idle_measure(g, 0, Rational(3, 2)), Error);
    CHECK_THROWS_AS(idle_measure(g, 0, Rational(-1, 2)), Error);
}

TEST_CASE("W1 agrees with the dual optimum over integer potentials") {
    for (const auto& g : {complete_graph(3), cycle_graph(4), cycle_graph(5), cycle_graph(6), kneser(5, 2)}) {
        DistanceOracle d(g);
        for (auto p : {Rational(0), Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(2, 3)})
            for (Vertex y = 1; y < g.order(); ++y) {
                auto a = idle_measure(g, 0, p), b = idle_measure(g, y, p);
                auto w = wasserstein(d, a, b);
                CHECK(w.distance == w1_by_potentials(d, a, b));
                CHECK(w.plan.cost(d) == w.distance);
                CHECK(w.plan.source_marginal().mass == a.mass);
                CHECK(w.plan.target_marginal().mass == b.mass);
            }
    }
}

TEST_CASE("curvature examples") {
    auto g = gosset();
    DistanceOracle dg(g);
    auto k = kappa(g, dg, 0, g.neighbours(0)[0]);
    CHECK(k.value == Rational(2, 3));
    CHECK(k.method == Method::MatchingFastPath);
    CHECK(to_string(k.method) == "matching");

    auto q4 = hypercube(4);
    DistanceOracle dq(q4);
    CHECK(kappa(q4, dq, 0, 15).value == Rational(1, 2));
    CHECK(kappa(q4, dq, 0, 15).method == Method::Assignment);

    auto k3 = complete_graph(3);
    DistanceOracle dk(k3);
    CHECK(kappa(k3, dk, 0, 1).value == Rational(3, 2));

    CHECK_THROWS_AS(kappa(k3, dk, 1, 1), Error);
    auto p3 = path_graph(3);
    CHECK_THROWS_AS(kappa(p3, DistanceOracle(p3), 0, 1), Error);
}

TEST_CASE("kappa is the rescaled kappa_p at p = 1/(D+1) and matches the permutation oracle") {
    for (const auto& g : {cycle_graph(5), kneser(5, 2), cocktail_party(3), hypercube(3), shrikhande()}) {
        DistanceOracle d(g);
        int D = *g.regular_degree();
        for (Vertex y = 1; y < g.order(); ++y) {
            auto k = kappa(g, d, 0, y);
            CHECK(k.value == kappa_by_assignment(g, d, 0, y).value);
            CHECK(k.value == Rational(D + 1, D) * kappa_p(g, d, 0, y, Rational(1, D + 1)).value);
            CHECK(k.value == kappa_lly(g, d, 0, y).value);
            if (D <= 6) CHECK(k.value == kappa_by_permutations(g, d, 0, y));
        }
    }
}

TEST_CASE("matching fast path fires exactly when the remainders match perfectly") {
    auto q = hypercube(4);
    DistanceOracle dq(q);
    for (auto [x, y] : q.edges()) {
        auto f = curvature_via_matching(q, dq, x, y);
        REQUIRE(f);
        CHECK(f->value == Rational(1, 2));
        CHECK(remainder_matching(q, x, y).size() == 3);
    }
    auto pet = kneser(5, 2);
    DistanceOracle dp(pet);
    for (auto [x, y] : pet.edges()) CHECK_FALSE(curvature_via_matching(pet, dp, x, y));
    CHECK_THROWS_AS(curvature_via_matching(pet, dp, 0, 0), Error);
}

TEST_CASE("distance to x is a Kantorovich potential on sharp edges") {
    // moving mu_y back onto mu_x: phi(u) - phi(v) = d(u,v) along the plan
    for (const auto& g : {hypercube(4), cocktail_party(4), johnson(6, 3), gosset()}) {
        DistanceOracle d(g);
        int D = *g.regular_degree();
        Rational p(1, D + 1);
        for (Vertex y : {g.neighbours(0)[0], poles_and_antipoles(d).antipoles[0][0]}) {
            auto mx = idle_measure(g, 0, p), my = idle_measure(g, y, p);
            auto plan = wasserstein(d, my, mx).plan;
            CHECK(certify_duality(d, my, mx, plan, distance_potential(d, 0)));
        }
    }
    auto g = hypercube(3);
    DistanceOracle d(g);
    auto mx = idle_measure(g, 0, Rational(1, 4)), my = idle_measure(g, 1, Rational(1, 4));
    auto plan = wasserstein(d, my, mx).plan;
    auto phi = distance_potential(d, 0);
    for (auto& f : phi) f *= 2;
    CHECK_THROWS_AS(certify_duality(d, my, mx, plan, phi), Error);
    // a non-optimal potential gives a strict inequality
    std::vector<Rational> zero(g.order(), 0);
    CHECK_FALSE(certify_duality(d, my, mx, plan, zero));
}

TEST_CASE("transport maps based on triangles and a perfect matching") {
    auto g = gosset();
    DistanceOracle d(g);
    Vertex y = g.neighbours(0)[0];
    auto t = unique_tpm_transport_map(g, d, 0, y);
    CHECK(t.assignment.size() == 28);
    CHECK(t.cost() == Rational(10, 28));
    CHECK(t.cost() == optimal_plan(g, d, 0, y).distance);
    for (const auto& [u, v] : t.assignment) CHECK(d(u, v) == t.displacement.at(u));

    // K_{3,3}: remainders are complete bipartite, so the map is not unique
    auto k33 = Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    DistanceOracle dk(k33);
    try {
        unique_tpm_transport_map(k33, dk, 0, 3);
        FAIL("expected AmbiguousTransportMap");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::AmbiguousTransportMap);
    }
    auto pet = kneser(5, 2);
    DistanceOracle dp(pet);
    auto [a, b] = pet.edges()[0];
    try {
        unique_tpm_transport_map(pet, dp, a, b);
        FAIL("expected NotBMSharp");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotBMSharp);
    }
    CHECK_THROWS_AS(tpm_transport_map(g, d, 0, y, {}), Error);
}

TEST_CASE("transport geodesic lengths along a diameter geodesic") {
    for (const auto& g : {hypercube(3), hypercube(4), cocktail_party(4), johnson(6, 3), demi_cube(6), gosset()}) {
        DistanceOracle d(g);
        const int L = d.diameter();
        for (Vertex x0 : {0, g.order() - 1}) {
            auto path = geodesic_through(d, g, {x0});
            CHECK(static_cast<int>(path.size()) == L + 1);
            for (Vertex z : d.ball(x0, 1)) {
                auto tg = transport_geodesic(g, d, path, z);
                bool touches = tg.waypoints.front() == path.front() || tg.waypoints.back() == path.back();
                CHECK(tg.length == (touches ? L - 1 : L - 2));
                CHECK(tg.geodesic);
            }
        }
    }
    auto q = hypercube(3);
    DistanceOracle d(q);
    auto path = geodesic_through(d, q, {0});
    auto tx = transport_geodesic(q, d, path, 0);
    CHECK(tx.waypoints[0] == 0);
    CHECK(tx.waypoints[1] == 0);
    CHECK(tx.length == 2);
    // off the base geodesic, the neighbour not carried onto x_L has length L - 2
    int short_ones = 0;
    for (Vertex z : q.neighbours(0))
        if (z != path[1] && transport_geodesic(q, d, path, z).length == 1) ++short_ones;
    CHECK(short_ones == 1);
    CHECK_THROWS_AS(transport_geodesic(q, d, {0, 1}, 0), Error);
    CHECK_THROWS_AS(transport_geodesic(q, d, path, 7), Error);
}

TEST_CASE("the transported start point ends at the antipole of x1") {
    auto g = gosset();
    DistanceOracle d(g);
    auto path = geodesic_through(d, g, {0});
    auto tg = transport_geodesic(g, d, path, 0);
    CHECK(d(path[1], tg.waypoints.back()) == 3);
    CHECK(poles_and_antipoles(d).antipoles[path[1]] == std::vector<Vertex>{tg.waypoints.back()});
}

TEST_CASE("antipole in an interval via transport equals brute force") {
    for (const auto& g : {hypercube(4), cocktail_party(4), johnson(6, 3), demi_cube(6)}) {
        DistanceOracle d(g);
        for (Vertex y = 1; y < g.order(); ++y) {
            if (d(0, y) < 2) continue;
            for (Vertex x1 : g.neighbours(0)) {
                if (d(x1, y) != d(0, y) - 1) continue;
                auto brute = interval_antipole_brute_force(d, 0, y, x1);
                REQUIRE(brute);
                CHECK(interval_antipole(g, d, 0, y, x1) == *brute);
            }
        }
    }
}

TEST_CASE("switching maps on cocktail-party mu-graphs") {
    auto g = johnson(6, 3);
    DistanceOracle d(g);
    for (Vertex z : d.sphere(0, 2)) {
        auto s = switching_map(g, d, 0, z);
        CHECK(s.size() == 4);
        for (auto [a, b] : s) {
            CHECK(s.at(b) == a);
            CHECK_FALSE(g.adjacent(a, b));
        }
    }
    auto pet = kneser(5, 2);
    DistanceOracle dp(pet);
    Vertex far = dp.sphere(0, 2)[0];
    CHECK_THROWS_AS(switching_map(pet, dp, 0, far), Error);
    CHECK_THROWS_AS(switching_map(g, d, 0, g.neighbours(0)[0]), Error);
}

TEST_CASE("product edges follow the degree-weighted factor curvature") {
    auto a = cocktail_party(3), b = hypercube(2);
    DistanceOracle da(a), db(b);
    auto p = cartesian_product(a, b);
    DistanceOracle dp(p);
    for (auto [u, v] : p.edges()) CHECK(kappa_product_edge(a, da, b, db, u, v).value == kappa(p, dp, u, v).value);
    CHECK_THROWS_AS(kappa_product_edge(a, da, b, db, 0, 0), Error);
}
