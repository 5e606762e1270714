#include "curvlab/families.hpp"
#include "curvlab/graph_io.hpp"
#include "curvlab/spectral.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace curvlab;

namespace {

Graph fixture(const std::string& name) { return read_graph(std::filesystem::path(CURVLAB_DEFAULT_FIXTURES) / name); }

}  // namespace

TEST_CASE("normalized Laplacian action") {
    auto p = path_graph(3);
    auto out = normalized_laplacian_apply(p, {Rational(0), Rational(1), Rational(4)});
    CHECK(out[0] == Rational(1));
    CHECK(out[1] == Rational(1));  // (0 + 4)/2 - 1
    CHECK(out[2] == Rational(-3));
    CHECK_THROWS_AS(normalized_laplacian_apply(empty_graph(2), {Rational(0), Rational(0)}), Error);
}

TEST_CASE("closed-form spectra") {
    for (int n = 2; n <= 6; ++n) {
        auto s = spectral_summary(hypercube(n));
        CHECK(s.lambda1 == doctest::Approx(2.0 / n).epsilon(1e-12));
        CHECK(s.lambda1_multiplicity == n);
        CHECK(s.theta1 == doctest::Approx(n - 2.0).epsilon(1e-12));
    }
    for (int n = 2; n <= 5; ++n) {
        auto s = spectral_summary(cocktail_party(n));
        CHECK(s.lambda1 == doctest::Approx(1.0));
        CHECK(s.lambda1_multiplicity == n);
    }
    auto s = spectral_summary(kneser(5, 2));
    CHECK(s.lambda1 == doctest::Approx(2.0 / 3));
    CHECK(s.lambda1_multiplicity == 5);
    CHECK(s.theta1 == doctest::Approx(1.0));
    CHECK(spectral_summary(gosset()).lambda1_multiplicity == 7);
}

TEST_CASE("adjacency spectrum traces") {
    for (const auto& g : {johnson(6, 3), shrikhande(), doob(1, 1), demi_cube(6)}) {
        auto ev = adjacency_spectrum(g);
        CHECK(std::is_sorted(ev.begin(), ev.end()));
        double t1 = 0, t2 = 0, t3 = 0;
        for (double v : ev) t1 += v, t2 += v * v, t3 += v * v * v;
        CHECK(t1 == doctest::Approx(0.0).epsilon(1e-9).scale(1));
        CHECK(t2 == doctest::Approx(2.0 * g.size()));
        // trace A^3 counts closed walks of length 3: six per triangle
        long long tri = 0;
        for (Vertex v = 0; v < g.order(); ++v) tri += triangle_count(g, v);
        CHECK(t3 == doctest::Approx(2.0 * tri));
        CHECK(ev.back() == doctest::Approx(*g.regular_degree()));
    }
}

TEST_CASE("distance eigenfunction at poles of sharp graphs") {
    for (const auto& g : {hypercube(4), cocktail_party(4), johnson(6, 3), demi_cube(6), gosset()}) {
        DistanceOracle d(g);
        for (Vertex x = 0; x < g.order(); ++x) CHECK(verify_distance_eigenfunction(g, d, x).ok);
    }
    auto pet = kneser(5, 2);
    DistanceOracle d(pet);
    auto c = verify_distance_eigenfunction(pet, d, 0);
    CHECK_FALSE(c.ok);
    REQUIRE(c.first_violation);
    CHECK(*c.first_violation != 0);
}

TEST_CASE("Lichnerowicz sharpness") {
    for (const auto& g : {hypercube(3), cocktail_party(4), johnson(5, 2), johnson(6, 3), schlafli(), gosset()}) {
        auto v = is_lichnerowicz_sharp(g, DistanceOracle(g));
        CHECK(v.sharp);
        CHECK(v.lambda1 == doctest::Approx(to_double(v.inf_kappa)).epsilon(1e-9));
    }
    CHECK(is_lichnerowicz_sharp(hypercube(3), DistanceOracle(hypercube(3))).exact_certificate);
    auto shk = shrikhande();
    auto v = is_lichnerowicz_sharp(shk, DistanceOracle(shk));
    CHECK_FALSE(v.sharp);
    CHECK(v.inf_kappa == Rational(1, 3));
    auto pet = kneser(5, 2);
    CHECK_FALSE(is_lichnerowicz_sharp(pet, DistanceOracle(pet)).sharp);
}

TEST_CASE("second adjacency eigenvalue equals b1 - 1 on the distance-regular rows") {
    std::vector<Graph> rows{hamming(3, 2), hamming(4, 2), doob(1, 1), johnson(6, 3), demi_cube(5), gosset(),
                            fixture("conway_smith.g6"), fixture("hall.g6")};
    for (const auto& g : rows) {
        auto ia = intersection_array(g, DistanceOracle(g));
        REQUIRE(ia);
        CHECK(spectral_summary(g).theta1 == doctest::Approx(ia->b[1] - 1.0).epsilon(1e-9));
    }
    // the documented exception: Kneser(7,2) has spectrum {10, 1, -4} and b1 = 6
    auto k = kneser(7, 2);
    auto ia = intersection_array(k, DistanceOracle(k));
    REQUIRE(ia);
    CHECK(ia->b[1] == 6);
    CHECK(spectral_summary(k).theta1 == doctest::Approx(1.0));
}
