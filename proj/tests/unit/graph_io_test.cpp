#include "curvlab/families.hpp"
#include "curvlab/graph_io.hpp"
#include "curvlab/isomorphism.hpp"

#include <doctest.h>

#include <filesystem>
#include <random>

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

bool same_edges(const Graph& a, const Graph& b) { return a.order() == b.order() && a.edges() == b.edges(); }

}  // namespace

TEST_CASE("graph6 of known graphs") {
    CHECK(encode_graph6(complete_graph(2)) == "A_");
    CHECK(encode_graph6(empty_graph(0)) == "?");
    CHECK(encode_graph6(kneser(5, 2)).size() == 9);  // 1 + ceil(45/6)
    CHECK(are_isomorphic(decode_graph6("IheA@GUAo"), kneser(5, 2)));
    auto k4 = decode_graph6("C~");
    CHECK(k4.order() == 4);
    CHECK(k4.size() == 6);
    auto with_header = decode_graph6(">>graph6<<C~\n");
    CHECK(same_edges(k4, with_header));
}

TEST_CASE("graph6 round-trips bit-exactly") {
    std::mt19937 rng(42);
    for (int n : {1, 2, 5, 6, 7, 30, 62, 63, 64, 100, 300}) {
        auto g = random_graph(n, 0.3, rng);
        auto text = encode_graph6(g);
        auto back = decode_graph6(text);
        CHECK(same_edges(g, back));
        CHECK(encode_graph6(back) == text);
    }
    for (const auto& g : {gosset(), schlafli(), johnson(8, 4), product({johnson(6, 3), cocktail_party(4)})}) {
        auto back = decode_graph6(encode_graph6(g));
        CHECK(same_edges(g, back));
    }
}

TEST_CASE("graph6 uses the long size prefix from 63 vertices on") {
    std::mt19937 rng(1);
    CHECK(encode_graph6(random_graph(62, 0.1, rng))[0] == char(62 + 63));
    auto t = encode_graph6(random_graph(63, 0.1, rng));
    CHECK(t[0] == '~');
    CHECK(t[1] != '~');
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(decode_graph6(""), Error);
    CHECK_THROWS_AS(decode_graph6("C"), Error);      // truncated
    CHECK_THROWS_AS(decode_graph6("C~~"), Error);    // too long
    CHECK_THROWS_AS(decode_graph6("C\x7f"), Error);  // byte out of range
    CHECK_THROWS_AS(decode_graph6("A`"), Error);     // non-zero padding bits
}

TEST_CASE("JSON edge lists") {
    auto g = johnson(5, 2);
    auto j = to_json(g);
    CHECK(j["n"] == 10);
    auto back = graph_from_json(j);
    CHECK(same_edges(g, back));
    CHECK(back.label(0) == g.label(0));
    CHECK_THROWS_AS(graph_from_json(nlohmann::json{{"n", 3}, {"edges", {{0, 0}}}}), Error);
    CHECK_THROWS_AS(graph_from_json(nlohmann::json{{"edges", nlohmann::json::array()}}), Error);
}

TEST_CASE("files dispatch on extension") {
    auto dir = std::filesystem::temp_directory_path() / "curvlab_io_test";
    std::filesystem::create_directories(dir);
    auto g = cocktail_party(4);
    write_graph(g, dir / "cp4.g6");
    write_graph(g, dir / "cp4.json");
    CHECK(same_edges(read_graph(dir / "cp4.g6"), g));
    CHECK(same_edges(read_graph(dir / "cp4.json"), g));
    std::filesystem::remove_all(dir);
}
