#include "curvlab/solvers.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <random>

using namespace curvlab;

TEST_CASE("assignment matches exhaustive search") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> w(0, 9);
    for (int n = 1; n <= 7; ++n)
        for (int t = 0; t < 15; ++t) {
            std::vector<std::vector<std::int64_t>> c(n, std::vector<std::int64_t>(n));
            for (auto& row : c)
                for (auto& x : row) x = w(rng);
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::int64_t best = std::numeric_limits<std::int64_t>::max();
            do {
                std::int64_t s = 0;
                for (int i = 0; i < n; ++i) s += c[i][perm[i]];
                best = std::min(best, s);
            } while (std::next_permutation(perm.begin(), perm.end()));
            auto a = solve_assignment(c);
            CHECK(a.cost == best);
            std::int64_t s = 0;
            std::vector<int> cols = a.column_of_row;
            for (int i = 0; i < n; ++i) s += c[i][cols[i]];
            CHECK(s == a.cost);
            std::sort(cols.begin(), cols.end());
            for (int i = 0; i < n; ++i) CHECK(cols[i] == i);
        }
}

TEST_CASE("transportation matches exhaustive integer flows") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> w(0, 6), amount(0, 3);
    for (int t = 0; t < 60; ++t) {
        // 2 sources, 3 sinks; enumerate the first row
        std::vector<std::int64_t> supply{amount(rng) + 1, amount(rng) + 1};
        std::int64_t total = supply[0] + supply[1];
        std::vector<std::int64_t> demand{0, 0, 0};
        for (std::int64_t u = 0; u < total; ++u) ++demand[std::uniform_int_distribution<int>(0, 2)(rng)];
        std::vector<std::vector<std::int64_t>> c(2, std::vector<std::int64_t>(3));
        for (auto& row : c)
            for (auto& x : row) x = w(rng);

        std::int64_t best = std::numeric_limits<std::int64_t>::max();
        for (std::int64_t a = 0; a <= demand[0]; ++a)
            for (std::int64_t b = 0; b <= demand[1]; ++b) {
                std::int64_t r = supply[0] - a - b;
                if (r < 0 || r > demand[2]) continue;
                std::int64_t s = a * c[0][0] + b * c[0][1] + r * c[0][2] + (demand[0] - a) * c[1][0] +
                                 (demand[1] - b) * c[1][1] + (demand[2] - r) * c[1][2];
                best = std::min(best, s);
            }
        auto tr = solve_transportation(supply, demand, c);
        CHECK(tr.cost == best);
        std::int64_t s = 0;
        for (int i = 0; i < 2; ++i) {
            std::int64_t row = 0;
            for (int j = 0; j < 3; ++j) {
                CHECK(tr.flow[i][j] >= 0);
                row += tr.flow[i][j];
                s += tr.flow[i][j] * c[i][j];
            }
            CHECK(row == supply[i]);
        }
        for (int j = 0; j < 3; ++j) CHECK(tr.flow[0][j] + tr.flow[1][j] == demand[j]);
        CHECK(s == tr.cost);
    }
}

TEST_CASE("transportation reduces to assignment on unit supplies") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> w(0, 20);
    for (int t = 0; t < 20; ++t) {
        int n = 6;
        std::vector<std::vector<std::int64_t>> c(n, std::vector<std::int64_t>(n));
        for (auto& row : c)
            for (auto& x : row) x = w(rng);
        std::vector<std::int64_t> ones(n, 1);
        CHECK(solve_transportation(ones, ones, c).cost == solve_assignment(c).cost);
    }
}

TEST_CASE("maximum matching size matches exhaustive search") {
    std::mt19937 rng(5);
    std::bernoulli_distribution coin(0.3);
    for (int t = 0; t < 40; ++t) {
        int left = 6, right = 6;
        std::vector<std::vector<int>> adj(left);
        for (int l = 0; l < left; ++l)
            for (int r = 0; r < right; ++r)
                if (coin(rng)) adj[l].push_back(r);
        int best = 0;
        std::vector<bool> used(right, false);
        std::function<void(int, int)> rec = [&](int l, int size) {
            if (l == left) {
                best = std::max(best, size);
                return;
            }
            rec(l + 1, size);
            for (int r : adj[l])
                if (!used[r]) {
                    used[r] = true;
                    rec(l + 1, size + 1);
                    used[r] = false;
                }
        };
        rec(0, 0);
        auto m = maximum_matching(right, adj);
        int size = 0;
        std::vector<int> seen(right, 0);
        for (int l = 0; l < left; ++l) {
            if (m[l] < 0) continue;
            ++size;
            CHECK(std::find(adj[l].begin(), adj[l].end(), m[l]) != adj[l].end());
            CHECK(++seen[m[l]] == 1);
        }
        CHECK(size == best);
    }
}
