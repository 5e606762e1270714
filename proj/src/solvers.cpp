#include "curvlab/solvers.hpp"
#include "curvlab/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

namespace curvlab {

std::vector<int> maximum_matching(int right_count, const std::vector<std::vector<int>>& adj) {
    const int left = static_cast<int>(adj.size());
    const int inf = std::numeric_limits<int>::max();
    std::vector<int> match_l(left, -1), match_r(right_count, -1), dist(left);

    auto bfs = [&] {
        std::queue<int> q;
        bool found = false;
        for (int u = 0; u < left; ++u) {
            dist[u] = match_l[u] < 0 ? 0 : inf;
            if (match_l[u] < 0) q.push(u);
        }
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                int w = match_r[v];
                if (w < 0) found = true;
                else if (dist[w] == inf) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
            }
        }
        return found;
    };

    auto dfs = [&](auto&& self, int u) -> bool {
        for (int v : adj[u]) {
            int w = match_r[v];
            if (w < 0 || (dist[w] == dist[u] + 1 && self(self, w))) {
                match_l[u] = v;
                match_r[v] = u;
                return true;
            }
        }
        dist[u] = inf;
        return false;
    };

    while (bfs())
        for (int u = 0; u < left; ++u)
            if (match_l[u] < 0) dfs(dfs, u);
    return match_l;
}

Assignment solve_assignment(const std::vector<std::vector<std::int64_t>>& cost) {
    const int n = static_cast<int>(cost.size());
    for (const auto& row : cost)
        if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::BadParam, "assignment matrix not square");
    Assignment out;
    out.column_of_row.assign(n, -1);
    if (n == 0) return out;
    const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
    // 1-indexed potentials; p[j] = row assigned to column j
    std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<std::int64_t> minv(n + 1, inf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            int i0 = p[j0], j1 = 0;
            std::int64_t delta = inf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                std::int64_t cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) minv[j] = cur, way[j] = j0;
                if (minv[j] < delta) delta = minv[j], j1 = j;
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) u[p[j]] += delta, v[j] -= delta;
                else minv[j] -= delta;
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    for (int j = 1; j <= n; ++j) out.column_of_row[p[j] - 1] = j - 1;
    for (int i = 0; i < n; ++i) out.cost += cost[i][out.column_of_row[i]];
    return out;
}

Transportation solve_transportation(const std::vector<std::int64_t>& supply,
                                    const std::vector<std::int64_t>& demand,
                                    const std::vector<std::vector<std::int64_t>>& cost) {
    const int s = static_cast<int>(supply.size());
    const int t = static_cast<int>(demand.size());
    if (std::accumulate(supply.begin(), supply.end(), std::int64_t{0}) !=
        std::accumulate(demand.begin(), demand.end(), std::int64_t{0}))
        throw Error(ErrorKind::BadParam, "unbalanced transportation problem");
    Transportation out;
    out.flow.assign(s, std::vector<std::int64_t>(t, 0));
    std::vector<std::int64_t> left(supply), need(demand);
    const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;

    // Residual network on s + t nodes. Forward arcs i->j (uncapacitated, cost c),
    // backward arcs j->i with capacity flow[i][j] and cost -c. Bellman-Ford from
    // every source with spare supply, stop at any sink with unmet demand.
    while (true) {
        std::vector<std::int64_t> dist(s + t, inf);
        std::vector<int> prev(s + t, -1);
        for (int i = 0; i < s; ++i)
            if (left[i] > 0) dist[i] = 0;
        for (int round = 0; round < s + t; ++round) {
            bool changed = false;
            for (int i = 0; i < s; ++i) {
                if (dist[i] == inf) continue;
                for (int j = 0; j < t; ++j) {
                    if (dist[i] + cost[i][j] < dist[s + j]) {
                        dist[s + j] = dist[i] + cost[i][j];
                        prev[s + j] = i;
                        changed = true;
                    }
                }
            }
            for (int j = 0; j < t; ++j) {
                if (dist[s + j] == inf) continue;
                for (int i = 0; i < s; ++i) {
                    if (out.flow[i][j] > 0 && dist[s + j] - cost[i][j] < dist[i]) {
                        dist[i] = dist[s + j] - cost[i][j];
                        prev[i] = s + j;
                        changed = true;
                    }
                }
            }
            if (!changed) break;
        }
        int sink = -1;
        for (int j = 0; j < t; ++j)
            if (need[j] > 0 && dist[s + j] < inf && (sink < 0 || dist[s + j] < dist[s + sink])) sink = j;
        if (sink < 0) break;
        // bottleneck along the path
        std::int64_t push = need[sink];
        int node = s + sink;
        while (prev[node] >= 0) {
            int from = prev[node];
            if (node < s) push = std::min(push, out.flow[node][from - s]);
            node = from;
        }
        push = std::min(push, left[node]);
        int source = node;
        node = s + sink;
        while (prev[node] >= 0) {
            int from = prev[node];
            if (node >= s) out.flow[from][node - s] += push;
            else out.flow[node][from - s] -= push;
            node = from;
        }
        left[source] -= push;
        need[sink] -= push;
    }
    for (int j = 0; j < t; ++j)
        if (need[j] != 0) throw Error(ErrorKind::BadParam, "transportation problem infeasible");
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) out.cost += out.flow[i][j] * cost[i][j];
    return out;
}

}  // namespace curvlab
