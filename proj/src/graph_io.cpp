#include "curvlab/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace curvlab {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

void put_size(std::string& out, std::uint64_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

int sextet(char c) {
    if (c < 63 || c > 126)
        throw Error(ErrorKind::Parse, std::string("graph6: byte out of range: '") + c + "'");
    return c - 63;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
    std::string out;
    auto n = static_cast<std::uint64_t>(g.order());
    put_size(out, n);
    int acc = 0, filled = 0;
    for (Vertex j = 1; j < g.order(); ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph decode_graph6(std::string_view text) {
    if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.empty()) throw Error(ErrorKind::Parse, "graph6: empty input");
    std::size_t pos = 0;
    std::uint64_t n = 0;
    if (text[0] != 126) {
        n = sextet(text[0]);
        pos = 1;
    } else if (text.size() >= 2 && text[1] != 126) {
        if (text.size() < 4) throw Error(ErrorKind::Parse, "graph6: truncated size");
        for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(text[i]);
        pos = 4;
    } else {
        if (text.size() < 8) throw Error(ErrorKind::Parse, "graph6: truncated size");
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(text[i]);
        pos = 8;
    }
    if (n > 100000) throw Error(ErrorKind::Parse, "graph6: graph too large");
    std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    std::uint64_t expected = (bits + 5) / 6;
    if (text.size() - pos != expected)
        throw Error(ErrorKind::Parse, "graph6: expected " + std::to_string(expected) +
                                          " data bytes, found " + std::to_string(text.size() - pos));
    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (Vertex j = 1; j < static_cast<Vertex>(n); ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            int byte = sextet(text[pos + k / 6]);
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    // padding bits must be zero for a bit-exact round trip
    if (bits % 6 != 0) {
        int last = sextet(text.back());
        if (last & ((1 << (6 - bits % 6)) - 1))
            throw Error(ErrorKind::Parse, "graph6: non-zero padding bits");
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

nlohmann::json to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.order();
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (!g.labels().empty()) j["labels"] = g.labels();
    return j;
}

Graph graph_from_json(const nlohmann::json& j) {
    try {
        int n = j.at("n").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::Parse, "edge must be [u,v]");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        std::vector<std::string> labels;
        if (j.contains("labels") && !j["labels"].is_null()) labels = j["labels"].get<std::vector<std::string>>();
        return Graph::from_edges(n, edges, std::move(labels));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("edge-list JSON: ") + e.what());
    }
}

Graph read_graph(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    if (path.extension() == ".json") {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
        }
        return graph_from_json(j);
    }
    // first non-empty line only
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line))
        if (!line.empty() && line != "\r") return decode_graph6(line);
    throw Error(ErrorKind::Parse, path.string() + ": no graph found");
}

void write_graph(const Graph& g, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Parse, "cannot write " + path.string());
    if (path.extension() == ".json") out << to_json(g).dump(2) << '\n';
    else out << encode_graph6(g) << '\n';
}

}  // namespace curvlab
