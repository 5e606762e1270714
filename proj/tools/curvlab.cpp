// Command-line front end. Exit codes: 0 ok, 2 bad input, 3 structural
// precondition failed, 4 verification mismatch.
#include "curvlab/bakry_emery.hpp"
#include "curvlab/families.hpp"
#include "curvlab/graph_io.hpp"
#include "curvlab/report.hpp"
#include "curvlab/sharpness.hpp"
#include "curvlab/spectral.hpp"
#include "curvlab/tables.hpp"
#include "curvlab/transport.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace curvlab;
using nlohmann::json;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitStructural = 3;
constexpr int kExitMismatch = 4;

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::Parse:
        case ErrorKind::BadParam:
        case ErrorKind::VertexOutOfRange:
        case ErrorKind::SelfLoop:
        case ErrorKind::DuplicateEdge:
        case ErrorKind::BadIdleness:
        case ErrorKind::SamePair:
            return kExitInput;
        default:
            return kExitStructural;
    }
}

void emit(const json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(out);
    if (!f) throw Error(ErrorKind::Parse, "cannot write " + out);
    f << j.dump(2) << "\n";
}

Graph load(const std::string& path) {
    if (!std::filesystem::exists(path)) throw Error(ErrorKind::Parse, "no such file: " + path);
    return read_graph(path);
}

FamilySpec spec_from_args(const std::string& family, const std::vector<std::string>& args) {
    if (args.empty() && family.find(':') != std::string::npos) return parse_family_token(family);
    FamilySpec spec;
    spec.family = family_from_name(family);
    if (spec.family == Family::Product) {
        for (const auto& a : args) spec.factors.push_back(parse_family_token(a));
        return spec;
    }
    for (const auto& a : args) {
        try {
            std::size_t used = 0;
            int v = std::stoi(a, &used);
            if (used != a.size()) throw std::invalid_argument(a);
            spec.params.push_back(v);
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::BadParam, "not an integer parameter: " + a);
        }
    }
    return spec;
}

void stops_in_range(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw Error(ErrorKind::VertexOutOfRange, "vertex out of range");
}

json be_json(const BEReport& r) {
    json j{{"vertex", r.vertex},
           {"curvature", round12(r.curvature)},
           {"bisection_curvature", round12(r.bisection_curvature)},
           {"schur_used", r.schur_used},
           {"is_sharp", r.is_sharp},
           {"s1_out_regular", r.s1_out_regular}};
    j["upper_bound"] = r.upper_bound ? json(to_string(*r.upper_bound)) : json(nullptr);
    if (r.s1pp_lambda1)
        j["s1pp_lambda1"] = std::isfinite(*r.s1pp_lambda1) ? json(round12(*r.s1pp_lambda1)) : json("inf");
    if (r.s1pp_passes) j["s1pp_passes"] = *r.s1pp_passes;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Ollivier-Ricci and Bakry-Emery curvature on finite regular graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    int jobs = 1;
    std::string out;
    app.add_option("--jobs,-j", jobs, "worker threads")->check(CLI::PositiveNumber);

    auto* gen = app.add_subcommand("gen", "generate a family member (graph6, or JSON for *.json)");
    std::string family;
    std::vector<std::string> gen_args;
    gen->add_option("family", family, "family name, or a token like johnson:6:3")->required();
    gen->add_option("params", gen_args, "integer parameters, or factor tokens for product");
    gen->add_option("-o,--output", out, "output file (graph6 on stdout otherwise)");

    std::string input;
    auto* analyze_cmd = app.add_subcommand("analyze", "full predicate pipeline as JSON");
    bool skip_be = false, skip_spherical = false;
    analyze_cmd->add_option("input", input)->required();
    analyze_cmd->add_flag("--skip-be", skip_be, "skip the Bakry-Emery scan");
    analyze_cmd->add_flag("--skip-spherical", skip_spherical, "skip the strong sphericity check");
    analyze_cmd->add_option("-o,--output", out);

    auto* curv = app.add_subcommand("curvature", "Ollivier-Ricci curvature of a pair or of every edge");
    std::vector<int> pair;
    bool all_edges = false, dump_plan = false;
    std::string idleness;
    curv->add_option("input", input)->required();
    curv->add_option("pair", pair, "x y")->expected(0, 2);
    curv->add_flag("--all-edges", all_edges);
    curv->add_option("--p", idleness, "also print kappa_p at this idleness, e.g. 1/2");
    curv->add_flag("--plan", dump_plan, "dump the optimal coupling at p = 1/(D+1)");

    auto* spec_cmd = app.add_subcommand("spectral", "normalized Laplacian and adjacency spectrum");
    spec_cmd->add_option("input", input)->required();
    spec_cmd->add_option("-o,--output", out);

    auto* be = app.add_subcommand("bakry-emery", "curvature K(infinity) at vertices");
    std::optional<int> be_vertex;
    bool be_all = false;
    be->add_option("input", input)->required();
    be->add_option("--vertex", be_vertex);
    be->add_flag("--all", be_all, "every vertex, plus the 1/D + 1/L scan");
    be->add_option("-o,--output", out);

    auto* sharp = app.add_subcommand("sharpness", "Bonnet-Myers and Lichnerowicz sharpness verdicts");
    sharp->add_option("input", input)->required();
    sharp->add_option("-o,--output", out);

    auto* cls = app.add_subcommand("classify", "match against the self-centered Bonnet-Myers sharp list");
    cls->add_option("input", input)->required();
    cls->add_option("-o,--output", out);

    auto* table = app.add_subcommand("table", "recompute a published table and diff against goldens");
    int table_id = 0;
    std::string json_out, fixtures;
    table->add_option("id", table_id)->required()->check(CLI::IsMember({1, 2, 3}));
    table->add_option("--json", json_out, "also write the table as JSON");
    table->add_option("--fixtures", fixtures, "fixture directory (default $CURVLAB_FIXTURES or bundled)");

    auto* tg = app.add_subcommand("transport-geodesic", "waypoints of z along a diameter geodesic from x");
    int tg_x = 0, tg_z = 0;
    std::vector<int> through;
    tg->add_option("input", input)->required();
    tg->add_option("x", tg_x)->required();
    tg->add_option("z", tg_z, "a vertex of B1(x)")->required();
    tg->add_option("--through", through, "vertices the geodesic must pass, in order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (gen->parsed()) {
            Graph g = from_spec(spec_from_args(family, gen_args));
            if (out.empty())
                std::cout << encode_graph6(g) << "\n";
            else
                write_graph(g, out);
            return 0;
        }
        if (analyze_cmd->parsed()) {
            AnalysisOptions opts{skip_be, skip_spherical, jobs, std::filesystem::path(input).filename().string()};
            emit(analyze(load(input), opts), out);
            return 0;
        }
        if (curv->parsed()) {
            Graph g = load(input);
            DistanceOracle d(g);
            require_connected(d);
            require_regular(g);
            std::vector<Edge> pairs;
            if (all_edges) {
                pairs = g.edges();
            } else if (pair.size() == 2) {
                pairs.push_back({pair[0], pair[1]});
            } else {
                throw Error(ErrorKind::BadParam, "give a pair x y or --all-edges");
            }
            for (auto [x, y] : pairs) {
                if (x < 0 || y < 0 || x >= g.order() || y >= g.order())
                    throw Error(ErrorKind::VertexOutOfRange, "vertex out of range");
                auto k = kappa(g, d, x, y);
                std::cout << x << " " << y << ": " << to_string(k.value) << " (" << to_string(k.method) << ")";
                if (!idleness.empty())
                    std::cout << "  kappa_" << idleness << " = " << to_string(kappa_p(g, d, x, y, parse_rational(idleness)).value);
                std::cout << "\n";
                if (dump_plan) std::cout << to_json(optimal_plan(g, d, x, y).plan).dump() << "\n";
            }
            return 0;
        }
        if (spec_cmd->parsed()) {
            auto s = spectral_summary(load(input));
            json j{{"lambda1", round12(s.lambda1)},
                   {"lambda1_multiplicity", s.lambda1_multiplicity},
                   {"theta1", round12(s.theta1)}};
            for (double v : s.full_spectrum) j["laplacian_spectrum"].push_back(round12(v));
            for (double v : s.adjacency_spectrum) j["adjacency_spectrum"].push_back(round12(v));
            emit(j, out);
            return 0;
        }
        if (be->parsed()) {
            Graph g = load(input);
            DistanceOracle d(g);
            require_connected(d);
            json j;
            if (be_all) {
                for (Vertex x = 0; x < g.order(); ++x) j["vertices"].push_back(be_json(be_curvature(g, d, x)));
                if (g.regular_degree()) {
                    auto c = conjecture_scan(g, d, jobs);
                    j["scan"] = {{"inf_curvature", round12(c.inf_curvature)},
                                 {"minimizer", c.minimizer},
                                 {"bound", to_string(c.bound)},
                                 {"holds", c.holds}};
                }
            } else {
                int x = be_vertex.value_or(0);
                if (x < 0 || x >= g.order()) throw Error(ErrorKind::VertexOutOfRange, "vertex out of range");
                j = be_json(be_curvature(g, d, x));
            }
            emit(j, out);
            return 0;
        }
        if (sharp->parsed()) {
            Graph g = load(input);
            DistanceOracle d(g);
            auto bm = bm_sharpness(g, d, jobs);
            auto lich = is_lichnerowicz_sharp(g, d);
            auto poles = poles_and_antipoles(d);
            json j{{"inf_kappa", to_string(bm.inf_edge_kappa)},
                   {"two_over_L", to_string(bm.two_over_L)},
                   {"bm_sharp", bm.is_bm_sharp},
                   {"witness_edge", {bm.witness_edge.first, bm.witness_edge.second}},
                   {"L_le_D", bm.diameter_at_most_degree},
                   {"L_divides_2D", bm.diameter_divides_twice_degree},
                   {"lichnerowicz_sharp", lich.sharp},
                   {"lambda1", round12(lich.lambda1)},
                   {"self_centered", poles.self_centered}};
            if (bm.is_bm_sharp) {
                j["interval_cover"] = interval_cover_check(d).ok;
                j["at_most_one_antipole"] = unique_antipole_check(d).at_most_one;
            }
            emit(j, out);
            return 0;
        }
        if (cls->parsed()) {
            Graph g = load(input);
            DistanceOracle d(g);
            auto m = classify(g, d);
            json j{{"matched", m.matched ? json(to_string(*m.matched)) : json(nullptr)},
                   {"in_classified_territory", m.in_classified_territory},
                   {"reason", m.reason}};
            if (m.matched) j["iso_witness"] = m.iso_witness;
            emit(j, out);
            return 0;
        }
        if (table->parsed()) {
            auto t = reproduce_table(table_id, fixtures.empty() ? fixtures_dir() : std::filesystem::path(fixtures), jobs);
            std::cout << render(t);
            if (!json_out.empty()) emit(to_json(t), json_out);
            return t.all_match() ? 0 : kExitMismatch;
        }
        if (tg->parsed()) {
            Graph g = load(input);
            DistanceOracle d(g);
            for (int v : through) stops_in_range(g, v);
            stops_in_range(g, tg_x);
            stops_in_range(g, tg_z);
            std::vector<Vertex> stops{tg_x};
            stops.insert(stops.end(), through.begin(), through.end());
            auto path = geodesic_through(d, g, stops);
            auto r = transport_geodesic(g, d, path, tg_z);
            emit(json{{"base", r.base}, {"waypoints", r.waypoints}, {"length", r.length}, {"geodesic", r.geodesic}}, out);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return 0;
}
