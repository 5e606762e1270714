#include "curvlab/tables.hpp"

#include "curvlab/families.hpp"
#include "curvlab/graph_io.hpp"
#include "curvlab/isomorphism.hpp"
#include "curvlab/parallel.hpp"
#include "curvlab/sharpness.hpp"
#include "curvlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace curvlab {

bool Table::all_match() const {
    for (const auto& r : rows)
        for (const auto& c : r.cells)
            if (!c.matches) return false;
    return true;
}

std::vector<std::string> Table::mismatches() const {
    std::vector<std::string> out;
    for (const auto& r : rows)
        for (const auto& c : r.cells)
            if (!c.matches) out.push_back(r.graph_id + " / " + c.column + ": expected " + c.expected + ", got " + c.actual);
    return out;
}

std::filesystem::path fixtures_dir() {
    if (const char* env = std::getenv("CURVLAB_FIXTURES"); env && *env) return env;
    return CURVLAB_DEFAULT_FIXTURES;
}

namespace {

std::string fmt12(double x) {
    if (std::abs(x) < 1e-12) x = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string str(long long v) { return std::to_string(v); }

TableCell exact(std::string column, std::string expected, std::string actual, std::string note = {}) {
    TableCell c{std::move(column), std::move(expected), std::move(actual), CellKind::Exact, 0.0, std::move(note), false};
    c.matches = c.expected == c.actual;
    return c;
}

TableCell approx(std::string column, const Rational& expected, double actual, std::string note = {}) {
    TableCell c{std::move(column), to_string(expected), fmt12(actual), CellKind::Float, kEigenTolerance, std::move(note),
                false};
    c.matches = std::abs(to_double(expected) - actual) <= kEigenTolerance;
    return c;
}

std::string srg_string(const std::optional<SrgParams>& p) {
    if (!p) return "not srg";
    return "(" + str(p->nu) + "," + str(p->k) + "," + (p->lambda ? str(*p->lambda) : std::string("*")) + "," +
           str(p->mu) + ")";
}

// Every mu-graph is CP(m) for one m.
std::string mu_graph_shape(const Graph& g, const DistanceOracle& d) {
    auto v = mu_graphs_all_cp(g, d);
    if (!v.all_cp) return "not cocktail party";
    if (v.m_counts.size() != 1) return "mixed CP sizes";
    return "CP(" + str(v.m_counts.begin()->first) + ")";
}

// label when every induced 1-sphere is isomorphic to reference.
std::string sphere_shape(const Graph& g, const std::string& label, const Graph& reference) {
    for (Vertex x = 0; x < g.order(); ++x) {
        std::vector<Vertex> s1(g.neighbours(x).begin(), g.neighbours(x).end());
        Graph local = induced_subgraph(g, s1);
        if (!are_isomorphic(local, reference)) {
            auto p = is_strongly_regular(local);
            return "vertex " + str(x) + ": " + (p ? "srg" + srg_string(p) : std::string("not srg"));
        }
    }
    return label;
}

std::string c_sequence(const std::optional<IntersectionArray>& ia) {
    if (!ia) return "not distance-regular";
    std::string s = "c=(";
    for (std::size_t j = 0; j < ia->c.size(); ++j) s += (j ? "," : "") + str(ia->c[j]);
    return s + ")";
}

std::string c_sequence(const std::vector<int>& c) {
    IntersectionArray ia;
    ia.c = c;
    return c_sequence(std::optional<IntersectionArray>(ia));
}

struct RowJob {
    std::string id;
    std::function<Graph()> build;
    std::function<std::vector<TableCell>(const Graph&)> cells;
};

Graph load_fixture(const std::filesystem::path& dir, const std::string& file) {
    auto path = dir / file;
    if (!std::filesystem::exists(path)) throw Error(ErrorKind::Parse, "missing fixture " + path.string());
    return read_graph(path);
}

// Table 1: the self-centered Bonnet-Myers sharp families.
std::vector<RowJob> table1_rows() {
    std::vector<RowJob> rows;
    struct Golden {
        std::string id;
        std::function<Graph()> build;
        int V, D, L, dim, mu;
        std::string s1_label;
        std::function<Graph()> s1_ref;
        std::vector<int> c;
    };
    std::vector<Golden> goldens;
    for (int n = 2; n <= 6; ++n) {
        std::vector<int> c;
        for (int j = 1; j <= n; ++j) c.push_back(j);  // c_j = j
        goldens.push_back({"Q^" + str(n), [n] { return hypercube(n); }, 1 << n, n, n, n, 1, str(n) + " points",
                           [n] { return empty_graph(n); }, c});
    }
    for (int n = 2; n <= 5; ++n)
        goldens.push_back({"CP(" + str(n) + ")", [n] { return cocktail_party(n); }, 2 * n, 2 * n - 2, 2, n, n - 1,
                           "CP(" + str(n - 1) + ")", [n] { return cocktail_party(n - 1); }, {1, 2 * n - 2}});
    goldens.push_back({"J(6,3)", [] { return johnson(6, 3); }, 20, 9, 3, 5, 2, "K_3xK_3", [] { return lattice(3); },
                       {1, 4, 9}});  // c_j = j^2
    goldens.push_back({"Q^6_(2)", [] { return demi_cube(6); }, 32, 15, 3, 6, 3, "J(6,2)", [] { return triangular(6); },
                       {1, 6, 15}});  // c_j = j(2j-1)
    goldens.push_back({"Gosset", [] { return gosset(); }, 56, 27, 3, 7, 5, "Schlafli", [] { return schlafli(); },
                       {1, 10, 27}});

    for (auto& gd : goldens) {
        rows.push_back({gd.id, gd.build, [gd](const Graph& g) {
                            DistanceOracle d(g);
                            auto spec = spectral_summary(g);
                            int D = g.regular_degree().value_or(-1);
                            std::vector<TableCell> cells;
                            cells.push_back(exact("|V|", str(gd.V), str(g.order())));
                            cells.push_back(exact("(D,L)", "(" + str(gd.D) + "," + str(gd.L) + ")",
                                                  "(" + str(D) + "," + str(d.diameter()) + ")"));
                            cells.push_back(exact("dim E_lambda1", str(gd.dim), str(spec.lambda1_multiplicity)));
                            cells.push_back(exact("mu-graph", "CP(" + str(gd.mu) + ")", mu_graph_shape(g, d)));
                            cells.push_back(exact("S1(x)", gd.s1_label, sphere_shape(g, gd.s1_label, gd.s1_ref())));
                            cells.push_back(exact("intersection array", c_sequence(gd.c),
                                                  c_sequence(intersection_array(g, d))));
                            return cells;
                        }});
    }
    return rows;
}

struct SpectralGolden {
    std::string id;
    std::function<Graph()> build;
    std::string srg;  // Table 2 only
    int V = 0, D = 0, L = 0;  // Table 3 only
    Rational theta1, lambda1, kappa;
    std::string theta_note, lambda_note;
};

std::vector<TableCell> spectral_cells(const SpectralGolden& gd, const Graph& g, bool with_srg, int jobs) {
    DistanceOracle d(g);
    auto spec = spectral_summary(g);
    auto bm = bm_sharpness(g, d, jobs);
    std::vector<TableCell> cells;
    if (with_srg) {
        cells.push_back(exact("(nu,k,lambda,mu)", gd.srg, srg_string(is_strongly_regular(g))));
    } else {
        cells.push_back(exact("|V|", str(gd.V), str(g.order())));
        cells.push_back(exact("D", str(gd.D), str(g.regular_degree().value_or(-1))));
        cells.push_back(exact("L", str(gd.L), str(d.diameter())));
    }
    cells.push_back(approx("theta1", gd.theta1, spec.theta1, gd.theta_note));
    cells.push_back(approx("lambda1", gd.lambda1, spec.lambda1, gd.lambda_note));
    cells.push_back(exact("inf kappa", to_string(gd.kappa), to_string(bm.inf_edge_kappa)));
    return cells;
}

// Table 2: strongly regular graphs with smallest adjacency eigenvalue -2.
std::vector<SpectralGolden> table2_goldens(const std::filesystem::path& fx) {
    std::vector<SpectralGolden> out;
    auto srg = [](long long a, long long b, long long c, long long e) {
        return "(" + str(a) + "," + str(b) + "," + str(c) + "," + str(e) + ")";
    };
    for (int n = 3; n <= 5; ++n)
        out.push_back({"CP(" + str(n) + ")", [n] { return cocktail_party(n); },
                       srg(2 * n, 2 * n - 2, 2 * n - 4, 2 * n - 2), 0, 0, 0, 0, 1, 1, {}, {}});
    for (int n = 3; n <= 5; ++n) {
        Rational k(n, 2 * (n - 1));
        out.push_back({"K_" + str(n) + "xK_" + str(n), [n] { return lattice(n); },
                       srg(n * n, 2 * (n - 1), n - 2, 2), 0, 0, 0, n - 2, k, k, {}, {}});
    }
    out.push_back({"Shrikhande", [] { return shrikhande(); }, srg(16, 6, 2, 2), 0, 0, 0, 2, Rational(2, 3),
                   Rational(1, 3), {}, {}});
    for (int n = 5; n <= 8; ++n) {
        Rational k(n, 2 * (n - 2));
        out.push_back({"J(" + str(n) + ",2)", [n] { return triangular(n); },
                       srg(n * (n - 1) / 2, 2 * (n - 2), n - 2, 4), 0, 0, 0, n - 4, k, k, {}, {}});
    }
    for (int i = 1; i <= 3; ++i) {
        std::string file = "chang" + str(i) + ".g6";
        out.push_back({"Chang " + str(i), [fx, file] { return load_fixture(fx, file); }, srg(28, 12, 6, 4), 0, 0, 0, 4,
                       Rational(2, 3), Rational(1, 3), {}, {}});
    }
    out.push_back({"Petersen", [] { return kneser(5, 2); }, srg(10, 3, 0, 1), 0, 0, 0, 1, Rational(2, 3), 0, {}, {}});
    out.push_back({"Q^5_(2)", [] { return demi_cube(5); }, srg(16, 10, 6, 6), 0, 0, 0, 2, Rational(4, 5),
                   Rational(4, 5), {}, {}});
    out.push_back({"Schlafli", [] { return schlafli(); }, srg(27, 16, 10, 8), 0, 0, 0, 4, Rational(3, 4),
                   Rational(3, 4), {}, {}});
    return out;
}

// Table 3: distance-regular graphs with theta1 = b1 - 1.
std::vector<SpectralGolden> table3_goldens(const std::filesystem::path& fx) {
    std::vector<SpectralGolden> out;
    for (auto [n, dd] : {std::pair{3, 2}, std::pair{4, 2}}) {
        int V = 1;
        for (int i = 0; i < dd; ++i) V *= n;
        Rational k(n, dd * (n - 1));
        out.push_back({"(K_" + str(n) + ")^" + str(dd), [n, dd] { return hamming(n, dd); }, {}, V, dd * (n - 1), dd,
                       n * (dd - 1) - dd, k, k, {}, {}});
    }
    {
        int s = 1 + 2 * 1;  // n + 2m
        out.push_back({"Doob(1,1)", [] { return doob(1, 1); }, {}, 1 << (2 * s), 3 * s, s, 3 * s - 4,
                       Rational(4, 3 * s), Rational(2, 3 * s), {}, {}});
    }
    out.push_back({"Kneser(7,2)", [] { return kneser(7, 2); }, {}, 21, 10, 2, 1, Rational(9, 10), Rational(1, 2),
                   "erratum: printed 3", "erratum: printed 7/10"});
    out.push_back({"Conway-Smith", [fx] { return load_fixture(fx, "conway_smith.g6"); }, {}, 63, 10, 4, 5,
                   Rational(1, 2), Rational(-1, 10), {}, {}});
    out.push_back({"Hall", [fx] { return load_fixture(fx, "hall.g6"); }, {}, 65, 10, 3, 5, Rational(1, 2),
                   Rational(-1, 10), {}, {}});
    {
        int n = 6, k = 3;
        Rational c(n, k * (n - k));
        out.push_back({"J(6,3)", [] { return johnson(6, 3); }, {}, 20, k * (n - k), std::min(k, n - k),
                       k * (n - k) - n, c, c, {}, {}});
    }
    {
        int n = 5;
        out.push_back({"Q^5_(2)", [] { return demi_cube(5); }, {}, 1 << (n - 1), n * (n - 1) / 2, n / 2,
                       (n - 4) * (n - 1) / 2, Rational(4, n), Rational(4, n), {}, {}});
    }
    out.push_back({"Gosset", [] { return gosset(); }, {}, 56, 27, 3, 9, Rational(2, 3), Rational(2, 3), {}, {}});
    return out;
}

}  // namespace

Table reproduce_table(int id, const std::filesystem::path& fixtures, int jobs) {
    Table t;
    t.id = id;
    std::vector<RowJob> jobs_list;
    if (id == 1) {
        t.columns = {"|V|", "(D,L)", "dim E_lambda1", "mu-graph", "S1(x)", "intersection array"};
        jobs_list = table1_rows();
    } else if (id == 2 || id == 3) {
        bool srg = id == 2;
        t.columns = srg ? std::vector<std::string>{"(nu,k,lambda,mu)", "theta1", "lambda1", "inf kappa"}
                        : std::vector<std::string>{"|V|", "D", "L", "theta1", "lambda1", "inf kappa"};
        for (auto& gd : srg ? table2_goldens(fixtures) : table3_goldens(fixtures))
            jobs_list.push_back({gd.id, gd.build, [gd, srg](const Graph& g) { return spectral_cells(gd, g, srg, 1); }});
    } else {
        throw Error(ErrorKind::BadParam, "table id must be 1, 2 or 3");
    }
    t.rows.resize(jobs_list.size());
    parallel_for(jobs_list.size(), jobs, [&](std::size_t i) {
        Graph g = jobs_list[i].build();
        t.rows[i] = {jobs_list[i].id, jobs_list[i].cells(g)};
    });
    return t;
}

std::string render(const Table& t) {
    std::vector<std::string> header{"G"};
    header.insert(header.end(), t.columns.begin(), t.columns.end());
    std::vector<std::vector<std::string>> grid{header};
    for (const auto& r : t.rows) {
        std::vector<std::string> line{r.graph_id};
        for (const auto& c : r.cells) {
            std::string s = c.actual;
            if (!c.matches) s += " [expected " + c.expected + "]";
            if (!c.note.empty()) s += " (" + c.note + ")";
            line.push_back(s);
        }
        grid.push_back(line);
    }
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& line : grid)
        for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    std::ostringstream os;
    os << "Table " << t.id << "\n";
    for (std::size_t k = 0; k < grid.size(); ++k) {
        for (std::size_t i = 0; i < grid[k].size(); ++i) {
            os << (i ? " | " : "") << grid[k][i];
            if (i + 1 < grid[k].size()) os << std::string(width[i] - grid[k][i].size(), ' ');
        }
        os << "\n";
        if (k == 0) {
            for (std::size_t i = 0; i < width.size(); ++i) os << (i ? "-+-" : "") << std::string(width[i], '-');
            os << "\n";
        }
    }
    auto bad = t.mismatches();
    os << (bad.empty() ? "all cells match\n" : std::to_string(bad.size()) + " cell(s) differ\n");
    for (const auto& b : bad) os << "  " << b << "\n";
    return os.str();
}

nlohmann::json to_json(const Table& t) {
    nlohmann::json j;
    j["table"] = t.id;
    j["columns"] = t.columns;
    j["all_match"] = t.all_match();
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : t.rows) {
        nlohmann::json cells = nlohmann::json::object();
        for (const auto& c : r.cells) {
            nlohmann::json cj{{"expected", c.expected}, {"actual", c.actual}, {"matches", c.matches}};
            if (c.kind == CellKind::Float) cj["tolerance"] = c.tolerance;
            if (!c.note.empty()) cj["note"] = c.note;
            cells[c.column] = cj;
        }
        rows.push_back({{"graph", r.graph_id}, {"cells", cells}});
    }
    j["rows"] = rows;
    return j;
}

}  // namespace curvlab
