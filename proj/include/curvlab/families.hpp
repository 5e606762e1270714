#pragma once

#include "curvlab/graph.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace curvlab {

enum class Family {
    Hypercube,
    CocktailParty,
    Complete,
    Johnson,
    Kneser,
    DemiCube,
    Gosset,
    Schlafli,
    Shrikhande,
    Hamming,
    Doob,
    Lattice,
    Triangular,
    Product,
};

struct FamilySpec {
    Family family = Family::Complete;
    std::vector<int> params;
    std::vector<FamilySpec> factors;  // Product only

    bool operator==(const FamilySpec&) const = default;
};

std::string_view family_name(Family f);
Family family_from_name(std::string_view name);  // throws BadParam

// Compact notation used by the CLI and in reports: "johnson:6:3",
// "product(johnson:6:3,cocktailparty:4)".
std::string to_string(const FamilySpec& spec);
FamilySpec parse_family_token(std::string_view token);

nlohmann::json to_json(const FamilySpec& spec);
FamilySpec family_spec_from_json(const nlohmann::json& j);

// Throws BadParam on invalid parameters.
Graph from_spec(const FamilySpec& spec);

Graph hypercube(int n);
Graph cocktail_party(int n);
Graph complete_graph(int n);
Graph johnson(int n, int k);
Graph kneser(int n, int k);
Graph demi_cube(int n);
Graph gosset();
Graph schlafli();
Graph shrikhande();
Graph hamming(int n, int d);  // (K_n)^d
Graph doob(int n, int m);     // K_4^n x Shrikhande^m
Graph lattice(int n);         // K_n x K_n
Graph triangular(int n);      // J(n,2)
Graph product(const std::vector<Graph>& factors);

// Graphs outside the named families, used by tests and the CLI.
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph empty_graph(int n);

}  // namespace curvlab
