#pragma once

#include "curvlab/graph.hpp"

#include <json.hpp>

#include <string>

namespace curvlab {

struct AnalysisOptions {
    bool skip_be = false;
    bool skip_spherical = false;
    int jobs = 1;
    std::string name;
};

// Double rounded to 12 significant digits, so dumps are stable across platforms.
double round12(double x);

// Full predicate pipeline. Keys come out sorted (nlohmann::json objects are
// ordered maps) and fractions are "p/q" strings.
// Throws Disconnected, NotRegular.
nlohmann::json analyze(const Graph& g, const AnalysisOptions& opts = {});

}  // namespace curvlab
