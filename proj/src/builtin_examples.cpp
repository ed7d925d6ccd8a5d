#include "gac/builtin_examples.hpp"

namespace gac::builtin {

namespace {

// Row i lists the in-weights of vertex i: entry (i, j) is the weight of
// the edge j -> i. Zero means no edge.
WeightedDigraph from_weight_rows(const std::vector<std::vector<double>>& w) {
    const int n = static_cast<int>(w.size());
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (w[i][j] != 0.0) edges.push_back({j, i, w[i][j]});
    return WeightedDigraph(n, std::move(edges));
}

}  // namespace

BuiltinExample example1() {
    const std::vector<std::vector<double>> w = {
        {0, 0, 0.78, 0.71, 0.93, 0.73},
        {0, 0, 0, 0, 0.90, 0.88},
        {0.98, 0, 0, 0.76, 0.55, 0},
        {0, 0.10, 0, 0, 0, 0.75},
        {0, 0, 0.61, 0.77, 0, 0},
        {0, 0, 0, 0, 0.61, 0},
    };
    return {from_weight_rows(w), 0.235, {0.0976, 0.2323, 0.2316, 0.8137, 0.1618, 0.4411}};
}

BuiltinExample example2() {
    const std::vector<std::vector<double>> w = {
        {0, 0, 0, 0.61, 0.75, 0},
        {0.60, 0, 0, 0.97, 0, 0.71},
        {0, 0.86, 0, 0.77, 0, 0},
        {0, 0, 0, 0, 0.74, 0.72},
        {0.85, 1, 0, 0, 0, 1},
        {0, 0, 0.76, 0, 0.58, 0},
    };
    return {from_weight_rows(w), 0.269, {0.1423, 0.4528, 0.6571, 0.0866, 0.5208, 0.2534}};
}

}  // namespace gac::builtin
