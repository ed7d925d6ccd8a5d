#pragma once

#include "gac/graph.hpp"
#include "gac/matrix.hpp"

namespace gac::builtin {

/// A packaged six-node benchmark network: the graph, the admissible delta
/// used in its reference runs, and the fixed unit initial vector.
struct BuiltinExample {
    WeightedDigraph graph;
    double delta;
    Vec x0;
};

/// Six-node digraph whose connectivity value comes from a complex
/// conjugate eigenvalue pair of its Laplacian.
BuiltinExample example1();

/// Six-node digraph whose connectivity value comes from a real Laplacian
/// eigenvalue.
BuiltinExample example2();

}  // namespace gac::builtin
