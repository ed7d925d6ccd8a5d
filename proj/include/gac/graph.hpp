#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gac/matrix.hpp"

namespace gac {

struct Edge {
    int src;
    int dst;
    double weight;
};

struct InNeighbor {
    int src;
    double weight;
};

/// Immutable weighted digraph. An edge (src, dst, w) means information
/// flows src -> dst; in row terms, w is the in-weight of dst contributed
/// by src. Vertex ids are dense 0..n-1, weights finite and positive,
/// self-loops and duplicate (src, dst) pairs rejected at construction.
class WeightedDigraph {
public:
    WeightedDigraph(int n, std::vector<Edge> edges);

    int size() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// In-neighbors of v, sorted by source id.
    std::span<const InNeighbor> in_neighbors(int v) const { return in_[v]; }

    bool has_edge(int src, int dst) const { return adj_[static_cast<size_t>(src) * n_ + dst] != 0; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<InNeighbor>> in_;
    std::vector<uint8_t> adj_;
};

/// Parses the CSV edge-list format: one `src,dst,weight` per line,
/// `#` starts a comment, blank lines ignored. Throws GraphError with the
/// offending line number on malformed input.
WeightedDigraph load_edge_list(std::string_view text);

/// Inverse of load_edge_list; weights are emitted at full precision.
std::string to_edge_list(const WeightedDigraph& g);

/// { "n": int, "edges": [[src,dst,weight],...] }
std::string to_graph_json(const WeightedDigraph& g);

/// Row i: diagonal = summed in-weights of i, entry (i,j) = -w_ij for each
/// in-neighbor j. Rows sum to zero by construction.
Mat laplacian(const WeightedDigraph& g);

/// Largest summed in-weight over all vertices.
double max_weighted_indegree(const WeightedDigraph& g);

struct DeltaCheck {
    bool ok;
    double max_indegree;
    double upper;  // admissible open interval is (0, upper)
};

/// Admissible iff 0 < delta < 1/max_weighted_indegree, both strict.
DeltaCheck validate_delta(const WeightedDigraph& g, double delta);

bool is_strongly_connected(const WeightedDigraph& g);

/// Random strongly connected digraph: a Hamiltonian directed cycle over a
/// random vertex order guarantees connectivity, then every remaining
/// ordered pair is added independently with probability extra_edge_prob.
/// Weights are uniform on (0,1]. Deterministic in (n, prob, seed).
WeightedDigraph random_strongly_connected(int n, double extra_edge_prob, uint64_t seed);

}  // namespace gac
