#include "gac/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <sstream>

#include "gac/errors.hpp"

namespace gac {

WeightedDigraph::WeightedDigraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n_ < 2) throw GraphError("graph needs at least 2 vertices, got " + std::to_string(n_));
    in_.resize(n_);
    adj_.assign(static_cast<size_t>(n_) * n_, 0);
    for (const Edge& e : edges_) {
        if (e.src < 0 || e.src >= n_ || e.dst < 0 || e.dst >= n_)
            throw GraphError("vertex id out of range on edge " + std::to_string(e.src) + "->" +
                             std::to_string(e.dst));
        if (e.src == e.dst)
            throw GraphError("self-loop on vertex " + std::to_string(e.src));
        if (!(e.weight > 0.0) || !std::isfinite(e.weight))
            throw GraphError("edge " + std::to_string(e.src) + "->" + std::to_string(e.dst) +
                             " has nonpositive or nonfinite weight");
        uint8_t& slot = adj_[static_cast<size_t>(e.src) * n_ + e.dst];
        if (slot) throw GraphError("duplicate edge " + std::to_string(e.src) + "->" + std::to_string(e.dst));
        slot = 1;
        in_[e.dst].push_back({e.src, e.weight});
    }
    for (auto& nb : in_)
        std::sort(nb.begin(), nb.end(), [](const InNeighbor& a, const InNeighbor& b) { return a.src < b.src; });
}

namespace {

// One CSV field; advances pos past the trailing comma if eat_comma.
double parse_number(std::string_view line, size_t& pos, int lineno, bool eat_comma) {
    const size_t end = eat_comma ? line.find(',', pos) : line.size();
    if (eat_comma && end == std::string_view::npos)
        throw GraphError("line " + std::to_string(lineno) + ": expected 3 comma-separated fields");
    std::string_view field = line.substr(pos, end - pos);
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t' || field.back() == '\r'))
        field.remove_suffix(1);
    double value = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
    if (res.ec != std::errc{} || res.ptr != field.data() + field.size())
        throw GraphError("line " + std::to_string(lineno) + ": cannot parse number from '" +
                         std::string(field) + "'");
    pos = eat_comma ? end + 1 : line.size();
    return value;
}

int parse_vertex(std::string_view line, size_t& pos, int lineno) {
    const double v = parse_number(line, pos, lineno, true);
    if (v != std::floor(v) || v < 0)
        throw GraphError("line " + std::to_string(lineno) + ": vertex id must be a nonnegative integer");
    return static_cast<int>(v);
}

}  // namespace

WeightedDigraph load_edge_list(std::string_view text) {
    std::vector<Edge> edges;
    int max_id = -1;
    int lineno = 0;
    size_t start = 0;
    while (start <= text.size()) {
        const size_t nl = text.find('\n', start);
        std::string_view line = text.substr(start, (nl == std::string_view::npos ? text.size() : nl) - start);
        start = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++lineno;
        // strip comments and whitespace-only lines
        if (const size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        bool blank = true;
        for (char c : line)
            if (c != ' ' && c != '\t' && c != '\r') { blank = false; break; }
        if (blank) continue;

        size_t pos = 0;
        const int src = parse_vertex(line, pos, lineno);
        const int dst = parse_vertex(line, pos, lineno);
        const double w = parse_number(line, pos, lineno, false);
        if (src == dst) throw GraphError("line " + std::to_string(lineno) + ": self-loop on vertex " +
                                         std::to_string(src));
        if (!(w > 0.0) || !std::isfinite(w))
            throw GraphError("line " + std::to_string(lineno) + ": weight must be finite and positive");
        edges.push_back({src, dst, w});
        max_id = std::max({max_id, src, dst});
    }
    return WeightedDigraph(max_id + 1, std::move(edges));
}

std::string to_edge_list(const WeightedDigraph& g) {
    std::string out;
    char buf[64];
    for (const Edge& e : g.edges()) {
        std::snprintf(buf, sizeof buf, "%d,%d,%.17g\n", e.src, e.dst, e.weight);
        out += buf;
    }
    return out;
}

std::string to_graph_json(const WeightedDigraph& g) {
    std::ostringstream os;
    os.precision(17);
    os << "{ \"n\": " << g.size() << ", \"edges\": [";
    bool first = true;
    for (const Edge& e : g.edges()) {
        if (!first) os << ", ";
        first = false;
        os << "[" << e.src << ", " << e.dst << ", " << e.weight << "]";
    }
    os << "] }";
    return os.str();
}

Mat laplacian(const WeightedDigraph& g) {
    const int n = g.size();
    Mat L(n, n);
    for (int i = 0; i < n; ++i) {
        double indeg = 0.0;
        for (const InNeighbor& nb : g.in_neighbors(i)) {
            L(i, nb.src) = -nb.weight;
            indeg += nb.weight;
        }
        L(i, i) = indeg;
    }
    return L;
}

double max_weighted_indegree(const WeightedDigraph& g) {
    double best = 0.0;
    for (int i = 0; i < g.size(); ++i) {
        double s = 0.0;
        for (const InNeighbor& nb : g.in_neighbors(i)) s += nb.weight;
        best = std::max(best, s);
    }
    return best;
}

DeltaCheck validate_delta(const WeightedDigraph& g, double delta) {
    const double indeg = max_weighted_indegree(g);
    const double upper = 1.0 / indeg;
    return {delta > 0.0 && delta < upper, indeg, upper};
}

bool is_strongly_connected(const WeightedDigraph& g) {
    const int n = g.size();
    // out-adjacency from the edge list; BFS from vertex 0 along both
    // directions (single-SCC check without a full Tarjan pass)
    std::vector<std::vector<int>> out(n), in(n);
    for (const Edge& e : g.edges()) {
        out[e.src].push_back(e.dst);
        in[e.dst].push_back(e.src);
    }
    auto reaches_all = [n](const std::vector<std::vector<int>>& adj) {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count == n;
    };
    return reaches_all(out) && reaches_all(in);
}

WeightedDigraph random_strongly_connected(int n, double extra_edge_prob, uint64_t seed) {
    if (n < 2) throw GraphError("generator needs n >= 2");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto weight = [&] { return 1.0 - unit(rng); };  // uniform on (0,1]

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<Edge> edges;
    std::vector<uint8_t> present(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        const int src = order[i];
        const int dst = order[(i + 1) % n];
        edges.push_back({src, dst, weight()});
        present[static_cast<size_t>(src) * n + dst] = 1;
    }
    for (int src = 0; src < n; ++src)
        for (int dst = 0; dst < n; ++dst) {
            if (src == dst || present[static_cast<size_t>(src) * n + dst]) continue;
            if (unit(rng) < extra_edge_prob) edges.push_back({src, dst, weight()});
        }
    return WeightedDigraph(n, std::move(edges));
}

}  // namespace gac
