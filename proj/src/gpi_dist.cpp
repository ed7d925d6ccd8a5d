#include "gac/gpi_dist.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "gac/errors.hpp"

namespace gac {

namespace {

constexpr double kEulerE = 2.718281828459045235360287;

// indices into NodeState::zbar: observer s runs 1..4 in the protocol
constexpr int kZNorm = 0;      // <xbar_k, xbar_k>
constexpr int kZPrev = 1;      // <xbar_k, xbar_k-1>
constexpr int kZPrev2 = 2;     // <xbar_k, xbar_k-2>
constexpr int kZW1 = 3;        // <xbar_k, w1>

// Per-node compute signature that cannot see other nodes' state.
template <typename Fn>
double run_node_round(net::SimNetwork& net, std::vector<NodeState>& nodes, Fn&& fn) {
    return net.run_round([&](int i, std::span<const net::RoundMessage> inbox,
                             net::SimNetwork::Mailer& out) { return fn(nodes[i], inbox, out); });
}

// Sum over in-neighbors of w_ij * (value_j - own). Relies on the inbox
// holding exactly one message per in-neighbor, sorted by sender, which
// the synchronous phase structure guarantees.
double neighborhood_drift(const NodeState& node, std::span<const net::RoundMessage> inbox,
                          int slot, double own) {
    if (inbox.size() != node.in_edges.size())
        throw std::logic_error("node " + std::to_string(node.id) + " expected " +
                               std::to_string(node.in_edges.size()) + " messages, got " +
                               std::to_string(inbox.size()));
    double acc = 0.0;
    for (size_t idx = 0; idx < inbox.size(); ++idx) {
        if (inbox[idx].sender != node.in_edges[idx].src)
            throw std::logic_error("inbox sender does not match the in-neighbor list");
        acc += node.in_edges[idx].weight * (inbox[idx].payload[slot] - own);
    }
    return acc;
}

}  // namespace

int taylor_loop(net::SimNetwork& net, std::vector<NodeState>& nodes, int l_star,
                double eps_cutoff) {
    // priming: y(0) = x_{k-1}, announced to out-neighbors
    run_node_round(net, nodes, [](NodeState& me, std::span<const net::RoundMessage>,
                                  net::SimNetwork::Mailer& out) {
        me.y_cur = me.x_i;
        me.ybar = me.y_cur;
        const double payload[1] = {me.y_cur};
        for (int dst : me.out_edges) out.send(dst, payload);
        return 0.0;
    });

    double factorial = 1.0;
    int l_used = 0;
    for (int l = 1; l <= l_star; ++l) {
        factorial *= l;
        const bool more = l < l_star;
        const double metric = run_node_round(
            net, nodes,
            [&](NodeState& me, std::span<const net::RoundMessage> inbox,
                net::SimNetwork::Mailer& out) {
                const double y_new =
                    me.y_cur + me.delta * neighborhood_drift(me, inbox, 0, me.y_cur);
                const double delta_y = std::abs(y_new - me.y_cur);
                me.y_cur = y_new;
                me.ybar += y_new / factorial;
                if (more) {
                    const double payload[1] = {me.y_cur};
                    for (int dst : me.out_edges) out.send(dst, payload);
                }
                return delta_y;
            });
        ++l_used;
        if (eps_cutoff >= 0.0 && metric < eps_cutoff) break;
    }
    return l_used;
}

void compute_xbar(NodeState& node, int k) {
    (void)k;
    const double prev_norm_sq = node.zbar[kZNorm][2];
    if (prev_norm_sq <= 0.0)
        throw ObserverBreakdown("node " + std::to_string(node.id) +
                                ": previous norm estimate is nonpositive (" +
                                std::to_string(prev_norm_sq) + ")");
    const double deflation =
        kEulerE * node.w1_i * node.zbar[kZW1][2] / std::sqrt(prev_norm_sq);
    const double xbar = node.ybar - deflation;
    node.xbar_hist[0] = node.xbar_hist[1];
    node.xbar_hist[1] = node.xbar_hist[2];
    node.xbar_hist[2] = xbar;
}

int consensus_observer(net::SimNetwork& net, std::vector<NodeState>& nodes, int k, int m_star,
                       double eps_cutoff) {
    // priming: seed the four observers from local history and announce
    run_node_round(net, nodes, [k](NodeState& me, std::span<const net::RoundMessage>,
                                   net::SimNetwork::Mailer& out) {
        const double ratio = me.w1_sum / me.w1_i;
        const double xb_k = me.xbar_hist[2];
        me.z[kZNorm] = ratio * xb_k * xb_k;
        me.z[kZPrev] = ratio * me.xbar_hist[1] * xb_k;
        me.z[kZPrev2] = (k == 1) ? 0.0 : ratio * me.xbar_hist[0] * xb_k;
        me.z[kZW1] = me.w1_sum * xb_k;
        for (int dst : me.out_edges) out.send(dst, me.z);
        return 0.0;
    });

    int m_used = 0;
    for (int m = 1; m <= m_star; ++m) {
        const bool more = m < m_star;
        const double metric = run_node_round(
            net, nodes,
            [&](NodeState& me, std::span<const net::RoundMessage> inbox,
                net::SimNetwork::Mailer& out) {
                std::array<double, 4> z_new;
                double biggest = 0.0;
                for (int s = 0; s < 4; ++s) {
                    z_new[s] = me.z[s] + me.delta * neighborhood_drift(me, inbox, s, me.z[s]);
                    biggest = std::max(biggest, std::abs(z_new[s] - me.z[s]));
                }
                me.z = z_new;
                if (more)
                    for (int dst : me.out_edges) out.send(dst, me.z);
                return biggest;
            });
        ++m_used;
        if (eps_cutoff >= 0.0 && metric < eps_cutoff) break;
    }

    for (NodeState& node : nodes) {
        for (int s = 0; s < 4; ++s) {
            node.zbar[s][0] = node.zbar[s][1];
            node.zbar[s][1] = node.zbar[s][2];
            node.zbar[s][2] = node.z[s];
        }
    }
    return m_used;
}

void node_update_state(NodeState& node) {
    const double norm_sq = node.zbar[kZNorm][2];
    if (norm_sq <= 0.0)
        throw ObserverBreakdown("node " + std::to_string(node.id) +
                                ": norm estimate is nonpositive (" + std::to_string(norm_sq) +
                                "), observer output unusable");
    node.x_i = node.xbar_hist[2] / std::sqrt(norm_sq);
}

namespace {
double clamped_sqrt(double radicand) {
    if (std::isnan(radicand)) return 1.0;  // degenerate span, same convention as centralized
    return std::sqrt(std::clamp(radicand, 0.0, 1.0));
}
}  // namespace

void node_distances(NodeState& node) {
    const double z1k = node.zbar[kZNorm][2];
    const double z1k1 = node.zbar[kZNorm][1];
    const double z1k2 = node.zbar[kZNorm][0];
    const double z2k = node.zbar[kZPrev][2];
    const double z2k1 = node.zbar[kZPrev][1];
    const double z3k = node.zbar[kZPrev2][2];

    node.d_check = clamped_sqrt(1.0 - (z2k * z2k) / (z1k * z1k1));

    const double num = z2k * z2k1 - z3k * z1k1;
    const double den = (z1k * z1k1 - z2k * z2k) * (z1k1 * z1k2 - z2k1 * z2k1);
    node.d_hat = clamped_sqrt(1.0 - (num * num) / den);
}

void node_eigs(NodeState& node) {
    const double z1k1 = node.zbar[kZNorm][1];
    const double z1k2 = node.zbar[kZNorm][0];
    const double z2k = node.zbar[kZPrev][2];
    const double z2k1 = node.zbar[kZPrev][1];
    const double z3k = node.zbar[kZPrev2][2];

    node.lam_check = std::abs(z2k / std::sqrt(z1k1));

    if (z1k2 <= 0.0) return;  // stale norm estimate unusable, keep previous lam_hat
    const double gram_off = z2k1 / std::sqrt(z1k1 * z1k2);
    const double gram_det = 1.0 - gram_off * gram_off;
    if (std::abs(gram_det) <= 1e-14) return;  // singular Gram, carry previous value

    // unsimplified product: inverse of the Gram times the projected block
    const double m00 = z2k1 / std::sqrt(z1k2);
    const double m01 = z3k / std::sqrt(z1k2);
    const double m10 = std::sqrt(z1k1);
    const double m11 = z2k / std::sqrt(z1k1);
    const double r00 = (m00 - gram_off * m10) / gram_det;
    const double r01 = (m01 - gram_off * m11) / gram_det;
    const double r10 = (m10 - gram_off * m00) / gram_det;
    const double r11 = (m11 - gram_off * m01) / gram_det;
    node.lam_hat = dominant_2x2_magnitude(r00, r01, r10, r11);
}

void node_finalize(NodeState& node) {
    node.d_next = std::min(node.d_check, node.d_hat);
    if (node.d_check <= node.d_hat) {
        node.scenario = Scenario::Real;
        node.lam_tilde = (1.0 - std::log(node.lam_check)) / node.delta;
    } else {
        node.scenario = Scenario::ComplexPair;
        node.lam_tilde = (1.0 - std::log(node.lam_hat)) / node.delta;
    }
}

void termination_sweep(net::SimNetwork& net, std::vector<NodeState>& nodes, int rounds) {
    run_node_round(net, nodes, [](NodeState& me, std::span<const net::RoundMessage>,
                                  net::SimNetwork::Mailer& out) {
        me.d_cur = me.d_next;
        const double payload[1] = {me.d_cur};
        for (int dst : me.out_edges) out.send(dst, payload);
        return 0.0;
    });
    for (int r = 1; r <= rounds; ++r) {
        const bool more = r < rounds;
        run_node_round(net, nodes,
                       [more](NodeState& me, std::span<const net::RoundMessage> inbox,
                              net::SimNetwork::Mailer& out) {
                           for (const net::RoundMessage& m : inbox)
                               me.d_cur = std::max(me.d_cur, m.payload[0]);
                           if (more) {
                               const double payload[1] = {me.d_cur};
                               for (int dst : me.out_edges) out.send(dst, payload);
                           }
                           return 0.0;
                       });
    }
}

std::vector<NodeState> make_nodes(const WeightedDigraph& g, const Vec& w1, const Vec& x0,
                                  double delta) {
    const int n = g.size();
    double w1_sum = 0.0;
    for (double v : w1) w1_sum += v;

    std::vector<NodeState> nodes(n);
    for (int i = 0; i < n; ++i) {
        NodeState& node = nodes[i];
        node.id = i;
        node.delta = delta;
        node.w1_i = w1[i];
        node.w1_sum = w1_sum;
        node.in_edges.assign(g.in_neighbors(i).begin(), g.in_neighbors(i).end());
        node.x_i = x0[i];
        node.xbar_hist = {0.0, 0.0, x0[i]};  // xbar_0 is the unit initial vector
        // placeholder observer history: unit norms, no overlaps
        node.zbar[kZNorm] = {0.0, 1.0, 1.0};
        node.zbar[kZPrev] = {0.0, 0.0, 0.0};
        node.zbar[kZPrev2] = {0.0, 0.0, 0.0};
        node.zbar[kZW1] = {0.0, 0.0, 0.0};
        node.d_cur = 0.0;
        node.d_next = 0.0;
    }
    for (const Edge& e : g.edges()) nodes[e.src].out_edges.push_back(e.dst);
    for (NodeState& node : nodes) std::sort(node.out_edges.begin(), node.out_edges.end());
    return nodes;
}

DistResult run_distributed(const WeightedDigraph& g, const DistConfig& cfg) {
    if (!is_strongly_connected(g))
        throw GraphError("run_distributed: graph is not strongly connected");
    const DeltaCheck dc = validate_delta(g, cfg.base.delta);
    if (!dc.ok) {
        std::ostringstream os;
        os << "run_distributed: delta " << cfg.base.delta << " outside admissible interval (0, "
           << dc.upper << ")";
        throw GraphError(os.str());
    }

    const int n = g.size();
    const Mat lap = laplacian(g);
    const Vec w1 = left_null_eigvec(lap);

    Vec x0;
    if (cfg.base.x0) {
        if (static_cast<int>(cfg.base.x0->size()) != n)
            throw std::invalid_argument("initial vector length does not match the graph size");
        x0 = *cfg.base.x0;
    } else {
        std::mt19937_64 rng(cfg.base.seed);
        std::normal_distribution<double> gauss(0.0, 1.0);
        x0.resize(n);
        for (double& v : x0) v = gauss(rng);
    }
    if (norm2(x0) == 0.0) throw std::invalid_argument("initial vector must be nonzero");
    normalize(x0);

    std::vector<NodeState> nodes = make_nodes(g, w1, x0, cfg.base.delta);
    net::SimNetwork net(g);

    const bool adaptive = cfg.schedule == LoopSchedule::Adaptive;
    DistResult res;
    int k = 1;
    double global_d = cfg.base.epsilon;  // d_1 = epsilon at every node
    while (global_d >= cfg.base.epsilon) {
        if (k > cfg.base.max_iter) {
            res.converged = false;
            res.iterations = cfg.base.max_iter;
            break;
        }
        const int l_star = std::min(k, cfg.l_max);
        const int m_star = std::min(k, cfg.m_max);

        taylor_loop(net, nodes, l_star, adaptive ? cfg.eps_L : -1.0);
        for (NodeState& node : nodes) compute_xbar(node, k);
        consensus_observer(net, nodes, k, m_star, adaptive ? cfg.eps_M : -1.0);
        for (NodeState& node : nodes) {
            node_update_state(node);
            node_distances(node);
            node_eigs(node);
            node_finalize(node);
        }
        termination_sweep(net, nodes, n - 1);

        for (const NodeState& node : nodes)
            res.traces.push_back({k, node.id, node.d_check, node.d_hat, node.d_next,
                                  node.lam_tilde, node.scenario});

        global_d = nodes.front().d_cur;  // sweep leaves the same max everywhere
        res.iterations = k;
        res.converged = true;
        ++k;
    }

    res.gac_estimates.resize(n);
    res.scenarios.resize(n);
    for (int i = 0; i < n; ++i) {
        res.gac_estimates[i] = nodes[i].lam_tilde;
        res.scenarios[i] = nodes[i].scenario;
    }
    res.stats = net.stats();
    res.congest_rounds = net::congest_equivalent_rounds(res.stats, n);
    res.congest_baseline = net::congest_baseline_rounds(res.stats, n);
    return res;
}

std::string node_trace_to_csv(const std::vector<NodeTraceRecord>& traces) {
    std::ostringstream os;
    os.precision(12);
    os << "k,node,d_check,d_hat,d,lam_tilde,scenario\n";
    for (const NodeTraceRecord& r : traces)
        os << r.k << ',' << r.node << ',' << r.d_check << ',' << r.d_hat << ',' << r.d << ','
           << r.lam_tilde << ',' << scenario_letter(r.scenario) << '\n';
    return os.str();
}

std::string message_stats_to_json(const net::SimStats& stats) {
    std::ostringstream os;
    os << "{ \"rounds\": " << stats.rounds << ", \"messages\": " << stats.messages
       << ", \"max_payload_scalars\": " << stats.max_payload_scalars
       << ", \"total_scalars\": " << stats.total_scalars << " }";
    return os.str();
}

}  // namespace gac
