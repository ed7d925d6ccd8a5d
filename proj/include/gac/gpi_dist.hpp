#pragma once

#include <string>
#include <vector>

#include "gac/gpi_central.hpp"
#include "gac/graph.hpp"
#include "gac/netsim.hpp"

namespace gac {

enum class LoopSchedule { Adaptive, Linear };

struct DistConfig {
    GpiConfig base;
    int l_max = 50;
    int m_max = 50;
    double eps_L = 1e-10;  // Taylor-loop increment cutoff (Adaptive)
    double eps_M = 1e-10;  // observer increment cutoff (Adaptive)
    LoopSchedule schedule = LoopSchedule::Adaptive;
};

/// Everything node i is allowed to know: its own scalars, its incident
/// edges, and three ages of history. Updates read only this struct plus
/// the in-neighbor messages of the current round.
struct NodeState {
    int id = 0;
    double delta = 0.0;
    double w1_i = 0.0;    // own entry of the unit left null eigenvector
    double w1_sum = 0.0;  // <w1, 1_n>
    std::vector<InNeighbor> in_edges;  // sorted by source id
    std::vector<int> out_edges;        // sorted by destination id

    double x_i = 0.0;  // own entry of the state vector x_k

    // history slots [0]=k-2, [1]=k-1, [2]=k (shifted once per iteration)
    std::array<double, 3> xbar_hist{};                 // intermediate state entries
    std::array<std::array<double, 3>, 4> zbar{};       // observer outputs, [s-1][age]

    // transients of the inner loops
    double y_cur = 0.0, ybar = 0.0;
    std::array<double, 4> z{};

    double d_check = 0.0, d_hat = 0.0, d_next = 0.0;
    double d_cur = 0.0;  // max-consensus result carried into the next iteration
    double lam_check = 0.0, lam_hat = 0.0, lam_tilde = 0.0;
    Scenario scenario = Scenario::Undecided;
};

/// Neighbor exchanges realizing the truncated-exponential action on the
/// previous state vector: l_star one-scalar sub-rounds after a priming
/// send. Each node ends with ybar = sum_{l<=l_used} y(l)/l!. A
/// nonnegative eps_cutoff stops early once max_i |y(l)-y(l-1)| drops
/// below it. Returns the number of update sub-rounds executed.
int taylor_loop(net::SimNetwork& net, std::vector<NodeState>& nodes, int l_star,
                double eps_cutoff);

/// Deflates ybar by the previous iteration's norm and w1-component
/// estimates and shifts the intermediate-state history. Pure local step.
/// Throws ObserverBreakdown on a nonpositive previous norm estimate.
void compute_xbar(NodeState& node, int k);

/// Four stacked consensus observers disseminating the inner products of
/// the three newest intermediate state vectors and w1: m_star four-scalar
/// sub-rounds after a priming send that seeds the observers from the
/// local history. Shifts the observer history and stores the new
/// outputs. Returns update sub-rounds executed.
int consensus_observer(net::SimNetwork& net, std::vector<NodeState>& nodes, int k, int m_star,
                       double eps_cutoff);

/// x_k^i from the freshly observed norm estimate. Throws
/// ObserverBreakdown when that estimate is nonpositive.
void node_update_state(NodeState& node);

/// Both subspace distances from the node's observer scalars; radicands
/// clamped into [0,1] so observer noise cannot produce NaN.
void node_distances(NodeState& node);

/// Rayleigh quotient magnitude and dominant 2x2 magnitude from observer
/// scalars; a singular 2x2 Gram leaves the previous lam_hat in place.
void node_eigs(NodeState& node);

/// Branch selection between the two estimates, identical to the
/// centralized rule (ties go to the 1-d branch).
void node_finalize(NodeState& node);

/// Max-consensus on d_next: `rounds` one-scalar exchange sub-rounds; with
/// rounds >= n-1 every node ends holding the global max in d_cur.
void termination_sweep(net::SimNetwork& net, std::vector<NodeState>& nodes, int rounds);

struct NodeTraceRecord {
    int k;
    int node;
    double d_check, d_hat, d, lam_tilde;
    Scenario scenario;
};

struct DistResult {
    std::vector<double> gac_estimates;  // per node
    std::vector<Scenario> scenarios;    // per node
    int iterations = 0;
    bool converged = false;
    net::SimStats stats;
    long congest_rounds = 0;
    long congest_baseline = 0;
    std::vector<NodeTraceRecord> traces;
};

/// Algorithm host: per main iteration runs the Taylor loop, the stacked
/// observers, the local updates, and an (n-1)-round termination sweep,
/// until every node's consensus distance falls below epsilon.
/// w1 is computed centrally and injected as the two per-node constants.
DistResult run_distributed(const WeightedDigraph& g, const DistConfig& cfg);

/// Node construction shared by run_distributed and the phase-level tests.
std::vector<NodeState> make_nodes(const WeightedDigraph& g, const Vec& w1, const Vec& x0,
                                  double delta);

std::string node_trace_to_csv(const std::vector<NodeTraceRecord>& traces);
std::string message_stats_to_json(const net::SimStats& stats);

}  // namespace gac
