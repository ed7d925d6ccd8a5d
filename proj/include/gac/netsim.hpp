#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "gac/graph.hpp"

namespace gac::net {

/// Fixed-size payload; the cap is the four stacked observer scalars.
/// Payload length never depends on the network size.
struct RoundMessage {
    int sender = -1;
    int len = 0;
    std::array<double, 4> payload{};
};

struct SimStats {
    long rounds = 0;
    long messages = 0;
    long total_scalars = 0;
    int max_payload_scalars = 0;
    /// Largest payload seen in each round; empty slots mean a compute-only
    /// round. Drives the CONGEST accounting.
    std::vector<int> round_max_payload;
};

/// Deterministic synchronous round-based message-passing simulator.
/// Messages sent during round r are delivered at the start of round r+1,
/// sorted by sender id; a node may send only along its outgoing edges.
/// Per-node compute sees nothing but its own state (captured by the
/// caller's closure), its inbox, and a send handle.
class SimNetwork {
public:
    explicit SimNetwork(const WeightedDigraph& g);

    class Mailer {
    public:
        /// Queue scalars for dst; throws LocalityViolation unless the edge
        /// src -> dst exists. At most 4 scalars per message.
        void send(int dst, std::span<const double> scalars);

    private:
        friend class SimNetwork;
        Mailer(SimNetwork& net, int src) : net_(net), src_(src) {}
        SimNetwork& net_;
        int src_;
    };

    using Compute = std::function<double(int node, std::span<const RoundMessage> inbox, Mailer& out)>;

    /// Two-phase round: deliver the previous round's outboxes, then run
    /// compute for every node. Returns the max of the per-node control
    /// metrics (used by adaptive inner-loop termination).
    double run_round(const Compute& compute);

    int size() const { return n_; }
    long round() const { return stats_.rounds; }
    const SimStats& stats() const { return stats_; }
    const WeightedDigraph& topology() const { return g_; }

private:
    const WeightedDigraph& g_;
    int n_;
    std::vector<std::vector<RoundMessage>> inboxes_, outboxes_;
    SimStats stats_;
    int current_round_max_ = 0;
};

/// CONGEST slot count for one delivered payload: a link carries
/// O(log2 n) bits per slot, a scalar is 64 bits.
long congest_slots(int payload_scalars, int n);

/// Whole-run CONGEST-equivalent rounds: message-bearing rounds cost the
/// slots of their largest payload (links run in parallel).
long congest_equivalent_rounds(const SimStats& stats, int n);

/// Synthetic O(n)-payload baseline over the same
/// rounds: what the run would cost if every message carried n scalars.
long congest_baseline_rounds(const SimStats& stats, int n);

}  // namespace gac::net
