#include "gac/netsim.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gac/errors.hpp"

namespace gac::net {

SimNetwork::SimNetwork(const WeightedDigraph& g)
    : g_(g), n_(g.size()), inboxes_(n_), outboxes_(n_) {}

void SimNetwork::Mailer::send(int dst, std::span<const double> scalars) {
    if (dst < 0 || dst >= net_.n_ || !net_.g_.has_edge(src_, dst))
        throw LocalityViolation("node " + std::to_string(src_) + " has no link to " +
                                std::to_string(dst));
    if (scalars.empty() || scalars.size() > 4)
        throw LocalityViolation("payload must carry 1..4 scalars");
    RoundMessage m;
    m.sender = src_;
    m.len = static_cast<int>(scalars.size());
    std::copy(scalars.begin(), scalars.end(), m.payload.begin());
    net_.outboxes_[dst].push_back(m);

    // link usage is accounted in the round the message is sent
    SimStats& s = net_.stats_;
    ++s.messages;
    s.total_scalars += m.len;
    s.max_payload_scalars = std::max(s.max_payload_scalars, m.len);
    net_.current_round_max_ = std::max(net_.current_round_max_, m.len);
}

double SimNetwork::run_round(const Compute& compute) {
    // delivery phase: previous outboxes become this round's inboxes
    for (int v = 0; v < n_; ++v) {
        inboxes_[v] = std::move(outboxes_[v]);
        outboxes_[v].clear();
        std::sort(inboxes_[v].begin(), inboxes_[v].end(),
                  [](const RoundMessage& a, const RoundMessage& b) { return a.sender < b.sender; });
    }

    // compute phase
    current_round_max_ = 0;
    double metric = 0.0;
    for (int v = 0; v < n_; ++v) {
        Mailer mailer(*this, v);
        metric = std::max(metric, compute(v, std::span<const RoundMessage>(inboxes_[v]), mailer));
    }

    ++stats_.rounds;
    stats_.round_max_payload.push_back(current_round_max_);
    return metric;
}

long congest_slots(int payload_scalars, int n) {
    const double bits_per_slot = std::log2(static_cast<double>(n));
    return static_cast<long>(std::ceil(payload_scalars * 64.0 / bits_per_slot));
}

long congest_equivalent_rounds(const SimStats& stats, int n) {
    long total = 0;
    for (int p : stats.round_max_payload)
        if (p > 0) total += congest_slots(p, n);
    return total;
}

long congest_baseline_rounds(const SimStats& stats, int n) {
    long total = 0;
    for (int p : stats.round_max_payload)
        if (p > 0) total += congest_slots(n, n);
    return total;
}

}  // namespace gac::net
