#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gac/graph.hpp"
#include "gac/matrix.hpp"
#include "gac/spectral.hpp"

namespace gac {

/// Dominant-eigenvalue scenario decided each iteration by comparing the
/// one- and two-dimensional subspace distances ("R" when the 1-d trail
/// settles, "I" when the 2-d trail does).
enum class Scenario { Undecided, Real, ComplexPair };

char scenario_letter(Scenario s);

struct GpiConfig {
    double delta = 0.0;
    double epsilon = 5e-4;   // termination threshold on min(d_check, d_hat)
    int max_iter = 500;
    uint64_t seed = 0;       // initial-vector generator
    std::optional<Vec> x0;   // explicit initial vector override (normalized on use)
};

/// One row per main iteration.
struct TraceRecord {
    int k;
    double d_check, d_hat, d;
    double lam_check, lam_hat, lam_tilde;
    Scenario scenario;
};

struct CentralState {
    int k = 1;
    Vec x_prev2, x_prev, x_cur;
    Vec xbar_cur;
    double d_cur = 0.0;  // termination value carried into iteration k
    double d_check = 0.0, d_hat = 0.0, d_next = 0.0;
    double lam_check = 0.0, lam_hat = 0.0, lam_tilde = 0.0;
    Scenario scenario = Scenario::Undecided;
    bool degenerate_flagged = false;  // a 2-d span collapsed at some iteration
};

/// Draws the unit initial vector (i.i.d. standard normal entries, then
/// normalized) unless cfg.x0 overrides it; k = 1, d_1 = epsilon.
CentralState init_central(const ModifiedLaplacian& lt, const GpiConfig& cfg);

/// One full iteration: multiply, normalize, both subspace distances, both
/// eigenvalue magnitudes, then the min-distance branch for the estimate.
void step_central(CentralState& st, const ModifiedLaplacian& lt);

struct CentralResult {
    double gac_estimate = 0.0;
    Scenario scenario = Scenario::Undecided;
    int iterations = 0;
    bool converged = false;
    std::vector<TraceRecord> trace;
};

/// The main loop on a prepared operator matrix; runs until the distance
/// falls below epsilon or max_iter is hit.
CentralResult run_centralized_matrix(const Mat& op, double delta, const GpiConfig& cfg);

/// Validates connectivity and delta, builds the modified Laplacian from
/// the graph, and iterates. Throws GraphError on inadmissible input.
CentralResult run_centralized(const WeightedDigraph& g, const GpiConfig& cfg);

std::string trace_to_csv(const std::vector<TraceRecord>& trace);
std::string trace_to_json(const std::vector<TraceRecord>& trace);

}  // namespace gac
