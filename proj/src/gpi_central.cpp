#include "gac/gpi_central.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "gac/errors.hpp"

namespace gac {

char scenario_letter(Scenario s) {
    switch (s) {
        case Scenario::Real: return 'R';
        case Scenario::ComplexPair: return 'I';
        default: return 'U';
    }
}

CentralState init_central(const ModifiedLaplacian& lt, const GpiConfig& cfg) {
    const int n = lt.m.rows();
    CentralState st;
    if (cfg.x0) {
        if (static_cast<int>(cfg.x0->size()) != n)
            throw std::invalid_argument("initial vector length does not match the graph size");
        st.x_prev = *cfg.x0;
    } else {
        std::mt19937_64 rng(cfg.seed);
        std::normal_distribution<double> gauss(0.0, 1.0);
        st.x_prev.resize(n);
        for (double& v : st.x_prev) v = gauss(rng);
    }
    if (norm2(st.x_prev) == 0.0) throw std::invalid_argument("initial vector must be nonzero");
    normalize(st.x_prev);
    st.k = 1;
    st.d_cur = cfg.epsilon;
    return st;
}

void step_central(CentralState& st, const ModifiedLaplacian& lt) {
    st.xbar_cur = lt.m * st.x_prev;
    st.x_cur = st.xbar_cur;
    normalize(st.x_cur);

    st.d_check = subspace_dist_1d(st.x_prev, st.x_cur);
    if (st.k == 1) {
        // zero-initialized previous projector: the 2-d distance is the
        // norm of a fresh rank-2 projector, exactly 1
        st.d_hat = 1.0;
    } else {
        try {
            st.d_hat = subspace_dist_2d(st.x_prev2, st.x_prev, st.x_cur);
        } catch (const DegenerateSubspace&) {
            st.d_hat = 1.0;  // cannot win the min in a converged complex scenario
            st.degenerate_flagged = true;
        }
    }

    st.lam_check = std::abs(dot(st.xbar_cur, st.x_prev));
    try {
        const int n = lt.m.rows();
        CMat q(n, 2);
        for (int i = 0; i < n; ++i) {
            q(i, 0) = st.x_prev[i];
            q(i, 1) = st.x_cur[i];
        }
        st.lam_hat = dominant_2x2_magnitude(project_g(CMat(lt.m), q));
    } catch (const DegenerateSubspace&) {
        st.degenerate_flagged = true;
        if (st.k == 1) st.lam_hat = st.lam_check;  // no previous value to carry
    }

    st.d_next = std::min(st.d_check, st.d_hat);
    if (st.d_check <= st.d_hat) {
        st.scenario = Scenario::Real;
        st.lam_tilde = (1.0 - std::log(st.lam_check)) / lt.delta;
    } else {
        st.scenario = Scenario::ComplexPair;
        st.lam_tilde = (1.0 - std::log(st.lam_hat)) / lt.delta;
    }

    st.x_prev2 = st.x_prev;
    st.x_prev = st.x_cur;
    st.d_cur = st.d_next;
    ++st.k;
}

CentralResult run_centralized_matrix(const Mat& op, double delta, const GpiConfig& cfg) {
    const ModifiedLaplacian wrapped{op, delta, {}};
    CentralState st = init_central(wrapped, cfg);

    CentralResult res;
    while (st.d_cur >= cfg.epsilon) {
        if (st.k > cfg.max_iter) {
            res.converged = false;
            res.iterations = cfg.max_iter;
            res.gac_estimate = st.lam_tilde;
            res.scenario = st.scenario;
            return res;
        }
        const int k = st.k;
        step_central(st, wrapped);
        res.trace.push_back({k, st.d_check, st.d_hat, st.d_next, st.lam_check, st.lam_hat,
                             st.lam_tilde, st.scenario});
    }
    res.converged = true;
    res.iterations = st.k - 1;
    res.gac_estimate = st.lam_tilde;
    res.scenario = st.scenario;
    return res;
}

CentralResult run_centralized(const WeightedDigraph& g, const GpiConfig& cfg) {
    if (!is_strongly_connected(g))
        throw GraphError("run_centralized: graph is not strongly connected");
    const DeltaCheck dc = validate_delta(g, cfg.delta);
    if (!dc.ok) {
        std::ostringstream os;
        os << "run_centralized: delta " << cfg.delta << " outside admissible interval (0, "
           << dc.upper << ")";
        throw GraphError(os.str());
    }
    const Mat lap = laplacian(g);
    const Vec w1 = left_null_eigvec(lap);
    const ModifiedLaplacian lt = modified_laplacian(lap, w1, cfg.delta);
    return run_centralized_matrix(lt.m, cfg.delta, cfg);
}

std::string trace_to_csv(const std::vector<TraceRecord>& trace) {
    std::ostringstream os;
    os.precision(12);
    os << "k,d_check,d_hat,d,lam_check,lam_hat,lam_tilde,scenario\n";
    for (const TraceRecord& r : trace)
        os << r.k << ',' << r.d_check << ',' << r.d_hat << ',' << r.d << ',' << r.lam_check << ','
           << r.lam_hat << ',' << r.lam_tilde << ',' << scenario_letter(r.scenario) << '\n';
    return os.str();
}

std::string trace_to_json(const std::vector<TraceRecord>& trace) {
    std::ostringstream os;
    os.precision(12);
    os << "[";
    for (size_t i = 0; i < trace.size(); ++i) {
        const TraceRecord& r = trace[i];
        if (i) os << ",";
        os << "\n  {\"k\": " << r.k << ", \"d_check\": " << r.d_check << ", \"d_hat\": " << r.d_hat
           << ", \"d\": " << r.d << ", \"lam_check\": " << r.lam_check
           << ", \"lam_hat\": " << r.lam_hat << ", \"lam_tilde\": " << r.lam_tilde
           << ", \"scenario\": \"" << scenario_letter(r.scenario) << "\"}";
    }
    os << "\n]\n";
    return os.str();
}

}  // namespace gac
