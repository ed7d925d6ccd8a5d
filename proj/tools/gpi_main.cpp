// Command-line experiment runner: spectra and connectivity of weighted
// digraphs via the centralized and distributed power-iteration schemes,
// plus the Monte Carlo message-complexity comparison.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "gac/builtin_examples.hpp"
#include "gac/errors.hpp"
#include "gac/gpi_central.hpp"
#include "gac/gpi_dist.hpp"
#include "gac/graph.hpp"
#include "gac/spectral.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace gac;

namespace {

struct GraphSource {
    std::string path;
    int example = 0;       // 1 or 2 when set
    std::string gen;       // "n,prob,seed"
};

struct Loaded {
    WeightedDigraph graph;
    double default_delta;
    std::optional<Vec> default_x0;
};

std::vector<double> parse_csv_doubles(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

Loaded load_graph(const GraphSource& src) {
    int chosen = (!src.path.empty()) + (src.example != 0) + (!src.gen.empty());
    if (chosen != 1)
        throw GraphError("choose exactly one graph source: --graph, --example or --gen");
    if (src.example == 1) {
        auto ex = builtin::example1();
        return {std::move(ex.graph), ex.delta, ex.x0};
    }
    if (src.example == 2) {
        auto ex = builtin::example2();
        return {std::move(ex.graph), ex.delta, ex.x0};
    }
    if (!src.gen.empty()) {
        const auto v = parse_csv_doubles(src.gen);
        if (v.size() != 3) throw GraphError("--gen expects n,prob,seed");
        WeightedDigraph g = random_strongly_connected(static_cast<int>(v[0]), v[1],
                                                      static_cast<uint64_t>(v[2]));
        const double upper = 1.0 / max_weighted_indegree(g);
        return {std::move(g), 0.5 * upper, std::nullopt};
    }
    std::ifstream in(src.path);
    if (!in) throw GraphError("cannot open graph file: " + src.path);
    std::stringstream buf;
    buf << in.rdbuf();
    WeightedDigraph g = load_edge_list(buf.str());
    const double upper = 1.0 / max_weighted_indegree(g);
    return {std::move(g), 0.5 * upper, std::nullopt};
}

void write_file(const fs::path& p, const std::string& content) {
    fs::create_directories(p.parent_path().empty() ? "." : p.parent_path());
    std::ofstream out(p);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << content;
}

json spectrum_json(const SpectralTriplets& spec) {
    json arr = json::array();
    for (const auto& t : spec.triplets) arr.push_back({t.value.real(), t.value.imag()});
    return arr;
}

int cmd_oracle(const Loaded& loaded, double delta, bool as_json, const std::string& out_dir) {
    const Mat L = laplacian(loaded.graph);
    const GacReport rep = gac_oracle(L, delta);
    const DeltaCheck dc = validate_delta(loaded.graph, delta);
    const SpectralTriplets lam_l = eig_dense(L);
    const Vec w1 = left_null_eigvec(L);
    const ModifiedLaplacian lt = modified_laplacian(L, w1, delta);
    const SpectralTriplets lam_lt = eig_dense(lt.m);

    json j;
    j["gac"] = rep.gac;
    j["dominant_kind"] = rep.kind == DominantKind::Real ? "R" : "I";
    j["assumption2_ok"] = rep.assumption2_ok;
    j["max_modified_eig"] = rep.max_mod_eig;
    j["log_recovery"] = rep.log_recovery;
    j["delta"] = delta;
    j["max_weighted_indegree"] = dc.max_indegree;
    j["admissible_delta_upper"] = dc.upper;
    j["laplacian_spectrum"] = spectrum_json(lam_l);
    j["modified_spectrum"] = spectrum_json(lam_lt);
    if (!rep.warning.empty()) j["warning"] = rep.warning;

    if (as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "GAC: " << rep.gac << "  (" << (rep.kind == DominantKind::Real ? "real" : "complex pair")
                  << ")\n";
        std::cout << "max in-degree: " << dc.max_indegree << ", admissible delta: (0, " << dc.upper
                  << ")\n";
        std::cout << "max |eig| of modified Laplacian at delta=" << delta << ": " << rep.max_mod_eig
                  << " -> recovered " << rep.log_recovery << "\n";
        std::cout << "Laplacian spectrum:";
        for (const auto& t : lam_l.triplets)
            std::cout << "  " << t.value.real() << (t.value.imag() >= 0 ? "+" : "")
                      << t.value.imag() << "j";
        std::cout << "\n";
        if (!rep.warning.empty()) std::cout << "warning: " << rep.warning << "\n";
    }
    if (!out_dir.empty()) write_file(fs::path(out_dir) / "oracle.json", j.dump(2) + "\n");
    return 0;
}

int cmd_centralized(const Loaded& loaded, const GpiConfig& cfg, const std::string& out_dir,
                    bool with_oracle) {
    const CentralResult res = run_centralized(loaded.graph, cfg);
    json summary;
    summary["gac_estimate"] = res.gac_estimate;
    summary["scenario"] = std::string(1, scenario_letter(res.scenario));
    summary["iterations"] = res.iterations;
    summary["converged"] = res.converged;
    if (with_oracle) {
        const GacReport rep = gac_oracle(laplacian(loaded.graph), cfg.delta);
        summary["oracle_gac"] = rep.gac;
        summary["oracle_error"] = std::abs(res.gac_estimate - rep.gac);
    }
    std::cout << "estimate " << res.gac_estimate << " scenario "
              << scenario_letter(res.scenario) << " after " << res.iterations << " iterations"
              << (res.converged ? "" : " (max-iter reached)") << "\n";
    if (!out_dir.empty()) {
        write_file(fs::path(out_dir) / "trace.csv", trace_to_csv(res.trace));
        write_file(fs::path(out_dir) / "trace.json", trace_to_json(res.trace));
        write_file(fs::path(out_dir) / "summary.json", summary.dump(2) + "\n");
    }
    return res.converged ? 0 : 2;
}

int cmd_distributed(const Loaded& loaded, const DistConfig& cfg, const std::string& out_dir) {
    const DistResult res = run_distributed(loaded.graph, cfg);
    json summary;
    summary["iterations"] = res.iterations;
    summary["converged"] = res.converged;
    summary["gac_estimates"] = res.gac_estimates;
    json scen = json::array();
    for (Scenario s : res.scenarios) scen.push_back(std::string(1, scenario_letter(s)));
    summary["scenarios"] = scen;
    summary["congest_equivalent_rounds"] = res.congest_rounds;
    summary["congest_baseline_rounds"] = res.congest_baseline;

    std::cout << "per-node estimates:";
    for (double v : res.gac_estimates) std::cout << " " << v;
    std::cout << "\nscenarios:";
    for (Scenario s : res.scenarios) std::cout << " " << scenario_letter(s);
    std::cout << "\n" << res.iterations << " iterations, " << res.stats.rounds << " rounds, max payload "
              << res.stats.max_payload_scalars << " scalars"
              << (res.converged ? "" : " (max-iter reached)") << "\n";

    if (!out_dir.empty()) {
        write_file(fs::path(out_dir) / "node_trace.csv", node_trace_to_csv(res.traces));
        write_file(fs::path(out_dir) / "message_stats.json", message_stats_to_json(res.stats) + "\n");
        write_file(fs::path(out_dir) / "summary.json", summary.dump(2) + "\n");
    }
    return res.converged ? 0 : 2;
}

struct TrialOutcome {
    bool ok = false;
    long congest = 0;
    long baseline = 0;
    long rounds = 0;
    std::string error;
};

TrialOutcome montecarlo_trial(int n, double prob, uint64_t seed) {
    TrialOutcome out;
    try {
        const WeightedDigraph g = random_strongly_connected(n, prob, seed);
        const double upper = 1.0 / max_weighted_indegree(g);
        DistConfig cfg;
        cfg.base.delta = upper - 0.01;
        cfg.base.epsilon = 0.01;
        cfg.base.max_iter = 400;
        cfg.base.seed = seed ^ 0x9e3779b97f4a7c15ULL;
        if (cfg.base.delta <= 0.0) throw GraphError("admissible interval too small for delta rule");
        const DistResult res = run_distributed(g, cfg);
        if (!res.converged) throw GraphError("did not converge within max-iter");
        out.ok = true;
        out.congest = res.congest_rounds;
        out.baseline = res.congest_baseline;
        out.rounds = res.stats.rounds;
    } catch (const std::exception& e) {
        out.error = e.what();
    }
    return out;
}

int cmd_montecarlo(const std::vector<int>& sizes, int trials, uint64_t seed, double prob,
                   const std::string& out_dir) {
    std::ostringstream csv;
    csv << "n,trials_ok,mean_sim_rounds,mean_congest_rounds,std_congest_rounds,mean_baseline_rounds\n";
    for (int n : sizes) {
        std::vector<std::future<TrialOutcome>> futs;
        for (int t = 0; t < trials; ++t) {
            const uint64_t trial_seed = seed * 1000003ULL + static_cast<uint64_t>(n) * 101ULL + t;
            futs.push_back(std::async(std::launch::async, montecarlo_trial, n, prob, trial_seed));
        }
        long ok = 0;
        double sum_c = 0, sum_c2 = 0, sum_b = 0, sum_r = 0;
        for (auto& f : futs) {
            const TrialOutcome o = f.get();
            if (!o.ok) {
                std::cerr << "trial failed at n=" << n << ": " << o.error << "\n";
                continue;
            }
            ++ok;
            sum_c += o.congest;
            sum_c2 += static_cast<double>(o.congest) * o.congest;
            sum_b += o.baseline;
            sum_r += o.rounds;
        }
        if (ok == 0) {
            csv << n << ",0,,,,\n";
            continue;
        }
        const double mean_c = sum_c / ok;
        const double var_c = std::max(0.0, sum_c2 / ok - mean_c * mean_c);
        csv << n << ',' << ok << ',' << sum_r / ok << ',' << mean_c << ',' << std::sqrt(var_c)
            << ',' << sum_b / ok << '\n';
    }
    std::cout << csv.str();
    if (!out_dir.empty()) write_file(fs::path(out_dir) / "scaling.csv", csv.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized algebraic connectivity of weighted digraphs"};
    app.require_subcommand(1);

    GraphSource src;
    double delta = 0.0;
    double epsilon = 5e-4;
    uint64_t seed = 0;
    int max_iter = 500;
    std::string x0_csv, out_dir, schedule = "adaptive";
    int l_max = 50, m_max = 50;
    bool as_json = false, with_oracle = false;

    auto add_graph_flags = [&](CLI::App* cmd) {
        cmd->add_option("--graph", src.path, "edge-list CSV file");
        cmd->add_option("--example", src.example, "builtin example graph")->check(CLI::Range(1, 2));
        cmd->add_option("--gen", src.gen, "generator spec n,prob,seed");
    };
    auto add_run_flags = [&](CLI::App* cmd) {
        cmd->add_option("--delta", delta, "transform parameter, 0 < delta < 1/max-indegree");
        cmd->add_option("--epsilon", epsilon, "termination threshold");
        cmd->add_option("--seed", seed, "initial-vector seed");
        cmd->add_option("--x0", x0_csv, "explicit initial vector, comma separated");
        cmd->add_option("--max-iter", max_iter, "main-loop cap");
        cmd->add_option("--out", out_dir, "output directory");
    };

    CLI::App* oracle = app.add_subcommand("oracle", "spectra and reference connectivity value");
    add_graph_flags(oracle);
    oracle->add_option("--delta", delta, "delta for the recovery cross-check");
    oracle->add_option("--out", out_dir, "output directory");
    oracle->add_flag("--json", as_json, "machine-readable output");

    CLI::App* central = app.add_subcommand("centralized", "run the centralized iteration");
    add_graph_flags(central);
    add_run_flags(central);
    central->add_flag("--with-oracle", with_oracle, "also report the dense-solver reference");

    CLI::App* dist = app.add_subcommand("distributed", "run the per-node message-passing iteration");
    add_graph_flags(dist);
    add_run_flags(dist);
    dist->add_option("--schedule", schedule, "inner-loop schedule")
        ->check(CLI::IsMember({"adaptive", "linear"}));
    dist->add_option("--l-max", l_max, "Taylor-loop cap");
    dist->add_option("--m-max", m_max, "observer-loop cap");

    CLI::App* mc = app.add_subcommand("montecarlo", "message-complexity scaling table");
    std::string sizes_csv = "6,12,24,48";
    int trials = 20;
    double prob = 0.5;
    mc->add_option("--sizes", sizes_csv, "network sizes, comma separated");
    mc->add_option("--trials", trials, "trials per size")->check(CLI::PositiveNumber);
    mc->add_option("--seed", seed, "base seed");
    mc->add_option("--prob", prob, "extra-edge probability for generated graphs");
    mc->add_option("--out", out_dir, "output directory");

    CLI::App* gen = app.add_subcommand("gen", "generate a strongly connected digraph to file");
    gen->add_option("--gen", src.gen, "generator spec n,prob,seed")->required();
    gen->add_option("--out", out_dir, "output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            const auto v = parse_csv_doubles(src.gen);
            if (v.size() != 3) throw GraphError("--gen expects n,prob,seed");
            const WeightedDigraph g = random_strongly_connected(
                static_cast<int>(v[0]), v[1], static_cast<uint64_t>(v[2]));
            write_file(fs::path(out_dir) / "graph.csv", to_edge_list(g));
            write_file(fs::path(out_dir) / "graph.json", to_graph_json(g) + "\n");
            std::cout << "wrote " << (fs::path(out_dir) / "graph.csv").string() << "\n";
            return 0;
        }
        if (mc->parsed()) {
            std::vector<int> sizes;
            for (double v : parse_csv_doubles(sizes_csv)) sizes.push_back(static_cast<int>(v));
            return cmd_montecarlo(sizes, trials, seed, prob, out_dir);
        }

        const Loaded loaded = load_graph(src);
        const bool delta_given = delta > 0.0;
        const double eff_delta = delta_given ? delta : loaded.default_delta;

        GpiConfig cfg;
        cfg.delta = eff_delta;
        cfg.epsilon = epsilon;
        cfg.max_iter = max_iter;
        cfg.seed = seed;
        if (!x0_csv.empty())
            cfg.x0 = parse_csv_doubles(x0_csv);
        else if (loaded.default_x0)
            cfg.x0 = loaded.default_x0;

        if (oracle->parsed()) return cmd_oracle(loaded, eff_delta, as_json, out_dir);
        if (central->parsed()) return cmd_centralized(loaded, cfg, out_dir, with_oracle);
        if (dist->parsed()) {
            DistConfig dcfg;
            dcfg.base = cfg;
            dcfg.l_max = l_max;
            dcfg.m_max = m_max;
            dcfg.schedule = schedule == "linear" ? LoopSchedule::Linear : LoopSchedule::Adaptive;
            return cmd_distributed(loaded, dcfg, out_dir);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
