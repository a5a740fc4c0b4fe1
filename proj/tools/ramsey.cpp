#include "ramsey/arrowing.hpp"
#include "ramsey/certificates.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/experiment.hpp"
#include "ramsey/regularity.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>

using nlohmann::json;
using namespace ramsey;

namespace {

Shape parse_shape(const std::string& s)
{
    if (s == "book")
        return Shape::book;
    if (s == "biclique")
        return Shape::biclique;
    throw InputError("unknown target '" + s + "' (expected book or biclique)");
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

std::ofstream open_output(const std::string& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot write " + path);
    return out;
}

json to_json(const CountingCertificate& c)
{
    return {{"n", c.n}, {"t", c.t}, {"mrb_upper", c.mrb_upper}, {"mono_lower", c.mono_lower},
        {"budget_numerator", c.budget_numerator}, {"budget", c.budget}, {"fires", c.fires}};
}

json to_json(const RegPairReport& r)
{
    json j = {{"density", r.density}, {"verdict", std::string(to_string(r.verdict))},
        {"strategy", std::string(to_string(r.strategy))}, {"trials", r.trials}};
    if (r.witness)
        j["witness"] = {{"u_sub", r.witness->u_sub}, {"w_sub", r.witness->w_sub}, {"density_sub", r.witness->density_sub}};
    return j;
}

struct ExperimentOptions {
    std::string target = "book";
    int k = 1;
    int n = 1;
    double c = 2.0;
    int big_n = 0;
    std::vector<double> p_grid;
    std::int64_t samples = 100;
    std::uint64_t seed = 0;
    std::string decider = "sandwich";
    unsigned workers = 1;
    int max_edges = DeciderLimits{}.max_edges_exhaustive;
    int restarts = DeciderLimits{}.local_search_restarts;
    int steps = DeciderLimits{}.local_search_steps;

    void attach(CLI::App* app)
    {
        app->add_option("--target", target, "book or biclique")->capture_default_str();
        app->add_option("--k", k, "spine size")->capture_default_str();
        app->add_option("--n", n, "page count")->capture_default_str();
        app->add_option("--c", c, "N = floor(c 2^k n)")->capture_default_str();
        app->add_option("--N", big_n, "explicit vertex count");
        app->add_option("--samples", samples, "samples per p")->capture_default_str();
        app->add_option("--seed", seed, "master seed")->capture_default_str();
        app->add_option("--decider", decider, "exact, star or sandwich")->capture_default_str();
        app->add_option("--workers", workers, "worker threads")->capture_default_str();
        app->add_option("--max-edges", max_edges, "exhaustive edge budget")->capture_default_str();
        app->add_option("--restarts", restarts, "local search restarts")->capture_default_str();
        app->add_option("--steps", steps, "local search steps per restart")->capture_default_str();
    }

    ExperimentConfig config() const
    {
        ExperimentConfig cfg;
        cfg.target = make_target(parse_shape(target), k, n);
        cfg.c = c;
        if (big_n > 0)
            cfg.explicit_vertex_count = big_n;
        cfg.p_grid = p_grid;
        cfg.samples_per_p = samples;
        cfg.master_seed = seed;
        cfg.decider = parse_decider(decider);
        cfg.workers = workers;
        cfg.limits.max_edges_exhaustive = max_edges;
        cfg.limits.local_search_restarts = restarts;
        cfg.limits.local_search_steps = steps;
        return cfg;
    }
};

int run(int argc, char** argv)
{
    CLI::App app{"Arrowing experiments for books and bicliques in G(N, p)"};
    app.require_subcommand(1);
    std::function<void()> action;

    ExperimentOptions sweep_opts;
    std::string sweep_out;
    auto* sweep_cmd = app.add_subcommand("sweep", "estimate the arrowing probability over a p grid");
    sweep_opts.attach(sweep_cmd);
    sweep_cmd->add_option("--p", sweep_opts.p_grid, "p grid, comma separated")->delimiter(',')->required();
    sweep_cmd->add_option("--out", sweep_out, "CSV path (manifest written alongside); stdout if omitted");
    sweep_cmd->callback([&] {
        action = [&] {
            const auto cfg = sweep_opts.config();
            if (sweep_out.empty())
                write_sweep_csv(std::cout, sweep(cfg));
            else
                run_sweep_to_files(cfg, sweep_out);
        };
    });

    ExperimentOptions bisect_opts;
    double lo = 0.0, hi = 1.0, tol = 0.01, confidence = 0.95;
    std::int64_t max_samples = 3200;
    auto* bisect_cmd = app.add_subcommand("bisect", "locate the p where the arrowing probability crosses 1/2");
    bisect_opts.attach(bisect_cmd);
    bisect_cmd->add_option("--lo", lo, "lower end of bracket")->required();
    bisect_cmd->add_option("--hi", hi, "upper end of bracket")->required();
    bisect_cmd->add_option("--tol", tol, "bracket width to stop at")->capture_default_str();
    bisect_cmd->add_option("--confidence", confidence)->capture_default_str();
    bisect_cmd->add_option("--max-samples", max_samples, "per-point sample cap")->capture_default_str();
    bisect_cmd->callback([&] {
        action = [&] {
            const auto r = bisect_threshold(bisect_opts.config(), lo, hi, tol, confidence, max_samples);
            print({{"p_star_estimate", r.p_star_estimate}, {"p_lo", r.p_lo}, {"p_hi", r.p_hi}, {"iterations", r.iterations},
                {"samples_used", r.samples_used}});
        };
    });

    std::string graph_path, target = "book", evidence, method = "sandwich";
    int k = 1, n = 1;
    std::uint64_t seed = 0;
    DeciderLimits limits;
    auto* decide_cmd = app.add_subcommand("decide", "decide whether every 2-coloring of a graph contains the target");
    decide_cmd->add_option("--graph", graph_path, "edge list file")->required();
    decide_cmd->add_option("--target", target, "book or biclique")->required();
    decide_cmd->add_option("--k", k)->required();
    decide_cmd->add_option("--n", n)->required();
    decide_cmd->add_option("--max-edges", limits.max_edges_exhaustive, "exhaustive edge budget")->capture_default_str();
    decide_cmd->add_option("--seed", seed)->capture_default_str();
    decide_cmd->add_option("--decider", method, "exact, star or sandwich")->capture_default_str();
    decide_cmd->add_option("--evidence", evidence, "write the avoiding coloring or certificate here");
    decide_cmd->callback([&] {
        action = [&] {
            const auto t = make_target(parse_shape(target), k, n);
            const auto g = read_edge_list_file(graph_path);
            ArrowingVerdict v;
            switch (parse_decider(method)) {
            case DeciderKind::exact:
                v = decide_exact(g, t, limits);
                break;
            case DeciderKind::star:
                if (t.k != 1)
                    throw InputError("the star decider only handles k = 1");
                v = decide_star_fast(g, t.n);
                break;
            case DeciderKind::sandwich:
                v = decide_sandwich(g, t, limits, Seed{seed, 0});
                break;
            }
            json out = {{"outcome", std::string(to_string(v.outcome))}, {"method", std::string(to_string(v.method))},
                {"nodes", v.nodes}, {"millis", v.millis}};
            if (!evidence.empty() && (v.coloring || v.certificate)) {
                auto file = open_output(evidence);
                if (v.coloring)
                    write_coloring(file, *v.coloring);
                else
                    file << to_json(*v.certificate).dump(2) << '\n';
                if (!file)
                    throw IoError("failed writing " + evidence);
                out["evidence_path"] = evidence;
            }
            print(out);
        };
    });

    int cert_n = 1, cap = default_maxcut_vertex_cap;
    unsigned cert_workers = 1;
    std::string cert_graph;
    auto* certify_cmd = app.add_subcommand("certify", "counting certificate for B_n^(2)");
    certify_cmd->add_option("--graph", cert_graph)->required();
    certify_cmd->add_option("--n", cert_n)->required();
    certify_cmd->add_option("--maxcut-cap", cap)->capture_default_str();
    certify_cmd->add_option("--workers", cert_workers)->capture_default_str();
    certify_cmd->callback([&] {
        action = [&] { print(to_json(counting_certificate_b2(read_edge_list_file(cert_graph), cert_n, cap, cert_workers))); };
    });

    int bk = 1;
    double bc = 2.0, gamma = 0.1;
    std::int64_t bn = 1000;
    auto* bounds_cmd = app.add_subcommand("bounds", "threshold parameters and the lower-threshold Chernoff bound");
    bounds_cmd->add_option("--k", bk)->required();
    bounds_cmd->add_option("--c", bc)->required();
    bounds_cmd->add_option("--n", bn)->required();
    bounds_cmd->add_option("--gamma", gamma)->required();
    bounds_cmd->callback([&] {
        action = [&] {
            const auto p = make_threshold_params(bk, bc, bn, gamma);
            const auto r = lower_threshold_report(p);
            json out = {
                {"params",
                    {{"k", p.k}, {"c", p.c}, {"n", p.n}, {"N", p.big_n}, {"gamma", p.gamma}, {"p_sharp", p.p_sharp},
                        {"p_lower", p.p_lower}, {"p0_lower", p.p0_lower}, {"p0_upper", p.p0_upper}}},
                {"chernoff",
                    {{"delta", r.delta}, {"tail", r.tail}, {"log_tail", r.log_tail}, {"log_union_bound", r.log_union_bound},
                        {"union_bound", r.union_bound}, {"log_doubled_union_bound", r.log_doubled_union_bound},
                        {"doubled_union_bound", r.doubled_union_bound}, {"gamma_too_small", r.gamma_too_small}}},
            };
            if (bk >= 2) {
                const auto u = upper_params(bk, bc, gamma);
                out["upper"] = {{"p", u.p}, {"p0", u.p0}, {"delta", u.delta}, {"epsilon", u.epsilon}};
            }
            print(out);
        };
    });

    std::string audit_graph;
    double audit_p = 0.5, tolerance = 0.05;
    int audit_samples = 200;
    std::uint64_t audit_seed = 0;
    auto* audit_cmd = app.add_subcommand("audit", "quasirandomness audit of a graph against G(N, p)");
    audit_cmd->add_option("--graph", audit_graph)->required();
    audit_cmd->add_option("--p", audit_p)->required();
    audit_cmd->add_option("--samples", audit_samples)->capture_default_str();
    audit_cmd->add_option("--seed", audit_seed)->capture_default_str();
    audit_cmd->add_option("--tolerance", tolerance)->capture_default_str();
    audit_cmd->callback([&] {
        action = [&] {
            const auto r = quasirandom_audit(read_edge_list_file(audit_graph), audit_p, audit_samples, Seed{audit_seed, 0}, tolerance);
            print({{"p", r.p}, {"vertex_count", r.vertex_count}, {"degree_dev", r.degree_dev}, {"codegree_dev", r.codegree_dev},
                {"internal_dev", r.internal_dev}, {"cross_dev", r.cross_dev}, {"degree_dev_normalized", r.degree_dev_normalized},
                {"codegree_dev_normalized", r.codegree_dev_normalized}, {"internal_dev_normalized", r.internal_dev_normalized},
                {"cross_dev_normalized", r.cross_dev_normalized}, {"codegree_pairs", r.codegree_pairs},
                {"subset_samples", r.subset_samples}, {"tolerance", r.tolerance}, {"within_tolerance", r.within_tolerance}});
        };
    });

    std::string reg_graph, reg_coloring;
    int parts = 2;
    double eps = 0.1, delta = 0.1, reg_p = 0.5;
    std::int64_t trials = 200;
    std::uint64_t reg_seed = 0;
    unsigned reg_workers = 1;
    auto* reg_cmd = app.add_subcommand("regularity", "pair densities, regularity refutations and the reduced graph");
    reg_cmd->add_option("--graph", reg_graph)->required();
    reg_cmd->add_option("--coloring", reg_coloring)->required();
    reg_cmd->add_option("--parts", parts)->required();
    reg_cmd->add_option("--epsilon", eps)->required();
    reg_cmd->add_option("--delta", delta)->required();
    reg_cmd->add_option("--p", reg_p)->required();
    reg_cmd->add_option("--trials", trials)->capture_default_str();
    reg_cmd->add_option("--seed", reg_seed)->capture_default_str();
    reg_cmd->add_option("--workers", reg_workers)->capture_default_str();
    reg_cmd->callback([&] {
        action = [&] {
            const auto g = read_edge_list_file(reg_graph);
            const auto c = read_coloring_file(reg_coloring);
            if (!(c.host() == g))
                throw InputError("coloring host graph differs from --graph");
            const auto partition = Partition::equitable_blocks(g.vertex_count(), parts);
            const auto r = build_reduced_graph(c, partition, eps, reg_p, delta, trials, Seed{reg_seed, 0}, reg_workers);
            json refutations = json::array();
            for (std::size_t i = 0; i < r.refuted_pairs.size(); ++i)
                refutations.push_back({{"pair", {r.refuted_pairs[i].first, r.refuted_pairs[i].second}}, {"report", to_json(r.refutations[i])}});
            json edges = json::array();
            for (const auto& e : r.gamma_b.edges())
                edges.push_back({e.u, e.v});
            print({{"parts", r.m}, {"blue_density", r.blue_density}, {"red_density", r.red_density}, {"refutations", refutations},
                {"reduced_edges", edges}, {"red_mask", r.red_mask}});
        };
    });

    int sample_n = 10;
    double sample_p = 0.5;
    std::uint64_t sample_seed = 0, sample_stream = 0;
    std::string sample_out;
    auto* sample_cmd = app.add_subcommand("sample", "emit a G(N, p) edge list");
    sample_cmd->add_option("--N", sample_n)->required();
    sample_cmd->add_option("--p", sample_p)->required();
    sample_cmd->add_option("--seed", sample_seed)->capture_default_str();
    sample_cmd->add_option("--index", sample_stream, "sample index under the seed")->capture_default_str();
    sample_cmd->add_option("--out", sample_out, "edge list path; stdout if omitted");
    sample_cmd->callback([&] {
        action = [&] {
            const auto g = sample_gnp(sample_n, sample_p, derive_seed(sample_seed, sample_stream));
            if (sample_out.empty()) {
                write_edge_list(std::cout, g);
                return;
            }
            auto file = open_output(sample_out);
            write_edge_list(file, g);
            if (!file)
                throw IoError("failed writing " + sample_out);
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return static_cast<int>(ExitCode::usage);
    }

    try {
        action();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(e.exit_code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::usage);
    }
    return static_cast<int>(ExitCode::success);
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
