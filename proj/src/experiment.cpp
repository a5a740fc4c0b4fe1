#include "ramsey/experiment.hpp"

#include "ramsey/errors.hpp"
#include "ramsey/parallel.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

namespace ramsey {

std::string_view to_string(DeciderKind d) noexcept
{
    switch (d) {
    case DeciderKind::exact:
        return "exact";
    case DeciderKind::star:
        return "star";
    case DeciderKind::sandwich:
        break;
    }
    return "sandwich";
}

DeciderKind parse_decider(std::string_view name)
{
    if (name == "exact")
        return DeciderKind::exact;
    if (name == "star")
        return DeciderKind::star;
    if (name == "sandwich")
        return DeciderKind::sandwich;
    throw InputError("unknown decider '" + std::string(name) + "' (expected exact, star or sandwich)");
}

int ExperimentConfig::vertex_count() const
{
    if (explicit_vertex_count)
        return *explicit_vertex_count;
    return static_cast<int>(make_threshold_params(target.k, c, target.n, 0.0).big_n);
}

void ExperimentConfig::validate() const
{
    make_target(target.shape, target.k, target.n);
    if (samples_per_p < 1)
        throw InputError("samples per p must be positive");
    for (std::size_t i = 0; i < p_grid.size(); ++i) {
        if (!(p_grid[i] >= 0.0 && p_grid[i] <= 1.0))
            throw InputError("p grid values must lie in [0, 1]");
        if (i > 0 && !(p_grid[i] > p_grid[i - 1]))
            throw InputError("p grid must be strictly increasing");
    }
    if (vertex_count() < target.k + 1)
        throw InputError("N must be at least k + 1");
    if (decider == DeciderKind::star && target.k != 1)
        throw InputError("the star decider only handles k = 1");
}

WilsonInterval wilson_interval(std::int64_t successes, std::int64_t trials, double z)
{
    if (trials <= 0)
        return {};
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double centre = (phat + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, std::min(centre - half, phat)), std::min(1.0, std::max(centre + half, phat))};
}

double z_for_confidence(double confidence)
{
    if (!(confidence > 0.0 && confidence < 1.0))
        throw InputError("confidence must lie in (0, 1)");
    const double target = 1.0 - (1.0 - confidence) / 2.0;
    double lo = 0.0, hi = 40.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = (lo + hi) / 2.0;
        (0.5 * std::erfc(-mid / std::sqrt(2.0)) < target ? lo : hi) = mid;
    }
    return (lo + hi) / 2.0;
}

namespace {

constexpr std::uint64_t sandwich_salt = 0x53414e4457494348ULL;

Outcome decide_one(const ExperimentConfig& cfg, const Graph& g, std::uint64_t index)
{
    try {
        switch (cfg.decider) {
        case DeciderKind::exact:
            return decide_exact(g, cfg.target, cfg.limits).outcome;
        case DeciderKind::star:
            return star_arrows(g, cfg.target.n) ? Outcome::arrows : Outcome::not_arrows;
        case DeciderKind::sandwich:
            return decide_sandwich(g, cfg.target, cfg.limits, derive_seed(cfg.master_seed ^ sandwich_salt, index)).outcome;
        }
    } catch (const LimitsError&) {
    }
    return Outcome::unknown;
}

// Grows `outcomes` to `samples` entries; sample i always uses derive_seed(master, i).
void extend_outcomes(const ExperimentConfig& cfg, double p, std::vector<Outcome>& outcomes, std::int64_t samples)
{
    const int n = cfg.vertex_count();
    const auto first = outcomes.size();
    outcomes.resize(static_cast<std::size_t>(samples));
    parallel_for(outcomes.size() - first, cfg.workers, [&](std::size_t j) {
        const auto i = first + j;
        const Graph g = sample_gnp(n, p, derive_seed(cfg.master_seed, i));
        outcomes[i] = decide_one(cfg, g, i);
    });
}

SweepRow summarize(double p, const std::vector<Outcome>& outcomes)
{
    SweepRow row;
    row.p = p;
    row.samples = static_cast<std::int64_t>(outcomes.size());
    const auto samples = row.samples;
    for (auto o : outcomes) {
        row.arrows += o == Outcome::arrows;
        row.not_arrows += o == Outcome::not_arrows;
        row.unknown += o == Outcome::unknown;
    }
    const auto decided = row.arrows + row.not_arrows;
    row.p_hat = decided > 0 ? static_cast<double>(row.arrows) / static_cast<double>(decided) : 0.0;
    const auto ci = wilson_interval(row.arrows, decided);
    row.ci_lo = ci.lo;
    row.ci_hi = ci.hi;
    row.band_lo = static_cast<double>(row.arrows) / static_cast<double>(samples);
    row.band_hi = static_cast<double>(row.arrows + row.unknown) / static_cast<double>(samples);
    return row;
}

SweepRow estimate_with(const ExperimentConfig& cfg, double p, std::int64_t samples)
{
    const auto start = std::chrono::steady_clock::now();
    std::vector<Outcome> outcomes;
    extend_outcomes(cfg, p, outcomes, samples);
    auto row = summarize(p, outcomes);
    row.wall_millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return row;
}

std::string utc_timestamp()
{
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

nlohmann::json config_json(const ExperimentConfig& cfg)
{
    return {
        {"target", {{"shape", std::string(to_string(cfg.target.shape))}, {"k", cfg.target.k}, {"n", cfg.target.n}}},
        {"c", cfg.c},
        {"vertex_count", cfg.vertex_count()},
        {"explicit_vertex_count", cfg.explicit_vertex_count.has_value()},
        {"p_grid", cfg.p_grid},
        {"samples_per_p", cfg.samples_per_p},
        {"seed", std::to_string(cfg.master_seed)},
        {"decider", std::string(to_string(cfg.decider))},
        {"limits",
            {{"max_edges_exhaustive", cfg.limits.max_edges_exhaustive}, {"max_search_nodes", cfg.limits.max_search_nodes},
                {"local_search_restarts", cfg.limits.local_search_restarts},
                {"local_search_steps", cfg.limits.local_search_steps}, {"maxcut_vertex_cap", cfg.limits.maxcut_vertex_cap}}},
        {"workers", cfg.workers},
    };
}

void write_atomically(const std::filesystem::path& path, const std::string& content)
{
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out)
            throw IoError("failed writing " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec)
        throw IoError("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

void probe_writable(const std::filesystem::path& path)
{
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("output path is not writable: " + path.string());
    }
    std::error_code ec;
    std::filesystem::remove(tmp, ec);
}

} // namespace

SweepRow estimate_arrow_probability(const ExperimentConfig& cfg, double p)
{
    cfg.validate();
    if (!(p >= 0.0 && p <= 1.0))
        throw InputError("p must lie in [0, 1]");
    return estimate_with(cfg, p, cfg.samples_per_p);
}

std::vector<SweepRow> sweep(const ExperimentConfig& cfg)
{
    cfg.validate();
    std::vector<SweepRow> rows;
    rows.reserve(cfg.p_grid.size());
    for (double p : cfg.p_grid)
        rows.push_back(estimate_with(cfg, p, cfg.samples_per_p));
    return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows)
{
    out << sweep_csv_header << '\n';
    char buf[256];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.6f,%lld,%lld,%lld,%lld,%.6f,%.6f,%.6f,%.6f,%.6f\n", r.p, static_cast<long long>(r.samples),
            static_cast<long long>(r.arrows), static_cast<long long>(r.not_arrows), static_cast<long long>(r.unknown), r.p_hat,
            r.ci_lo, r.ci_hi, r.band_lo, r.band_hi);
        out << buf;
    }
}

std::string sweep_csv(const std::vector<SweepRow>& rows)
{
    std::ostringstream out;
    write_sweep_csv(out, rows);
    return out.str();
}

std::filesystem::path manifest_path_for(const std::filesystem::path& csv_path)
{
    auto out = csv_path;
    out.replace_extension(".manifest.json");
    return out;
}

std::vector<SweepRow> run_sweep_to_files(const ExperimentConfig& cfg, const std::filesystem::path& csv_path)
{
    cfg.validate();
    const auto manifest_path = manifest_path_for(csv_path);
    probe_writable(csv_path);
    probe_writable(manifest_path);

    const auto started = utc_timestamp();
    auto rows = sweep(cfg);
    const auto finished = utc_timestamp();

    write_atomically(csv_path, sweep_csv(rows));
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& r : rows)
        cells.push_back({{"p", r.p}, {"wall_millis", r.wall_millis}});
    const nlohmann::json manifest = {
        {"tool_version", std::string(tool_version)},
        {"config", config_json(cfg)},
        {"master_seed", std::to_string(cfg.master_seed)},
        {"start", started},
        {"end", finished},
        {"cells", cells},
        {"csv", csv_path.filename().string()},
    };
    write_atomically(manifest_path, manifest.dump(2) + "\n");
    return rows;
}

BisectResult bisect_threshold(const ExperimentConfig& cfg, double p_lo, double p_hi, double tolerance, double confidence,
    std::int64_t max_samples_per_point)
{
    cfg.validate();
    if (!(p_lo >= 0.0 && p_hi <= 1.0 && p_lo < p_hi))
        throw InputError("bracket must satisfy 0 <= lo < hi <= 1");
    if (!(tolerance > 0.0))
        throw InputError("tolerance must be positive");
    BisectResult result{(p_lo + p_hi) / 2.0, p_lo, p_hi, 0, 0};
    if (p_hi - p_lo <= tolerance)
        return result;
    const double z = z_for_confidence(confidence);

    // +1 when the arrowing probability at p is above 1/2, -1 when below.
    auto side = [&](double p) {
        std::int64_t samples = cfg.samples_per_p;
        std::vector<Outcome> outcomes;
        for (;;) {
            result.samples_used += samples - static_cast<std::int64_t>(outcomes.size());
            extend_outcomes(cfg, p, outcomes, samples);
            const auto row = summarize(p, outcomes);
            const auto decided = row.arrows + row.not_arrows;
            const auto ci = wilson_interval(row.arrows, decided, z);
            if (decided > 0 && ci.lo > 0.5)
                return 1;
            if (decided > 0 && ci.hi < 0.5)
                return -1;
            if (samples * 2 > max_samples_per_point)
                return row.p_hat >= 0.5 ? 1 : -1;
            samples *= 2;
        }
    };

    if (side(p_lo) != -1 || side(p_hi) != 1)
        throw InputError("initial bracket does not straddle arrowing probability 1/2");
    while (result.p_hi - result.p_lo > tolerance) {
        const double mid = (result.p_lo + result.p_hi) / 2.0;
        (side(mid) > 0 ? result.p_hi : result.p_lo) = mid;
        ++result.iterations;
    }
    result.p_star_estimate = (result.p_lo + result.p_hi) / 2.0;
    return result;
}

} // namespace ramsey
