#pragma once

#include "ramsey/arrowing.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ramsey {

inline constexpr std::string_view tool_version = "0.3.0";

enum class DeciderKind { exact, star, sandwich };

std::string_view to_string(DeciderKind d) noexcept;
DeciderKind parse_decider(std::string_view name); // throws InputError

struct ExperimentConfig {
    TargetSpec target;
    double c = 2.0;
    std::optional<int> explicit_vertex_count; // overrides floor(c 2^k n)
    std::vector<double> p_grid;
    std::int64_t samples_per_p = 100;
    std::uint64_t master_seed = 0;
    DeciderKind decider = DeciderKind::sandwich;
    DeciderLimits limits;
    unsigned workers = 1;

    int vertex_count() const;
    /// Throws InputError on an invalid grid, sample count, target or N < k + 1.
    void validate() const;
};

struct WilsonInterval {
    double lo = 0.0;
    double hi = 1.0;
};

/// Wilson score interval; with no trials the interval is [0, 1].
WilsonInterval wilson_interval(std::int64_t successes, std::int64_t trials, double z = 1.96);

/// Two-sided normal quantile for a confidence level in (0, 1).
double z_for_confidence(double confidence);

struct SweepRow {
    double p = 0.0;
    std::int64_t samples = 0;
    std::int64_t arrows = 0;
    std::int64_t not_arrows = 0;
    std::int64_t unknown = 0;
    double p_hat = 0.0;   // arrows / decided
    double ci_lo = 0.0;
    double ci_hi = 1.0;
    double band_lo = 0.0; // arrows / samples
    double band_hi = 0.0; // (arrows + unknown) / samples
    double wall_millis = 0.0;
};

/// Samples i = 0..samples_per_p-1 use seed (master_seed, i) for every p, so samples at
/// different p are coupled: the graph at a smaller p is a subgraph of the one at a larger p.
/// Decider limit errors count as unknown.
SweepRow estimate_arrow_probability(const ExperimentConfig& cfg, double p);

std::vector<SweepRow> sweep(const ExperimentConfig& cfg);

inline constexpr std::string_view sweep_csv_header = "p,samples,arrows,not_arrows,unknown,p_hat,ci_lo,ci_hi,band_lo,band_hi";

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Runs the sweep and writes `csv_path` plus `<stem>.manifest.json` next to it, each via a
/// temporary file and rename. Unwritable destinations throw IoError before any sampling.
std::vector<SweepRow> run_sweep_to_files(const ExperimentConfig& cfg, const std::filesystem::path& csv_path);

std::filesystem::path manifest_path_for(const std::filesystem::path& csv_path);

struct BisectResult {
    double p_star_estimate = 0.0;
    double p_lo = 0.0;
    double p_hi = 0.0;
    int iterations = 0;
    std::int64_t samples_used = 0;
};

/// Bisection on the arrowing probability crossing 1/2. A point's side is settled once its
/// interval excludes 1/2; the sample count doubles until then, up to `max_samples_per_point`,
/// after which the point estimate decides. Throws InputError unless the initial bracket
/// straddles 1/2.
BisectResult bisect_threshold(const ExperimentConfig& cfg, double p_lo, double p_hi, double tolerance,
    double confidence = 0.95, std::int64_t max_samples_per_point = 3200);

} // namespace ramsey
