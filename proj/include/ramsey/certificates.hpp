#pragma once

#include "ramsey/graph.hpp"
#include "ramsey/sampler.hpp"

#include <cstdint>

namespace ramsey {

/// 1 / c^(1/k). Throws InputError unless k >= 1 and c > 1.
double sharp_threshold(int k, double c);

/// Parameters of the N = c 2^k n regime around the sharp threshold.
struct ThresholdParams {
    int k = 1;
    double c = 2.0;
    std::int64_t n = 1;
    std::int64_t big_n = 0;  // floor(c 2^k n)
    double gamma = 0.1;
    double p_sharp = 0.0;    // 1 / c^(1/k)
    double p_lower = 0.0;    // p_sharp (1 - gamma)^(1/k)
    double p0_lower = 0.0;   // p_lower / 2
    double p0_upper = 0.0;   // p_sharp (1 + gamma/2)
};

ThresholdParams make_threshold_params(int k, double c, std::int64_t n, double gamma);

/// Chernoff tail for the number of common neighbors of a fixed k-set in G(N, p0_lower),
/// and the union bounds over all C(N, k) sets. Values are evaluated in log space.
struct ChernoffReport {
    double delta = 0.0;
    double tail = 0.0;
    double log_tail = 0.0;
    double log_union_bound = 0.0;
    double union_bound = 0.0;
    double log_doubled_union_bound = 0.0;
    double doubled_union_bound = 0.0;
    bool gamma_too_small = false; // doubled bound >= 1 says nothing
};

/// Throws InputError when N <= k.
ChernoffReport lower_threshold_report(const ThresholdParams& params);

/// Deterministic k = 2 arrowing certificate. Any coloring has
/// M_rb = (1/2) sum_v e(N_R(v), N_B(v)) <= mrb_upper, so at least mono_lower monochromatic
/// triangles; a B_n^(2)-free coloring has at most (n-1) e(G) / 3. When the first exceeds
/// the second, G -> B_n^(2).
struct CountingCertificate {
    std::int64_t n = 0;
    std::int64_t t = 0;
    std::int64_t mrb_upper = 0;
    std::int64_t mono_lower = 0;
    std::int64_t budget_numerator = 0; // (n-1) e(G); budget = numerator / 3
    double budget = 0.0;
    bool fires = false;
};

/// Throws LimitsError when some neighborhood exceeds `maxcut_vertex_cap` vertices.
CountingCertificate counting_certificate_b2(const Graph& g, int n, int maxcut_vertex_cap = default_maxcut_vertex_cap,
    unsigned workers = 1);

struct UpperParams {
    int k = 2;
    double c = 2.0;
    double gamma = 0.1;
    double p = 0.0;
    double p0 = 0.0;
    double delta = 0.0;
    double epsilon = 0.0;
};

/// delta = min{gamma/(4c), p0^k gamma / 2^(k+5)},
/// epsilon = min{(delta p)^k / k^2, (p0/2)^C(k,2) / k^2}. Requires k >= 2, c > 1, gamma > 0.
UpperParams upper_params(int k, double c, double gamma);

/// Maximum deviations from the G(N, p) expectations. Raw values are in vertex/edge
/// units; normalized ones divide by N (degree, codegree) or N^2 (edge counts).
struct AuditReport {
    double p = 0.0;
    int vertex_count = 0;
    double degree_dev = 0.0;
    double codegree_dev = 0.0;
    double internal_dev = 0.0;
    double cross_dev = 0.0;
    double degree_dev_normalized = 0.0;
    double codegree_dev_normalized = 0.0;
    double internal_dev_normalized = 0.0;
    double cross_dev_normalized = 0.0;
    std::int64_t codegree_pairs = 0;
    int subset_samples = 0;
    double tolerance = 0.0;
    bool within_tolerance = true; // every normalized deviation <= tolerance
};

/// Codegrees are checked over all pairs; degree-into-subset, internal and cross edge
/// counts over `subset_samples` random subsets of size N/4..N/2.
AuditReport quasirandom_audit(const Graph& g, double p, int subset_samples, Seed seed, double tolerance = 0.05);

} // namespace ramsey
