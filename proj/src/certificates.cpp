#include "ramsey/certificates.hpp"

#include "ramsey/errors.hpp"
#include "ramsey/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

namespace ramsey {

namespace {

void check_k_c(int k, double c)
{
    if (k < 1)
        throw InputError("k must be at least 1");
    if (!(c > 1.0) || !std::isfinite(c))
        throw InputError("c must be a real number greater than 1");
}

double log_binomial(double n, double k)
{
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double exp_or_inf(double log_value)
{
    return log_value > std::log(std::numeric_limits<double>::max()) ? std::numeric_limits<double>::infinity()
                                                                      : std::exp(log_value);
}

} // namespace

double sharp_threshold(int k, double c)
{
    check_k_c(k, c);
    return 1.0 / std::pow(c, 1.0 / static_cast<double>(k));
}

ThresholdParams make_threshold_params(int k, double c, std::int64_t n, double gamma)
{
    check_k_c(k, c);
    if (n < 1)
        throw InputError("n must be at least 1");
    if (!(gamma >= 0.0 && gamma < 1.0))
        throw InputError("gamma must lie in [0, 1)");
    ThresholdParams p;
    p.k = k;
    p.c = c;
    p.n = n;
    p.gamma = gamma;
    const double exact_n = c * std::ldexp(1.0, k) * static_cast<double>(n);
    // absorb representation error in products like 1.1 * 4 * 10
    p.big_n = static_cast<std::int64_t>(std::floor(exact_n * (1.0 + 1e-12)));
    p.p_sharp = sharp_threshold(k, c);
    p.p_lower = p.p_sharp * std::pow(1.0 - gamma, 1.0 / static_cast<double>(k));
    p.p0_lower = p.p_lower / 2.0;
    p.p0_upper = p.p_sharp * (1.0 + gamma / 2.0);
    return p;
}

ChernoffReport lower_threshold_report(const ThresholdParams& params)
{
    const auto k = static_cast<double>(params.k);
    const auto big_n = static_cast<double>(params.big_n);
    if (params.big_n <= params.k)
        throw InputError("lower_threshold_report needs N > k");
    ChernoffReport r;
    r.delta = (params.gamma + k / (big_n - k)) / (params.c * std::ldexp(1.0, params.k));
    const double q = std::pow(params.p0_lower, k);
    r.log_tail = -(big_n - k) * r.delta * r.delta / (3.0 * q * (1.0 - q));
    r.tail = std::exp(r.log_tail);
    r.log_union_bound = log_binomial(big_n, k) + r.log_tail;
    r.log_doubled_union_bound = std::log(2.0) + r.log_union_bound;
    r.union_bound = exp_or_inf(r.log_union_bound);
    r.doubled_union_bound = exp_or_inf(r.log_doubled_union_bound);
    r.gamma_too_small = r.log_doubled_union_bound >= 0.0;
    return r;
}

CountingCertificate counting_certificate_b2(const Graph& g, int n, int maxcut_vertex_cap, unsigned workers)
{
    if (n < 1)
        throw InputError("n must be at least 1");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > std::min(maxcut_vertex_cap, 64))
            throw LimitsError("neighborhood of vertex " + std::to_string(v) + " has " + std::to_string(g.degree(v))
                + " vertices, above the max-cut cap " + std::to_string(maxcut_vertex_cap));

    // Identical neighborhood graphs (common in dense or symmetric inputs) are solved once.
    std::map<std::vector<Word>, std::size_t> slot_of;
    std::vector<Graph> distinct;
    std::vector<std::size_t> slot(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto sub = induced_subgraph(g, g.neighbors(v)).graph;
        std::vector<Word> key;
        key.push_back(static_cast<Word>(sub.vertex_count()));
        for (int u = 0; u < sub.vertex_count(); ++u)
            key.insert(key.end(), sub.row(u).begin(), sub.row(u).end());
        auto [it, inserted] = slot_of.try_emplace(std::move(key), distinct.size());
        if (inserted)
            distinct.push_back(std::move(sub));
        slot[static_cast<std::size_t>(v)] = it->second;
    }
    std::vector<std::int64_t> cut(distinct.size());
    parallel_for(distinct.size(), workers, [&](std::size_t i) { cut[i] = maxcut_exact(distinct[i], maxcut_vertex_cap); });

    std::int64_t cut_sum = 0;
    for (auto s : slot)
        cut_sum += cut[s];

    CountingCertificate out;
    out.n = n;
    out.t = triangle_count(g);
    out.mrb_upper = cut_sum / 2;
    out.mono_lower = out.t - out.mrb_upper;
    out.budget_numerator = static_cast<std::int64_t>(n - 1) * g.edge_count();
    out.budget = static_cast<double>(out.budget_numerator) / 3.0;
    out.fires = 3 * out.mono_lower > out.budget_numerator;
    return out;
}

UpperParams upper_params(int k, double c, double gamma)
{
    if (k < 2)
        throw InputError("upper_params requires k >= 2");
    check_k_c(k, c);
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw InputError("gamma must be positive");
    UpperParams u;
    u.k = k;
    u.c = c;
    u.gamma = gamma;
    const double base = sharp_threshold(k, c);
    const auto kd = static_cast<double>(k);
    u.p = base * (1.0 + gamma);
    u.p0 = base * (1.0 + gamma / 2.0);
    u.delta = std::min(gamma / (4.0 * c), std::pow(u.p0, kd) * gamma / std::ldexp(1.0, k + 5));
    const double pairs = kd * (kd - 1.0) / 2.0;
    u.epsilon = std::min(std::pow(u.delta * u.p, kd) / (kd * kd), std::pow(u.p0 / 2.0, pairs) / (kd * kd));
    return u;
}

AuditReport quasirandom_audit(const Graph& g, double p, int subset_samples, Seed seed, double tolerance)
{
    if (!(p > 0.0 && p <= 1.0))
        throw InputError("audit probability must lie in (0, 1]");
    if (subset_samples < 0)
        throw InputError("subset sample count must be non-negative");
    const int n = g.vertex_count();
    AuditReport r;
    r.p = p;
    r.vertex_count = n;
    r.subset_samples = subset_samples;
    r.tolerance = tolerance;

    // Expected codegree of a pair in G(N, p) is p^2 (N - 2).
    const double expected_codegree = p * p * static_cast<double>(std::max(n - 2, 0));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const auto common = static_cast<double>(intersection_count(g.row(u), g.row(v)));
            r.codegree_dev = std::max(r.codegree_dev, std::abs(common - expected_codegree));
            ++r.codegree_pairs;
        }

    if (n >= 2 && subset_samples > 0) {
        SeededRng rng(seed);
        std::vector<int> order(static_cast<std::size_t>(n));
        const int lo = std::max(1, (n + 3) / 4);
        const int hi = std::max(lo, n / 2);
        for (int s = 0; s < subset_samples; ++s) {
            for (int i = 0; i < n; ++i)
                order[static_cast<std::size_t>(i)] = i;
            rng.shuffle(order);
            const int a = static_cast<int>(rng.between(lo, hi));
            const int b = static_cast<int>(rng.between(std::min(lo, n - a), std::min(hi, n - a)));
            VertexSet u_set(static_cast<std::size_t>(n)), w_set(static_cast<std::size_t>(n));
            for (int i = 0; i < a; ++i)
                u_set.insert(order[static_cast<std::size_t>(i)]);
            for (int i = a; i < a + b; ++i)
                w_set.insert(order[static_cast<std::size_t>(i)]);

            std::int64_t twice_internal = 0;
            std::int64_t cross = 0;
            for (int v = 0; v < n; ++v) {
                const auto deg_u = static_cast<std::int64_t>(intersection_count(g.row(v), u_set.words()));
                const double expected = p * static_cast<double>(a - (u_set.contains(v) ? 1 : 0));
                r.degree_dev = std::max(r.degree_dev, std::abs(static_cast<double>(deg_u) - expected));
                if (u_set.contains(v))
                    twice_internal += deg_u;
                if (w_set.contains(v))
                    cross += deg_u;
            }
            const double da = a, db = b;
            r.internal_dev = std::max(r.internal_dev, std::abs(static_cast<double>(twice_internal / 2) - p * da * (da - 1.0) / 2.0));
            r.cross_dev = std::max(r.cross_dev, std::abs(static_cast<double>(cross) - p * da * db));
        }
    }
    const double nn = std::max(1, n);
    r.degree_dev_normalized = r.degree_dev / nn;
    r.codegree_dev_normalized = r.codegree_dev / nn;
    r.internal_dev_normalized = r.internal_dev / (nn * nn);
    r.cross_dev_normalized = r.cross_dev / (nn * nn);
    r.within_tolerance = r.degree_dev_normalized <= tolerance && r.codegree_dev_normalized <= tolerance
        && r.internal_dev_normalized <= tolerance && r.cross_dev_normalized <= tolerance;
    return r;
}

} // namespace ramsey
