#include "ramsey/regularity.hpp"

#include "ramsey/errors.hpp"
#include "ramsey/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

namespace ramsey {

namespace {

constexpr double density_slack = 1e-12;

std::int64_t edges_between(const Graph& g, const VertexSet& u, const VertexSet& w)
{
    std::int64_t total = 0;
    u.for_each([&](int x) { total += static_cast<std::int64_t>(intersection_count(g.row(x), w.words())); });
    return total;
}

} // namespace

Partition Partition::from_parts(int vertex_count, std::vector<VertexSet> parts)
{
    const auto universe = static_cast<std::size_t>(vertex_count);
    VertexSet covered(universe);
    std::size_t min_size = universe, max_size = 0;
    for (const auto& part : parts) {
        if (part.universe() != universe)
            throw InputError("partition part has the wrong universe size");
        if (part.intersects(covered))
            throw InputError("partition parts overlap");
        covered |= part;
        min_size = std::min(min_size, part.size());
        max_size = std::max(max_size, part.size());
    }
    if (covered.size() != universe)
        throw InputError("partition does not cover every vertex");
    Partition p;
    p.equitable = parts.empty() || max_size - min_size <= 1;
    p.parts = std::move(parts);
    return p;
}

Partition Partition::equitable_blocks(int vertex_count, int m)
{
    if (m < 1 || m > std::max(vertex_count, 1))
        throw InputError("number of parts must lie in [1, N]");
    std::vector<VertexSet> parts;
    int first = 0;
    for (int i = 0; i < m; ++i) {
        const int size = vertex_count / m + (i < vertex_count % m ? 1 : 0);
        parts.push_back(VertexSet::range(static_cast<std::size_t>(vertex_count), first, first + size));
        first += size;
    }
    return from_parts(vertex_count, std::move(parts));
}

double p_density(const Graph& g, const VertexSet& u, const VertexSet& w, double p)
{
    if (u.empty() || w.empty())
        throw InputError("p-density of an empty set");
    if (!(p > 0.0 && p <= 1.0))
        throw InputError("p must lie in (0, 1]");
    return static_cast<double>(edges_between(g, u, w)) / (p * static_cast<double>(u.size()) * static_cast<double>(w.size()));
}

std::string_view to_string(RegStrategy s) noexcept
{
    return s == RegStrategy::exhaustive ? "exhaustive" : "sampled";
}

std::string_view to_string(RegVerdict v) noexcept
{
    switch (v) {
    case RegVerdict::regular:
        return "regular";
    case RegVerdict::refuted:
        return "refuted";
    case RegVerdict::undetermined:
        break;
    }
    return "undetermined";
}

namespace {

struct SubPairSearch {
    const Graph& g;
    std::vector<int> w_members;
    double p;
    double epsilon;
    double density;
    std::size_t min_w;

    // Given U', examines the densest and sparsest W' of every admissible size.
    std::optional<RegWitness> check(const std::vector<int>& u_sub) const
    {
        VertexSet u_set = VertexSet::of(static_cast<std::size_t>(g.vertex_count()), u_sub);
        std::vector<std::pair<std::int64_t, int>> into(w_members.size());
        for (std::size_t i = 0; i < w_members.size(); ++i)
            into[i] = {static_cast<std::int64_t>(intersection_count(g.row(w_members[i]), u_set.words())), w_members[i]};
        std::sort(into.begin(), into.end(), [](const auto& a, const auto& b) { return a.first > b.first || (a.first == b.first && a.second < b.second); });
        const std::size_t size_w = into.size();
        std::vector<std::int64_t> prefix(size_w + 1, 0);
        for (std::size_t i = 0; i < size_w; ++i)
            prefix[i + 1] = prefix[i] + into[i].first;
        const double scale = p * static_cast<double>(u_sub.size());
        for (std::size_t s = min_w; s <= size_w; ++s) {
            const double top = static_cast<double>(prefix[s]) / (scale * static_cast<double>(s));
            const double bottom = static_cast<double>(prefix[size_w] - prefix[size_w - s]) / (scale * static_cast<double>(s));
            const bool high = std::abs(top - density) > epsilon + density_slack;
            const bool low = std::abs(bottom - density) > epsilon + density_slack;
            if (high || low) {
                RegWitness w;
                w.u_sub = u_sub;
                w.density_sub = high ? top : bottom;
                for (std::size_t i = 0; i < s; ++i)
                    w.w_sub.push_back(high ? into[i].second : into[size_w - 1 - i].second);
                std::sort(w.w_sub.begin(), w.w_sub.end());
                return w;
            }
        }
        return std::nullopt;
    }
};

bool verify_refutation(const Graph& g, const VertexSet& u, const VertexSet& w, double epsilon, double p, const RegWitness& wit)
{
    const auto universe = static_cast<std::size_t>(g.vertex_count());
    const VertexSet us = VertexSet::of(universe, wit.u_sub);
    const VertexSet ws = VertexSet::of(universe, wit.w_sub);
    if (!us.subset_of(u) || !ws.subset_of(w) || us.empty() || ws.empty())
        return false;
    if (static_cast<double>(us.size()) < epsilon * static_cast<double>(u.size()) - density_slack
        || static_cast<double>(ws.size()) < epsilon * static_cast<double>(w.size()) - density_slack)
        return false;
    return std::abs(p_density(g, u, w, p) - p_density(g, us, ws, p)) > epsilon;
}

std::size_t min_subset_size(double epsilon, std::size_t size)
{
    const auto raw = static_cast<std::size_t>(std::ceil(epsilon * static_cast<double>(size) - density_slack));
    return std::clamp<std::size_t>(raw, 1, size);
}

} // namespace

RegPairReport test_regularity(const Graph& g, const VertexSet& u, const VertexSet& w, double epsilon, double p,
    RegStrategy strategy, std::int64_t trials, Seed seed)
{
    if (!(epsilon > 0.0))
        throw InputError("epsilon must be positive");
    RegPairReport report;
    report.strategy = strategy;
    report.density = p_density(g, u, w, p);
    const std::vector<int> u_members = u.members();
    SubPairSearch search{g, w.members(), p, epsilon, report.density, min_subset_size(epsilon, w.size())};
    const std::size_t min_u = min_subset_size(epsilon, u_members.size());

    auto finish_refuted = [&](RegWitness wit) {
        if (!verify_refutation(g, u, w, epsilon, p, wit))
            throw InternalError("regularity witness failed verification");
        report.verdict = RegVerdict::refuted;
        report.witness = std::move(wit);
        return report;
    };

    if (strategy == RegStrategy::exhaustive) {
        if (u_members.size() > exhaustive_regularity_cap || search.w_members.size() > exhaustive_regularity_cap)
            throw LimitsError("exhaustive regularity testing is limited to " + std::to_string(exhaustive_regularity_cap) + " vertices per side");
        const auto size_u = u_members.size();
        std::vector<int> u_sub;
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << size_u); ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) < min_u)
                continue;
            u_sub.clear();
            for (std::size_t i = 0; i < size_u; ++i)
                if ((mask >> i) & 1U)
                    u_sub.push_back(u_members[i]);
            ++report.trials;
            if (auto wit = search.check(u_sub))
                return finish_refuted(std::move(*wit));
        }
        report.verdict = RegVerdict::regular;
        return report;
    }

    SeededRng rng(seed);
    const auto universe = static_cast<std::size_t>(g.vertex_count());
    auto draw = [&](std::vector<int>& pool, std::size_t min_size) {
        const auto a = static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(min_size), static_cast<std::int64_t>(pool.size())));
        for (std::size_t i = 0; i < a; ++i)
            std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
        std::vector<int> sub(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(a));
        std::sort(sub.begin(), sub.end());
        return sub;
    };
    std::vector<int> u_pool = u_members;
    std::vector<int> w_pool = search.w_members;
    for (std::int64_t trial = 0; trial < trials; ++trial) {
        RegWitness wit;
        wit.u_sub = draw(u_pool, min_u);
        wit.w_sub = draw(w_pool, search.min_w);
        wit.density_sub = p_density(g, VertexSet::of(universe, wit.u_sub), VertexSet::of(universe, wit.w_sub), p);
        ++report.trials;
        if (std::abs(wit.density_sub - report.density) > epsilon + density_slack)
            return finish_refuted(std::move(wit));
    }
    report.verdict = RegVerdict::undetermined;
    return report;
}

InducedSubgraph ReducedGraph::gamma_b_prime() const
{
    VertexSet masked(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        if (red_mask[static_cast<std::size_t>(i)])
            masked.insert(i);
    return induced_subgraph(gamma_b, masked);
}

ReducedGraph build_reduced_graph(const TwoColoring& c, const Partition& partition, double epsilon, double p, double delta,
    std::int64_t trials, Seed seed, unsigned workers)
{
    const auto& parts = partition.parts;
    const int m = static_cast<int>(parts.size());
    const Graph& red = c.subgraph(Color::red);
    const Graph& blue = c.subgraph(Color::blue);
    ReducedGraph r;
    r.m = m;
    r.red_mask.assign(static_cast<std::size_t>(m), false);
    r.blue_density.assign(static_cast<std::size_t>(m), std::vector<double>(static_cast<std::size_t>(m), 0.0));
    r.red_density = r.blue_density;
    r.refuted.assign(static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(m), false));

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            pairs.push_back({i, j});

    struct PairOutcome {
        std::optional<RegPairReport> refutation;
    };
    std::vector<PairOutcome> outcome(pairs.size());
    parallel_for(pairs.size(), workers, [&](std::size_t idx) {
        const auto [i, j] = pairs[idx];
        const auto& vi = parts[static_cast<std::size_t>(i)];
        const auto& vj = parts[static_cast<std::size_t>(j)];
        std::uint64_t salt = 0;
        for (const Graph* h : {&red, &blue}) {
            const Seed pair_seed{seed.value, mix(mix(seed.stream_index, idx), salt++)};
            auto rep = test_regularity(*h, vi, vj, epsilon, p, RegStrategy::sampled, trials, pair_seed);
            if (rep.verdict == RegVerdict::refuted) {
                outcome[idx].refutation = std::move(rep);
                return;
            }
        }
    });

    GraphBuilder gamma(m);
    for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
        const auto [i, j] = pairs[idx];
        const auto si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
        r.blue_density[si][sj] = r.blue_density[sj][si] = p_density(blue, parts[si], parts[sj], p);
        r.red_density[si][sj] = r.red_density[sj][si] = p_density(red, parts[si], parts[sj], p);
        const bool refuted = outcome[idx].refutation.has_value();
        r.refuted[si][sj] = r.refuted[sj][si] = refuted;
        if (refuted) {
            r.refutations.push_back(*outcome[idx].refutation);
            r.refuted_pairs.push_back({i, j});
        }
        if (!refuted && r.blue_density[si][sj] >= delta)
            gamma.add_edge(i, j);
    }
    for (int i = 0; i < m; ++i) {
        const auto si = static_cast<std::size_t>(i);
        r.blue_density[si][si] = p_density(blue, parts[si], parts[si], p);
        r.red_density[si][si] = p_density(red, parts[si], parts[si], p);
        r.red_mask[si] = r.red_density[si][si] >= 0.5;
    }
    r.gamma_b = std::move(gamma).build();
    return r;
}

std::int64_t labeled_clique_count(const Graph& g, std::span<const VertexSet> parts)
{
    const std::size_t k = parts.size();
    if (k == 0)
        return 0;
    const std::size_t wpr = g.words_per_row();
    // cand[level][j] for j >= level: members of part j adjacent to all chosen vertices
    std::vector<Word> cand(k * k * wpr, 0);
    for (std::size_t j = 0; j < k; ++j) {
        const auto words = parts[j].words();
        std::copy(words.begin(), words.end(), cand.begin() + static_cast<std::ptrdiff_t>(j * wpr));
    }
    std::function<std::int64_t(std::size_t)> count = [&](std::size_t level) -> std::int64_t {
        const std::span<const Word> mine(cand.data() + (level * k + level) * wpr, wpr);
        if (level + 1 == k)
            return static_cast<std::int64_t>(popcount(mine));
        std::int64_t total = 0;
        for_each_bit(mine, [&](int x) {
            const auto rx = g.row(x);
            bool feasible = true;
            for (std::size_t j = level + 1; j < k; ++j) {
                const Word* src = cand.data() + (level * k + j) * wpr;
                Word* dst = cand.data() + ((level + 1) * k + j) * wpr;
                Word any = 0;
                for (std::size_t i = 0; i < wpr; ++i) {
                    dst[i] = src[i] & rx[i];
                    any |= dst[i];
                }
                feasible = feasible && any != 0;
            }
            if (feasible)
                total += count(level + 1);
        });
        return total;
    };
    return count(0);
}

CountingLemmaResult counting_lemma_check(const Graph& g, std::span<const VertexSet> parts, double epsilon)
{
    const std::size_t k = parts.size();
    if (k < 2)
        throw InputError("counting lemma check needs at least two parts");
    double product = 1.0;
    double volume = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
        volume *= static_cast<double>(parts[i].size());
        for (std::size_t j = i + 1; j < k; ++j)
            product *= p_density(g, parts[i], parts[j], 1.0);
    }
    CountingLemmaResult r;
    r.actual = labeled_clique_count(g, parts);
    const double pairs = static_cast<double>(k * (k - 1) / 2);
    r.bound = (product - epsilon * pairs) * volume;
    r.holds = static_cast<double>(r.actual) >= r.bound - 1e-9;
    return r;
}

ExtensionCheck extension_bound_check(const Graph& g, std::span<const VertexSet> parts, std::span<const int> spine, int u, double delta)
{
    if (parts.empty())
        throw InputError("extension check needs at least one part");
    if (u < 0 || u >= g.vertex_count())
        throw InputError("vertex out of range");
    ExtensionCheck r;
    if (!spine.empty()) {
        if (spine.size() != parts.size())
            throw InputError("spine must have one vertex per part");
        for (std::size_t i = 0; i < spine.size(); ++i) {
            if (!parts[i].contains(spine[i]))
                throw InputError("spine vertex " + std::to_string(spine[i]) + " is not in its part");
            for (std::size_t j = i + 1; j < spine.size(); ++j)
                if (!g.has_edge(spine[i], spine[j]))
                    throw InputError("spine is not a clique");
        }
        r.spine_extended = std::all_of(spine.begin(), spine.end(), [&](int x) { return g.has_edge(u, x); });
    }
    r.spines = labeled_clique_count(g, parts);
    std::vector<VertexSet> restricted(parts.begin(), parts.end());
    double product = 1.0;
    for (auto& part : restricted) {
        const auto size = static_cast<double>(part.size());
        part &= g.row(u);
        product *= size > 0 ? static_cast<double>(part.size()) / size : 0.0;
    }
    const auto extended = labeled_clique_count(g, restricted);
    r.frequency = r.spines > 0 ? static_cast<double>(extended) / static_cast<double>(r.spines) : 0.0;
    r.bound = product - 4.0 * delta;
    r.holds = r.frequency >= r.bound;
    return r;
}

ExtensionCheck extension_bound_check(const TwoColoring& c, Color color, std::span<const VertexSet> parts,
    std::span<const int> spine, int u, double delta)
{
    return extension_bound_check(c.subgraph(color), parts, spine, u, delta);
}

double conlon_inequality_lhs(std::span<const double> x)
{
    if (x.empty())
        throw InputError("need at least one coordinate");
    const auto k = static_cast<double>(x.size());
    double product = 1.0;
    double power_sum = 0.0;
    for (double xi : x) {
        if (!(xi >= 0.0 && xi <= 1.0))
            throw InputError("coordinates must lie in [0, 1]");
        product *= xi;
        power_sum += std::pow(1.0 - xi, k);
    }
    return product + power_sum / k;
}

ExtensionProfile extension_profile(const TwoColoring& c, int v, std::span<const VertexSet> parts, double p0)
{
    if (!(p0 > 0.0))
        throw InputError("p0 must be positive");
    ExtensionProfile prof;
    prof.p0 = p0;
    for (const auto& part : parts) {
        if (part.empty())
            throw InputError("extension profile over an empty part");
        const double scale = p0 * static_cast<double>(part.size());
        prof.blue.push_back(static_cast<double>(intersection_count(c.subgraph(Color::blue).row(v), part.words())) / scale);
        prof.red.push_back(static_cast<double>(intersection_count(c.subgraph(Color::red).row(v), part.words())) / scale);
    }
    return prof;
}

CasePredicates case_predicates(const ExtensionProfile& profile)
{
    const auto k = static_cast<double>(profile.blue.size());
    const double threshold = std::pow(2.0, -k);
    double product = 1.0;
    double power_sum = 0.0;
    for (double x : profile.blue) {
        product *= x;
        power_sum += std::pow(1.0 - std::min(x, 1.0), k);
    }
    return {product >= threshold, power_sum / k >= threshold};
}

ExtensionCase case_split(const ExtensionProfile& profile)
{
    if (profile.blue.empty())
        throw InputError("empty extension profile");
    return case_predicates(profile).case1 ? ExtensionCase::case1 : ExtensionCase::case2;
}

} // namespace ramsey
