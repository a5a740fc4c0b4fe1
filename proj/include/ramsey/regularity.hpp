#pragma once

#include "ramsey/coloring.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/sampler.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace ramsey {

/// Disjoint cover of the vertex set. `equitable` records whether part sizes differ by at most one.
struct Partition {
    std::vector<VertexSet> parts;
    bool equitable = false;

    /// Validates disjointness and coverage of 0..vertex_count-1; throws InputError otherwise.
    static Partition from_parts(int vertex_count, std::vector<VertexSet> parts);
    /// m contiguous blocks of sizes floor(N/m) or ceil(N/m).
    static Partition equitable_blocks(int vertex_count, int m);
};

/// e(U, W) / (p |U| |W|), where e(U, W) = sum over u in U of |N(u) ∩ W|, so edges
/// inside U ∩ W count twice.
double p_density(const Graph& g, const VertexSet& u, const VertexSet& w, double p);

enum class RegStrategy { exhaustive, sampled };
enum class RegVerdict { regular, refuted, undetermined };

std::string_view to_string(RegStrategy s) noexcept;
std::string_view to_string(RegVerdict v) noexcept;

struct RegWitness {
    std::vector<int> u_sub;
    std::vector<int> w_sub;
    double density_sub = 0.0;
};

/// `regular` only ever comes from exhaustive testing; sampling can refute or stay undetermined.
struct RegPairReport {
    double density = 0.0;
    RegVerdict verdict = RegVerdict::undetermined;
    std::optional<RegWitness> witness;
    RegStrategy strategy = RegStrategy::sampled;
    std::int64_t trials = 0;
};

inline constexpr int exhaustive_regularity_cap = 14;

/// Checks |d(U, W) - d(U', W')| <= epsilon over sub-pairs with |U'| >= epsilon |U| and
/// |W'| >= epsilon |W|. Exhaustive mode enumerates subsets of U and, for each, the extremal
/// W' of every size, so it is exact; it throws LimitsError above `exhaustive_regularity_cap`
/// vertices per side. Sampled mode draws `trials` uniformly random sub-pairs.
RegPairReport test_regularity(const Graph& g, const VertexSet& u, const VertexSet& w, double epsilon, double p,
    RegStrategy strategy, std::int64_t trials, Seed seed);

/// Reduced graph on the parts of a partition: i ~ j when the pair is not refuted as
/// (epsilon, p)-regular in either color and its blue p-density is at least delta.
struct ReducedGraph {
    int m = 0;
    Graph gamma_b;
    std::vector<bool> red_mask;                // internal red p-density >= 1/2
    std::vector<std::vector<double>> blue_density;
    std::vector<std::vector<double>> red_density;
    std::vector<std::vector<bool>> refuted;
    std::vector<RegPairReport> refutations;    // reports of refuted pairs, row-major over i < j
    std::vector<std::pair<int, int>> refuted_pairs;

    /// Γ_B restricted to masked parts, with the mapping back to part indices.
    InducedSubgraph gamma_b_prime() const;
};

ReducedGraph build_reduced_graph(const TwoColoring& c, const Partition& partition, double epsilon, double p, double delta,
    std::int64_t trials, Seed seed, unsigned workers = 1);

/// Number of labeled copies of K_k with the i-th vertex in parts[i].
std::int64_t labeled_clique_count(const Graph& g, std::span<const VertexSet> parts);

struct CountingLemmaResult {
    std::int64_t actual = 0;
    double bound = 0.0;
    bool holds = false;
};

/// Actual labeled K_k count against (prod_{i<j} d(W_i, W_j) - epsilon C(k, 2)) prod |W_i|,
/// with plain (p = 1) densities. Parts may repeat.
CountingLemmaResult counting_lemma_check(const Graph& g, std::span<const VertexSet> parts, double epsilon);

struct ExtensionCheck {
    bool spine_extended = false; // u adjacent to every vertex of the given spine
    double frequency = 0.0;      // fraction of all labeled spines that u extends
    double bound = 0.0;          // prod_i d(u, U_i) - 4 delta
    std::int64_t spines = 0;
    bool holds = false;          // frequency >= bound
};

/// Spines are labeled K_k with one vertex in each part. An empty `spine` skips the indicator.
ExtensionCheck extension_bound_check(const Graph& g, std::span<const VertexSet> parts, std::span<const int> spine, int u, double delta);
ExtensionCheck extension_bound_check(const TwoColoring& c, Color color, std::span<const VertexSet> parts,
    std::span<const int> spine, int u, double delta);

/// prod x_i + (1/k) sum (1 - x_i)^k for x in [0, 1]^k; at least 2^(1-k).
double conlon_inequality_lhs(std::span<const double> x);

/// Blue and red degree profile of a vertex into parts W_1..W_k, normalized by p0 |W_i|.
struct ExtensionProfile {
    double p0 = 1.0;
    std::vector<double> blue; // x_i(v) = deg_B(v, W_i) / (p0 |W_i|)
    std::vector<double> red;  // deg_R(v, W_i) / (p0 |W_i|)
};

ExtensionProfile extension_profile(const TwoColoring& c, int v, std::span<const VertexSet> parts, double p0);

enum class ExtensionCase { case1, case2 };

struct CasePredicates {
    bool case1 = false; // prod x_i >= 2^-k
    bool case2 = false; // (1/k) sum (1 - min(x_i, 1))^k >= 2^-k
};

CasePredicates case_predicates(const ExtensionProfile& profile);
ExtensionCase case_split(const ExtensionProfile& profile);

} // namespace ramsey
