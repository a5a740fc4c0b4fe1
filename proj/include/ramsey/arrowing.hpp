#pragma once

#include "ramsey/certificates.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/sampler.hpp"
#include "ramsey/witness.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace ramsey {

enum class Shape { book, biclique };

/// B_n^(k) (book) or K_{k,n} (biclique).
struct TargetSpec {
    Shape shape = Shape::book;
    int k = 1;
    int n = 1;
};

TargetSpec make_target(Shape shape, int k, int n); // validates k, n >= 1
std::string_view to_string(Shape s) noexcept;

/// Monochromatic copy of the target in `c`, if any.
std::optional<BookWitness> find_target(const TwoColoring& c, const TargetSpec& t);

struct DeciderLimits {
    int max_edges_exhaustive = 26;
    std::int64_t max_search_nodes = 50'000'000;
    int local_search_restarts = 16;
    int local_search_steps = 4000;
    int maxcut_vertex_cap = default_maxcut_vertex_cap;
};

enum class Outcome { arrows, not_arrows, unknown };
enum class Method { none, exhaustive, star_degree, certificate, local_search };

std::string_view to_string(Outcome o) noexcept;
std::string_view to_string(Method m) noexcept;

/// Every Arrows or NotArrows verdict carries evidence that has been re-checked:
/// a target-free coloring for NotArrows, or the method that proves Arrows
/// (the fired certificate for method certificate).
struct ArrowingVerdict {
    Outcome outcome = Outcome::unknown;
    Method method = Method::none;
    std::optional<TwoColoring> coloring;
    std::optional<CountingCertificate> certificate;
    std::int64_t nodes = 0;
    double millis = 0.0;
};

/// Depth-first search over partial colorings with the first edge fixed red.
/// Throws LimitsError when e(g) > lim.max_edges_exhaustive; returns Unknown when the
/// node budget runs out.
ArrowingVerdict decide_exact(const Graph& g, const TargetSpec& t, const DeciderLimits& lim = {});

/// G -> K_{1,n} (= B_n^(1)). Arrows iff max degree >= 2n-1, or some component is
/// (2n-2)-regular with an odd number of edges; otherwise an Euler-tour coloring keeps
/// every color degree below n.
ArrowingVerdict decide_star_fast(const Graph& g, int n);
/// Verdict of decide_star_fast without building the coloring.
bool star_arrows(const Graph& g, int n);

/// Randomized local search for a coloring with no monochromatic target.
std::optional<TwoColoring> search_avoiding_coloring(const Graph& g, const TargetSpec& t, const DeciderLimits& lim, Seed seed);

/// Star fast path, exhaustive search, k=2 counting certificate, local search; in that order.
ArrowingVerdict decide_sandwich(const Graph& g, const TargetSpec& t, const DeciderLimits& lim, Seed seed);

} // namespace ramsey
