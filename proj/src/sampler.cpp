#include "ramsey/sampler.hpp"

#include "ramsey/errors.hpp"

#include <cmath>
#include <string>

namespace ramsey {

namespace {

void check_probability(double p)
{
    if (!(p >= 0.0 && p <= 1.0))
        throw InputError("edge probability " + std::to_string(p) + " outside [0, 1]");
}

} // namespace

bool gnp_edge_indicator(int n, double p, Seed seed, int u, int v)
{
    check_probability(p);
    const CounterStream stream(seed, CounterStream::Domain::graph);
    return stream.uniform(pair_index(n, u, v)) < p;
}

Graph sample_gnp(int n, double p, Seed seed)
{
    check_probability(p);
    GraphBuilder b(n);
    if (p == 0.0)
        return std::move(b).build();
    const CounterStream stream(seed, CounterStream::Domain::graph);
    // uniform(c) < p  <=>  (bits(c) >> 11) < ceil(p * 2^53); the scaling is exact
    const auto threshold = static_cast<std::uint64_t>(std::ceil(p * 0x1.0p53));
    std::uint64_t counter = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++counter)
            if ((stream.bits(counter) >> 11) < threshold)
                b.add_edge_unchecked(u, v);
    return std::move(b).build();
}

TwoColoring sample_uniform_coloring(const Graph& g, Seed seed)
{
    const CounterStream stream(seed, CounterStream::Domain::coloring);
    const int n = g.vertex_count();
    return TwoColoring::from_function(g, [&](int u, int v) {
        return (stream.bits(pair_index(n, u, v)) >> 63) ? Color::red : Color::blue;
    });
}

} // namespace ramsey
