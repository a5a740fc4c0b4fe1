#pragma once

#include "ramsey/coloring.hpp"
#include "ramsey/graph.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace ramsey {

/// (value, stream_index) fully determines every sampled bit.
struct Seed {
    std::uint64_t value = 0;
    std::uint64_t stream_index = 0;
    friend bool operator==(const Seed&, const Seed&) = default;
};

/// 64-bit finalizer (splitmix64).
constexpr std::uint64_t mix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t mix(std::uint64_t a, std::uint64_t b) noexcept
{
    return mix64(a ^ mix64(b ^ 0x6a09e667f3bcc909ULL));
}

/// Per-sample seed for sample `index` of a run with `master` seed.
constexpr Seed derive_seed(std::uint64_t master, std::uint64_t index) noexcept
{
    return {master, index};
}

/// Random bits addressable by counter: bits(i) does not depend on any other counter.
class CounterStream {
public:
    enum class Domain : std::uint64_t { graph = 0x4752415048ULL, coloring = 0x434f4c4f52ULL, general = 0x47454e4552ULL };

    CounterStream(Seed seed, Domain domain) noexcept
        : key_(mix(mix(seed.value, static_cast<std::uint64_t>(domain)), seed.stream_index))
    {
    }

    std::uint64_t bits(std::uint64_t counter) const noexcept { return mix64(key_ ^ mix64(counter)); }
    /// Uniform in [0, 1) with 53 bits of resolution.
    double uniform(std::uint64_t counter) const noexcept
    {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t key_;
};

/// Sequential generator over a CounterStream; reproducible on every platform.
class SeededRng {
public:
    explicit SeededRng(Seed seed, CounterStream::Domain domain = CounterStream::Domain::general) noexcept
        : stream_(seed, domain)
    {
    }

    std::uint64_t next() noexcept { return stream_.bits(counter_++); }
    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) noexcept
    {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
    }
    /// Uniform in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) noexcept
    {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    template <class T>
    void shuffle(std::vector<T>& v) noexcept
    {
        for (std::size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[below(i)]);
    }

private:
    CounterStream stream_;
    std::uint64_t counter_ = 0;
};

/// Rank of the pair {u, v}, u < v, among all C(n, 2) pairs in lexicographic order.
constexpr std::uint64_t pair_index(int n, int u, int v) noexcept
{
    if (u > v) {
        const int t = u;
        u = v;
        v = t;
    }
    const auto su = static_cast<std::uint64_t>(u);
    const auto sn = static_cast<std::uint64_t>(n);
    return su * (2 * sn - su - 1) / 2 + static_cast<std::uint64_t>(v - u - 1);
}

/// Whether pair {u, v} is an edge of sample_gnp(n, p, seed).
bool gnp_edge_indicator(int n, double p, Seed seed, int u, int v);

/// G(n, p): each pair independently an edge with probability p. Samples with the same seed
/// are coupled across p: sample_gnp(n, p1, s) is a subgraph of sample_gnp(n, p2, s) for p1 <= p2.
Graph sample_gnp(int n, double p, Seed seed);

/// Each edge independently red with probability 1/2.
TwoColoring sample_uniform_coloring(const Graph& g, Seed seed);

} // namespace ramsey
