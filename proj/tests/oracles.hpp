#pragma once

// Brute-force reference implementations. They work on plain adjacency matrices and
// share no code with the library beyond reading a Graph's edges.

#include "ramsey/coloring.hpp"
#include "ramsey/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<int>>; // 0 = no edge, 1 = red, 2 = blue

inline Matrix adjacency(const ramsey::Graph& g)
{
    const int n = g.vertex_count();
    Matrix m(n, std::vector<int>(n, 0));
    for (const auto& e : g.edges())
        m[e.u][e.v] = m[e.v][e.u] = 1;
    return m;
}

inline Matrix colored(const ramsey::TwoColoring& c)
{
    auto m = adjacency(c.host());
    for (const auto& e : c.host().edges())
        m[e.u][e.v] = m[e.v][e.u] = c.color(e.u, e.v) == ramsey::Color::red ? 1 : 2;
    return m;
}

inline std::int64_t maxcut(const ramsey::Graph& g)
{
    const int n = g.vertex_count();
    if (n <= 1)
        return 0;
    const auto edges = g.edges();
    std::int64_t best = 0;
    for (std::uint64_t side = 0; side < (std::uint64_t{1} << (n - 1)); ++side) {
        std::int64_t cut = 0;
        for (const auto& e : edges)
            cut += ((side >> e.u) & 1) != ((side >> e.v) & 1);
        best = std::max(best, cut);
    }
    return best;
}

inline std::int64_t triangles(const ramsey::Graph& g)
{
    const auto a = adjacency(g);
    const int n = g.vertex_count();
    std::int64_t t = 0;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z)
                t += a[x][y] && a[y][z] && a[x][z];
    return t;
}

struct TriangleClasses {
    std::int64_t t = 0, red = 0, blue = 0, mixed = 0;
};

inline TriangleClasses classify_triangles(const ramsey::TwoColoring& c)
{
    const auto a = colored(c);
    const int n = c.host().vertex_count();
    TriangleClasses out;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z) {
                if (!a[x][y] || !a[y][z] || !a[x][z])
                    continue;
                ++out.t;
                if (a[x][y] == a[y][z] && a[y][z] == a[x][z])
                    ++(a[x][y] == 1 ? out.red : out.blue);
                else
                    ++out.mixed;
            }
    return out;
}

// Calls f(subset) for every k-subset of 0..n-1.
template <class F>
void for_each_subset(int n, int k, F&& f)
{
    std::vector<int> s(k);
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == k) {
            f(s);
            return;
        }
        for (int v = start; v <= n - (k - pos); ++v) {
            s[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    if (k <= n)
        rec(rec, 0, 0);
}

// Monochromatic B_n^(k) (clique spine) or K_{k,n} (any spine) in a colored matrix.
inline bool has_mono_target(const Matrix& a, int k, int n, bool biclique)
{
    const int size = static_cast<int>(a.size());
    bool found = false;
    for (int color = 1; color <= 2 && !found; ++color)
        for_each_subset(size, k, [&](const std::vector<int>& s) {
            if (found)
                return;
            if (!biclique)
                for (std::size_t i = 0; i < s.size(); ++i)
                    for (std::size_t j = i + 1; j < s.size(); ++j)
                        if (a[s[i]][s[j]] != color)
                            return;
            int common = 0;
            for (int w = 0; w < size; ++w) {
                if (std::find(s.begin(), s.end(), w) != s.end())
                    continue;
                bool all = true;
                for (int x : s)
                    all = all && a[x][w] == color;
                common += all;
            }
            found = common >= n;
        });
    return found;
}

// Every 2-coloring of g contains the target; enumerates all 2^m colorings.
inline bool arrows(const ramsey::Graph& g, int k, int n, bool biclique)
{
    const auto edges = g.edges();
    auto a = adjacency(g);
    const std::uint64_t total = std::uint64_t{1} << edges.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const int col = (mask >> i) & 1 ? 1 : 2;
            a[edges[i].u][edges[i].v] = a[edges[i].v][edges[i].u] = col;
        }
        if (!has_mono_target(a, k, n, biclique))
            return false;
    }
    return true;
}

inline ramsey::Graph random_graph(std::mt19937_64& rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    ramsey::GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                b.add_edge(u, v);
    return std::move(b).build();
}

inline ramsey::Graph random_graph_with_edges(std::mt19937_64& rng, int n, int m)
{
    std::vector<ramsey::Edge> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            all.push_back({u, v});
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min<std::size_t>(all.size(), static_cast<std::size_t>(m)));
    return ramsey::Graph::from_edge_list(n, all);
}

inline ramsey::TwoColoring random_coloring(std::mt19937_64& rng, const ramsey::Graph& g)
{
    std::bernoulli_distribution coin(0.5);
    return ramsey::TwoColoring::from_function(g, [&](int, int) { return coin(rng) ? ramsey::Color::red : ramsey::Color::blue; });
}

} // namespace oracle
