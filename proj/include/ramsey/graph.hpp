#pragma once

#include "ramsey/vertex_set.hpp"

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <span>
#include <vector>

namespace ramsey {

struct Edge {
    int u = 0;
    int v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphBuilder;

/// Immutable simple graph on vertices 0..N-1 with one adjacency bit-set per vertex.
///
/// Edges have a canonical order: pairs (u, v) with u < v, sorted lexicographically.
/// `edge_index` maps an edge to its rank in that order, which is how colorings and
/// other per-edge data are addressed.
class Graph {
public:
    Graph() = default;

    /// Throws InputError on an out-of-range index or a loop; duplicate pairs collapse.
    static Graph from_edge_list(int vertex_count, std::span<const Edge> edges);
    static Graph complete(int vertex_count);
    static Graph cycle(int vertex_count);
    static Graph empty(int vertex_count);

    int vertex_count() const noexcept { return n_; }
    std::int64_t edge_count() const noexcept { return m_; }
    std::size_t words_per_row() const noexcept { return wpr_; }

    std::span<const Word> row(int v) const noexcept
    {
        return {adj_.data() + static_cast<std::size_t>(v) * wpr_, wpr_};
    }
    VertexSet neighbors(int v) const;

    bool has_edge(int u, int v) const noexcept;
    int degree(int v) const noexcept { return static_cast<int>(popcount(row(v))); }
    int max_degree() const noexcept;

    /// Edges in canonical order.
    std::vector<Edge> edges() const;
    /// Rank of {u, v} in canonical order, or -1 when it is not an edge.
    std::int64_t edge_index(int u, int v) const noexcept;

    /// The same graph with vertex v renamed to perm[v].
    Graph relabeled(std::span<const int> perm) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    friend class GraphBuilder;

    int n_ = 0;
    std::size_t wpr_ = 0;
    std::int64_t m_ = 0;
    std::vector<Word> adj_;
    // edge_offset_[u] = number of canonical edges (a, b) with a < u
    std::vector<std::int64_t> edge_offset_;
};

/// Mutable staging area; all graph mutation happens here before `build`.
class GraphBuilder {
public:
    explicit GraphBuilder(int vertex_count);

    void add_edge(int u, int v);
    /// Unchecked variant for hot loops whose indices are valid by construction.
    void add_edge_unchecked(int u, int v) noexcept;
    bool has_edge(int u, int v) const noexcept;

    Graph build() &&;

private:
    Graph g_;
};

struct InducedSubgraph {
    Graph graph;
    /// original_vertex[i] is the vertex of the host graph renamed to i
    std::vector<int> original_vertex;
};

/// Vertices of `s` relabeled 0..|s|-1 in increasing order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Intersection of the neighborhoods of all members of `s`, minus `s` itself.
/// Throws InputError when `s` is empty.
VertexSet common_neighborhood(const Graph& g, const VertexSet& s);

std::int64_t triangle_count(const Graph& g);

inline constexpr int default_maxcut_vertex_cap = 28;

/// Maximum number of edges crossing a bipartition, by branch-and-bound.
/// Throws LimitsError when the graph has more than `vertex_cap` vertices (at most 64).
std::int64_t maxcut_exact(const Graph& g, int vertex_cap = default_maxcut_vertex_cap);

/// Text edge-list format: first line "N", then "u v" per edge; '#' starts a comment line.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

namespace detail {

template <class Visit>
bool clique_recurse(const Graph& g, int k, std::span<const Word> cand, std::vector<int>& prefix,
    std::vector<Word>& buffers, Visit& visit)
{
    const std::size_t wpr = g.words_per_row();
    const auto depth = prefix.size();
    const int still_needed = k - static_cast<int>(depth);
    if (static_cast<int>(popcount(cand)) < still_needed)
        return true;
    for (std::size_t wi = 0; wi < cand.size(); ++wi) {
        Word w = cand[wi];
        while (w) {
            const int b = std::countr_zero(w);
            w &= w - 1;
            const int v = static_cast<int>(wi * word_bits + static_cast<std::size_t>(b));
            prefix.push_back(v);
            if (still_needed == 1) {
                if (!visit(std::span<const int>(prefix)))
                    return false;
            } else {
                std::span<Word> next(buffers.data() + depth * wpr, wpr);
                const auto r = g.row(v);
                for (std::size_t i = 0; i < wpr; ++i)
                    next[i] = i < wi ? 0 : (cand[i] & r[i]);
                // keep only candidates above v
                next[wi] &= (b == 63) ? Word{0} : (~Word{0} << (b + 1));
                if (!clique_recurse(g, k, std::span<const Word>(next), prefix, buffers, visit))
                    return false;
            }
            prefix.pop_back();
        }
    }
    return true;
}

} // namespace detail

/// Calls `visit(std::span<const int>)` for every k-clique inside `candidates`, each exactly
/// once, in lexicographic order of sorted vertex tuples. Stops early when `visit` returns
/// false; the return value says whether enumeration ran to completion.
template <class Visit>
bool for_each_clique(const Graph& g, int k, const VertexSet& candidates, Visit&& visit)
{
    if (k < 1)
        return true;
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(k));
    std::vector<Word> buffers(static_cast<std::size_t>(k) * g.words_per_row(), 0);
    std::vector<Word> root(candidates.words().begin(), candidates.words().end());
    root.resize(g.words_per_row(), 0);
    return detail::clique_recurse(g, k, std::span<const Word>(root), prefix, buffers, visit);
}

template <class Visit>
bool for_each_clique(const Graph& g, int k, Visit&& visit)
{
    return for_each_clique(g, k, VertexSet::full(static_cast<std::size_t>(g.vertex_count())), std::forward<Visit>(visit));
}

/// All k-cliques as sorted vertex lists, lexicographically ordered.
std::vector<std::vector<int>> enumerate_cliques(const Graph& g, int k);

} // namespace ramsey
