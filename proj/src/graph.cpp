#include "ramsey/graph.hpp"

#include "ramsey/errors.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

namespace ramsey {

namespace {

void check_vertex(int v, int n)
{
    if (v < 0 || v >= n)
        throw InputError("vertex index " + std::to_string(v) + " out of range for " + std::to_string(n) + " vertices");
}

} // namespace

GraphBuilder::GraphBuilder(int vertex_count)
{
    if (vertex_count < 0)
        throw InputError("negative vertex count");
    if (vertex_count > (1 << 20))
        throw LimitsError("graphs are limited to 2^20 vertices");
    g_.n_ = vertex_count;
    g_.wpr_ = words_for(static_cast<std::size_t>(vertex_count));
    g_.adj_.assign(static_cast<std::size_t>(vertex_count) * g_.wpr_, 0);
}

void GraphBuilder::add_edge(int u, int v)
{
    check_vertex(u, g_.n_);
    check_vertex(v, g_.n_);
    if (u == v)
        throw InputError("loop at vertex " + std::to_string(u));
    add_edge_unchecked(u, v);
}

void GraphBuilder::add_edge_unchecked(int u, int v) noexcept
{
    const auto su = static_cast<std::size_t>(u);
    const auto sv = static_cast<std::size_t>(v);
    g_.adj_[su * g_.wpr_ + sv / word_bits] |= Word{1} << (sv % word_bits);
    g_.adj_[sv * g_.wpr_ + su / word_bits] |= Word{1} << (su % word_bits);
}

bool GraphBuilder::has_edge(int u, int v) const noexcept
{
    return g_.has_edge(u, v);
}

Graph GraphBuilder::build() &&
{
    Graph g = std::move(g_);
    g.edge_offset_.assign(static_cast<std::size_t>(g.n_) + 1, 0);
    std::int64_t total = 0;
    for (int u = 0; u < g.n_; ++u) {
        g.edge_offset_[static_cast<std::size_t>(u)] = total;
        const auto r = g.row(u);
        const auto su = static_cast<std::size_t>(u);
        // neighbors strictly above u
        for (std::size_t i = su / word_bits; i < g.wpr_; ++i) {
            Word w = r[i];
            if (i == su / word_bits)
                w &= (su % word_bits == 63) ? Word{0} : (~Word{0} << (su % word_bits + 1));
            total += std::popcount(w);
        }
    }
    g.edge_offset_[static_cast<std::size_t>(g.n_)] = total;
    g.m_ = total;
    return g;
}

Graph Graph::from_edge_list(int vertex_count, std::span<const Edge> edges)
{
    GraphBuilder b(vertex_count);
    for (const auto& e : edges)
        b.add_edge(e.u, e.v);
    return std::move(b).build();
}

Graph Graph::complete(int vertex_count)
{
    GraphBuilder b(vertex_count);
    for (int u = 0; u < vertex_count; ++u)
        for (int v = u + 1; v < vertex_count; ++v)
            b.add_edge_unchecked(u, v);
    return std::move(b).build();
}

Graph Graph::cycle(int vertex_count)
{
    GraphBuilder b(vertex_count);
    if (vertex_count >= 3)
        for (int v = 0; v < vertex_count; ++v)
            b.add_edge(v, (v + 1) % vertex_count);
    return std::move(b).build();
}

Graph Graph::empty(int vertex_count)
{
    return GraphBuilder(vertex_count).build();
}

VertexSet Graph::neighbors(int v) const
{
    VertexSet s(static_cast<std::size_t>(n_));
    const auto r = row(v);
    std::copy(r.begin(), r.end(), s.words().begin());
    return s;
}

bool Graph::has_edge(int u, int v) const noexcept
{
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        return false;
    const auto sv = static_cast<std::size_t>(v);
    return (row(u)[sv / word_bits] >> (sv % word_bits)) & 1U;
}

int Graph::max_degree() const noexcept
{
    int best = 0;
    for (int v = 0; v < n_; ++v)
        best = std::max(best, degree(v));
    return best;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for_each_bit(row(u), [&](int v) {
            if (v > u)
                out.push_back({u, v});
        });
    return out;
}

std::int64_t Graph::edge_index(int u, int v) const noexcept
{
    if (u > v)
        std::swap(u, v);
    if (!has_edge(u, v))
        return -1;
    const auto r = row(u);
    const auto su = static_cast<std::size_t>(u);
    const auto sv = static_cast<std::size_t>(v);
    std::int64_t rank = 0;
    for (std::size_t i = su / word_bits; i <= sv / word_bits; ++i) {
        Word w = r[i];
        if (i == su / word_bits)
            w &= (su % word_bits == 63) ? Word{0} : (~Word{0} << (su % word_bits + 1));
        if (i == sv / word_bits)
            w &= (Word{1} << (sv % word_bits)) - 1;
        rank += std::popcount(w);
    }
    return edge_offset_[su] + rank;
}

Graph Graph::relabeled(std::span<const int> perm) const
{
    if (perm.size() != static_cast<std::size_t>(n_))
        throw InputError("permutation size does not match vertex count");
    GraphBuilder b(n_);
    for (const auto& e : edges())
        b.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    return std::move(b).build();
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s)
{
    InducedSubgraph out;
    out.original_vertex = s.members();
    const int size = static_cast<int>(out.original_vertex.size());
    GraphBuilder b(size);
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j)
            if (g.has_edge(out.original_vertex[static_cast<std::size_t>(i)], out.original_vertex[static_cast<std::size_t>(j)]))
                b.add_edge_unchecked(i, j);
    out.graph = std::move(b).build();
    return out;
}

VertexSet common_neighborhood(const Graph& g, const VertexSet& s)
{
    if (s.empty())
        throw InputError("common neighborhood of an empty set");
    VertexSet out = VertexSet::full(static_cast<std::size_t>(g.vertex_count()));
    s.for_each([&](int v) { out &= g.row(v); });
    out -= s;
    return out;
}

std::int64_t triangle_count(const Graph& g)
{
    std::int64_t codegree_sum = 0;
    for (int u = 0; u < g.vertex_count(); ++u) {
        const auto ru = g.row(u);
        for_each_bit(ru, [&](int v) {
            if (v > u)
                codegree_sum += static_cast<std::int64_t>(intersection_count(ru, g.row(v)));
        });
    }
    return codegree_sum / 3;
}

std::vector<std::vector<int>> enumerate_cliques(const Graph& g, int k)
{
    std::vector<std::vector<int>> out;
    for_each_clique(g, k, [&](std::span<const int> q) {
        out.emplace_back(q.begin(), q.end());
        return true;
    });
    return out;
}

namespace {

class MaxCutSearch {
public:
    explicit MaxCutSearch(const Graph& g)
    {
        const int n = g.vertex_count();
        order_.resize(static_cast<std::size_t>(n));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
        std::vector<int> position(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            position[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])] = i;
        adj_.assign(static_cast<std::size_t>(n), 0);
        for (const auto& e : g.edges()) {
            const int a = position[static_cast<std::size_t>(e.u)];
            const int b = position[static_cast<std::size_t>(e.v)];
            adj_[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
            adj_[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
        }
        // suffix_edges_[i] = edges with both endpoints in positions >= i
        suffix_edges_.assign(static_cast<std::size_t>(n) + 1, 0);
        for (int i = n - 1; i >= 0; --i) {
            const std::uint64_t later = (i == 63) ? 0 : (~std::uint64_t{0} << (i + 1));
            suffix_edges_[static_cast<std::size_t>(i)] =
                suffix_edges_[static_cast<std::size_t>(i) + 1] + std::popcount(adj_[static_cast<std::size_t>(i)] & later);
        }
    }

    std::int64_t solve()
    {
        const int n = static_cast<int>(adj_.size());
        if (n <= 1)
            return 0;
        best_ = greedy_lower_bound();
        descend(1, std::uint64_t{1}, 0, 0);
        return best_;
    }

private:
    std::int64_t cut_of(std::uint64_t side_a) const
    {
        std::int64_t cut = 0;
        for (std::size_t v = 0; v < adj_.size(); ++v)
            if ((side_a >> v) & 1U)
                cut += std::popcount(adj_[v] & ~side_a);
        return cut;
    }

    // Greedy placement followed by single-vertex moves until no move improves.
    std::int64_t greedy_lower_bound() const
    {
        const int n = static_cast<int>(adj_.size());
        const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        std::uint64_t a = 1, b = 0;
        for (int v = 1; v < n; ++v) {
            const auto bit = std::uint64_t{1} << v;
            if (std::popcount(adj_[static_cast<std::size_t>(v)] & a) >= std::popcount(adj_[static_cast<std::size_t>(v)] & b))
                b |= bit;
            else
                a |= bit;
        }
        bool improved = true;
        while (improved) {
            improved = false;
            for (int v = 0; v < n; ++v) {
                const auto bit = std::uint64_t{1} << v;
                const std::uint64_t same = (a & bit) ? a : (all & ~a);
                const int same_count = std::popcount(adj_[static_cast<std::size_t>(v)] & same & ~bit);
                const int other_count = std::popcount(adj_[static_cast<std::size_t>(v)] & ~same & all);
                if (same_count > other_count) {
                    a ^= bit;
                    improved = true;
                }
            }
        }
        return cut_of(a);
    }

    void descend(int i, std::uint64_t a, std::uint64_t b, std::int64_t cut)
    {
        const int n = static_cast<int>(adj_.size());
        if (i == n) {
            best_ = std::max(best_, cut);
            return;
        }
        std::int64_t bound = cut;
        for (int j = i; j < n; ++j) {
            const auto row = adj_[static_cast<std::size_t>(j)];
            bound += std::max(std::popcount(row & a), std::popcount(row & b));
        }
        const std::int64_t r = n - i;
        bound += std::min<std::int64_t>(suffix_edges_[static_cast<std::size_t>(i)], r * r / 4);
        if (bound <= best_)
            return;
        const auto row = adj_[static_cast<std::size_t>(i)];
        const auto bit = std::uint64_t{1} << i;
        const std::int64_t gain_a = std::popcount(row & b);
        const std::int64_t gain_b = std::popcount(row & a);
        if (gain_a >= gain_b) {
            descend(i + 1, a | bit, b, cut + gain_a);
            descend(i + 1, a, b | bit, cut + gain_b);
        } else {
            descend(i + 1, a, b | bit, cut + gain_b);
            descend(i + 1, a | bit, b, cut + gain_a);
        }
    }

    std::vector<int> order_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::int64_t> suffix_edges_;
    std::int64_t best_ = 0;
};

} // namespace

std::int64_t maxcut_exact(const Graph& g, int vertex_cap)
{
    const int cap = std::min(vertex_cap, 64);
    if (g.vertex_count() > cap)
        throw LimitsError("maxcut_exact: " + std::to_string(g.vertex_count()) + " vertices exceeds cap " + std::to_string(cap));
    return MaxCutSearch(g).solve();
}

Graph read_edge_list(std::istream& in)
{
    std::string line;
    int line_no = 0;
    auto next_content_line = [&](std::string& out) {
        while (std::getline(in, out)) {
            ++line_no;
            const auto first = out.find_first_not_of(" \t\r");
            if (first == std::string::npos || out[first] == '#')
                continue;
            return true;
        }
        return false;
    };
    if (!next_content_line(line))
        throw ParseError("edge list: missing vertex count line");
    long long n = -1;
    {
        std::istringstream ls(line);
        std::string extra;
        if (!(ls >> n) || n < 0 || (ls >> extra))
            throw ParseError("edge list line " + std::to_string(line_no) + ": expected a vertex count");
    }
    if (n > (1 << 20))
        throw LimitsError("edge list: vertex count exceeds 2^20");
    GraphBuilder b(static_cast<int>(n));
    while (next_content_line(line)) {
        std::istringstream ls(line);
        long long u = -1, v = -1;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra))
            throw ParseError("edge list line " + std::to_string(line_no) + ": expected \"u v\"");
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw ParseError("edge list line " + std::to_string(line_no) + ": invalid edge " + std::to_string(u) + " " + std::to_string(v));
        b.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return std::move(b).build();
}

Graph read_edge_list_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open graph file " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g)
{
    out << g.vertex_count() << '\n';
    for (const auto& e : g.edges())
        out << e.u << ' ' << e.v << '\n';
}

} // namespace ramsey
