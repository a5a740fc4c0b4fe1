#include "ramsey/arrowing.hpp"

#include "ramsey/errors.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>
#include <string>

namespace ramsey {

TargetSpec make_target(Shape shape, int k, int n)
{
    if (k < 1 || n < 1)
        throw InputError("target requires k >= 1 and n >= 1");
    return {shape, k, n};
}

std::string_view to_string(Shape s) noexcept
{
    return s == Shape::book ? "book" : "biclique";
}

std::string_view to_string(Outcome o) noexcept
{
    switch (o) {
    case Outcome::arrows:
        return "arrows";
    case Outcome::not_arrows:
        return "not_arrows";
    case Outcome::unknown:
        break;
    }
    return "unknown";
}

std::string_view to_string(Method m) noexcept
{
    switch (m) {
    case Method::exhaustive:
        return "exhaustive";
    case Method::star_degree:
        return "star-degree";
    case Method::certificate:
        return "certificate";
    case Method::local_search:
        return "local-search";
    case Method::none:
        break;
    }
    return "none";
}

std::optional<BookWitness> find_target(const TwoColoring& c, const TargetSpec& t)
{
    return t.shape == Shape::book ? find_mono_book(c, t.k, t.n) : find_mono_biclique(c, t.k, t.n);
}

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void check_target(const TargetSpec& t)
{
    if (t.k < 1 || t.n < 1)
        throw InputError("target requires k >= 1 and n >= 1");
}

std::uint64_t above(int x) noexcept
{
    return x >= 63 ? 0 : (~std::uint64_t{0} << (x + 1));
}

// Does one color class, given as 64-bit adjacency masks, contain a target structure
// that uses vertex `anchor`? Books need the spine to be a clique of that color.
bool target_through(const std::uint64_t* adj, std::uint64_t cand, std::uint64_t common, int remaining, const TargetSpec& t)
{
    if (std::popcount(common) < t.n)
        return false;
    if (remaining == 0)
        return true;
    while (cand) {
        const int x = std::countr_zero(cand);
        cand &= cand - 1;
        const std::uint64_t next_common = common & adj[x];
        if (std::popcount(next_common) < t.n)
            continue;
        const std::uint64_t next_cand = (t.shape == Shape::book ? (cand & adj[x]) : cand) & above(x);
        if (target_through(adj, next_cand, next_common, remaining - 1, t))
            return true;
    }
    return false;
}

bool target_at(const std::uint64_t* adj, int anchor, std::uint64_t universe, const TargetSpec& t)
{
    const std::uint64_t self = std::uint64_t{1} << anchor;
    const std::uint64_t cand = t.shape == Shape::book ? adj[anchor] : (universe & ~self);
    return target_through(adj, cand, adj[anchor], t.k - 1, t);
}

class ExactSearch {
public:
    ExactSearch(const Graph& g, const TargetSpec& t, const DeciderLimits& lim) : g_(g), t_(t), lim_(lim)
    {
        local_of_.assign(static_cast<std::size_t>(g.vertex_count()), -1);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) > 0) {
                local_of_[static_cast<std::size_t>(v)] = static_cast<int>(original_.size());
                original_.push_back(v);
            }
        if (original_.size() > 64)
            throw LimitsError("decide_exact supports at most 64 non-isolated vertices");
        universe_ = original_.size() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << original_.size()) - 1);

        const auto all = g.edges();
        std::vector<std::int64_t> codegree(all.size());
        for (std::size_t i = 0; i < all.size(); ++i)
            codegree[i] = static_cast<std::int64_t>(intersection_count(g.row(all[i].u), g.row(all[i].v)));
        order_.resize(all.size());
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return codegree[a] > codegree[b]; });
        for (auto i : order_)
            edges_.push_back({local_of_[static_cast<std::size_t>(all[i].u)], local_of_[static_cast<std::size_t>(all[i].v)]});
        color_.assign(edges_.size(), Color::red);
    }

    ArrowingVerdict run()
    {
        ArrowingVerdict v;
        const auto result = descend(0);
        v.nodes = nodes_;
        if (result == Result::budget) {
            v.outcome = Outcome::unknown;
        } else if (result == Result::all_cut) {
            v.outcome = Outcome::arrows;
            v.method = Method::exhaustive;
        } else {
            v.outcome = Outcome::not_arrows;
            v.method = Method::exhaustive;
            v.coloring = leaf_coloring();
        }
        return v;
    }

private:
    enum class Result { all_cut, avoided, budget };

    Result descend(std::size_t i)
    {
        if (i == edges_.size())
            return Result::avoided;
        // color-swap symmetry: the first edge is red
        const std::array<Color, 2> choices{Color::red, Color::blue};
        const std::size_t n_choices = i == 0 ? 1 : 2;
        const auto [u, v] = edges_[i];
        for (std::size_t c = 0; c < n_choices; ++c) {
            if (++nodes_ > lim_.max_search_nodes)
                return Result::budget;
            auto& adj = masks_[static_cast<std::size_t>(choices[c])];
            adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
            adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
            color_[i] = choices[c];
            const bool cut = target_at(adj.data(), u, universe_, t_) || target_at(adj.data(), v, universe_, t_);
            Result r = Result::all_cut;
            if (!cut)
                r = descend(i + 1);
            adj[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
            adj[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
            if (r != Result::all_cut)
                return r;
        }
        return Result::all_cut;
    }

    TwoColoring leaf_coloring() const
    {
        GraphBuilder red(g_.vertex_count());
        for (std::size_t i = 0; i < edges_.size(); ++i)
            if (color_[i] == Color::red)
                red.add_edge_unchecked(original_[static_cast<std::size_t>(edges_[i].u)], original_[static_cast<std::size_t>(edges_[i].v)]);
        const Graph red_graph = std::move(red).build();
        return TwoColoring::from_function(g_, [&](int a, int b) { return red_graph.has_edge(a, b) ? Color::red : Color::blue; });
    }

    const Graph& g_;
    TargetSpec t_;
    DeciderLimits lim_;
    std::vector<int> local_of_;
    std::vector<int> original_;
    std::uint64_t universe_ = 0;
    std::vector<std::size_t> order_;
    std::vector<Edge> edges_; // local indices, search order
    std::vector<Color> color_;
    std::array<std::array<std::uint64_t, 64>, 2> masks_{};
    std::int64_t nodes_ = 0;
};

} // namespace

ArrowingVerdict decide_exact(const Graph& g, const TargetSpec& t, const DeciderLimits& lim)
{
    check_target(t);
    if (g.edge_count() > lim.max_edges_exhaustive)
        throw LimitsError("decide_exact: " + std::to_string(g.edge_count()) + " edges exceeds budget "
            + std::to_string(lim.max_edges_exhaustive));
    const auto start = Clock::now();
    ArrowingVerdict v = ExactSearch(g, t, lim).run();
    if (v.outcome == Outcome::not_arrows && find_target(*v.coloring, t))
        throw InternalError("decide_exact produced a coloring that contains the target");
    v.millis = millis_since(start);
    return v;
}

namespace {

// Colors edges alternately along Euler circuits of the graph augmented by one virtual
// vertex joined to every odd-degree vertex. Each real vertex then has red and blue degrees
// within one of each other, except that the start of a circuit with an odd number of
// edges gets a surplus of two; `start_of` picks that vertex.
std::vector<Word> euler_alternating_red_bits(const Graph& g, const std::vector<int>& component_start)
{
    const int n = g.vertex_count();
    const auto m = static_cast<std::size_t>(g.edge_count());
    const int virtual_vertex = n;
    struct Arc {
        int to;
        std::uint32_t edge;
    };
    // CSR arcs; per vertex, real arcs in canonical edge order, then the virtual arc
    std::vector<std::size_t> offset(static_cast<std::size_t>(n) + 2, 0);
    int odd = 0;
    for (int v = 0; v < n; ++v) {
        const int d = g.degree(v);
        offset[static_cast<std::size_t>(v) + 1] = static_cast<std::size_t>(d + d % 2);
        odd += d % 2;
    }
    offset[static_cast<std::size_t>(n) + 1] = static_cast<std::size_t>(odd);
    for (std::size_t i = 1; i < offset.size(); ++i)
        offset[i] += offset[i - 1];
    std::vector<Arc> arc_pool(offset.back());
    std::vector<std::size_t> fill(offset.begin(), offset.end() - 1);
    std::size_t edge_total = 0;
    for (int u = 0; u < n; ++u)
        for_each_bit(g.row(u), [&](int v) {
            if (v <= u)
                return;
            arc_pool[fill[static_cast<std::size_t>(u)]++] = {v, static_cast<std::uint32_t>(edge_total)};
            arc_pool[fill[static_cast<std::size_t>(v)]++] = {u, static_cast<std::uint32_t>(edge_total)};
            ++edge_total;
        });
    for (int v = 0; v < n; ++v)
        if (g.degree(v) % 2 == 1) {
            arc_pool[fill[static_cast<std::size_t>(v)]++] = {virtual_vertex, static_cast<std::uint32_t>(edge_total)};
            arc_pool[fill[static_cast<std::size_t>(virtual_vertex)]++] = {v, static_cast<std::uint32_t>(edge_total)};
            ++edge_total;
        }
    struct Arcs {
        const Arc* first;
        std::size_t count;
        std::size_t size() const noexcept { return count; }
        const Arc& operator[](std::size_t i) const noexcept { return first[i]; }
    };
    auto arcs_of = [&](int v) {
        const auto sv = static_cast<std::size_t>(v);
        return Arcs{arc_pool.data() + offset[sv], offset[sv + 1] - offset[sv]};
    };
    std::vector<char> used(edge_total, 0);
    std::vector<std::size_t> next_arc(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Word> red(words_for(m), 0);

    auto circuit_from = [&](int start) {
        std::vector<std::pair<int, std::size_t>> stack{{start, edge_total}};
        stack.reserve(1024);
        std::size_t position = 0;
        while (!stack.empty()) {
            const int v = stack.back().first;
            auto& cursor = next_arc[static_cast<std::size_t>(v)];
            const auto out = arcs_of(v);
            while (cursor < out.size() && used[out[cursor].edge])
                ++cursor;
            if (cursor < out.size()) {
                const Arc a = out[cursor];
                used[a.edge] = 1;
                stack.push_back({a.to, a.edge});
            } else {
                const std::size_t e = stack.back().second;
                stack.pop_back();
                if (e == edge_total)
                    continue;
                if (e < m && position % 2 == 0)
                    red[e / word_bits] |= Word{1} << (e % word_bits);
                ++position;
            }
        }
    };

    if (edge_total > m)
        circuit_from(virtual_vertex);
    for (int s : component_start)
        circuit_from(s);
    return red;
}

} // namespace

namespace {

// Start vertices of the even-degree components, or nothing when the graph arrows K_{1,n}.
std::optional<std::vector<int>> star_euler_starts(const Graph& g, int n)
{
    if (n < 1)
        throw InputError("star target requires n >= 1");
    if (g.max_degree() >= 2 * n - 1)
        return std::nullopt;

    // Components; an even-degree component with an odd edge count forces a surplus of
    // two at one vertex, which is harmless unless every vertex has degree 2n-2.
    const int nv = g.vertex_count();
    std::vector<int> component(static_cast<std::size_t>(nv), -1);
    std::vector<int> starts;
    std::vector<int> queue;
    for (int root = 0; root < nv; ++root) {
        if (component[static_cast<std::size_t>(root)] >= 0 || g.degree(root) == 0)
            continue;
        const int id = root;
        queue.assign(1, root);
        component[static_cast<std::size_t>(root)] = id;
        bool has_odd = false;
        int min_vertex = root;
        std::int64_t degree_sum = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int x = queue[qi];
            const int d = g.degree(x);
            degree_sum += d;
            has_odd = has_odd || (d % 2 == 1);
            if (d < g.degree(min_vertex))
                min_vertex = x;
            for_each_bit(g.row(x), [&](int y) {
                if (component[static_cast<std::size_t>(y)] < 0) {
                    component[static_cast<std::size_t>(y)] = id;
                    queue.push_back(y);
                }
            });
        }
        if (has_odd)
            continue;
        const std::int64_t edges = degree_sum / 2;
        if (edges % 2 == 1 && g.degree(min_vertex) == 2 * n - 2)
            return std::nullopt;
        starts.push_back(min_vertex);
    }
    return starts;
}

} // namespace

bool star_arrows(const Graph& g, int n)
{
    return !star_euler_starts(g, n).has_value();
}

ArrowingVerdict decide_star_fast(const Graph& g, int n)
{
    const auto start = Clock::now();
    ArrowingVerdict v;
    v.method = Method::star_degree;
    const auto starts = star_euler_starts(g, n);
    if (!starts) {
        v.outcome = Outcome::arrows;
        v.millis = millis_since(start);
        return v;
    }

    TwoColoring coloring(g, euler_alternating_red_bits(g, *starts));
    for (Color c : {Color::red, Color::blue})
        if (coloring.subgraph(c).max_degree() >= n)
            throw InternalError("Euler-tour coloring left a color degree of at least n");
    v.outcome = Outcome::not_arrows;
    v.coloring = std::move(coloring);
    v.millis = millis_since(start);
    return v;
}

namespace {

// Penalty sum over monochromatic target structures of max(0, |common| - (n - 1)), kept
// per color as adjacency bit-sets that are updated in place by single-edge recolorings.
class AvoidanceState {
public:
    AvoidanceState(const Graph& g, const TargetSpec& t) : g_(g), t_(t), wpr_(g.words_per_row())
    {
        const auto n = static_cast<std::size_t>(g.vertex_count());
        for (auto& r : rows_)
            r.assign(n * wpr_, 0);
        scratch_.assign(static_cast<std::size_t>(t.k + 2) * 2 * wpr_, 0);
        edges_ = g.edges();
        color_.assign(edges_.size(), Color::red);
    }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    Color color(std::size_t e) const noexcept { return color_[e]; }

    void assign(std::size_t e, Color c) noexcept
    {
        const auto [u, v] = edges_[e];
        set_bit(other(color_[e]), u, v, false);
        set_bit(color_[e], u, v, false);
        set_bit(c, u, v, true);
        color_[e] = c;
    }

    std::int64_t total_penalty()
    {
        std::int64_t total = 0;
        for (Color c : {Color::red, Color::blue})
            for (int a = 0; a < g_.vertex_count(); ++a)
                total += penalty_at(c, a, -1, true);
        return total;
    }

    /// Penalty of structures that contain u or v, in either color.
    std::int64_t local_penalty(int u, int v)
    {
        std::int64_t total = 0;
        for (Color c : {Color::red, Color::blue})
            total += penalty_at(c, u, -1, false) + penalty_at(c, v, u, false);
        return total;
    }

    TwoColoring to_coloring() const
    {
        std::vector<Word> bits(words_for(edges_.size()), 0);
        for (std::size_t e = 0; e < edges_.size(); ++e)
            if (color_[e] == Color::red)
                bits[e / word_bits] |= Word{1} << (e % word_bits);
        return TwoColoring(g_, std::move(bits));
    }

private:
    std::span<const Word> row(Color c, int v) const noexcept
    {
        return {rows_[static_cast<std::size_t>(c)].data() + static_cast<std::size_t>(v) * wpr_, wpr_};
    }

    void set_bit(Color c, int u, int v, bool on) noexcept
    {
        auto& r = rows_[static_cast<std::size_t>(c)];
        auto flip = [&](int a, int b) {
            auto& w = r[static_cast<std::size_t>(a) * wpr_ + static_cast<std::size_t>(b) / word_bits];
            const Word bit = Word{1} << (static_cast<std::size_t>(b) % word_bits);
            w = on ? (w | bit) : (w & ~bit);
        };
        flip(u, v);
        flip(v, u);
    }

    // Structures of color c containing `anchor`, never containing `skip`; with
    // `only_above`, the other members all exceed anchor (so each structure is counted once).
    std::int64_t penalty_at(Color c, int anchor, int skip, bool only_above)
    {
        const auto n = static_cast<std::size_t>(g_.vertex_count());
        std::span<Word> cand(scratch_.data(), wpr_);
        std::span<Word> common(scratch_.data() + wpr_, wpr_);
        const auto ra = row(c, anchor);
        for (std::size_t i = 0; i < wpr_; ++i) {
            cand[i] = t_.shape == Shape::book ? ra[i] : ~Word{0};
            common[i] = ra[i];
        }
        if (n % word_bits != 0)
            cand[wpr_ - 1] &= (Word{1} << (n % word_bits)) - 1;
        auto clear = [&](int x) {
            if (x >= 0)
                cand[static_cast<std::size_t>(x) / word_bits] &= ~(Word{1} << (static_cast<std::size_t>(x) % word_bits));
        };
        clear(anchor);
        clear(skip);
        if (only_above)
            for (int x = 0; x < anchor; ++x)
                clear(x);
        return penalty_rec(c, 1, t_.k - 1);
    }

    std::int64_t penalty_rec(Color c, std::size_t level, int remaining)
    {
        const std::span<const Word> cand(scratch_.data() + (level - 1) * 2 * wpr_, wpr_);
        const std::span<const Word> common(scratch_.data() + (level - 1) * 2 * wpr_ + wpr_, wpr_);
        const auto size = static_cast<std::int64_t>(popcount(common));
        if (remaining == 0)
            return std::max<std::int64_t>(0, size - (t_.n - 1));
        if (size < t_.n)
            return 0;
        std::int64_t total = 0;
        std::span<Word> next_cand(scratch_.data() + level * 2 * wpr_, wpr_);
        std::span<Word> next_common(scratch_.data() + level * 2 * wpr_ + wpr_, wpr_);
        for (std::size_t wi = 0; wi < wpr_; ++wi) {
            Word w = cand[wi];
            while (w) {
                const int b = std::countr_zero(w);
                w &= w - 1;
                const int x = static_cast<int>(wi * word_bits + static_cast<std::size_t>(b));
                const auto rx = row(c, x);
                for (std::size_t i = 0; i < wpr_; ++i) {
                    next_common[i] = common[i] & rx[i];
                    const Word keep = i < wi ? 0 : (i == wi ? (b == 63 ? Word{0} : (~Word{0} << (b + 1))) : ~Word{0});
                    next_cand[i] = (t_.shape == Shape::book ? (cand[i] & rx[i]) : cand[i]) & keep;
                }
                total += penalty_rec(c, level + 1, remaining - 1);
            }
        }
        return total;
    }

    const Graph& g_;
    TargetSpec t_;
    std::size_t wpr_;
    std::array<std::vector<Word>, 2> rows_;
    std::vector<Word> scratch_;
    std::vector<Edge> edges_;
    std::vector<Color> color_;
};

} // namespace

std::optional<TwoColoring> search_avoiding_coloring(const Graph& g, const TargetSpec& t, const DeciderLimits& lim, Seed seed)
{
    check_target(t);
    if (g.edge_count() == 0) {
        TwoColoring empty(g, {});
        if (find_target(empty, t))
            return std::nullopt;
        return empty;
    }
    AvoidanceState state(g, t);
    const auto m = state.edges().size();
    const std::size_t sample_size = std::min<std::size_t>(m, 128);
    const std::size_t tenure = std::min<std::size_t>(10, 1 + m / 8);

    for (int restart = 0; restart < lim.local_search_restarts; ++restart) {
        SeededRng rng(Seed{seed.value, mix(seed.stream_index, static_cast<std::uint64_t>(restart))});
        for (std::size_t e = 0; e < m; ++e)
            state.assign(e, (rng.next() >> 63) ? Color::red : Color::blue);
        std::int64_t penalty = state.total_penalty();
        std::vector<std::int64_t> tabu_until(m, -1);
        std::vector<std::size_t> candidates(m);
        std::iota(candidates.begin(), candidates.end(), std::size_t{0});

        for (int step = 0; step < lim.local_search_steps && penalty > 0; ++step) {
            if (sample_size < m) {
                // partial Fisher-Yates, then ascending so ties resolve to the lowest index
                for (std::size_t i = 0; i < sample_size; ++i)
                    std::swap(candidates[i], candidates[i + rng.below(m - i)]);
                std::sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(sample_size));
            }
            std::int64_t best_delta = 0;
            std::size_t best = m;
            for (std::size_t ci = 0; ci < sample_size; ++ci) {
                const auto e = candidates[ci];
                const auto [u, v] = state.edges()[e];
                const auto before = state.local_penalty(u, v);
                const Color old = state.color(e);
                state.assign(e, other(old));
                const auto delta = state.local_penalty(u, v) - before;
                state.assign(e, old);
                const bool tabu = tabu_until[e] > step && penalty + delta > 0;
                if (tabu)
                    continue;
                if (best == m || delta < best_delta) {
                    best = e;
                    best_delta = delta;
                }
            }
            if (best == m)
                best = candidates[rng.below(sample_size)];
            const auto [u, v] = state.edges()[best];
            const auto before = state.local_penalty(u, v);
            state.assign(best, other(state.color(best)));
            penalty += state.local_penalty(u, v) - before;
            tabu_until[best] = step + static_cast<std::int64_t>(tenure) + static_cast<std::int64_t>(rng.below(2));
        }
        if (penalty == 0) {
            TwoColoring coloring = state.to_coloring();
            if (find_target(coloring, t))
                throw InternalError("local search reported a zero penalty for a coloring containing the target");
            return coloring;
        }
    }
    return std::nullopt;
}

ArrowingVerdict decide_sandwich(const Graph& g, const TargetSpec& t, const DeciderLimits& lim, Seed seed)
{
    check_target(t);
    const auto start = Clock::now();
    std::int64_t nodes = 0;
    auto finish = [&](ArrowingVerdict v) {
        v.nodes += nodes;
        v.millis = millis_since(start);
        return v;
    };

    if (t.shape == Shape::book && t.k == 1)
        return finish(decide_star_fast(g, t.n));

    if (g.edge_count() <= lim.max_edges_exhaustive) {
        try {
            auto v = decide_exact(g, t, lim);
            if (v.outcome != Outcome::unknown)
                return finish(std::move(v));
            nodes += v.nodes;
        } catch (const LimitsError&) {
        }
    }

    if (t.shape == Shape::book && t.k == 2) {
        try {
            auto cert = counting_certificate_b2(g, t.n, lim.maxcut_vertex_cap);
            if (cert.fires) {
                ArrowingVerdict v;
                v.outcome = Outcome::arrows;
                v.method = Method::certificate;
                v.certificate = cert;
                return finish(std::move(v));
            }
        } catch (const LimitsError&) {
        }
    }

    if (auto coloring = search_avoiding_coloring(g, t, lim, seed)) {
        ArrowingVerdict v;
        v.outcome = Outcome::not_arrows;
        v.method = Method::local_search;
        v.coloring = std::move(coloring);
        return finish(std::move(v));
    }
    return finish(ArrowingVerdict{});
}

} // namespace ramsey
