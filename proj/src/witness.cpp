#include "ramsey/witness.hpp"

#include "ramsey/errors.hpp"

#include <algorithm>

namespace ramsey {

ColoringCounts goodman_counts(const TwoColoring& c)
{
    const Graph& g = c.host();
    const Graph& red = c.subgraph(Color::red);
    const Graph& blue = c.subgraph(Color::blue);
    ColoringCounts out;
    out.t = triangle_count(g);

    auto mono = [](const Graph& h) {
        std::int64_t sum = 0;
        for (int u = 0; u < h.vertex_count(); ++u) {
            const auto ru = h.row(u);
            for_each_bit(ru, [&](int v) {
                if (v > u)
                    sum += static_cast<std::int64_t>(intersection_count(ru, h.row(v)));
            });
        }
        if (sum % 3 != 0)
            throw InternalError("monochromatic codegree sum not divisible by 3");
        return sum / 3;
    };
    out.m_r = mono(red);
    out.m_b = mono(blue);

    std::int64_t bichromatic = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto blue_nbrs = blue.row(v);
        for_each_bit(red.row(v), [&](int x) { bichromatic += static_cast<std::int64_t>(intersection_count(g.row(x), blue_nbrs)); });
    }
    if (bichromatic % 2 != 0)
        throw InternalError("bichromatic neighborhood edge sum is odd");
    out.m_rb = bichromatic / 2;
    out.m = out.m_r + out.m_b;
    if (out.m_r + out.m_b + out.m_rb != out.t)
        throw InternalError("Goodman identity violated: M_r + M_b + M_rb != T");
    return out;
}

namespace {

struct BestBook {
    std::int64_t size = -1;
    std::vector<int> spine;
};

// Scans k-cliques of h; stops at the first clique whose common neighborhood reaches
// `stop_at` (pass a negative value to scan everything and keep the maximum).
BestBook scan_books(const Graph& h, int k, std::int64_t stop_at)
{
    BestBook best;
    std::vector<Word> common(h.words_per_row());
    for_each_clique(h, k, [&](std::span<const int> q) {
        std::fill(common.begin(), common.end(), ~Word{0});
        for (int v : q) {
            const auto r = h.row(v);
            for (std::size_t i = 0; i < common.size(); ++i)
                common[i] &= r[i];
        }
        const auto size = static_cast<std::int64_t>(popcount(common));
        if (size > best.size) {
            best.size = size;
            best.spine.assign(q.begin(), q.end());
        }
        return !(stop_at >= 0 && size >= stop_at);
    });
    return best;
}

std::vector<int> common_members(const Graph& h, std::span<const int> spine)
{
    VertexSet s = VertexSet::of(static_cast<std::size_t>(h.vertex_count()), spine);
    return common_neighborhood(h, s).members();
}

void check_kn(int k, int n)
{
    if (k < 1 || n < 1)
        throw InputError("target parameters must satisfy k >= 1 and n >= 1");
}

} // namespace

std::optional<BookWitness> find_mono_book(const TwoColoring& c, int k, int n)
{
    check_kn(k, n);
    for (Color color : {Color::red, Color::blue}) {
        const Graph& h = c.subgraph(color);
        const auto best = scan_books(h, k, n);
        if (best.size >= n) {
            BookWitness w{color, best.spine, common_members(h, best.spine)};
            if (!verify_book(c, w, k, n))
                throw InternalError("book witness failed verification");
            return w;
        }
    }
    return std::nullopt;
}

std::int64_t max_book_size(const TwoColoring& c, Color color, int k)
{
    if (k < 1)
        throw InputError("k must be at least 1");
    return std::max<std::int64_t>(0, scan_books(c.subgraph(color), k, -1).size);
}

std::optional<BookWitness> find_mono_biclique(const TwoColoring& c, int k, int n)
{
    check_kn(k, n);
    for (Color color : {Color::red, Color::blue}) {
        const Graph& h = c.subgraph(color);
        // Only vertices of color degree >= n can be on the small side; try high degrees first.
        std::vector<int> pool;
        for (int v = 0; v < h.vertex_count(); ++v)
            if (h.degree(v) >= n)
                pool.push_back(v);
        std::stable_sort(pool.begin(), pool.end(), [&](int a, int b) { return h.degree(a) > h.degree(b); });
        if (static_cast<int>(pool.size()) < k)
            continue;

        const std::size_t wpr = h.words_per_row();
        std::vector<Word> buffers(static_cast<std::size_t>(k + 1) * wpr, ~Word{0});
        std::vector<int> chosen;
        bool found = false;
        auto recurse = [&](auto&& self, std::size_t start, int depth) -> void {
            const std::span<const Word> acc(buffers.data() + static_cast<std::size_t>(depth) * wpr, wpr);
            if (depth == k) {
                found = true;
                return;
            }
            for (std::size_t i = start; i < pool.size() && !found; ++i) {
                if (pool.size() - i < static_cast<std::size_t>(k - depth))
                    break;
                const int v = pool[i];
                const std::span<Word> next(buffers.data() + static_cast<std::size_t>(depth + 1) * wpr, wpr);
                const auto r = h.row(v);
                for (std::size_t j = 0; j < wpr; ++j)
                    next[j] = acc[j] & r[j];
                if (static_cast<int>(popcount(next)) < n)
                    continue;
                chosen.push_back(v);
                self(self, i + 1, depth + 1);
                if (found)
                    return;
                chosen.pop_back();
            }
        };
        recurse(recurse, 0, 0);
        if (found) {
            std::sort(chosen.begin(), chosen.end());
            BookWitness w{color, chosen, common_members(h, chosen)};
            if (!verify_biclique(c, w, k, n))
                throw InternalError("biclique witness failed verification");
            return w;
        }
    }
    return std::nullopt;
}

namespace {

bool verify_common(const TwoColoring& c, const BookWitness& w, int k, int n, bool spine_is_clique)
{
    const Graph& h = c.subgraph(w.color);
    if (static_cast<int>(w.spine.size()) != k || static_cast<int>(w.pages.size()) < n)
        return false;
    for (std::size_t i = 0; i < w.spine.size(); ++i) {
        for (std::size_t j = i + 1; j < w.spine.size(); ++j) {
            if (w.spine[i] == w.spine[j])
                return false;
            if (spine_is_clique && !h.has_edge(w.spine[i], w.spine[j]))
                return false;
        }
        for (int page : w.pages)
            if (!h.has_edge(w.spine[i], page))
                return false;
    }
    return true;
}

} // namespace

bool verify_book(const TwoColoring& c, const BookWitness& w, int k, int n)
{
    return verify_common(c, w, k, n, true);
}

bool verify_biclique(const TwoColoring& c, const BookWitness& w, int k, int n)
{
    return verify_common(c, w, k, n, false);
}

} // namespace ramsey
