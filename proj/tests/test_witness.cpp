#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/sampler.hpp"
#include "ramsey/witness.hpp"

#include <sstream>

using namespace ramsey;

namespace {

// K_5 split into the red cycle 0-1-2-3-4 and the blue pentagram.
TwoColoring pentagon_coloring()
{
    return TwoColoring::from_function(Graph::complete(5), [](int u, int v) {
        const int d = v - u;
        return d == 1 || d == 4 ? Color::red : Color::blue;
    });
}

} // namespace

TEST_CASE("color subgraph examples")
{
    const auto red_k4 = TwoColoring::monochromatic(Graph::complete(4), Color::red);
    CHECK(color_subgraph(red_k4, Color::red) == Graph::complete(4));
    CHECK(color_subgraph(red_k4, Color::blue) == Graph::empty(4));

    const auto alt = TwoColoring::from_function(Graph::cycle(4), [](int u, int v) {
        return (u == 0 && v == 1) || (u == 2 && v == 3) ? Color::red : Color::blue;
    });
    const auto red = color_subgraph(alt, Color::red);
    CHECK(red.edge_count() == 2);
    CHECK(red.max_degree() == 1);

    const auto none = TwoColoring::monochromatic(Graph::empty(3), Color::blue);
    CHECK(color_subgraph(none, Color::red).edge_count() == 0);
    CHECK(color_subgraph(none, Color::blue).edge_count() == 0);
}

TEST_CASE("goodman counts examples")
{
    const auto k4 = goodman_counts(TwoColoring::monochromatic(Graph::complete(4), Color::red));
    CHECK(k4.t == 4);
    CHECK(k4.m_r == 4);
    CHECK(k4.m_b == 0);
    CHECK(k4.m_rb == 0);

    const auto rrb = goodman_counts(TwoColoring::from_function(Graph::complete(3),
        [](int u, int v) { return u == 1 && v == 2 ? Color::blue : Color::red; }));
    CHECK(rrb.t == 1);
    CHECK(rrb.m == 0);
    CHECK(rrb.m_rb == 1);
}

TEST_CASE("property: goodman counts match per-triangle classification")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = sample_gnp(25, 0.5, derive_seed(21, static_cast<std::uint64_t>(trial)));
        const auto c = oracle::random_coloring(rng, g);
        const auto counts = goodman_counts(c);
        const auto brute = oracle::classify_triangles(c);
        CHECK(counts.t == brute.t);
        CHECK(counts.m_r == brute.red);
        CHECK(counts.m_b == brute.blue);
        CHECK(counts.m_rb == brute.mixed);
        CHECK(counts.m_r + counts.m_b + counts.m_rb == counts.t);
        CHECK(counts.m == counts.t - counts.m_rb);

        const auto swapped = goodman_counts(c.swapped());
        CHECK(swapped.m_r == counts.m_b);
        CHECK(swapped.m_b == counts.m_r);
        CHECK(swapped.m_rb == counts.m_rb);
        CHECK(swapped.t == counts.t);
    }
}

TEST_CASE("find_mono_book examples")
{
    const auto red_k6 = TwoColoring::monochromatic(Graph::complete(6), Color::red);
    const auto w = find_mono_book(red_k6, 2, 4);
    REQUIRE(w.has_value());
    CHECK(w->color == Color::red);
    CHECK(w->spine.size() == 2);
    CHECK(w->pages.size() == 4);
    CHECK(verify_book(red_k6, *w, 2, 4));
    CHECK_FALSE(find_mono_book(red_k6, 2, 5).has_value());
    CHECK_FALSE(find_mono_book(pentagon_coloring(), 2, 1).has_value());
    CHECK_THROWS_AS(find_mono_book(red_k6, 0, 1), InputError);
    CHECK_THROWS_AS(find_mono_book(red_k6, 1, 0), InputError);
}

TEST_CASE("find_mono_biclique examples")
{
    const auto red_k5 = TwoColoring::monochromatic(Graph::complete(5), Color::red);
    const auto w = find_mono_biclique(red_k5, 2, 3);
    REQUIRE(w.has_value());
    CHECK(verify_biclique(red_k5, *w, 2, 3));

    const auto matching = TwoColoring::monochromatic(Graph::from_edge_list(6, std::vector<Edge>{{0, 1}, {2, 3}, {4, 5}}), Color::red);
    CHECK_FALSE(find_mono_biclique(matching, 1, 2).has_value());

    GraphBuilder b(6);
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v)
            b.add_edge(u, v);
    const auto k33 = TwoColoring::monochromatic(std::move(b).build(), Color::red);
    const auto side = find_mono_biclique(k33, 3, 3);
    REQUIRE(side.has_value());
    CHECK(verify_biclique(k33, *side, 3, 3));
    CHECK_FALSE(find_mono_book(k33, 3, 1).has_value());
}

TEST_CASE("max_book_size examples")
{
    const auto red_k6 = TwoColoring::monochromatic(Graph::complete(6), Color::red);
    CHECK(max_book_size(red_k6, Color::red, 2) == 4);
    CHECK(max_book_size(red_k6, Color::blue, 2) == 0);
    CHECK(max_book_size(pentagon_coloring(), Color::red, 2) == 0);
}

TEST_CASE("property: book presence agrees with max_book_size and brute force")
{
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 8);
        const auto g = oracle::random_graph(rng, n, 0.7);
        const auto c = oracle::random_coloring(rng, g);
        const auto a = oracle::colored(c);
        for (int k = 1; k <= 3; ++k)
            for (int pages = 1; pages <= 4; ++pages) {
                const bool present = find_mono_book(c, k, pages).has_value();
                const bool by_size = std::max(max_book_size(c, Color::red, k), max_book_size(c, Color::blue, k)) >= pages;
                CHECK(present == by_size);
                CHECK(present == oracle::has_mono_target(a, k, pages, false));
                CHECK(find_mono_biclique(c, k, pages).has_value() == oracle::has_mono_target(a, k, pages, true));
                if (present && pages > 1)
                    CHECK(find_mono_book(c, k, pages - 1).has_value());
            }
    }
}

TEST_CASE("property: stars reduce to monochromatic degree")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const auto c = oracle::random_coloring(rng, oracle::random_graph(rng, n, 0.6));
        for (int pages = 1; pages <= 5; ++pages) {
            bool expect = false;
            for (int v = 0; v < n; ++v)
                expect = expect || c.subgraph(Color::red).degree(v) >= pages || c.subgraph(Color::blue).degree(v) >= pages;
            CHECK(find_mono_book(c, 1, pages).has_value() == expect);
        }
    }
}

TEST_CASE("coloring file round trip and parse errors")
{
    const auto c = pentagon_coloring();
    std::stringstream buf;
    write_coloring(buf, c);
    CHECK(read_coloring(buf) == c);

    for (const char* bad : {"3\n0 1\n", "3\n0 1 g\n", "3\n0 1 r\n1 0 b\n", "3\n0 5 r\n", "z\n"}) {
        std::istringstream in(bad);
        CAPTURE(bad);
        CHECK_THROWS_AS(read_coloring(in), ParseError);
    }
    CHECK_THROWS_AS(c.color(0, 0), InputError);
}
