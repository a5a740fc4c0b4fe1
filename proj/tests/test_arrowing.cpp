#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "ramsey/arrowing.hpp"
#include "ramsey/errors.hpp"

using namespace ramsey;

namespace {

const TargetSpec triangle = make_target(Shape::book, 2, 1);

Graph star(int leaves)
{
    GraphBuilder b(leaves + 1);
    for (int v = 1; v <= leaves; ++v)
        b.add_edge(0, v);
    return std::move(b).build();
}

void check_avoids(const ArrowingVerdict& v, const TargetSpec& t)
{
    REQUIRE(v.coloring.has_value());
    CHECK_FALSE(find_target(*v.coloring, t).has_value());
}

} // namespace

TEST_CASE("targets validate their parameters")
{
    CHECK_THROWS_AS(make_target(Shape::book, 0, 1), InputError);
    CHECK_THROWS_AS(make_target(Shape::biclique, 1, 0), InputError);
    CHECK(to_string(Outcome::not_arrows) == "not_arrows");
    CHECK(to_string(Method::star_degree) == "star-degree");
}

TEST_CASE("decide_exact examples")
{
    const auto k6 = decide_exact(Graph::complete(6), triangle);
    CHECK(k6.outcome == Outcome::arrows);
    CHECK(k6.method == Method::exhaustive);
    CHECK(k6.nodes > 0);

    const auto k5 = decide_exact(Graph::complete(5), triangle);
    CHECK(k5.outcome == Outcome::not_arrows);
    check_avoids(k5, triangle);
    // The only triangle-free 2-colorings of K_5 are two complementary 5-cycles.
    CHECK(k5.coloring->subgraph(Color::red).edge_count() == 5);
    CHECK(k5.coloring->subgraph(Color::red).max_degree() == 2);

    CHECK(decide_exact(Graph::complete(2), make_target(Shape::book, 1, 1)).outcome == Outcome::arrows);
}

TEST_CASE("decide_exact limits")
{
    CHECK_THROWS_AS(decide_exact(Graph::complete(8), triangle), LimitsError);
    DeciderLimits tiny;
    tiny.max_search_nodes = 3;
    CHECK(decide_exact(Graph::complete(6), triangle, tiny).outcome == Outcome::unknown);
    DeciderLimits wide;
    wide.max_edges_exhaustive = 28;
    CHECK(decide_exact(Graph::complete(8), make_target(Shape::book, 1, 4), wide).outcome == Outcome::arrows);
    CHECK(decide_exact(Graph::empty(3), triangle).outcome == Outcome::not_arrows);
}

TEST_CASE("property: decide_exact agrees with full enumeration")
{
    std::mt19937_64 rng(31);
    int arrows = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 5);
        const int max_m = std::min(12, n * (n - 1) / 2);
        const auto g = oracle::random_graph_with_edges(rng, n, static_cast<int>(rng() % (max_m + 1)));
        const bool biclique = trial % 3 == 2;
        const int k = 1 + static_cast<int>(rng() % 2);
        const int pages = 1 + static_cast<int>(rng() % 3);
        const auto t = make_target(biclique ? Shape::biclique : Shape::book, k, pages);
        const bool expect = oracle::arrows(g, k, pages, biclique);
        const auto v = decide_exact(g, t);
        CAPTURE(trial);
        CHECK(v.outcome == (expect ? Outcome::arrows : Outcome::not_arrows));
        if (v.outcome == Outcome::not_arrows)
            check_avoids(v, t);
        arrows += expect;
    }
    CHECK(arrows > 10);
    CHECK(arrows < 190);
}

TEST_CASE("star fast path examples")
{
    const auto s3 = decide_star_fast(star(3), 2);
    CHECK(s3.outcome == Outcome::arrows);
    CHECK(s3.method == Method::star_degree);
    CHECK(oracle::arrows(star(3), 1, 2, false));

    const auto c4 = decide_star_fast(Graph::cycle(4), 2);
    CHECK(c4.outcome == Outcome::not_arrows);
    check_avoids(c4, make_target(Shape::book, 1, 2));
    CHECK(c4.coloring->subgraph(Color::red).max_degree() == 1);

    CHECK(decide_star_fast(Graph::complete(4), 2).outcome == Outcome::arrows);
    CHECK(oracle::arrows(Graph::complete(4), 1, 2, false));

    // An odd cycle cannot alternate: some vertex sees two edges of one color.
    CHECK(decide_star_fast(Graph::cycle(3), 2).outcome == Outcome::arrows);
    CHECK(decide_star_fast(Graph::cycle(5), 2).outcome == Outcome::arrows);
    CHECK(decide_star_fast(Graph::cycle(6), 2).outcome == Outcome::not_arrows);
    CHECK(decide_star_fast(Graph::complete(5), 3).outcome == Outcome::not_arrows);
    CHECK(decide_star_fast(Graph::complete(6), 3).outcome == Outcome::arrows);
}

TEST_CASE("property: star fast path agrees with decide_exact on up to 8 vertices")
{
    std::mt19937_64 rng(32);
    DeciderLimits lim;
    lim.max_edges_exhaustive = 28;
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const auto g = oracle::random_graph(rng, n, (1 + trial % 9) / 10.0);
        for (int pages = 1; pages <= 3; ++pages) {
            const auto fast = decide_star_fast(g, pages);
            const auto exact = decide_exact(g, make_target(Shape::book, 1, pages), lim);
            CAPTURE(trial);
            CAPTURE(pages);
            REQUIRE(exact.outcome != Outcome::unknown);
            CHECK(fast.outcome == exact.outcome);
            CHECK(star_arrows(g, pages) == (fast.outcome == Outcome::arrows));
            if (fast.outcome == Outcome::not_arrows)
                check_avoids(fast, make_target(Shape::book, 1, pages));
        }
    }
}

TEST_CASE("star fast path at scale")
{
    const auto g = sample_gnp(1600, 0.4, Seed{7, 0});
    const auto v = decide_star_fast(g, 400);
    CHECK(v.outcome == Outcome::not_arrows);
    check_avoids(v, make_target(Shape::book, 1, 400));
    CHECK(decide_star_fast(sample_gnp(1600, 0.6, Seed{7, 0}), 400).outcome == Outcome::arrows);
}

TEST_CASE("search_avoiding_coloring examples")
{
    int found = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        const auto c = search_avoiding_coloring(Graph::complete(5), triangle, {}, Seed{s, 0});
        if (c) {
            ++found;
            CHECK_FALSE(find_target(*c, triangle).has_value());
        }
    }
    CHECK(found >= 99);
    CHECK_FALSE(search_avoiding_coloring(Graph::complete(6), triangle, {}, Seed{1, 0}).has_value());
    const auto empty = search_avoiding_coloring(Graph::empty(5), triangle, {}, Seed{1, 0});
    REQUIRE(empty.has_value());
    CHECK(empty->host().edge_count() == 0);

    const auto bic = make_target(Shape::biclique, 2, 2);
    const auto c = search_avoiding_coloring(Graph::complete(6), bic, {}, Seed{3, 0});
    if (c)
        CHECK_FALSE(find_target(*c, bic).has_value());
    CHECK(search_avoiding_coloring(Graph::complete(5), triangle, {}, Seed{9, 0}) == search_avoiding_coloring(Graph::complete(5), triangle, {}, Seed{9, 0}));
}

TEST_CASE("decide_sandwich examples")
{
    const auto k16 = decide_sandwich(Graph::complete(16), make_target(Shape::book, 2, 3), {}, Seed{1, 0});
    CHECK(k16.outcome == Outcome::arrows);
    CHECK(k16.method == Method::certificate);
    REQUIRE(k16.certificate.has_value());
    CHECK(k16.certificate->fires);

    int star_checked = 0;
    for (std::uint64_t i = 0; i < 20; ++i) {
        const auto g = sample_gnp(40, 0.2, derive_seed(77, i));
        if (g.max_degree() >= 39)
            continue;
        const auto v = decide_sandwich(g, make_target(Shape::book, 1, 20), {}, Seed{1, 0});
        CHECK(v.outcome == Outcome::not_arrows);
        CHECK(v.method == Method::star_degree);
        check_avoids(v, make_target(Shape::book, 1, 20));
        ++star_checked;
    }
    CHECK(star_checked > 0);

    const auto k5 = decide_sandwich(Graph::complete(5), triangle, {}, Seed{1, 0});
    CHECK(k5.outcome == Outcome::not_arrows);
    CHECK(k5.method == Method::exhaustive);
    check_avoids(k5, triangle);
}

TEST_CASE("decide_sandwich falls through to local search and unknown")
{
    DeciderLimits lim;
    lim.max_edges_exhaustive = 5;
    const auto k5 = decide_sandwich(Graph::complete(5), triangle, lim, Seed{4, 0});
    CHECK(k5.outcome == Outcome::not_arrows);
    CHECK(k5.method == Method::local_search);
    check_avoids(k5, triangle);

    CHECK(decide_sandwich(Graph::complete(6), triangle, lim, Seed{4, 0}).method == Method::certificate);
    // No certificate covers bicliques; the search fails and nothing is claimed.
    const auto k6 = decide_sandwich(Graph::complete(6), make_target(Shape::biclique, 2, 1), lim, Seed{4, 0});
    CHECK(k6.outcome == Outcome::unknown);
    CHECK_FALSE(k6.coloring.has_value());
}

TEST_CASE("property: sandwich verdicts only move from unknown to decided as budgets grow")
{
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 4);
        const auto g = oracle::random_graph(rng, n, 0.7);
        const auto t = make_target(trial % 2 ? Shape::book : Shape::biclique, 2, 1 + static_cast<int>(rng() % 2));
        DeciderLimits small;
        small.max_edges_exhaustive = 4;
        small.local_search_restarts = 1;
        small.local_search_steps = 20;
        DeciderLimits large;
        large.max_edges_exhaustive = 28;
        const auto a = decide_sandwich(g, t, small, Seed{5, 0});
        const auto b = decide_sandwich(g, t, large, Seed{5, 0});
        CAPTURE(trial);
        REQUIRE(b.outcome != Outcome::unknown);
        if (a.outcome != Outcome::unknown)
            CHECK(a.outcome == b.outcome);
        if (a.outcome == Outcome::not_arrows)
            check_avoids(a, t);
    }
}

TEST_CASE("property: adding edges never turns arrows into not-arrows")
{
    for (std::uint64_t i = 0; i < 50; ++i) {
        const auto seed = derive_seed(34, i);
        const auto lo = sample_gnp(7, 0.45, seed);
        const auto hi = sample_gnp(7, 0.7, seed);
        DeciderLimits lim;
        lim.max_edges_exhaustive = 21;
        const auto a = decide_exact(lo, triangle, lim);
        const auto b = decide_exact(hi, triangle, lim);
        if (a.outcome == Outcome::arrows)
            CHECK(b.outcome == Outcome::arrows);
    }
}
