#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph.hpp"

#include <numeric>
#include <sstream>

using namespace ramsey;

namespace {

Graph path3() { return Graph::from_edge_list(3, std::vector<Edge>{{0, 1}, {1, 2}}); }

} // namespace

TEST_CASE("vertex set basics")
{
    auto s = VertexSet::of(70, {1, 3, 65});
    CHECK(s.size() == 3);
    CHECK(s.contains(65));
    CHECK_FALSE(s.contains(64));
    CHECK(s.members() == std::vector<int>{1, 3, 65});
    auto t = VertexSet::range(70, 2, 66);
    CHECK((s & t).members() == std::vector<int>{3, 65});
    CHECK((s - t).members() == std::vector<int>{1});
    CHECK((s | t).size() == 65);
    CHECK(VertexSet::of(70, {3}).subset_of(s));
    CHECK_THROWS_AS(s.insert(70), InputError);
    s.erase(65);
    CHECK(s.size() == 2);
    CHECK(VertexSet(5).empty());
}

TEST_CASE("from_edge_list examples")
{
    auto tri = Graph::from_edge_list(3, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}});
    CHECK(tri == Graph::complete(3));
    CHECK(tri.edge_count() == 3);

    auto empty = Graph::from_edge_list(4, {});
    CHECK(empty.edge_count() == 0);
    CHECK(empty.vertex_count() == 4);

    auto dup = Graph::from_edge_list(3, std::vector<Edge>{{0, 1}, {1, 0}});
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS_AS(Graph::from_edge_list(3, std::vector<Edge>{{0, 3}}), InputError);
    CHECK_THROWS_AS(Graph::from_edge_list(3, std::vector<Edge>{{-1, 2}}), InputError);
    CHECK_THROWS_AS(Graph::from_edge_list(3, std::vector<Edge>{{1, 1}}), InputError);
}

TEST_CASE("common neighborhood examples")
{
    CHECK(common_neighborhood(Graph::complete(5), VertexSet::of(5, {0, 1})).members() == std::vector<int>{2, 3, 4});
    CHECK(common_neighborhood(path3(), VertexSet::of(3, {0, 2})).members() == std::vector<int>{1});
    CHECK(common_neighborhood(Graph::empty(4), VertexSet::of(4, {0})).empty());
    CHECK_THROWS_AS(common_neighborhood(Graph::complete(3), VertexSet(3)), InputError);
}

TEST_CASE("clique enumeration examples")
{
    CHECK(enumerate_cliques(Graph::complete(4), 3).size() == 4);
    CHECK(enumerate_cliques(Graph::cycle(5), 3).empty());
    const auto pairs = enumerate_cliques(Graph::complete(5), 2);
    CHECK(pairs.size() == 10);
    CHECK(std::is_sorted(pairs.begin(), pairs.end()));
    CHECK(enumerate_cliques(Graph::empty(6), 1).size() == 6);
}

TEST_CASE("triangle count examples")
{
    CHECK(triangle_count(Graph::complete(5)) == 10);
    CHECK(triangle_count(Graph::complete(16)) == 560);
    CHECK(enumerate_cliques(Graph::complete(16), 3).size() == 560);
    CHECK(triangle_count(Graph::cycle(6)) == 0);
}

TEST_CASE("max-cut examples")
{
    CHECK(maxcut_exact(Graph::complete(4)) == 4);
    CHECK(maxcut_exact(Graph::complete(15)) == 56);
    CHECK(maxcut_exact(Graph::cycle(5)) == 4);
    CHECK(maxcut_exact(Graph::complete(7)) == 12);
    CHECK(maxcut_exact(Graph::empty(0)) == 0);
    CHECK_THROWS_AS(maxcut_exact(Graph::complete(29)), LimitsError);
    CHECK_THROWS_AS(maxcut_exact(Graph::complete(10), 9), LimitsError);
}

TEST_CASE("max-cut on complete graphs matches floor(m^2/4)")
{
    for (int m = 2; m <= 16; ++m) {
        CAPTURE(m);
        CHECK(maxcut_exact(Graph::complete(m)) == m * m / 4);
        if (m <= 12)
            CHECK(oracle::maxcut(Graph::complete(m)) == m * m / 4);
    }
}

TEST_CASE("induced subgraph examples")
{
    auto k3 = induced_subgraph(Graph::complete(5), VertexSet::of(5, {0, 1, 2}));
    CHECK(k3.graph == Graph::complete(3));
    CHECK(k3.original_vertex == std::vector<int>{0, 1, 2});
    CHECK(induced_subgraph(Graph::complete(5), VertexSet(5)).graph.vertex_count() == 0);
    auto edge = induced_subgraph(Graph::cycle(5), VertexSet::of(5, {2, 3}));
    CHECK(edge.graph.edge_count() == 1);
    CHECK(edge.original_vertex == std::vector<int>{2, 3});
}

TEST_CASE("property: triangle count equals 3-clique count on small graphs")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = static_cast<int>(rng() % 10);
        const auto g = oracle::random_graph(rng, n, 0.2 + 0.6 * (trial % 5) / 4.0);
        CHECK(triangle_count(g) == static_cast<std::int64_t>(enumerate_cliques(g, 3).size()));
        CHECK(triangle_count(g) == oracle::triangles(g));
    }
}

TEST_CASE("property: max-cut equals brute force on graphs up to 10 vertices")
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = static_cast<int>(rng() % 11);
        const auto g = oracle::random_graph(rng, n, (trial % 9 + 1) / 10.0);
        CAPTURE(trial);
        CHECK(maxcut_exact(g) == oracle::maxcut(g));
    }
}

TEST_CASE("property: common neighborhood of an edge counts its triangles")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = oracle::random_graph(rng, 12, 0.5);
        const auto a = oracle::adjacency(g);
        for (const auto& e : g.edges()) {
            int through = 0;
            for (int w = 0; w < 12; ++w)
                through += a[e.u][w] && a[e.v][w];
            CHECK(common_neighborhood(g, VertexSet::of(12, {e.u, e.v})).size() == static_cast<std::size_t>(through));
        }
    }
}

TEST_CASE("property: relabeling preserves counts")
{
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 14);
        const auto g = oracle::random_graph(rng, n, 0.5);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto h = g.relabeled(perm);
        CHECK(h.edge_count() == g.edge_count());
        CHECK(triangle_count(h) == triangle_count(g));
        CHECK(maxcut_exact(h) == maxcut_exact(g));
    }
}

TEST_CASE("edge count is half the degree sum and edge_index follows canonical order")
{
    std::mt19937_64 rng(15);
    const auto g = oracle::random_graph(rng, 130, 0.3);
    std::int64_t deg = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        deg += g.degree(v);
    CHECK(deg == 2 * g.edge_count());
    const auto edges = g.edges();
    CHECK(std::is_sorted(edges.begin(), edges.end()));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        CHECK(g.edge_index(edges[i].u, edges[i].v) == static_cast<std::int64_t>(i));
        CHECK(g.edge_index(edges[i].v, edges[i].u) == static_cast<std::int64_t>(i));
    }
    CHECK(g.edge_index(0, 0) == -1);
}

TEST_CASE("edge list round trip and parse errors")
{
    std::mt19937_64 rng(16);
    const auto g = oracle::random_graph(rng, 20, 0.4);
    std::stringstream buf;
    write_edge_list(buf, g);
    CHECK(read_edge_list(buf) == g);

    std::istringstream commented("# header\n4\n# edge\n0 1\n\n2 3\n");
    CHECK(read_edge_list(commented).edge_count() == 2);

    for (const char* bad : {"", "x\n", "3\n0\n", "3\n0 3\n", "3\n1 1\n", "3\n0 1 2\n", "-2\n"}) {
        std::istringstream in(bad);
        CAPTURE(bad);
        CHECK_THROWS_AS(read_edge_list(in), ParseError);
    }
    CHECK_THROWS_AS(read_edge_list_file("/nonexistent/graph.txt"), IoError);
}
