#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "mpg/canonical.hpp"
#include "mpg/graph.hpp"
#include "mpg/named_graphs.hpp"
#include "mpg/triangulation.hpp"

using namespace mpg;

TEST_CASE("build_graph basics") {
    Graph k3 = build_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(k3.edge_count() == 3);
    CHECK(k3.degree(0) == 2);

    Graph k4 = complete_graph(4);
    CHECK(k4.edge_count() == 6);

    // duplicate edges collapse
    Graph dup = build_graph(3, {{0, 1}, {0, 1}});
    CHECK(dup.edge_count() == 1);
    CHECK(dup.degree(2) == 0);

    CHECK_THROWS(build_graph(3, {{0, 3}}));
    CHECK_THROWS(build_graph(3, {{1, 1}}));
}

TEST_CASE("delete_vertex") {
    CHECK(delete_vertex(complete_graph(4), 2).same_adjacency(complete_graph(3)));
    CHECK(delete_vertex(complete_graph(3), 0).same_adjacency(complete_graph(2)));
    // bipyramid minus an apex: remaining apex joined to the equator triangle
    Graph g = delete_vertex(bipyramid5(), 0);
    CHECK(g.same_adjacency(complete_graph(4)));
    CHECK_THROWS(delete_vertex(complete_graph(3), 5));
    // provenance keeps original ids
    CHECK(delete_vertex(complete_graph(4), 1).labels(2) == std::vector<int>{3});
}

TEST_CASE("contract_pair") {
    // path a-b-c contracted at the ends collapses to K2
    Graph path = build_graph(3, {{0, 1}, {1, 2}});
    auto r = contract_pair(path, 0, 2);
    REQUIRE(!is_marker(r));
    CHECK(as_graph(r).same_adjacency(complete_graph(2)));
    CHECK(as_graph(r).labels(0) == std::vector<int>{0, 2});

    CHECK(is_marker(contract_pair(complete_graph(3), 0, 1)));

    // (B5 - e1) with apexes contracted is K3
    auto r2 = contract_pair(delete_vertex(bipyramid5(), 2), 0, 1);
    REQUIRE(!is_marker(r2));
    CHECK(as_graph(r2).same_adjacency(complete_graph(3)));

    CHECK_THROWS(contract_pair(path, 1, 1));
}

TEST_CASE("contract_edge") {
    CHECK(contract_edge(complete_graph(2), 0, 1).order() == 1);
    CHECK(contract_edge(complete_graph(3), 0, 1).same_adjacency(complete_graph(2)));
    Graph c4 = cycle_graph(4);
    CHECK(contract_edge(c4, 0, 1).same_adjacency(complete_graph(3)));
    CHECK_THROWS(contract_edge(c4, 0, 2));
}

TEST_CASE("contract_edge equals delete-edge-then-contract-pair") {
    for (const Graph& g : {bipyramid5(), octahedron(), icosahedron()}) {
        for (int u = 0; u < g.order(); ++u)
            for (int w : g.neighbors(u)) {
                if (w <= u) continue;
                Graph cut = g;
                cut.clear_edge(u, w);
                auto via_pair = contract_pair(cut, u, w);
                REQUIRE(!is_marker(via_pair));
                CHECK(contract_edge(g, u, w).same_adjacency(as_graph(via_pair)));
            }
    }
}

TEST_CASE("add_edge idempotent") {
    Graph k4e = build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(add_edge_copy(k4e, 2, 3).same_adjacency(complete_graph(4)));
    CHECK(add_edge_copy(k4e, 0, 1).same_adjacency(k4e));
    CHECK(add_edge_copy(cycle_graph(4), 0, 2).edge_count() == 5);
    CHECK_THROWS(add_edge_copy(k4e, 1, 1));
}

namespace {

bool clique_by_subsets(const Graph& g, int k) {
    int n = g.order();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (std::popcount(mask) != k) continue;
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int w = u + 1; w < n && ok; ++w)
                if (((mask >> u) & 1u) && ((mask >> w) & 1u) && !g.has_edge(u, w)) ok = false;
        if (ok) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("contains_clique") {
    CHECK(contains_clique(complete_graph(4), 4));
    CHECK(!contains_clique(cycle_graph(5), 3));
    CHECK(!contains_clique(icosahedron(), 4));
    CHECK_THROWS(contains_clique(complete_graph(3), 0));

    // agreement with brute-force subset enumeration
    for (const Graph& g : {complete_graph(5), cycle_graph(6), bipyramid5(), octahedron(), icosahedron()})
        for (int k = 1; k <= 5; ++k) CHECK(contains_clique(g, k) == clique_by_subsets(g, k));
}

TEST_CASE("canonical_form invariance under relabeling") {
    std::mt19937 rng(12345);
    for (const Graph& g : {complete_graph(4), bipyramid5(), octahedron(), icosahedron()}) {
        auto form = canonical_form(g);
        std::vector<int> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        for (int rep = 0; rep < 100; ++rep) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical_form(permuted(g, perm)) == form);
        }
    }
}

TEST_CASE("canonical_form separates non-isomorphic graphs") {
    // the two 6-vertex triangulations: octahedron vs stacked
    Graph stacked = stacked_triangulation(6).graph;
    CHECK(canonical_form(octahedron()) != canonical_form(stacked));
    CHECK(canonical_form(cycle_graph(6)) != canonical_form(path_graph(6)));
    CHECK(canonical_form(complete_graph(4)) == canonical_form(permuted(complete_graph(4), {3, 1, 0, 2})));
}

TEST_CASE("contraction degree bookkeeping") {
    // merged vertex degree is |N(u) ∪ N(w)|, order drops by one
    std::mt19937 rng(99);
    const Graph g = icosahedron();
    for (int u = 0; u < g.order(); ++u)
        for (int w = u + 1; w < g.order(); ++w) {
            if (g.has_edge(u, w)) continue;
            auto r = contract_pair(g, u, w);
            REQUIRE(!is_marker(r));
            const Graph& h = as_graph(r);
            CHECK(h.order() == g.order() - 1);
            CHECK(h.degree(u) == std::popcount(g.neighbor_mask(u) | g.neighbor_mask(w)));
        }
}
