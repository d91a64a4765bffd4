#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "mpg/chromatic.hpp"
#include "mpg/generate.hpp"
#include "mpg/named_graphs.hpp"
#include "mpg/partitions.hpp"

using namespace mpg;

namespace {

std::uint64_t mask_of(std::initializer_list<int> vs) {
    std::uint64_t m = 0;
    for (int v : vs) m |= std::uint64_t{1} << v;
    return m;
}

}  // namespace

TEST_CASE("enumerate_partitions on fixed graphs") {
    auto k4 = enumerate_partitions(complete_graph(4));
    REQUIRE(k4.size() == 1);
    CHECK(k4[0].class_count() == 4);

    auto b5 = enumerate_partitions(bipyramid5());
    REQUIRE(b5.size() == 1);
    // the apexes must share a class, the equator triangle is rainbow
    CHECK(b5[0].classes == std::vector<std::uint64_t>{mask_of({0, 1}), mask_of({2}), mask_of({3}), mask_of({4})});
    CHECK(b5[0].class_of(1) == 0);
    CHECK(b5[0].class_of(4) == 3);

    CHECK(enumerate_partitions(octahedron()).size() == 4);
    CHECK(enumerate_partitions(icosahedron()).size() == 10);
    CHECK(enumerate_partitions(complete_graph(5)).empty());

    // every class is independent and the classes cover V exactly once
    for (const auto& p : enumerate_partitions(octahedron())) {
        std::uint64_t seen = 0;
        for (std::uint64_t cls : p.classes) {
            CHECK((seen & cls) == 0);
            seen |= cls;
            for (int u = 0; u < 6; ++u)
                for (int w = u + 1; w < 6; ++w)
                    if (((cls >> u) & 1u) && ((cls >> w) & 1u)) CHECK(!octahedron().has_edge(u, w));
        }
        CHECK(seen == mask_of({0, 1, 2, 3, 4, 5}));
    }
}

TEST_CASE("partition count identity against the counting engine") {
    ChromaticEngine engine;
    for (const Graph& g : {complete_graph(4), bipyramid5(), octahedron(), stacked_octahedron().graph, icosahedron(), complete_graph(5)})
        CHECK(partition_count_identity(g, engine.count(g, 4)));
    CHECK(!partition_count_identity(octahedron(), 95));
}

TEST_CASE("coordination") {
    auto k4 = is_coordinated(complete_graph(4));
    REQUIRE(k4);
    CHECK(*k4 == std::array<int, 4>{0, 1, 2, 3});
    // B5: first lex tuple avoiding the merged apexes
    auto b5 = is_coordinated(bipyramid5());
    REQUIRE(b5);
    CHECK(*b5 == std::array<int, 4>{0, 2, 3, 4});
    CHECK(!is_coordinated(octahedron()));
    CHECK(!is_coordinated(icosahedron()));
    CHECK(!is_coordinated(complete_graph(5)));
    auto so = is_coordinated(stacked_octahedron().graph);
    CHECK(so);
}

TEST_CASE("funnel chromatic test") {
    // apex 0 over the equator triangle {2,3,4} of the bipyramid
    Funnel f{0, 2, 3, 4};
    CHECK(is_4chromatic_funnel(bipyramid5(), f));
    CHECK_THROWS(is_4chromatic_funnel(bipyramid5(), Funnel{0, 1, 2, 3}));  // 0-1 not an edge
    // octahedron: vertex 3 funneled through apex 4 of face {4,2,0}
    Funnel oct{3, 4, 2, 0};
    for (auto [a, b] : {std::pair{3, 4}, {4, 2}, {4, 0}, {2, 0}}) REQUIRE(octahedron().has_edge(a, b));
    // a 3-class partition puts two of them together
    CHECK(!is_4chromatic_funnel(octahedron(), oct));
}

TEST_CASE("classification verdicts") {
    CHECK(classify(complete_graph(5)).verdict == Verdict::NotFourColorable);

    Classification k4 = classify(complete_graph(4));
    CHECK(k4.verdict == Verdict::Uniquely);
    REQUIRE(k4.unique_partition);
    CHECK(k4.unique_partition->class_count() == 4);
    CHECK(k4.coordinated_tuple);

    CHECK(classify(bipyramid5()).verdict == Verdict::Uniquely);
    // every stacked triangulation stays uniquely 4-colorable
    for (int n = 5; n <= 10; ++n) CHECK(classify(stacked_triangulation(n).graph).verdict == Verdict::Uniquely);

    CHECK(classify(octahedron()).verdict == Verdict::NonCoordinated);
    CHECK(classify(icosahedron()).verdict == Verdict::NonCoordinated);

    Classification so = classify(stacked_octahedron().graph);
    CHECK(so.verdict == Verdict::QuasiUniquely);
    REQUIRE(so.unique_subgraph);
    // the witness induces a uniquely 4-colorable subgraph
    std::uint64_t mask = 0;
    for (int v : *so.unique_subgraph) mask |= std::uint64_t{1} << v;
    auto sub = enumerate_partitions(induced_subgraph(stacked_octahedron().graph, mask));
    CHECK(sub.size() == 1);
    CHECK(sub[0].class_count() == 4);
}

TEST_CASE("pseudo verdict is cap dependent") {
    // a 9-vertex triangulation that is coordinated yet has no uniquely
    // 4-colorable induced subgraph
    GenerationReport rep = generate_all(9);
    int pseudo = 0;
    for (const Triangulation& t : rep.graphs) {
        Classification c = classify(t.graph);
        if (c.verdict != Verdict::PseudoUniquely) continue;
        ++pseudo;
        CHECK(c.search_cap == 9);
        CHECK(c.coordinated_tuple);
        CHECK(!c.unique_subgraph);
        // capping the search cannot promote the verdict
        CHECK(classify(t.graph, 5).verdict == Verdict::PseudoUniquely);
    }
    CHECK(pseudo == 2);
}

TEST_CASE("classification is relabeling invariant") {
    std::mt19937 rng(777);
    for (const Graph& g : {bipyramid5(), octahedron(), stacked_octahedron().graph, icosahedron()}) {
        Verdict expect = classify(g).verdict;
        std::vector<int> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        for (int rep = 0; rep < 10; ++rep) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(classify(permuted(g, perm)).verdict == expect);
        }
    }
}
