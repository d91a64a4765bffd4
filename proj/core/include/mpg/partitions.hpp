#ifndef MPG_PARTITIONS_HPP
#define MPG_PARTITIONS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mpg/graph.hpp"
#include "mpg/polynomial.hpp"
#include "mpg/triangulation.hpp"

namespace mpg {

/// Unordered partition of V into <= 4 independent classes (a 4-coloring up
/// to color names). Classes are stored as vertex masks ordered by smallest
/// member, so equal partitions compare equal.
struct ColorPartition {
    std::vector<std::uint64_t> classes;

    int class_count() const { return static_cast<int>(classes.size()); }
    int class_of(int v) const;
    bool operator==(const ColorPartition&) const = default;
};

/// All partitions of V into <= 4 independent classes: the partition set
/// C4_0(G). Enumerated by restricted-growth backtracking, so each unordered
/// partition appears exactly once. Partitions using fewer than 4 classes
/// are retained.
std::vector<ColorPartition> enumerate_partitions(const Graph& g);

/// |C4_0(G)| * 24 == f(G,4): both 3-class and 4-class partitions of a
/// graph with a triangle yield exactly 24 labeled 4-colorings.
bool partition_count_identity(const Graph& g, const BigInt& count_at_4);

/// Some 4 vertices pairwise in different classes in every partition (first
/// in lexicographic order); absent when none exist. Any partition with
/// fewer than 4 classes forces absence.
std::optional<std::array<int, 4>> is_coordinated(const Graph& g);
std::optional<std::array<int, 4>> is_coordinated(const Graph& g, const std::vector<ColorPartition>& partitions);

/// True iff u, x, y, z lie in 4 distinct classes in every partition.
/// Throws on a funnel whose required edges are missing.
bool is_4chromatic_funnel(const Graph& g, const Funnel& f);
bool is_4chromatic_funnel(const Graph& g, const Funnel& f, const std::vector<ColorPartition>& partitions);

enum class Verdict { NotFourColorable, NonCoordinated, Uniquely, QuasiUniquely, PseudoUniquely };

std::string to_string(Verdict v);

struct Classification {
    Verdict verdict = Verdict::NotFourColorable;
    std::optional<ColorPartition> unique_partition;
    std::optional<std::array<int, 4>> coordinated_tuple;
    /// Vertices of the uniquely-4-colorable induced subgraph found (quasi).
    std::optional<std::vector<int>> unique_subgraph;
    /// Size cap used by the bounded quasi-uniqueness search; a pseudo
    /// verdict always means "pseudo at this cap".
    int search_cap = 0;
};

/// Taxonomy: not-4-colorable / uniquely / quasi-uniquely /
/// pseudo-uniquely / non-coordinated. The quasi search is bounded to
/// induced subgraphs of size 4..cap (default n).
Classification classify(const Graph& g, std::optional<int> cap = std::nullopt);

}  // namespace mpg

#endif
