#ifndef MPG_GENERATE_HPP
#define MPG_GENERATE_HPP

#include <map>
#include <optional>
#include <vector>

#include "mpg/triangulation.hpp"

namespace mpg {

constexpr int kMinGenerationOrder = 4;
constexpr int kMaxGenerationOrder = 13;

struct GenerationReport {
    int order = 0;
    /// Pairwise non-isomorphic, sorted by canonical form (scheduling-independent).
    std::vector<Triangulation> graphs;
    /// Class counts keyed by minimum degree, before any filter.
    std::map<int, int> counts_by_min_degree;
};

/// All isomorphism classes of n-vertex triangulations, produced by iterated
/// vertex splitting (the inverse of edge contraction) from K4 with
/// canonical-form deduplication.
GenerationReport generate_all(int n, std::optional<int> min_degree_filter = std::nullopt, int jobs = 1);

}  // namespace mpg

#endif
