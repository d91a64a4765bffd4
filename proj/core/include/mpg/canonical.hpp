#ifndef MPG_CANONICAL_HPP
#define MPG_CANONICAL_HPP

#include <string>
#include <vector>

#include "mpg/graph.hpp"

namespace mpg {

/// Canonical form of the isomorphism class of a graph: the order followed by
/// the upper-triangle adjacency bits (packed per byte) under the canonical
/// labeling found by partition refinement with exhaustive backtracking on
/// ties. Two graphs get equal forms iff they are isomorphic.
using CanonicalForm = std::string;

CanonicalForm canonical_form(const Graph& g);

/// Canonical form rendered as a hex string (used in JSON reports and the
/// on-disk memo cache).
std::string to_hex(const CanonicalForm& form);

}  // namespace mpg

#endif
