#ifndef MPG_NAMED_GRAPHS_HPP
#define MPG_NAMED_GRAPHS_HPP

#include "mpg/graph.hpp"
#include "mpg/triangulation.hpp"

namespace mpg {

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

/// Triangular bipyramid: equator triangle {2,3,4}, apexes 0 and 1 joined to
/// every equator vertex. The unique 5-vertex triangulation.
Graph bipyramid5();

/// Octahedron K_{2,2,2}: antipodal pairs {0,3}, {1,4}, {2,5}.
Graph octahedron();

/// Icosahedron: apex 0 over ring 1..5, antipodal ring 6..10, apex 11.
Graph icosahedron();

/// Octahedron with one face stacked: the 7-vertex host used by the 5-wheel
/// examples (a degree-5 vertex appears next to the inserted one).
Triangulation stacked_octahedron();

/// Stacked (Apollonian) triangulation of order n: repeated degree-3
/// insertion into the first face, starting from K4.
Triangulation stacked_triangulation(int n);

}  // namespace mpg

#endif
