#ifndef MPG_TRIANGULATION_HPP
#define MPG_TRIANGULATION_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mpg/graph.hpp"

namespace mpg {

struct NonPlanarError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotMaximalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Maximal planar graph with an explicit combinatorial embedding: for each
/// vertex the cyclic sequence of its neighbors in embedding order.
struct Triangulation {
    Graph graph;
    std::vector<std::vector<int>> rotation;

    int order() const { return graph.order(); }
};

/// A degree-d vertex with its link cycle.
struct Wheel {
    int center = -1;
    std::vector<int> rim;  // cyclic, canonicalized (lowest id first, then lex smaller direction)
};

/// 4-vertex pattern: vertex u joined to apex x of triangle x-y-z.
struct Funnel {
    int u = -1, x = -1, y = -1, z = -1;
};

/// Embeds via Boyer-Myrvold and verifies the triangulation invariants.
/// Throws NonPlanarError / NotMaximalError with distinct diagnostics.
Triangulation from_graph(const Graph& g);

/// Invariant check: connectivity, |E| = 3n-6, rotation consistency, all
/// 2n-4 traced faces triangular, degree bounds. Throws on violation.
void validate(const Triangulation& t);

/// Oriented triangular faces traced from the rotation system.
std::vector<std::array<int, 3>> faces(const Triangulation& t);

/// Neighbors of v in face-consistent cyclic order: faces at v are exactly
/// (v, ring[k], ring[k+1]).
std::vector<int> oriented_ring(const Triangulation& t, int v);

int min_degree(const Triangulation& t);

Wheel link_cycle(const Triangulation& t, int v);

/// Degree-4 wheel contraction with rim v1..v4:
/// G1 = (G-v) ∘ {v1,v3}, G2 = (G-v) ∘ {v2,v4}. Results are plain graphs;
/// maximality of the pieces is not asserted (see maximality_flag).
std::pair<ContractionOutcome, ContractionOutcome> contract_wheel4(const Triangulation& t, int v);
std::pair<ContractionOutcome, ContractionOutcome> contract_wheel4(const Triangulation& t, int v, const std::vector<int>& rim);

struct Wheel5Contraction {
    std::vector<int> rim;  // v1..v5 labeling used
    ContractionOutcome g1, g1a;  // G1 = (G-v) ∘ {v2,v5}; G1a = G1 + {v1v4, v1v3}
    ContractionOutcome g2, g2a;  // G2 = (G-v) ∘ {v2,v4}; G2a = G2 + {v3v1, v3v5}
    ContractionOutcome g3, g3a;  // G3 = (G-v) ∘ {v3,v5}; G3a = G3 + {v1v4}
};

Wheel5Contraction contract_wheel5(const Triangulation& t, int v);
Wheel5Contraction contract_wheel5(const Triangulation& t, int v, const std::vector<int>& rim);

/// Locate the vertex of a contracted/derived graph that carries the
/// provenance of original vertex `orig` of `root`. Throws if absent.
int trace_vertex(const Graph& root, int orig, const Graph& derived);

/// The funnels L1, L2, L3 inside G1, G2, G3 (ids local to each Gi);
/// nullopt where the contraction produced an AdjacentPair marker.
std::array<std::optional<Funnel>, 3> funnels_of_contraction(const Triangulation& t, int v);
/// Single funnel Li (i in 1..3); throws when Gi is a marker.
Funnel funnel_of_contraction(const Triangulation& t, int v, int i);

/// Insert a new degree-3 vertex into a face.
Triangulation extend_wheel3(const Triangulation& t, const std::array<int, 3>& face);

/// Split w along non-consecutive link neighbors p,q and insert a new
/// degree-4 vertex with rim (w', p, w'', q). Order grows by 2.
Triangulation extend_wheel4(const Triangulation& t, int w, int p, int q);

/// Formal inverse of contract_wheel5: split u along link neighbors a1,a2
/// (each arc strictly between them non-empty) and insert a new degree-5
/// vertex. Order grows by 2.
Triangulation extend_wheel5(const Triangulation& t, int u, int a1, int a2);

/// Inverse of edge contraction: split w into two adjacent vertices sharing
/// the link neighbors at ring positions i < j. Order grows by 1. This is
/// the generator's elementary step.
Triangulation split_vertex(const Triangulation& t, int w, int ring_i, int ring_j);

/// Whether a plain graph is (still) a maximal planar triangulation;
/// diagnostic used for the wheel-contraction results.
bool is_triangulation(const Graph& g);

}  // namespace mpg

#endif
