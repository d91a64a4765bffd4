#ifndef MPG_RECURSION_HPP
#define MPG_RECURSION_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mpg/chromatic.hpp"
#include "mpg/triangulation.hpp"

namespace mpg {

/// f(G,4) = f(G1,4) + f(G2,4) for a degree-4 wheel, G1/G2 the two
/// rim-pair contractions of G - v.
struct Wheel4Report {
    std::string host_form_hex;
    int vertex = -1;
    BigInt term1, term2, total;
    bool holds = false;
    bool g1_marker = false, g2_marker = false;
    /// Diagnostic only: whether each contracted piece is itself maximal
    /// planar (not asserted; see the octahedron case).
    bool g1_maximal = false, g2_maximal = false;
};

struct Wheel5Bracket {
    BigInt base;       // f(Gi, 4)
    BigInt augmented;  // f(Gi + extra chords, 4)
    bool marker = false;
    BigInt value() const { return base - augmented; }
};

/// f(G,4) as the sum of the three brackets of the degree-5 wheel formula.
struct Wheel5Report {
    std::string host_form_hex;
    int vertex = -1;
    std::array<Wheel5Bracket, 3> brackets;
    BigInt total;
    bool holds = false;
    bool all_nonnegative = false;
};

Wheel4Report wheel4_identity_check(const ChromaticEngine& engine, const Triangulation& t, int v);
Wheel4Report wheel4_identity_check(const ChromaticEngine& engine, const Triangulation& t, int v, const std::vector<int>& rim);
Wheel5Report wheel5_identity_check(const ChromaticEngine& engine, const Triangulation& t, int v);
Wheel5Report wheel5_identity_check(const ChromaticEngine& engine, const Triangulation& t, int v, const std::vector<int>& rim);

/// The five disjoint non-adjacent rim pair-patterns of a 5-wheel, as
/// 1-based rim index pairs. A rim coloring with exactly three colors
/// realizes exactly one of them.
inline constexpr std::array<std::array<std::pair<int, int>, 2>, 5> kRimPatterns{{
    {{{2, 5}, {1, 3}}},
    {{{2, 5}, {1, 4}}},
    {{{2, 4}, {1, 3}}},
    {{{2, 4}, {3, 5}}},
    {{{3, 5}, {1, 4}}},
}};

std::string rim_pattern_name(int index);

/// Counts of 4-colorings of G - v by realized rim pattern, computed by
/// oracle enumeration (independent of the polynomial engine).
std::map<std::string, BigInt> equality_pattern_counts(const Triangulation& t, int v);

enum class StepKind { Degree3Delete, Wheel4Lift, Wheel5Lift, BaseCase, FallbackExhaustive };

std::string to_string(StepKind k);

struct TraceStep {
    StepKind kind;
    int vertex = -1;  // reduced/reinserted vertex (original label), when applicable
    int branch = -1;  // wheel branch/bracket used (1-based), when applicable
    /// Colors fixed by this step, keyed by original vertex label.
    std::map<int, int> assigned;
};

/// A proper 4-coloring plus the bottom-up reduction trace producing it.
struct ColoringCertificate {
    std::map<int, int> coloring;  // original label -> color 1..4
    std::vector<TraceStep> trace;
    bool fallback_used = false;
};

/// Constructive 4-coloring by induction on the order: degree-3 deletion,
/// degree-4 wheel contraction lift, degree-5 wheel funnel lift, with an
/// exhaustive fallback when every funnel of every 5-wheel is rainbow-only.
ColoringCertificate four_color(const ChromaticEngine& engine, const Triangulation& t);

/// Proper-coloring predicate plus trace replay.
bool validate_certificate(const Triangulation& t, const ColoringCertificate& cert);

struct FunnelObstruction {
    int vertex = -1;
    /// Per contraction branch: whether every partition of Gi is rainbow on
    /// Li; nullopt where Gi is an adjacent-pair marker.
    std::array<std::optional<bool>, 3> rainbow_only;
    /// True iff every non-marker branch is rainbow-only (the hard case).
    bool obstruction = false;
};

/// Scan of all degree-5 vertices; requires min degree 5.
std::vector<FunnelObstruction> find_funnel_obstructions(const Triangulation& t);

}  // namespace mpg

#endif
