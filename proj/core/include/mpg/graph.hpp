#ifndef MPG_GRAPH_HPP
#define MPG_GRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace mpg {

/// Simple undirected labeled graph on vertices 0..n-1.
///
/// Every vertex carries a provenance set: the original labels of the root
/// graph that have been merged into it by contractions. A freshly built
/// graph maps each vertex to {itself}. Values are immutable; all operations
/// return new graphs.
class Graph {
public:
    static constexpr int kMaxOrder = 64;

    Graph() = default;
    explicit Graph(int order);

    int order() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int w) const {
        check_vertex(u);
        check_vertex(w);
        return (adj_[u] >> w) & 1u;
    }
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    std::uint64_t neighbor_mask(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    /// Original root labels merged into vertex v (sorted).
    const std::vector<int>& labels(int v) const {
        check_vertex(v);
        return labels_[v];
    }

    /// The vertex whose provenance set contains the given original label,
    /// or -1 when no vertex carries it (e.g. the label was deleted).
    int vertex_with_label(int label) const;

    bool same_adjacency(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

    // mutators used by the free-function operations below
    void set_edge(int u, int w);
    void clear_edge(int u, int w);
    void set_labels(int v, std::vector<int> ls) {
        check_vertex(v);
        labels_[v] = std::move(ls);
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex id " + std::to_string(v) + " out of range (order " + std::to_string(n_) + ")");
    }

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<std::vector<int>> labels_;
};

/// Marker produced when a contraction is requested for an adjacent pair.
/// Downstream coloring counts treat it as the zero polynomial.
struct AdjacentPair {
    int u = -1;
    int w = -1;
};

using ContractionOutcome = std::variant<Graph, AdjacentPair>;

inline bool is_marker(const ContractionOutcome& o) { return std::holds_alternative<AdjacentPair>(o); }
inline const Graph& as_graph(const ContractionOutcome& o) { return std::get<Graph>(o); }

Graph build_graph(int order, const std::vector<std::pair<int, int>>& edges);

Graph delete_vertex(const Graph& g, int v);

ContractionOutcome contract_pair(const Graph& g, int u, int w);

/// Contract an existing edge: identify the endpoints, discard the edge,
/// collapse parallels.
Graph contract_edge(const Graph& g, int u, int w);

/// Returns a copy with edge u-w present. Idempotent.
Graph add_edge_copy(const Graph& g, int u, int w);

bool contains_clique(const Graph& g, int k);

bool is_connected(const Graph& g);

/// Connected component vertex masks.
std::vector<std::uint64_t> components(const Graph& g);

/// Induced subgraph on the vertices of `mask` (dense relabeling in
/// ascending order, provenance preserved).
Graph induced_subgraph(const Graph& g, std::uint64_t mask);

/// Relabel vertices: vertex v of g becomes perm[v].
Graph permuted(const Graph& g, const std::vector<int>& perm);

}  // namespace mpg

#endif
