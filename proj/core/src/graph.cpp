#include "mpg/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace mpg {

Graph::Graph(int order) : n_(order) {
    if (order < 0 || order > kMaxOrder)
        throw std::invalid_argument("graph order " + std::to_string(order) + " outside [0," + std::to_string(kMaxOrder) + "]");
    adj_.assign(n_, 0);
    labels_.resize(n_);
    for (int v = 0; v < n_; ++v) labels_[v] = {v};
}

int Graph::edge_count() const {
    int total = 0;
    for (auto row : adj_) total += std::popcount(row);
    return total / 2;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(adj_[v]);
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (std::uint64_t m = adj_[v]; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

int Graph::vertex_with_label(int label) const {
    for (int v = 0; v < n_; ++v)
        if (std::binary_search(labels_[v].begin(), labels_[v].end(), label)) return v;
    return -1;
}

void Graph::set_edge(int u, int w) {
    check_vertex(u);
    check_vertex(w);
    if (u == w) throw std::invalid_argument("loop edge (" + std::to_string(u) + "," + std::to_string(u) + ") rejected");
    adj_[u] |= std::uint64_t{1} << w;
    adj_[w] |= std::uint64_t{1} << u;
}

void Graph::clear_edge(int u, int w) {
    check_vertex(u);
    check_vertex(w);
    adj_[u] &= ~(std::uint64_t{1} << w);
    adj_[w] &= ~(std::uint64_t{1} << u);
}

Graph build_graph(int order, const std::vector<std::pair<int, int>>& edges) {
    Graph g(order);
    for (auto [u, w] : edges) g.set_edge(u, w);  // duplicates collapse
    return g;
}

namespace {

// Dense relabeling that keeps only vertices in `keep` (ascending order);
// provenance is carried over, and `merge_into`/`merge_from` (if >=0)
// union their label sets at the surviving position of merge_into.
Graph shrink(const Graph& g, std::uint64_t keep, int merge_into = -1, int merge_from = -1) {
    std::vector<int> newid(g.order(), -1);
    int m = 0;
    for (int v = 0; v < g.order(); ++v)
        if ((keep >> v) & 1u) newid[v] = m++;
    Graph out(m);
    for (int v = 0; v < g.order(); ++v) {
        if (newid[v] < 0) continue;
        out.set_labels(newid[v], g.labels(v));
        for (int w : g.neighbors(v))
            if (newid[w] >= 0 && w > v) out.set_edge(newid[v], newid[w]);
    }
    if (merge_into >= 0) {
        std::vector<int> merged = g.labels(merge_into);
        const auto& extra = g.labels(merge_from);
        merged.insert(merged.end(), extra.begin(), extra.end());
        std::sort(merged.begin(), merged.end());
        out.set_labels(newid[merge_into], std::move(merged));
        for (int w : g.neighbors(merge_from))
            if (w != merge_into && newid[w] >= 0) out.set_edge(newid[merge_into], newid[w]);
    }
    return out;
}

}  // namespace

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("delete_vertex: missing vertex " + std::to_string(v));
    std::uint64_t keep = 0;
    for (int u = 0; u < g.order(); ++u)
        if (u != v) keep |= std::uint64_t{1} << u;
    return shrink(g, keep);
}

ContractionOutcome contract_pair(const Graph& g, int u, int w) {
    if (u == w) throw std::invalid_argument("contract_pair: identical vertices");
    if (u < 0 || u >= g.order() || w < 0 || w >= g.order()) throw std::out_of_range("contract_pair: vertex out of range");
    if (g.has_edge(u, w)) return AdjacentPair{u, w};
    std::uint64_t keep = ~std::uint64_t{0};
    keep &= ~(std::uint64_t{1} << w);
    std::uint64_t all = g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
    return shrink(g, keep & all, u, w);
}

Graph contract_edge(const Graph& g, int u, int w) {
    if (!g.has_edge(u, w)) throw std::invalid_argument("contract_edge: (" + std::to_string(u) + "," + std::to_string(w) + ") is not an edge");
    Graph cut = g;
    cut.clear_edge(u, w);
    return as_graph(contract_pair(cut, u, w));
}

Graph add_edge_copy(const Graph& g, int u, int w) {
    Graph out = g;
    out.set_edge(u, w);
    return out;
}

bool contains_clique(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("contains_clique: k must be >= 1");
    if (k > g.order()) return false;
    // backtracking over candidate sets
    std::vector<std::pair<std::uint64_t, int>> stack;  // (candidates, still needed)
    std::uint64_t all = g.order() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.order()) - 1;
    stack.push_back({all, k});
    while (!stack.empty()) {
        auto [cand, need] = stack.back();
        stack.pop_back();
        if (need == 0) return true;
        if (std::popcount(cand) < need) continue;
        std::uint64_t m = cand;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            // only pick v as the smallest member of the remaining clique
            std::uint64_t rest = cand & g.neighbor_mask(v) & ~((std::uint64_t{1} << (v + 1)) - 1);
            if (need == 1) return true;
            stack.push_back({rest, need - 1});
        }
    }
    return false;
}

std::vector<std::uint64_t> components(const Graph& g) {
    std::vector<std::uint64_t> out;
    std::uint64_t seen = 0;
    for (int s = 0; s < g.order(); ++s) {
        if ((seen >> s) & 1u) continue;
        std::uint64_t comp = std::uint64_t{1} << s;
        std::uint64_t frontier = comp;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            std::uint64_t fresh = g.neighbor_mask(v) & ~comp;
            comp |= fresh;
            frontier |= fresh;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || components(g).size() == 1; }

Graph induced_subgraph(const Graph& g, std::uint64_t mask) { return shrink(g, mask); }

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.order());
    for (int v = 0; v < g.order(); ++v) {
        out.set_labels(perm[v], g.labels(v));
        for (int w : g.neighbors(v))
            if (w > v) out.set_edge(perm[v], perm[w]);
    }
    return out;
}

}  // namespace mpg
