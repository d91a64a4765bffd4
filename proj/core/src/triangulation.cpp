#include "mpg/triangulation.hpp"

#include <algorithm>
#include <map>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace mpg {

namespace {

std::string ids(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

// successor-in-rotation lookup tables: succ[v][u] = neighbor after u in rotation[v]
std::vector<std::vector<int>> succ_tables(const Triangulation& t) {
    int n = t.order();
    std::vector<std::vector<int>> succ(n, std::vector<int>(n, -1));
    for (int v = 0; v < n; ++v) {
        const auto& r = t.rotation[v];
        for (std::size_t k = 0; k < r.size(); ++k) succ[v][r[k]] = r[(k + 1) % r.size()];
    }
    return succ;
}

int fresh_label(const Graph& g) {
    int mx = -1;
    for (int v = 0; v < g.order(); ++v)
        for (int l : g.labels(v)) mx = std::max(mx, l);
    return mx + 1;
}

// Rebuild a triangulation from an oriented face list. Edges and rotations
// are derived entirely from the faces; labels are supplied per vertex.
Triangulation from_faces(int n, const std::vector<std::array<int, 3>>& fs, std::vector<std::vector<int>> labels) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.set_labels(v, std::move(labels[v]));
    for (const auto& f : fs) {
        g.set_edge(f[0], f[1]);
        g.set_edge(f[1], f[2]);
        g.set_edge(f[2], f[0]);
    }
    // rotation from oriented faces: face (a,b,c) fixes succ at b: a -> c, etc.
    std::vector<std::map<int, int>> succ(n);
    auto put = [&](int at, int from, int to) {
        auto [it, fresh] = succ[at].emplace(from, to);
        if (!fresh && it->second != to) throw std::logic_error("from_faces: inconsistent oriented face list");
    };
    for (const auto& f : fs) {
        put(f[1], f[0], f[2]);
        put(f[2], f[1], f[0]);
        put(f[0], f[2], f[1]);
    }
    Triangulation t;
    t.graph = std::move(g);
    t.rotation.resize(n);
    for (int v = 0; v < n; ++v) {
        if (succ[v].empty()) throw std::logic_error("from_faces: isolated vertex");
        int start = succ[v].begin()->first;
        int cur = start;
        do {
            t.rotation[v].push_back(cur);
            auto it = succ[v].find(cur);
            if (it == succ[v].end()) throw std::logic_error("from_faces: broken rotation at vertex " + std::to_string(v));
            cur = it->second;
        } while (cur != start);
        if (t.rotation[v].size() != succ[v].size()) throw std::logic_error("from_faces: rotation at vertex " + std::to_string(v) + " is not a single cycle");
    }
    validate(t);
    return t;
}

std::vector<std::vector<int>> all_labels(const Graph& g) {
    std::vector<std::vector<int>> out(g.order());
    for (int v = 0; v < g.order(); ++v) out[v] = g.labels(v);
    return out;
}

}  // namespace

std::vector<std::array<int, 3>> faces(const Triangulation& t) {
    int n = t.order();
    auto succ = succ_tables(t);
    std::vector<std::array<int, 3>> out;
    std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v : t.rotation[u]) {
            if (seen[u][v]) continue;
            std::vector<int> walk;
            int a = u, b = v;
            do {
                seen[a][b] = 1;
                walk.push_back(a);
                int c = succ[b][a];
                if (c < 0) throw std::logic_error("faces: rotation tables inconsistent");
                a = b;
                b = c;
            } while (!(a == u && b == v));
            if (walk.size() != 3)
                throw NotMaximalError("face of length " + std::to_string(walk.size()) + " traced; not a triangulation");
            out.push_back({walk[0], walk[1], walk[2]});
        }
    return out;
}

void validate(const Triangulation& t) {
    const Graph& g = t.graph;
    int n = g.order();
    if (n < 3) throw NotMaximalError("triangulation needs order >= 3, got " + std::to_string(n));
    if (!is_connected(g)) throw NotMaximalError("graph is disconnected");
    int m = g.edge_count();
    if (m != 3 * n - 6)
        throw NotMaximalError("edge count " + std::to_string(m) + " != 3n-6 = " + std::to_string(3 * n - 6));
    if (static_cast<int>(t.rotation.size()) != n) throw std::logic_error("rotation table size mismatch");
    for (int v = 0; v < n; ++v) {
        std::vector<int> r = t.rotation[v];
        std::sort(r.begin(), r.end());
        std::vector<int> nb = g.neighbors(v);
        if (r != nb) throw std::logic_error("rotation at vertex " + std::to_string(v) + " is not a permutation of its neighborhood");
    }
    auto fs = faces(t);  // throws on a non-triangular face
    if (static_cast<int>(fs.size()) != 2 * n - 4)
        throw NotMaximalError("face count " + std::to_string(fs.size()) + " != 2n-4");
    if (n >= 4) {
        int lo = n, hi = 0;
        for (int v = 0; v < n; ++v) {
            lo = std::min(lo, g.degree(v));
            hi = std::max(hi, g.degree(v));
        }
        if (lo < 3 || lo > 5) throw std::logic_error("minimum degree " + std::to_string(lo) + " outside [3,5]");
    }
}

Triangulation from_graph(const Graph& g) {
    int n = g.order();
    if (n < 3) throw NotMaximalError("planar but not maximal: order " + std::to_string(n) + " < 3");

    using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
    BGraph bg(n);
    for (int u = 0; u < n; ++u)
        for (int w : g.neighbors(u))
            if (w > u) boost::add_edge(u, w, bg);
    auto eindex = boost::get(boost::edge_index, bg);
    int ei = 0;
    for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(eindex, *it, ei++);

    using Embedding = std::vector<std::vector<boost::graph_traits<BGraph>::edge_descriptor>>;
    Embedding embedding(n);
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = embedding.data());
    if (!planar) throw NonPlanarError("graph is not planar");
    if (!is_connected(g)) throw NotMaximalError("planar but not maximal: disconnected");
    if (g.edge_count() != 3 * n - 6)
        throw NotMaximalError("planar but not maximal: edge count " + std::to_string(g.edge_count()) + " != 3n-6 = " + std::to_string(3 * n - 6));

    Triangulation t;
    t.graph = g;
    t.rotation.resize(n);
    for (int v = 0; v < n; ++v)
        for (auto e : embedding[v]) {
            int a = static_cast<int>(boost::source(e, bg));
            int b = static_cast<int>(boost::target(e, bg));
            t.rotation[v].push_back(a == v ? b : a);
        }
    validate(t);
    return t;
}

bool is_triangulation(const Graph& g) {
    try {
        from_graph(g);
        return true;
    } catch (const NonPlanarError&) {
        return false;
    } catch (const NotMaximalError&) {
        return false;
    }
}

std::vector<int> oriented_ring(const Triangulation& t, int v) {
    // chain the oriented faces at v: face (v,s,w) contributes s -> w
    std::map<int, int> nxt;
    for (const auto& f : faces(t)) {
        for (int k = 0; k < 3; ++k)
            if (f[k] == v) nxt[f[(k + 1) % 3]] = f[(k + 2) % 3];
    }
    std::vector<int> ring;
    int start = nxt.begin()->first, cur = start;
    do {
        ring.push_back(cur);
        cur = nxt.at(cur);
    } while (cur != start);
    if (static_cast<int>(ring.size()) != t.graph.degree(v)) throw std::logic_error("oriented_ring: broken link at vertex " + std::to_string(v));
    return ring;
}

int min_degree(const Triangulation& t) {
    int lo = t.order();
    for (int v = 0; v < t.order(); ++v) lo = std::min(lo, t.graph.degree(v));
    return lo;
}

Wheel link_cycle(const Triangulation& t, int v) {
    if (t.order() <= 3) throw std::invalid_argument("link_cycle: order must be >= 4");
    std::vector<int> ring = oriented_ring(t, v);
    int d = static_cast<int>(ring.size());
    auto pos = static_cast<int>(std::min_element(ring.begin(), ring.end()) - ring.begin());
    std::vector<int> fwd(d), rev(d);
    for (int k = 0; k < d; ++k) {
        fwd[k] = ring[(pos + k) % d];
        rev[k] = ring[(pos - k + d) % d];
    }
    return Wheel{v, std::min(fwd, rev)};
}

namespace {

// Validate that `rim` is a rotation or reflection of v's link cycle.
void check_rim(const Triangulation& t, int v, const std::vector<int>& rim) {
    std::vector<int> ring = oriented_ring(t, v);
    int d = static_cast<int>(ring.size());
    if (static_cast<int>(rim.size()) != d) throw std::invalid_argument("rim size mismatch");
    for (int rot = 0; rot < d; ++rot)
        for (int dir : {1, -1}) {
            bool ok = true;
            for (int k = 0; k < d && ok; ++k) ok = rim[k] == ring[((rot + dir * k) % d + d) % d];
            if (ok) return;
        }
    throw std::invalid_argument("rim is not a labeling of the link cycle");
}

ContractionOutcome contract_in_deleted(const Graph& g, int v, int a, int b) {
    Graph h = delete_vertex(g, v);
    auto shift = [v](int x) { return x > v ? x - 1 : x; };
    return contract_pair(h, shift(a), shift(b));
}

ContractionOutcome augment(const Graph& root, const ContractionOutcome& o, const std::vector<std::pair<int, int>>& extra) {
    if (is_marker(o)) return o;  // markers absorb augmentation
    Graph g = as_graph(o);
    for (auto [a, b] : extra) g.set_edge(trace_vertex(root, a, g), trace_vertex(root, b, g));
    return g;
}

}  // namespace

int trace_vertex(const Graph& root, int orig, const Graph& derived) {
    int label = root.labels(orig).front();
    int v = derived.vertex_with_label(label);
    if (v < 0) throw std::logic_error("trace_vertex: label of vertex " + std::to_string(orig) + " absent from derived graph");
    return v;
}

std::pair<ContractionOutcome, ContractionOutcome> contract_wheel4(const Triangulation& t, int v, const std::vector<int>& rim) {
    if (t.graph.degree(v) != 4) throw std::invalid_argument("contract_wheel4: d(v) = " + std::to_string(t.graph.degree(v)) + " != 4");
    check_rim(t, v, rim);
    return {contract_in_deleted(t.graph, v, rim[0], rim[2]), contract_in_deleted(t.graph, v, rim[1], rim[3])};
}

std::pair<ContractionOutcome, ContractionOutcome> contract_wheel4(const Triangulation& t, int v) {
    return contract_wheel4(t, v, link_cycle(t, v).rim);
}

Wheel5Contraction contract_wheel5(const Triangulation& t, int v, const std::vector<int>& rim) {
    if (t.graph.degree(v) != 5) throw std::invalid_argument("contract_wheel5: d(v) = " + std::to_string(t.graph.degree(v)) + " != 5");
    check_rim(t, v, rim);
    const Graph& g = t.graph;
    int v1 = rim[0], v2 = rim[1], v3 = rim[2], v4 = rim[3], v5 = rim[4];
    Wheel5Contraction out;
    out.rim = rim;
    out.g1 = contract_in_deleted(g, v, v2, v5);
    out.g2 = contract_in_deleted(g, v, v2, v4);
    out.g3 = contract_in_deleted(g, v, v3, v5);
    out.g1a = augment(g, out.g1, {{v1, v4}, {v1, v3}});
    out.g2a = augment(g, out.g2, {{v3, v1}, {v3, v5}});
    out.g3a = augment(g, out.g3, {{v1, v4}});
    return out;
}

Wheel5Contraction contract_wheel5(const Triangulation& t, int v) {
    return contract_wheel5(t, v, link_cycle(t, v).rim);
}

std::array<std::optional<Funnel>, 3> funnels_of_contraction(const Triangulation& t, int v) {
    Wheel5Contraction c = contract_wheel5(t, v);
    int v1 = c.rim[0], v2 = c.rim[1], v3 = c.rim[2], v4 = c.rim[3], v5 = c.rim[4];
    const Graph& g = t.graph;
    std::array<std::optional<Funnel>, 3> out;
    // funnel (u, x=merged pair, y, z); the merged vertex carries both labels
    auto make = [&](const ContractionOutcome& o, int u, int merged_half, int y, int z) -> std::optional<Funnel> {
        if (is_marker(o)) return std::nullopt;
        const Graph& h = as_graph(o);
        Funnel f{trace_vertex(g, u, h), trace_vertex(g, merged_half, h), trace_vertex(g, y, h), trace_vertex(g, z, h)};
        for (auto [a, b] : {std::pair{f.u, f.x}, {f.x, f.y}, {f.x, f.z}, {f.y, f.z}})
            if (!h.has_edge(a, b)) throw std::logic_error("funnel edge missing after contraction");
        return f;
    };
    out[0] = make(c.g1, v1, v2, v3, v4);
    out[1] = make(c.g2, v3, v2, v1, v5);
    out[2] = make(c.g3, v4, v3, v1, v2);
    return out;
}

Funnel funnel_of_contraction(const Triangulation& t, int v, int i) {
    if (i < 1 || i > 3) throw std::invalid_argument("funnel index must be 1..3");
    auto fs = funnels_of_contraction(t, v);
    if (!fs[i - 1]) throw std::invalid_argument("funnel L" + std::to_string(i) + ": contraction produced an adjacent-pair marker");
    return *fs[i - 1];
}

Triangulation extend_wheel3(const Triangulation& t, const std::array<int, 3>& face) {
    auto fs = faces(t);
    auto match = std::find_if(fs.begin(), fs.end(), [&](const std::array<int, 3>& f) {
        return std::is_permutation(f.begin(), f.end(), face.begin());
    });
    if (match == fs.end())
        throw std::invalid_argument("extend_wheel3: (" + std::to_string(face[0]) + "," + std::to_string(face[1]) + "," + std::to_string(face[2]) + ") is not a face");
    std::array<int, 3> f = *match;  // oriented as traced
    fs.erase(match);
    int n = t.order();
    fs.push_back({f[0], f[1], n});
    fs.push_back({f[1], f[2], n});
    fs.push_back({f[2], f[0], n});
    auto labels = all_labels(t.graph);
    labels.push_back({fresh_label(t.graph)});
    return from_faces(n + 1, fs, std::move(labels));
}

Triangulation extend_wheel4(const Triangulation& t, int w, int p, int q) {
    std::vector<int> ring = oriented_ring(t, w);
    int d = static_cast<int>(ring.size());
    auto find = [&](int x) {
        auto it = std::find(ring.begin(), ring.end(), x);
        if (it == ring.end()) throw std::invalid_argument("extend_wheel4: " + std::to_string(x) + " is not a neighbor of " + std::to_string(w));
        return static_cast<int>(it - ring.begin());
    };
    int i = find(p), j = find(q);
    if (i == j || (j - i + d) % d == 1 || (i - j + d) % d == 1)
        throw std::invalid_argument("extend_wheel4: " + ids(p, q) + " are consecutive in the rotation at " + std::to_string(w));

    int n = t.order();
    int w2 = n, v = n + 1;  // w keeps one arc, w2 the other, v sits between
    std::vector<std::array<int, 3>> fs;
    for (const auto& f : faces(t))
        if (f[0] != w && f[1] != w && f[2] != w) fs.push_back(f);
    for (int k = i; k % d != j; ++k) fs.push_back({w, ring[k % d], ring[(k + 1) % d]});
    for (int k = j; k % d != i; ++k) fs.push_back({w2, ring[k % d], ring[(k + 1) % d]});
    fs.push_back({w, ring[j], v});
    fs.push_back({v, ring[i], w});
    fs.push_back({w2, ring[i], v});
    fs.push_back({v, ring[j], w2});

    auto labels = all_labels(t.graph);
    int base = fresh_label(t.graph);
    labels.push_back({base});
    labels.push_back({base + 1});
    return from_faces(n + 2, fs, std::move(labels));
}

Triangulation extend_wheel5(const Triangulation& t, int u, int a1, int a2) {
    std::vector<int> ring = oriented_ring(t, u);
    int d = static_cast<int>(ring.size());
    auto find = [&](int x) {
        auto it = std::find(ring.begin(), ring.end(), x);
        if (it == ring.end()) throw std::invalid_argument("extend_wheel5: " + std::to_string(x) + " is not a neighbor of " + std::to_string(u));
        return static_cast<int>(it - ring.begin());
    };
    int i = find(a1), j = find(a2);
    if (i == j || (j - i + d) % d < 2 || (i - j + d) % d < 2)
        throw std::invalid_argument("extend_wheel5: each arc between " + ids(a1, a2) + " must contain a further vertex");

    int n = t.order();
    int u2 = n, v = n + 1;
    // new 5-wheel rim: (ring[i], u, ring[j], ring[j+1], u2); contracting
    // {u, u2} at v recovers the host
    std::vector<std::array<int, 3>> fs;
    for (const auto& f : faces(t))
        if (f[0] != u && f[1] != u && f[2] != u) fs.push_back(f);
    for (int k = i; k % d != j; ++k) fs.push_back({u, ring[k % d], ring[(k + 1) % d]});
    fs.push_back({v, ring[j], ring[(j + 1) % d]});
    for (int k = j + 1; k % d != i; ++k) fs.push_back({u2, ring[k % d], ring[(k + 1) % d]});
    fs.push_back({u, ring[j], v});
    fs.push_back({v, ring[i], u});
    fs.push_back({u2, ring[i], v});
    fs.push_back({v, ring[(j + 1) % d], u2});

    auto labels = all_labels(t.graph);
    int base = fresh_label(t.graph);
    labels.push_back({base});
    labels.push_back({base + 1});
    return from_faces(n + 2, fs, std::move(labels));
}

Triangulation split_vertex(const Triangulation& t, int w, int ring_i, int ring_j) {
    std::vector<int> ring = oriented_ring(t, w);
    int d = static_cast<int>(ring.size());
    if (ring_i < 0 || ring_j < 0 || ring_i >= d || ring_j >= d || ring_i == ring_j)
        throw std::invalid_argument("split_vertex: ring positions out of range");
    int i = ring_i, j = ring_j;
    int n = t.order();
    int w2 = n;
    std::vector<std::array<int, 3>> fs;
    for (const auto& f : faces(t))
        if (f[0] != w && f[1] != w && f[2] != w) fs.push_back(f);
    for (int k = i; k % d != j; ++k) fs.push_back({w, ring[k % d], ring[(k + 1) % d]});
    for (int k = j; k % d != i; ++k) fs.push_back({w2, ring[k % d], ring[(k + 1) % d]});
    fs.push_back({w, ring[j], w2});
    fs.push_back({w2, ring[i], w});
    auto labels = all_labels(t.graph);
    labels.push_back({fresh_label(t.graph)});
    return from_faces(n + 1, fs, std::move(labels));
}

}  // namespace mpg
