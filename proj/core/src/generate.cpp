#include "mpg/generate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>

#include "mpg/canonical.hpp"
#include "mpg/named_graphs.hpp"

namespace mpg {

namespace {

using Level = std::map<CanonicalForm, Triangulation>;

// Scheduling-independent representative: keep the labeled copy with the
// lexicographically least adjacency (then rotation) within its class.
bool precedes(const Triangulation& a, const Triangulation& b) {
    for (int v = 0; v < a.order(); ++v)
        if (a.graph.neighbor_mask(v) != b.graph.neighbor_mask(v)) return a.graph.neighbor_mask(v) < b.graph.neighbor_mask(v);
    return a.rotation < b.rotation;
}

void insert_min(Level& out, CanonicalForm form, Triangulation child) {
    auto it = out.find(form);
    if (it == out.end())
        out.emplace(std::move(form), std::move(child));
    else if (precedes(child, it->second))
        it->second = std::move(child);
}

// All splits of all vertices of one parent triangulation.
void expand(const Triangulation& t, Level& out) {
    for (int w = 0; w < t.order(); ++w) {
        int d = t.graph.degree(w);
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                Triangulation child = split_vertex(t, w, i, j);
                insert_min(out, canonical_form(child.graph), child);
            }
    }
}

Level next_level(const Level& parents, int jobs) {
    std::vector<const Triangulation*> work;
    work.reserve(parents.size());
    for (const auto& [form, t] : parents) work.push_back(&t);

    if (jobs <= 1 || work.size() < 8) {
        Level out;
        for (const Triangulation* t : work) expand(*t, out);
        return out;
    }
    std::vector<Level> partial(jobs);
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> threads;
    for (int k = 0; k < jobs; ++k)
        threads.emplace_back([&, k] {
            for (std::size_t i = cursor.fetch_add(1); i < work.size(); i = cursor.fetch_add(1)) expand(*work[i], partial[k]);
        });
    for (auto& th : threads) th.join();
    Level out = std::move(partial[0]);
    for (int k = 1; k < jobs; ++k)
        for (auto& [form, t] : partial[k]) insert_min(out, form, std::move(t));
    return out;
}

}  // namespace

GenerationReport generate_all(int n, std::optional<int> min_degree_filter, int jobs) {
    if (n < kMinGenerationOrder || n > kMaxGenerationOrder)
        throw std::invalid_argument("generate_all: order " + std::to_string(n) + " outside [" + std::to_string(kMinGenerationOrder) + "," + std::to_string(kMaxGenerationOrder) + "]");

    Graph k4 = complete_graph(4);
    Level level;
    level.emplace(canonical_form(k4), from_graph(k4));
    for (int order = 5; order <= n; ++order) level = next_level(level, jobs);

    GenerationReport report;
    report.order = n;
    for (auto& [form, t] : level) {
        ++report.counts_by_min_degree[min_degree(t)];
        if (!min_degree_filter || min_degree(t) == *min_degree_filter) report.graphs.push_back(std::move(t));
    }
    return report;
}

}  // namespace mpg
