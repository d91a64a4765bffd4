// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure, plus the reportable funnel-obstruction sweep at the end.

#include <chrono>
#include <cstdio>
#include <random>
#include <thread>
#include <vector>

#include "mpg/canonical.hpp"
#include "mpg/chromatic.hpp"
#include "mpg/generate.hpp"
#include "mpg/named_graphs.hpp"
#include "mpg/partitions.hpp"
#include "mpg/recursion.hpp"

using namespace mpg;

namespace {

int g_jobs = 1;
int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); }
};

void report(int index, const char* name, bool ok, double seconds, double budget_s, const std::string& detail) {
    bool in_budget = seconds < budget_s;
    if (!(ok && in_budget)) ++g_failures;
    std::printf("%s criterion-%d %s (%.1fs / budget %.0fs): %s\n",
                ok && in_budget ? "PASS" : "FAIL", index, name, seconds, budget_s, detail.c_str());
    std::fflush(stdout);
}

std::vector<Triangulation> corpus_range(int lo, int hi) {
    std::vector<Triangulation> out;
    for (int n = lo; n <= hi; ++n)
        for (Triangulation& t : generate_all(n, std::nullopt, g_jobs).graphs) out.push_back(std::move(t));
    return out;
}

// Seeded random planar graph: a random triangulation with a few random
// edge deletions (stays planar; need not stay maximal or connected).
Graph random_planar(std::mt19937& rng) {
    int n = 5 + static_cast<int>(rng() % 6);  // 5..10
    Triangulation t = from_graph(complete_graph(4));
    while (t.order() < n) {
        int w = static_cast<int>(rng() % t.order());
        int d = t.graph.degree(w);
        int i = static_cast<int>(rng() % d), j = static_cast<int>(rng() % d);
        if (i == j) continue;
        t = split_vertex(t, w, std::min(i, j), std::max(i, j));
    }
    Graph g = t.graph;
    int drops = static_cast<int>(rng() % 4);
    for (int k = 0; k < drops; ++k) {
        int u = static_cast<int>(rng() % n), w = static_cast<int>(rng() % n);
        if (u != w && g.has_edge(u, w)) g.clear_edge(u, w);
    }
    return g;
}

void criterion1_oracle_equivalence() {
    Timer timer;
    ChromaticEngine engine;
    long long checks = 0, bad = 0;
    for (const Triangulation& t : corpus_range(4, 8))
        for (int c = 1; c <= 6; ++c) {
            ++checks;
            if (engine.count(t.graph, c) != brute_force_count(t.graph, c)) ++bad;
        }
    std::mt19937 rng(20260823);
    for (int rep = 0; rep < 200; ++rep) {
        Graph g = random_planar(rng);
        for (int c = 1; c <= 6; ++c) {
            ++checks;
            if (engine.count(g, c) != brute_force_count(g, c)) ++bad;
        }
    }
    report(1, "oracle-equivalence", bad == 0, timer.seconds(), 120,
           std::to_string(checks) + " evaluations, " + std::to_string(bad) + " mismatches");
}

void criterion2_wheel4_identity(const ChromaticEngine& engine, const std::vector<Triangulation>& hosts) {
    Timer timer;
    long long checks = 0, bad = 0;
    for (const Triangulation& t : hosts) {
        if (t.order() < 5) continue;
        for (int v = 0; v < t.order(); ++v) {
            if (t.graph.degree(v) != 4) continue;
            ++checks;
            if (!wheel4_identity_check(engine, t, v).holds) ++bad;
        }
    }
    report(2, "degree4-wheel-identity", bad == 0, timer.seconds(), 600,
           std::to_string(checks) + " wheels, " + std::to_string(bad) + " violations");
}

void criterion3_wheel5_identity(const ChromaticEngine& engine, const std::vector<Triangulation>& hosts,
                                std::vector<std::pair<const Triangulation*, int>>& wheels_out) {
    Timer timer;
    long long checks = 0, bad = 0, negative = 0;
    for (const Triangulation& t : hosts) {
        if (t.order() < 6) continue;
        for (int v = 0; v < t.order(); ++v) {
            if (t.graph.degree(v) != 5) continue;
            ++checks;
            wheels_out.push_back({&t, v});
            Wheel5Report rep = wheel5_identity_check(engine, t, v);
            if (!rep.holds) ++bad;
            if (!rep.all_nonnegative) ++negative;
        }
    }
    report(3, "degree5-wheel-identity", bad == 0 && negative == 0, timer.seconds(), 900,
           std::to_string(checks) + " wheels, " + std::to_string(bad) + " violations, " +
               std::to_string(negative) + " negative brackets");
}

void criterion4_degree3_reduction(const ChromaticEngine& engine, const std::vector<Triangulation>& hosts) {
    Timer timer;
    long long checks = 0, bad = 0;
    Polynomial factor({-3, 1});  // t - 3
    for (const Triangulation& t : hosts) {
        if (t.order() < 5) continue;
        for (int v = 0; v < t.order(); ++v) {
            if (t.graph.degree(v) != 3) continue;
            ++checks;
            if (engine.polynomial(t.graph) != factor * engine.polynomial(delete_vertex(t.graph, v))) ++bad;
        }
    }
    report(4, "degree3-reduction", bad == 0, timer.seconds(), 600,
           std::to_string(checks) + " vertices, " + std::to_string(bad) + " violations");
}

void criterion5_separator_product(const ChromaticEngine& engine, const std::vector<Triangulation>& hosts) {
    Timer timer;
    ChromaticEngine plain({.use_memo = true, .use_separator = false});
    long long with_separator = 0, bad = 0;
    for (const Triangulation& t : hosts) {
        auto split = clique_separator_split(t.graph);
        if (!split) continue;
        auto& [g1, g2, k] = *split;
        ++with_separator;
        Polynomial product = (engine.polynomial(g1) * engine.polynomial(g2)).divide_exact(Polynomial::falling_factorial(k));
        if (product != plain.polynomial(t.graph)) ++bad;
    }
    report(5, "separator-product-rule", bad == 0, timer.seconds(), 600,
           std::to_string(with_separator) + " separable hosts, " + std::to_string(bad) + " violations");
}

void criterion6_generator(std::vector<Triangulation>& deg5_corpus) {
    Timer timer;
    const std::size_t expected[] = {1, 1, 2, 5, 14};
    bool ok = true;
    std::string detail;
    for (int n = 4; n <= 8; ++n) {
        std::size_t got = generate_all(n, std::nullopt, g_jobs).graphs.size();
        if (got != expected[n - 4]) ok = false;
        detail += std::to_string(got) + (n < 8 ? "," : " classes for n=4..8; ");
    }
    GenerationReport g12 = generate_all(12, 5, g_jobs);
    bool ico_ok = g12.graphs.size() == 1 && canonical_form(g12.graphs[0].graph) == canonical_form(icosahedron());
    if (!ico_ok) ok = false;
    detail += "n=12 deg5 -> " + std::to_string(g12.graphs.size()) + " (icosahedron " + (ico_ok ? "yes" : "NO") + "); ";
    for (Triangulation& t : g12.graphs) deg5_corpus.push_back(std::move(t));

    GenerationReport g13 = generate_all(13, 5, g_jobs);
    if (!g13.graphs.empty()) ok = false;
    detail += "n=13 deg5 -> " + std::to_string(g13.graphs.size());
    for (Triangulation& t : g13.graphs) deg5_corpus.push_back(std::move(t));
    report(6, "generator-correctness", ok, timer.seconds(), 1800, detail);
}

void criterion7_partition_identity(const ChromaticEngine& engine, const std::vector<Triangulation>& hosts) {
    Timer timer;
    long long bad = 0;
    for (const Triangulation& t : hosts)
        if (!partition_count_identity(t.graph, engine.count(t.graph, 4))) ++bad;
    report(7, "partition-count-identity", bad == 0, timer.seconds(), 600,
           std::to_string(hosts.size()) + " hosts, " + std::to_string(bad) + " violations");
}

void criterion8_constructive_coloring(const ChromaticEngine& engine) {
    Timer timer;
    long long graphs = 0, bad = 0, fallbacks = 0;
    for (int n = 4; n <= 12; ++n)
        for (const Triangulation& t : generate_all(n, std::nullopt, g_jobs).graphs) {
            ++graphs;
            ColoringCertificate cert = four_color(engine, t);
            if (!validate_certificate(t, cert)) ++bad;
            if (cert.fallback_used) ++fallbacks;
        }
    report(8, "constructive-coloring", bad == 0, timer.seconds(), 1800,
           std::to_string(graphs) + " triangulations (icosahedron included), " + std::to_string(bad) +
               " invalid certificates, " + std::to_string(fallbacks) + " fallbacks");
}

void criterion9_pattern_partition(const ChromaticEngine& engine,
                                  const std::vector<std::pair<const Triangulation*, int>>& wheels) {
    Timer timer;
    long long bad = 0;
    for (auto [t, v] : wheels) {
        auto counts = equality_pattern_counts(*t, v);
        BigInt sum = 0;
        for (const auto& [name, c] : counts) {
            if (c < 0) ++bad;
            sum += c;
        }
        if (sum != engine.count(t->graph, 4)) ++bad;
    }
    report(9, "rim-pattern-partition", bad == 0, timer.seconds(), 900,
           std::to_string(wheels.size()) + " wheels, " + std::to_string(bad) + " violations");
}

void obstruction_sweep(const std::vector<Triangulation>& deg5_corpus) {
    // reportable, not pass/fail: min-degree-5 hosts with n <= 13
    std::printf("REPORT funnel-obstruction sweep over the min-degree-5 corpus (n <= 13):\n");
    for (const Triangulation& t : deg5_corpus) {
        int blocked = 0;
        for (const FunnelObstruction& o : find_funnel_obstructions(t)) blocked += o.obstruction;
        std::printf("REPORT   order %d, form %s: %d obstructed vertices\n",
                    t.order(), to_hex(canonical_form(t.graph)).c_str(), blocked);
    }
    std::fflush(stdout);
}

}  // namespace

int main() {
    g_jobs = std::max(1u, std::thread::hardware_concurrency());
    ChromaticEngine engine;

    criterion1_oracle_equivalence();
    std::vector<Triangulation> hosts = corpus_range(4, 10);
    hosts.push_back(from_graph(icosahedron()));
    criterion2_wheel4_identity(engine, hosts);
    std::vector<std::pair<const Triangulation*, int>> wheels5;
    criterion3_wheel5_identity(engine, hosts, wheels5);
    criterion4_degree3_reduction(engine, hosts);
    criterion5_separator_product(engine, hosts);
    std::vector<Triangulation> deg5_corpus;
    criterion6_generator(deg5_corpus);
    criterion7_partition_identity(engine, hosts);
    criterion8_constructive_coloring(engine);
    criterion9_pattern_partition(engine, wheels5);
    obstruction_sweep(deg5_corpus);

    std::printf("%s: %d criterion failure(s)\n", g_failures ? "FAIL" : "PASS", g_failures);
    return g_failures ? 1 : 0;
}
