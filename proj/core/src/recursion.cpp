#include "mpg/recursion.hpp"

#include <algorithm>
#include <stdexcept>

#include "mpg/canonical.hpp"
#include "mpg/partitions.hpp"

namespace mpg {

Wheel4Report wheel4_identity_check(const ChromaticEngine& engine, const Triangulation& t, int v) {
    return wheel4_identity_check(engine, t, v, link_cycle(t, v).rim);
}

Wheel4Report wheel4_identity_check(const ChromaticEngine& engine, const Triangulation& t, int v, const std::vector<int>& rim) {
    auto [g1, g2] = contract_wheel4(t, v, rim);
    Wheel4Report rep;
    rep.host_form_hex = to_hex(canonical_form(t.graph));
    rep.vertex = v;
    rep.term1 = engine.count(g1, 4);
    rep.term2 = engine.count(g2, 4);
    rep.total = engine.count(t.graph, 4);
    rep.holds = rep.term1 + rep.term2 == rep.total;
    rep.g1_marker = is_marker(g1);
    rep.g2_marker = is_marker(g2);
    rep.g1_maximal = !rep.g1_marker && is_triangulation(as_graph(g1));
    rep.g2_maximal = !rep.g2_marker && is_triangulation(as_graph(g2));
    return rep;
}

Wheel5Report wheel5_identity_check(const ChromaticEngine& engine, const Triangulation& t, int v) {
    return wheel5_identity_check(engine, t, v, link_cycle(t, v).rim);
}

Wheel5Report wheel5_identity_check(const ChromaticEngine& engine, const Triangulation& t, int v, const std::vector<int>& rim) {
    Wheel5Contraction c = contract_wheel5(t, v, rim);
    Wheel5Report rep;
    rep.host_form_hex = to_hex(canonical_form(t.graph));
    rep.vertex = v;
    const std::array<std::pair<const ContractionOutcome*, const ContractionOutcome*>, 3> parts{{
        {&c.g1, &c.g1a}, {&c.g2, &c.g2a}, {&c.g3, &c.g3a}}};
    for (int i = 0; i < 3; ++i) {
        rep.brackets[i].base = engine.count(*parts[i].first, 4);
        rep.brackets[i].augmented = engine.count(*parts[i].second, 4);
        rep.brackets[i].marker = is_marker(*parts[i].first);
    }
    rep.total = engine.count(t.graph, 4);
    rep.holds = rep.brackets[0].value() + rep.brackets[1].value() + rep.brackets[2].value() == rep.total;
    rep.all_nonnegative = true;
    for (const auto& b : rep.brackets)
        if (b.value() < 0) rep.all_nonnegative = false;
    return rep;
}

std::string rim_pattern_name(int index) {
    const auto& p = kRimPatterns.at(index);
    auto pair = [](const std::pair<int, int>& q) {
        return "v" + std::to_string(q.first) + "=v" + std::to_string(q.second);
    };
    return pair(p[0]) + "&" + pair(p[1]);
}

std::map<std::string, BigInt> equality_pattern_counts(const Triangulation& t, int v) {
    if (t.graph.degree(v) != 5) throw std::invalid_argument("equality_pattern_counts: d(v) != 5");
    std::vector<int> rim = link_cycle(t, v).rim;
    Graph rest = delete_vertex(t.graph, v);
    auto shift = [v](int x) { return x > v ? x - 1 : x; };
    std::array<int, 5> rim_ids{};
    for (int k = 0; k < 5; ++k) rim_ids[k] = shift(rim[k]);

    std::map<std::string, BigInt> counts;
    for (int i = 0; i < 5; ++i) counts[rim_pattern_name(i)] = 0;
    for_each_proper_coloring(rest, 4, [&](const std::vector<int>& color) {
        for (int i = 0; i < 5; ++i) {
            bool both = true;
            for (const auto& [a, b] : kRimPatterns[i])
                if (color[rim_ids[a - 1]] != color[rim_ids[b - 1]]) both = false;
            if (both) {
                ++counts[rim_pattern_name(i)];
                break;  // patterns are mutually exclusive for a C5 rim
            }
        }
    });
    return counts;
}

std::string to_string(StepKind k) {
    switch (k) {
        case StepKind::Degree3Delete: return "degree3-delete";
        case StepKind::Wheel4Lift: return "wheel4-lift";
        case StepKind::Wheel5Lift: return "wheel5-lift";
        case StepKind::BaseCase: return "base-case";
        case StepKind::FallbackExhaustive: return "fallback-exhaustive";
    }
    return "?";
}

namespace {

// All recursion-level colorings are keyed by original root labels, which
// survive deletions and contractions unchanged; lifting a coloring through
// a contraction is then a plain map union.
void assign_vertex(const Graph& g, int v, int color, std::map<int, int>& m) {
    for (int l : g.labels(v)) m[l] = color;
}

std::map<int, int> coloring_from_vector(const Graph& g, const std::vector<int>& color, int base = 1) {
    std::map<int, int> m;
    for (int v = 0; v < g.order(); ++v) assign_vertex(g, v, color[v] + base, m);
    return m;
}

int free_color(const Graph& host, int v, const std::map<int, int>& coloring) {
    bool used[5] = {};
    for (int u : host.neighbors(v)) {
        auto it = coloring.find(host.labels(u).front());
        if (it != coloring.end() && it->second >= 1 && it->second <= 4) used[it->second] = true;
    }
    for (int c = 1; c <= 4; ++c)
        if (!used[c]) return c;
    throw std::logic_error("four_color: no free color for reinserted vertex");
}

void four_color_impl(const ChromaticEngine& engine, const Triangulation& t, ColoringCertificate& cert) {
    const Graph& g = t.graph;
    int n = g.order();
    if (n <= 4) {
        TraceStep step{StepKind::BaseCase};
        for (int v = 0; v < n; ++v) assign_vertex(g, v, v + 1, step.assigned);
        cert.coloring.insert(step.assigned.begin(), step.assigned.end());
        cert.trace.push_back(std::move(step));
        return;
    }
    int delta = min_degree(t);
    if (delta == 3) {
        int v = 0;
        while (g.degree(v) != 3) ++v;
        four_color_impl(engine, from_graph(delete_vertex(g, v)), cert);
        TraceStep step{StepKind::Degree3Delete, g.labels(v).front()};
        int c = free_color(g, v, cert.coloring);
        assign_vertex(g, v, c, step.assigned);
        cert.coloring.insert(step.assigned.begin(), step.assigned.end());
        cert.trace.push_back(std::move(step));
        return;
    }
    if (delta == 4) {
        int v = 0;
        while (g.degree(v) != 4) ++v;
        auto [g1, g2] = contract_wheel4(t, v);
        const ContractionOutcome* branches[2] = {&g1, &g2};
        for (int b = 0; b < 2; ++b) {
            const ContractionOutcome& o = *branches[b];
            if (is_marker(o) || engine.count(o, 4) == 0) continue;
            const Graph& h = as_graph(o);
            if (is_triangulation(h)) {
                four_color_impl(engine, from_graph(h), cert);
            } else {
                auto coloring = first_proper_coloring(h, 4);
                if (!coloring) continue;
                TraceStep sub{StepKind::FallbackExhaustive};
                sub.assigned = coloring_from_vector(h, *coloring);
                cert.coloring.insert(sub.assigned.begin(), sub.assigned.end());
                cert.trace.push_back(std::move(sub));
            }
            TraceStep step{StepKind::Wheel4Lift, g.labels(v).front(), b + 1};
            assign_vertex(g, v, free_color(g, v, cert.coloring), step.assigned);
            cert.coloring.insert(step.assigned.begin(), step.assigned.end());
            cert.trace.push_back(std::move(step));
            return;
        }
        throw std::logic_error("four_color: both degree-4 wheel branches vanish; host is not 4-colorable");
    }
    // delta == 5: search the 5-wheels for a contraction whose funnel is not
    // rainbow in some partition; that partition lifts
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 5) continue;
        Wheel5Contraction c = contract_wheel5(t, v);
        auto funnels = funnels_of_contraction(t, v);
        const ContractionOutcome* branches[3] = {&c.g1, &c.g2, &c.g3};
        for (int b = 0; b < 3; ++b) {
            if (is_marker(*branches[b]) || !funnels[b]) continue;
            const Graph& h = as_graph(*branches[b]);
            const Funnel& f = *funnels[b];
            for (const ColorPartition& p : enumerate_partitions(h)) {
                int cu = p.class_of(f.u), cx = p.class_of(f.x), cy = p.class_of(f.y), cz = p.class_of(f.z);
                bool rainbow = cu != cx && cu != cy && cu != cz && cx != cy && cx != cz && cy != cz;
                if (rainbow) continue;
                TraceStep step{StepKind::Wheel5Lift, g.labels(v).front(), b + 1};
                for (int u = 0; u < h.order(); ++u) assign_vertex(h, u, p.class_of(u) + 1, step.assigned);
                cert.coloring.insert(step.assigned.begin(), step.assigned.end());
                int vc = free_color(g, v, cert.coloring);
                assign_vertex(g, v, vc, step.assigned);
                for (int l : g.labels(v)) cert.coloring[l] = vc;
                cert.trace.push_back(std::move(step));
                return;
            }
        }
    }
    // every funnel of every 5-wheel is rainbow-only: the obstruction case
    auto coloring = first_proper_coloring(g, 4);
    if (!coloring) throw std::logic_error("four_color: exhaustive fallback found no coloring");
    TraceStep step{StepKind::FallbackExhaustive};
    step.assigned = coloring_from_vector(g, *coloring);
    cert.coloring.insert(step.assigned.begin(), step.assigned.end());
    cert.trace.push_back(std::move(step));
    cert.fallback_used = true;
}

}  // namespace

ColoringCertificate four_color(const ChromaticEngine& engine, const Triangulation& t) {
    ColoringCertificate cert;
    four_color_impl(engine, t, cert);
    return cert;
}

bool validate_certificate(const Triangulation& t, const ColoringCertificate& cert) {
    const Graph& g = t.graph;
    // proper 4-coloring covering every vertex
    for (int v = 0; v < g.order(); ++v) {
        auto it = cert.coloring.find(g.labels(v).front());
        if (it == cert.coloring.end() || it->second < 1 || it->second > 4) return false;
        for (int u : g.neighbors(v)) {
            auto jt = cert.coloring.find(g.labels(u).front());
            if (jt == cert.coloring.end() || jt->second == it->second) return false;
        }
    }
    // replaying the trace bottom-up reproduces the coloring
    std::map<int, int> replay;
    for (const TraceStep& step : cert.trace)
        for (const auto& [label, color] : step.assigned) replay[label] = color;
    return replay == cert.coloring;
}

std::vector<FunnelObstruction> find_funnel_obstructions(const Triangulation& t) {
    if (min_degree(t) != 5) throw std::invalid_argument("find_funnel_obstructions: minimum degree must be 5");
    std::vector<FunnelObstruction> out;
    for (int v = 0; v < t.order(); ++v) {
        if (t.graph.degree(v) != 5) continue;
        FunnelObstruction rec;
        rec.vertex = v;
        Wheel5Contraction c = contract_wheel5(t, v);
        auto funnels = funnels_of_contraction(t, v);
        const ContractionOutcome* branches[3] = {&c.g1, &c.g2, &c.g3};
        rec.obstruction = true;
        for (int b = 0; b < 3; ++b) {
            if (is_marker(*branches[b]) || !funnels[b]) continue;  // marker branch contributes nothing
            const Graph& h = as_graph(*branches[b]);
            rec.rainbow_only[b] = is_4chromatic_funnel(h, *funnels[b]);
            if (!*rec.rainbow_only[b]) rec.obstruction = false;
        }
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace mpg
