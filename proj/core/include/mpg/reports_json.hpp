#ifndef MPG_REPORTS_JSON_HPP
#define MPG_REPORTS_JSON_HPP

#include <json.hpp>

#include "mpg/chromatic.hpp"
#include "mpg/partitions.hpp"
#include "mpg/recursion.hpp"

namespace mpg {

// Report records as JSON objects: integers in decimal (big values as
// decimal strings), canonical forms as hex strings, partitions as sorted
// lists of sorted id lists.

inline nlohmann::json to_json(const BigInt& v) { return v.str(); }

inline nlohmann::json to_json(const Wheel4Report& r) {
    return {{"host", r.host_form_hex}, {"vertex", r.vertex},
            {"term1", to_json(r.term1)}, {"term2", to_json(r.term2)},
            {"total", to_json(r.total)}, {"holds", r.holds},
            {"g1_marker", r.g1_marker}, {"g2_marker", r.g2_marker},
            {"g1_maximal", r.g1_maximal}, {"g2_maximal", r.g2_maximal}};
}

inline nlohmann::json to_json(const Wheel5Report& r) {
    nlohmann::json brackets = nlohmann::json::array();
    for (const auto& b : r.brackets)
        brackets.push_back({{"base", to_json(b.base)}, {"augmented", to_json(b.augmented)},
                            {"value", to_json(b.value())}, {"marker", b.marker}});
    return {{"host", r.host_form_hex}, {"vertex", r.vertex}, {"brackets", brackets},
            {"total", to_json(r.total)}, {"holds", r.holds}, {"all_nonnegative", r.all_nonnegative}};
}

inline nlohmann::json to_json(const CountReport& r) {
    return {{"form", r.form_hex}, {"t", r.t}, {"value", to_json(r.value)}, {"method", r.method}};
}

inline nlohmann::json to_json(const ColorPartition& p, const Graph& g) {
    nlohmann::json classes = nlohmann::json::array();
    for (auto mask : p.classes) {
        nlohmann::json cls = nlohmann::json::array();
        for (int v = 0; v < g.order(); ++v)
            if ((mask >> v) & 1u) cls.push_back(v);
        classes.push_back(cls);
    }
    return classes;
}

inline nlohmann::json to_json(const Classification& c, const Graph& g) {
    nlohmann::json out{{"verdict", to_string(c.verdict)}, {"cap", c.search_cap}};
    if (c.unique_partition) out["unique_partition"] = to_json(*c.unique_partition, g);
    if (c.coordinated_tuple) out["coordinated"] = *c.coordinated_tuple;
    if (c.unique_subgraph) out["unique_subgraph"] = *c.unique_subgraph;
    return out;
}

inline nlohmann::json to_json(const ColoringCertificate& cert) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : cert.trace) {
        nlohmann::json step{{"kind", to_string(s.kind)}};
        if (s.vertex >= 0) step["vertex"] = s.vertex;
        if (s.branch >= 0) step["branch"] = s.branch;
        nlohmann::json assigned = nlohmann::json::object();
        for (const auto& [label, color] : s.assigned) assigned[std::to_string(label)] = color;
        step["assigned"] = assigned;
        steps.push_back(step);
    }
    nlohmann::json coloring = nlohmann::json::object();
    for (const auto& [label, color] : cert.coloring) coloring[std::to_string(label)] = color;
    return {{"coloring", coloring}, {"trace", steps}, {"fallback_used", cert.fallback_used}};
}

inline nlohmann::json to_json(const FunnelObstruction& o) {
    nlohmann::json flags = nlohmann::json::array();
    for (const auto& f : o.rainbow_only)
        flags.push_back(f ? nlohmann::json(*f) : nlohmann::json(nullptr));
    return {{"vertex", o.vertex}, {"rainbow_only", flags}, {"obstruction", o.obstruction}};
}

}  // namespace mpg

#endif
