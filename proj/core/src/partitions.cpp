#include "mpg/partitions.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mpg {

int ColorPartition::class_of(int v) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
        if ((classes[i] >> v) & 1u) return static_cast<int>(i);
    return -1;
}

namespace {

void order_classes(ColorPartition& p) {
    std::sort(p.classes.begin(), p.classes.end(), [](std::uint64_t a, std::uint64_t b) {
        return std::countr_zero(a) < std::countr_zero(b);
    });
}

void enumerate_rec(const Graph& g, int v, int used, std::array<std::uint64_t, 4>& cls, std::vector<ColorPartition>& out) {
    if (v == g.order()) {
        ColorPartition p;
        for (int c = 0; c < used; ++c) p.classes.push_back(cls[c]);
        order_classes(p);
        out.push_back(std::move(p));
        return;
    }
    // restricted growth: vertex v may join an existing class or open the
    // next one, so each unordered partition is produced exactly once
    int limit = std::min(used + 1, 4);
    for (int c = 0; c < limit; ++c) {
        if (g.neighbor_mask(v) & cls[c]) continue;  // class must stay independent
        cls[c] |= std::uint64_t{1} << v;
        enumerate_rec(g, v + 1, std::max(used, c + 1), cls, out);
        cls[c] &= ~(std::uint64_t{1} << v);
    }
}

}  // namespace

std::vector<ColorPartition> enumerate_partitions(const Graph& g) {
    if (g.order() > 32) throw std::invalid_argument("enumerate_partitions: order beyond the desk-scale guard (32)");
    if (g.order() == 0) return {ColorPartition{}};
    std::array<std::uint64_t, 4> cls{0, 0, 0, 0};
    std::vector<ColorPartition> out;
    enumerate_rec(g, 0, 0, cls, out);
    return out;
}

bool partition_count_identity(const Graph& g, const BigInt& count_at_4) {
    return BigInt(enumerate_partitions(g).size()) * 24 == count_at_4;
}

std::optional<std::array<int, 4>> is_coordinated(const Graph& g) {
    return is_coordinated(g, enumerate_partitions(g));
}

std::optional<std::array<int, 4>> is_coordinated(const Graph& g, const std::vector<ColorPartition>& partitions) {
    if (partitions.empty()) return std::nullopt;
    for (const auto& p : partitions)
        if (p.class_count() < 4) return std::nullopt;
    int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    bool ok = true;
                    for (const auto& p : partitions) {
                        int ca = p.class_of(a), cb = p.class_of(b), cc = p.class_of(c), cd = p.class_of(d);
                        if (ca == cb || ca == cc || ca == cd || cb == cc || cb == cd || cc == cd) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) return std::array<int, 4>{a, b, c, d};
                }
    return std::nullopt;
}

bool is_4chromatic_funnel(const Graph& g, const Funnel& f) {
    return is_4chromatic_funnel(g, f, enumerate_partitions(g));
}

bool is_4chromatic_funnel(const Graph& g, const Funnel& f, const std::vector<ColorPartition>& partitions) {
    for (auto [a, b] : {std::pair{f.u, f.x}, {f.x, f.y}, {f.x, f.z}, {f.y, f.z}})
        if (!g.has_edge(a, b))
            throw std::invalid_argument("invalid funnel: edge (" + std::to_string(a) + "," + std::to_string(b) + ") missing");
    for (const auto& p : partitions) {
        int cu = p.class_of(f.u), cx = p.class_of(f.x), cy = p.class_of(f.y), cz = p.class_of(f.z);
        if (cu == cx || cu == cy || cu == cz || cx == cy || cx == cz || cy == cz) return false;
    }
    return true;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::NotFourColorable: return "not-4-colorable";
        case Verdict::NonCoordinated: return "non-coordinated";
        case Verdict::Uniquely: return "uniquely";
        case Verdict::QuasiUniquely: return "quasi-uniquely";
        case Verdict::PseudoUniquely: return "pseudo-uniquely";
    }
    return "?";
}

namespace {

bool uniquely_four_colorable(const Graph& g) {
    auto ps = enumerate_partitions(g);
    return ps.size() == 1 && ps[0].class_count() == 4;
}

}  // namespace

Classification classify(const Graph& g, std::optional<int> cap) {
    Classification out;
    out.search_cap = cap.value_or(g.order());
    auto partitions = enumerate_partitions(g);
    if (partitions.empty()) {
        out.verdict = Verdict::NotFourColorable;
        return out;
    }
    if (partitions.size() == 1 && partitions[0].class_count() == 4) {
        out.verdict = Verdict::Uniquely;
        out.unique_partition = partitions[0];
        out.coordinated_tuple = is_coordinated(g, partitions);
        return out;
    }
    auto tuple = is_coordinated(g, partitions);
    if (!tuple) {
        out.verdict = Verdict::NonCoordinated;
        return out;
    }
    out.coordinated_tuple = tuple;
    // bounded search for an induced uniquely-4-colorable subgraph, smallest first
    int n = g.order();
    for (int size = 4; size <= std::min(out.search_cap, n); ++size) {
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            std::uint64_t mask = 0;
            for (int i : idx) mask |= std::uint64_t{1} << i;
            if (uniquely_four_colorable(induced_subgraph(g, mask))) {
                out.verdict = Verdict::QuasiUniquely;
                out.unique_subgraph = idx;
                return out;
            }
            int i = size - 1;
            while (i >= 0 && idx[i] == n - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    out.verdict = Verdict::PseudoUniquely;
    return out;
}

}  // namespace mpg
