#include "mpg/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace mpg {

namespace {

using Cells = std::vector<std::uint64_t>;  // ordered cell masks

// Equitable refinement: split cells by neighbor counts into every cell,
// iterated to a fixed point. Cell order is deterministic.
void refine(const Graph& g, Cells& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        Cells next;
        next.reserve(cells.size());
        for (std::uint64_t cell : cells) {
            if (std::popcount(cell) == 1) {
                next.push_back(cell);
                continue;
            }
            // signature: neighbor count into each current cell
            std::vector<std::pair<std::vector<int>, std::uint64_t>> groups;
            for (std::uint64_t m = cell; m; m &= m - 1) {
                int v = std::countr_zero(m);
                std::vector<int> sig;
                sig.reserve(cells.size());
                for (std::uint64_t c : cells) sig.push_back(std::popcount(g.neighbor_mask(v) & c));
                bool placed = false;
                for (auto& [gsig, gmask] : groups)
                    if (gsig == sig) {
                        gmask |= std::uint64_t{1} << v;
                        placed = true;
                        break;
                    }
                if (!placed) groups.push_back({std::move(sig), std::uint64_t{1} << v});
            }
            if (groups.size() > 1) {
                changed = true;
                std::sort(groups.begin(), groups.end());
            }
            for (auto& [gsig, gmask] : groups) next.push_back(gmask);
        }
        cells = std::move(next);
    }
}

std::string cert_for(const Graph& g, const Cells& discrete) {
    int n = g.order();
    std::vector<int> pos(n);  // vertex -> canonical position
    for (int i = 0; i < static_cast<int>(discrete.size()); ++i) pos[std::countr_zero(discrete[i])] = i;
    std::vector<int> vert(n);  // canonical position -> vertex
    for (int v = 0; v < n; ++v) vert[pos[v]] = v;
    std::string out;
    out.push_back(static_cast<char>(n));
    int bitpos = 0;
    unsigned char cur = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            cur = static_cast<unsigned char>(cur << 1);
            if (g.has_edge(vert[i], vert[j])) cur |= 1;
            if (++bitpos == 8) {
                out.push_back(static_cast<char>(cur));
                bitpos = 0;
                cur = 0;
            }
        }
    if (bitpos) out.push_back(static_cast<char>(cur << (8 - bitpos)));
    return out;
}

void search(const Graph& g, Cells cells, std::string& best, bool& have) {
    refine(g, cells);
    auto it = std::find_if(cells.begin(), cells.end(), [](std::uint64_t c) { return std::popcount(c) > 1; });
    if (it == cells.end()) {
        std::string cand = cert_for(g, cells);
        if (!have || cand < best) {
            best = std::move(cand);
            have = true;
        }
        return;
    }
    std::size_t idx = static_cast<std::size_t>(it - cells.begin());
    std::uint64_t cell = *it;
    for (std::uint64_t m = cell; m; m &= m - 1) {
        std::uint64_t v = std::uint64_t{1} << std::countr_zero(m);
        Cells branch;
        branch.reserve(cells.size() + 1);
        branch.insert(branch.end(), cells.begin(), cells.begin() + idx);
        branch.push_back(v);
        branch.push_back(cell & ~v);
        branch.insert(branch.end(), cells.begin() + idx + 1, cells.end());
        search(g, std::move(branch), best, have);
    }
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    int n = g.order();
    if (n == 0) return std::string(1, '\0');
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::string best;
    bool have = false;
    search(g, {all}, best, have);
    return best;
}

std::string to_hex(const CanonicalForm& form) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(form.size() * 2);
    for (unsigned char c : form) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

}  // namespace mpg
