#include "mpg/chromatic.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mpg {

namespace {

void count_rec(const Graph& g, int t, int v, std::vector<int>& color, BigInt& acc) {
    if (v == g.order()) {
        ++acc;
        return;
    }
    for (int c = 0; c < t; ++c) {
        bool ok = true;
        for (std::uint64_t m = g.neighbor_mask(v) & ((std::uint64_t{1} << v) - 1); m; m &= m - 1)
            if (color[std::countr_zero(m)] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[v] = c;
        count_rec(g, t, v + 1, color, acc);
    }
}

bool is_complete(const Graph& g) { return g.edge_count() == g.order() * (g.order() - 1) / 2; }

bool visit_rec(const Graph& g, int t, int v, std::vector<int>& color, const std::function<bool(const std::vector<int>&)>& fn) {
    if (v == g.order()) return fn(color);
    for (int c = 0; c < t; ++c) {
        bool ok = true;
        for (std::uint64_t m = g.neighbor_mask(v) & ((std::uint64_t{1} << v) - 1); m; m &= m - 1)
            if (color[std::countr_zero(m)] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[v] = c;
        if (!visit_rec(g, t, v + 1, color, fn)) return false;
    }
    return true;
}

}  // namespace

void for_each_proper_coloring(const Graph& g, int t, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> color(g.order(), -1);
    visit_rec(g, t, 0, color, [&](const std::vector<int>& c) {
        fn(c);
        return true;
    });
}

std::optional<std::vector<int>> first_proper_coloring(const Graph& g, int t) {
    std::vector<int> color(g.order(), -1);
    std::optional<std::vector<int>> out;
    visit_rec(g, t, 0, color, [&](const std::vector<int>& c) {
        out = c;
        return false;
    });
    return out;
}

BigInt brute_force_count(const Graph& g, int t) {
    if (t < 0) throw std::invalid_argument("brute_force_count: negative color count");
    if (t == 0) return g.order() == 0 ? 1 : 0;
    if (g.order() * std::log2(static_cast<double>(t) + 1) > 52)
        throw std::invalid_argument("brute_force_count: t^n beyond the enumeration guard");
    if (g.order() == 0 && t >= 1) return 1;
    std::vector<int> color(g.order(), -1);
    BigInt acc = 0;
    count_rec(g, t, 0, color, acc);
    return acc;
}

std::optional<std::tuple<Graph, Graph, int>> clique_separator_split(const Graph& g) {
    int n = g.order();
    if (n < 3) return std::nullopt;
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<int> subset;
    // subsets in lexicographic order, size 1..4; planar graphs have no K5,
    // so larger separators cannot be cliques here
    auto try_subset = [&](std::uint64_t smask) -> std::optional<std::tuple<Graph, Graph, int>> {
        for (std::uint64_t m = smask; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if ((g.neighbor_mask(v) & (smask & (m - 1))) != (smask & (m - 1))) return std::nullopt;  // not a clique
        }
        Graph rest = induced_subgraph(g, all & ~smask);
        auto comps = components(rest);
        if (comps.size() < 2) return std::nullopt;
        // map component masks back to original ids
        std::vector<int> origin;
        for (int v = 0; v < n; ++v)
            if (!((smask >> v) & 1u)) origin.push_back(v);
        std::uint64_t c1 = 0;
        for (int i = 0; i < rest.order(); ++i)
            if ((comps[0] >> i) & 1u) c1 |= std::uint64_t{1} << origin[i];
        Graph g1 = induced_subgraph(g, smask | c1);
        Graph g2 = induced_subgraph(g, all & ~c1);
        return std::make_tuple(std::move(g1), std::move(g2), std::popcount(smask));
    };
    for (int k = 1; k <= std::min(4, n - 2); ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::uint64_t smask = 0;
            for (int i : idx) smask |= std::uint64_t{1} << i;
            if (auto r = try_subset(smask)) return r;
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

Polynomial ChromaticEngine::polynomial(const ContractionOutcome& o) const {
    if (is_marker(o)) return Polynomial::zero();
    return polynomial(as_graph(o));
}

Polynomial ChromaticEngine::polynomial(const Graph& g) const { return recurse(g); }

Polynomial ChromaticEngine::recurse(const Graph& g) const {
    int n = g.order();
    if (n == 0) return Polynomial::constant(1);
    int m = g.edge_count();
    if (m == 0) return Polynomial::power(n);

    std::string key;
    if (opts_.use_memo) {
        key = canonical_form(g);
        std::lock_guard lock(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }

    Polynomial result;
    if (is_complete(g)) {
        result = Polynomial::falling_factorial(n);
    } else {
        auto comps = components(g);
        if (comps.size() > 1) {
            result = Polynomial::constant(1);
            for (auto c : comps) result = result * recurse(induced_subgraph(g, c));
        } else if (m == n - 1) {
            // tree: t(t-1)^{n-1}
            result = Polynomial({0, 1});
            Polynomial tm1({-1, 1});
            for (int i = 0; i < n - 1; ++i) result = result * tm1;
        } else {
            std::optional<std::tuple<Graph, Graph, int>> split;
            if (opts_.use_separator) split = clique_separator_split(g);
            if (split) {
                auto& [g1, g2, k] = *split;
                result = (recurse(g1) * recurse(g2)).divide_exact(Polynomial::falling_factorial(k));
            } else {
                // deletion-contraction on an edge maximizing degree sum, ties by id
                int bu = -1, bw = -1, bscore = -1;
                for (int u = 0; u < n; ++u)
                    for (int w : g.neighbors(u)) {
                        if (w <= u) continue;
                        int score = g.degree(u) + g.degree(w);
                        if (score > bscore) {
                            bscore = score;
                            bu = u;
                            bw = w;
                        }
                    }
                Graph del = g;
                del.clear_edge(bu, bw);
                result = recurse(del) - recurse(contract_edge(g, bu, bw));
            }
        }
    }

    if (opts_.use_memo) {
        std::lock_guard lock(mu_);
        memo_.emplace(std::move(key), result);  // idempotent: duplicates are equal
    }
    return result;
}

std::size_t ChromaticEngine::cache_size() const {
    std::lock_guard lock(mu_);
    return memo_.size();
}

void ChromaticEngine::load_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) return;  // absent cache is an empty cache
    std::string line;
    std::lock_guard lock(mu_);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string hex;
        ss >> hex;
        if (hex.size() % 2 != 0) throw std::runtime_error("memo cache: bad canonical form " + hex);
        std::string form;
        for (std::size_t i = 0; i < hex.size(); i += 2) form.push_back(static_cast<char>(std::stoi(hex.substr(i, 2), nullptr, 16)));
        std::vector<BigInt> coeffs;
        std::string tok;
        while (ss >> tok) coeffs.emplace_back(tok);
        memo_.emplace(std::move(form), Polynomial(std::move(coeffs)));
    }
}

void ChromaticEngine::save_cache(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("memo cache: cannot write " + path);
    std::lock_guard lock(mu_);
    for (const auto& [form, poly] : memo_) {
        out << to_hex(form);
        for (const BigInt& c : poly.coefficients()) out << ' ' << c.str();
        out << '\n';
    }
}

CountReport count_colorings(const ChromaticEngine& engine, const ContractionOutcome& o, int t, bool cross_check) {
    CountReport rep;
    rep.t = t;
    if (is_marker(o)) {
        rep.form_hex = "";
        rep.value = 0;
        rep.method = "recursion";  // zero-polynomial convention
        return rep;
    }
    const Graph& g = as_graph(o);
    rep.form_hex = to_hex(canonical_form(g));
    bool tiny = g.order() <= 6;
    if (tiny || cross_check) {
        rep.value = brute_force_count(g, t);
        rep.method = "oracle";
        if (cross_check || !tiny) {
            BigInt via_poly = engine.count(g, BigInt(t));
            if (via_poly != rep.value)
                throw std::logic_error("count_colorings: oracle/polynomial disagreement (" + rep.value.str() + " vs " + via_poly.str() + ")");
        }
        return rep;
    }
    rep.value = engine.count(g, BigInt(t));
    rep.method = is_connected(g) && clique_separator_split(g) ? "product-rule" : "recursion";
    return rep;
}

}  // namespace mpg
