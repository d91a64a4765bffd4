#ifndef MPG_CHROMATIC_HPP
#define MPG_CHROMATIC_HPP

#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>

#include "mpg/canonical.hpp"
#include "mpg/graph.hpp"
#include "mpg/polynomial.hpp"

namespace mpg {

/// Exact count of proper colorings V -> {1..t} by backtracking. Independent
/// of the polynomial path; used as the oracle throughout.
BigInt brute_force_count(const Graph& g, int t);

/// Visit every proper coloring (colors 0..t-1) by the same backtracking.
void for_each_proper_coloring(const Graph& g, int t, const std::function<void(const std::vector<int>&)>& fn);

/// First proper t-coloring found, if any.
std::optional<std::vector<int>> first_proper_coloring(const Graph& g, int t);

/// Separating clique of size k <= 4, if one exists: returns (G1, G2, k)
/// with G1 = G[S ∪ C1], G2 = G[S ∪ rest], G1 ∩ G2 = complete graph on S.
/// Requires a connected graph; returns nullopt when none exists.
std::optional<std::tuple<Graph, Graph, int>> clique_separator_split(const Graph& g);

struct ChromaticOptions {
    bool use_memo = true;
    bool use_separator = true;
};

/// Deletion-contraction engine with closed-form base cases, the
/// clique-separator product rule, and memoization on canonical forms.
/// Thread-safe: the memo cache is a mutex-guarded map with idempotent insert.
class ChromaticEngine {
public:
    ChromaticEngine() = default;
    explicit ChromaticEngine(ChromaticOptions opts) : opts_(opts) {}

    Polynomial polynomial(const Graph& g) const;
    /// AdjacentPair markers map to the zero polynomial.
    Polynomial polynomial(const ContractionOutcome& o) const;

    BigInt count(const Graph& g, const BigInt& t) const { return polynomial(g).evaluate(t); }
    BigInt count(const ContractionOutcome& o, const BigInt& t) const { return polynomial(o).evaluate(t); }

    std::size_t cache_size() const;
    /// Line format: <hex canonical form> <c0> <c1> ... (decimal integers).
    void load_cache(const std::string& path);
    void save_cache(const std::string& path) const;

private:
    Polynomial recurse(const Graph& g) const;

    ChromaticOptions opts_;
    mutable std::mutex mu_;
    mutable std::unordered_map<std::string, Polynomial> memo_;
};

struct CountReport {
    std::string form_hex;
    int t = 0;
    BigInt value;
    std::string method;  // oracle | recursion | product-rule
};

/// Dispatcher: small graphs go through the oracle, everything else through
/// polynomial evaluation; with cross_check both run and must agree.
CountReport count_colorings(const ChromaticEngine& engine, const ContractionOutcome& o, int t, bool cross_check = false);

}  // namespace mpg

#endif
