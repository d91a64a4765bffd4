#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <thread>

#include "mpg/canonical.hpp"
#include "mpg/chromatic.hpp"
#include "mpg/generate.hpp"
#include "mpg/partitions.hpp"
#include "mpg/planar_code.hpp"
#include "mpg/recursion.hpp"
#include "mpg/reports_json.hpp"

using namespace mpg;
using nlohmann::json;

namespace {

struct Options {
    std::string input;
    std::string format = "planar-code";
    std::string out;
    std::string cache;
    std::optional<int> eval_at;
    int wheel = 4;
    int order_max = 8;
    std::optional<int> min_degree;
    std::optional<int> cap;
    int jobs = 1;
    unsigned seed = 20260823;
    bool oracle = false;
};

struct RunReport {
    std::string command;
    json inputs = json::object();
    json results = json::array();
    double seconds = 0;
    json failures = json::array();

    json to_json() const {
        return {{"command", command}, {"inputs", inputs}, {"results", results},
                {"seconds", seconds}, {"failures", failures}};
    }
};

void fail(RunReport& rep, const std::string& form, const std::string& reason) {
    rep.failures.push_back({{"graph", form}, {"reason", reason}});
}

std::vector<Graph> load_graphs(const Options& opt, RunReport& rep) {
    std::vector<Graph> out;
    try {
        if (opt.format == "adjlist") {
            out = read_adjlist_file(opt.input);
        } else {
            for (Triangulation& t : read_planar_code_file(opt.input)) out.push_back(std::move(t.graph));
        }
    } catch (const std::exception& e) {
        fail(rep, opt.input, e.what());
    }
    return out;
}

std::vector<Triangulation> load_triangulations(const Options& opt, RunReport& rep) {
    std::vector<Triangulation> out;
    try {
        if (opt.format == "adjlist") {
            std::vector<Graph> graphs = read_adjlist_file(opt.input);
            for (std::size_t i = 0; i < graphs.size(); ++i) {
                try {
                    out.push_back(from_graph(graphs[i]));
                } catch (const std::exception& e) {
                    fail(rep, "record " + std::to_string(i), e.what());
                }
            }
        } else {
            out = read_planar_code_file(opt.input);
        }
    } catch (const std::exception& e) {
        fail(rep, opt.input, e.what());
    }
    return out;
}

// Worker pool: per-item fan-out, output collected in input order.
template <class Item, class Fn>
std::vector<json> parallel_map(const std::vector<Item>& items, int jobs, Fn fn) {
    std::vector<json> results(items.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < items.size(); ++i) results[i] = fn(items[i]);
        return results;
    }
    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> threads;
    for (int k = 0; k < jobs; ++k)
        threads.emplace_back([&] {
            for (std::size_t i = cursor.fetch_add(1); i < items.size(); i = cursor.fetch_add(1)) results[i] = fn(items[i]);
        });
    for (auto& th : threads) th.join();
    return results;
}

int emit(const RunReport& rep, const Options& opt) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!opt.out.empty() && rep.command != "generate") {
        file.open(opt.out);
        os = &file;
    }
    for (const json& line : rep.results) *os << line.dump() << "\n";
    *os << rep.to_json().dump() << "\n";
    return rep.failures.empty() ? 0 : 1;
}

int cmd_poly(const Options& opt) {
    RunReport rep{"poly", {{"input", opt.input}, {"format", opt.format}}};
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Graph> graphs = load_graphs(opt, rep);

    ChromaticEngine engine;
    if (!opt.cache.empty()) {
        try {
            engine.load_cache(opt.cache);
        } catch (const std::exception&) {
        }  // absent cache file: cold start
    }
    std::mutex mu;
    rep.results = parallel_map(graphs, opt.jobs, [&](const Graph& g) -> json {
        try {
            Polynomial p = engine.polynomial(g);
            json coeffs = json::array();
            for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(p.coefficient(i).str());
            json line{{"form", to_hex(canonical_form(g))}, {"order", g.order()}, {"coefficients", coeffs}};
            if (opt.eval_at) {
                BigInt value = p.evaluate(*opt.eval_at);
                if (opt.oracle && brute_force_count(g, *opt.eval_at) != value) throw std::logic_error("oracle cross-check failed");
                line["eval"] = {{"t", *opt.eval_at}, {"value", value.str()}};
            }
            return line;
        } catch (const std::exception& e) {
            std::scoped_lock lock(mu);
            fail(rep, to_hex(canonical_form(g)), e.what());
            return {{"error", e.what()}};
        }
    });
    if (!opt.cache.empty()) engine.save_cache(opt.cache);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return emit(rep, opt);
}

int cmd_verify(const Options& opt) {
    RunReport rep{"verify", {{"wheel", opt.wheel}, {"order_max", opt.order_max}, {"seed", opt.seed}}};
    auto t0 = std::chrono::steady_clock::now();
    if (opt.order_max < kMinGenerationOrder || opt.order_max > kMaxGenerationOrder) {
        fail(rep, "-", "order_max outside generator range [4,13]");
        return emit(rep, opt);
    }
    ChromaticEngine engine;
    std::mutex mu;
    long long checks = 0, violations = 0;
    for (int n = kMinGenerationOrder; n <= opt.order_max; ++n) {
        GenerationReport gen = generate_all(n, std::nullopt, opt.jobs);
        std::vector<json> lines = parallel_map(gen.graphs, opt.jobs, [&](const Triangulation& t) -> json {
            std::mt19937 rng(opt.seed + static_cast<unsigned>(std::hash<std::string>{}(canonical_form(t.graph))));
            json bad = json::array();
            int local = 0;
            for (int v = 0; v < t.order(); ++v) {
                if (t.graph.degree(v) != opt.wheel) continue;
                // seeded rim presentation: rotation and reflection do not matter
                std::vector<int> rim = link_cycle(t, v).rim;
                int d = static_cast<int>(rim.size());
                std::rotate(rim.begin(), rim.begin() + rng() % d, rim.end());
                if (rng() & 1u) std::reverse(rim.begin(), rim.end());
                ++local;
                if (opt.wheel == 4) {
                    Wheel4Report r = wheel4_identity_check(engine, t, v, rim);
                    if (!r.holds) bad.push_back(to_json(r));
                } else {
                    Wheel5Report r = wheel5_identity_check(engine, t, v, rim);
                    if (!r.holds || !r.all_nonnegative) bad.push_back(to_json(r));
                }
            }
            std::scoped_lock lock(mu);
            checks += local;
            violations += static_cast<long long>(bad.size());
            return {{"form", to_hex(canonical_form(t.graph))}, {"order", t.order()}, {"checked", local}, {"violations", bad}};
        });
        for (json& line : lines)
            if (line["checked"].get<int>() > 0) rep.results.push_back(std::move(line));
    }
    rep.inputs["checks"] = checks;
    if (violations > 0) fail(rep, "-", std::to_string(violations) + " wheel identity violations");
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return emit(rep, opt);
}

int cmd_color(const Options& opt) {
    RunReport rep{"color", {{"input", opt.input}, {"format", opt.format}}};
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Triangulation> graphs = load_triangulations(opt, rep);
    ChromaticEngine engine;
    std::mutex mu;
    rep.results = parallel_map(graphs, opt.jobs, [&](const Triangulation& t) -> json {
        std::string form = to_hex(canonical_form(t.graph));
        try {
            ColoringCertificate cert = four_color(engine, t);
            if (!validate_certificate(t, cert)) throw std::logic_error("certificate failed validation");
            json line{{"form", form}, {"order", t.order()}};
            line["certificate"] = to_json(cert);
            return line;
        } catch (const std::exception& e) {
            std::scoped_lock lock(mu);
            fail(rep, form, e.what());
            return {{"form", form}, {"error", e.what()}};
        }
    });
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return emit(rep, opt);
}

int cmd_generate(const Options& opt) {
    RunReport rep{"generate", {{"order", opt.order_max}}};
    if (opt.min_degree) rep.inputs["min_degree"] = *opt.min_degree;
    auto t0 = std::chrono::steady_clock::now();
    try {
        GenerationReport gen = generate_all(opt.order_max, opt.min_degree, opt.jobs);
        if (!opt.out.empty()) write_planar_code_file(opt.out, gen.graphs);
        json by_degree = json::object();
        for (auto [d, c] : gen.counts_by_min_degree) by_degree[std::to_string(d)] = c;
        rep.results.push_back({{"order", gen.order}, {"classes", gen.graphs.size()}, {"by_min_degree", by_degree}, {"out", opt.out}});
    } catch (const std::exception& e) {
        fail(rep, "-", e.what());
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return emit(rep, opt);
}

int cmd_classify(const Options& opt) {
    RunReport rep{"classify", {{"input", opt.input}, {"format", opt.format}}};
    if (opt.cap) rep.inputs["cap"] = *opt.cap;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Triangulation> graphs = load_triangulations(opt, rep);
    std::mutex mu;
    rep.results = parallel_map(graphs, opt.jobs, [&](const Triangulation& t) -> json {
        std::string form = to_hex(canonical_form(t.graph));
        try {
            Classification c = classify(t.graph, opt.cap);
            if (opt.oracle && !partition_count_identity(t.graph, brute_force_count(t.graph, 4)))
                throw std::logic_error("partition count identity failed");
            json line{{"form", form}, {"order", t.order()}, {"classification", to_json(c, t.graph)}};
            if (min_degree(t) == 5) {
                json obs = json::array();
                for (const FunnelObstruction& o : find_funnel_obstructions(t)) obs.push_back(to_json(o));
                line["funnel_obstructions"] = obs;
            }
            return line;
        } catch (const std::exception& e) {
            std::scoped_lock lock(mu);
            fail(rep, form, e.what());
            return {{"form", form}, {"error", e.what()}};
        }
    });
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return emit(rep, opt);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact coloring toolkit for maximal planar graphs"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--jobs", opt.jobs, "worker pool size")->check(CLI::Range(1, 64));
        sub->add_option("--seed", opt.seed, "seed for randomized presentations");
        sub->add_option("--out", opt.out, "output path (default stdout)");
        sub->add_flag("--oracle", opt.oracle, "force brute-force cross-checks");
    };
    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--input", opt.input, "input file")->required();
        sub->add_option("--format", opt.format, "input format")->check(CLI::IsMember({"planar-code", "adjlist"}));
    };

    CLI::App* poly = app.add_subcommand("poly", "chromatic polynomials per input graph");
    add_input(poly);
    add_common(poly);
    int eval_at = 0;
    CLI::Option* eval_opt = poly->add_option("--eval", eval_at, "also evaluate at this t");
    poly->add_option("--cache", opt.cache, "polynomial cache file (read and updated)");

    CLI::App* verify = app.add_subcommand("verify", "wheel recursion sweeps over generated corpora");
    verify->add_option("--wheel", opt.wheel, "wheel degree to check")->check(CLI::IsMember({4, 5}))->required();
    verify->add_option("--order-max", opt.order_max, "largest order to generate")->required();
    add_common(verify);

    CLI::App* color = app.add_subcommand("color", "constructive 4-colorings with certificates");
    add_input(color);
    add_common(color);

    CLI::App* generate = app.add_subcommand("generate", "all isomorphism classes of one order");
    generate->add_option("--order-max", opt.order_max, "order to generate")->required();
    int min_degree_val = 0;
    CLI::Option* mindeg_opt = generate->add_option("--min-degree", min_degree_val, "keep only this minimum degree");
    add_common(generate);

    CLI::App* classify_cmd = app.add_subcommand("classify", "4-coloring taxonomy per input graph");
    add_input(classify_cmd);
    int cap_val = 0;
    CLI::Option* cap_opt = classify_cmd->add_option("--cap", cap_val, "subgraph search cap");
    add_common(classify_cmd);

    CLI11_PARSE(app, argc, argv);
    if (*eval_opt) opt.eval_at = eval_at;
    if (*mindeg_opt) opt.min_degree = min_degree_val;
    if (*cap_opt) opt.cap = cap_val;

    try {
        if (poly->parsed()) return cmd_poly(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (color->parsed()) return cmd_color(opt);
        if (generate->parsed()) return cmd_generate(opt);
        return cmd_classify(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
