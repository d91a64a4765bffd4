#include "mpg/planar_code.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mpg {

namespace {
constexpr const char* kHeader = ">>planar_code<<";
}

std::vector<Triangulation> read_planar_code(const std::string& bytes) {
    std::size_t pos = 0;
    if (bytes.compare(0, std::string(kHeader).size(), kHeader) == 0) pos = std::string(kHeader).size();
    std::vector<Triangulation> out;
    while (pos < bytes.size()) {
        int n = static_cast<unsigned char>(bytes[pos++]);
        if (n == 0) throw std::runtime_error("planar_code: zero vertex count");
        Triangulation t;
        t.graph = Graph(n);
        t.rotation.assign(n, {});
        for (int v = 0; v < n; ++v) {
            while (true) {
                if (pos >= bytes.size()) throw std::runtime_error("planar_code: truncated stream");
                int b = static_cast<unsigned char>(bytes[pos++]);
                if (b == 0) break;
                if (b > n) throw std::runtime_error("planar_code: neighbor id " + std::to_string(b) + " out of range for order " + std::to_string(n));
                t.rotation[v].push_back(b - 1);
                t.graph.set_edge(v, b - 1);
            }
        }
        for (int v = 0; v < n; ++v)
            for (int w : t.rotation[v])
                if (std::count(t.rotation[w].begin(), t.rotation[w].end(), v) != 1)
                    throw std::runtime_error("planar_code: non-symmetric rotation data at edge (" + std::to_string(v) + "," + std::to_string(w) + ")");
        validate(t);
        out.push_back(std::move(t));
    }
    return out;
}

std::string write_planar_code(const std::vector<Triangulation>& graphs, bool header) {
    std::string out;
    if (header) out = kHeader;
    for (const auto& t : graphs) {
        if (t.order() > 255) throw std::invalid_argument("planar_code: order beyond 255");
        out.push_back(static_cast<char>(t.order()));
        for (int v = 0; v < t.order(); ++v) {
            for (int w : t.rotation[v]) out.push_back(static_cast<char>(w + 1));
            out.push_back('\0');
        }
    }
    return out;
}

std::vector<Triangulation> read_planar_code_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return read_planar_code(ss.str());
}

void write_planar_code_file(const std::string& path, const std::vector<Triangulation>& graphs) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << write_planar_code(graphs);
}

std::vector<Graph> read_adjlist(std::istream& in) {
    std::vector<Graph> out;
    int n, m;
    while (in >> n >> m) {
        if (n < 0 || m < 0) throw std::runtime_error("adjlist: negative counts");
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < m; ++i) {
            int u, w;
            if (!(in >> u >> w)) throw std::runtime_error("adjlist: truncated edge list");
            edges.emplace_back(u, w);
        }
        out.push_back(build_graph(n, edges));
    }
    if (!in.eof()) throw std::runtime_error("adjlist: malformed record header");
    return out;
}

void write_adjlist(std::ostream& out, const std::vector<Graph>& graphs) {
    for (const auto& g : graphs) {
        out << g.order() << ' ' << g.edge_count() << '\n';
        for (int u = 0; u < g.order(); ++u)
            for (int w : g.neighbors(u))
                if (w > u) out << u << ' ' << w << '\n';
    }
}

std::vector<Graph> read_adjlist_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    return read_adjlist(in);
}

}  // namespace mpg
