#include "mpg/named_graphs.hpp"

namespace mpg {

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w) g.set_edge(u, w);
    return g;
}

Graph cycle_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u) g.set_edge(u, (u + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int u = 0; u + 1 < n; ++u) g.set_edge(u, u + 1);
    return g;
}

Graph bipyramid5() {
    Graph g(5);
    g.set_edge(2, 3);
    g.set_edge(3, 4);
    g.set_edge(4, 2);
    for (int apex : {0, 1})
        for (int e : {2, 3, 4}) g.set_edge(apex, e);
    return g;
}

Graph octahedron() {
    Graph g(6);
    for (int u = 0; u < 6; ++u)
        for (int w = u + 1; w < 6; ++w)
            if (w - u != 3) g.set_edge(u, w);
    return g;
}

Graph icosahedron() {
    Graph g(12);
    auto top = [](int i) { return 1 + (i % 5); };
    auto bot = [](int i) { return 6 + (i % 5); };
    for (int i = 0; i < 5; ++i) {
        g.set_edge(0, top(i));
        g.set_edge(11, bot(i));
        g.set_edge(top(i), top(i + 1));
        g.set_edge(bot(i), bot(i + 1));
        g.set_edge(top(i), bot(i));
        g.set_edge(top(i), bot(i + 1));
    }
    return g;
}

Triangulation stacked_octahedron() {
    Triangulation t = from_graph(octahedron());
    return extend_wheel3(t, faces(t).front());
}

Triangulation stacked_triangulation(int n) {
    Triangulation t = from_graph(complete_graph(4));
    while (t.order() < n) t = extend_wheel3(t, faces(t).front());
    return t;
}

}  // namespace mpg
