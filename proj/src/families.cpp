#include "toughham/families.hpp"

#include <stdexcept>

namespace toughham {

LabeledFamily counterexample_graph(int n) {
    if (n < 7) throw std::invalid_argument("counterexample family requires n >= 7");
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    b.add_edge(0, n - 3); // x v_{n-2}
    for (int i = 2; i <= n - 2; ++i)
        if (i != n - 3) b.add_edge(n - 1, i - 1); // y v_i
    LabeledFamily f;
    f.graph = b.build();
    f.family_id = "counterexample";
    f.labels = {{"x", 0}, {"y", n - 1}};
    f.parameters = {{"n", n}};
    return f;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return b.build();
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path requires n >= 1");
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return b.build();
}

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph requires n >= 1");
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.build();
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite requires a, b >= 1");
    GraphBuilder builder(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) builder.add_edge(u, v);
    return builder.build();
}

Graph complete_minus_perfect_matching(int n) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("matching family requires even n >= 2");
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!(v == u + 1 && u % 2 == 0)) b.add_edge(u, v);
    return b.build();
}

std::optional<LabeledFamily> make_family(const std::string& id, const FamilyParams& p) {
    if (id == "counterexample") return counterexample_graph(p.n);
    LabeledFamily f;
    f.family_id = id;
    f.parameters = {{"n", p.n}};
    if (id == "cycle")
        f.graph = cycle(p.n);
    else if (id == "path")
        f.graph = path(p.n);
    else if (id == "complete")
        f.graph = complete(p.n);
    else if (id == "complete_minus_perfect_matching")
        f.graph = complete_minus_perfect_matching(p.n);
    else if (id == "complete_bipartite") {
        f.graph = complete_bipartite(p.a, p.b);
        f.parameters = {{"a", p.a}, {"b", p.b}};
    } else
        return std::nullopt;
    return f;
}

std::vector<std::string> family_ids() {
    return {"counterexample", "cycle",
            "path",           "complete",
            "complete_bipartite", "complete_minus_perfect_matching"};
}

} // namespace toughham
