#include "thue/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace thue {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    Graph g;
    g.n = n;
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("graph: loop edge");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("graph: vertex id out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.edges = std::move(edges);
    g.adj.assign(n, {});
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    return g;
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
    if (it == edges.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - edges.begin());
}

double Graph::average_degree() const {
    if (n == 0) return 0.0;
    return 2.0 * static_cast<double>(edges.size()) / n;
}

SubdivisionPlan SubdivisionPlan::uniform(const Graph& g, int k) {
    SubdivisionPlan plan;
    plan.counts.assign(g.edges.size(), k);
    plan.orient = g.edges;
    return plan;
}

SubdividedGraph subdivide(const Graph& g, const SubdivisionPlan& plan) {
    if (plan.counts.size() != g.edges.size() || plan.orient.size() != g.edges.size())
        throw std::invalid_argument("subdivide: plan does not cover the edge set");
    SubdividedGraph sg;
    sg.base = g;
    sg.plan = plan;

    int next_id = g.n;
    sg.provenance.resize(g.n);
    for (int v = 0; v < g.n; ++v) sg.provenance[v] = {true, v, -1, 0};

    std::vector<std::pair<int, int>> out_edges;
    sg.chains.resize(g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        int k = plan.counts[e];
        if (k < 0) throw std::invalid_argument("subdivide: negative division count");
        auto [tail, head] = plan.orient[e];
        if (g.edge_index(tail, head) != static_cast<int>(e))
            throw std::invalid_argument("subdivide: orientation does not match edge");
        std::vector<int>& chain = sg.chains[e];
        chain.push_back(tail);
        for (int i = 1; i <= k; ++i) {
            sg.provenance.push_back({false, -1, static_cast<int>(e), i});
            chain.push_back(next_id++);
        }
        chain.push_back(head);
        for (std::size_t i = 0; i + 1 < chain.size(); ++i)
            out_edges.emplace_back(chain[i], chain[i + 1]);
    }
    sg.graph = Graph::from_edges(next_id, std::move(out_edges));
    return sg;
}

namespace {

struct PathEnum {
    const Graph& g;
    const std::function<bool(const std::vector<int>&)>& visit;
    std::vector<int> path;
    std::vector<char> used;
    bool stop = false;

    void rec() {
        int last = path.back();
        for (int nb : g.adj[last]) {
            if (stop) return;
            if (used[nb]) continue;
            path.push_back(nb);
            used[nb] = 1;
            if (path.front() < path.back()) {
                if (!visit(path)) stop = true;
            }
            if (!stop) rec();
            used[nb] = 0;
            path.pop_back();
        }
    }
};

} // namespace

void enumerate_simple_paths(const Graph& g,
                            const std::function<bool(const std::vector<int>&)>& visit) {
    PathEnum en{g, visit, {}, std::vector<char>(g.n, 0), false};
    for (int s = 0; s < g.n && !en.stop; ++s) {
        en.path = {s};
        en.used.assign(g.n, 0);
        en.used[s] = 1;
        en.rec();
    }
}

namespace {

struct CycleEnum {
    const Graph& g;
    const std::function<bool(const std::vector<int>&)>& visit;
    std::vector<int> path;
    std::vector<char> used;
    bool stop = false;

    // all intermediate vertices exceed the start, so the start is the cycle
    // minimum; reflections are cut by requiring path[1] < path.back()
    void rec() {
        int last = path.back();
        for (int nb : g.adj[last]) {
            if (stop) return;
            if (nb == path.front()) {
                if (path.size() >= 3 && path[1] < path.back()) {
                    if (!visit(path)) { stop = true; return; }
                }
                continue;
            }
            if (nb <= path.front() || used[nb]) continue;
            path.push_back(nb);
            used[nb] = 1;
            rec();
            used[nb] = 0;
            path.pop_back();
            if (stop) return;
        }
    }
};

} // namespace

void enumerate_cycles(const Graph& g,
                      const std::function<bool(const std::vector<int>&)>& visit) {
    CycleEnum en{g, visit, {}, std::vector<char>(g.n, 0), false};
    for (int s = 0; s < g.n && !en.stop; ++s) {
        en.path = {s};
        en.used.assign(g.n, 0);
        en.used[s] = 1;
        en.rec();
    }
}

Word path_edge_word(const Graph& g, const EdgeColoring& c, const std::vector<int>& path) {
    std::vector<Letter> letters;
    letters.reserve(path.size() - 1);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        int e = g.edge_index(path[i], path[i + 1]);
        if (e < 0) throw std::invalid_argument("path_edge_word: not a path of the graph");
        letters.push_back(c.color[e]);
    }
    return Word(std::move(letters));
}

std::optional<SquareWitness> verify_edge_coloring(const Graph& g, const EdgeColoring& c) {
    if (c.color.size() != g.edges.size())
        throw std::invalid_argument("verify_edge_coloring: coloring is not total");
    std::optional<SquareWitness> found;
    enumerate_simple_paths(g, [&](const std::vector<int>& path) {
        Word w = path_edge_word(g, c, path);
        if (auto sq = find_square(w)) {
            std::string locus = "path";
            for (int v : path) locus += " " + std::to_string(v);
            sq->context = locus;
            found = *sq;
            return false;
        }
        return true;
    });
    return found;
}

namespace {

// line-graph degeneracy order: repeatedly strip an edge with the fewest
// remaining incident edges, then color in the reverse order
std::vector<int> edge_search_order(const Graph& g) {
    std::size_t m = g.edges.size();
    std::vector<std::vector<int>> touching(m);
    for (std::size_t e = 0; e < m; ++e) {
        for (std::size_t f = e + 1; f < m; ++f) {
            auto [a, b] = g.edges[e];
            auto [c, d] = g.edges[f];
            if (a == c || a == d || b == c || b == d) {
                touching[e].push_back(static_cast<int>(f));
                touching[f].push_back(static_cast<int>(e));
            }
        }
    }
    std::vector<int> degree(m);
    for (std::size_t e = 0; e < m; ++e) degree[e] = static_cast<int>(touching[e].size());
    std::vector<char> removed(m, 0);
    std::vector<int> order;
    for (std::size_t round = 0; round < m; ++round) {
        int best = -1;
        for (std::size_t e = 0; e < m; ++e) {
            if (removed[e]) continue;
            if (best < 0 || degree[e] < degree[best]) best = static_cast<int>(e);
        }
        removed[best] = 1;
        order.push_back(best);
        for (int f : touching[best])
            if (!removed[f]) --degree[f];
    }
    std::reverse(order.begin(), order.end());
    return order;
}

struct EdgeColorSearch {
    const Graph& g;
    int max_colors;
    std::vector<int> order;
    std::vector<int> color; // -1 = uncolored
    bool done = false;

    // a fresh square can only appear on a path through the newly colored
    // edge; scanning all simple paths of the colored subgraph and filtering
    // is plenty at this instance size
    bool creates_square(int e) const {
        auto [eu, ev] = g.edges[e];
        bool bad = false;
        Graph colored = colored_subgraph();
        enumerate_simple_paths(colored, [&](const std::vector<int>& path) {
            bool through = false;
            for (std::size_t i = 0; i + 1 < path.size() && !through; ++i) {
                if ((path[i] == eu && path[i + 1] == ev) ||
                    (path[i] == ev && path[i + 1] == eu))
                    through = true;
            }
            if (!through) return true;
            std::vector<Letter> letters;
            for (std::size_t i = 0; i + 1 < path.size(); ++i)
                letters.push_back(color[g.edge_index(path[i], path[i + 1])]);
            if (find_square(Word(std::move(letters)))) {
                bad = true;
                return false;
            }
            return true;
        });
        return bad;
    }

    Graph colored_subgraph() const {
        std::vector<std::pair<int, int>> es;
        for (std::size_t e = 0; e < g.edges.size(); ++e)
            if (color[e] >= 0) es.push_back(g.edges[e]);
        return Graph::from_edges(g.n, std::move(es));
    }

    bool rec(std::size_t pos) {
        if (pos == order.size()) return true;
        int e = order[pos];
        for (int c = 0; c < max_colors; ++c) {
            color[e] = c;
            if (!creates_square(e) && rec(pos + 1)) return true;
            color[e] = -1;
        }
        return false;
    }
};

} // namespace

std::optional<EdgeColoring> search_edge_coloring(const Graph& g, int max_colors) {
    if (max_colors < 1) throw std::invalid_argument("search_edge_coloring: need a color");
    EdgeColorSearch search{g, max_colors, edge_search_order(g),
                           std::vector<int>(g.edges.size(), -1), false};
    if (!search.rec(0)) return std::nullopt;
    EdgeColoring out;
    out.color = search.color;
    int max_used = -1;
    for (int c : out.color) max_used = std::max(max_used, c);
    out.palette = max_used + 1;
    return out;
}

SubdivisionColoring subdivision_edge_coloring(const Graph& g, const EdgeColoring& c,
                                              const SubdivisionPlan& plan) {
    EdgeColoring lifted = lift_edge_coloring(g, c, plan);
    SubdividedGraph sg = subdivide(g, plan);
    if (!verify_edge_coloring(sg.graph, lifted).has_value())
        return {std::move(lifted), true};
    for (int colors = 1;; ++colors) {
        if (auto found = search_edge_coloring(sg.graph, colors))
            return {std::move(*found), false};
    }
}

EdgeColoring lift_edge_coloring(const Graph& g, const EdgeColoring& c,
                                const SubdivisionPlan& plan) {
    if (c.color.size() != g.edges.size())
        throw std::invalid_argument("lift_edge_coloring: coloring is not total");
    SubdividedGraph sg = subdivide(g, plan);
    int m = c.palette;
    EdgeColoring out;
    out.color.assign(sg.graph.edges.size(), -1);
    out.palette = 2 * m + 3;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const std::vector<int>& chain = sg.chains[e];
        std::size_t parts = chain.size() - 1; // edges along the chain
        Word filler = parts >= 3 ? lex_least_squarefree(parts - 2) : Word();
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            int idx = sg.graph.edge_index(chain[i], chain[i + 1]);
            int col;
            if (parts == 1) {
                col = c.color[e];
            } else if (parts == 2) {
                col = (i == 0) ? c.color[e] : c.color[e] + m;
            } else {
                if (i == 0 || i + 2 == chain.size())
                    col = c.color[e];
                else
                    col = 2 * m + filler[i - 1];
            }
            out.color[idx] = col;
        }
    }
    return out;
}

} // namespace thue
