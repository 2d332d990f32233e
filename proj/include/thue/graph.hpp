// Simple graphs, subdivisions with provenance, path / cycle enumeration,
// exact nonrepetitive edge-coloring search, and the coloring lift onto a
// subdivision.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thue/word.hpp"

namespace thue {

struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // normalized u < v, sorted, unique
    std::vector<std::vector<int>> adj;      // neighbor lists, ascending

    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    int edge_index(int u, int v) const; // -1 when absent
    double average_degree() const;
};

struct SubdivisionPlan {
    std::vector<int> counts;                 // division vertices per edge, >= 0
    std::vector<std::pair<int, int>> orient; // (tail, head) per edge

    /// One entry per edge of g, k division vertices each, oriented small -> large.
    static SubdivisionPlan uniform(const Graph& g, int k);
};

struct VertexProvenance {
    bool original = true;
    int orig_vertex = -1; // when original
    int edge = -1;        // when division vertex: base edge index
    int index = 0;        // 1-based position along the edge orientation
};

struct SubdividedGraph {
    Graph graph;
    Graph base;
    SubdivisionPlan plan;
    std::vector<VertexProvenance> provenance; // per vertex of `graph`
    // per base edge: vertex ids tail, d_1 .. d_k, head along the orientation
    std::vector<std::vector<int>> chains;
};

/// Deterministic numbering: original ids first, then division vertices in
/// edge order, along each edge's orientation.
SubdividedGraph subdivide(const Graph& g, const SubdivisionPlan& plan);

/// Every simple path with >= 1 edge, once up to reversal (emitted with
/// front < back), as a vertex sequence. Return false from the visitor to stop.
void enumerate_simple_paths(const Graph& g,
                            const std::function<bool(const std::vector<int>&)>& visit);

/// Every simple cycle once up to rotation and reflection, as a vertex
/// sequence starting at the smallest cycle vertex.
void enumerate_cycles(const Graph& g,
                      const std::function<bool(const std::vector<int>&)>& visit);

struct EdgeColoring {
    std::vector<int> color; // per edge index
    int palette = 0;
};

struct VertexColoring {
    std::vector<int> color; // per vertex id
    int palette = 0;
};

/// Exact backtracking search for a nonrepetitive edge coloring with at most
/// max_colors colors; nothing when none exists. The result always passes
/// verify_edge_coloring.
std::optional<EdgeColoring> search_edge_coloring(const Graph& g, int max_colors);

/// Nothing when every simple path's edge-color sequence is square-free,
/// otherwise a witness carrying the path locus in `context`.
std::optional<SquareWitness> verify_edge_coloring(const Graph& g, const EdgeColoring& c);

/// Word of edge colors along a vertex path.
Word path_edge_word(const Graph& g, const EdgeColoring& c, const std::vector<int>& path);

/// Carry a nonrepetitive edge coloring of g onto a subdivision: an unsplit
/// edge keeps its color; a 2-edge split gets (color, primed color); longer
/// splits frame a square-free filler over three fresh colors with the
/// original color. Palette at most 2 * palette(c) + 3.
///
/// The rule is not sound on its own: a base cycle colored a,b,a,b (legal for
/// path-nonrepetitive colorings) with exactly one split edge gives a simple
/// path in the subdivision whose word ends a b a b. Use
/// subdivision_edge_coloring when a verified coloring is required.
EdgeColoring lift_edge_coloring(const Graph& g, const EdgeColoring& c,
                                const SubdivisionPlan& plan);

/// Verified nonrepetitive edge coloring of subdivide(g, plan): the lift when
/// it checks out, otherwise exact search on the subdivided graph.
struct SubdivisionColoring {
    EdgeColoring coloring;
    bool lifted = true; // false when the fallback search produced it
};
SubdivisionColoring subdivision_edge_coloring(const Graph& g, const EdgeColoring& c,
                                              const SubdivisionPlan& plan);

} // namespace thue
