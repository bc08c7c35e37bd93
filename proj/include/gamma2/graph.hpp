#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace g2 {

using Vertex = int;
using RealFunction = std::vector<double>;

/// Finite simple undirected graph on vertices 0..n-1 with sorted adjacency.
/// Construction enforces: symmetric adjacency, no self-loops, no duplicate
/// neighbors, no isolated vertices. Immutable after construction.
class Graph {
public:
    /// Build from an edge list; indices must lie in [0, n).
    Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
          std::string name = {});

    int vertex_count() const { return n_; }
    std::int64_t edge_count() const { return m_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const { return max_degree_; }
    bool adjacent(Vertex u, Vertex v) const;
    const std::string& name() const { return name_; }

    /// Sorted unordered edges (u, v) with u < v.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// Number of connected components (BFS).
    int components() const;

    /// Vertices whose radius-2 neighborhood equals the modeled infinite
    /// graph's: set by truncated-model generators (tree, path). Generators of
    /// exact finite families leave this unset, meaning every vertex counts.
    const std::optional<std::vector<Vertex>>& interior() const { return interior_; }
    void set_interior(std::vector<Vertex> interior);

private:
    int n_ = 0;
    std::int64_t m_ = 0;
    int max_degree_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::string name_;
    std::optional<std::vector<Vertex>> interior_;
};

/// Radius-2 neighborhood data around a vertex: everything Gamma_2 at x can
/// see. N1/N2 are sorted; dist-3+ vertices are never materialized.
struct VertexBall2 {
    Vertex center = 0;
    std::vector<Vertex> n1;                     // neighbors of x
    std::vector<Vertex> n2;                     // vertices at distance exactly 2
    std::vector<int> deg1;                      // full-graph degree of each v in n1
    std::vector<int> r;                         // common neighbors with x, per u in n2
    std::vector<std::pair<int, int>> edges_n1n1; // local index pairs (i<j), v_i ~ v_j
    std::vector<std::pair<int, int>> edges_n1n2; // local index pairs (i in n1, j in n2)

    std::size_t dim() const { return n1.size() + n2.size(); }
};

/// Delta f(x) = sum_{y~x} (f(y) - f(x)) at every vertex.
RealFunction laplacian_apply(const Graph& g, const RealFunction& f);

/// Gamma(f,h)(x) = 1/2 sum_{y~x} (f(x)-f(y))(h(x)-h(y)).
double gamma(const Graph& g, const RealFunction& f, const RealFunction& h, Vertex x);
double gamma(const Graph& g, const RealFunction& f, Vertex x);

/// Gamma_2(f)(x) = 1/2 Delta Gamma(f)(x) - Gamma(f, Delta f)(x), evaluated by
/// composing the definitions; reads f only on the closed 2-ball of x.
double gamma2(const Graph& g, const RealFunction& f, Vertex x);

VertexBall2 ball2(const Graph& g, Vertex x);

struct TriangleStats {
    std::vector<std::pair<std::pair<Vertex, Vertex>, int>> per_edge; // ((u,v), t)
    int max_per_edge = 0;                                            // T
};

/// t(e) = number of triangles containing e; T = max over edges.
TriangleStats triangle_stats(const Graph& g);

// ---------------------------------------------------------------------------
// File formats. Edge-list text: header "n m", then m lines "u v" with
// 0 <= u < v < n, LF-terminated. JSON: {"n":int,"edges":[[u,v],...],"name":s}
// with edges sorted lexicographically in canonical output.
// ---------------------------------------------------------------------------

Graph parse_edge_list(const std::string& text);
std::string serialize_edge_list(const Graph& g);

Graph parse_graph_json(const std::string& text);
std::string serialize_graph_json(const Graph& g);

} // namespace g2
