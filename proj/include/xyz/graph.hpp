#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace xyz {

struct not_regular_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct degree_zero_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct size_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct graph_parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Vertices of a transformation are either vertices of the base graph or
// edges of the base graph; plain generated graphs use BaseVertex labels.
struct VertexLabel {
    enum class Kind { BaseVertex, BaseEdge };
    Kind kind = Kind::BaseVertex;
    int u = 0;   // vertex index, or smaller edge endpoint
    int v = -1;  // -1 for BaseVertex, larger edge endpoint otherwise

    static VertexLabel base_vertex(int i) { return {Kind::BaseVertex, i, -1}; }
    static VertexLabel base_edge(int a, int b);
    std::string str() const;
    bool operator==(const VertexLabel&) const = default;
};

// Simple undirected graph. Vertex and edge order are fixed at construction
// and stable across runs. No self-loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    explicit Graph(std::vector<VertexLabel> labels);

    void add_edge(int u, int v);  // throws std::invalid_argument on loop/dup/range

    int n() const { return static_cast<int>(labels_.size()); }
    int m() const { return static_cast<int>(edges_.size()); }
    bool adjacent(int u, int v) const { return adj_[idx(u, v)]; }
    int degree(int v) const;
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<VertexLabel>& labels() const { return labels_; }

    std::vector<int> degree_sequence_sorted() const;
    Graph induced_subgraph(const std::vector<int>& verts) const;

    // Equality of adjacency relations (labels and edge order not compared).
    bool operator==(const Graph& o) const { return labels_.size() == o.labels_.size() && adj_ == o.adj_; }

private:
    size_t idx(int u, int v) const { return static_cast<size_t>(u) * labels_.size() + v; }
    std::vector<VertexLabel> labels_;
    std::vector<bool> adj_;
    std::vector<std::pair<int, int>> edges_;
};

struct RegularGraph {
    Graph graph;
    int r = 0;

    int n() const { return graph.n(); }
    int m() const { return graph.m(); }
};

// Generators. All produce BaseVertex labels 0..n-1 and a deterministic
// edge order.
Graph cycle(int n);                 // n >= 3, edges walk order
Graph complete(int n);              // n >= 1
Graph complete_bipartite(int a, int b);
Graph petersen();
Graph hypercube(int d);             // d >= 1
Graph circulant(int n, const std::vector<int>& offsets);
Graph matching(int n);              // n even; edges (0,1),(2,3),...
Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

// "name:params" spec, e.g. "cycle:6", "circulant:8:1,2", "petersen".
Graph generate(const std::string& spec);

RegularGraph as_regular(const Graph& g);  // not_regular_error / degree_zero_error
Graph complement(const Graph& g);         // labels preserved
Graph line_graph(const Graph& g);         // BaseEdge labels in g's edge order

// Backtracking isomorphism test with degree/color-refinement pruning.
// Throws size_limit_error above the vertex bound.
bool is_isomorphic(const Graph& a, const Graph& b, int size_bound = 20);

// Edge-list text format: first line "n m", then m lines "u v" (0-based),
// '#' starts a comment. Read and written.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace xyz
