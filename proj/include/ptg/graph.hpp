#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ptg {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // always sorted, no duplicates

// Raised by the text readers; carries the offending line and column.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const;

    // Adds the edge {u,v}; ignores duplicates. Throws on self-loops or bad ids.
    void add_edge(Vertex u, Vertex v);
    bool adjacent(Vertex u, Vertex v) const;
    const VertexSet& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }
    std::string label(Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;
};

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph graph_from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
VertexSet open_neighborhood(const Graph& g, const VertexSet& w);
VertexSet closed_neighborhood(const Graph& g, Vertex v);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for dropped vertices
    std::vector<Vertex> new_to_old;
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

// Sorted-set helpers.
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);
bool intersects(const VertexSet& a, const VertexSet& b);
bool contains(const VertexSet& a, Vertex v);
VertexSet normalized(VertexSet s);
VertexSet iota_set(int n);

// Edge-list text format: "n m" then m lines "u v"; lines starting with '#' are comments.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

// Reads the header and edge pairs without validating simplicity; shared with host parsing.
struct RawEdgeList {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> positions;  // (line, column) of each edge's first token
};
RawEdgeList read_raw_edge_list(std::istream& in);

}  // namespace ptg
