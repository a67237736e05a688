#pragma once

#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ptg/graph.hpp"

namespace ptg {

using Node = int;
using EdgeId = int;
using NodeSet = std::vector<Node>;  // sorted

struct HostEdge {
    Node u;
    Node v;
};

// Multigraph without self-loops. Edge ids are indices into edges().
class Host {
public:
    Host() = default;
    explicit Host(int nodes) : inc_(static_cast<std::size_t>(nodes)) {}

    int n() const { return static_cast<int>(inc_.size()); }
    int m() const { return static_cast<int>(edges_.size()); }
    Node add_node();
    EdgeId add_edge(Node u, Node v);
    const std::vector<HostEdge>& edges() const { return edges_; }
    const HostEdge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
    // Incident edge ids of x, in insertion order.
    const std::vector<EdgeId>& incident(Node x) const { return inc_[static_cast<std::size_t>(x)]; }
    int degree(Node x) const { return static_cast<int>(inc_[static_cast<std::size_t>(x)].size()); }
    Node other(EdgeId e, Node x) const;
    // Neighbors with multiplicity removed, sorted.
    NodeSet neighbors(Node x) const;
    int multiplicity(Node x, Node y) const;
    std::optional<EdgeId> find_edge(Node x, Node y) const;
    bool is_connected() const;
    bool is_tree() const;
    NodeSet leaves() const;

private:
    std::vector<HostEdge> edges_;
    std::vector<std::vector<EdgeId>> inc_;
};

// A Host checked to be a simple tree.
class HostTree : public Host {
public:
    HostTree() : Host(1) {}
    explicit HostTree(Host h);
};

class UnknownEdge : public std::invalid_argument {
public:
    UnknownEdge() : std::invalid_argument("unknown edge id") {}
};

Host host_from_edges(int n, const std::vector<std::pair<Node, Node>>& edges);
HostTree tree_from_edges(int n, const std::vector<std::pair<Node, Node>>& edges);
HostTree path_tree(int nodes);
HostTree star_tree(int leaves);

// Replaces e by two edges through a fresh node; returns the host and the fresh node id.
std::pair<Host, Node> subdivide_edge(const Host& h, EdgeId e);
// Merges the endpoints of e into the smaller id; other ids above the removed one shift down.
// Self-loops created by the merge are dropped, parallel edges kept.
Host contract_edge(const Host& h, EdgeId e, std::vector<Node>* node_map = nullptr);
// Contracts a set of edges at once; node_map sends old nodes to new ones.
Host contract_edges(const Host& h, const std::vector<EdgeId>& es, std::vector<Node>* node_map = nullptr);

// Suppresses degree-2 nodes (never creating a self-loop).
Host homeomorphic_reduction(const Host& h);
bool are_isomorphic(const Host& a, const Host& b);
bool is_re_subdivision(const Host& s, const Host& t);

// Witness that a tree s is a re-subdivision of a tree t: the contracted edges of t and,
// for each node of t, the node of s it lands on (nodes merged by contraction share one image).
// Nodes of t/F with degree 2 may land on any node of the corresponding path in s.
struct ResubdivisionWitness {
    std::vector<EdgeId> contracted;
    std::vector<Node> image;
};
std::optional<ResubdivisionWitness> resubdivision_witness(const HostTree& s, const HostTree& t);

NodeSet path_between(const HostTree& t, Node x, Node y);
NodeSet eyes(const HostTree& t);
int leaf_count(const Host& h);
int branching_count(const Host& h);

// Canonical string of an unrooted tree; equal iff isomorphic.
std::string tree_code(const HostTree& t);
// Canonical string of a tree where some nodes carry a color (colors compared as part of the code).
std::string colored_tree_code(const HostTree& t, const std::vector<int>& color);

// Host text format: "n m" then m lines "u v"; parallel edges by repetition.
Host read_host(std::istream& in);
Host parse_host(const std::string& text);
std::string write_host(const Host& h);

}  // namespace ptg
