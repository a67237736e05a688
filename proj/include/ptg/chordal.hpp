#pragma once

#include <stdexcept>
#include <vector>

#include "ptg/graph.hpp"
#include "ptg/host.hpp"

namespace ptg {

struct ChordalResult {
    bool chordal = false;
    // Maximum-cardinality-search visit order; its reverse is a perfect elimination ordering.
    std::vector<Vertex> order;
    // For non-chordal graphs: an induced cycle of length >= 4, in cyclic order.
    std::vector<Vertex> cycle;

    std::vector<Vertex> peo() const { return {order.rbegin(), order.rend()}; }
};

ChordalResult is_chordal(const Graph& g);
bool is_perfect_elimination_ordering(const Graph& g, const std::vector<Vertex>& peo);
bool is_induced_cycle(const Graph& g, const std::vector<Vertex>& cycle);

class NotChordal : public std::invalid_argument {
public:
    NotChordal() : std::invalid_argument("graph is not chordal") {}
};
class NotConnected : public std::invalid_argument {
public:
    NotConnected() : std::invalid_argument("graph is not connected") {}
};

// All maximal cliques, sorted lexicographically. Throws NotChordal if peo is invalid.
std::vector<VertexSet> maximal_cliques(const Graph& g, const std::vector<Vertex>& peo);
std::vector<VertexSet> maximal_cliques(const Graph& g);

struct CliqueTree {
    HostTree tree;
    std::vector<VertexSet> cliques;  // label of each tree node
};
CliqueTree clique_tree(const Graph& g);

bool is_claw_free(const Graph& g);
bool is_proper_interval(const Graph& g);

}  // namespace ptg
