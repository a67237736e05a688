#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ptg/graph.hpp"
#include "ptg/host.hpp"
#include "ptg/representation.hpp"

namespace ptg {

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded() : std::runtime_error("search space exceeds the node budget") {}
};
class GenerationFailed : public std::runtime_error {
public:
    GenerationFailed() : std::runtime_error("instance generation failed after bounded retries") {}
};

// Bron-Kerbosch with pivoting; cliques sorted lexicographically.
std::vector<VertexSet> oracle_maximal_cliques(const Graph& g);
// Repeated removal of simplicial vertices.
bool oracle_is_chordal(const Graph& g);

// Unlabeled trees on exactly `nodes` nodes, one per isomorphism class, in a fixed order.
std::vector<HostTree> all_trees(int nodes);

// Exhaustive search for a compact representation on a re-subdivision of t.
// Requires |cliques| + leaves(t) <= budget, otherwise throws BudgetExceeded.
std::optional<Representation> oracle_recognize(const Graph& g, const HostTree& t, int budget = 12);
// Every compact representation the search space contains (for structure checks), up to `limit`.
std::vector<Representation> oracle_all_compact(const Graph& g, const HostTree& t, int budget = 12, std::size_t limit = 64);
// Independent compactness check (models connected, leaves empty, escape condition for all ordered pairs).
bool oracle_is_compact(const Graph& g, const Representation& r);

// Re-subdivisions of the multigraph h with at most max_nodes nodes: every subset of edges contracted
// (self-loops dropped) and then every distribution of subdivision nodes, ordered by node count.
// Duplicates from the same contracted base are removed up to isomorphism of the base.
std::vector<Host> re_subdivisions(const Host& h, int max_nodes);
// Exhaustive search for a proper representation on a re-subdivision of h with at most max_nodes
// nodes (max_nodes <= 20). nullopt means none exists within that size.
std::optional<Representation> oracle_recognize_proper(const Graph& g, const Host& h, int max_nodes);

// Literal evaluation of the surrounding-triple definition over clique indices.
bool oracle_surrounding(const Graph& g, const std::vector<VertexSet>& cliques, int l, int y, int r);
// All ordered pairs (l, r) with (l, y, r) surrounding.
std::set<std::pair<int, int>> oracle_surrounding_pairs(const Graph& g, const std::vector<VertexSet>& cliques, int y);

// Definition-level potential: every j in [i, jmax] such that, after moving the non-path neighbors of
// path[i] to path[j], every vertex whose model lies in the component of path[0] cut at (path[j-1], path[j])
// escapes every other vertex. path is z_0 .. z_{s+1}, oriented toward the root.
std::vector<int> oracle_potential(const Graph& g, const Representation& r, const std::vector<Node>& path, int i, int jmax);

// Random connected chordal graph from random subtrees of a random tree. density in (0, 1].
Graph gen_chordal(int n, double density, std::uint64_t seed);

struct Planted {
    Graph graph;
    Representation rep;
};
// Random proper representation on a random subdivision of t; the graph is connected.
Planted gen_planted(const HostTree& t, int n, std::uint64_t seed);

// Connected chordal graphs with 1..max_n vertices, one per isomorphism class.
std::vector<Graph> chordal_corpus(int max_n);
// Canonical adjacency string; equal iff isomorphic (exhaustive, small graphs only).
std::string graph_canonical_form(const Graph& g);

}  // namespace ptg
