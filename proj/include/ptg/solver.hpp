#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptg/graph.hpp"
#include "ptg/host.hpp"
#include "ptg/representation.hpp"
#include "ptg/structure.hpp"
#include "ptg/template.hpp"

namespace ptg {

// A chain laid out in a compact representation and oriented toward the root:
// nodes[0] realizes the lower terminal, nodes[1..s] the inner cliques, nodes[s+1] the upper terminal.
struct ChainPath {
    int chain = -1;
    bool toward_end = true;
    std::vector<Node> nodes;

    int s() const { return static_cast<int>(nodes.size()) - 2; }
};

class NotOnChain : public std::invalid_argument {
public:
    NotOnChain() : std::invalid_argument("nodes are not inner nodes of one chain in chain order") {}
};

// Locates every chain of d in the compact representation r and orients it with the root-ordering
// made of the not-surrounded cliques in clique order. Throws NotCompact if a chain is not laid out as a path.
std::vector<ChainPath> chain_paths(const Representation& r, const ChainDecomposition& d);

// Non-path neighbors of nodes[i].
std::vector<Node> attachments(const Representation& r, const ChainPath& path, int i);

// Moves the non-chain neighbors of nodes[i] to nodes[j] (1 <= i <= j <= s). Node ids and models are unchanged.
Representation rehang(const Representation& r, const ChainPath& path, int i, int j);

// Indices i..j into path.nodes (empty on failure).
struct Potential {
    std::vector<int> indices;
    bool empty() const { return indices.empty(); }
    int last() const { return indices.back(); }
};

// A pair (u, v) where u lives below the cut but escapes v nowhere.
struct BlockedPair {
    Vertex u = -1;
    Vertex v = -1;
};

// Potential of the branching node nodes[i], computed with per-subtree escape tables.
// Candidates stop before the next branching node of the path. blocked receives the first blocked pair.
Potential potential(const Graph& g, const Representation& r, const ChainPath& path, int i, BlockedPair* blocked = nullptr);

struct Certificate {
    Node template_node = -1;
    BlockedPair pair;
    std::string reason;
};

struct Realization {
    std::optional<Representation> rep;
    std::optional<Certificate> certificate;
};

Realization realize_template(const Graph& g, const ChainDecomposition& d, const Template& tpl, const RootOrdering& rbar);

// Compact representation of a connected chordal graph on a re-subdivision of t, if one exists.
std::optional<Representation> recognize_compact(const Graph& g, const HostTree& t);
std::optional<Representation> recognize(const Graph& g, const HostTree& t);

struct Leafage {
    int leaves = 0;
    HostTree witness;
    bool resolved = true;
};
// Homeomorphically reduced trees with exactly the given number of leaves, up to isomorphism.
std::vector<HostTree> reduced_trees(int leaves);
Leafage proper_leafage(const Graph& g, int max_leaves = -1);

}  // namespace ptg
