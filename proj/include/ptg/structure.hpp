#pragma once

#include <vector>

#include "ptg/graph.hpp"

namespace ptg {

using CliqueId = int;
using CliqueSet = std::vector<CliqueId>;  // sorted

struct Guards {
    CliqueSet L;
    CliqueSet R;
    bool surrounded() const { return !L.empty(); }
};

enum class TerminalKind { NotSurrounded, Guard, SurroundedSingleton };

struct Chain {
    CliqueSet Y0;
    std::vector<CliqueId> inner;  // y_1 .. y_s
    CliqueSet Y1;                 // Y_{s+1}
    TerminalKind kind0 = TerminalKind::NotSurrounded;
    TerminalKind kind1 = TerminalKind::NotSurrounded;

    int s() const { return static_cast<int>(inner.size()); }
    const CliqueSet& terminal(int side) const { return side == 0 ? Y0 : Y1; }
};

struct ChainDecomposition {
    std::vector<VertexSet> cliques;  // canonical (lexicographic) order
    std::vector<Guards> guards;      // per clique
    std::vector<Chain> chains;
    CliqueSet not_surrounded;        // the cliques forming the singleton set S-bar
    std::vector<int> inner_index;    // clique -> chain id, -1 for not surrounded
    std::vector<int> inner_position; // clique -> 1-based position in its chain, 0 otherwise
};

// Components of G - V_y, their neighborhoods, and the component holding V_l \ V_y for each clique l != y.
struct CliqueComponents {
    std::vector<VertexSet> comps;
    std::vector<VertexSet> nbhd;
    std::vector<int> of_clique;  // -1 for y itself
};
CliqueComponents clique_components(const Graph& g, const std::vector<VertexSet>& cliques, CliqueId y);

bool is_surrounding(const Graph& g, const std::vector<VertexSet>& cliques, CliqueId l, CliqueId y, CliqueId r);
Guards guards(const Graph& g, const std::vector<VertexSet>& cliques, CliqueId y);
ChainDecomposition chains(const Graph& g);
// V_x ∩ V_{y_i} is the same for every inner clique of the chain.
bool rehang_neighbors_equal(const Graph& g, const std::vector<VertexSet>& cliques, const Chain& chain, CliqueId x);

// JSON with cliques as sorted vertex lists: {"chains": [...], "not_surrounded": [...]}.
std::string chains_to_json(const Graph& g, const ChainDecomposition& d);

}  // namespace ptg
