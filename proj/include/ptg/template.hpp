#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptg/graph.hpp"
#include "ptg/host.hpp"
#include "ptg/representation.hpp"
#include "ptg/structure.hpp"

namespace ptg {

enum class TemplateNodeKind { Leaf, Single, Inner };

// A re-subdivision T0 of the host tree whose non-leaves carry either a not-surrounded clique
// (Single) or the inner set of a chain (Inner), with every chain mapped onto a path of T0.
struct Template {
    HostTree T0;
    std::vector<TemplateNodeKind> kind;
    std::vector<int> label;              // clique id for Single, chain id for Inner, -1 for leaves
    std::vector<std::vector<Node>> h0;   // per chain: lambda_0 .. lambda_{b+1}, lambda_0 on the Y_0 side

    // The cliques t0(x) may be realized by.
    CliqueSet t0(Node x, const ChainDecomposition& d) const;
};

// Single nodes of T0 sorted by their clique.
using RootOrdering = std::vector<Node>;
RootOrdering root_ordering(const Template& tpl);

// Streams templates to sink until it returns false. Templates are emitted in a fixed order.
void enumerate_templates(const Graph& g, const HostTree& t, const ChainDecomposition& d,
                         const std::function<bool(const Template&)>& sink);
std::vector<Template> all_templates(const Graph& g, const HostTree& t, const ChainDecomposition& d);

// True iff r.host is a subdivision of tpl.T0 with every non-leaf lambda realized by a clique of t0(lambda).
bool realizes(const Graph& g, const Representation& r, const ChainDecomposition& d, const Template& tpl);

class InvariantBroken : public std::logic_error {
public:
    explicit InvariantBroken(const std::string& what) : std::logic_error(what) {}
};

// toward_end: the chain points from Y_0 toward Y_{s+1}.
struct OrientedChain {
    int chain = -1;
    bool toward_end = true;
};
OrientedChain orient_chain(const Template& tpl, const RootOrdering& rbar, int chain);

std::string template_to_json(const Graph& g, const ChainDecomposition& d, const Template& tpl);

}  // namespace ptg
