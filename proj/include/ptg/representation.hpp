#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptg/graph.hpp"
#include "ptg/host.hpp"

namespace ptg {

enum class RepMode { Proper, Compact };

struct Representation {
    Host host;
    std::vector<NodeSet> models;  // M_v for every vertex v, sorted node ids
    RepMode mode = RepMode::Proper;

    // V_x for every node x: the vertices whose model contains x.
    std::vector<VertexSet> node_sets() const;
};

// Builds the compact-form representation whose node sets are given; models are derived.
Representation representation_from_node_sets(const Host& host, const std::vector<VertexSet>& node_sets, int vertex_count,
                                              RepMode mode = RepMode::Compact);

struct Violation {
    std::string condition;  // "model", "connected", "edge", "non-edge", "containment", "C1", "C2", "C3", "host"
    std::string detail;
    int a = -1;  // vertex, node, or first vertex of a pair
    int b = -1;
};

struct Verdict {
    bool ok = true;
    std::optional<Violation> violation;
    explicit operator bool() const { return ok; }
};

Verdict verify_represents(const Graph& g, const Representation& r);
Verdict verify_proper(const Graph& g, const Representation& r);
Verdict verify_compact(const Graph& g, const Representation& r);

struct EscapeWitness {
    Node x;
    Node y;
};
std::optional<EscapeWitness> escapes(const Representation& r, Vertex u, Vertex v);
std::optional<EscapeWitness> strongly_escapes(const Representation& r, Vertex u, Vertex v);
// Same relations evaluated on precomputed node sets.
std::optional<EscapeWitness> escapes(const Host& h, const std::vector<VertexSet>& vx, Vertex u, Vertex v);
std::optional<EscapeWitness> strongly_escapes(const Host& h, const std::vector<VertexSet>& vx, Vertex u, Vertex v);

struct KComponent {
    VertexSet gamma;
    VertexSet neighborhood;
    NodeSet model;
};
std::vector<KComponent> components_K(const Graph& g, const Representation& r, Node y);

class NotCompact : public std::invalid_argument {
public:
    explicit NotCompact(const std::string& why) : std::invalid_argument("representation is not compact: " + why) {}
};
class NotProper : public std::invalid_argument {
public:
    explicit NotProper(const std::string& why) : std::invalid_argument("representation is not proper: " + why) {}
};

Representation proper_from_compact(const Graph& g, const Representation& r);
Representation compact_from_proper(const Graph& g, const Representation& r);

// Twin classes (equal closed neighborhoods), each sorted, listed by smallest member.
std::vector<VertexSet> twin_classes(const Graph& g);

std::string representation_to_json(const Graph& g, const Representation& r);
Representation representation_from_json(const Graph& g, const std::string& text);
std::string representation_to_dot(const Graph& g, const Representation& r);
std::string describe(const Violation& v);

}  // namespace ptg
