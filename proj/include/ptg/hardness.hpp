#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ptg/graph.hpp"
#include "ptg/host.hpp"
#include "ptg/representation.hpp"

namespace ptg {

using Element = int;

// A poset of height at most one. Every element is listed exactly once, either as minimal or as
// maximal; relation holds the pairs (a, b) with a minimal, b maximal and a < b.
struct HeightOnePoset {
    std::vector<std::string> names;
    std::vector<Element> minimal;
    std::vector<Element> maximal;
    std::vector<std::pair<Element, Element>> relation;

    int size() const { return static_cast<int>(names.size()); }
    bool less(Element a, Element b) const;
};

class InvalidPoset : public std::invalid_argument {
public:
    explicit InvalidPoset(const std::string& why) : std::invalid_argument("invalid poset: " + why) {}
};
class DomainMismatch : public std::invalid_argument {
public:
    DomainMismatch() : std::invalid_argument("interval order does not cover the poset's elements") {}
};
class InvalidCertificate : public std::invalid_argument {
public:
    InvalidCertificate() : std::invalid_argument("interval orders do not intersect to the poset") {}
};
class NotAGadgetRepresentation : public std::invalid_argument {
public:
    explicit NotAGadgetRepresentation(const std::string& why)
        : std::invalid_argument("not a representation of the gadget graph: " + why) {}
};

// Throws InvalidPoset unless the fields describe a height-one poset.
void validate(const HeightOnePoset& p);
// Text format: "min: a b ...", "max: c d ...", then one "rel: a c" line per relation pair.
// Blank lines and '#' comments are ignored.
HeightOnePoset parse_poset(const std::string& text);
std::string write_poset(const HeightOnePoset& p);

struct Interval {
    std::int64_t left = 0;
    std::int64_t right = 0;
};

// Closed intervals indexed by element; x < y iff right(x) < left(y).
struct IntervalOrder {
    std::vector<Interval> intervals;

    int size() const { return static_cast<int>(intervals.size()); }
    bool less(Element x, Element y) const;
};

// Strict order as an adjacency matrix: lt[x][y] != 0 iff x < y.
using Relation = std::vector<std::vector<char>>;

Relation relation_of(const IntervalOrder& order);
Relation relation_of(const HeightOnePoset& p);
bool is_strict_order(const Relation& r);
// Interval orders via nested predecessor sets.
bool is_interval_order(const Relation& r);
// Direct search for two disjoint 2-chains with no relation across them.
bool is_two_plus_two_free(const Relation& r);
// Integer interval representation of an interval order; nullopt if r is not one.
std::optional<IntervalOrder> interval_representation(const Relation& r);

using Certificate3 = std::array<IntervalOrder, 3>;

// True iff x <_p y exactly when x precedes y in all three orders. Throws DomainMismatch on size mismatch.
bool check_certificate(const HeightOnePoset& p, const IntervalOrder& i1, const IntervalOrder& i2, const IntervalOrder& i3);
bool check_certificate(const HeightOnePoset& p, const Certificate3& c);

// Exhaustive interval dimension for small posets (at most 6 elements); throws std::invalid_argument beyond.
int interval_dimension(const HeightOnePoset& p);
// A three-order certificate when the interval dimension is at most 3 (orders repeat when it is smaller).
std::optional<Certificate3> find_certificate(const HeightOnePoset& p);

// The multigraph with nodes a=0, b=1, c=2, d=3 and edges ab, bc, bc, bc, cd.
Host graph_D();

struct Gadget {
    Graph graph;          // vertex x < |P| is element x; then u_min, v_min, u_max, v_max
    Vertex u_min = -1;
    Vertex v_min = -1;
    Vertex u_max = -1;
    Vertex v_max = -1;
};
Gadget gadget_graph(const HeightOnePoset& p);

// Proper representation of gadget_graph(p) on a subdivision of graph_D(). Throws InvalidCertificate.
Representation d_representation_from_certificate(const HeightOnePoset& p, const Certificate3& c);
// Three interval orders intersecting to p, read off a proper representation of the gadget graph
// on a re-subdivision of graph_D(). Throws NotAGadgetRepresentation.
Certificate3 interval_orders_from_representation(const HeightOnePoset& p, const Representation& r);

std::string certificate_to_json(const HeightOnePoset& p, const Certificate3& c);
Certificate3 certificate_from_json(const HeightOnePoset& p, const std::string& text);

// Every height-one poset with exactly n elements, up to relabeling within the min/max split only
// (min count m from 0..n, then every relation subset).
std::vector<HeightOnePoset> height_one_posets(int n);

}  // namespace ptg
