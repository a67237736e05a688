#include "ptg/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace ptg {

int Graph::m() const {
    std::size_t total = 0;
    for (const auto& a : adj_) total += a.size();
    return static_cast<int>(total / 2);
}

void Graph::add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= n() || v >= n()) throw std::invalid_argument("vertex id out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    auto& au = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return;
    au.insert(it, v);
    auto& av = adj_[static_cast<std::size_t>(v)];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& au = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(au.begin(), au.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::string Graph::label(Vertex v) const {
    if (static_cast<std::size_t>(v) < labels_.size() && !labels_[static_cast<std::size_t>(v)].empty())
        return labels_[static_cast<std::size_t>(v)];
    return std::to_string(v);
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph graph_from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.n()), -1);
    std::vector<VertexSet> out;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        VertexSet members{s};
        comp[static_cast<std::size_t>(s)] = static_cast<int>(out.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (Vertex w : g.neighbors(members[i]))
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = static_cast<int>(out.size());
                    members.push_back(w);
                }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

VertexSet open_neighborhood(const Graph& g, const VertexSet& w) {
    VertexSet out;
    for (Vertex v : w)
        for (Vertex u : g.neighbors(v))
            if (!contains(w, u)) out.push_back(u);
    return normalized(std::move(out));
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
    VertexSet out = g.neighbors(v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    InducedSubgraph r;
    r.old_to_new.assign(static_cast<std::size_t>(g.n()), -1);
    r.new_to_old = keep;
    for (std::size_t i = 0; i < keep.size(); ++i) r.old_to_new[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    r.graph = Graph(static_cast<int>(keep.size()));
    for (Vertex u : keep)
        for (Vertex v : g.neighbors(u)) {
            int a = r.old_to_new[static_cast<std::size_t>(u)], b = r.old_to_new[static_cast<std::size_t>(v)];
            if (b >= 0 && a < b) r.graph.add_edge(a, b);
        }
    if (!g.labels().empty()) {
        std::vector<std::string> labels;
        for (Vertex v : keep) labels.push_back(g.label(v));
        r.graph.set_labels(std::move(labels));
    }
    return r;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

bool intersects(const VertexSet& a, const VertexSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i;
        else ++j;
    }
    return false;
}

bool contains(const VertexSet& a, Vertex v) { return std::binary_search(a.begin(), a.end(), v); }

VertexSet normalized(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

VertexSet iota_set(int n) {
    VertexSet s(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(s.begin(), s.end(), 0);
    return s;
}

namespace {

// Splits a line into tokens, remembering the 1-based column of each.
std::vector<std::pair<std::string, int>> tokenize(const std::string& line) {
    std::vector<std::pair<std::string, int>> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        out.emplace_back(line.substr(i, j - i), static_cast<int>(i) + 1);
        i = j;
    }
    return out;
}

int to_int(const std::string& tok, int line, int col) {
    if (tok.empty() || tok.size() > 9 || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw ParseError(line, col, "expected a non-negative integer, got '" + tok + "'");
    return std::stoi(tok);
}

}  // namespace

RawEdgeList read_raw_edge_list(std::istream& in) {
    RawEdgeList r;
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int m = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = tokenize(line);
        if (toks.empty() || toks[0].first[0] == '#') continue;
        if (toks.size() != 2)
            throw ParseError(lineno, toks.size() > 2 ? toks[2].second : static_cast<int>(line.size()) + 1,
                             have_header ? "expected 'u v'" : "expected header 'n m'");
        int a = to_int(toks[0].first, lineno, toks[0].second);
        int b = to_int(toks[1].first, lineno, toks[1].second);
        if (!have_header) {
            r.n = a;
            m = b;
            have_header = true;
            continue;
        }
        if (static_cast<int>(r.edges.size()) >= m) throw ParseError(lineno, 1, "more edges than declared in header");
        if (a >= r.n) throw ParseError(lineno, toks[0].second, "vertex id out of range");
        if (b >= r.n) throw ParseError(lineno, toks[1].second, "vertex id out of range");
        if (a == b) throw ParseError(lineno, toks[0].second, "self-loop");
        r.edges.emplace_back(a, b);
        r.positions.emplace_back(lineno, toks[0].second);
    }
    if (!have_header) throw ParseError(lineno + 1, 1, "missing header 'n m'");
    if (static_cast<int>(r.edges.size()) != m)
        throw ParseError(lineno + 1, 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(r.edges.size()));
    return r;
}

Graph read_edge_list(std::istream& in) {
    RawEdgeList raw = read_raw_edge_list(in);
    Graph g(raw.n);
    for (std::size_t i = 0; i < raw.edges.size(); ++i) {
        auto [u, v] = raw.edges[i];
        if (g.adjacent(u, v)) throw ParseError(raw.positions[i].first, raw.positions[i].second, "parallel edge");
        g.add_edge(u, v);
    }
    return g;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace ptg
