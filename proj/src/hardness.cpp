#include "ptg/hardness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include <json.hpp>

namespace ptg {

namespace {

const char* const kReserved[] = {"u_min", "v_min", "u_max", "v_max"};

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

std::string element_name(int i) {
    if (i < 26) return std::string(1, static_cast<char>('a' + i));
    return "e" + std::to_string(i);
}

// Relation as a bit mask over ordered pairs x * n + y; only used for n <= 8.
using Mask = std::uint64_t;

Mask mask_of(const Relation& r) {
    Mask m = 0;
    int n = static_cast<int>(r.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (r[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) m |= Mask{1} << (x * n + y);
    return m;
}

Relation relation_of_mask(Mask m, int n) {
    Relation r(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (m >> (x * n + y) & 1) r[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 1;
    return r;
}

// Every interval order containing `must` on n elements, as masks, keeping only the inclusion-minimal ones.
std::vector<Mask> minimal_interval_extensions(const Relation& must) {
    int n = static_cast<int>(must.size());
    std::unordered_set<Mask> found;
    std::vector<Interval> iv(static_cast<std::size_t>(n));
    // Endpoints in [0, n) suffice: an interval order has at most n distinct predecessor sets.
    std::function<void(int)> rec = [&](int x) {
        if (x == n) {
            Mask m = 0;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (a != b && iv[static_cast<std::size_t>(a)].right < iv[static_cast<std::size_t>(b)].left) m |= Mask{1} << (a * n + b);
            found.insert(m);
            return;
        }
        for (int l = 0; l < n; ++l)
            for (int r = l; r < n; ++r) {
                bool ok = true;
                for (int y = 0; y < x && ok; ++y) {
                    const auto& o = iv[static_cast<std::size_t>(y)];
                    if (must[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] && !(r < o.left)) ok = false;
                    if (must[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] && !(o.right < l)) ok = false;
                }
                if (!ok) continue;
                iv[static_cast<std::size_t>(x)] = {l, r};
                rec(x + 1);
            }
    };
    rec(0);
    std::vector<Mask> all(found.begin(), found.end());
    std::sort(all.begin(), all.end(), [](Mask a, Mask b) {
        int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<Mask> minimal;
    for (Mask m : all) {
        bool dominated = false;
        for (Mask k : minimal)
            if ((k & m) == k) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(m);
    }
    return minimal;
}

// Smallest list of at most max_k masks from `cands` whose intersection is exactly target.
std::optional<std::vector<Mask>> intersect_to(const std::vector<Mask>& cands, Mask target, int max_k) {
    for (int k = 1; k <= max_k; ++k) {
        std::vector<std::size_t> pick;
        std::function<bool(std::size_t, Mask)> rec = [&](std::size_t from, Mask acc) {
            if (static_cast<int>(pick.size()) == k) return acc == target;
            for (std::size_t i = from; i < cands.size(); ++i) {
                pick.push_back(i);
                if (rec(i + 1, acc & cands[i])) return true;
                pick.pop_back();
            }
            return false;
        };
        if (rec(0, ~Mask{0})) {
            std::vector<Mask> out;
            for (auto i : pick) out.push_back(cands[i]);
            return out;
        }
    }
    return std::nullopt;
}

// Simple paths from s to t in a multigraph given by an edge list; stops after `cap` paths.
std::vector<std::vector<Node>> simple_paths(int n, const std::vector<std::pair<Node, Node>>& edges, Node s, Node t, std::size_t cap) {
    std::vector<std::vector<Node>> adj(static_cast<std::size_t>(n));
    for (auto [a, b] : edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    std::vector<std::vector<Node>> out;
    std::vector<Node> cur{s};
    std::vector<char> on(static_cast<std::size_t>(n), 0);
    on[static_cast<std::size_t>(s)] = 1;
    std::function<void(Node)> dfs = [&](Node x) {
        if (out.size() > cap) return;
        if (x == t) {
            out.push_back(cur);
            return;
        }
        for (Node y : adj[static_cast<std::size_t>(x)]) {
            if (on[static_cast<std::size_t>(y)]) continue;
            on[static_cast<std::size_t>(y)] = 1;
            cur.push_back(y);
            dfs(y);
            cur.pop_back();
            on[static_cast<std::size_t>(y)] = 0;
        }
    };
    dfs(s);
    return out;
}

}  // namespace

bool HeightOnePoset::less(Element a, Element b) const {
    return std::find(relation.begin(), relation.end(), std::make_pair(a, b)) != relation.end();
}

void validate(const HeightOnePoset& p) {
    int n = p.size();
    std::vector<int> role(static_cast<std::size_t>(n), 0);
    for (Element x : p.minimal) {
        if (x < 0 || x >= n || role[static_cast<std::size_t>(x)]) throw InvalidPoset("element listed twice or out of range");
        role[static_cast<std::size_t>(x)] = 1;
    }
    for (Element x : p.maximal) {
        if (x < 0 || x >= n || role[static_cast<std::size_t>(x)]) throw InvalidPoset("element listed twice or out of range");
        role[static_cast<std::size_t>(x)] = 2;
    }
    for (int x = 0; x < n; ++x)
        if (!role[static_cast<std::size_t>(x)]) throw InvalidPoset("element '" + p.names[static_cast<std::size_t>(x)] + "' is neither minimal nor maximal");
    for (auto [a, b] : p.relation) {
        if (a < 0 || a >= n || b < 0 || b >= n) throw InvalidPoset("relation uses an unknown element");
        if (role[static_cast<std::size_t>(a)] != 1 || role[static_cast<std::size_t>(b)] != 2)
            throw InvalidPoset("relation pair must go from a minimal to a maximal element");
    }
    std::set<std::string> names(p.names.begin(), p.names.end());
    if (static_cast<int>(names.size()) != n) throw InvalidPoset("duplicate element name");
    for (const char* r : kReserved)
        if (names.count(r)) throw InvalidPoset(std::string("element name '") + r + "' is reserved for the gadget");
}

HeightOnePoset parse_poset(const std::string& text) {
    HeightOnePoset p;
    std::map<std::string, Element> ids;
    std::set<std::pair<Element, Element>> rel;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool seen_min = false, seen_max = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = tokenize(line);
        if (toks.empty() || toks[0].first[0] == '#') continue;
        const std::string& head = toks[0].first;
        if (head == "min:" || head == "max:") {
            bool is_min = head == "min:";
            if (is_min ? seen_min : seen_max) throw ParseError(lineno, toks[0].second, "repeated '" + head + "' line");
            (is_min ? seen_min : seen_max) = true;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                const auto& [name, col] = toks[i];
                if (ids.count(name)) throw ParseError(lineno, col, "element '" + name + "' listed twice");
                for (const char* r : kReserved)
                    if (name == r) throw ParseError(lineno, col, "element name '" + name + "' is reserved");
                Element id = p.size();
                ids[name] = id;
                p.names.push_back(name);
                (is_min ? p.minimal : p.maximal).push_back(id);
            }
        } else if (head == "rel:") {
            if (toks.size() != 3) throw ParseError(lineno, toks.size() > 3 ? toks[3].second : static_cast<int>(line.size()) + 1, "expected 'rel: a b'");
            auto a = ids.find(toks[1].first);
            auto b = ids.find(toks[2].first);
            if (a == ids.end()) throw ParseError(lineno, toks[1].second, "unknown element '" + toks[1].first + "'");
            if (b == ids.end()) throw ParseError(lineno, toks[2].second, "unknown element '" + toks[2].first + "'");
            bool a_min = std::count(p.minimal.begin(), p.minimal.end(), a->second) > 0;
            bool b_max = std::count(p.maximal.begin(), p.maximal.end(), b->second) > 0;
            if (!a_min) throw ParseError(lineno, toks[1].second, "'" + toks[1].first + "' is not a minimal element");
            if (!b_max) throw ParseError(lineno, toks[2].second, "'" + toks[2].first + "' is not a maximal element");
            rel.insert({a->second, b->second});
        } else {
            throw ParseError(lineno, toks[0].second, "expected 'min:', 'max:' or 'rel:'");
        }
    }
    p.relation.assign(rel.begin(), rel.end());
    validate(p);
    return p;
}

std::string write_poset(const HeightOnePoset& p) {
    std::ostringstream out;
    out << "min:";
    for (Element x : p.minimal) out << ' ' << p.names[static_cast<std::size_t>(x)];
    out << "\nmax:";
    for (Element x : p.maximal) out << ' ' << p.names[static_cast<std::size_t>(x)];
    out << '\n';
    for (auto [a, b] : p.relation) out << "rel: " << p.names[static_cast<std::size_t>(a)] << ' ' << p.names[static_cast<std::size_t>(b)] << '\n';
    return out.str();
}

bool IntervalOrder::less(Element x, Element y) const {
    return intervals[static_cast<std::size_t>(x)].right < intervals[static_cast<std::size_t>(y)].left;
}

Relation relation_of(const IntervalOrder& order) {
    int n = order.size();
    Relation r(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && order.less(x, y)) r[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 1;
    return r;
}

Relation relation_of(const HeightOnePoset& p) {
    int n = p.size();
    Relation r(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (auto [a, b] : p.relation) r[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    return r;
}

bool is_strict_order(const Relation& r) {
    std::size_t n = r.size();
    for (std::size_t x = 0; x < n; ++x) {
        if (r[x][x]) return false;
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                if (r[x][y] && r[y][z] && !r[x][z]) return false;
    }
    return true;
}

std::optional<IntervalOrder> interval_representation(const Relation& r) {
    if (!is_strict_order(r)) return std::nullopt;
    std::size_t n = r.size();
    // Predecessor sets of an interval order are totally ordered by inclusion.
    std::vector<std::vector<char>> down(n, std::vector<char>(n, 0));
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t x = 0; x < n; ++x) down[y][x] = r[x][y];
    auto sub = [&](const std::vector<char>& a, const std::vector<char>& b) {
        for (std::size_t i = 0; i < n; ++i)
            if (a[i] && !b[i]) return false;
        return true;
    };
    std::vector<std::vector<char>> chain(down.begin(), down.end());
    std::sort(chain.begin(), chain.end(), [](const auto& a, const auto& b) {
        return std::count(a.begin(), a.end(), 1) < std::count(b.begin(), b.end(), 1);
    });
    chain.erase(std::unique(chain.begin(), chain.end()), chain.end());
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (!sub(chain[i], chain[i + 1])) return std::nullopt;
    IntervalOrder out;
    out.intervals.resize(n);
    auto k = static_cast<std::int64_t>(chain.size());
    for (std::size_t x = 0; x < n; ++x) {
        auto it = std::find(chain.begin(), chain.end(), down[x]);
        std::int64_t left = it - chain.begin();
        std::int64_t right = k - 1;
        for (std::int64_t i = 0; i < k; ++i)
            if (chain[static_cast<std::size_t>(i)][x]) {
                right = i - 1;
                break;
            }
        out.intervals[x] = {left, right};
    }
    return out;
}

bool is_interval_order(const Relation& r) { return interval_representation(r).has_value(); }

bool is_two_plus_two_free(const Relation& r) {
    std::size_t n = r.size();
    auto comparable = [&](std::size_t x, std::size_t y) { return r[x][y] || r[y][x]; };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!r[a][b]) continue;
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    if (!r[c][d] || c == a || c == b || d == a || d == b) continue;
                    if (!comparable(a, c) && !comparable(a, d) && !comparable(b, c) && !comparable(b, d)) return false;
                }
        }
    return true;
}

bool check_certificate(const HeightOnePoset& p, const IntervalOrder& i1, const IntervalOrder& i2, const IntervalOrder& i3) {
    int n = p.size();
    if (i1.size() != n || i2.size() != n || i3.size() != n) throw DomainMismatch();
    auto rel = relation_of(p);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            bool all = i1.less(x, y) && i2.less(x, y) && i3.less(x, y);
            if (all != static_cast<bool>(rel[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)])) return false;
        }
    return true;
}

bool check_certificate(const HeightOnePoset& p, const Certificate3& c) { return check_certificate(p, c[0], c[1], c[2]); }

int interval_dimension(const HeightOnePoset& p) {
    validate(p);
    int n = p.size();
    if (n > 6) throw std::invalid_argument("interval dimension search is limited to 6 elements");
    if (n == 0) return 1;
    auto rel = relation_of(p);
    auto cands = minimal_interval_extensions(rel);
    auto best = intersect_to(cands, mask_of(rel), n);
    return best ? static_cast<int>(best->size()) : n + 1;
}

std::optional<Certificate3> find_certificate(const HeightOnePoset& p) {
    validate(p);
    int n = p.size();
    if (n > 6) throw std::invalid_argument("certificate search is limited to 6 elements");
    Certificate3 out;
    if (n == 0) return out;
    auto rel = relation_of(p);
    auto picked = intersect_to(minimal_interval_extensions(rel), mask_of(rel), 3);
    if (!picked) return std::nullopt;
    for (std::size_t j = 0; j < 3; ++j) {
        Mask m = (*picked)[std::min(j, picked->size() - 1)];
        out[j] = *interval_representation(relation_of_mask(m, n));
    }
    return out;
}

Host graph_D() { return host_from_edges(4, {{0, 1}, {1, 2}, {1, 2}, {1, 2}, {2, 3}}); }

Gadget gadget_graph(const HeightOnePoset& p) {
    validate(p);
    int n = p.size();
    Gadget gd;
    gd.graph = Graph(n + 4);
    gd.u_min = n;
    gd.v_min = n + 1;
    gd.u_max = n + 2;
    gd.v_max = n + 3;
    auto clique = [&](const std::vector<Element>& side, Vertex hub) {
        for (std::size_t i = 0; i < side.size(); ++i) {
            gd.graph.add_edge(side[i], hub);
            for (std::size_t j = i + 1; j < side.size(); ++j) gd.graph.add_edge(side[i], side[j]);
        }
    };
    clique(p.minimal, gd.v_min);
    clique(p.maximal, gd.v_max);
    gd.graph.add_edge(gd.u_min, gd.v_min);
    gd.graph.add_edge(gd.u_max, gd.v_max);
    for (Element a : p.minimal)
        for (Element b : p.maximal)
            if (!p.less(a, b)) gd.graph.add_edge(a, b);
    auto labels = p.names;
    for (const char* r : kReserved) labels.emplace_back(r);
    gd.graph.set_labels(std::move(labels));
    return gd;
}

Representation d_representation_from_certificate(const HeightOnePoset& p, const Certificate3& c) {
    if (!check_certificate(p, c)) throw InvalidCertificate();
    Gadget gd = gadget_graph(p);
    int n = p.size();
    Host h(2);
    const Node a_min = 0, a_max = 1;
    std::vector<NodeSet> models(static_cast<std::size_t>(n + 4));
    for (Element x : p.minimal) models[static_cast<std::size_t>(x)].push_back(a_min);
    for (Element x : p.maximal) models[static_cast<std::size_t>(x)].push_back(a_max);

    // Base representation on the three parallel paths: minimal elements take prefixes from a_min up to
    // their right endpoint, maximal elements suffixes from their left endpoint to a_max. Equal endpoints
    // put left endpoints first (so touching intervals intersect) and then break ties by element id.
    for (const auto& order : c) {
        struct Event {
            std::int64_t at;
            int kind;  // 0 = left endpoint of a maximal element, 1 = right endpoint of a minimal one
            Element x;
            bool operator<(const Event& o) const { return std::tie(at, kind, x) < std::tie(o.at, o.kind, o.x); }
        };
        std::vector<Event> ev;
        for (Element x : p.minimal) ev.push_back({order.intervals[static_cast<std::size_t>(x)].right, 1, x});
        for (Element x : p.maximal) ev.push_back({order.intervals[static_cast<std::size_t>(x)].left, 0, x});
        std::sort(ev.begin(), ev.end());
        std::vector<Node> path;
        Node prev = a_min;
        for (std::size_t i = 0; i < ev.size(); ++i) {
            Node z = h.add_node();
            h.add_edge(prev, z);
            path.push_back(z);
            prev = z;
        }
        h.add_edge(prev, a_max);
        for (std::size_t i = 0; i < ev.size(); ++i) {
            auto& m = models[static_cast<std::size_t>(ev[i].x)];
            if (ev[i].kind == 1) m.insert(m.end(), path.begin(), path.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            else m.insert(m.end(), path.begin() + static_cast<std::ptrdiff_t>(i), path.end());
        }
    }
    models[static_cast<std::size_t>(gd.v_min)] = {a_min};
    models[static_cast<std::size_t>(gd.v_max)] = {a_max};
    for (auto& m : models) m = normalized(std::move(m));

    // Staircase on the pendant edge: a linear extension of strict model containment (smallest id first
    // among the available) gets ever shorter tails, which breaks every containment on this side.
    auto staircase = [&](std::vector<Vertex> side, Node hub, Vertex u) {
        std::sort(side.begin(), side.end());
        std::vector<Vertex> order;
        std::vector<char> used(side.size(), 0);
        for (std::size_t step = 0; step < side.size(); ++step) {
            for (std::size_t i = 0; i < side.size(); ++i) {
                if (used[i]) continue;
                bool available = true;
                for (std::size_t j = 0; j < side.size() && available; ++j) {
                    if (used[j] || j == i) continue;
                    const auto& mi = models[static_cast<std::size_t>(side[i])];
                    const auto& mj = models[static_cast<std::size_t>(side[j])];
                    if (mj.size() < mi.size() && is_subset(mj, mi)) available = false;
                }
                if (available) {
                    used[i] = 1;
                    order.push_back(side[i]);
                    break;
                }
            }
        }
        // Tail b_0, b_1, ..., b_l, hub.
        std::size_t l = order.size();
        std::vector<Node> b(l + 1);
        for (auto& z : b) z = h.add_node();
        for (std::size_t i = 0; i < l; ++i) h.add_edge(b[i], b[i + 1]);
        h.add_edge(b[l], hub);
        for (std::size_t i = 1; i <= l; ++i) {
            auto& m = models[static_cast<std::size_t>(order[i - 1])];
            m.insert(m.end(), b.begin() + static_cast<std::ptrdiff_t>(i), b.end());
            m = normalized(std::move(m));
        }
        models[static_cast<std::size_t>(u)] = normalized({b[0], b[1]});
    };
    auto with = [](std::vector<Element> side, Vertex v) {
        side.push_back(v);
        return side;
    };
    staircase(with(p.minimal, gd.v_min), a_min, gd.u_min);
    staircase(with(p.maximal, gd.v_max), a_max, gd.u_max);

    Representation r;
    r.host = std::move(h);
    r.models = std::move(models);
    r.mode = RepMode::Proper;
    return r;
}

Certificate3 interval_orders_from_representation(const HeightOnePoset& p, const Representation& r) {
    Gadget gd = gadget_graph(p);
    if (static_cast<int>(r.models.size()) != gd.graph.n()) throw NotAGadgetRepresentation("wrong number of models");
    if (auto v = verify_represents(gd.graph, r); !v) throw NotAGadgetRepresentation(describe(*v.violation));
    if (!is_re_subdivision(r.host, graph_D())) throw NotAGadgetRepresentation("host is not a re-subdivision of D");

    int nodes = r.host.n();
    std::vector<std::pair<Node, Node>> edges;
    for (const auto& e : r.host.edges()) edges.emplace_back(e.u, e.v);
    auto models = r.models;

    // Shrinks the model of the pendant vertex u to a fresh edge (x', y') hanging off its hub v, so that
    // v's model gains x' and y' is a dead end. Returns x'.
    auto normalize = [&](Vertex u, Vertex v) {
        auto& mu = models[static_cast<std::size_t>(u)];
        auto& mv = models[static_cast<std::size_t>(v)];
        auto x_side = set_intersection(mu, mv);
        auto y_side = set_difference(mu, mv);
        if (x_side.empty() || y_side.empty()) throw NotAGadgetRepresentation("pendant model is not proper");
        for (auto& e : edges) {
            Node x = e.first, y = e.second;
            if (contains(y_side, x)) std::swap(x, y);
            if (!contains(x_side, x) || !contains(y_side, y)) continue;
            Node xp = nodes++, yp = nodes++;
            e = {x, xp};
            edges.emplace_back(xp, yp);
            mu = {xp, yp};
            mv = normalized(set_union(mv, {xp}));
            return xp;
        }
        throw NotAGadgetRepresentation("pendant model is disconnected from its hub");
    };
    Node x_min = normalize(gd.u_min, gd.v_min);
    Node x_max = normalize(gd.u_max, gd.v_max);

    auto paths = simple_paths(nodes, edges, x_min, x_max, 3);
    if (paths.size() > 3) throw NotAGadgetRepresentation("more than three paths between the hubs");

    std::vector<IntervalOrder> orders;
    for (const auto& path : paths) {
        std::vector<int> index(static_cast<std::size_t>(nodes), -1);
        for (std::size_t i = 0; i < path.size(); ++i) index[static_cast<std::size_t>(path[i])] = static_cast<int>(i);
        auto len = static_cast<std::int64_t>(path.size());
        IntervalOrder o;
        o.intervals.resize(static_cast<std::size_t>(p.size()));
        // After absorbing the hub's model, a minimal element's trace on the path closes to a prefix
        // ending at its furthest node; a maximal element's trace to the matching suffix.
        for (Element x : p.minimal) {
            std::int64_t right = -1;
            for (Node z : set_union(models[static_cast<std::size_t>(x)], models[static_cast<std::size_t>(gd.v_min)]))
                right = std::max<std::int64_t>(right, index[static_cast<std::size_t>(z)]);
            o.intervals[static_cast<std::size_t>(x)] = {0, right};
        }
        for (Element x : p.maximal) {
            std::int64_t left = len;
            for (Node z : set_union(models[static_cast<std::size_t>(x)], models[static_cast<std::size_t>(gd.v_max)]))
                if (index[static_cast<std::size_t>(z)] >= 0) left = std::min<std::int64_t>(left, index[static_cast<std::size_t>(z)]);
            o.intervals[static_cast<std::size_t>(x)] = {left, len};
        }
        orders.push_back(std::move(o));
    }
    // Missing paths are padded with the order placing every minimal element before every maximal one,
    // which contains every relation of a height-one poset.
    while (orders.size() < 3) {
        IntervalOrder o;
        o.intervals.resize(static_cast<std::size_t>(p.size()));
        for (Element x : p.minimal) o.intervals[static_cast<std::size_t>(x)] = {0, 0};
        for (Element x : p.maximal) o.intervals[static_cast<std::size_t>(x)] = {1, 1};
        orders.push_back(std::move(o));
    }
    Certificate3 out{orders[0], orders[1], orders[2]};
    if (!check_certificate(p, out)) throw NotAGadgetRepresentation("extracted orders do not intersect to the poset");
    return out;
}

std::string certificate_to_json(const HeightOnePoset& p, const Certificate3& c) {
    nlohmann::ordered_json j;
    j["orders"] = nlohmann::json::array();
    for (const auto& o : c) {
        nlohmann::ordered_json oj = nlohmann::ordered_json::object();
        for (Element x = 0; x < p.size(); ++x)
            oj[p.names[static_cast<std::size_t>(x)]] = {o.intervals[static_cast<std::size_t>(x)].left, o.intervals[static_cast<std::size_t>(x)].right};
        j["orders"].push_back(oj);
    }
    return j.dump(2);
}

Certificate3 certificate_from_json(const HeightOnePoset& p, const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t off = std::min<std::size_t>(e.byte, text.size());
        int line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < off; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(line, col, "malformed JSON");
    }
    Certificate3 out;
    try {
        const auto& orders = j.at("orders");
        if (!orders.is_array() || orders.size() != 3) throw ParseError(1, 1, "expected exactly three orders");
        std::map<std::string, Element> ids;
        for (Element x = 0; x < p.size(); ++x) ids[p.names[static_cast<std::size_t>(x)]] = x;
        for (std::size_t k = 0; k < 3; ++k) {
            out[k].intervals.resize(static_cast<std::size_t>(p.size()));
            std::vector<char> seen(static_cast<std::size_t>(p.size()), 0);
            for (const auto& [name, iv] : orders[k].items()) {
                auto it = ids.find(name);
                if (it == ids.end()) throw ParseError(1, 1, "unknown element '" + name + "' in order " + std::to_string(k));
                Interval v{iv.at(0).get<std::int64_t>(), iv.at(1).get<std::int64_t>()};
                if (v.left > v.right) throw ParseError(1, 1, "interval of '" + name + "' has left > right");
                out[k].intervals[static_cast<std::size_t>(it->second)] = v;
                seen[static_cast<std::size_t>(it->second)] = 1;
            }
            if (std::count(seen.begin(), seen.end(), 0)) throw DomainMismatch();
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, 1, std::string("certificate JSON has the wrong shape: ") + e.what());
    }
    return out;
}

std::vector<HeightOnePoset> height_one_posets(int n) {
    std::vector<HeightOnePoset> out;
    for (int m = 0; m <= n; ++m) {
        int k = n - m;
        std::vector<int> pmin(static_cast<std::size_t>(m)), pmax(static_cast<std::size_t>(k));
        std::set<std::uint64_t> seen;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (m * k)); ++bits) {
            // Canonical form: smallest relation mask over all relabelings within each side.
            std::uint64_t best = bits;
            std::iota(pmin.begin(), pmin.end(), 0);
            do {
                std::iota(pmax.begin(), pmax.end(), 0);
                do {
                    std::uint64_t img = 0;
                    for (int a = 0; a < m; ++a)
                        for (int b = 0; b < k; ++b)
                            if (bits >> (a * k + b) & 1) img |= std::uint64_t{1} << (pmin[static_cast<std::size_t>(a)] * k + pmax[static_cast<std::size_t>(b)]);
                    best = std::min(best, img);
                } while (std::next_permutation(pmax.begin(), pmax.end()));
            } while (std::next_permutation(pmin.begin(), pmin.end()));
            if (!seen.insert(best).second) continue;
            HeightOnePoset p;
            for (int i = 0; i < n; ++i) p.names.push_back(element_name(i));
            for (int a = 0; a < m; ++a) p.minimal.push_back(a);
            for (int b = 0; b < k; ++b) p.maximal.push_back(m + b);
            for (int a = 0; a < m; ++a)
                for (int b = 0; b < k; ++b)
                    if (bits >> (a * k + b) & 1) p.relation.emplace_back(a, m + b);
            out.push_back(std::move(p));
        }
    }
    return out;
}

}  // namespace ptg
