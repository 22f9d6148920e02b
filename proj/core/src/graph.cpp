#include "p3/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "p3/errors.hpp"

namespace p3 {

Graph::Graph(int n, const std::vector<Edge>& edges, std::vector<std::string> names)
    : adjacency_(static_cast<std::size_t>(std::max(n, 0))), names_(std::move(names)) {
    if (n < 0) throw ContractError("negative vertex count");
    if (!names_.empty() && names_.size() != static_cast<std::size_t>(n)) {
        throw ContractError("name table size does not match vertex count");
    }
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw ContractError("edge endpoint out of range: " + std::to_string(u) + " " +
                                std::to_string(v));
        }
        if (u == v) throw ContractError("self-loop at vertex " + std::to_string(u));
        adjacency_[static_cast<std::size_t>(u)].push_back(v);
        adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end());
        if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
            throw ContractError("duplicate edge");
        }
    }
    edge_count_ = edges.size();
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || u >= n() || v < 0 || v >= n()) return false;
    const auto& a = neighbors(u);
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n(); ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

VertexSet InducedSubgraph::lift(const VertexSet& local, std::size_t parent_universe) const {
    VertexSet out(parent_universe);
    for (Vertex v : local) out.insert(to_parent[static_cast<std::size_t>(v)]);
    return out;
}

VertexSet InducedSubgraph::restrict(const VertexSet& parent) const {
    VertexSet out(static_cast<std::size_t>(graph.n()));
    for (Vertex v : parent) {
        const Vertex local = from_parent[static_cast<std::size_t>(v)];
        if (local >= 0) out.insert(local);
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    InducedSubgraph out;
    out.from_parent.assign(static_cast<std::size_t>(g.n()), -1);
    for (Vertex v : keep) {
        out.from_parent[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.to_parent.size());
        out.to_parent.push_back(v);
    }
    std::vector<Edge> edges;
    for (Vertex u : keep) {
        for (Vertex v : g.neighbors(u)) {
            if (u < v && keep.contains(v)) {
                edges.emplace_back(out.from_parent[static_cast<std::size_t>(u)],
                                   out.from_parent[static_cast<std::size_t>(v)]);
            }
        }
    }
    std::vector<std::string> names;
    if (!g.names().empty()) {
        for (Vertex v : out.to_parent) names.push_back(g.names()[static_cast<std::size_t>(v)]);
    }
    out.graph = Graph(static_cast<int>(out.to_parent.size()), edges, std::move(names));
    return out;
}

// --- I/O ---------------------------------------------------------------------

namespace {

bool parse_int(std::string_view token, int& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

// Shared validation for both input formats: reports the offending line.
struct EdgeCollector {
    std::optional<int> declared_n;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    int max_vertex = -1;

    void add(int u, int v, std::size_t line) {
        if (u < 0 || v < 0) throw ParseError(line, "negative vertex index");
        if (declared_n && (u >= *declared_n || v >= *declared_n)) {
            throw ParseError(line, "endpoint out of range for n=" + std::to_string(*declared_n));
        }
        if (u == v) throw ParseError(line, "self-loop at vertex " + std::to_string(u));
        const Edge key{std::min(u, v), std::max(u, v)};
        if (!seen.insert(key).second) {
            throw ParseError(line, "duplicate edge " + std::to_string(key.first) + " " +
                                       std::to_string(key.second));
        }
        edges.push_back(key);
        max_vertex = std::max({max_vertex, u, v});
    }

    int vertex_count() const { return declared_n ? *declared_n : max_vertex + 1; }
};

Graph parse_text(std::string_view text) {
    EdgeCollector collector;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens.size() == 2 && tokens[0] == "n") {
            int n = 0;
            if (!parse_int(tokens[1], n) || n < 0) throw ParseError(line_no, "malformed vertex count");
            if (collector.declared_n) throw ParseError(line_no, "vertex count declared twice");
            if (!collector.edges.empty()) {
                throw ParseError(line_no, "vertex count must precede the edges");
            }
            collector.declared_n = n;
            continue;
        }
        int u = 0;
        int v = 0;
        if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v)) {
            throw ParseError(line_no, "expected \"u v\"");
        }
        collector.add(u, v, line_no);
    }
    return Graph(collector.vertex_count(), collector.edges);
}

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

Graph parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(line_of_offset(text, e.byte), "invalid JSON");
    }
    if (!doc.is_object() || doc.value("format", "") != "p3graph-v1") {
        throw ParseError(1, "expected {\"format\":\"p3graph-v1\",...}");
    }
    if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<int>() < 0) {
        throw ParseError(1, "missing or invalid \"n\"");
    }
    EdgeCollector collector;
    collector.declared_n = doc["n"].get<int>();
    const auto edges = doc.value("edges", nlohmann::json::array());
    if (!edges.is_array()) throw ParseError(1, "\"edges\" must be an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        // JSON input has no meaningful lines; edge index + 1 plays that role.
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw ParseError(i + 1, "edge must be [u,v]");
        }
        collector.add(e[0].get<int>(), e[1].get<int>(), i + 1);
    }
    std::vector<std::string> names;
    if (doc.contains("names")) {
        if (!doc["names"].is_array() || doc["names"].size() != static_cast<std::size_t>(*collector.declared_n)) {
            throw ParseError(1, "\"names\" must list one name per vertex");
        }
        for (const auto& name : doc["names"]) names.push_back(name.get<std::string>());
    }
    return Graph(collector.vertex_count(), collector.edges, std::move(names));
}

}  // namespace

Graph parse_graph(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
    return parse_text(text);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.n() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string serialize_graph_json(const Graph& g) {
    nlohmann::json doc;
    doc["format"] = "p3graph-v1";
    doc["n"] = g.n();
    auto edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    doc["edges"] = std::move(edges);
    if (!g.names().empty()) doc["names"] = g.names();
    return doc.dump();
}

// --- algorithms ------------------------------------------------------------------

Bipartition bipartition(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.n());
    std::vector<int> color(n, -1);
    std::vector<Vertex> parent(n, -1);
    std::vector<int> depth(n, 0);
    for (Vertex root = 0; root < g.n(); ++root) {
        if (color[static_cast<std::size_t>(root)] != -1) continue;
        color[static_cast<std::size_t>(root)] = 0;
        std::deque<Vertex> queue{root};
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            for (Vertex v : g.neighbors(u)) {
                const auto vi = static_cast<std::size_t>(v);
                const auto ui = static_cast<std::size_t>(u);
                if (color[vi] == -1) {
                    color[vi] = 1 - color[ui];
                    parent[vi] = u;
                    depth[vi] = depth[ui] + 1;
                    queue.push_back(v);
                } else if (color[vi] == color[ui]) {
                    // Climb both BFS-tree paths to their lowest common ancestor.
                    std::vector<Vertex> left{u};
                    std::vector<Vertex> right{v};
                    Vertex a = u;
                    Vertex b = v;
                    while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) {
                        a = parent[static_cast<std::size_t>(a)];
                        left.push_back(a);
                    }
                    while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) {
                        b = parent[static_cast<std::size_t>(b)];
                        right.push_back(b);
                    }
                    while (a != b) {
                        a = parent[static_cast<std::size_t>(a)];
                        b = parent[static_cast<std::size_t>(b)];
                        left.push_back(a);
                        right.push_back(b);
                    }
                    right.pop_back();  // lca already on the left path
                    std::vector<Vertex> cycle(left.begin(), left.end());
                    cycle.insert(cycle.end(), right.rbegin(), right.rend());
                    throw NotBipartiteError(std::move(cycle));
                }
            }
        }
    }
    Bipartition out{VertexSet(n), VertexSet(n)};
    for (Vertex v = 0; v < g.n(); ++v) {
        (color[static_cast<std::size_t>(v)] == 0 ? out.first : out.second).insert(v);
    }
    return out;
}

bool is_bipartite(const Graph& g) {
    try {
        bipartition(g);
        return true;
    } catch (const NotBipartiteError&) {
        return false;
    }
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
    const auto n = static_cast<std::size_t>(g.n());
    std::vector<char> seen(n, 0);
    std::vector<VertexSet> out;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.n(); ++s) {
        if (seen[static_cast<std::size_t>(s)] || removed.contains(s)) continue;
        VertexSet comp(n);
        seen[static_cast<std::size_t>(s)] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            comp.insert(u);
            for (Vertex v : g.neighbors(u)) {
                if (!seen[static_cast<std::size_t>(v)] && !removed.contains(v)) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    stack.push_back(v);
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.n() > 0 && components(g, g.empty_set()).size() == 1;
}

bool is_connected_subset(const Graph& g, const VertexSet& s) {
    if (s.empty()) return true;
    std::vector<Vertex> stack{s.first()};
    VertexSet seen(s.universe());
    seen.insert(s.first());
    while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        for (Vertex v : g.neighbors(u)) {
            if (s.contains(v) && seen.insert(v)) stack.push_back(v);
        }
    }
    return seen.size() == s.size();
}

std::vector<std::optional<int>> distances_from_set(const Graph& g, const VertexSet& sources) {
    std::vector<std::optional<int>> dist(static_cast<std::size_t>(g.n()));
    std::deque<Vertex> queue;
    for (Vertex v : sources) {
        dist[static_cast<std::size_t>(v)] = 0;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        const int du = *dist[static_cast<std::size_t>(u)];
        for (Vertex v : g.neighbors(u)) {
            auto& dv = dist[static_cast<std::size_t>(v)];
            if (!dv) {
                dv = du + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

VertexSet cutvertices(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedGraphError();
    const auto n = static_cast<std::size_t>(g.n());
    std::vector<int> disc(n, -1);
    std::vector<int> low(n, 0);
    std::vector<Vertex> parent(n, -1);
    std::vector<std::size_t> next_edge(n, 0);
    VertexSet cut(n);
    int timer = 0;
    int root_children = 0;
    // Iterative low-link DFS rooted at vertex 0.
    std::vector<Vertex> stack{0};
    disc[0] = low[0] = timer++;
    while (!stack.empty()) {
        const Vertex u = stack.back();
        const auto ui = static_cast<std::size_t>(u);
        if (next_edge[ui] < g.neighbors(u).size()) {
            const Vertex v = g.neighbors(u)[next_edge[ui]++];
            const auto vi = static_cast<std::size_t>(v);
            if (disc[vi] == -1) {
                parent[vi] = u;
                disc[vi] = low[vi] = timer++;
                if (u == 0) ++root_children;
                stack.push_back(v);
            } else if (v != parent[ui]) {
                low[ui] = std::min(low[ui], disc[vi]);
            }
        } else {
            stack.pop_back();
            const Vertex p = parent[ui];
            if (p >= 0) {
                const auto pi = static_cast<std::size_t>(p);
                low[pi] = std::min(low[pi], low[ui]);
                if (p != 0 && low[ui] >= disc[pi]) cut.insert(p);
            }
        }
    }
    if (root_children >= 2) cut.insert(0);
    return cut;
}

bool is_biconnected(const Graph& g) {
    return is_connected(g) && g.n() >= 2 && cutvertices(g).empty();
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet out(static_cast<std::size_t>(g.n()));
    for (Vertex u : s) {
        for (Vertex v : g.neighbors(u)) {
            if (!s.contains(v)) out.insert(v);
        }
    }
    return out;
}

SeparatorCertificate certify_separator(const Graph& g, const VertexSet& separator) {
    SeparatorCertificate cert{separator, components(g, separator), {}};
    for (std::size_t i = 0; i < cert.sides.size(); ++i) {
        if (neighborhood(g, cert.sides[i]) == separator) cert.close_sides.push_back(i);
    }
    return cert;
}

std::vector<SeparatorCertificate> minimal_separators(const Graph& g, int cap) {
    if (g.n() > cap) throw CapExceededError("vertex count", static_cast<std::size_t>(g.n()), static_cast<std::size_t>(cap));
    if (!is_connected(g)) throw DisconnectedGraphError();
    // Generate-and-expand: seeds are N(C) for components C of G - N[v]; each
    // separator S is expanded through the components of G - (S u N(x)), x in S.
    std::set<VertexSet> found;
    std::deque<VertexSet> queue;
    auto offer = [&](const VertexSet& removed) {
        for (const auto& comp : components(g, removed)) {
            VertexSet s = neighborhood(g, comp);
            if (!s.empty() && found.insert(s).second) queue.push_back(std::move(s));
        }
    };
    for (Vertex v = 0; v < g.n(); ++v) {
        VertexSet closed = g.set_of(g.neighbors(v));
        closed.insert(v);
        offer(closed);
    }
    while (!queue.empty()) {
        const VertexSet s = queue.front();
        queue.pop_front();
        for (Vertex x : s) {
            offer(s | g.set_of(g.neighbors(x)));
        }
    }
    std::vector<SeparatorCertificate> out;
    for (const auto& s : found) {
        auto cert = certify_separator(g, s);
        if (cert.close_sides.size() >= 2) out.push_back(std::move(cert));
    }
    return out;
}

std::vector<InducedP3> induced_p3s(const Graph& g) {
    std::vector<InducedP3> out;
    for (Vertex z = 0; z < g.n(); ++z) {
        const auto& nb = g.neighbors(z);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (!g.has_edge(nb[i], nb[j])) out.push_back({nb[i], z, nb[j]});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const InducedP3& a, const InducedP3& b) {
        return std::tie(a.end1, a.center, a.end2) < std::tie(b.end1, b.center, b.end2);
    });
    return out;
}

}  // namespace p3
