#include "gwz/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gwz {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n <= 0) throw ValidationError("graph must have at least one vertex");
    for (auto& [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw ValidationError("vertex label out of range");
        if (u == v) throw ValidationError("loop edge " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw ValidationError("multiple edge");
    edges_ = std::move(edges);

    degree_.assign(n_, 0);
    std::vector<std::vector<int>> adj(n_);
    for (auto& [u, v] : edges_) {
        ++degree_[u - 1];
        ++degree_[v - 1];
        adj[u - 1].push_back(v - 1);
        adj[v - 1].push_back(u - 1);
    }

    // BFS connectivity check.
    std::vector<char> seen(n_, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != n_) throw ValidationError("graph is disconnected");
}

bool Graph::adjacent(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

std::string Graph::serialize() const {
    std::ostringstream out;
    for (auto& [u, v] : edges_) out << u << ' ' << v << '\n';
    return out.str();
}

ArcTable::ArcTable(const Graph& g) {
    arcs_.reserve(2 * g.num_edges());
    for (auto& [u, v] : g.edges()) {
        arcs_.push_back({u, v});
        arcs_.push_back({v, u});
    }
}

ArcTable symmetric_digraph(const Graph& g) { return ArcTable(g); }

Graph generate_family(const GraphFamily& family) {
    std::vector<std::pair<int, int>> edges;
    switch (family.kind) {
        case FamilyKind::Cycle: {
            int n = family.n1;
            if (n < 3) throw ValidationError("cycle requires n >= 3");
            for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(1, n);
            return Graph(n, std::move(edges));
        }
        case FamilyKind::Star: {
            int n = family.n1;
            if (n < 2) throw ValidationError("star requires n >= 2");
            for (int i = 2; i <= n; ++i) edges.emplace_back(1, i);
            return Graph(n, std::move(edges));
        }
        case FamilyKind::Complete: {
            int n = family.n1;
            if (n < 2) throw ValidationError("complete requires n >= 2");
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
            return Graph(n, std::move(edges));
        }
        case FamilyKind::CompleteBipartite: {
            int n1 = family.n1, n2 = family.n2;
            if (n1 < 1 || n2 < 1)
                throw ValidationError("complete_bipartite requires n1, n2 >= 1");
            for (int i = 1; i <= n1; ++i)
                for (int j = 1; j <= n2; ++j) edges.emplace_back(i, n1 + j);
            return Graph(n1 + n2, std::move(edges));
        }
    }
    throw ValidationError("unknown family kind");
}

GraphFamily parse_family_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw ParseError("family spec must look like name:params, got '" + spec + "'");
    std::string name = spec.substr(0, colon);
    std::string params = spec.substr(colon + 1);
    auto parse_int = [&](const std::string& s) {
        try {
            size_t pos = 0;
            int v = std::stoi(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw ParseError("bad family parameter '" + s + "'");
        }
    };
    if (name == "cycle") return GraphFamily::cycle(parse_int(params));
    if (name == "star") return GraphFamily::star(parse_int(params));
    if (name == "complete") return GraphFamily::complete(parse_int(params));
    if (name == "bipartite" || name == "complete_bipartite") {
        auto comma = params.find(',');
        if (comma == std::string::npos)
            throw ParseError("bipartite spec needs two parameters, e.g. bipartite:2,3");
        return GraphFamily::complete_bipartite(parse_int(params.substr(0, comma)),
                                               parse_int(params.substr(comma + 1)));
    }
    throw ParseError("unknown family '" + name + "'");
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<int, int>> raw;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        long u, v;
        if (!(ls >> u)) continue;  // blank
        std::string rest;
        if (!(ls >> v) || (ls >> rest)) {
            throw ParseError("line " + std::to_string(lineno) +
                             ": expected 'u v', got '" + line + "'");
        }
        if (u < 1 || v < 1)
            throw ParseError("line " + std::to_string(lineno) + ": labels must be >= 1");
        raw.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (raw.empty()) throw ValidationError("empty edge list");

    // Remap external labels to 1..n by sorted order so serialize/parse is an
    // identity on canonical graphs.
    std::set<int> labels;
    for (auto& [u, v] : raw) {
        labels.insert(u);
        labels.insert(v);
    }
    std::map<int, int> remap;
    int next = 1;
    for (int lab : labels) remap[lab] = next++;
    std::set<std::pair<int, int>> dedup;
    for (auto& [u, v] : raw) {
        int a = remap[u], b = remap[v];
        if (a == b) throw ValidationError("loop edge");
        if (a > b) std::swap(a, b);
        dedup.insert({a, b});
    }
    return Graph(static_cast<int>(labels.size()),
                 std::vector<std::pair<int, int>>(dedup.begin(), dedup.end()));
}

}  // namespace gwz
