#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gwz/errors.hpp"

namespace gwz {

// Simple connected undirected graph with 1-based contiguous vertex labels.
// Connectivity, simplicity and absence of loops are enforced at construction;
// every determinant identity downstream assumes them.
class Graph {
public:
    // Edges are stored as (u, v) with u < v, sorted; this fixes the arc order.
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int degree(int v) const { return degree_[v - 1]; }
    bool adjacent(int u, int v) const;

    // Edge-list text round trip ("u v" per line).
    std::string serialize() const;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> degree_;
};

// Arc e of the symmetric digraph D(G): ordered pair (origin, terminus).
struct Arc {
    int origin;
    int terminus;
};

// Indexed arc list of D(G) with the inverse-arc involution. Arc 2i is the
// (u,v) orientation (u < v) of edge i, arc 2i+1 is (v,u).
class ArcTable {
public:
    explicit ArcTable(const Graph& g);

    int num_arcs() const { return static_cast<int>(arcs_.size()); }
    const Arc& arc(int e) const { return arcs_[e]; }
    int inverse(int e) const { return e ^ 1; }

private:
    std::vector<Arc> arcs_;
};

ArcTable symmetric_digraph(const Graph& g);

enum class FamilyKind { Cycle, Star, Complete, CompleteBipartite };

struct GraphFamily {
    FamilyKind kind;
    int n1 = 0;
    int n2 = 0;  // only for complete_bipartite

    static GraphFamily cycle(int n) { return {FamilyKind::Cycle, n, 0}; }
    static GraphFamily star(int n) { return {FamilyKind::Star, n, 0}; }
    static GraphFamily complete(int n) { return {FamilyKind::Complete, n, 0}; }
    static GraphFamily complete_bipartite(int n1, int n2) {
        return {FamilyKind::CompleteBipartite, n1, n2};
    }
};

// Canonical labeled graphs: star S_n has vertex 1 as center; K_{n1,n2} parts
// are {1..n1} and {n1+1..n1+n2}.
Graph generate_family(const GraphFamily& family);

// "name:params" mini-grammar, e.g. "cycle:5", "bipartite:2,3".
GraphFamily parse_family_spec(const std::string& spec);

// Line-oriented edge list, '#' comments, blank lines ignored. External vertex
// labels are remapped to 1..n in order of first appearance.
Graph parse_edge_list(const std::string& text);

}  // namespace gwz
