#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "topolab/error.hpp"

namespace topolab {

using Edge = std::pair<int, int>; // stored with first < second

/// Simple undirected graph on vertices 0..p-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int p) : p_(p) {}
    Graph(int p, std::vector<Edge> edges);

    int p() const { return p_; }
    int q() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[static_cast<size_t>(i)]; }

    bool has_edge(int u, int v) const;
    int edge_index(int u, int v) const; // -1 when absent
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
    int max_degree() const;

    bool connected() const;
    bool is_tree() const;
    bool is_eulerian() const; // connected and every degree even

    /// Graphs compare equal when p and the sorted edge lists agree.
    bool operator==(const Graph& o) const { return p_ == o.p_ && edges_ == o.edges_; }

private:
    int p_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

enum class TreeTag {
    path,
    star,
    bi_star,
    caterpillar,
    spider,
    lobster,
    generic_tree,
    not_tree,
};

const char* tree_tag_name(TreeTag t);

struct TreeShape {
    TreeTag tag = TreeTag::not_tree;
    /// Spine for paths/stars/caterpillars: the leaf-deletion path, extended to
    /// the whole vertex set for trees with at most 2 vertices.
    std::vector<int> spine;
    /// Per-spine-vertex leaf counts m_i (same length as spine).
    std::vector<int> leaf_blocks;
};

struct Bipartition {
    std::vector<int> X; // contains vertex 0
    std::vector<int> Y;
    bool in_X(int v) const;
};

TreeShape classify_tree(const Graph& g);
Bipartition bipartition(const Graph& g);

Graph vertex_split(const Graph& g, int v, const std::vector<int>& part);
Graph vertex_identify(const Graph& g, int u, int v);

struct SplitToTreeResult {
    Graph tree;
    std::vector<int> origin; // tree vertex -> source vertex
};
SplitToTreeResult split_to_tree(const Graph& g);

/// Canonical form for isomorphism tests; supported for p <= 12 only.
std::vector<Edge> canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

// Small builders used across tests and constructors.
Graph path_graph(int p);
Graph cycle_graph(int n);
Graph star_graph(int leaves);               // K_{1,n}, center = 0
Graph bistar_graph(int m, int n);           // centers 0 and 1
Graph complete_graph(int n);
Graph spider_graph(const std::vector<int>& legs); // body = 0
/// Caterpillar with given spine length and per-spine leaf counts:
/// spine vertices come first (0..n-1), then leaves block by block.
Graph caterpillar_graph(const std::vector<int>& leaf_blocks);

} // namespace topolab
