#pragma once

#include <optional>
#include <set>
#include <vector>

#include "topolab/graph.hpp"

namespace topolab {

/// Partial integer assignment on vertices and edges. Injectivity is not
/// enforced here; verifiers enforce it per definition. An absent edge label
/// is the "null" label and serializes as the token "null".
class Labelling {
public:
    Labelling() = default;
    explicit Labelling(const Graph& g)
        : vertex_(static_cast<size_t>(g.p())), edge_(static_cast<size_t>(g.q())) {}

    std::optional<int> vertex(int v) const { return vertex_[static_cast<size_t>(v)]; }
    std::optional<int> edge(int e) const { return edge_[static_cast<size_t>(e)]; }
    void set_vertex(int v, int label) { vertex_[static_cast<size_t>(v)] = label; }
    void set_edge(int e, int label) { edge_[static_cast<size_t>(e)] = label; }
    void clear_edge(int e) { edge_[static_cast<size_t>(e)].reset(); }

    int num_vertex_slots() const { return static_cast<int>(vertex_.size()); }
    int num_edge_slots() const { return static_cast<int>(edge_.size()); }

    bool vertices_total() const;
    bool edges_total() const;

    std::vector<int> vertex_labels() const;         // labelled values, in vertex order
    std::vector<int> edge_labels() const;           // labelled values, in edge order
    std::multiset<int> vertex_label_multiset() const;
    std::multiset<int> edge_label_multiset() const;
    std::set<int> vertex_label_set() const;
    std::set<int> edge_label_set() const;
    std::set<int> universal_label_set() const;

    bool operator==(const Labelling& o) const = default;

private:
    std::vector<std::optional<int>> vertex_;
    std::vector<std::optional<int>> edge_;
};

struct EdgeRule {
    enum class Tag { difference, mod_sum, two_q_minus_sum, none } tag = Tag::none;
    int modulus = 1;
    /// Remaps a zero residue of mod_sum to the modulus itself when set.
    bool zero_as_modulus = false;

    static EdgeRule difference() { return {Tag::difference, 1, false}; }
    static EdgeRule mod_sum(int m, bool zero_as_mod = false) { return {Tag::mod_sum, m, zero_as_mod}; }
    static EdgeRule two_q_minus_sum() { return {Tag::two_q_minus_sum, 1, false}; }
    static EdgeRule none() { return {Tag::none, 1, false}; }
};

/// h'(z) = max h(S) + min h(S) - h(z) over the chosen domain.
enum class DualDomain { vertices, edges, all };
Labelling dual_labelling(const Graph& g, const Labelling& f, DualDomain domain);

Labelling induce_edge_labels(const Graph& g, const Labelling& f, const EdgeRule& rule);

/// Builds a labelling from explicit vertex labels (edges unlabelled).
Labelling vertex_labelling(const Graph& g, const std::vector<int>& labels);

} // namespace topolab
