#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "topolab/verify.hpp"

namespace topolab {

struct SearchBudget {
    int max_vertices = 12;
    int max_edges = 16;
    long long max_candidates = 500'000'000;
    double time_limit_seconds = 900.0;

    static SearchBudget desk() { return {}; }
};

/// Complete list of labellings passing verify over the kind's canonical
/// domain, in lexicographic order of the vertex-label vector (and of the edge
/// vector for pair/total kinds).
std::vector<Labelling> enumerate_labellings(const Graph& g, const LabellingKind& kind,
                                            const SearchBudget& budget, int jobs = 1);

/// Candidate-count estimate used for budget enforcement (number of domain
/// elements enumerate_labellings would visit).
long long domain_size(const Graph& g, const LabellingKind& kind);

enum class PartitionKind {
    relaxed_emt_partition,
    oemm_partition,
    eedoemm_partition,
    six_c_partition,
    six_c_complementary,
    dgemm_partition,
    emg_partition,
    ve_exchanged_partition,
    vset_graceful_partition,
    twin_og_partition,
    twin_oe_partition,
    graph_matching_partition,
};

const char* partition_kind_name(PartitionKind k);
std::optional<PartitionKind> partition_kind_from_name(const std::string& s);

struct SetPartitionProblem {
    PartitionKind kind;
    int p = 0;
    int q = 0;
};

struct PartitionSolution {
    std::vector<int> V;
    std::vector<int> E;
    std::map<std::string, int> constants;
    /// ev-matching witnesses (a, c, b), one per element of E when applicable.
    std::vector<std::array<int, 3>> ev;
};

std::vector<PartitionSolution> solve_set_partition(const SetPartitionProblem& prob,
                                                   const SearchBudget& budget);

struct ChromaticParameters {
    int chi = 0;
    int chi_total = 0;
    int chi_ved = -1; // -1: no ve-matching difference total coloring within budget bound
    int chi_ves = -1;
    int min_b_tol = -1;
};

ChromaticParameters chromatic_parameters(const Graph& g, const SearchBudget& budget);

/// Exact min over proper total colorings with exactly `colors` colors of the
/// edge-sum spread; -1 when no such coloring exists.
int min_b_tol_with_colors(const Graph& g, int colors);

/// All connected graphs with at most max_q edges (and hence at most max_q+1
/// vertices), one representative per isomorphism class, deterministic order.
std::vector<Graph> enumerate_connected_graphs(int max_q, int min_p = 2);

/// All trees with exactly p vertices, one per isomorphism class.
std::vector<Graph> enumerate_trees(int p);

/// All caterpillars with exactly p vertices, one per isomorphism class.
std::vector<Graph> enumerate_caterpillars(int p);

/// Uniform random labelled tree on p vertices (Pruefer code), deterministic
/// for a given seed.
Graph random_tree(int p, unsigned seed);

} // namespace topolab
