#pragma once

#include <vector>

#include "topolab/verify.hpp"

namespace topolab {

struct LabelledGraph {
    Graph graph;
    Labelling labelling;
    std::optional<VerifyReport> certificate;
};

/// Spine vertices plus the sorted leaf list hanging off each one.
struct CaterpillarDecomposition {
    std::vector<int> spine;
    std::vector<std::vector<int>> leaves;
};
CaterpillarDecomposition caterpillar_decompose(const Graph& t);

/// Canonical view of a set-ordered graceful labelling of a tree: x[i] is the
/// vertex labelled i, y[j] the vertex labelled s+j (0-based arrays).
struct SetOrderedView {
    std::vector<int> x; // small side, labels 0..s-1
    std::vector<int> y; // large side, labels s..p-1
    int s = 0;
    int t = 0;
};
SetOrderedView set_ordered_view(const Graph& t, const Labelling& f);

LabelledGraph caterpillar_set_ordered_odd_graceful(const Graph& t);

struct MatchingTeam {
    LabelledGraph h; // the shifted copy carrying h(x)+1
    std::vector<LabelledGraph> members;
    int removed_leaf = -1; // leaf of the unit edge in the seed labelling
};
MatchingTeam matching_team(const Graph& t);

/// The seed plus the nine labellings derived from a set-ordered graceful
/// labelling; entry 0 is the seed, entries 1..9 carry their target kinds.
struct DerivedLabelling {
    LabelledGraph labelled;
    Kind kind;
    std::optional<int> magic_constant;
};
std::vector<DerivedLabelling> derive_ten_labellings(const Graph& t, const Labelling& f);

struct EsetVproperResult {
    SetLabelling sets;        // F on edges (h1..h6 values, null omitted)
    Labelling vertex_proper;  // f* with edges labelled by f
    std::vector<Labelling> layers; // h2..h6 as full labellings (h1 is f* with null edges)
};
EsetVproperResult eset_vproper_from_set_ordered_graceful(const Graph& t, const Labelling& f);

LabelledGraph sixC_from_set_ordered_graceful(const Graph& t, const Labelling& g,
                                             bool odd_even_separable = false);
Labelling set_ordered_from_sixC(const Graph& t, const Labelling& f);

enum class TwinFlavor { odd_graceful, odd_elegant };
struct TwinSelfMatching {
    Graph composed;
    Labelling labelling;
    std::vector<int> part_of_edge;
    int shared_label = -1;
    std::optional<VerifyReport> certificate;
};
TwinSelfMatching twin_odd_graceful_self_matching(const Graph& t, const Labelling& f,
                                                 TwinFlavor flavor = TwinFlavor::odd_graceful);

enum class TotalSetFlavor { graceful, odd_graceful };
SetLabelling total_set_labelling(const Graph& g, const Labelling& f, TotalSetFlavor flavor);

struct VsetGracefulResult {
    Graph graph; // K_n
    SetLabelling sets;
    Labelling edge_labels;
};
VsetGracefulResult complete_graph_vset_graceful(int n, TotalSetFlavor flavor);

LabelledGraph star_total_coloring(int n);
LabelledGraph bistar_total_coloring(int m, int n);
LabelledGraph spider_total_coloring(const Graph& s);
LabelledGraph tree_equitable_total_coloring(const Graph& t);

struct SetOrderedDouble {
    Graph composed;
    Labelling labelling;
    bool set_order_holds = false;
    bool kind_holds = false;  // the full kind on the composite, when it transfers
    bool self_matching = false;
    int join_edge = -1;
};
SetOrderedDouble set_ordered_double(const Graph& g, const Labelling& f, const LabellingKind& kind);

/// Reciprocal 6C pair: the Theorem-4 labelling of t and its inverse companion
/// (vertices g+1, edges p+g) sharing exactly the singularity value.
struct ReciprocalPair {
    LabelledGraph forward;  // passes six-c
    LabelledGraph inverse;  // edges satisfy f(xy) - |f(x)-f(y)| = p
};
ReciprocalPair reciprocal_sixC_pair(const Graph& t, const Labelling& g);

} // namespace topolab
