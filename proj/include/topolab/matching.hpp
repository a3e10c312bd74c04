#pragma once

#include "topolab/construct.hpp"
#include "topolab/extremal.hpp"

namespace topolab {

enum class PartitionMode { edge_disjoint, multiple_edge, mixed };
const char* partition_mode_name(PartitionMode m);

struct MatchingPartition {
    LabelledGraph universal;
    std::vector<LabelledGraph> parts;
    PartitionMode mode = PartitionMode::edge_disjoint;
    int k = 0; // labels shared by at least two parts
    std::vector<int> edge_multiplicity;          // per universal edge
    std::vector<std::vector<int>> edge_label_sets; // union of part labels per edge
};

/// Identifies equal-labelled vertices of the parts into one universal graph.
MatchingPartition compose(const std::vector<LabelledGraph>& parts, bool collapse = true);

/// The ODD-GRACEFUL-GRAPH search: a companion H on the unused labels whose
/// differences realize [1,2q-1]^o exactly once each.
LabelledGraph odd_graceful_matching(const Graph& g, const Labelling& f, bool use_extended_range);

struct TeamCertificate {
    bool member_count_ok = false;
    bool intersections_ok = false;  // each |f_i(V) cap h*(V)| == 1
    bool members_certified = false; // every member passes pan-odd-graceful
    bool perfect = false;           // all members isomorphic
    bool pass = false;
    std::vector<int> shared_labels; // the one shared label per member
};

TeamCertificate verify_team(const MatchingTeam& team);

struct ReciprocalReport {
    bool pass = false;
    bool sets_match = false;
    bool singularity_ok = true; // only constrained for 6C pairs
    std::vector<int> shared;    // X*
};

ReciprocalReport reciprocal_inverse_check(const LabelledGraph& g, const LabelledGraph& h);

struct MaxMinPartition {
    MatchingPartition partition;
    long long max_value = 0;
    long long min_value = 0;
    bool perfect = false;
};

MaxMinPartition max_min_partition(const Graph& g, const Objective& obj);

/// Searches all certified argmax x argmin pairs for an edge-disjoint (perfect)
/// composition; nullopt when none exists.
std::optional<MaxMinPartition> find_perfect_max_min(const Graph& g, const Objective& obj);

/// True when neither part is Eulerian but the composition is.
bool eulerian_matching_check(const Graph& g1, const Graph& g2, const Graph& composition);

} // namespace topolab
