#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "topolab/labelling.hpp"

namespace topolab {

enum class Kind {
    graceful,
    set_ordered_graceful,
    odd_graceful,
    set_ordered_odd_graceful,
    pan_odd_graceful,
    k_sequential_odd_graceful,
    odd_elegant,
    set_ordered_odd_elegant,
    felicitous,
    harmonious,
    edge_magic_total,
    super_edge_magic_total,
    pan_edge_magic_total,
    edge_antimagic_total,
    edge_magic_graceful,
    super_edge_magic_graceful,
    relaxed_emt,
    oemm,
    eedoemm,
    six_c,
    odd_even_separable_six_c,
    dgemm,
    ve_exchanged_of,
    tog,
    toe,
    sotoe,
    two_odd_two,
};

const char* kind_name(Kind k);
std::optional<Kind> kind_from_name(const std::string& name);

/// A kind with its parameters. Twin kinds carry the edge partition into the
/// two composed parts; ve_exchanged carries the paired labelling.
struct LabellingKind {
    Kind tag = Kind::graceful;
    int shift = 0;                              // k_sequential_odd_graceful
    std::shared_ptr<const Labelling> paired;    // ve_exchanged_of
    std::vector<int> part_of_edge;              // twin kinds: 0 or 1 per edge index
    bool strict_twin_range = false;             // tog: literal Definition ranges
    bool bijective_matchings = true;            // ee-clauses: bijection vs existence

    static LabellingKind of(Kind k) { return LabellingKind{k, 0, nullptr, {}, false, true}; }
    static LabellingKind k_sequential(int k);
    static LabellingKind ve_exchanged(std::shared_ptr<const Labelling> f);
    static LabellingKind twin(Kind k, std::vector<int> part_of_edge, bool strict = false);
};

struct Condition {
    std::string name;
    bool pass = false;
    std::string witness;
};

struct VerifyReport {
    std::string kind;
    bool pass = true;
    std::vector<Condition> conditions;
    std::optional<int> k;           // magic constant
    std::optional<int> k_prime;     // balanced constant
    std::optional<int> k_dprime;    // ve-matching constant
    std::optional<int> singularity;

    void add(const std::string& name, bool ok, std::string witness = "");
    std::string summary() const;
};

struct SixCReport {
    bool pass = false;
    Condition e_magic, ee_difference, ee_balanced, ev_ordered, ve_matching, set_ordered;
    std::optional<int> k, k_prime, k_dprime;
    std::optional<int> singularity;
    std::vector<std::string> ev_ordered_modes; // which of the five orders hold
    VerifyReport as_report() const;
};

VerifyReport verify(const Graph& g, const Labelling& f, const LabellingKind& kind);

/// Equivalent to verify(...).pass, with a cheap short-circuit in front; this
/// is the predicate the enumeration oracles run per candidate.
bool verify_accepts(const Graph& g, const Labelling& f, const LabellingKind& kind);

SixCReport verify_six_c(const Graph& g, const Labelling& f, bool odd_even_separable = false,
                        bool require_canonical_singularity = true);

enum class SetKind { total_set, vertex_set, edge_set, v_set_e_proper, e_set_v_proper };
enum class SetRule { none, graceful, odd_graceful };

/// Finite integer sets assigned to vertices/edges.
struct SetLabelling {
    std::vector<std::optional<std::vector<int>>> vertex_sets; // sorted ascending
    std::vector<std::optional<std::vector<int>>> edge_sets;

    explicit SetLabelling(const Graph& g)
        : vertex_sets(static_cast<size_t>(g.p())), edge_sets(static_cast<size_t>(g.q())) {}
    void set_vertex(int v, std::vector<int> s);
    void set_edge(int e, std::vector<int> s);
};

VerifyReport verify_set_labelling(const Graph& g, const SetLabelling& F,
                                  const std::optional<Labelling>& f, SetKind kind,
                                  SetRule rule = SetRule::none);

struct TotalColoringReport {
    bool proper = false;
    int colors_used = 0;
    int b_tol = 0;
    bool edge_sums_consecutive = false;
    int min_sum = 0;
    int max_sum = 0;
};

TotalColoringReport verify_total_coloring(const Graph& g, const Labelling& f);

enum class VeFlavor { difference, sum };
VerifyReport verify_ve_matching_total_coloring(const Graph& g, const Labelling& f, VeFlavor flavor);

enum class SequenceFlavor { sequence, full, graceful_sequence, total_sequence, f_total_graceful };

VerifyReport verify_sequence_labelling(const Graph& g, const Labelling& f,
                                       const std::vector<int>& A, const std::vector<int>& B,
                                       SequenceFlavor flavor, const EdgeRule& rule,
                                       std::function<bool(int, int, int)> F_relation = nullptr);

// Shared multiset helpers used by verifiers and search oracles.
bool is_injective(const std::vector<int>& values);
bool is_odd_interval(const std::set<int>& s, int lo, int hi);   // equals [lo,hi]^o
bool is_interval(const std::set<int>& s, int lo, int hi);       // equals [lo,hi]
std::optional<int> constant_of(const std::vector<int>& values);

/// Bijective matching i -> j with demand[i] == supply[j]; true when the two
/// multisets coincide.
bool multiset_equal(std::vector<int> a, std::vector<int> b);

/// Involution on the values with v + phi(v) == k (fixed points allowed);
/// returns each feasible k in ascending order.
std::vector<int> pair_sum_constants(const std::vector<int>& values);

struct VeMatchingResult {
    int k_dprime = 0;
    std::optional<int> singular_value; // the unmatched vertex value, if any
};
/// Bijection between edge values and vertex values with e + v == k'',
/// leaving at most one vertex unmatched.
std::optional<VeMatchingResult> ve_matching_constant(const std::vector<int>& vertex_values,
                                                     const std::vector<int>& edge_values);
std::vector<VeMatchingResult> ve_matching_constants(const std::vector<int>& vertex_values,
                                                    const std::vector<int>& edge_values);

} // namespace topolab
