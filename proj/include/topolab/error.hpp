#pragma once

#include <stdexcept>
#include <string>

namespace topolab {

enum class Errc {
    odd_cycle,
    bad_partition,
    adjacent,
    disconnected,
    unsupported,
    unlabelled,
    missing_labels,
    missing_sets,
    missing_parts,
    not_bipartite,
    out_of_range,
    non_monotonic_sequence,
    not_caterpillar,
    not_tree,
    no_unit_leaf_edge,
    not_set_ordered_graceful,
    odd_leg_count,
    not_injective,
    unknown_family,
    improper_coloring,
    label_clash_inside_part,
    no_matching_exists,
    missing_certificates,
    uncertified_extremal,
    budget_exceeded,
    index_out_of_range,
    invalid_walk,
    empty_input,
    parse_error,
    internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

} // namespace topolab
