#pragma once

#include <string>

#include "topolab/matching.hpp"

namespace topolab {

/// 3 x q matrix (X, W, Y) with X_j <= Y_j and columns in canonical order.
struct TopsnutMatrix {
    std::vector<int> X, W, Y;
    int columns() const { return static_cast<int>(X.size()); }
    bool operator==(const TopsnutMatrix&) const = default;
};

enum class MatrixOrder { by_edge_label, by_endpoints };

TopsnutMatrix to_matrix(const LabelledGraph& g, MatrixOrder order = MatrixOrder::by_edge_label);

/// Rebuilds the labelled graph up to vertex identity-by-label.
LabelledGraph from_matrix(const TopsnutMatrix& m);

struct PasswordString {
    std::string text;
    std::string scheme;
};

enum class WalkScheme { vv, vev };

PasswordString derive_password_walk(const LabelledGraph& g, const std::vector<int>& walk,
                                    WalkScheme scheme, bool marks = false);

PasswordString concat_passwords(const std::vector<PasswordString>& parts,
                                const std::vector<int>& order);

enum class Traversal { column_serpentine, row_major };

PasswordString matrix_serpentine_text(const TopsnutMatrix& m, Traversal traversal);

std::string serialize(const LabelledGraph& g);
std::string serialize(const MatchingPartition& p);
LabelledGraph deserialize_labelled_graph(const std::string& text);
MatchingPartition deserialize_partition(const std::string& text);

std::string to_dot(const LabelledGraph& g);

} // namespace topolab
