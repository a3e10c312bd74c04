#pragma once

#include "topolab/construct.hpp"

namespace topolab {

/// Every-zero graphic group: the base labelled graph and its n cyclic shifts
/// f_i(x) = (f(x) + i) mod n; elements are represented by their index.
struct GraphicGroup {
    LabelledGraph base;
    int modulus = 1;
    bool vertices_only = false;
};

/// (i + j - zero) mod n.
int group_op(int i, int j, int zero, int n);

/// Materializes element i (labels shifted mod n).
Labelling group_element(const GraphicGroup& gp, int index);

struct GroupReport {
    bool closure = false;
    bool associativity = false;
    bool identity = false;
    bool inverses = false;
    bool commutativity = false;
    bool pass = false;
};

/// Checks the axioms of the fixed-zero operation for every choice of zero.
GroupReport verify_group(const GraphicGroup& gp);

/// Whether each shifted element keeps the base labelling's defining property
/// under the modulus (reported per element, never asserted).
std::vector<bool> shifted_property_report(const GraphicGroup& gp,
                                          const std::function<bool(const Labelling&)>& holds);

struct EncryptedNetwork {
    Graph network;
    std::vector<int> vertex_element; // element index per vertex
    std::vector<int> edge_element;   // element index per edge
};

EncryptedNetwork encrypt_network(const Graph& net, const GraphicGroup& gp,
                                 const std::vector<int>& assignment, int zero);

/// Searches assignments whose edge element indices are exactly [1,q]
/// (graceful-group mode); nullopt when none exists at desk scale.
std::optional<EncryptedNetwork> find_graceful_group_assignment(const Graph& net,
                                                               const GraphicGroup& gp, int zero);

} // namespace topolab
