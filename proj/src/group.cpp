#include "topolab/group.hpp"

#include <functional>

namespace topolab {

int group_op(int i, int j, int zero, int n) {
    if (n < 1) fail(Errc::index_out_of_range, "modulus must be positive");
    for (int x : {i, j, zero})
        if (x < 0 || x >= n) fail(Errc::index_out_of_range, "element index out of [0,n)");
    return ((i + j - zero) % n + n) % n;
}

Labelling group_element(const GraphicGroup& gp, int index) {
    int n = gp.modulus;
    if (index < 0 || index >= n) fail(Errc::index_out_of_range, "element index out of [0,n)");
    const Graph& g = gp.base.graph;
    Labelling out = gp.base.labelling;
    for (int v = 0; v < g.p(); ++v)
        if (out.vertex(v)) out.set_vertex(v, (*out.vertex(v) + index) % n);
    if (!gp.vertices_only)
        for (int e = 0; e < g.q(); ++e)
            if (out.edge(e)) out.set_edge(e, (*out.edge(e) + index) % n);
    return out;
}

GroupReport verify_group(const GraphicGroup& gp) {
    int n = gp.modulus;
    GroupReport rep;
    rep.closure = rep.associativity = rep.identity = rep.inverses = rep.commutativity = true;
    for (int zero = 0; zero < n; ++zero) {
        for (int i = 0; i < n; ++i) {
            if (group_op(i, zero, zero, n) != i || group_op(zero, i, zero, n) != i)
                rep.identity = false;
            int inv = ((2 * zero - i) % n + n) % n;
            if (group_op(i, inv, zero, n) != zero) rep.inverses = false;
            for (int j = 0; j < n; ++j) {
                int ij = group_op(i, j, zero, n);
                if (ij < 0 || ij >= n) rep.closure = false;
                if (ij != group_op(j, i, zero, n)) rep.commutativity = false;
                for (int k = 0; k < n; ++k)
                    if (group_op(ij, k, zero, n) != group_op(i, group_op(j, k, zero, n), zero, n))
                        rep.associativity = false;
            }
        }
    }
    rep.pass = rep.closure && rep.associativity && rep.identity && rep.inverses &&
               rep.commutativity;
    return rep;
}

std::vector<bool> shifted_property_report(const GraphicGroup& gp,
                                          const std::function<bool(const Labelling&)>& holds) {
    std::vector<bool> out;
    for (int i = 0; i < gp.modulus; ++i) out.push_back(holds(group_element(gp, i)));
    return out;
}

EncryptedNetwork encrypt_network(const Graph& net, const GraphicGroup& gp,
                                 const std::vector<int>& assignment, int zero) {
    if (static_cast<int>(assignment.size()) != net.p())
        fail(Errc::missing_labels, "assignment must cover every network vertex");
    int n = gp.modulus;
    EncryptedNetwork out{net, assignment, {}};
    for (auto [u, v] : net.edges())
        out.edge_element.push_back(
            group_op(assignment[static_cast<size_t>(u)], assignment[static_cast<size_t>(v)], zero, n));
    return out;
}

std::optional<EncryptedNetwork> find_graceful_group_assignment(const Graph& net,
                                                               const GraphicGroup& gp, int zero) {
    int n = gp.modulus, p = net.p(), q = net.q();
    if (q < 1 || q >= n) return std::nullopt;
    std::vector<int> assign(static_cast<size_t>(p), -1);
    std::vector<char> edge_used(static_cast<size_t>(q + 1), 0);
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == p) return true;
        for (int idx = 0; idx < n; ++idx) {
            assign[static_cast<size_t>(v)] = idx;
            std::vector<int> marked;
            bool ok = true;
            for (int w : net.neighbors(v)) {
                if (w >= v || assign[static_cast<size_t>(w)] < 0) continue;
                int e = group_op(idx, assign[static_cast<size_t>(w)], zero, n);
                if (e < 1 || e > q || edge_used[static_cast<size_t>(e)]) {
                    ok = false;
                    break;
                }
                edge_used[static_cast<size_t>(e)] = 1;
                marked.push_back(e);
            }
            if (ok && rec(v + 1)) return true;
            for (int e : marked) edge_used[static_cast<size_t>(e)] = 0;
        }
        assign[static_cast<size_t>(v)] = -1;
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return encrypt_network(net, gp, assign, zero);
}

} // namespace topolab
