#include "topolab/labelling.hpp"

#include <algorithm>
#include <cstdlib>

namespace topolab {

bool Labelling::vertices_total() const {
    return std::all_of(vertex_.begin(), vertex_.end(), [](auto& x) { return x.has_value(); });
}

bool Labelling::edges_total() const {
    return std::all_of(edge_.begin(), edge_.end(), [](auto& x) { return x.has_value(); });
}

std::vector<int> Labelling::vertex_labels() const {
    std::vector<int> out;
    for (auto& x : vertex_)
        if (x) out.push_back(*x);
    return out;
}

std::vector<int> Labelling::edge_labels() const {
    std::vector<int> out;
    for (auto& x : edge_)
        if (x) out.push_back(*x);
    return out;
}

std::multiset<int> Labelling::vertex_label_multiset() const {
    auto v = vertex_labels();
    return {v.begin(), v.end()};
}

std::multiset<int> Labelling::edge_label_multiset() const {
    auto v = edge_labels();
    return {v.begin(), v.end()};
}

std::set<int> Labelling::vertex_label_set() const {
    auto v = vertex_labels();
    return {v.begin(), v.end()};
}

std::set<int> Labelling::edge_label_set() const {
    auto v = edge_labels();
    return {v.begin(), v.end()};
}

std::set<int> Labelling::universal_label_set() const {
    auto s = vertex_label_set();
    for (int x : edge_labels()) s.insert(x);
    return s;
}

Labelling dual_labelling(const Graph& g, const Labelling& f, DualDomain domain) {
    bool do_v = domain != DualDomain::edges;
    bool do_e = domain != DualDomain::vertices;
    std::vector<int> values;
    if (do_v) {
        if (!f.vertices_total()) fail(Errc::unlabelled, "dual domain has an unlabelled vertex");
        for (int v = 0; v < g.p(); ++v) values.push_back(*f.vertex(v));
    }
    if (do_e) {
        if (!f.edges_total()) fail(Errc::unlabelled, "dual domain has an unlabelled edge");
        for (int e = 0; e < g.q(); ++e) values.push_back(*f.edge(e));
    }
    if (values.empty()) return f;
    auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    int base = *mn + *mx;
    Labelling out = f;
    if (do_v)
        for (int v = 0; v < g.p(); ++v) out.set_vertex(v, base - *f.vertex(v));
    if (do_e)
        for (int e = 0; e < g.q(); ++e) out.set_edge(e, base - *f.edge(e));
    return out;
}

Labelling induce_edge_labels(const Graph& g, const Labelling& f, const EdgeRule& rule) {
    if (!f.vertices_total()) fail(Errc::unlabelled, "edge induction needs all vertices labelled");
    Labelling out = f;
    for (int e = 0; e < g.q(); ++e) {
        auto [u, v] = g.edge(e);
        int a = *f.vertex(u), b = *f.vertex(v);
        switch (rule.tag) {
        case EdgeRule::Tag::difference:
            out.set_edge(e, std::abs(a - b));
            break;
        case EdgeRule::Tag::mod_sum: {
            int r = (a + b) % rule.modulus;
            if (r == 0 && rule.zero_as_modulus) r = rule.modulus;
            out.set_edge(e, r);
            break;
        }
        case EdgeRule::Tag::two_q_minus_sum:
            out.set_edge(e, 2 * g.q() - 1 - std::abs(a - b));
            break;
        case EdgeRule::Tag::none:
            break;
        }
    }
    return out;
}

Labelling vertex_labelling(const Graph& g, const std::vector<int>& labels) {
    Labelling f(g);
    for (int v = 0; v < g.p() && v < static_cast<int>(labels.size()); ++v)
        f.set_vertex(v, labels[static_cast<size_t>(v)]);
    return f;
}

} // namespace topolab
