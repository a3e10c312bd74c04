#include "topolab/matching.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace topolab {

const char* partition_mode_name(PartitionMode m) {
    switch (m) {
    case PartitionMode::edge_disjoint: return "edge-disjoint";
    case PartitionMode::multiple_edge: return "multiple-edge";
    case PartitionMode::mixed: return "mixed";
    }
    return "?";
}

MatchingPartition compose(const std::vector<LabelledGraph>& parts, bool collapse) {
    if (parts.empty()) fail(Errc::empty_input, "compose needs at least one part");
    (void)collapse; // the universal graph is always simple; multiplicity is tracked
    std::set<int> labels;
    for (const auto& part : parts) {
        if (!part.labelling.vertices_total())
            fail(Errc::missing_labels, "every part vertex must be labelled");
        auto vl = part.labelling.vertex_labels();
        if (!is_injective(vl))
            fail(Errc::label_clash_inside_part, "part vertex labels must be injective");
        labels.insert(vl.begin(), vl.end());
    }
    std::map<int, int> vertex_of_label;
    int next = 0;
    for (int l : labels) vertex_of_label[l] = next++;

    std::map<Edge, int> multiplicity;          // universal labelled edge -> #parts
    std::map<Edge, std::set<int>> label_sets;  // union of part edge labels
    std::map<int, int> parts_with_label;
    for (const auto& part : parts) {
        std::set<int> seen;
        for (int v = 0; v < part.graph.p(); ++v) seen.insert(*part.labelling.vertex(v));
        for (int l : seen) ++parts_with_label[l];
        for (int e = 0; e < part.graph.q(); ++e) {
            auto [u, v] = part.graph.edge(e);
            int a = *part.labelling.vertex(u), b = *part.labelling.vertex(v);
            Edge key{std::min(a, b), std::max(a, b)};
            ++multiplicity[key];
            if (part.labelling.edge(e)) label_sets[key].insert(*part.labelling.edge(e));
        }
    }
    std::vector<Edge> edges;
    for (auto& [key, mult] : multiplicity)
        edges.emplace_back(vertex_of_label[key.first], vertex_of_label[key.second]);
    Graph universal(next, edges);

    MatchingPartition out;
    out.parts = parts;
    out.universal.graph = universal;
    out.universal.labelling = Labelling(universal);
    for (auto [l, v] : vertex_of_label) out.universal.labelling.set_vertex(v, l);
    out.edge_multiplicity.assign(static_cast<size_t>(universal.q()), 0);
    out.edge_label_sets.assign(static_cast<size_t>(universal.q()), {});
    bool shared_edge = false;
    for (int e = 0; e < universal.q(); ++e) {
        auto [u, v] = universal.edge(e);
        Edge key{*out.universal.labelling.vertex(u), *out.universal.labelling.vertex(v)};
        out.edge_multiplicity[static_cast<size_t>(e)] = multiplicity[key];
        if (multiplicity[key] > 1) shared_edge = true;
        const auto& ls = label_sets[key];
        out.edge_label_sets[static_cast<size_t>(e)] = {ls.begin(), ls.end()};
        if (ls.size() == 1) out.universal.labelling.set_edge(e, *ls.begin());
    }
    for (auto [l, c] : parts_with_label)
        if (c >= 2) ++out.k;
    bool spanning_all = true;
    for (const auto& part : parts)
        if (part.graph.p() != universal.p()) spanning_all = false;
    out.mode = !shared_edge ? PartitionMode::edge_disjoint
               : spanning_all ? PartitionMode::multiple_edge
                              : PartitionMode::mixed;
    return out;
}

LabelledGraph odd_graceful_matching(const Graph& g, const Labelling& f, bool use_extended_range) {
    auto rep = verify(g, f, LabellingKind::of(Kind::odd_graceful));
    if (!rep.pass) fail(Errc::not_set_ordered_graceful, "seed must be odd-graceful");
    if (!g.connected()) fail(Errc::disconnected, "seed graph must be connected");
    int q = g.q();
    int hi = use_extended_range ? 2 * q : 2 * q - 1;
    std::set<int> used = f.vertex_label_set();
    std::vector<int> pool; // the unused labels R (or R')
    for (int x = 0; x <= hi; ++x)
        if (!used.count(x)) pool.push_back(x);
    std::map<int, int> index_of;
    for (size_t i = 0; i < pool.size(); ++i) index_of[pool[i]] = static_cast<int>(i);

    // One edge per odd difference class, largest class first (fewest options);
    // every pool element must be touched and the result must be connected.
    std::vector<int> diffs;
    for (int d = 2 * q - 1; d >= 1; d -= 2) diffs.push_back(d);
    std::vector<std::vector<Edge>> options;
    std::set<int> pool_set(pool.begin(), pool.end());
    for (int d : diffs) {
        std::vector<Edge> opts;
        for (int x : pool) {
            if (x % 2 == 0) continue; // enumerate from the odd endpoint
            if (pool_set.count(x - d)) opts.emplace_back(x - d, x);
            if (pool_set.count(x + d)) opts.emplace_back(x, x + d);
        }
        std::sort(opts.begin(), opts.end());
        options.push_back(opts);
    }

    std::vector<Edge> chosen;
    std::vector<int> touch(pool.size(), 0);
    int untouched = static_cast<int>(pool.size());
    std::function<bool(size_t)> rec = [&](size_t level) -> bool {
        if (level == diffs.size()) {
            if (untouched > 0) return false;
            std::vector<Edge> edges;
            for (auto [a, b] : chosen) edges.emplace_back(index_of[a], index_of[b]);
            Graph h(static_cast<int>(pool.size()), edges);
            return h.connected();
        }
        int remaining = static_cast<int>(diffs.size() - level);
        if (untouched > 2 * remaining) return false;
        for (auto [a, b] : options[level]) {
            chosen.emplace_back(a, b);
            for (int x : {a, b})
                if (++touch[static_cast<size_t>(index_of[x])] == 1) --untouched;
            if (rec(level + 1)) return true;
            for (int x : {a, b})
                if (--touch[static_cast<size_t>(index_of[x])] == 0) ++untouched;
            chosen.pop_back();
        }
        return false;
    };
    if (pool.empty() || !rec(0))
        fail(Errc::no_matching_exists, "no companion realizes every odd difference");

    std::vector<Edge> edges;
    for (auto [a, b] : chosen) edges.emplace_back(index_of[a], index_of[b]);
    Graph h(static_cast<int>(pool.size()), edges);
    Labelling gh(h);
    for (size_t i = 0; i < pool.size(); ++i) gh.set_vertex(static_cast<int>(i), pool[i]);
    gh = induce_edge_labels(h, gh, EdgeRule::difference());

    VerifyReport cert;
    cert.kind = "k-matching-odd-graceful";
    auto gl = gh.vertex_labels();
    cert.add("labels_injective", is_injective(gl));
    cert.add("labels_within_range",
             std::all_of(gl.begin(), gl.end(), [&](int x) { return 0 <= x && x <= hi; }));
    auto el = gh.edge_labels();
    std::set<int> es(el.begin(), el.end());
    cert.add("edge_differences_odd_interval",
             is_odd_interval(es, 1, 2 * q - 1) && es.size() == el.size());
    std::set<int> uni = used;
    uni.insert(gl.begin(), gl.end());
    cert.add("union_covers_label_range", is_interval(uni, 0, hi),
             use_extended_range ? "[0,2q]" : "[0,2q-1]");
    std::vector<int> inter;
    std::set<int> gset(gl.begin(), gl.end());
    std::set_intersection(used.begin(), used.end(), gset.begin(), gset.end(),
                          std::back_inserter(inter));
    cert.add("shared_label_count_recorded", true, "k=" + std::to_string(inter.size()));
    cert.k = static_cast<int>(inter.size());
    if (!cert.pass) fail(Errc::internal, "companion certificate failed");
    return {h, gh, cert};
}

TeamCertificate verify_team(const MatchingTeam& team) {
    TeamCertificate cert;
    int p = team.h.graph.p();
    cert.member_count_ok = static_cast<int>(team.members.size()) == p;
    cert.intersections_ok = true;
    cert.members_certified = true;
    std::set<int> hstar = team.h.labelling.vertex_label_set();
    for (const auto& member : team.members) {
        std::set<int> labels = member.labelling.vertex_label_set();
        std::vector<int> inter;
        std::set_intersection(labels.begin(), labels.end(), hstar.begin(), hstar.end(),
                              std::back_inserter(inter));
        if (inter.size() != 1)
            cert.intersections_ok = false;
        else
            cert.shared_labels.push_back(inter.front());
        auto rep = verify(member.graph, member.labelling,
                          LabellingKind::of(Kind::pan_odd_graceful));
        if (!rep.pass) cert.members_certified = false;
    }
    cert.perfect = true;
    for (size_t i = 0; i + 1 < team.members.size(); ++i)
        if (!isomorphic(team.members[i].graph, team.members[i + 1].graph)) cert.perfect = false;
    cert.pass = cert.member_count_ok && cert.intersections_ok && cert.members_certified;
    return cert;
}

ReciprocalReport reciprocal_inverse_check(const LabelledGraph& g, const LabelledGraph& h) {
    if (!g.certificate || !h.certificate)
        fail(Errc::missing_certificates, "both labelled graphs need certificates");
    ReciprocalReport out;
    std::set<int> fv = g.labelling.vertex_label_set(), fe = g.labelling.edge_label_set();
    std::set<int> gv = h.labelling.vertex_label_set(), ge = h.labelling.edge_label_set();
    std::set<int> shared;
    std::set_intersection(fv.begin(), fv.end(), gv.begin(), gv.end(),
                          std::inserter(shared, shared.begin()));
    out.shared.assign(shared.begin(), shared.end());
    std::set<int> fv_minus = fv, gv_minus = gv;
    for (int x : shared) {
        fv_minus.erase(x);
        gv_minus.erase(x);
    }
    out.sets_match = fe == gv_minus && ge == fv_minus;
    bool six_c_pair = g.certificate->kind.find("six-c") != std::string::npos ||
                      h.certificate->kind.find("six-c") != std::string::npos;
    if (six_c_pair) {
        int p = g.graph.p(), q = g.graph.q();
        out.singularity_ok = shared == std::set<int>{(p + q + 1) / 2};
    }
    out.pass = out.sets_match && out.singularity_ok;
    return out;
}

namespace {

MaxMinPartition compose_max_min(const Graph& g, const Objective& obj, const Labelling& fmax,
                                const Labelling& fmin, long long vmax, long long vmin) {
    LabelledGraph gm{g, induce_edge_labels(g, fmax, EdgeRule::difference()), std::nullopt};
    LabelledGraph gn{g, induce_edge_labels(g, fmin, EdgeRule::difference()), std::nullopt};
    MaxMinPartition out{compose({gm, gn}), vmax, vmin, false};
    // perfect: edge-disjoint as labelled edges and all p labels shared
    out.perfect = out.partition.mode == PartitionMode::edge_disjoint &&
                  out.partition.k == g.p();
    (void)obj;
    return out;
}

} // namespace

MaxMinPartition max_min_partition(const Graph& g, const Objective& obj) {
    ExtremalResult mx, mn;
    try {
        mx = brute_force_extremal(g, obj, Direction::max);
        mn = brute_force_extremal(g, obj, Direction::min);
    } catch (const Error& e) {
        if (e.code() == Errc::budget_exceeded)
            fail(Errc::uncertified_extremal, "graph too large for certified extremal labellings");
        throw;
    }
    return compose_max_min(g, obj, mx.labelling, mn.labelling, mx.value, mn.value);
}

std::optional<MaxMinPartition> find_perfect_max_min(const Graph& g, const Objective& obj) {
    auto maxima = brute_force_argset(g, obj, Direction::max);
    auto minima = brute_force_argset(g, obj, Direction::min);
    long long vmax = maxima.empty() ? 0 : evaluate(g, maxima.front(), obj);
    long long vmin = minima.empty() ? 0 : evaluate(g, minima.front(), obj);
    for (const auto& fx : maxima)
        for (const auto& fn : minima) {
            auto cand = compose_max_min(g, obj, fx, fn, vmax, vmin);
            if (cand.perfect) return cand;
        }
    return std::nullopt;
}

bool eulerian_matching_check(const Graph& g1, const Graph& g2, const Graph& composition) {
    return !g1.is_eulerian() && !g2.is_eulerian() && composition.is_eulerian();
}

} // namespace topolab
