#include "topolab/verify.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace topolab {

const char* kind_name(Kind k) {
    switch (k) {
    case Kind::graceful: return "graceful";
    case Kind::set_ordered_graceful: return "set-ordered-graceful";
    case Kind::odd_graceful: return "odd-graceful";
    case Kind::set_ordered_odd_graceful: return "set-ordered-odd-graceful";
    case Kind::pan_odd_graceful: return "pan-odd-graceful";
    case Kind::k_sequential_odd_graceful: return "k-sequential-odd-graceful";
    case Kind::odd_elegant: return "odd-elegant";
    case Kind::set_ordered_odd_elegant: return "set-ordered-odd-elegant";
    case Kind::felicitous: return "felicitous";
    case Kind::harmonious: return "harmonious";
    case Kind::edge_magic_total: return "edge-magic-total";
    case Kind::super_edge_magic_total: return "super-edge-magic-total";
    case Kind::pan_edge_magic_total: return "pan-edge-magic-total";
    case Kind::edge_antimagic_total: return "edge-antimagic-total";
    case Kind::edge_magic_graceful: return "edge-magic-graceful";
    case Kind::super_edge_magic_graceful: return "super-edge-magic-graceful";
    case Kind::relaxed_emt: return "relaxed-emt";
    case Kind::oemm: return "oemm";
    case Kind::eedoemm: return "eedoemm";
    case Kind::six_c: return "six-c";
    case Kind::odd_even_separable_six_c: return "odd-even-separable-six-c";
    case Kind::dgemm: return "dgemm";
    case Kind::ve_exchanged_of: return "ve-exchanged";
    case Kind::tog: return "tog";
    case Kind::toe: return "toe";
    case Kind::sotoe: return "sotoe";
    case Kind::two_odd_two: return "two-odd-two";
    }
    return "?";
}

std::optional<Kind> kind_from_name(const std::string& name) {
    for (int i = 0; i <= static_cast<int>(Kind::two_odd_two); ++i) {
        Kind k = static_cast<Kind>(i);
        if (name == kind_name(k)) return k;
    }
    return std::nullopt;
}

LabellingKind LabellingKind::k_sequential(int k) {
    auto lk = of(Kind::k_sequential_odd_graceful);
    lk.shift = k;
    return lk;
}

LabellingKind LabellingKind::ve_exchanged(std::shared_ptr<const Labelling> f) {
    auto lk = of(Kind::ve_exchanged_of);
    lk.paired = std::move(f);
    return lk;
}

LabellingKind LabellingKind::twin(Kind k, std::vector<int> part_of_edge, bool strict) {
    auto lk = of(k);
    lk.part_of_edge = std::move(part_of_edge);
    lk.strict_twin_range = strict;
    return lk;
}

void VerifyReport::add(const std::string& name, bool ok, std::string witness) {
    conditions.push_back({name, ok, std::move(witness)});
    pass = pass && ok;
}

std::string VerifyReport::summary() const {
    std::ostringstream os;
    os << kind << ": " << (pass ? "pass" : "FAIL");
    for (const auto& c : conditions) {
        os << "\n  [" << (c.pass ? "ok" : "NO") << "] " << c.name;
        if (!c.witness.empty()) os << " (" << c.witness << ")";
    }
    if (k) os << "\n  k=" << *k;
    if (k_prime) os << " k'=" << *k_prime;
    if (k_dprime) os << " k''=" << *k_dprime;
    if (singularity) os << " singularity=" << *singularity;
    return os.str();
}

bool is_injective(const std::vector<int>& values) {
    std::set<int> s(values.begin(), values.end());
    return s.size() == values.size();
}

bool is_interval(const std::set<int>& s, int lo, int hi) {
    if (hi < lo) return s.empty();
    if (static_cast<int>(s.size()) != hi - lo + 1) return false;
    return *s.begin() == lo && *s.rbegin() == hi;
}

bool is_odd_interval(const std::set<int>& s, int lo, int hi) {
    if (hi < lo) return s.empty();
    int expected = (hi - lo) / 2 + 1;
    if (static_cast<int>(s.size()) != expected) return false;
    for (int x = lo; x <= hi; x += 2)
        if (!s.count(x)) return false;
    return true;
}

std::optional<int> constant_of(const std::vector<int>& values) {
    if (values.empty()) return std::nullopt;
    for (int v : values)
        if (v != values.front()) return std::nullopt;
    return values.front();
}

bool multiset_equal(std::vector<int> a, std::vector<int> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

std::vector<int> pair_sum_constants(const std::vector<int>& values) {
    std::vector<int> out;
    if (values.empty()) return out;
    std::map<int, int> count;
    for (int v : values) ++count[v];
    std::set<int> candidates;
    for (int a : values)
        for (int b : values) candidates.insert(a + b);
    for (int k : candidates) {
        bool ok = true;
        for (auto [v, c] : count) {
            if (2 * v == k) continue; // fixed points pair with themselves
            auto it = count.find(k - v);
            if (it == count.end() || it->second != c) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(k);
    }
    return out;
}

std::vector<VeMatchingResult> ve_matching_constants(const std::vector<int>& vertex_values,
                                                    const std::vector<int>& edge_values) {
    std::vector<VeMatchingResult> out;
    size_t p = vertex_values.size(), q = edge_values.size();
    if (q != p && q + 1 != p) return out;
    std::map<int, int> vcount;
    for (int v : vertex_values) ++vcount[v];
    std::set<int> candidates;
    for (int e : edge_values)
        for (int v : vertex_values) candidates.insert(e + v);
    for (int k : candidates) {
        std::map<int, int> remaining = vcount;
        bool ok = true;
        for (int e : edge_values) {
            auto it = remaining.find(k - e);
            if (it == remaining.end() || it->second == 0) {
                ok = false;
                break;
            }
            --it->second;
        }
        if (!ok) continue;
        VeMatchingResult res;
        res.k_dprime = k;
        for (auto [v, c] : remaining)
            if (c > 0) res.singular_value = v;
        out.push_back(res);
    }
    return out;
}

std::optional<VeMatchingResult> ve_matching_constant(const std::vector<int>& vertex_values,
                                                     const std::vector<int>& edge_values) {
    auto all = ve_matching_constants(vertex_values, edge_values);
    if (all.empty()) return std::nullopt;
    return all.front();
}

namespace {

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

std::vector<int> induced_diffs(const Graph& g, const Labelling& f) {
    std::vector<int> out;
    for (auto [u, v] : g.edges()) out.push_back(std::abs(*f.vertex(u) - *f.vertex(v)));
    return out;
}

std::vector<int> induced_mod_sums(const Graph& g, const Labelling& f, int m) {
    std::vector<int> out;
    for (auto [u, v] : g.edges()) out.push_back((*f.vertex(u) + *f.vertex(v)) % m);
    return out;
}

void require_vertices(const Graph& g, const Labelling& f) {
    if (g.p() != f.num_vertex_slots() || !f.vertices_total())
        fail(Errc::missing_labels, "all vertices must be labelled");
}

void require_total(const Graph& g, const Labelling& f) {
    require_vertices(g, f);
    if (g.q() != f.num_edge_slots() || !f.edges_total())
        fail(Errc::missing_labels, "all edges must be labelled");
}

void check_range(VerifyReport& rep, const char* name, const std::vector<int>& values, int lo,
                 int hi) {
    bool ok = std::all_of(values.begin(), values.end(),
                          [&](int x) { return lo <= x && x <= hi; });
    std::ostringstream os;
    os << "labels within [" << lo << "," << hi << "]";
    rep.add(name, ok, os.str());
}

// Accepts either orientation of the bipartition classes.
void check_set_ordered(VerifyReport& rep, const Graph& g, const Labelling& f) {
    Bipartition bp;
    try {
        bp = bipartition(g);
    } catch (const Error& e) {
        if (e.code() == Errc::odd_cycle)
            fail(Errc::not_bipartite, "set-ordered kinds need a bipartite graph");
        throw;
    }
    int maxX = INT_MIN, minX = INT_MAX, maxY = INT_MIN, minY = INT_MAX;
    for (int v : bp.X) {
        maxX = std::max(maxX, *f.vertex(v));
        minX = std::min(minX, *f.vertex(v));
    }
    for (int v : bp.Y) {
        maxY = std::max(maxY, *f.vertex(v));
        minY = std::min(minY, *f.vertex(v));
    }
    bool fwd = bp.Y.empty() || maxX < minY;
    bool rev = bp.Y.empty() || maxY < minX;
    rep.add("set_ordered", fwd || rev, fwd ? "f_max(X) < f_min(Y)" : "f_min(X) > f_max(Y)");
}

// When edge labels are present they must match the induced values.
void check_edge_consistency(VerifyReport& rep, const Graph& g, const Labelling& f,
                            const std::vector<int>& induced) {
    bool any = false, ok = true;
    for (int e = 0; e < g.q(); ++e)
        if (f.edge(e)) {
            any = true;
            if (*f.edge(e) != induced[static_cast<size_t>(e)]) ok = false;
        }
    if (any) rep.add("edge_rule_consistent", ok);
}

// Kuhn's matching: edge i may take target j when allowed(i, j).
bool perfect_assignment(int n_edges, int n_targets,
                        const std::function<bool(int, int)>& allowed) {
    std::vector<int> match_target(static_cast<size_t>(n_targets), -1);
    std::function<bool(int, std::vector<char>&)> try_kuhn = [&](int i, std::vector<char>& seen) {
        for (int j = 0; j < n_targets; ++j) {
            if (!allowed(i, j) || seen[static_cast<size_t>(j)]) continue;
            seen[static_cast<size_t>(j)] = 1;
            if (match_target[static_cast<size_t>(j)] < 0 ||
                try_kuhn(match_target[static_cast<size_t>(j)], seen)) {
                match_target[static_cast<size_t>(j)] = i;
                return true;
            }
        }
        return false;
    };
    for (int i = 0; i < n_edges; ++i) {
        std::vector<char> seen(static_cast<size_t>(n_targets), 0);
        if (!try_kuhn(i, seen)) return false;
    }
    return true;
}

void check_ee_difference(VerifyReport& rep, const std::vector<int>& edge_values,
                         const std::vector<int>& diff_values, bool bijective,
                         std::optional<int> alt_M = std::nullopt) {
    auto test = [&](const std::vector<int>& supply) {
        if (bijective) return multiset_equal(edge_values, supply);
        std::set<int> have(supply.begin(), supply.end());
        return std::all_of(edge_values.begin(), edge_values.end(),
                           [&](int x) { return have.count(x) > 0; });
    };
    bool plain = test(diff_values);
    bool alt = false;
    if (!plain && alt_M) {
        std::vector<int> alt_supply;
        for (int d : diff_values) alt_supply.push_back(*alt_M - d);
        alt = test(alt_supply);
    }
    std::set<int> have(diff_values.begin(), diff_values.end());
    bool existential = std::all_of(edge_values.begin(), edge_values.end(),
                                   [&](int x) { return have.count(x) > 0; });
    std::string note = std::string(plain ? "plain" : (alt ? "alternative" : "unmatched")) +
                       (existential ? "; per-edge witness exists" : "");
    rep.add("ee_difference", plain || alt, note);
}

void check_ee_balanced(VerifyReport& rep, const Graph& g, const std::vector<int>& diff_values,
                       const std::vector<int>& edge_values) {
    std::vector<int> s;
    for (int e = 0; e < g.q(); ++e)
        s.push_back(diff_values[static_cast<size_t>(e)] - edge_values[static_cast<size_t>(e)]);
    auto ks = pair_sum_constants(s);
    rep.add("ee_balanced", !ks.empty(), ks.empty() ? "" : "k'=" + std::to_string(ks.front()));
    if (!ks.empty()) {
        bool zero = std::find(ks.begin(), ks.end(), 0) != ks.end();
        rep.k_prime = zero ? 0 : ks.front();
    }
}

struct PartView {
    Graph graph;
    Labelling labelling;
    std::vector<int> orig_vertex; // part vertex -> composed vertex
};

PartView subgraph_part(const Graph& g, const Labelling& f, const std::vector<int>& part_of_edge,
                       int which) {
    std::vector<int> remap(static_cast<size_t>(g.p()), -1);
    std::vector<int> orig;
    std::vector<Edge> edges;
    for (int e = 0; e < g.q(); ++e) {
        if (part_of_edge[static_cast<size_t>(e)] != which) continue;
        auto [u, v] = g.edge(e);
        for (int w : {u, v})
            if (remap[static_cast<size_t>(w)] < 0) {
                remap[static_cast<size_t>(w)] = static_cast<int>(orig.size());
                orig.push_back(w);
            }
        edges.emplace_back(remap[static_cast<size_t>(u)], remap[static_cast<size_t>(v)]);
    }
    Graph pg(static_cast<int>(orig.size()), edges);
    Labelling pf(pg);
    for (int v = 0; v < pg.p(); ++v) pf.set_vertex(v, *f.vertex(orig[static_cast<size_t>(v)]));
    return {std::move(pg), std::move(pf), std::move(orig)};
}

void check_odd_graceful_on(VerifyReport& rep, const std::string& prefix, const Graph& g,
                           const Labelling& f) {
    int q = g.q();
    auto labels = f.vertex_labels();
    rep.add(prefix + "injective", is_injective(labels));
    check_range(rep, (prefix + "vertex_range").c_str(), labels, 0, 2 * q - 1);
    auto diffs = induced_diffs(g, f);
    std::set<int> ds(diffs.begin(), diffs.end());
    rep.add(prefix + "edge_differences_odd_interval",
            static_cast<int>(diffs.size()) == q && is_odd_interval(ds, 1, 2 * q - 1) &&
                ds.size() == diffs.size(),
            join(diffs));
}

void check_odd_elegant_on(VerifyReport& rep, const std::string& prefix, const Graph& g,
                          const Labelling& f) {
    int q = g.q();
    auto labels = f.vertex_labels();
    rep.add(prefix + "injective", is_injective(labels));
    check_range(rep, (prefix + "vertex_range").c_str(), labels, 0, 2 * q - 1);
    auto sums = induced_mod_sums(g, f, 2 * q);
    std::set<int> ss(sums.begin(), sums.end());
    rep.add(prefix + "edge_sums_odd_interval",
            is_odd_interval(ss, 1, 2 * q - 1) && ss.size() == sums.size(), join(sums));
}

VerifyReport verify_vertex_kind(const Graph& g, const Labelling& f, const LabellingKind& kind) {
    VerifyReport rep;
    rep.kind = kind_name(kind.tag);
    require_vertices(g, f);
    int q = g.q();
    auto labels = f.vertex_labels();

    switch (kind.tag) {
    case Kind::graceful:
    case Kind::set_ordered_graceful: {
        rep.add("injective", is_injective(labels));
        check_range(rep, "vertex_range", labels, 0, q);
        auto diffs = induced_diffs(g, f);
        std::set<int> ds(diffs.begin(), diffs.end());
        rep.add("edge_differences_interval", is_interval(ds, 1, q) && ds.size() == diffs.size(),
                join(diffs));
        check_edge_consistency(rep, g, f, diffs);
        if (kind.tag == Kind::set_ordered_graceful) check_set_ordered(rep, g, f);
        break;
    }
    case Kind::odd_graceful:
    case Kind::set_ordered_odd_graceful: {
        check_odd_graceful_on(rep, "", g, f);
        check_edge_consistency(rep, g, f, induced_diffs(g, f));
        if (kind.tag == Kind::set_ordered_odd_graceful) check_set_ordered(rep, g, f);
        break;
    }
    case Kind::pan_odd_graceful: {
        rep.add("injective", is_injective(labels));
        check_range(rep, "vertex_range", labels, 0, 2 * q);
        auto diffs = induced_diffs(g, f);
        std::vector<int> targets;
        for (int t = 1; t <= 2 * q - 1; t += 2) targets.push_back(t);
        bool labelled_edges = f.edges_total() && g.q() > 0;
        if (labelled_edges) {
            bool percand = true;
            std::vector<int> evals;
            for (int e = 0; e < g.q(); ++e) {
                int d = diffs[static_cast<size_t>(e)];
                int lab = *f.edge(e);
                if (lab != d && lab != 2 * q - 1 - d) percand = false;
                evals.push_back(lab);
            }
            rep.add("edge_labels_from_difference_or_complement", percand);
            rep.add("edge_labels_odd_interval", multiset_equal(evals, targets), join(evals));
        } else {
            bool ok = perfect_assignment(q, q, [&](int e, int t) {
                int d = diffs[static_cast<size_t>(e)];
                int v = targets[static_cast<size_t>(t)];
                return v == d || v == 2 * q - 1 - d;
            });
            rep.add("edge_assignment_exists", ok, join(diffs));
        }
        break;
    }
    case Kind::k_sequential_odd_graceful: {
        rep.add("injective", is_injective(labels));
        check_range(rep, "vertex_range", labels, kind.shift, 2 * q - 1 + kind.shift);
        auto diffs = induced_diffs(g, f);
        std::set<int> ds(diffs.begin(), diffs.end());
        rep.add("edge_differences_odd_interval",
                is_odd_interval(ds, 1, 2 * q - 1) && ds.size() == diffs.size(), join(diffs));
        check_edge_consistency(rep, g, f, diffs);
        break;
    }
    case Kind::odd_elegant:
    case Kind::set_ordered_odd_elegant: {
        check_odd_elegant_on(rep, "", g, f);
        check_edge_consistency(rep, g, f, induced_mod_sums(g, f, 2 * q));
        if (kind.tag == Kind::set_ordered_odd_elegant) check_set_ordered(rep, g, f);
        break;
    }
    case Kind::felicitous: {
        rep.add("injective", is_injective(labels));
        check_range(rep, "vertex_range", labels, 0, q);
        auto sums = induced_mod_sums(g, f, q);
        std::set<int> ss(sums.begin(), sums.end());
        rep.add("edge_sums_interval", is_interval(ss, 0, q - 1) && ss.size() == sums.size(),
                join(sums));
        check_edge_consistency(rep, g, f, sums);
        break;
    }
    case Kind::harmonious: {
        // Trees need one repeated vertex label; all other graphs stay injective.
        std::set<int> distinct(labels.begin(), labels.end());
        size_t collisions = labels.size() - distinct.size();
        bool inj_ok = g.p() == q + 1 ? collisions == 1 : collisions == 0;
        rep.add("injective_up_to_tree_exception", inj_ok,
                "collisions=" + std::to_string(collisions));
        check_range(rep, "vertex_range", labels, 0, q - 1);
        auto sums = induced_mod_sums(g, f, q);
        std::set<int> ss(sums.begin(), sums.end());
        rep.add("edge_sums_interval", is_interval(ss, 0, q - 1) && ss.size() == sums.size(),
                join(sums));
        check_edge_consistency(rep, g, f, sums);
        break;
    }
    default:
        fail(Errc::internal, "not a vertex kind");
    }
    return rep;
}

VerifyReport verify_total_kind(const Graph& g, const Labelling& f, const LabellingKind& kind) {
    VerifyReport rep;
    rep.kind = kind_name(kind.tag);
    require_total(g, f);
    int p = g.p(), q = g.q();
    auto vl = f.vertex_labels();
    auto el = f.edge_labels();
    std::vector<int> all = vl;
    all.insert(all.end(), el.begin(), el.end());

    auto check_total_bijection = [&] {
        std::set<int> s(all.begin(), all.end());
        rep.add("total_bijection_1_to_p_plus_q",
                is_interval(s, 1, p + q) && s.size() == all.size());
    };
    auto magic_sums = [&] {
        std::vector<int> sums;
        for (int e = 0; e < q; ++e) {
            auto [u, v] = g.edge(e);
            sums.push_back(*f.vertex(u) + *f.edge(e) + *f.vertex(v));
        }
        return sums;
    };

    switch (kind.tag) {
    case Kind::edge_magic_total:
    case Kind::super_edge_magic_total: {
        check_total_bijection();
        auto k = constant_of(magic_sums());
        rep.add("edge_magic_constant", k.has_value(), k ? "k=" + std::to_string(*k) : "");
        rep.k = k;
        if (kind.tag == Kind::super_edge_magic_total) {
            std::set<int> vs(vl.begin(), vl.end());
            rep.add("super_vertex_labels_1_to_p", is_interval(vs, 1, p) && vs.size() == vl.size());
        }
        break;
    }
    case Kind::pan_edge_magic_total: {
        auto k = constant_of(magic_sums());
        rep.add("edge_magic_constant", k.has_value(), k ? "k=" + std::to_string(*k) : "");
        rep.k = k;
        break;
    }
    case Kind::edge_antimagic_total: {
        check_total_bijection();
        auto sums = magic_sums();
        std::set<int> s(sums.begin(), sums.end());
        rep.add("edge_sums_distinct", s.size() == sums.size(), join(sums));
        break;
    }
    case Kind::edge_magic_graceful:
    case Kind::super_edge_magic_graceful: {
        check_total_bijection();
        std::vector<int> vals;
        for (int e = 0; e < q; ++e) {
            auto [u, v] = g.edge(e);
            vals.push_back(std::abs(*f.vertex(u) + *f.vertex(v) - *f.edge(e)));
        }
        auto k = constant_of(vals);
        rep.add("edge_magic_graceful_constant", k.has_value(), k ? "k=" + std::to_string(*k) : "");
        rep.k = k;
        if (kind.tag == Kind::super_edge_magic_graceful) {
            std::set<int> vs(vl.begin(), vl.end());
            rep.add("super_vertex_labels_1_to_p", is_interval(vs, 1, p) && vs.size() == vl.size());
        }
        break;
    }
    case Kind::relaxed_emt: {
        check_total_bijection();
        auto k = constant_of(magic_sums());
        rep.add("edge_magic_constant", k.has_value(), k ? "k=" + std::to_string(*k) : "");
        rep.k = k;
        check_ee_difference(rep, el, induced_diffs(g, f), kind.bijective_matchings);
        break;
    }
    case Kind::ve_exchanged_of: {
        if (!kind.paired) fail(Errc::missing_certificates, "ve_exchanged needs the paired labelling");
        const Labelling& base = *kind.paired;
        std::set<int> s(all.begin(), all.end());
        rep.add("total_bijection_1_to_p_plus_q",
                is_interval(s, 1, p + q) && s.size() == all.size());
        int a0 = (p + q + 1) / 2;
        rep.singularity = a0;
        // One of the five listed edge rules must hold across all edges.
        std::vector<int> diffs = induced_diffs(g, f);
        bool rule_diff = true, rule_diff_const = true, rule_mod = q > 0, rule_emg = true,
             rule_emt = true;
        std::vector<int> demg, demt;
        for (int e = 0; e < q; ++e) {
            auto [u, v] = g.edge(e);
            int hu = *f.vertex(u), hv = *f.vertex(v), he = *f.edge(e);
            if (he != std::abs(hu - hv)) rule_diff = false;
            if (q > 0 && he != (hu + hv) % q) rule_mod = false;
            demg.push_back(std::abs(hu + hv - he));
            demt.push_back(hu + he + hv);
        }
        rule_diff_const = rule_diff && constant_of(f.edge_labels()).has_value();
        rule_emg = constant_of(demg).has_value();
        rule_emt = constant_of(demt).has_value();
        std::string mode = rule_diff ? "difference" : rule_mod ? "mod-sum"
                           : rule_emg ? "edge-magic-graceful" : rule_emt ? "edge-magic-total" : "none";
        rep.add("edge_rule_one_of_five", rule_diff || rule_diff_const || rule_mod || rule_emg ||
                                             rule_emt, mode);
        std::set<int> hv_set(vl.begin(), vl.end()), he_set(el.begin(), el.end());
        std::set<int> fv_set = base.vertex_label_set(), fe_set = base.edge_label_set();
        bool a0_in = hv_set.count(a0) && fv_set.count(a0);
        rep.add("singularity_in_both_vertex_sets", a0_in, "a0=" + std::to_string(a0));
        std::set<int> hv_minus = hv_set, fv_minus = fv_set;
        hv_minus.erase(a0);
        fv_minus.erase(a0);
        rep.add("vertex_set_matches_paired_edge_set", hv_minus == fe_set);
        rep.add("edge_set_matches_paired_vertex_set", he_set == fv_minus);
        break;
    }
    default:
        fail(Errc::internal, "not a total kind");
    }
    return rep;
}

VerifyReport verify_pair_kind(const Graph& g, const Labelling& f, const LabellingKind& kind) {
    VerifyReport rep;
    rep.kind = kind_name(kind.tag);
    require_total(g, f);
    int p = g.p(), q = g.q();
    auto vl = f.vertex_labels();
    auto el = f.edge_labels();
    auto diffs = induced_diffs(g, f);

    switch (kind.tag) {
    case Kind::oemm: {
        rep.add("vertex_injective", is_injective(vl));
        check_range(rep, "vertex_range", vl, 0, 2 * q - 1);
        std::set<int> es(el.begin(), el.end());
        rep.add("edge_labels_odd_interval", is_odd_interval(es, 1, 2 * q - 1) &&
                                                es.size() == el.size(), join(el));
        std::vector<int> sums;
        for (int e = 0; e < q; ++e) {
            auto [u, v] = g.edge(e);
            sums.push_back(*f.vertex(u) + *f.edge(e) + *f.vertex(v));
        }
        auto k = constant_of(sums);
        rep.add("edge_magic_constant", k.has_value(), k ? "k=" + std::to_string(*k) : "");
        rep.k = k;
        break;
    }
    case Kind::eedoemm: {
        rep.add("vertex_injective", is_injective(vl));
        check_range(rep, "vertex_range", vl, 0, 2 * q - 1);
        std::set<int> es(el.begin(), el.end());
        rep.add("edge_labels_odd_interval", is_odd_interval(es, 1, 2 * q - 1) &&
                                                es.size() == el.size(), join(el));
        check_ee_difference(rep, el, diffs, kind.bijective_matchings);
        check_ee_balanced(rep, g, diffs, el);
        std::vector<int> emv;
        for (int e = 0; e < q; ++e)
            emv.push_back(*f.edge(e) + diffs[static_cast<size_t>(e)]);
        auto k = constant_of(emv);
        rep.add("e_magic_constant", k.has_value(), k ? "k=" + std::to_string(*k) : "");
        rep.k = k;
        break;
    }
    case Kind::dgemm: {
        rep.add("vertex_injective", is_injective(vl));
        check_range(rep, "vertex_range", vl, 0, p - 1);
        std::set<int> es(el.begin(), el.end());
        rep.add("edge_labels_interval", is_interval(es, 1, q) && es.size() == el.size(), join(el));
        check_ee_difference(rep, el, diffs, kind.bijective_matchings, p);
        check_ee_balanced(rep, g, diffs, el);
        std::vector<int> emv;
        for (int e = 0; e < q; ++e)
            emv.push_back(diffs[static_cast<size_t>(e)] + *f.edge(e));
        auto k = constant_of(emv);
        rep.add("e_magic_constant", k.has_value(), k ? "k=" + std::to_string(*k) : "");
        rep.k = k;
        auto vems = ve_matching_constants(vl, el);
        std::optional<VeMatchingResult> vem;
        for (const auto& cand : vems)
            if (!cand.singular_value || *cand.singular_value == 0) {
                vem = cand;
                break;
            }
        if (!vem && !vems.empty()) vem = vems.front();
        bool sing_ok = vem.has_value() && (!vem->singular_value || *vem->singular_value == 0);
        rep.add("ve_matching_with_zero_singularity", sing_ok,
                vem ? "k'=" + std::to_string(vem->k_dprime) : "");
        if (vem) {
            rep.k_dprime = vem->k_dprime;
            rep.singularity = vem->singular_value;
        }
        break;
    }
    default:
        fail(Errc::internal, "not a pair kind");
    }
    return rep;
}

VerifyReport verify_twin_kind(const Graph& g, const Labelling& f, const LabellingKind& kind) {
    VerifyReport rep;
    rep.kind = kind_name(kind.tag);
    require_vertices(g, f);
    if (static_cast<int>(kind.part_of_edge.size()) != g.q())
        fail(Errc::missing_parts, "twin kinds need a part designation per edge");
    for (int x : kind.part_of_edge)
        if (x != 0 && x != 1) fail(Errc::missing_parts, "part designation must be 0 or 1");
    auto p1 = subgraph_part(g, f, kind.part_of_edge, 0);
    auto p2 = subgraph_part(g, f, kind.part_of_edge, 1);
    if (p1.graph.q() == 0 || p2.graph.q() == 0)
        fail(Errc::missing_parts, "both parts must be nonempty");
    int qg = g.q();
    auto labels = f.vertex_labels();
    rep.add("injective", is_injective(labels));
    rep.add("parts_connected", p1.graph.connected() && p2.graph.connected());

    std::set<int> s1, s2;
    for (int v = 0; v < p1.graph.p(); ++v) s1.insert(*p1.labelling.vertex(v));
    for (int v = 0; v < p2.graph.p(); ++v) s2.insert(*p2.labelling.vertex(v));
    std::vector<int> inter;
    std::set_intersection(s1.begin(), s1.end(), s2.begin(), s2.end(), std::back_inserter(inter));
    rep.k = static_cast<int>(inter.size());
    std::set<int> uni = s1;
    uni.insert(s2.begin(), s2.end());

    switch (kind.tag) {
    case Kind::tog: {
        check_odd_graceful_on(rep, "part1_", p1.graph, p1.labelling);
        auto d2 = induced_diffs(p2.graph, p2.labelling);
        std::set<int> ds2(d2.begin(), d2.end());
        if (kind.strict_twin_range) {
            rep.add("part2_differences_strict_interval",
                    is_odd_interval(ds2, 1, qg - 1) && ds2.size() == d2.size(), join(d2));
            rep.add("union_within_0_to_q_minus_1",
                    uni.empty() || (*uni.begin() >= 0 && *uni.rbegin() <= qg - 1));
        } else {
            rep.add("part2_differences_odd_interval",
                    is_odd_interval(ds2, 1, 2 * p2.graph.q() - 1) && ds2.size() == d2.size(),
                    join(d2));
            rep.add("union_within_0_to_q",
                    uni.empty() || (*uni.begin() >= 0 && *uni.rbegin() <= qg));
        }
        rep.add("shared_label_count_recorded", true, "k=" + std::to_string(*rep.k));
        break;
    }
    case Kind::toe:
    case Kind::sotoe: {
        check_odd_elegant_on(rep, "part1_", p1.graph, p1.labelling);
        check_odd_elegant_on(rep, "part2_", p2.graph, p2.labelling);
        rep.add("union_within_0_to_q_minus_1",
                uni.empty() || (*uni.begin() >= 0 && *uni.rbegin() <= qg - 1));
        rep.add("shared_label_count_recorded", true, "k=" + std::to_string(*rep.k));
        if (kind.tag == Kind::sotoe) check_set_ordered(rep, p1.graph, p1.labelling);
        break;
    }
    case Kind::two_odd_two: {
        check_odd_graceful_on(rep, "part1_", p1.graph, p1.labelling);
        int q2 = p2.graph.q();
        auto l2 = p2.labelling.vertex_labels();
        check_range(rep, "part2_vertex_range", l2, 0, 2 * q2);
        auto sums = induced_mod_sums(p2.graph, p2.labelling, 2 * q2);
        std::set<int> ss(sums.begin(), sums.end());
        rep.add("part2_edge_sums_odd_interval",
                is_odd_interval(ss, 1, 2 * q2 - 1) && ss.size() == sums.size(), join(sums));
        rep.add("shared_label_count_recorded", true, "k=" + std::to_string(*rep.k));
        break;
    }
    default:
        fail(Errc::internal, "not a twin kind");
    }
    return rep;
}

} // namespace

VerifyReport verify(const Graph& g, const Labelling& f, const LabellingKind& kind) {
    switch (kind.tag) {
    case Kind::graceful:
    case Kind::set_ordered_graceful:
    case Kind::odd_graceful:
    case Kind::set_ordered_odd_graceful:
    case Kind::pan_odd_graceful:
    case Kind::k_sequential_odd_graceful:
    case Kind::odd_elegant:
    case Kind::set_ordered_odd_elegant:
    case Kind::felicitous:
    case Kind::harmonious:
        return verify_vertex_kind(g, f, kind);
    case Kind::edge_magic_total:
    case Kind::super_edge_magic_total:
    case Kind::pan_edge_magic_total:
    case Kind::edge_antimagic_total:
    case Kind::edge_magic_graceful:
    case Kind::super_edge_magic_graceful:
    case Kind::relaxed_emt:
    case Kind::ve_exchanged_of:
        return verify_total_kind(g, f, kind);
    case Kind::oemm:
    case Kind::eedoemm:
    case Kind::dgemm:
        return verify_pair_kind(g, f, kind);
    case Kind::six_c: {
        auto r = verify_six_c(g, f, false, true);
        return r.as_report();
    }
    case Kind::odd_even_separable_six_c: {
        auto r = verify_six_c(g, f, true, false);
        return r.as_report();
    }
    case Kind::tog:
    case Kind::toe:
    case Kind::sotoe:
    case Kind::two_odd_two:
        return verify_twin_kind(g, f, kind);
    }
    fail(Errc::internal, "unknown kind");
}

namespace {

// Necessary conditions only: a false return must imply verify(...).pass is
// false. Used to thin enumeration streams before the full clause lists run.
bool quick_screen(const Graph& g, const Labelling& f, const LabellingKind& kind) {
    int q = g.q();
    if (g.p() != f.num_vertex_slots() || !f.vertices_total()) return true; // verify reports it
    auto diffs_exact = [&](int lo, int hi, int step) {
        unsigned long long seen = 0;
        for (auto [u, v] : g.edges()) {
            int d = std::abs(*f.vertex(u) - *f.vertex(v));
            if (d < lo || d > hi || (d - lo) % step != 0) return false;
            unsigned long long bit = 1ULL << ((d - lo) / step);
            if (seen & bit) return false;
            seen |= bit;
        }
        return true;
    };
    auto modsums_exact = [&](int m, int lo, int step) {
        if (m <= 0) return false;
        unsigned long long seen = 0;
        for (auto [u, v] : g.edges()) {
            int d = (*f.vertex(u) + *f.vertex(v)) % m;
            if (d < lo || (d - lo) % step != 0) return false;
            unsigned long long bit = 1ULL << ((d - lo) / step);
            if (seen & bit) return false;
            seen |= bit;
        }
        return true;
    };
    auto magic_total = [&] {
        std::optional<int> k;
        for (int e = 0; e < q; ++e) {
            auto [u, v] = g.edge(e);
            int s = *f.vertex(u) + *f.edge(e) + *f.vertex(v);
            if (!k) k = s;
            else if (*k != s) return false;
        }
        return true;
    };
    switch (kind.tag) {
    case Kind::graceful:
    case Kind::set_ordered_graceful:
        return diffs_exact(1, q, 1);
    case Kind::odd_graceful:
    case Kind::set_ordered_odd_graceful:
    case Kind::k_sequential_odd_graceful:
        return diffs_exact(1, 2 * q - 1, 2);
    case Kind::odd_elegant:
    case Kind::set_ordered_odd_elegant:
        return modsums_exact(2 * q, 1, 2);
    case Kind::felicitous:
    case Kind::harmonious:
        return modsums_exact(q, 0, 1);
    case Kind::edge_magic_total:
    case Kind::super_edge_magic_total:
    case Kind::pan_edge_magic_total:
    case Kind::relaxed_emt:
    case Kind::oemm: {
        if (!f.edges_total()) return true;
        return magic_total();
    }
    case Kind::edge_magic_graceful:
    case Kind::super_edge_magic_graceful: {
        if (!f.edges_total()) return true;
        std::optional<int> k;
        for (int e = 0; e < q; ++e) {
            auto [u, v] = g.edge(e);
            int s = std::abs(*f.vertex(u) + *f.vertex(v) - *f.edge(e));
            if (!k) k = s;
            else if (*k != s) return false;
        }
        return true;
    }
    case Kind::six_c:
    case Kind::odd_even_separable_six_c:
    case Kind::eedoemm:
    case Kind::dgemm: {
        if (!f.edges_total()) return true;
        std::optional<int> k;
        for (int e = 0; e < q; ++e) {
            auto [u, v] = g.edge(e);
            int s = *f.edge(e) + std::abs(*f.vertex(u) - *f.vertex(v));
            if (!k) k = s;
            else if (*k != s) return false;
        }
        return true;
    }
    case Kind::edge_antimagic_total: {
        if (!f.edges_total()) return true;
        unsigned long long seen_lo = 0, seen_hi = 0;
        for (int e = 0; e < q; ++e) {
            auto [u, v] = g.edge(e);
            int s = *f.vertex(u) + *f.edge(e) + *f.vertex(v);
            unsigned long long* word = s < 64 ? &seen_lo : &seen_hi;
            unsigned long long bit = 1ULL << (s % 64);
            if (*word & bit) return false;
            *word |= bit;
        }
        return true;
    }
    case Kind::ve_exchanged_of: {
        if (!kind.paired || !f.edges_total()) return true;
        int a0 = (g.p() + q + 1) / 2;
        std::set<int> he, fv = kind.paired->vertex_label_set();
        fv.erase(a0);
        for (int e = 0; e < q; ++e) he.insert(*f.edge(e));
        return he == fv;
    }
    default:
        return true;
    }
}

} // namespace

bool verify_accepts(const Graph& g, const Labelling& f, const LabellingKind& kind) {
    if (!quick_screen(g, f, kind)) return false;
    return verify(g, f, kind).pass;
}

SixCReport verify_six_c(const Graph& g, const Labelling& f, bool odd_even_separable,
                        bool require_canonical_singularity) {
    require_total(g, f);
    int p = g.p(), q = g.q();
    auto vl = f.vertex_labels();
    auto el = f.edge_labels();
    std::vector<int> all = vl;
    all.insert(all.end(), el.begin(), el.end());
    for (int x : all)
        if (x < 1 || x > p + q) fail(Errc::out_of_range, "total labels must lie in [1,p+q]");

    SixCReport rep;
    VerifyReport scratch;
    auto diffs = induced_diffs(g, f);

    // (i) e-magic
    std::vector<int> emv;
    for (int e = 0; e < q; ++e) emv.push_back(el[static_cast<size_t>(e)] + diffs[static_cast<size_t>(e)]);
    auto k = constant_of(emv);
    rep.e_magic = {"e_magic", k.has_value(), k ? "k=" + std::to_string(*k) : ""};
    rep.k = k;

    // (ii) ee-difference (alternative form uses 2(p+q) - difference)
    check_ee_difference(scratch, el, diffs, true, 2 * (p + q));
    rep.ee_difference = scratch.conditions.back();

    // (iii) ee-balanced
    check_ee_balanced(scratch, g, diffs, el);
    rep.ee_balanced = scratch.conditions.back();
    rep.k_prime = scratch.k_prime;

    // (iv) EV-ordered: record every mode that holds.
    std::set<int> vs(vl.begin(), vl.end()), es(el.begin(), el.end());
    if (!vs.empty() && !es.empty()) {
        if (*vs.begin() > *es.rbegin()) rep.ev_ordered_modes.push_back("min(V)>max(E)");
        if (*vs.rbegin() < *es.begin()) rep.ev_ordered_modes.push_back("max(V)<min(E)");
        if (std::includes(es.begin(), es.end(), vs.begin(), vs.end()))
            rep.ev_ordered_modes.push_back("V subset of E");
        if (std::includes(vs.begin(), vs.end(), es.begin(), es.end()))
            rep.ev_ordered_modes.push_back("E subset of V");
        bool v_odd = std::all_of(vs.begin(), vs.end(), [](int x) { return x % 2 == 1; });
        bool e_even = std::all_of(es.begin(), es.end(), [](int x) { return x % 2 == 0; });
        if (v_odd && e_even) rep.ev_ordered_modes.push_back("V odd-set, E even-set");
    }
    bool ev_ok = odd_even_separable
                     ? std::find(rep.ev_ordered_modes.begin(), rep.ev_ordered_modes.end(),
                                 "V odd-set, E even-set") != rep.ev_ordered_modes.end()
                     : !rep.ev_ordered_modes.empty();
    std::string modes;
    for (const auto& m : rep.ev_ordered_modes) modes += (modes.empty() ? "" : "; ") + m;
    rep.ev_ordered = {"ev_ordered", ev_ok, modes};

    // (v) ve-matching with at most one singular vertex.
    auto vems = ve_matching_constants(vl, el);
    std::optional<VeMatchingResult> vem;
    for (const auto& cand : vems)
        if (!cand.singular_value || *cand.singular_value == (p + q + 1) / 2) {
            vem = cand;
            break;
        }
    if (!vem && !vems.empty()) vem = vems.front();
    bool vem_ok = vem.has_value();
    if (vem) {
        rep.k_dprime = vem->k_dprime;
        rep.singularity = vem->singular_value;
        if (require_canonical_singularity && vem->singular_value &&
            *vem->singular_value != (p + q + 1) / 2)
            vem_ok = false;
    }
    rep.ve_matching = {"ve_matching", vem_ok,
                       vem ? "k''=" + std::to_string(vem->k_dprime) +
                                 (vem->singular_value
                                      ? ", singularity=" + std::to_string(*vem->singular_value)
                                      : "")
                           : ""};

    // (vi) set-ordered
    VerifyReport so;
    check_set_ordered(so, g, f);
    rep.set_ordered = so.conditions.back();

    // full-range bijection is part of the definition's header
    std::set<int> tot(all.begin(), all.end());
    bool bijective = is_interval(tot, 1, p + q) && tot.size() == all.size();
    if (!bijective) rep.set_ordered.witness += " [total labels not a bijection onto [1,p+q]]";

    rep.pass = bijective && rep.e_magic.pass && rep.ee_difference.pass && rep.ee_balanced.pass &&
               rep.ev_ordered.pass && rep.ve_matching.pass && rep.set_ordered.pass;
    return rep;
}

VerifyReport SixCReport::as_report() const {
    VerifyReport rep;
    rep.kind = "six-c";
    for (const auto& c : {e_magic, ee_difference, ee_balanced, ev_ordered, ve_matching, set_ordered})
        rep.add(c.name, c.pass, c.witness);
    rep.pass = pass;
    rep.k = k;
    rep.k_prime = k_prime;
    rep.k_dprime = k_dprime;
    rep.singularity = singularity;
    return rep;
}

void SetLabelling::set_vertex(int v, std::vector<int> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int x : s)
        if (x < 0) fail(Errc::out_of_range, "set members must be non-negative");
    vertex_sets[static_cast<size_t>(v)] = std::move(s);
}

void SetLabelling::set_edge(int e, std::vector<int> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int x : s)
        if (x < 0) fail(Errc::out_of_range, "set members must be non-negative");
    edge_sets[static_cast<size_t>(e)] = std::move(s);
}

VerifyReport verify_set_labelling(const Graph& g, const SetLabelling& F,
                                  const std::optional<Labelling>& f, SetKind kind, SetRule rule) {
    VerifyReport rep;
    int q = g.q();
    auto need_vertex_sets = [&] {
        for (int v = 0; v < g.p(); ++v)
            if (!F.vertex_sets[static_cast<size_t>(v)])
                fail(Errc::missing_sets, "every vertex needs a set");
    };
    auto need_edge_sets = [&] {
        for (int e = 0; e < q; ++e)
            if (!F.edge_sets[static_cast<size_t>(e)])
                fail(Errc::missing_sets, "every edge needs a set");
    };
    auto distinct = [](const std::vector<std::vector<int>>& sets) {
        std::set<std::vector<int>> s(sets.begin(), sets.end());
        return s.size() == sets.size();
    };

    switch (kind) {
    case SetKind::total_set: {
        rep.kind = "total-set-labelling";
        need_vertex_sets();
        need_edge_sets();
        std::vector<std::vector<int>> sets;
        for (auto& s : F.vertex_sets) sets.push_back(*s);
        for (auto& s : F.edge_sets) sets.push_back(*s);
        rep.add("all_sets_distinct", distinct(sets));
        break;
    }
    case SetKind::vertex_set: {
        rep.kind = "vertex-set-labelling";
        need_vertex_sets();
        std::vector<std::vector<int>> sets;
        for (auto& s : F.vertex_sets) sets.push_back(*s);
        rep.add("vertex_sets_distinct", distinct(sets));
        break;
    }
    case SetKind::edge_set: {
        rep.kind = "edge-set-labelling";
        need_edge_sets();
        std::vector<std::vector<int>> sets;
        for (auto& s : F.edge_sets) sets.push_back(*s);
        rep.add("edge_sets_distinct", distinct(sets));
        break;
    }
    case SetKind::v_set_e_proper: {
        rep.kind = "v-set-e-proper";
        need_vertex_sets();
        if (!f) fail(Errc::missing_labels, "v-set e-proper needs the edge labelling g");
        // pairwise disjoint vertex sets
        bool disjoint = true;
        std::set<int> seen;
        for (auto& s : F.vertex_sets)
            for (int x : *s) {
                if (seen.count(x)) disjoint = false;
                seen.insert(x);
            }
        rep.add("vertex_sets_pairwise_disjoint", disjoint);
        std::vector<int> el;
        for (int e = 0; e < q; ++e) {
            if (!f->edge(e)) fail(Errc::missing_labels, "v-set e-proper needs all edges labelled");
            el.push_back(*f->edge(e));
        }
        rep.add("edge_labels_injective", is_injective(el));
        if (rule == SetRule::graceful) {
            std::set<int> es(el.begin(), el.end());
            rep.add("edge_labels_interval", is_interval(es, 1, q));
        } else if (rule == SetRule::odd_graceful) {
            std::set<int> es(el.begin(), el.end());
            rep.add("edge_labels_odd_interval", is_odd_interval(es, 1, 2 * q - 1));
        }
        bool realizable = true;
        for (int e = 0; e < q; ++e) {
            auto [u, v] = g.edge(e);
            const auto& A = *F.vertex_sets[static_cast<size_t>(u)];
            const auto& B = *F.vertex_sets[static_cast<size_t>(v)];
            bool found = false;
            for (int a : A)
                for (int b : B)
                    if (std::abs(a - b) == el[static_cast<size_t>(e)]) found = true;
            if (!found) realizable = false;
        }
        rep.add("edge_labels_realized_as_differences", realizable);
        break;
    }
    case SetKind::e_set_v_proper: {
        rep.kind = "e-set-v-proper";
        need_edge_sets();
        if (!f) fail(Errc::missing_labels, "e-set v-proper needs the vertex labelling");
        std::vector<std::vector<int>> sets;
        for (auto& s : F.edge_sets) sets.push_back(*s);
        rep.add("edge_sets_distinct", distinct(sets));
        std::vector<int> vl;
        for (int v = 0; v < g.p(); ++v) {
            if (!f->vertex(v)) fail(Errc::missing_labels, "e-set v-proper needs all vertices labelled");
            vl.push_back(*f->vertex(v));
        }
        rep.add("vertex_labels_injective", is_injective(vl));
        break;
    }
    }
    return rep;
}

TotalColoringReport verify_total_coloring(const Graph& g, const Labelling& f) {
    require_total(g, f);
    for (int v = 0; v < g.p(); ++v)
        if (*f.vertex(v) < 1) fail(Errc::out_of_range, "colors must be >= 1");
    for (int e = 0; e < g.q(); ++e)
        if (*f.edge(e) < 1) fail(Errc::out_of_range, "colors must be >= 1");

    TotalColoringReport rep;
    bool proper = true;
    for (auto [u, v] : g.edges())
        if (*f.vertex(u) == *f.vertex(v)) proper = false;
    for (int e = 0; e < g.q(); ++e) {
        auto [u, v] = g.edge(e);
        if (*f.edge(e) == *f.vertex(u) || *f.edge(e) == *f.vertex(v)) proper = false;
    }
    for (int v = 0; v < g.p(); ++v) {
        std::set<int> around;
        for (int w : g.neighbors(v)) {
            int e = g.edge_index(v, w);
            if (around.count(*f.edge(e))) proper = false;
            around.insert(*f.edge(e));
        }
    }
    rep.proper = proper;
    rep.colors_used = static_cast<int>(f.universal_label_set().size());
    if (g.q() > 0) {
        std::set<int> sums;
        int mn = INT_MAX, mx = INT_MIN;
        for (int e = 0; e < g.q(); ++e) {
            auto [u, v] = g.edge(e);
            int d = *f.vertex(u) + *f.edge(e) + *f.vertex(v);
            sums.insert(d);
            mn = std::min(mn, d);
            mx = std::max(mx, d);
        }
        rep.b_tol = mx - mn;
        rep.min_sum = mn;
        rep.max_sum = mx;
        rep.edge_sums_consecutive = is_interval(sums, mn, mx);
    }
    return rep;
}

VerifyReport verify_ve_matching_total_coloring(const Graph& g, const Labelling& f,
                                               VeFlavor flavor) {
    VerifyReport rep;
    rep.kind = flavor == VeFlavor::difference ? "ve-matching-difference-total"
                                              : "ve-matching-sum-total";
    auto tc = verify_total_coloring(g, f);
    rep.add("proper_total_coloring", tc.proper);
    bool ok = true;
    for (int e = 0; e < g.q(); ++e) {
        auto [u, v] = g.edge(e);
        int want = flavor == VeFlavor::difference ? std::abs(*f.vertex(u) - *f.vertex(v))
                                                  : *f.vertex(u) + *f.vertex(v);
        if (*f.edge(e) != want) ok = false;
    }
    rep.add(flavor == VeFlavor::difference ? "edges_are_differences" : "edges_are_sums", ok);
    return rep;
}

VerifyReport verify_sequence_labelling(const Graph& g, const Labelling& f,
                                       const std::vector<int>& A, const std::vector<int>& B,
                                       SequenceFlavor flavor, const EdgeRule& rule,
                                       std::function<bool(int, int, int)> F_relation) {
    for (auto* seq : {&A, &B})
        for (size_t i = 1; i < seq->size(); ++i)
            if ((*seq)[i] <= (*seq)[i - 1])
                fail(Errc::non_monotonic_sequence, "sequences must be strictly increasing");

    VerifyReport rep;
    rep.kind = "sequence-labelling";
    require_vertices(g, f);
    std::set<int> As(A.begin(), A.end()), Bs(B.begin(), B.end());
    auto vl = f.vertex_labels();

    auto seq1 = [&] { // vertex mapping into A, injective
        rep.add("Seq1_vertex_mapping_into_A",
                is_injective(vl) && std::all_of(vl.begin(), vl.end(),
                                                [&](int x) { return As.count(x) > 0; }));
    };
    auto seq2 = [&] { // total mapping into A union B, injective
        if (!f.edges_total()) fail(Errc::missing_labels, "total flavors need edge labels");
        auto el = f.edge_labels();
        std::vector<int> all = vl;
        all.insert(all.end(), el.begin(), el.end());
        std::set<int> AB = As;
        AB.insert(Bs.begin(), Bs.end());
        rep.add("Seq2_total_mapping_into_A_union_B",
                is_injective(all) && std::all_of(all.begin(), all.end(),
                                                 [&](int x) { return AB.count(x) > 0; }));
    };
    auto seq3 = [&] { // induced edge label via the rule
        auto induced = induce_edge_labels(g, f, rule);
        bool ok = true;
        for (int e = 0; e < g.q(); ++e)
            if (!f.edge(e) || *f.edge(e) != *induced.edge(e)) ok = false;
        rep.add("Seq3_edge_labels_induced_by_rule", ok);
    };
    auto seq4 = [&] { // F-equation on each labelled triple
        if (!f.edges_total()) fail(Errc::missing_labels, "total flavors need edge labels");
        bool ok = true;
        if (F_relation) {
            for (int e = 0; e < g.q(); ++e) {
                auto [u, v] = g.edge(e);
                if (!F_relation(*f.vertex(u), *f.edge(e), *f.vertex(v))) ok = false;
            }
        }
        rep.add("Seq4_F_equation", ok, F_relation ? "" : "no relation supplied; vacuous");
    };
    auto seq7 = [&] {
        auto el = f.edge_labels();
        std::set<int> es(el.begin(), el.end());
        bool vin = std::all_of(vl.begin(), vl.end(), [&](int x) { return As.count(x) > 0; });
        rep.add("Seq7_vertices_in_A_edges_equal_B",
                vin && es == Bs && el.size() == Bs.size());
    };
    auto seq8 = [&] {
        auto el = f.edge_labels();
        std::set<int> es(el.begin(), el.end());
        std::set<int> vset(vl.begin(), vl.end());
        rep.add("Seq8_vertices_equal_A_edges_equal_B",
                vset == As && vl.size() == As.size() && es == Bs && el.size() == Bs.size());
    };

    switch (flavor) {
    case SequenceFlavor::sequence:
        seq1();
        seq3();
        break;
    case SequenceFlavor::full:
        seq2();
        seq4();
        seq7();
        break;
    case SequenceFlavor::graceful_sequence:
        seq1();
        seq3();
        seq8();
        break;
    case SequenceFlavor::total_sequence:
        seq2();
        seq4();
        break;
    case SequenceFlavor::f_total_graceful:
        seq2();
        seq4();
        seq8();
        break;
    }
    return rep;
}

} // namespace topolab
