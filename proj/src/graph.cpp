#include "topolab/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace topolab {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::odd_cycle: return "OddCycle";
    case Errc::bad_partition: return "BadPartition";
    case Errc::adjacent: return "Adjacent";
    case Errc::disconnected: return "Disconnected";
    case Errc::unsupported: return "Unsupported";
    case Errc::unlabelled: return "Unlabelled";
    case Errc::missing_labels: return "MissingLabels";
    case Errc::missing_sets: return "MissingSets";
    case Errc::missing_parts: return "MissingParts";
    case Errc::not_bipartite: return "NotBipartite";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::non_monotonic_sequence: return "NonMonotonicSequence";
    case Errc::not_caterpillar: return "NotCaterpillar";
    case Errc::not_tree: return "NotTree";
    case Errc::no_unit_leaf_edge: return "NoUnitLeafEdge";
    case Errc::not_set_ordered_graceful: return "NotSetOrderedGraceful";
    case Errc::odd_leg_count: return "OddLegCount";
    case Errc::not_injective: return "NotInjective";
    case Errc::unknown_family: return "UnknownFamily";
    case Errc::improper_coloring: return "ImproperColoring";
    case Errc::label_clash_inside_part: return "LabelClashInsidePart";
    case Errc::no_matching_exists: return "NoMatchingExists";
    case Errc::missing_certificates: return "MissingCertificates";
    case Errc::uncertified_extremal: return "UncertifiedExtremal";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::invalid_walk: return "InvalidWalk";
    case Errc::empty_input: return "EmptyInput";
    case Errc::parse_error: return "ParseError";
    case Errc::internal: return "Internal";
    }
    return "Unknown";
}

const char* tree_tag_name(TreeTag t) {
    switch (t) {
    case TreeTag::path: return "path";
    case TreeTag::star: return "star";
    case TreeTag::bi_star: return "bi_star";
    case TreeTag::caterpillar: return "caterpillar";
    case TreeTag::spider: return "spider";
    case TreeTag::lobster: return "lobster";
    case TreeTag::generic_tree: return "generic_tree";
    case TreeTag::not_tree: return "not_tree";
    }
    return "?";
}

Graph::Graph(int p, std::vector<Edge> edges) : p_(p) {
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u == v) fail(Errc::internal, "self-loop");
        if (u < 0 || v >= p) fail(Errc::internal, "edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        fail(Errc::internal, "duplicate edge");
    edges_ = std::move(edges);
    adj_.assign(static_cast<size_t>(p_), {});
    for (auto [u, v] : edges_) {
        adj_[static_cast<size_t>(u)].push_back(v);
        adj_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it != edges_.end() && *it == Edge{u, v}) return static_cast<int>(it - edges_.begin());
    return -1;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < p_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::connected() const {
    if (p_ == 0) return true;
    std::vector<char> seen(static_cast<size_t>(p_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : neighbors(v))
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == p_;
}

bool Graph::is_tree() const { return q() == p_ - 1 && connected(); }

bool Graph::is_eulerian() const {
    if (!connected()) return false;
    for (int v = 0; v < p_; ++v)
        if (degree(v) % 2 != 0) return false;
    return true;
}

namespace {

std::optional<std::vector<int>> as_path(const Graph& g, const std::vector<int>& verts) {
    // Orders verts as a path inside g when they induce one; endpoints first by id.
    if (verts.empty()) return std::vector<int>{};
    if (verts.size() == 1) return verts;
    std::set<int> in(verts.begin(), verts.end());
    std::map<int, std::vector<int>> nbr;
    for (int v : verts)
        for (int w : g.neighbors(v))
            if (in.count(w)) nbr[v].push_back(w);
    std::vector<int> ends;
    for (int v : verts) {
        if (nbr[v].size() > 2) return std::nullopt;
        if (nbr[v].size() <= 1) ends.push_back(v);
    }
    if (ends.size() != 2) return std::nullopt;
    std::sort(ends.begin(), ends.end());
    std::vector<int> order{ends[0]};
    int prev = -1, cur = ends[0];
    while (order.size() < verts.size()) {
        int next = -1;
        for (int w : nbr[cur])
            if (w != prev) next = w;
        if (next < 0) return std::nullopt;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

} // namespace

TreeShape classify_tree(const Graph& g) {
    TreeShape shape;
    if (!g.is_tree()) {
        shape.tag = TreeTag::not_tree;
        return shape;
    }
    int p = g.p();
    if (p <= 2) {
        shape.tag = TreeTag::path;
        for (int v = 0; v < p; ++v) shape.spine.push_back(v);
        shape.leaf_blocks.assign(shape.spine.size(), 0);
        return shape;
    }

    std::vector<int> interior;
    for (int v = 0; v < p; ++v)
        if (g.degree(v) >= 2) interior.push_back(v);
    auto spine = as_path(g, interior); // leaf deletion leaves the interior vertices
    bool caterpillar = spine.has_value();

    if (caterpillar) {
        shape.spine = *spine;
        shape.leaf_blocks.clear();
        std::set<int> on_spine(shape.spine.begin(), shape.spine.end());
        for (int u : shape.spine) {
            int m = 0;
            for (int w : g.neighbors(u))
                if (!on_spine.count(w)) ++m;
            shape.leaf_blocks.push_back(m);
        }
        bool path = true;
        for (int v = 0; v < p; ++v)
            if (g.degree(v) > 2) path = false;
        if (path) {
            auto whole = as_path(g, [&] {
                std::vector<int> all(static_cast<size_t>(p));
                std::iota(all.begin(), all.end(), 0);
                return all;
            }());
            shape.tag = TreeTag::path;
            shape.spine = *whole;
            shape.leaf_blocks.assign(shape.spine.size(), 0);
            return shape;
        }
        if (interior.size() == 1) {
            shape.tag = TreeTag::star;
            return shape;
        }
        if (interior.size() == 2) {
            shape.tag = TreeTag::bi_star;
            return shape;
        }
        shape.tag = TreeTag::caterpillar;
        return shape;
    }

    int branch_vertices = 0;
    for (int v = 0; v < p; ++v)
        if (g.degree(v) >= 3) ++branch_vertices;
    if (branch_vertices == 1) {
        shape.tag = TreeTag::spider;
        return shape;
    }

    // Lobster: deleting all leaves yields a caterpillar.
    std::vector<char> keep(static_cast<size_t>(p), 1);
    for (int v = 0; v < p; ++v)
        if (g.degree(v) == 1) keep[static_cast<size_t>(v)] = 0;
    std::vector<int> remap(static_cast<size_t>(p), -1);
    int np = 0;
    for (int v = 0; v < p; ++v)
        if (keep[static_cast<size_t>(v)]) remap[static_cast<size_t>(v)] = np++;
    std::vector<Edge> pruned_edges;
    for (auto [u, v] : g.edges())
        if (keep[static_cast<size_t>(u)] && keep[static_cast<size_t>(v)])
            pruned_edges.emplace_back(remap[static_cast<size_t>(u)], remap[static_cast<size_t>(v)]);
    Graph pruned(np, pruned_edges);
    TreeTag inner = classify_tree(pruned).tag;
    if (inner == TreeTag::path || inner == TreeTag::star || inner == TreeTag::bi_star ||
        inner == TreeTag::caterpillar) {
        shape.tag = TreeTag::lobster;
        return shape;
    }
    shape.tag = TreeTag::generic_tree;
    return shape;
}

bool Bipartition::in_X(int v) const { return std::find(X.begin(), X.end(), v) != X.end(); }

Bipartition bipartition(const Graph& g) {
    if (!g.connected()) fail(Errc::disconnected, "bipartition needs a connected graph");
    std::vector<int> side(static_cast<size_t>(g.p()), -1);
    if (g.p() == 0) return {};
    side[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (side[static_cast<size_t>(w)] < 0) {
                side[static_cast<size_t>(w)] = 1 - side[static_cast<size_t>(v)];
                stack.push_back(w);
            } else if (side[static_cast<size_t>(w)] == side[static_cast<size_t>(v)]) {
                fail(Errc::odd_cycle, "graph is not bipartite");
            }
        }
    }
    Bipartition bp;
    for (int v = 0; v < g.p(); ++v)
        (side[static_cast<size_t>(v)] == 0 ? bp.X : bp.Y).push_back(v);
    return bp;
}

Graph vertex_split(const Graph& g, int v, const std::vector<int>& part) {
    if (v < 0 || v >= g.p()) fail(Errc::index_out_of_range, "split vertex");
    std::set<int> part_set(part.begin(), part.end());
    const auto& nbrs = g.neighbors(v);
    std::set<int> nbr_set(nbrs.begin(), nbrs.end());
    if (part_set.empty() || part_set.size() >= nbr_set.size())
        fail(Errc::bad_partition, "part must be a proper nonempty subset of N(v)");
    for (int u : part_set)
        if (!nbr_set.count(u)) fail(Errc::bad_partition, "part member is not a neighbor of v");

    // v' keeps index v with the 'part' neighbors, v'' is appended at index p.
    std::vector<Edge> edges;
    int vpp = g.p();
    for (auto [a, b] : g.edges()) {
        if (a == v || b == v) {
            int other = (a == v) ? b : a;
            edges.emplace_back(part_set.count(other) ? v : vpp, other);
        } else {
            edges.emplace_back(a, b);
        }
    }
    return Graph(g.p() + 1, edges);
}

Graph vertex_identify(const Graph& g, int u, int v) {
    if (u == v) fail(Errc::bad_partition, "identify needs distinct vertices");
    if (g.has_edge(u, v)) fail(Errc::adjacent, "identify needs non-adjacent vertices");
    int lo = std::min(u, v), hi = std::max(u, v);
    auto remap = [&](int w) {
        if (w == hi) return lo;
        return w > hi ? w - 1 : w;
    };
    std::set<Edge> edges; // collapses multiple edges
    for (auto [a, b] : g.edges()) {
        int x = remap(a), y = remap(b);
        if (x > y) std::swap(x, y);
        edges.insert({x, y});
    }
    return Graph(g.p() - 1, {edges.begin(), edges.end()});
}

SplitToTreeResult split_to_tree(const Graph& g) {
    if (!g.connected()) fail(Errc::disconnected, "split_to_tree needs a connected graph");
    // Spanning tree via DFS; every non-tree edge (u,v) is detached at v into a
    // pendant copy of v hanging off u, which removes exactly one cycle.
    std::vector<char> seen(static_cast<size_t>(g.p()), 0);
    std::set<Edge> tree_edges;
    if (g.p() > 0) {
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = 1;
                    tree_edges.insert({std::min(v, w), std::max(v, w)});
                    stack.push_back(w);
                }
        }
    }
    std::vector<Edge> edges(tree_edges.begin(), tree_edges.end());
    std::vector<int> origin(static_cast<size_t>(g.p()));
    std::iota(origin.begin(), origin.end(), 0);
    int next = g.p();
    for (auto e : g.edges()) {
        if (tree_edges.count(e)) continue;
        edges.emplace_back(e.first, next); // pendant copy of e.second
        origin.push_back(e.second);
        ++next;
    }
    return {Graph(next, edges), origin};
}

namespace {

// Edges ordered by (larger endpoint, smaller endpoint): appending a new vertex
// to a partial labelling only appends to the list, so prefixes are comparable.
struct CanonState {
    const Graph* g = nullptr;
    std::vector<int> chosen;        // canonical id -> original vertex
    std::vector<char> used;         // original vertex taken
    std::vector<Edge> cur;          // edges among chosen, as (small, large), list sorted by (large, small)
    std::vector<Edge> best;
    bool have = false;
};

// Swapping two vertices with equal neighborhoods (ignoring each other) is an
// automorphism, whether or not they are adjacent.
bool twins(const Graph& g, int a, int b) {
    std::vector<int> na, nb;
    for (int w : g.neighbors(a))
        if (w != b) na.push_back(w);
    for (int w : g.neighbors(b))
        if (w != a) nb.push_back(w);
    return na == nb;
}

// Compares partial rows in the (large endpoint, small endpoint) order; a row
// extending another compares smaller, since any later edge has a larger second
// coordinate.
bool row_less(const std::vector<Edge>& a, const std::vector<Edge>& b) {
    auto key = [](const Edge& e) { return std::pair<int, int>(e.second, e.first); };
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        if (a[i] != b[i]) return key(a[i]) < key(b[i]);
    }
    return a.size() > b.size();
}

// `tight` records that st.cur equals the incumbent prefix so far; only then is
// positional pruning sound.
void canon_search(CanonState& st, bool tight) {
    const Graph& g = *st.g;
    int p = g.p();
    int k = static_cast<int>(st.chosen.size());
    if (k == p) {
        if (!st.have || st.cur < st.best) {
            st.best = st.cur;
            st.have = true;
        }
        return;
    }
    std::vector<std::pair<std::vector<Edge>, int>> cands;
    for (int w = 0; w < p; ++w) {
        if (st.used[static_cast<size_t>(w)]) continue;
        std::vector<Edge> row;
        for (int i = 0; i < k; ++i)
            if (g.has_edge(st.chosen[static_cast<size_t>(i)], w)) row.emplace_back(i, k);
        cands.emplace_back(std::move(row), w);
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const auto& a, const auto& b) { return row_less(a.first, b.first); });
    for (size_t c = 0; c < cands.size(); ++c) {
        // Interchangeable siblings (twins with identical rows) explore once.
        bool dup = false;
        for (size_t d = 0; d < c && !dup; ++d)
            if (cands[d].first == cands[c].first && twins(g, cands[d].second, cands[c].second))
                dup = true;
        if (dup) continue;
        size_t len0 = st.cur.size();
        for (auto e : cands[c].first) st.cur.push_back(e);
        bool prune = false;
        bool child_tight = tight;
        if (st.have && tight) {
            auto key = [](const Edge& e) { return std::pair<int, int>(e.second, e.first); };
            for (size_t i = len0; i < st.cur.size(); ++i) {
                if (i >= st.best.size()) { prune = true; break; }
                if (st.cur[i] != st.best[i]) {
                    prune = key(st.cur[i]) > key(st.best[i]);
                    child_tight = false;
                    break;
                }
            }
        } else if (st.have) {
            child_tight = false;
        }
        if (!prune) {
            st.chosen.push_back(cands[c].second);
            st.used[static_cast<size_t>(cands[c].second)] = 1;
            canon_search(st, child_tight);
            st.used[static_cast<size_t>(cands[c].second)] = 0;
            st.chosen.pop_back();
        }
        st.cur.resize(len0);
    }
}

} // namespace

std::vector<Edge> canonical_form(const Graph& g) {
    if (g.p() > 12) fail(Errc::unsupported, "canonical form limited to p <= 12");
    CanonState st;
    st.g = &g;
    st.used.assign(static_cast<size_t>(g.p()), 0);
    canon_search(st, true);
    std::vector<Edge> out = st.best;
    std::sort(out.begin(), out.end());
    return out;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.p() != b.p() || a.q() != b.q()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.p(); ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.p(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a) == canonical_form(b);
}

Graph path_graph(int p) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < p; ++i) e.emplace_back(i, i + 1);
    return Graph(p, e);
}

Graph cycle_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    if (n >= 3) e.emplace_back(0, n - 1);
    return Graph(n, e);
}

Graph star_graph(int leaves) {
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Graph(leaves + 1, e);
}

Graph bistar_graph(int m, int n) {
    std::vector<Edge> e{{0, 1}};
    int next = 2;
    for (int i = 0; i < m; ++i) e.emplace_back(0, next++);
    for (int j = 0; j < n; ++j) e.emplace_back(1, next++);
    return Graph(next, e);
}

Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph spider_graph(const std::vector<int>& legs) {
    std::vector<Edge> e;
    int next = 1;
    for (int len : legs) {
        int prev = 0;
        for (int s = 0; s < len; ++s) {
            e.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph(next, e);
}

Graph caterpillar_graph(const std::vector<int>& leaf_blocks) {
    int n = static_cast<int>(leaf_blocks.size());
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    int next = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < leaf_blocks[static_cast<size_t>(i)]; ++j) e.emplace_back(i, next++);
    return Graph(next, e);
}

} // namespace topolab
