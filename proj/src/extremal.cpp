#include "topolab/extremal.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "topolab/search.hpp"
#include "topolab/verify.hpp"

namespace topolab {

long long evaluate(const Graph& g, const Labelling& f, const Objective& obj) {
    if (!f.vertices_total()) fail(Errc::missing_labels, "objective needs all vertices labelled");
    auto labels = f.vertex_labels();
    if (!is_injective(labels)) fail(Errc::not_injective, "objective labels must be injective");
    for (int x : labels)
        if (x < 0 || x > g.q()) fail(Errc::out_of_range, "objective labels lie in [0,q]");
    long long sum = 0;
    int m = obj.modulus(g);
    for (auto [u, v] : g.edges()) {
        int a = *f.vertex(u), b = *f.vertex(v);
        sum += obj.tag == ObjectiveTag::difference_sum ? std::abs(a - b) : (a + b) % m;
    }
    return sum;
}

namespace {

void for_each_injection_into(int p, int hi, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> labels(static_cast<size_t>(p));
    std::vector<char> used(static_cast<size_t>(hi + 1), 0);
    std::function<void(int)> rec = [&](int v) {
        if (v == p) {
            fn(labels);
            return;
        }
        for (int x = 0; x <= hi; ++x) {
            if (used[static_cast<size_t>(x)]) continue;
            used[static_cast<size_t>(x)] = 1;
            labels[static_cast<size_t>(v)] = x;
            rec(v + 1);
            used[static_cast<size_t>(x)] = 0;
        }
    };
    if (p == 0) {
        fn(labels);
        return;
    }
    rec(0);
}

long long value_of(const Graph& g, const std::vector<int>& labels, const Objective& obj) {
    long long sum = 0;
    int m = g.q() + 1;
    for (auto [u, v] : g.edges()) {
        int a = labels[static_cast<size_t>(u)], b = labels[static_cast<size_t>(v)];
        sum += obj.tag == ObjectiveTag::difference_sum ? std::abs(a - b) : (a + b) % m;
    }
    return sum;
}

long long injection_count(int p, int hi) {
    long long out = 1;
    for (int i = 0; i < p; ++i) out *= (hi + 1 - i);
    return out;
}

} // namespace

ExtremalResult brute_force_extremal(const Graph& g, const Objective& obj, Direction dir) {
    if (g.p() > g.q() + 1)
        fail(Errc::not_injective, "no injective labelling of p vertices into [0,q] exists");
    if (injection_count(g.p(), g.q()) > 600'000'000LL)
        fail(Errc::budget_exceeded, "brute-force extremal domain too large");
    ExtremalResult best;
    bool have = false;
    for_each_injection_into(g.p(), g.q(), [&](const std::vector<int>& labels) {
        long long v = value_of(g, labels, obj);
        bool better = !have || (dir == Direction::min ? v < best.value : v > best.value);
        if (better) {
            best.value = v;
            best.labelling = vertex_labelling(g, labels);
            have = true;
        }
    });
    best.method = ExtremalResult::Method::brute;
    best.optimal = true;
    return best;
}

std::vector<Labelling> brute_force_argset(const Graph& g, const Objective& obj, Direction dir) {
    long long target = brute_force_extremal(g, obj, dir).value;
    std::vector<Labelling> out;
    for_each_injection_into(g.p(), g.q(), [&](const std::vector<int>& labels) {
        if (value_of(g, labels, obj) == target) out.push_back(vertex_labelling(g, labels));
    });
    return out;
}

long long closed_form(const Family& family, Direction dir) {
    switch (family.tag) {
    case Family::Tag::complete: {
        int n = family.param;
        if (n < 2) fail(Errc::unknown_family, "complete family needs n >= 2");
        long long sum = 0;
        for (int i = 1; i <= n - 1; ++i) sum += static_cast<long long>(n - i + 1) * (n - i);
        return sum / 2; // min == max on complete graphs
    }
    case Family::Tag::path: {
        int p = family.param;
        if (p < 2) fail(Errc::unknown_family, "path family needs p >= 2");
        if (dir == Direction::min) return p - 1;
        fail(Errc::unknown_family, "no closed form recorded for max over paths");
    }
    case Family::Tag::star: {
        int p = family.param;
        if (p < 2) fail(Errc::unknown_family, "star family needs p >= 2");
        if (dir == Direction::min) return static_cast<long long>(p) * p / 4;
        fail(Errc::unknown_family, "no closed form recorded for max over stars");
    }
    }
    fail(Errc::unknown_family, "unknown family");
}

namespace {

// Neighbor fan of v evaluated as if v carried as_label; the swap partner is
// excluded, since the edge between a swapped pair keeps its difference and the
// displayed sums degenerate on it.
long long neighbor_cost(const Graph& g, const std::vector<int>& labels, int v, int as_label,
                        int exclude) {
    long long s = 0;
    for (int w : g.neighbors(v))
        if (w != exclude) s += std::abs(as_label - labels[static_cast<size_t>(w)]);
    return s;
}

} // namespace

ExtremalResult local_search_extremal(const Graph& g, const Objective& obj, Direction dir,
                                     int restarts, unsigned seed) {
    std::mt19937 rng(seed);
    int p = g.p(), q = g.q();
    ExtremalResult best;
    bool have = false;
    for (int r = 0; r < std::max(1, restarts); ++r) {
        // Image set: [0,p-1] on the first restart; felicitous restarts may
        // shift the image inside [0,q] since translation changes that sum.
        std::vector<int> image(static_cast<size_t>(p));
        std::iota(image.begin(), image.end(), 0);
        if (r > 0 && obj.tag == ObjectiveTag::felicitous_sum && q + 1 > p) {
            std::vector<int> pool(static_cast<size_t>(q + 1));
            std::iota(pool.begin(), pool.end(), 0);
            std::shuffle(pool.begin(), pool.end(), rng);
            image.assign(pool.begin(), pool.begin() + p);
            std::sort(image.begin(), image.end());
        }
        std::vector<int> labels = image;
        if (r > 0) std::shuffle(labels.begin(), labels.end(), rng);

        // First improving swap in lexicographic pair order, to a fixpoint.
        bool moved = true;
        while (moved) {
            moved = false;
            long long cur = value_of(g, labels, obj);
            for (int x = 0; x < p && !moved; ++x)
                for (int y = x + 1; y < p && !moved; ++y) {
                    long long lhs1 = neighbor_cost(g, labels, x, labels[static_cast<size_t>(y)], y);
                    long long rhs1 = neighbor_cost(g, labels, x, labels[static_cast<size_t>(x)], y);
                    long long lhs2 = neighbor_cost(g, labels, y, labels[static_cast<size_t>(x)], x);
                    long long rhs2 = neighbor_cost(g, labels, y, labels[static_cast<size_t>(y)], x);
                    bool rule = dir == Direction::max ? (lhs1 >= rhs1 && lhs2 >= rhs2)
                                                      : (lhs1 <= rhs1 && lhs2 <= rhs2);
                    if (!rule) continue;
                    std::swap(labels[static_cast<size_t>(x)], labels[static_cast<size_t>(y)]);
                    long long next = value_of(g, labels, obj);
                    bool improves = dir == Direction::max ? next > cur : next < cur;
                    if (improves) {
                        moved = true;
                    } else {
                        std::swap(labels[static_cast<size_t>(x)], labels[static_cast<size_t>(y)]);
                    }
                }
        }
        long long v = value_of(g, labels, obj);
        bool better = !have || (dir == Direction::min ? v < best.value : v > best.value);
        if (!better && have && v == best.value) {
            // deterministic merge: keep the lexicographically least labelling
            better = labels < best.labelling.vertex_labels();
        }
        if (better) {
            best.value = v;
            best.labelling = vertex_labelling(g, labels);
            have = true;
        }
    }
    best.method = ExtremalResult::Method::local_search;
    best.optimal = false;
    if (injection_count(p, q) <= 2'000'000LL) {
        auto oracle = brute_force_extremal(g, obj, dir);
        best.optimal = oracle.value == best.value;
    }
    return best;
}

ExtremalResult caterpillar_min_sum(const Graph& t) {
    auto shape = classify_tree(t);
    if (shape.tag != TreeTag::path && shape.tag != TreeTag::star && shape.tag != TreeTag::bi_star &&
        shape.tag != TreeTag::caterpillar)
        fail(Errc::not_caterpillar, "exact minimum is stated for caterpillars");
    if (t.p() == 1) {
        Labelling f(t);
        f.set_vertex(0, 0);
        return {0, f, ExtremalResult::Method::caterpillar_exact, true};
    }

    // Consecutive label blocks along the spine; within each block the spine
    // vertex takes the position minimizing its leaf fan, with the end blocks
    // also accounting for the single spine edge that leaves them.
    struct Block {
        int spine_vertex;
        std::vector<int> leaves;
        int base = 0;
    };
    std::vector<Block> blocks;
    {
        std::set<int> on_spine(shape.spine.begin(), shape.spine.end());
        for (int u : shape.spine) {
            Block b;
            b.spine_vertex = u;
            for (int w : t.neighbors(u))
                if (!on_spine.count(w)) b.leaves.push_back(w);
            std::sort(b.leaves.begin(), b.leaves.end());
            blocks.push_back(b);
        }
    }
    int n = static_cast<int>(blocks.size());
    int base = 0;
    for (auto& b : blocks) {
        b.base = base;
        base += static_cast<int>(b.leaves.size()) + 1;
    }
    auto leafcost = [](int m, int pos) {
        long long s = 0;
        for (int k = 0; k <= m; ++k) s += std::abs(k - pos);
        return s; // pos term contributes 0
    };
    Labelling f(t);
    long long total = 0;
    for (int i = 0; i < n; ++i) {
        int m = static_cast<int>(blocks[static_cast<size_t>(i)].leaves.size());
        long long best = -1;
        int best_pos = 0;
        for (int pos = 0; pos <= m; ++pos) {
            long long c = leafcost(m, pos);
            if (n >= 2 && i == 0) c -= pos;
            if (n >= 2 && i == n - 1) c += pos;
            if (best < 0 || c < best) {
                best = c;
                best_pos = pos;
            }
        }
        // Assign labels: spine vertex takes base+best_pos, leaves the rest.
        const auto& b = blocks[static_cast<size_t>(i)];
        f.set_vertex(b.spine_vertex, b.base + best_pos);
        int next = 0;
        for (int leaf : b.leaves) {
            if (next == best_pos) ++next;
            f.set_vertex(leaf, b.base + next);
            ++next;
        }
    }
    f = induce_edge_labels(t, f, EdgeRule::difference());
    total = evaluate(t, f, Objective::difference_sum());
    return {total, f, ExtremalResult::Method::caterpillar_exact, true};
}

BandParameters coloring_band_parameters(const Graph& g, const std::vector<int>& coloring) {
    if (static_cast<int>(coloring.size()) != g.p())
        fail(Errc::improper_coloring, "coloring must assign every vertex");
    for (auto [u, v] : g.edges())
        if (coloring[static_cast<size_t>(u)] == coloring[static_cast<size_t>(v)])
            fail(Errc::improper_coloring, "adjacent vertices share a color");
    std::set<int> used(coloring.begin(), coloring.end());
    if (g.p() <= 10) {
        auto params = chromatic_parameters(g, SearchBudget::desk());
        if (static_cast<int>(used.size()) != params.chi)
            fail(Errc::improper_coloring, "coloring must use exactly chi(G) colors");
    }
    BandParameters out;
    for (auto [u, v] : g.edges()) {
        out.b_sub += std::abs(coloring[static_cast<size_t>(u)] - coloring[static_cast<size_t>(v)]);
        out.b_sum += coloring[static_cast<size_t>(u)] + coloring[static_cast<size_t>(v)];
    }
    return out;
}

} // namespace topolab
