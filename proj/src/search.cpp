#include "topolab/search.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <future>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace topolab {

namespace {

long long falling_factorial(int n, int k) {
    long long out = 1;
    for (int i = 0; i < k; ++i) {
        out *= (n - i);
        if (out > (1LL << 62) / 4) return 1LL << 62;
    }
    return out;
}

long long int_pow(long long b, int e) {
    long long out = 1;
    for (int i = 0; i < e; ++i) {
        out *= b;
        if (out > (1LL << 62) / 4) return 1LL << 62;
    }
    return out;
}

// Enumerates injective assignments labels[0..p) from [lo,hi] in lexicographic
// order. `fixed_first` pins labels[0] (used to parallelize by first label).
void for_each_injection(int p, int lo, int hi, std::optional<int> fixed_first,
                        const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> labels(static_cast<size_t>(p));
    std::vector<char> used(static_cast<size_t>(hi - lo + 1), 0);
    std::function<void(int)> rec = [&](int v) {
        if (v == p) {
            fn(labels);
            return;
        }
        int from = lo, to = hi;
        if (v == 0 && fixed_first) from = to = *fixed_first;
        for (int x = from; x <= to; ++x) {
            if (used[static_cast<size_t>(x - lo)]) continue;
            used[static_cast<size_t>(x - lo)] = 1;
            labels[static_cast<size_t>(v)] = x;
            rec(v + 1);
            used[static_cast<size_t>(x - lo)] = 0;
        }
    };
    if (p == 0) {
        fn(labels);
        return;
    }
    rec(0);
}

void for_each_function(int p, int lo, int hi,
                       const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> labels(static_cast<size_t>(p), lo);
    if (p == 0) {
        fn(labels);
        return;
    }
    while (true) {
        fn(labels);
        int i = p - 1;
        while (i >= 0 && labels[static_cast<size_t>(i)] == hi) {
            labels[static_cast<size_t>(i)] = lo;
            --i;
        }
        if (i < 0) break;
        ++labels[static_cast<size_t>(i)];
    }
}

struct KindDomain {
    enum class Shape { vertex_injection, vertex_function, total_bijection, pair_product } shape;
    int lo = 0, hi = 0; // vertex label range for injection/function shapes
    std::vector<int> edge_values; // pair_product: the prescribed edge value set
};

KindDomain kind_domain(const Graph& g, const LabellingKind& kind) {
    int p = g.p(), q = g.q();
    (void)p;
    switch (kind.tag) {
    case Kind::graceful:
    case Kind::set_ordered_graceful:
    case Kind::felicitous:
        return {KindDomain::Shape::vertex_injection, 0, q, {}};
    case Kind::odd_graceful:
    case Kind::set_ordered_odd_graceful:
    case Kind::odd_elegant:
    case Kind::set_ordered_odd_elegant:
        return {KindDomain::Shape::vertex_injection, 0, 2 * q - 1, {}};
    case Kind::pan_odd_graceful:
        return {KindDomain::Shape::vertex_injection, 0, 2 * q, {}};
    case Kind::tog:
    case Kind::two_odd_two:
        return {KindDomain::Shape::vertex_injection, 0, q, {}};
    case Kind::toe:
    case Kind::sotoe:
        return {KindDomain::Shape::vertex_injection, 0, q - 1, {}};
    case Kind::k_sequential_odd_graceful:
        return {KindDomain::Shape::vertex_injection, kind.shift, 2 * q - 1 + kind.shift, {}};
    case Kind::harmonious:
        return {KindDomain::Shape::vertex_function, 0, q - 1, {}};
    case Kind::edge_magic_total:
    case Kind::super_edge_magic_total:
    case Kind::pan_edge_magic_total:
    case Kind::edge_antimagic_total:
    case Kind::edge_magic_graceful:
    case Kind::super_edge_magic_graceful:
    case Kind::relaxed_emt:
    case Kind::six_c:
    case Kind::odd_even_separable_six_c:
    case Kind::ve_exchanged_of:
        return {KindDomain::Shape::total_bijection, 1, g.p() + q, {}};
    case Kind::oemm:
    case Kind::eedoemm: {
        std::vector<int> ev;
        for (int t = 1; t <= 2 * q - 1; t += 2) ev.push_back(t);
        return {KindDomain::Shape::pair_product, 0, 2 * q - 1, ev};
    }
    case Kind::dgemm: {
        std::vector<int> ev;
        for (int t = 1; t <= q; ++t) ev.push_back(t);
        return {KindDomain::Shape::pair_product, 0, g.p() - 1, ev};
    }
    }
    fail(Errc::internal, "kind_domain");
}

} // namespace

long long domain_size(const Graph& g, const LabellingKind& kind) {
    auto dom = kind_domain(g, kind);
    int p = g.p(), q = g.q();
    switch (dom.shape) {
    case KindDomain::Shape::vertex_injection:
        return falling_factorial(dom.hi - dom.lo + 1, p);
    case KindDomain::Shape::vertex_function:
        return int_pow(dom.hi - dom.lo + 1, p);
    case KindDomain::Shape::total_bijection:
        return falling_factorial(p + q, p + q);
    case KindDomain::Shape::pair_product:
        return falling_factorial(dom.hi - dom.lo + 1, p) * falling_factorial(q, q);
    }
    return 0;
}

namespace {

void enforce_budget(const Graph& g, const SearchBudget& budget, long long candidates) {
    if (g.p() > budget.max_vertices)
        fail(Errc::budget_exceeded, "graph has more vertices than the budget allows");
    if (g.q() > budget.max_edges)
        fail(Errc::budget_exceeded, "graph has more edges than the budget allows");
    if (candidates > budget.max_candidates)
        fail(Errc::budget_exceeded, "candidate space exceeds max_candidates (" +
                                        std::to_string(candidates) + ")");
}

struct Deadline {
    std::chrono::steady_clock::time_point end;
    explicit Deadline(double seconds)
        : end(std::chrono::steady_clock::now() +
              std::chrono::microseconds(static_cast<long long>(seconds * 1e6))) {}
    bool expired() const { return std::chrono::steady_clock::now() > end; }
};

std::vector<Labelling> enumerate_block(const Graph& g, const LabellingKind& kind,
                                       std::optional<int> fixed_first, const Deadline& deadline) {
    std::vector<Labelling> out;
    auto dom = kind_domain(g, kind);
    int p = g.p(), q = g.q();
    long long visited = 0;
    auto tick = [&] {
        if ((++visited & 0xFFFF) == 0 && deadline.expired())
            fail(Errc::budget_exceeded, "time limit exceeded during enumeration");
    };

    switch (dom.shape) {
    case KindDomain::Shape::vertex_injection:
    case KindDomain::Shape::vertex_function: {
        auto body = [&](const std::vector<int>& vl) {
            tick();
            Labelling f = vertex_labelling(g, vl);
            // Materialize induced edge labels for the rule-based kinds.
            switch (kind.tag) {
            case Kind::graceful:
            case Kind::set_ordered_graceful:
            case Kind::odd_graceful:
            case Kind::set_ordered_odd_graceful:
            case Kind::k_sequential_odd_graceful:
                f = induce_edge_labels(g, f, EdgeRule::difference());
                break;
            case Kind::odd_elegant:
            case Kind::set_ordered_odd_elegant:
                f = induce_edge_labels(g, f, EdgeRule::mod_sum(2 * q));
                break;
            case Kind::felicitous:
            case Kind::harmonious:
                f = induce_edge_labels(g, f, EdgeRule::mod_sum(q));
                break;
            default:
                break;
            }
            if (verify_accepts(g, f, kind)) out.push_back(std::move(f));
        };
        if (dom.shape == KindDomain::Shape::vertex_injection)
            for_each_injection(p, dom.lo, dom.hi, fixed_first, body);
        else
            for_each_function(p, dom.lo, dom.hi, body);
        break;
    }
    case KindDomain::Shape::total_bijection: {
        std::vector<int> values;
        if (fixed_first) {
            values.push_back(*fixed_first);
            for (int x = 1; x <= p + q; ++x)
                if (x != *fixed_first) values.push_back(x);
        } else {
            values.resize(static_cast<size_t>(p + q));
            std::iota(values.begin(), values.end(), 1);
        }
        auto tail = values.begin() + (fixed_first ? 1 : 0);
        Labelling f(g);
        do {
            tick();
            for (int v = 0; v < p; ++v) f.set_vertex(v, values[static_cast<size_t>(v)]);
            for (int e = 0; e < q; ++e) f.set_edge(e, values[static_cast<size_t>(p + e)]);
            if (verify_accepts(g, f, kind)) out.push_back(f);
        } while (std::next_permutation(tail, values.end()));
        break;
    }
    case KindDomain::Shape::pair_product: {
        std::vector<int> base = dom.edge_values;
        for_each_injection(p, dom.lo, dom.hi, fixed_first, [&](const std::vector<int>& vl) {
            Labelling f = vertex_labelling(g, vl);
            std::vector<int> ev = base;
            do {
                tick();
                for (int e = 0; e < q; ++e) f.set_edge(e, ev[static_cast<size_t>(e)]);
                if (verify_accepts(g, f, kind)) out.push_back(f);
            } while (std::next_permutation(ev.begin(), ev.end()));
        });
        break;
    }
    }
    return out;
}

} // namespace

std::vector<Labelling> enumerate_labellings(const Graph& g, const LabellingKind& kind,
                                            const SearchBudget& budget, int jobs) {
    enforce_budget(g, budget, domain_size(g, kind));
    Deadline deadline(budget.time_limit_seconds);
    auto dom = kind_domain(g, kind);
    bool parallelizable = jobs > 1 && dom.shape != KindDomain::Shape::vertex_function && g.p() > 0;
    if (!parallelizable) return enumerate_block(g, kind, std::nullopt, deadline);

    // Split on the first slot's value; blocks are disjoint and merge in label
    // order, so output is schedule independent.
    int lo = dom.lo, hi = dom.hi;
    std::vector<std::future<std::vector<Labelling>>> futures;
    for (int first = lo; first <= hi; ++first)
        futures.push_back(std::async(std::launch::async, [&, first] {
            return enumerate_block(g, kind, first, deadline);
        }));
    std::vector<Labelling> out;
    for (auto& fu : futures) {
        auto block = fu.get();
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

const char* partition_kind_name(PartitionKind k) {
    switch (k) {
    case PartitionKind::relaxed_emt_partition: return "relaxed-emt";
    case PartitionKind::oemm_partition: return "oemm";
    case PartitionKind::eedoemm_partition: return "eedoemm";
    case PartitionKind::six_c_partition: return "six-c";
    case PartitionKind::six_c_complementary: return "six-c-complementary";
    case PartitionKind::dgemm_partition: return "dgemm";
    case PartitionKind::emg_partition: return "emg";
    case PartitionKind::ve_exchanged_partition: return "ve-exchanged";
    case PartitionKind::vset_graceful_partition: return "v-set-graceful";
    case PartitionKind::twin_og_partition: return "twin-odd-graceful";
    case PartitionKind::twin_oe_partition: return "twin-odd-elegant";
    case PartitionKind::graph_matching_partition: return "graph-matching";
    }
    return "?";
}

std::optional<PartitionKind> partition_kind_from_name(const std::string& s) {
    for (int i = 0; i <= static_cast<int>(PartitionKind::graph_matching_partition); ++i) {
        auto k = static_cast<PartitionKind>(i);
        if (s == partition_kind_name(k)) return k;
    }
    return std::nullopt;
}

namespace {

void for_each_subset(const std::vector<int>& ground, int size,
                     const std::function<void(const std::vector<int>&)>& fn) {
    int n = static_cast<int>(ground.size());
    if (size > n || size < 0) return;
    std::vector<int> idx(static_cast<size_t>(size));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::vector<int> subset;
        for (int i : idx) subset.push_back(ground[static_cast<size_t>(i)]);
        fn(subset);
        int i = size - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - size + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < size; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

std::vector<int> complement_of(const std::vector<int>& ground, const std::vector<int>& sub) {
    std::set<int> s(sub.begin(), sub.end());
    std::vector<int> out;
    for (int x : ground)
        if (!s.count(x)) out.push_back(x);
    return out;
}

std::vector<int> interval_vec(int lo, int hi, int step = 1) {
    std::vector<int> out;
    for (int x = lo; x <= hi; x += step) out.push_back(x);
    return out;
}

// All (a, b) pairs of distinct V-elements with |a-b| == c, lexicographic.
std::vector<std::pair<int, int>> difference_witnesses(const std::vector<int>& V, int c) {
    std::vector<std::pair<int, int>> out;
    for (int a : V)
        for (int b : V)
            if (a != b && std::abs(a - b) == c && a < b) out.emplace_back(a, b);
    return out;
}

std::optional<int> common_sum_constant(const std::vector<int>& V, const std::vector<int>& E) {
    // smallest k with: every c in E has distinct a,b in V with a+b+c == k
    std::set<int> candidates;
    for (size_t i = 0; i < V.size(); ++i)
        for (size_t j = i + 1; j < V.size(); ++j)
            if (!E.empty()) candidates.insert(V[i] + V[j] + E.front());
    for (int k : candidates) {
        bool ok = true;
        for (int c : E) {
            bool found = false;
            for (size_t i = 0; i < V.size() && !found; ++i)
                for (size_t j = i + 1; j < V.size() && !found; ++j)
                    if (V[i] + V[j] + c == k) found = true;
            if (!found) {
                ok = false;
                break;
            }
        }
        if (ok) return k;
    }
    return std::nullopt;
}

void fill_ev_witnesses(PartitionSolution& sol, int k_for_sum) {
    sol.ev.clear();
    for (int c : sol.E) {
        bool placed = false;
        for (size_t i = 0; i < sol.V.size() && !placed; ++i)
            for (size_t j = i + 1; j < sol.V.size() && !placed; ++j)
                if (sol.V[i] + sol.V[j] + c == k_for_sum) {
                    sol.ev.push_back({sol.V[i], c, sol.V[j]});
                    placed = true;
                }
        if (!placed) sol.ev.push_back({-1, c, -1});
    }
}

bool all_differences_realizable(const std::vector<int>& V, const std::vector<int>& E) {
    for (int c : E)
        if (difference_witnesses(V, c).empty()) return false;
    return true;
}

// Backtracks over one (a,b) witness per E element, then tests the clause set.
bool witness_assignment_exists(
    const std::vector<int>& V, const std::vector<int>& E,
    const std::function<bool(const std::vector<std::pair<int, int>>&)>& accept,
    std::vector<std::pair<int, int>>* found = nullptr) {
    std::vector<std::vector<std::pair<int, int>>> options;
    for (int c : E) {
        options.push_back(difference_witnesses(V, c));
        if (options.back().empty()) return false;
    }
    std::vector<std::pair<int, int>> pick(E.size());
    std::function<bool(size_t)> rec = [&](size_t i) -> bool {
        if (i == E.size()) {
            if (accept(pick)) {
                if (found) *found = pick;
                return true;
            }
            return false;
        }
        for (auto& w : options[i]) {
            pick[i] = w;
            if (rec(i + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

} // namespace

std::vector<PartitionSolution> solve_set_partition(const SetPartitionProblem& prob,
                                                   const SearchBudget& budget) {
    const int p = prob.p, q = prob.q;
    if (p + q > 24) fail(Errc::budget_exceeded, "ground set too large for complete enumeration");
    Deadline deadline(budget.time_limit_seconds);
    std::vector<PartitionSolution> out;
    auto guard = [&] {
        if (deadline.expired()) fail(Errc::budget_exceeded, "time limit exceeded");
    };

    switch (prob.kind) {
    case PartitionKind::relaxed_emt_partition: {
        auto ground = interval_vec(1, p + q);
        for_each_subset(ground, p, [&](const std::vector<int>& V) {
            guard();
            auto E = complement_of(ground, V);
            if (!all_differences_realizable(V, E)) return;
            auto k = common_sum_constant(V, E);
            if (!k) return;
            PartitionSolution sol;
            sol.V = V;
            sol.E = E;
            sol.constants["k"] = *k;
            fill_ev_witnesses(sol, *k);
            out.push_back(std::move(sol));
        });
        break;
    }
    case PartitionKind::oemm_partition: {
        auto E = interval_vec(1, 2 * p - 1, 2);
        if (E.empty() || E.back() > 2 * q - 1) break; // infeasible sizes
        auto ground = interval_vec(1, 2 * q - 1);
        for_each_subset(ground, p, [&](const std::vector<int>& V) {
            guard();
            auto k = common_sum_constant(V, E);
            if (!k) return;
            PartitionSolution sol;
            sol.V = V;
            sol.E = E;
            sol.constants["k"] = *k;
            fill_ev_witnesses(sol, *k);
            out.push_back(std::move(sol));
        });
        break;
    }
    case PartitionKind::eedoemm_partition: {
        auto E = interval_vec(1, 2 * p - 1, 2);
        if (E.empty() || E.back() > 2 * q - 1) break;
        auto ground = interval_vec(1, 2 * q - 1);
        for_each_subset(ground, p, [&](const std::vector<int>& V) {
            guard();
            std::vector<std::pair<int, int>> found;
            auto accept = [&](const std::vector<std::pair<int, int>>& pick) {
                // (ii) every c appears among the witness differences
                std::multiset<int> diffs;
                for (auto& [a, b] : pick) diffs.insert(std::abs(a - b));
                for (int c : E)
                    if (!diffs.count(c)) return false;
                // (iii) s-values pair to zero
                std::vector<int> s;
                for (size_t i = 0; i < E.size(); ++i)
                    s.push_back(std::abs(pick[i].first - pick[i].second) - E[i]);
                auto ks = pair_sum_constants(s);
                return std::find(ks.begin(), ks.end(), 0) != ks.end();
            };
            if (!witness_assignment_exists(V, E, accept, &found)) return;
            PartitionSolution sol;
            sol.V = V;
            sol.E = E;
            for (size_t i = 0; i < E.size(); ++i)
                sol.ev.push_back({found[i].first, E[i], found[i].second});
            out.push_back(std::move(sol));
        });
        break;
    }
    case PartitionKind::six_c_partition: {
        auto ground = interval_vec(1, p + q);
        for_each_subset(ground, p, [&](const std::vector<int>& V) {
            guard();
            auto E = complement_of(ground, V);
            if (V.empty() || E.empty()) return;
            bool ev_lt = V.back() < E.front();
            bool ev_gt = V.front() > E.back();
            if (!ev_lt && !ev_gt) return; // (EV-ordered)
            auto vem = ve_matching_constants(V, E);
            std::optional<VeMatchingResult> vm;
            for (auto& c : vem)
                if (!c.singular_value || *c.singular_value == (p + q + 1) / 2) {
                    vm = c;
                    break;
                }
            if (!vm) return;
            std::vector<std::pair<int, int>> found;
            auto accept = [&](const std::vector<std::pair<int, int>>& pick) {
                std::optional<int> k;
                for (size_t i = 0; i < E.size(); ++i) {
                    int s = E[i] + std::abs(pick[i].first - pick[i].second);
                    if (!k) k = s;
                    else if (*k != s) return false;
                }
                std::multiset<int> diffs;
                for (auto& [a, b] : pick) diffs.insert(std::abs(a - b));
                for (int c : E)
                    if (!diffs.count(c)) return false;
                std::vector<int> s;
                for (size_t i = 0; i < E.size(); ++i)
                    s.push_back(std::abs(pick[i].first - pick[i].second) - E[i]);
                auto ks = pair_sum_constants(s);
                return std::find(ks.begin(), ks.end(), 0) != ks.end();
            };
            if (!witness_assignment_exists(V, E, accept, &found)) return;
            PartitionSolution sol;
            sol.V = V;
            sol.E = E;
            sol.constants["k"] = E.front() + std::abs(found[0].first - found[0].second);
            sol.constants["k''"] = vm->k_dprime;
            if (vm->singular_value) sol.constants["singularity"] = *vm->singular_value;
            for (size_t i = 0; i < E.size(); ++i)
                sol.ev.push_back({found[i].first, E[i], found[i].second});
            out.push_back(std::move(sol));
        });
        break;
    }
    case PartitionKind::six_c_complementary: {
        SetPartitionProblem base{PartitionKind::six_c_partition, p, q};
        auto sols = solve_set_partition(base, budget);
        int a0 = (p + q + 1) / 2;
        for (size_t i = 0; i < sols.size(); ++i)
            for (size_t j = 0; j < sols.size(); ++j) {
                if (i == j) continue;
                const auto& A = sols[i];
                const auto& B = sols[j];
                std::set<int> VA(A.V.begin(), A.V.end()), VB(B.V.begin(), B.V.end());
                std::vector<int> inter;
                std::set_intersection(VA.begin(), VA.end(), VB.begin(), VB.end(),
                                      std::back_inserter(inter));
                if (inter != std::vector<int>{a0}) continue;
                std::set<int> va_minus = VA;
                va_minus.erase(a0);
                std::set<int> vb_minus = VB;
                vb_minus.erase(a0);
                if (std::set<int>(B.E.begin(), B.E.end()) != va_minus) continue;
                if (std::set<int>(A.E.begin(), A.E.end()) != vb_minus) continue;
                PartitionSolution sol;
                sol.V = A.V;
                sol.E = A.E;
                sol.constants["pair_index"] = static_cast<int>(j);
                sol.constants["singularity"] = a0;
                out.push_back(std::move(sol));
            }
        break;
    }
    case PartitionKind::dgemm_partition: {
        // V is forced to [0,p-1] and E to [1,q]; the freedom is in witnesses.
        auto V = interval_vec(0, p - 1);
        auto E = interval_vec(1, q);
        std::vector<std::pair<int, int>> found;
        int p_const = p;
        auto accept_with = [&](bool per_edge_reading) {
            return [&, per_edge_reading](const std::vector<std::pair<int, int>>& pick) {
                std::optional<int> k;
                for (size_t i = 0; i < E.size(); ++i) {
                    int s = std::abs(pick[i].first - pick[i].second) + E[i];
                    if (!k) k = s;
                    else if (*k != s) return false;
                }
                std::multiset<int> diffs;
                for (auto& [a, b] : pick) diffs.insert(std::abs(a - b));
                for (int c : E)
                    if (!diffs.count(c)) return false;
                std::vector<int> s;
                for (size_t i = 0; i < E.size(); ++i)
                    s.push_back(std::abs(pick[i].first - pick[i].second) - E[i]);
                auto ks = pair_sum_constants(s);
                if (std::find(ks.begin(), ks.end(), 0) == ks.end()) return false;
                // (v) c + a' = p or c + b' = p, per edge or globally paired
                if (per_edge_reading) {
                    for (size_t i = 0; i < E.size(); ++i) {
                        bool ok = false;
                        for (size_t j = 0; j < E.size(); ++j)
                            if (E[i] + pick[j].first == p_const || E[i] + pick[j].second == p_const)
                                ok = true;
                        if (!ok) return false;
                    }
                    return true;
                }
                // global reading: a bijection between E and witness-vertices
                std::multiset<int> need;
                for (int c : E) need.insert(p_const - c);
                std::multiset<int> have;
                for (auto& [a, b] : pick) {
                    have.insert(a);
                    have.insert(b);
                }
                for (int x : need)
                    if (!have.count(x)) return false;
                return true;
            };
        };
        for (bool per_edge : {true, false}) {
            guard();
            if (witness_assignment_exists(V, E, accept_with(per_edge), &found)) {
                PartitionSolution sol;
                sol.V = V;
                sol.E = E;
                sol.constants["per_edge_reading"] = per_edge ? 1 : 0;
                for (size_t i = 0; i < E.size(); ++i)
                    sol.ev.push_back({found[i].first, E[i], found[i].second});
                out.push_back(std::move(sol));
            }
        }
        break;
    }
    case PartitionKind::emg_partition:
    case PartitionKind::ve_exchanged_partition: {
        auto ground = interval_vec(1, p + q);
        auto emg_ok = [&](const std::vector<int>& V, const std::vector<int>& E,
                          std::vector<std::pair<int, int>>* witnesses) -> std::optional<int> {
            std::set<int> candidates;
            for (size_t i = 0; i < V.size(); ++i)
                for (size_t j = i + 1; j < V.size(); ++j)
                    if (!E.empty()) candidates.insert(V[i] + V[j] + E.front());
            for (int k : candidates) {
                std::vector<std::pair<int, int>> pick;
                bool ok = true;
                for (int c : E) {
                    bool found = false;
                    for (size_t i = 0; i < V.size() && !found; ++i)
                        for (size_t j = i + 1; j < V.size() && !found; ++j)
                            if (std::abs(V[i] - V[j]) == c && V[i] + V[j] + c == k) {
                                pick.emplace_back(V[i], V[j]);
                                found = true;
                            }
                    if (!found) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    if (witnesses) *witnesses = pick;
                    return k;
                }
            }
            return std::nullopt;
        };
        for_each_subset(ground, p, [&](const std::vector<int>& V) {
            guard();
            auto E = complement_of(ground, V);
            std::vector<std::pair<int, int>> w;
            auto k = emg_ok(V, E, &w);
            if (!k) return;
            if (prob.kind == PartitionKind::ve_exchanged_partition) {
                auto k2 = emg_ok(E, V, nullptr);
                if (!k2) return;
            }
            PartitionSolution sol;
            sol.V = V;
            sol.E = E;
            sol.constants["k"] = *k;
            for (size_t i = 0; i < E.size(); ++i)
                sol.ev.push_back({w[i].first, E[i], w[i].second});
            out.push_back(std::move(sol));
        });
        break;
    }
    case PartitionKind::vset_graceful_partition: {
        // p pairwise-disjoint nonempty subsets of [0,q]; E = [1,q].
        int ground_n = q + 1;
        long long total = int_pow(p + 1, ground_n);
        if (total > budget.max_candidates) fail(Errc::budget_exceeded, "v-set space too large");
        auto E = interval_vec(1, q);
        std::vector<int> owner(static_cast<size_t>(ground_n), 0); // 0 = unused, 1..p = part
        std::function<void(int)> rec = [&](int x) {
            if (x == ground_n) {
                std::vector<std::vector<int>> parts(static_cast<size_t>(p));
                for (int y = 0; y < ground_n; ++y)
                    if (owner[static_cast<size_t>(y)] > 0)
                        parts[static_cast<size_t>(owner[static_cast<size_t>(y)] - 1)].push_back(y);
                for (auto& part : parts)
                    if (part.empty()) return;
                for (int c : E) {
                    bool found = false;
                    for (size_t i = 0; i < parts.size() && !found; ++i)
                        for (size_t j = 0; j < parts.size() && !found; ++j) {
                            if (i == j) continue;
                            for (int a : parts[i])
                                for (int b : parts[j])
                                    if (std::abs(a - b) == c) found = true;
                        }
                    if (!found) return;
                }
                PartitionSolution sol;
                sol.E = E;
                for (size_t i = 0; i < parts.size(); ++i)
                    for (int a : parts[i]) {
                        sol.V.push_back(a);
                        sol.constants["part_of_" + std::to_string(a)] = static_cast<int>(i) + 1;
                    }
                out.push_back(std::move(sol));
                return;
            }
            for (int o = 0; o <= p; ++o) {
                owner[static_cast<size_t>(x)] = o;
                rec(x + 1);
            }
            owner[static_cast<size_t>(x)] = 0;
        };
        guard();
        rec(0);
        break;
    }
    case PartitionKind::twin_og_partition:
    case PartitionKind::twin_oe_partition: {
        bool elegant = prob.kind == PartitionKind::twin_oe_partition;
        auto Eodd = interval_vec(1, 2 * q - 1, 2);
        auto realizes = [&](const std::vector<int>& S) {
            for (int c : Eodd) {
                bool found = false;
                for (size_t i = 0; i < S.size() && !found; ++i)
                    for (size_t j = i + 1; j < S.size() && !found; ++j) {
                        int val = elegant ? (S[i] + S[j]) % (2 * q) : std::abs(S[i] - S[j]);
                        if (val == c) found = true;
                    }
                if (!found) return false;
            }
            return true;
        };
        // S1 contains 0 and omits 2q; S2 = complement plus one shared element.
        int n = 2 * q + 1;
        long long space = int_pow(2, n - 2);
        if (space > budget.max_candidates) fail(Errc::budget_exceeded, "twin space too large");
        for (long long mask = 0; mask < space; ++mask) {
            guard();
            std::vector<int> S1{0};
            for (int x = 1; x < n - 1; ++x)
                if (mask & (1LL << (x - 1))) S1.push_back(x);
            std::vector<int> rest = complement_of(interval_vec(0, 2 * q), S1);
            for (int shared : S1) {
                if (shared == 0) continue; // S2 must avoid 0
                std::vector<int> S2 = rest;
                S2.push_back(shared);
                std::sort(S2.begin(), S2.end());
                if (!realizes(S1) || !realizes(S2)) continue;
                PartitionSolution sol;
                sol.V = S1;
                sol.E = S2;
                sol.constants["shared"] = shared;
                out.push_back(std::move(sol));
            }
        }
        break;
    }
    case PartitionKind::graph_matching_partition: {
        auto ground = interval_vec(1, p - 1);
        for_each_subset(ground, q, [&](const std::vector<int>& E) {
            guard();
            PartitionSolution sol;
            sol.V = interval_vec(0, p - 1);
            sol.E = E;
            int sum = 0;
            for (int c : E) {
                auto w = difference_witnesses(sol.V, c);
                sol.ev.push_back({w.front().first, c, w.front().second});
                sum += c;
            }
            sol.constants["difference_sum"] = sum;
            out.push_back(std::move(sol));
        });
        break;
    }
    }
    return out;
}

namespace {

// Proper vertex k-coloring existence by backtracking.
bool vertex_colorable(const Graph& g, int k) {
    std::vector<int> color(static_cast<size_t>(g.p()), 0);
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == g.p()) return true;
        int limit = std::min(k, v + 1); // symmetry: vertex v uses colors <= v+1
        for (int c = 1; c <= limit; ++c) {
            bool ok = true;
            for (int w : g.neighbors(v))
                if (w < v && color[static_cast<size_t>(w)] == c) ok = false;
            if (!ok) continue;
            color[static_cast<size_t>(v)] = c;
            if (rec(v + 1)) return true;
        }
        color[static_cast<size_t>(v)] = 0;
        return false;
    };
    return rec(0);
}

// Total elements: 0..p-1 vertices, p..p+q-1 edges; clash lists precomputed.
std::vector<std::vector<int>> total_clashes(const Graph& g) {
    int p = g.p(), q = g.q();
    std::vector<std::vector<int>> clash(static_cast<size_t>(p + q));
    auto link = [&](int a, int b) {
        clash[static_cast<size_t>(a)].push_back(b);
        clash[static_cast<size_t>(b)].push_back(a);
    };
    for (auto [u, v] : g.edges()) link(u, v);
    for (int e = 0; e < q; ++e) {
        auto [u, v] = g.edge(e);
        link(p + e, u);
        link(p + e, v);
    }
    for (int e = 0; e < q; ++e)
        for (int e2 = e + 1; e2 < q; ++e2) {
            auto [a, b] = g.edge(e);
            auto [c, d] = g.edge(e2);
            if (a == c || a == d || b == c || b == d) link(p + e, p + e2);
        }
    return clash;
}

bool total_colorable(const Graph& g, int k) {
    auto clash = total_clashes(g);
    int n = g.p() + g.q();
    std::vector<int> color(static_cast<size_t>(n), 0);
    std::function<bool(int)> rec = [&](int x) -> bool {
        if (x == n) return true;
        int limit = std::min(k, x + 1);
        for (int c = 1; c <= limit; ++c) {
            bool ok = true;
            for (int y : clash[static_cast<size_t>(x)])
                if (y < x && color[static_cast<size_t>(y)] == c) ok = false;
            if (!ok) continue;
            color[static_cast<size_t>(x)] = c;
            if (rec(x + 1)) return true;
        }
        color[static_cast<size_t>(x)] = 0;
        return false;
    };
    return rec(0);
}

// ve-matching total colorings: vertex colors force edge colors.
bool ve_matching_colorable(const Graph& g, int k, VeFlavor flavor) {
    int p = g.p();
    std::vector<int> color(static_cast<size_t>(p), 0);
    auto edge_color = [&](int cu, int cv) {
        return flavor == VeFlavor::difference ? std::abs(cu - cv) : cu + cv;
    };
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == p) return true;
        for (int c = 1; c <= k; ++c) {
            bool ok = true;
            for (int w : g.neighbors(v)) {
                if (w >= v) continue;
                int cw = color[static_cast<size_t>(w)];
                if (cw == c) { ok = false; break; }
                int ce = edge_color(c, cw);
                if (ce < 1 || ce > k || ce == c || ce == cw) { ok = false; break; }
                // incident edge clash at both endpoints
                for (int x : g.neighbors(w)) {
                    if (x >= v || x == v) continue;
                    int other = edge_color(cw, color[static_cast<size_t>(x)]);
                    if (other == ce) { ok = false; break; }
                }
                if (!ok) break;
                for (int x : g.neighbors(v)) {
                    if (x >= v) continue;
                    int other = edge_color(c, color[static_cast<size_t>(x)]);
                    if (x != w && other == ce) { ok = false; break; }
                }
                if (!ok) break;
            }
            if (!ok) continue;
            color[static_cast<size_t>(v)] = c;
            if (rec(v + 1)) return true;
        }
        color[static_cast<size_t>(v)] = 0;
        return false;
    };
    return rec(0);
}

// Exists proper total coloring into [1,colors] with all edge sums in window.
bool window_total_coloring(const Graph& g, int colors, int lo, int hi) {
    auto clash = total_clashes(g);
    int p = g.p(), q = g.q();
    int n = p + q;
    std::vector<int> color(static_cast<size_t>(n), 0);
    // order: edges after their endpoints, BFS-ish by edge list
    std::vector<int> order;
    {
        std::vector<char> seen(static_cast<size_t>(n), 0);
        for (int e = 0; e < q; ++e) {
            auto [u, v] = g.edge(e);
            for (int x : {u, v})
                if (!seen[static_cast<size_t>(x)]) {
                    order.push_back(x);
                    seen[static_cast<size_t>(x)] = 1;
                }
            order.push_back(p + e);
            seen[static_cast<size_t>(p + e)] = 1;
        }
        for (int v = 0; v < p; ++v)
            if (!seen[static_cast<size_t>(v)]) order.push_back(v);
    }
    std::vector<int> pos(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
    std::function<bool(int)> rec = [&](int idx) -> bool {
        if (idx == n) return true;
        int x = order[static_cast<size_t>(idx)];
        for (int c = 1; c <= colors; ++c) {
            bool ok = true;
            for (int y : clash[static_cast<size_t>(x)])
                if (pos[static_cast<size_t>(y)] < idx && color[static_cast<size_t>(y)] == c)
                    ok = false;
            if (ok && x >= p) {
                auto [u, v] = g.edge(x - p);
                int s = color[static_cast<size_t>(u)] + c + color[static_cast<size_t>(v)];
                if (s < lo || s > hi) ok = false;
            }
            if (!ok) continue;
            color[static_cast<size_t>(x)] = c;
            if (rec(idx + 1)) return true;
        }
        color[static_cast<size_t>(x)] = 0;
        return false;
    };
    return rec(0);
}

} // namespace

int min_b_tol_with_colors(const Graph& g, int colors) {
    if (g.q() == 0) return 0;
    for (int spread = 0; spread <= 3 * colors; ++spread)
        for (int lo = 3; lo + spread <= 3 * colors; ++lo)
            if (window_total_coloring(g, colors, lo, lo + spread)) return spread;
    return -1;
}

ChromaticParameters chromatic_parameters(const Graph& g, const SearchBudget& budget) {
    if (g.p() > budget.max_vertices || g.q() > budget.max_edges)
        fail(Errc::budget_exceeded, "graph too large for chromatic search");
    ChromaticParameters out;
    for (int k = 1; k <= g.p(); ++k)
        if (vertex_colorable(g, k)) {
            out.chi = k;
            break;
        }
    for (int k = std::max(1, g.max_degree() + (g.q() > 0 ? 1 : 0)); k <= g.p() + g.q() + 1; ++k)
        if (total_colorable(g, k)) {
            out.chi_total = k;
            break;
        }
    int cap = g.p() + g.q() + 2;
    for (int k = out.chi_total; k <= cap; ++k)
        if (ve_matching_colorable(g, k, VeFlavor::difference)) {
            out.chi_ved = k;
            break;
        }
    for (int k = out.chi_total; k <= 2 * cap; ++k)
        if (ve_matching_colorable(g, k, VeFlavor::sum)) {
            out.chi_ves = k;
            break;
        }
    out.min_b_tol = min_b_tol_with_colors(g, out.chi_total);
    return out;
}

namespace {

// AHU canonical string, rooting at the tree center(s).
std::string ahu_string(const Graph& g, int root, int parent) {
    std::vector<std::string> children;
    for (int w : g.neighbors(root))
        if (w != parent) children.push_back(ahu_string(g, w, root));
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (auto& c : children) out += c;
    out += ")";
    return out;
}

std::vector<int> tree_centers(const Graph& g) {
    int p = g.p();
    if (p == 1) return {0};
    std::vector<int> deg(static_cast<size_t>(p));
    std::vector<int> layer;
    for (int v = 0; v < p; ++v) {
        deg[static_cast<size_t>(v)] = g.degree(v);
        if (deg[static_cast<size_t>(v)] <= 1) layer.push_back(v);
    }
    int remaining = p;
    while (remaining > 2) {
        std::vector<int> next;
        remaining -= static_cast<int>(layer.size());
        for (int v : layer)
            for (int w : g.neighbors(v))
                if (--deg[static_cast<size_t>(w)] == 1) next.push_back(w);
        layer = next;
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string tree_canonical_string(const Graph& g) {
    auto centers = tree_centers(g);
    std::string best;
    for (int c : centers) {
        auto s = ahu_string(g, c, -1);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

Graph tree_from_pruefer(int p, const std::vector<int>& code) {
    std::vector<int> degree(static_cast<size_t>(p), 1);
    for (int x : code) ++degree[static_cast<size_t>(x)];
    std::set<int> leaves;
    for (int v = 0; v < p; ++v)
        if (degree[static_cast<size_t>(v)] == 1) leaves.insert(v);
    std::vector<Edge> edges;
    std::vector<int> deg = degree;
    for (int x : code) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
        if (--deg[static_cast<size_t>(x)] == 1) leaves.insert(x);
    }
    int a = *leaves.begin(), b = *leaves.rbegin();
    edges.emplace_back(std::min(a, b), std::max(a, b));
    return Graph(p, edges);
}

} // namespace

std::vector<Graph> enumerate_trees(int p) {
    std::vector<Graph> out;
    if (p <= 0) return out;
    if (p == 1) {
        out.emplace_back(1, std::vector<Edge>{});
        return out;
    }
    if (p == 2) {
        out.push_back(path_graph(2));
        return out;
    }
    std::set<std::string> seen;
    std::vector<int> code(static_cast<size_t>(p - 2), 0);
    while (true) {
        Graph t = tree_from_pruefer(p, code);
        auto s = tree_canonical_string(t);
        if (!seen.count(s)) {
            seen.insert(s);
            out.push_back(t);
        }
        int i = p - 3;
        while (i >= 0 && code[static_cast<size_t>(i)] == p - 1) {
            code[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++code[static_cast<size_t>(i)];
    }
    return out;
}

std::vector<Graph> enumerate_caterpillars(int p) {
    std::vector<Graph> out;
    std::set<std::string> seen;
    for (const auto& t : enumerate_trees(p)) {
        auto tag = classify_tree(t).tag;
        if (tag == TreeTag::path || tag == TreeTag::star || tag == TreeTag::bi_star ||
            tag == TreeTag::caterpillar)
            out.push_back(t);
    }
    return out;
}

Graph random_tree(int p, unsigned seed) {
    if (p <= 2) return path_graph(p);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(0, p - 1);
    std::vector<int> code(static_cast<size_t>(p - 2));
    for (auto& x : code) x = pick(rng);
    return tree_from_pruefer(p, code);
}

std::vector<Graph> enumerate_connected_graphs(int max_q, int min_p) {
    std::vector<Graph> out;
    std::set<std::vector<Edge>> seen;
    for (int p = min_p; p <= max_q + 1; ++p) {
        std::vector<Edge> all;
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j) all.emplace_back(i, j);
        int m = static_cast<int>(all.size());
        for (int q = p - 1; q <= max_q; ++q) {
            if (q > m) continue;
            std::vector<int> idx(static_cast<size_t>(q));
            std::iota(idx.begin(), idx.end(), 0);
            while (true) {
                std::vector<Edge> edges;
                for (int i : idx) edges.push_back(all[static_cast<size_t>(i)]);
                Graph g(p, edges);
                bool covers = true;
                for (int v = 0; v < p; ++v)
                    if (g.degree(v) == 0) covers = false;
                if (covers && g.connected()) {
                    auto canon = canonical_form(g);
                    if (!seen.count(canon)) {
                        seen.insert(canon);
                        out.push_back(g);
                    }
                }
                int i = q - 1;
                while (i >= 0 && idx[static_cast<size_t>(i)] == m - q + i) --i;
                if (i < 0) break;
                ++idx[static_cast<size_t>(i)];
                for (int j = i + 1; j < q; ++j)
                    idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
            }
        }
    }
    return out;
}

} // namespace topolab
