#include <doctest.h>

#include <set>

#include "topolab/construct.hpp"
#include "topolab/matching.hpp"
#include "topolab/search.hpp"

using namespace topolab;

namespace {

Labelling graceful_seed(const Graph& g, std::vector<int> labels) {
    return induce_edge_labels(g, vertex_labelling(g, std::move(labels)), EdgeRule::difference());
}

} // namespace

TEST_CASE("caterpillar set-ordered odd-graceful construction") {
    SUBCASE("K_2") {
        auto lg = caterpillar_set_ordered_odd_graceful(path_graph(2));
        CHECK(lg.certificate->pass);
        CHECK(lg.labelling.vertex_labels() == std::vector<int>{0, 1});
    }
    SUBCASE("star K_{1,3} gives center 0, leaves 1,3,5") {
        auto lg = caterpillar_set_ordered_odd_graceful(star_graph(3));
        CHECK(lg.certificate->pass);
        CHECK(*lg.labelling.vertex(0) == 0);
        CHECK(lg.labelling.edge_label_set() == std::set<int>{1, 3, 5});
    }
    SUBCASE("spine 2 with leaf blocks (2,1)") {
        auto lg = caterpillar_set_ordered_odd_graceful(caterpillar_graph({2, 1}));
        CHECK(lg.certificate->pass);
    }
    SUBCASE("every caterpillar up to 9 vertices certifies") {
        for (int p = 2; p <= 9; ++p)
            for (const auto& t : enumerate_caterpillars(p))
                CHECK(caterpillar_set_ordered_odd_graceful(t).certificate->pass);
    }
    SUBCASE("non-caterpillars are rejected") {
        CHECK_THROWS_AS(caterpillar_set_ordered_odd_graceful(spider_graph({2, 2, 2})), Error);
    }
}

TEST_CASE("matching team") {
    SUBCASE("K_2 yields two trivial members") {
        auto team = matching_team(path_graph(2));
        CHECK(team.members.size() == 2);
        auto cert = verify_team(team);
        CHECK(cert.pass);
    }
    SUBCASE("P_3 yields three certified members") {
        auto team = matching_team(path_graph(3));
        REQUIRE(team.members.size() == 3);
        auto cert = verify_team(team);
        CHECK(cert.pass);
        CHECK(cert.shared_labels.size() == 3);
    }
    SUBCASE("caterpillar (2,1) team passes the team predicate") {
        auto team = matching_team(caterpillar_graph({2, 1}));
        CHECK(verify_team(team).pass);
    }
    SUBCASE("members minus the new leaf are isomorphic (approximate perfection)") {
        auto team = matching_team(path_graph(4));
        REQUIRE(team.members.size() >= 2);
        // removing the newest vertex (largest index) from each member
        std::vector<Graph> cores;
        for (const auto& m : team.members) {
            std::vector<Edge> edges;
            for (auto [u, v] : m.graph.edges())
                if (u != m.graph.p() - 1 && v != m.graph.p() - 1) edges.emplace_back(u, v);
            cores.emplace_back(m.graph.p() - 1, edges);
        }
        for (size_t i = 0; i + 1 < cores.size(); ++i)
            CHECK(isomorphic(cores[i], cores[i + 1]));
    }
    SUBCASE("dropping a member fails the count clause") {
        auto team = matching_team(path_graph(3));
        team.members.pop_back();
        CHECK_FALSE(verify_team(team).pass);
    }
}

TEST_CASE("ten derived labellings on P_3") {
    Graph p3 = path_graph(3);
    auto f = graceful_seed(p3, {0, 2, 1});
    auto derived = derive_ten_labellings(p3, f);
    REQUIRE(derived.size() == 10);
    for (const auto& d : derived) CHECK(d.labelled.certificate->pass);

    // f2: vertex labels (1,3,2), magic constant s+2p+1 = 9
    CHECK(derived[1].labelled.labelling.vertex_labels() == std::vector<int>{1, 3, 2});
    CHECK(derived[1].magic_constant == 9);
    // f3: mirror constant t+2p+1 = 8
    CHECK(derived[2].magic_constant == 8);

    SUBCASE("f6 sums form the arithmetic set {p+s+3, p+s+5, ...}") {
        const auto& f6 = derived[5].labelled;
        std::set<int> sums;
        for (int e = 0; e < p3.q(); ++e) {
            auto [u, v] = p3.edge(e);
            sums.insert(*f6.labelling.vertex(u) + *f6.labelling.edge(e) +
                        *f6.labelling.vertex(v));
        }
        CHECK(sums == std::set<int>{8, 10}); // p+s+3 = 8, step 2
    }
    SUBCASE("f2 and f3 share edge labels f+p") {
        for (int e = 0; e < p3.q(); ++e)
            CHECK(*derived[1].labelled.labelling.edge(e) ==
                  *derived[2].labelled.labelling.edge(e));
    }
    SUBCASE("super ranges for the antimagic pair") {
        for (int idx : {5, 6}) {
            auto vl = derived[static_cast<size_t>(idx)].labelled.labelling.vertex_label_set();
            CHECK(*vl.begin() == 1);
            CHECK(*vl.rbegin() == p3.p());
        }
    }
    SUBCASE("non-set-ordered seed is rejected") {
        auto bad = graceful_seed(p3, {0, 1, 2});
        CHECK_THROWS_AS(derive_ten_labellings(p3, bad), Error);
    }
}

TEST_CASE("e-set v-proper layers from Theorem 2") {
    Graph p3 = path_graph(3);
    auto f = graceful_seed(p3, {0, 2, 1});
    auto res = eset_vproper_from_set_ordered_graceful(p3, f);
    int p = 3, s = 2;

    // h2 is pan-edge-magic with constant p+s-1 (the proof's displayed p+s
    // miscounts by one; certified arithmetic below)
    const auto& h2 = res.layers[0];
    for (int e = 0; e < p3.q(); ++e) {
        auto [u, v] = p3.edge(e);
        CHECK(*h2.vertex(u) + *h2.edge(e) + *h2.vertex(v) == p + s - 1);
    }
    // h3 = h2 + (p-1) on edges
    for (int e = 0; e < p3.q(); ++e)
        CHECK(*res.layers[1].edge(e) == *h2.edge(e) + p - 1);
    // h5: |h5(x)+h5(y)-h5(xy)| = s-1, and h2(e)+h5(e) = p
    const auto& h5 = res.layers[3];
    for (int e = 0; e < p3.q(); ++e) {
        auto [u, v] = p3.edge(e);
        CHECK(std::abs(*h5.vertex(u) + *h5.vertex(v) - *h5.edge(e)) == s - 1);
        CHECK(*h2.edge(e) + *h5.edge(e) == p);
    }
    // h6 sums lie in [p+s-1, 2p+s-3]
    const auto& h6 = res.layers[4];
    for (int e = 0; e < p3.q(); ++e) {
        auto [u, v] = p3.edge(e);
        int sum = *h6.vertex(u) + *h6.edge(e) + *h6.vertex(v);
        CHECK(sum >= p + s - 1);
        CHECK(sum <= 2 * p + s - 3);
    }
    SUBCASE("some edge carries at least five distinct values") {
        int best = 0;
        for (const auto& s_ : res.sets.edge_sets) {
            REQUIRE(s_.has_value());
            best = std::max(best, static_cast<int>(s_->size()));
        }
        CHECK(best >= 5);
    }
}

TEST_CASE("6C construction and round trip") {
    Graph p3 = path_graph(3);
    auto g = graceful_seed(p3, {0, 2, 1});
    auto six = sixC_from_set_ordered_graceful(p3, g);
    CHECK(six.certificate->pass);
    CHECK(six.labelling.vertex_labels() == std::vector<int>{3, 5, 4});
    CHECK(six.labelling.edge_labels() == std::vector<int>{1, 2});
    CHECK(six.certificate->k == 3);
    CHECK(six.certificate->k_dprime == 6);
    CHECK(six.certificate->singularity == 3);

    auto back = set_ordered_from_sixC(p3, six.labelling);
    CHECK(back == g);

    SUBCASE("odd-even separable variant") {
        auto sep = sixC_from_set_ordered_graceful(p3, g, true);
        CHECK(sep.certificate->pass);
        for (int x : sep.labelling.vertex_labels()) CHECK(x % 2 == 1);
        for (int x : sep.labelling.edge_labels()) CHECK(x % 2 == 0);
    }
    SUBCASE("non-tree input is rejected") {
        Graph c4 = cycle_graph(4);
        auto seed = graceful_seed(c4, {0, 3, 1, 4});
        CHECK_THROWS_AS(sixC_from_set_ordered_graceful(c4, seed), Error);
    }
}

TEST_CASE("twin odd-graceful self matching on P_3") {
    Graph p3 = path_graph(3);
    auto f = graceful_seed(p3, {0, 2, 1});
    auto twin = twin_odd_graceful_self_matching(p3, f);
    // T' = {0,2,3} with edges {3,1}; T'' = {1,3,4}; shared 3; union [0,4]
    std::set<int> part0_labels, part1_labels;
    for (int e = 0; e < twin.composed.q(); ++e) {
        auto [u, v] = twin.composed.edge(e);
        auto& bucket = twin.part_of_edge[static_cast<size_t>(e)] == 0 ? part0_labels : part1_labels;
        bucket.insert(u);
        bucket.insert(v);
    }
    CHECK(part0_labels == std::set<int>{0, 2, 3});
    CHECK(part1_labels == std::set<int>{1, 3, 4});
    CHECK(twin.shared_label == 3);
    CHECK(twin.certificate->pass);
}

TEST_CASE("total set-labelling on P_3") {
    Graph p3 = path_graph(3);
    auto f = graceful_seed(p3, {0, 2, 1});
    auto F = total_set_labelling(p3, f, TotalSetFlavor::graceful);
    CHECK(*F.vertex_sets[0] == std::vector<int>{0});
    CHECK(*F.vertex_sets[2] == std::vector<int>{0, 1});
    CHECK(*F.vertex_sets[1] == std::vector<int>{0, 1, 2});
    std::multiset<size_t> sizes;
    for (const auto& s : F.edge_sets) sizes.insert(s->size());
    CHECK(sizes == std::multiset<size_t>{1, 2});

    SUBCASE("odd flavor sizes are the odd interval") {
        auto Fo = total_set_labelling(p3, f, TotalSetFlavor::odd_graceful);
        std::multiset<size_t> osz;
        for (const auto& s : Fo.edge_sets) osz.insert(s->size());
        CHECK(osz == std::multiset<size_t>{1, 3});
    }
    SUBCASE("containment F(x) inside F(y) on every edge") {
        for (int e = 0; e < p3.q(); ++e) {
            auto [u, v] = p3.edge(e);
            const auto& A = *F.vertex_sets[static_cast<size_t>(u)];
            const auto& B = *F.vertex_sets[static_cast<size_t>(v)];
            bool a_in_b = std::includes(B.begin(), B.end(), A.begin(), A.end());
            bool b_in_a = std::includes(A.begin(), A.end(), B.begin(), B.end());
            CHECK((a_in_b || b_in_a));
        }
    }
}

TEST_CASE("complete graph v-set e-proper labellings") {
    SUBCASE("K_2 base case") {
        auto res = complete_graph_vset_graceful(2, TotalSetFlavor::graceful);
        CHECK(*res.sets.vertex_sets[0] == std::vector<int>{0});
        CHECK(*res.sets.vertex_sets[1] == std::vector<int>{1});
        CHECK(res.edge_labels.edge_labels() == std::vector<int>{1});
    }
    SUBCASE("K_3 edge labels {1,2,3}") {
        auto res = complete_graph_vset_graceful(3, TotalSetFlavor::graceful);
        CHECK(res.edge_labels.edge_label_set() == std::set<int>{1, 2, 3});
    }
    SUBCASE("K_5 edge labels [1,10]") {
        auto res = complete_graph_vset_graceful(5, TotalSetFlavor::graceful);
        auto labels = res.edge_labels.edge_label_set();
        CHECK(labels.size() == 10);
        CHECK(*labels.begin() == 1);
        CHECK(*labels.rbegin() == 10);
    }
    SUBCASE("odd flavor up to K_6") {
        for (int n = 2; n <= 6; ++n) {
            auto res = complete_graph_vset_graceful(n, TotalSetFlavor::odd_graceful);
            auto rep = verify_set_labelling(res.graph, res.sets, res.edge_labels,
                                            SetKind::v_set_e_proper, SetRule::odd_graceful);
            CHECK(rep.pass);
        }
    }
}

TEST_CASE("star total colorings") {
    SUBCASE("n=4: all sums equal") {
        auto lg = star_total_coloring(4);
        auto rep = verify_total_coloring(lg.graph, lg.labelling);
        CHECK(rep.proper);
        CHECK(rep.b_tol == 0);
        CHECK(rep.colors_used == 5);
    }
    SUBCASE("n=2: colors {1,2,3}") {
        auto lg = star_total_coloring(2);
        CHECK(lg.labelling.universal_label_set() == std::set<int>{1, 2, 3});
        CHECK(verify_total_coloring(lg.graph, lg.labelling).b_tol == 0);
    }
    SUBCASE("n=3: equitable with sums {6,7}") {
        auto lg = star_total_coloring(3);
        auto rep = verify_total_coloring(lg.graph, lg.labelling);
        CHECK(rep.proper);
        CHECK(rep.b_tol == 1);
        CHECK(rep.colors_used == 4);
        CHECK(rep.min_sum == 6);
        CHECK(rep.max_sum == 7);
    }
}

TEST_CASE("bi-star total colorings") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {4, 2}, {3, 2}, {4, 4}, {5, 3}}) {
        auto lg = bistar_total_coloring(m, n);
        auto rep = verify_total_coloring(lg.graph, lg.labelling);
        CHECK(rep.proper);
        CHECK(rep.b_tol <= 1);
        CHECK(rep.colors_used <= lg.graph.max_degree() + 1);
    }
    SUBCASE("S_{4,2} separates the sums") {
        auto lg = bistar_total_coloring(4, 2);
        CHECK(verify_total_coloring(lg.graph, lg.labelling).b_tol == 1);
    }
}

TEST_CASE("spider total colorings") {
    SUBCASE("K_{1,6} as a spider") {
        auto lg = spider_total_coloring(star_graph(6));
        auto rep = verify_total_coloring(lg.graph, lg.labelling);
        CHECK(rep.proper);
        CHECK(rep.b_tol == 0);
        CHECK(rep.min_sum == 10); // the assignment 1,(1+i),(n+2-i) sums to n+4 on every edge
    }
    SUBCASE("spider S_{1,3,3,4,3,5}") {
        auto lg = spider_total_coloring(spider_graph({1, 3, 3, 4, 3, 5}));
        auto rep = verify_total_coloring(lg.graph, lg.labelling);
        CHECK(rep.proper);
        CHECK(rep.b_tol == 0);
    }
    SUBCASE("some leaf addition preserves the minimum spread") {
        Graph s = spider_graph({2, 2, 1, 1});
        auto base_lg = spider_total_coloring(s);
        auto before = verify_total_coloring(base_lg.graph, base_lg.labelling);
        REQUIRE(before.b_tol == 0);
        int best_after = 99;
        for (int v = 0; v < s.p(); ++v) {
            std::vector<Edge> edges = s.edges();
            edges.emplace_back(v, s.p());
            Graph grown(s.p() + 1, edges);
            if (grown.max_degree() > s.max_degree()) continue; // keep the palette
            auto lg = tree_equitable_total_coloring(grown);
            auto rep = verify_total_coloring(lg.graph, lg.labelling);
            CHECK(rep.proper);
            best_after = std::min(best_after, rep.b_tol);
        }
        CHECK(best_after == before.b_tol);
    }
}

TEST_CASE("tree equitable total colorings") {
    SUBCASE("stars match the dedicated constructor bound") {
        auto lg = tree_equitable_total_coloring(star_graph(4));
        auto rep = verify_total_coloring(lg.graph, lg.labelling);
        CHECK(rep.proper);
        CHECK(rep.b_tol <= 1);
        CHECK(rep.colors_used <= 5);
    }
    SUBCASE("P_5 achieves spread zero") {
        auto lg = tree_equitable_total_coloring(path_graph(5));
        CHECK(verify_total_coloring(lg.graph, lg.labelling).b_tol == 0);
    }
    SUBCASE("random trees stay within the bound") {
        for (unsigned seed = 1; seed <= 10; ++seed) {
            Graph t = random_tree(12, seed);
            auto lg = tree_equitable_total_coloring(t);
            auto rep = verify_total_coloring(lg.graph, lg.labelling);
            CHECK(rep.proper);
            CHECK(rep.b_tol <= 1);
            CHECK(rep.colors_used <= t.max_degree() + 1);
        }
    }
    SUBCASE("non-trees are rejected") {
        CHECK_THROWS_AS(tree_equitable_total_coloring(cycle_graph(4)), Error);
    }
}

TEST_CASE("set-ordered doubling") {
    SUBCASE("K_2 graceful seed gives a graceful set-ordered composite") {
        Graph k2 = path_graph(2);
        auto f = graceful_seed(k2, {0, 1});
        auto res = set_ordered_double(k2, f, LabellingKind::of(Kind::graceful));
        CHECK(res.set_order_holds);
        CHECK(res.kind_holds);
        CHECK(res.self_matching);
        CHECK(res.composed.p() == 4);
        CHECK(res.composed.q() == 3);
    }
    SUBCASE("C_4 odd-graceful seed keeps the set order") {
        Graph c4 = cycle_graph(4);
        Labelling f = vertex_labelling(c4, {0, 3, 2, 7});
        f = induce_edge_labels(c4, f, EdgeRule::difference());
        REQUIRE(verify(c4, f, LabellingKind::of(Kind::odd_graceful)).pass);
        auto res = set_ordered_double(c4, f, LabellingKind::of(Kind::odd_graceful));
        CHECK(res.set_order_holds);
    }
}

TEST_CASE("reciprocal 6C pair on P_3") {
    Graph p3 = path_graph(3);
    auto g = graceful_seed(p3, {0, 2, 1});
    auto pair = reciprocal_sixC_pair(p3, g);
    CHECK(pair.forward.certificate->pass);
    CHECK(pair.inverse.certificate->pass);
    auto rep = reciprocal_inverse_check(pair.forward, pair.inverse);
    CHECK(rep.pass);
    CHECK(rep.shared == std::vector<int>{3});
}
