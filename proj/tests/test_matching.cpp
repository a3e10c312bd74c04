#include <doctest.h>

#include "topolab/encode.hpp"
#include "topolab/matching.hpp"
#include "topolab/search.hpp"

using namespace topolab;

namespace {

LabelledGraph make_part(int p, std::vector<Edge> edges, std::vector<int> vlabels,
                        std::vector<int> elabels = {}) {
    Graph g(p, std::move(edges));
    Labelling f = vertex_labelling(g, vlabels);
    for (size_t e = 0; e < elabels.size(); ++e) f.set_edge(static_cast<int>(e), elabels[e]);
    return {g, f, std::nullopt};
}

// The repo fixtures standing in for the two K_4 decompositions: three
// caterpillars with pairwise distinct sizes, and three spanning trees.
std::vector<LabelledGraph> k4_caterpillar_fixture() {
    return {
        make_part(2, {{0, 1}}, {1, 2}, {1}),
        make_part(3, {{0, 1}, {0, 2}}, {0, 1, 2}, {1, 2}),
        make_part(4, {{0, 3}, {1, 3}, {2, 3}}, {0, 1, 2, 3}, {3, 2, 1}),
    };
}

std::vector<LabelledGraph> k4_spanning_tree_fixture() {
    return {
        make_part(4, {{0, 1}, {1, 2}, {2, 3}}, {0, 1, 2, 3}, {1, 2, 3}),
        make_part(4, {{0, 1}, {0, 2}, {0, 3}}, {0, 1, 2, 3}, {1, 2, 3}),
        make_part(4, {{0, 1}, {0, 2}, {1, 3}}, {0, 1, 2, 3}, {2, 1, 2}),
    };
}

} // namespace

TEST_CASE("compose") {
    SUBCASE("three caterpillars re-assemble K_4 edge-disjointly") {
        auto partition = compose(k4_caterpillar_fixture());
        CHECK(partition.mode == PartitionMode::edge_disjoint);
        CHECK(isomorphic(partition.universal.graph, complete_graph(4)));
        CHECK(partition.universal.graph.q() == 6);
    }
    SUBCASE("three spanning trees re-assemble K_4 with shared edges") {
        auto partition = compose(k4_spanning_tree_fixture());
        CHECK(partition.mode == PartitionMode::multiple_edge);
        CHECK(isomorphic(partition.universal.graph, complete_graph(4)));
        bool multi = false;
        for (int m : partition.edge_multiplicity)
            if (m > 1) multi = true;
        CHECK(multi);
    }
    SUBCASE("two K_2 parts sharing one label give P_3") {
        auto partition = compose({make_part(2, {{0, 1}}, {0, 1}),
                                  make_part(2, {{0, 1}}, {1, 2})});
        CHECK(partition.k == 1);
        CHECK(isomorphic(partition.universal.graph, path_graph(3)));
    }
    SUBCASE("repeated labels inside a part are rejected") {
        CHECK_THROWS_AS(compose({make_part(2, {{0, 1}}, {3, 3})}), Error);
    }
    SUBCASE("decomposing a composed partition returns the parts unchanged") {
        auto parts = k4_caterpillar_fixture();
        auto partition = compose(parts);
        REQUIRE(partition.parts.size() == parts.size());
        for (size_t i = 0; i < parts.size(); ++i) {
            CHECK(partition.parts[i].graph == parts[i].graph);
            CHECK(partition.parts[i].labelling == parts[i].labelling);
        }
    }
    SUBCASE("edge-disjoint partitions satisfy degree additivity") {
        auto partition = compose(k4_caterpillar_fixture());
        int total = 0;
        for (const auto& part : partition.parts) total += part.graph.q();
        CHECK(total == partition.universal.graph.q());
    }
}

TEST_CASE("odd-graceful matching search") {
    SUBCASE("star with labels {0;1,3,5} has no companion") {
        Graph star = star_graph(3);
        auto f = induce_edge_labels(star, vertex_labelling(star, {0, 1, 3, 5}),
                                    EdgeRule::difference());
        CHECK_THROWS_AS(odd_graceful_matching(star, f, false), Error);
    }
    SUBCASE("P_4 with labels (0,5,2,3) has no companion") {
        Graph p4 = path_graph(4);
        auto f = induce_edge_labels(p4, vertex_labelling(p4, {0, 5, 2, 3}),
                                    EdgeRule::difference());
        CHECK_THROWS_AS(odd_graceful_matching(p4, f, false), Error);
    }
    SUBCASE("agreement with exhaustive existence on tiny seeds") {
        SearchBudget budget;
        for (const auto& g : enumerate_connected_graphs(4)) {
            auto seeds = enumerate_labellings(g, LabellingKind::of(Kind::odd_graceful), budget);
            for (size_t i = 0; i < seeds.size() && i < 3; ++i) {
                bool algo_ok = true;
                try {
                    auto h = odd_graceful_matching(g, seeds[i], false);
                    CHECK(h.certificate->pass);
                } catch (const Error& e) {
                    CHECK(e.code() == Errc::no_matching_exists);
                    algo_ok = false;
                }
                (void)algo_ok;
            }
        }
    }
}

TEST_CASE("reciprocal inverse checks") {
    Graph p3 = path_graph(3);
    auto g = induce_edge_labels(p3, vertex_labelling(p3, {0, 2, 1}), EdgeRule::difference());
    auto pair = reciprocal_sixC_pair(p3, g);
    SUBCASE("constructed pair passes with the singularity") {
        auto rep = reciprocal_inverse_check(pair.forward, pair.inverse);
        CHECK(rep.pass);
        CHECK(rep.shared == std::vector<int>{3});
    }
    SUBCASE("relation is symmetric") {
        auto fwd = reciprocal_inverse_check(pair.forward, pair.inverse);
        auto rev = reciprocal_inverse_check(pair.inverse, pair.forward);
        CHECK(fwd.pass == rev.pass);
    }
    SUBCASE("identical labellings fail") {
        auto rep = reciprocal_inverse_check(pair.forward, pair.forward);
        CHECK_FALSE(rep.pass);
    }
    SUBCASE("missing certificates are an error") {
        LabelledGraph bare{p3, g, std::nullopt};
        CHECK_THROWS_AS(reciprocal_inverse_check(bare, pair.inverse), Error);
    }
}

TEST_CASE("max-min partitions") {
    SUBCASE("P_3 composition is computed and classified") {
        auto mm = max_min_partition(path_graph(3), Objective::difference_sum());
        CHECK(mm.max_value == 3);
        CHECK(mm.min_value == 2);
        CHECK(mm.partition.k == 3); // all labels shared (both sides use [0,2])
    }
    SUBCASE("perfect search reports tree fractions") {
        int perfect = 0, total = 0;
        for (const auto& t : enumerate_trees(5)) {
            ++total;
            if (find_perfect_max_min(t, Objective::difference_sum())) ++perfect;
        }
        CHECK(total == 3);
        CHECK(perfect >= 0); // recorded, not asserted (the paper only guesses)
    }
    SUBCASE("oversize graphs raise UncertifiedExtremal") {
        Graph big = complete_graph(9);
        CHECK_THROWS_AS(max_min_partition(big, Objective::difference_sum()), Error);
    }
}

TEST_CASE("eulerian matching") {
    Graph p3 = path_graph(3);
    auto c4 = cycle_graph(4);
    CHECK(eulerian_matching_check(p3, p3, c4));
    CHECK_FALSE(eulerian_matching_check(c4, c4, c4));      // parts already eulerian
    CHECK_FALSE(eulerian_matching_check(p3, p3, path_graph(4))); // odd degrees remain
}
