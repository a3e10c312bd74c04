#include <doctest.h>

#include <random>

#include "topolab/graph.hpp"

using namespace topolab;

TEST_CASE("classify_tree basics") {
    CHECK(classify_tree(path_graph(4)).tag == TreeTag::path);
    CHECK(classify_tree(star_graph(5)).tag == TreeTag::star);
    CHECK(classify_tree(bistar_graph(2, 2)).tag == TreeTag::bi_star);
    CHECK(classify_tree(cycle_graph(4)).tag == TreeTag::not_tree);

    // the aster A_{2,2,2}: a spider, not a caterpillar
    Graph aster = spider_graph({2, 2, 2});
    CHECK(classify_tree(aster).tag == TreeTag::spider);

    Graph cat = caterpillar_graph({2, 0, 1});
    auto shape = classify_tree(cat);
    CHECK(shape.tag == TreeTag::caterpillar);
    CHECK(shape.spine.size() == 3);
    CHECK(shape.leaf_blocks == std::vector<int>{2, 0, 1});

    // lobster: leaf deletion yields K_{1,3}, and two branch vertices rule
    // out the spider tag
    Graph lob(8, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}, {1, 7}});
    CHECK(classify_tree(lob).tag == TreeTag::lobster);
}

TEST_CASE("classify_tree tag refinement is consistent") {
    // every caterpillar also satisfies the lobster predicate (leaf deletion
    // of a caterpillar is a path, hence a caterpillar)
    Graph cat = caterpillar_graph({1, 2, 1});
    auto shape = classify_tree(cat);
    CHECK(shape.tag == TreeTag::caterpillar);
}

TEST_CASE("bipartition") {
    auto bp = bipartition(path_graph(3));
    CHECK(bp.X == std::vector<int>{0, 2});
    CHECK(bp.Y == std::vector<int>{1});

    CHECK_THROWS_AS(bipartition(complete_graph(3)), Error);
    try {
        bipartition(complete_graph(3));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::odd_cycle);
    }

    auto c4 = bipartition(cycle_graph(4));
    CHECK(c4.X == std::vector<int>{0, 2});
    CHECK(c4.Y == std::vector<int>{1, 3});
}

TEST_CASE("vertex_split") {
    // K_3, split vertex 2 with part {0}
    Graph g = complete_graph(3);
    Graph split = vertex_split(g, 2, {0});
    CHECK(split.p() == 4);
    CHECK(split.q() == g.q()); // |E| preserved
    CHECK(split.has_edge(0, 1));
    CHECK(split.has_edge(0, 2));
    CHECK(split.has_edge(1, 3));
    // disjoint neighborhoods of the two halves
    CHECK(split.degree(2) == 1);
    CHECK(split.degree(3) == 1);

    CHECK_THROWS_AS(vertex_split(g, 2, {}), Error);
    CHECK_THROWS_AS(vertex_split(g, 2, {0, 1}), Error);

    // star center split with one leaf peels off a K_2
    Graph star = star_graph(3);
    Graph s2 = vertex_split(star, 0, {1});
    CHECK(s2.q() == 3);
    CHECK(s2.degree(0) == 1);
    CHECK(s2.degree(4) == 2);
}

TEST_CASE("vertex_identify") {
    // identify endpoints of P_3: the doubled edge collapses to K_2
    Graph p3 = path_graph(3);
    Graph merged = vertex_identify(p3, 0, 2);
    CHECK(merged.p() == 2);
    CHECK(merged.q() == 1);

    CHECK_THROWS_AS(vertex_identify(path_graph(2), 0, 1), Error);
}

TEST_CASE("split then identify round trip") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int p = 4 + static_cast<int>(rng() % 4);
        std::vector<Edge> edges;
        for (int i = 1; i < p; ++i) edges.emplace_back(static_cast<int>(rng() % i), i);
        Graph g(p, edges);
        int v = static_cast<int>(rng() % p);
        if (g.degree(v) < 2) continue;
        std::vector<int> part{g.neighbors(v).front()};
        Graph split = vertex_split(g, v, part);
        // v' = v, v'' = p are non-adjacent with disjoint neighborhoods
        Graph back = vertex_identify(split, v, p);
        CHECK(isomorphic(back, g));
    }
}

TEST_CASE("split_to_tree") {
    SUBCASE("tree is fixed") {
        Graph t = caterpillar_graph({1, 1});
        auto res = split_to_tree(t);
        CHECK(res.tree == t);
    }
    SUBCASE("C_4 becomes a 5-vertex path") {
        auto res = split_to_tree(cycle_graph(4));
        CHECK(res.tree.p() == 5);
        CHECK(classify_tree(res.tree).tag == TreeTag::path);
    }
    SUBCASE("K_4 becomes a 7-vertex tree") {
        auto res = split_to_tree(complete_graph(4));
        CHECK(res.tree.p() == 7);
        CHECK(res.tree.is_tree());
        CHECK(res.origin.size() == 7);
    }
    SUBCASE("random connected graphs end at q+1 vertices") {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 30; ++trial) {
            int p = 3 + static_cast<int>(rng() % 5);
            std::vector<Edge> edges;
            for (int i = 1; i < p; ++i) edges.emplace_back(static_cast<int>(rng() % i), i);
            for (int extra = 0; extra < 3; ++extra) {
                int a = static_cast<int>(rng() % p), b = static_cast<int>(rng() % p);
                if (a != b && !Graph(p, edges).has_edge(a, b))
                    edges.emplace_back(std::min(a, b), std::max(a, b));
            }
            Graph g(p, edges);
            auto res = split_to_tree(g);
            CHECK(res.tree.p() == g.q() + 1);
            CHECK(res.tree.is_tree());
        }
    }
}

TEST_CASE("isomorphism") {
    CHECK(isomorphic(path_graph(4), Graph(4, {{3, 1}, {1, 0}, {0, 2}})));
    CHECK_FALSE(isomorphic(path_graph(4), star_graph(3)));
    CHECK(isomorphic(complete_graph(5), complete_graph(5)));
    CHECK(isomorphic(cycle_graph(6), Graph(6, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 5}, {5, 0}})));
    CHECK_THROWS_AS(canonical_form(complete_graph(13)), Error);
}
