#include <doctest.h>

#include "topolab/labelling.hpp"
#include "topolab/verify.hpp"

using namespace topolab;

TEST_CASE("dual labelling") {
    Graph p3 = path_graph(3);
    Labelling f = vertex_labelling(p3, {0, 1, 2});
    auto dual = dual_labelling(p3, f, DualDomain::vertices);
    CHECK(*dual.vertex(0) == 2);
    CHECK(*dual.vertex(1) == 1);
    CHECK(*dual.vertex(2) == 0);
    auto twice = dual_labelling(p3, dual, DualDomain::vertices);
    CHECK(twice == f);

    SUBCASE("unlabelled vertex is an error") {
        Labelling partial(p3);
        partial.set_vertex(0, 1);
        CHECK_THROWS_AS(dual_labelling(p3, partial, DualDomain::vertices), Error);
    }

    SUBCASE("dual of a graceful labelling keeps the edge multiset") {
        Labelling g = induce_edge_labels(p3, vertex_labelling(p3, {0, 2, 1}),
                                         EdgeRule::difference());
        auto gd = induce_edge_labels(p3, dual_labelling(p3, g, DualDomain::vertices),
                                     EdgeRule::difference());
        CHECK(g.edge_label_multiset() == gd.edge_label_multiset());
    }
}

TEST_CASE("induced edge labels") {
    Graph p3 = path_graph(3);
    auto f = induce_edge_labels(p3, vertex_labelling(p3, {0, 2, 1}), EdgeRule::difference());
    CHECK(f.edge_label_multiset() == std::multiset<int>{1, 2});
    CHECK(*f.vertex(1) == 2); // vertex labels preserved

    Graph k2 = path_graph(2);
    auto g = induce_edge_labels(k2, vertex_labelling(k2, {0, 1}), EdgeRule::mod_sum(2));
    CHECK(*g.edge(0) == 1);

    Graph star = star_graph(3);
    auto h = induce_edge_labels(star, vertex_labelling(star, {0, 1, 3, 5}),
                                EdgeRule::difference());
    CHECK(h.edge_label_set() == std::set<int>{1, 3, 5});

    SUBCASE("zero residue can remap to the modulus") {
        Graph k2b = path_graph(2);
        auto z = induce_edge_labels(k2b, vertex_labelling(k2b, {3, 8}),
                                    EdgeRule::mod_sum(11, true));
        CHECK(*z.edge(0) == 11);
    }
}

TEST_CASE("label set accessors partition the universal set for total labellings") {
    Graph p3 = path_graph(3);
    Labelling f = vertex_labelling(p3, {3, 5, 4});
    f.set_edge(0, 1);
    f.set_edge(1, 2);
    auto uni = f.universal_label_set();
    CHECK(uni == std::set<int>{1, 2, 3, 4, 5});
    CHECK(f.vertex_label_set().size() + f.edge_label_set().size() == uni.size());
}

TEST_CASE("null edge labels are absent entries") {
    Graph p3 = path_graph(3);
    Labelling f = vertex_labelling(p3, {0, 1, 2});
    f.set_edge(0, 7);
    CHECK(f.edge(0).has_value());
    CHECK_FALSE(f.edge(1).has_value());
    f.clear_edge(0);
    CHECK_FALSE(f.edges_total());
}
