#include <doctest.h>

#include <algorithm>
#include <set>

#include "topolab/group.hpp"

using namespace topolab;

namespace {

GraphicGroup path_group(int n) {
    Graph g = path_graph(4);
    Labelling f = vertex_labelling(g, {0, 1, 2, 3});
    // edges chosen so that (f(u)+f(v)-f(uv)) mod 13 is the constant 3
    int edge_vals[3] = {11, 0, 2};
    for (int e = 0; e < g.q(); ++e) f.set_edge(e, edge_vals[e]);
    return {{g, f, std::nullopt}, n, false};
}

} // namespace

TEST_CASE("group operation") {
    CHECK(group_op(2, 3, 1, 13) == 4);
    for (int k = 0; k < 7; ++k) CHECK(group_op(k, 5, k, 7) == 5); // every element is a zero
    CHECK(group_op(3, ((2 * 5 - 3) % 9 + 9) % 9, 5, 9) == 5);     // inverse formula
    CHECK_THROWS_AS(group_op(9, 0, 0, 9), Error);
    CHECK_THROWS_AS(group_op(0, 0, 0, 0), Error);
}

TEST_CASE("group axioms hold for every zero") {
    for (int n : {1, 2, 13, 20, 24}) {
        auto rep = verify_group(path_group(n));
        CHECK(rep.pass);
    }
}

TEST_CASE("group elements materialize as shifted labellings") {
    auto gp = path_group(13);
    auto e0 = group_element(gp, 0);
    CHECK(e0 == gp.base.labelling);
    auto e5 = group_element(gp, 5);
    CHECK(*e5.vertex(0) == 5);
    CHECK(*e5.edge(0) == 3); // (11+5) mod 13
    CHECK_THROWS_AS(group_element(gp, 13), Error);
}

TEST_CASE("shifted property reports") {
    auto gp = path_group(13);
    auto report = shifted_property_report(gp, [&](const Labelling& f) {
        // pan-edge-magic graceful under the modulus: |f(u)+f(v)-f(uv)| mod 13 constant
        std::optional<int> k;
        for (int e = 0; e < gp.base.graph.q(); ++e) {
            auto [u, v] = gp.base.graph.edge(e);
            int val = ((*f.vertex(u) + *f.vertex(v) - *f.edge(e)) % 13 + 13) % 13;
            if (!k) k = val;
            if (*k != val) return false;
        }
        return true;
    });
    CHECK(report.size() == 13);
    CHECK(report[0]);
    CHECK(std::count(report.begin(), report.end(), true) == 13);
}

TEST_CASE("network encryption") {
    auto gp = path_group(13);
    SUBCASE("single edge example") {
        auto enc = encrypt_network(path_graph(2), gp, {1, 2}, 0);
        CHECK(enc.edge_element == std::vector<int>{3});
    }
    SUBCASE("distinct leaf indices give distinct edge elements") {
        Graph star = star_graph(4);
        auto enc = encrypt_network(star, gp, {0, 1, 2, 3, 4}, 5);
        std::set<int> seen(enc.edge_element.begin(), enc.edge_element.end());
        CHECK(seen.size() == enc.edge_element.size());
    }
    SUBCASE("equivariance under a common shift") {
        Graph net = path_graph(3);
        auto base = encrypt_network(net, gp, {1, 5, 2}, 3);
        auto shifted = encrypt_network(net, gp, {2, 6, 3}, 4);
        for (int e = 0; e < net.q(); ++e)
            CHECK((base.edge_element[static_cast<size_t>(e)] + 1) % 13 ==
                  shifted.edge_element[static_cast<size_t>(e)]);
    }
    SUBCASE("graceful-group assignments exist on small trees") {
        auto enc = find_graceful_group_assignment(path_graph(4), gp, 0);
        REQUIRE(enc.has_value());
        std::set<int> labels(enc->edge_element.begin(), enc->edge_element.end());
        CHECK(labels == std::set<int>{1, 2, 3});
    }
}
