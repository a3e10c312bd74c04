#include <doctest.h>

#include "topolab/encode.hpp"

using namespace topolab;

namespace {

LabelledGraph p3_graceful() {
    Graph g = path_graph(3);
    Labelling f = induce_edge_labels(g, vertex_labelling(g, {0, 2, 1}), EdgeRule::difference());
    return {g, f, std::nullopt};
}

LabelledGraph k2_labelled() {
    Graph g = path_graph(2);
    Labelling f = vertex_labelling(g, {0, 1});
    f.set_edge(0, 1);
    return {g, f, std::nullopt};
}

} // namespace

TEST_CASE("matrix encoding") {
    SUBCASE("K_2") {
        auto m = to_matrix(k2_labelled());
        CHECK(m.X == std::vector<int>{0});
        CHECK(m.W == std::vector<int>{1});
        CHECK(m.Y == std::vector<int>{1});
    }
    SUBCASE("P_3 sorted by edge label") {
        auto m = to_matrix(p3_graceful());
        CHECK(m.X == std::vector<int>{1, 0});
        CHECK(m.W == std::vector<int>{1, 2});
        CHECK(m.Y == std::vector<int>{2, 2});
    }
    SUBCASE("round trip up to label identity") {
        auto lg = p3_graceful();
        auto back = from_matrix(to_matrix(lg));
        CHECK(to_matrix(back) == to_matrix(lg));
    }
    SUBCASE("missing labels are an error") {
        Graph g = path_graph(2);
        LabelledGraph bare{g, Labelling(g), std::nullopt};
        CHECK_THROWS_AS(to_matrix(bare), Error);
    }
}

TEST_CASE("walk passwords") {
    SUBCASE("vv walk on K_2") {
        auto pw = derive_password_walk(k2_labelled(), {0}, WalkScheme::vv);
        CHECK(pw.text == "010");
    }
    SUBCASE("vev walk on P_3 middle vertex") {
        auto pw = derive_password_walk(p3_graceful(), {1}, WalkScheme::vev);
        CHECK(pw.text == "220112");
    }
    SUBCASE("marks suffix the walk vertex") {
        auto pw = derive_password_walk(k2_labelled(), {0}, WalkScheme::vv, true);
        CHECK(pw.text == "0'10'");
    }
    SUBCASE("invalid walk vertex") {
        CHECK_THROWS_AS(derive_password_walk(k2_labelled(), {7}, WalkScheme::vv), Error);
    }
}

TEST_CASE("concatenation reproduces the published strings") {
    std::vector<PasswordString> parts{{"112", "raw"}, {"110022", "raw"}, {"03312321", "raw"}};
    CHECK(concat_passwords(parts, {1, 2, 3}).text == "11211002203312321");
    CHECK(concat_passwords(parts, {3, 2, 1}).text == "03312321110022112");
    CHECK(concat_passwords(parts, {1, 3, 2}).text == "11203312321110022");
    CHECK_THROWS_AS(concat_passwords({}, {1}), Error);
    CHECK_THROWS_AS(concat_passwords(parts, {4}), Error);
}

TEST_CASE("matrix traversal text") {
    TopsnutMatrix m;
    m.X = {1, 0};
    m.W = {1, 2};
    m.Y = {2, 2};
    CHECK(matrix_serpentine_text(m, Traversal::column_serpentine).text == "112220");
    CHECK(matrix_serpentine_text(m, Traversal::row_major).text == "101222");
    TopsnutMatrix k2;
    k2.X = {0};
    k2.W = {1};
    k2.Y = {1};
    CHECK(matrix_serpentine_text(k2, Traversal::column_serpentine).text == "011");
}

TEST_CASE("serialization") {
    SUBCASE("round trip identity") {
        auto lg = p3_graceful();
        auto text = serialize(lg);
        auto back = deserialize_labelled_graph(text);
        CHECK(back.graph == lg.graph);
        CHECK(back.labelling == lg.labelling);
        CHECK(serialize(back) == text);
    }
    SUBCASE("null edge labels serialize as the token") {
        Graph g = path_graph(2);
        LabelledGraph lg{g, vertex_labelling(g, {0, 1}), std::nullopt};
        auto text = serialize(lg);
        CHECK(text.find("\"null\"") != std::string::npos);
        auto back = deserialize_labelled_graph(text);
        CHECK_FALSE(back.labelling.edge(0).has_value());
    }
    SUBCASE("unknown fields are a parse error") {
        CHECK_THROWS_AS(deserialize_labelled_graph(R"({"p":1,"edges":[],"bogus":1})"), Error);
        try {
            deserialize_labelled_graph("{\"p\": }");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::parse_error);
            CHECK(std::string(e.what()).find("line") != std::string::npos);
        }
    }
    SUBCASE("partitions carry their parts") {
        Graph g = path_graph(2);
        Labelling a = vertex_labelling(g, {0, 1});
        Labelling b = vertex_labelling(g, {1, 2});
        auto partition = compose({{g, a, std::nullopt}, {g, b, std::nullopt}});
        auto text = serialize(partition);
        auto back = deserialize_partition(text);
        CHECK(back.parts.size() == 2);
        CHECK(back.k == 1);
        CHECK(isomorphic(back.universal.graph, path_graph(3)));
    }
}

TEST_CASE("dot export") {
    auto dot = to_dot(p3_graceful());
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("--") != std::string::npos);
    CHECK(dot.find("label=\"2\"") != std::string::npos);
}
