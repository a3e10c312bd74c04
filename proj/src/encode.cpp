#include "topolab/encode.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace topolab {

namespace {

using nlohmann::json;

struct Column {
    int x, w, y;
};

} // namespace

TopsnutMatrix to_matrix(const LabelledGraph& g, MatrixOrder order) {
    if (!g.labelling.vertices_total() || !g.labelling.edges_total())
        fail(Errc::missing_labels, "matrix encoding needs a fully labelled graph");
    std::vector<Column> cols;
    for (int e = 0; e < g.graph.q(); ++e) {
        auto [u, v] = g.graph.edge(e);
        int a = *g.labelling.vertex(u), b = *g.labelling.vertex(v);
        cols.push_back({std::min(a, b), *g.labelling.edge(e), std::max(a, b)});
    }
    auto key_label = [](const Column& c) { return std::tuple(c.w, c.x, c.y); };
    auto key_ends = [](const Column& c) { return std::tuple(c.x, c.y, c.w); };
    std::sort(cols.begin(), cols.end(), [&](const Column& a, const Column& b) {
        return order == MatrixOrder::by_edge_label ? key_label(a) < key_label(b)
                                                   : key_ends(a) < key_ends(b);
    });
    TopsnutMatrix m;
    for (const auto& c : cols) {
        m.X.push_back(c.x);
        m.W.push_back(c.w);
        m.Y.push_back(c.y);
    }
    return m;
}

LabelledGraph from_matrix(const TopsnutMatrix& m) {
    std::set<int> labels;
    for (int j = 0; j < m.columns(); ++j) {
        labels.insert(m.X[static_cast<size_t>(j)]);
        labels.insert(m.Y[static_cast<size_t>(j)]);
    }
    std::map<int, int> vertex_of;
    int next = 0;
    for (int l : labels) vertex_of[l] = next++;
    std::vector<Edge> edges;
    for (int j = 0; j < m.columns(); ++j) {
        int u = vertex_of[m.X[static_cast<size_t>(j)]], v = vertex_of[m.Y[static_cast<size_t>(j)]];
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    Graph g(next, edges);
    Labelling f(g);
    for (auto [l, v] : vertex_of) f.set_vertex(v, l);
    for (int j = 0; j < m.columns(); ++j) {
        int u = vertex_of[m.X[static_cast<size_t>(j)]], v = vertex_of[m.Y[static_cast<size_t>(j)]];
        f.set_edge(g.edge_index(u, v), m.W[static_cast<size_t>(j)]);
    }
    return {g, f, std::nullopt};
}

PasswordString derive_password_walk(const LabelledGraph& g, const std::vector<int>& walk,
                                    WalkScheme scheme, bool marks) {
    if (!g.labelling.vertices_total())
        fail(Errc::missing_labels, "walk derivation needs vertex labels");
    std::ostringstream os;
    for (int w : walk) {
        if (w < 0 || w >= g.graph.p()) fail(Errc::invalid_walk, "walk vertex does not exist");
        int own = *g.labelling.vertex(w);
        auto emit_self = [&] {
            os << own;
            if (marks) os << "'";
        };
        // neighbors in ascending label order
        std::vector<std::pair<int, int>> nbrs; // (label, vertex)
        for (int u : g.graph.neighbors(w)) nbrs.emplace_back(*g.labelling.vertex(u), u);
        std::sort(nbrs.begin(), nbrs.end());
        emit_self();
        for (auto [lab, u] : nbrs) {
            if (scheme == WalkScheme::vev) {
                int e = g.graph.edge_index(w, u);
                if (!g.labelling.edge(e)) fail(Errc::missing_labels, "vev walk needs edge labels");
                os << *g.labelling.edge(e);
            }
            os << lab;
        }
        emit_self();
    }
    return {os.str(), scheme == WalkScheme::vv ? "vv" : "vev"};
}

PasswordString concat_passwords(const std::vector<PasswordString>& parts,
                                const std::vector<int>& order) {
    if (parts.empty()) fail(Errc::empty_input, "concatenation needs parts");
    std::ostringstream os;
    for (int i : order) {
        if (i < 1 || i > static_cast<int>(parts.size()))
            fail(Errc::index_out_of_range, "part index out of range");
        os << parts[static_cast<size_t>(i - 1)].text;
    }
    return {os.str(), "concat"};
}

PasswordString matrix_serpentine_text(const TopsnutMatrix& m, Traversal traversal) {
    std::ostringstream os;
    if (traversal == Traversal::column_serpentine) {
        for (int j = 0; j < m.columns(); ++j) {
            if (j % 2 == 0)
                os << m.X[static_cast<size_t>(j)] << m.W[static_cast<size_t>(j)]
                   << m.Y[static_cast<size_t>(j)];
            else
                os << m.Y[static_cast<size_t>(j)] << m.W[static_cast<size_t>(j)]
                   << m.X[static_cast<size_t>(j)];
        }
        return {os.str(), "matrix_serpentine"};
    }
    for (const auto* row : {&m.X, &m.W, &m.Y})
        for (int x : *row) os << x;
    return {os.str(), "matrix_row_major"};
}

namespace {

json labelled_graph_to_json(const LabelledGraph& g) {
    json j;
    j["p"] = g.graph.p();
    json edges = json::array();
    for (auto [u, v] : g.graph.edges()) edges.push_back(json::array({u, v}));
    j["edges"] = edges;
    json vl = json::object();
    for (int v = 0; v < g.graph.p(); ++v)
        if (g.labelling.vertex(v)) vl[std::to_string(v)] = *g.labelling.vertex(v);
    j["vertex_labels"] = vl;
    json el = json::object();
    for (int e = 0; e < g.graph.q(); ++e) {
        auto [u, v] = g.graph.edge(e);
        std::string key = std::to_string(u) + "-" + std::to_string(v);
        if (g.labelling.edge(e))
            el[key] = *g.labelling.edge(e);
        else
            el[key] = "null";
    }
    j["edge_labels"] = el;
    return j;
}

void check_known_fields(const json& j, const std::set<std::string>& allowed) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            fail(Errc::parse_error, "unknown field '" + it.key() + "' at line 1, column 1");
}

LabelledGraph labelled_graph_from_json(const json& j) {
    check_known_fields(j, {"p", "edges", "vertex_labels", "edge_labels", "parts"});
    if (!j.contains("p") || !j["p"].is_number_integer())
        fail(Errc::parse_error, "missing integer field 'p'");
    int p = j["p"].get<int>();
    std::vector<Edge> edges;
    if (j.contains("edges"))
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2) fail(Errc::parse_error, "edge must be a pair");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    Graph g(p, edges);
    Labelling f(g);
    if (j.contains("vertex_labels"))
        for (auto it = j["vertex_labels"].begin(); it != j["vertex_labels"].end(); ++it) {
            int v = std::stoi(it.key());
            if (v < 0 || v >= p) fail(Errc::parse_error, "vertex label key out of range");
            f.set_vertex(v, it.value().get<int>());
        }
    if (j.contains("edge_labels"))
        for (auto it = j["edge_labels"].begin(); it != j["edge_labels"].end(); ++it) {
            auto key = it.key();
            auto dash = key.find('-');
            if (dash == std::string::npos) fail(Errc::parse_error, "edge key must be 'u-v'");
            int u = std::stoi(key.substr(0, dash));
            int v = std::stoi(key.substr(dash + 1));
            int e = g.edge_index(u, v);
            if (e < 0) fail(Errc::parse_error, "edge key refers to a missing edge");
            if (it.value().is_string()) {
                if (it.value().get<std::string>() != "null")
                    fail(Errc::parse_error, "edge label must be an integer or \"null\"");
            } else {
                f.set_edge(e, it.value().get<int>());
            }
        }
    return {g, f, std::nullopt};
}

json parse_or_fail(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& err) {
        // byte offset -> line/column for the diagnostic
        size_t line = 1, col = 1;
        for (size_t i = 0; i + 1 < err.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        fail(Errc::parse_error,
             "invalid JSON at line " + std::to_string(line) + ", column " + std::to_string(col));
    }
}

} // namespace

std::string serialize(const LabelledGraph& g) { return labelled_graph_to_json(g).dump(2) + "\n"; }

std::string serialize(const MatchingPartition& p) {
    json j = labelled_graph_to_json(p.universal);
    json parts = json::array();
    for (const auto& part : p.parts) parts.push_back(labelled_graph_to_json(part));
    j["parts"] = parts;
    return j.dump(2) + "\n";
}

LabelledGraph deserialize_labelled_graph(const std::string& text) {
    json j = parse_or_fail(text);
    if (j.contains("parts")) fail(Errc::parse_error, "expected a labelled graph, found a partition");
    return labelled_graph_from_json(j);
}

MatchingPartition deserialize_partition(const std::string& text) {
    json j = parse_or_fail(text);
    if (!j.contains("parts") || !j["parts"].is_array())
        fail(Errc::parse_error, "partition container needs a 'parts' array");
    std::vector<LabelledGraph> parts;
    for (const auto& pj : j["parts"]) parts.push_back(labelled_graph_from_json(pj));
    return compose(parts);
}

std::string to_dot(const LabelledGraph& g) {
    std::ostringstream os;
    os << "graph topsnut {\n";
    for (int v = 0; v < g.graph.p(); ++v) {
        os << "  v" << v;
        if (g.labelling.vertex(v)) os << " [label=\"" << *g.labelling.vertex(v) << "\"]";
        os << ";\n";
    }
    for (int e = 0; e < g.graph.q(); ++e) {
        auto [u, v] = g.graph.edge(e);
        os << "  v" << u << " -- v" << v;
        if (g.labelling.edge(e)) os << " [label=\"" << *g.labelling.edge(e) << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace topolab
