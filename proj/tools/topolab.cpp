// Command-line front door: verification, construction, search, extremal
// optimization, composition, matrix/password encodings, graphic groups and
// set-partition solving over labelled graphs stored as JSON.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "topolab/encode.hpp"
#include "topolab/group.hpp"
#include "topolab/search.hpp"

using namespace topolab;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verification_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::parse_error, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

LabelledGraph load_graph(const std::string& path) {
    return deserialize_labelled_graph(read_file(path));
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

json report_to_json(const VerifyReport& rep) {
    json j;
    j["kind"] = rep.kind;
    j["pass"] = rep.pass;
    json conds = json::array();
    for (const auto& c : rep.conditions) {
        json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (!c.witness.empty()) cj["witness"] = c.witness;
        conds.push_back(cj);
    }
    j["conditions"] = conds;
    if (rep.k) j["k"] = *rep.k;
    if (rep.k_prime) j["k_prime"] = *rep.k_prime;
    if (rep.k_dprime) j["k_dprime"] = *rep.k_dprime;
    if (rep.singularity) j["singularity"] = *rep.singularity;
    return j;
}

void emit(const json& j, bool as_json, const std::string& fallback) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << fallback << "\n";
}

struct Options {
    bool json_out = false;
    std::string graph_file, paired_file, out_file;
    std::string kind_name, parts_csv, walk_csv, order_csv, what, flavor = "graceful";
    std::string objective = "diff-sum", mode = "min", method = "brute", family;
    std::string scheme, emit_mode = "all", matrix_order = "edge-label", traversal = "serpentine";
    std::string network_file, assign_csv, partition_kind;
    int shift = 0, n = 0, m = 0, param = 0, restarts = 20, jobs = 1, zero = 0;
    int p = 0, q = 0;
    unsigned seed = 0;
    double max_seconds = 60.0;
    bool strict = false, marks = false, odd_even = false, emit_dot = false, do_verify = false;
    std::vector<int> op_args;
};

LabellingKind kind_from_options(const Graph& g, const Options& opt) {
    auto kind = kind_from_name(opt.kind_name);
    if (!kind) fail(Errc::unknown_family, "unknown labelling kind '" + opt.kind_name + "'");
    if (*kind == Kind::k_sequential_odd_graceful) return LabellingKind::k_sequential(opt.shift);
    if (*kind == Kind::ve_exchanged_of) {
        if (opt.paired_file.empty())
            fail(Errc::missing_certificates, "--paired <file> is required for ve-exchanged");
        auto paired = load_graph(opt.paired_file);
        return LabellingKind::ve_exchanged(std::make_shared<Labelling>(paired.labelling));
    }
    if (*kind == Kind::tog || *kind == Kind::toe || *kind == Kind::sotoe ||
        *kind == Kind::two_odd_two) {
        auto parts = parse_int_list(opt.parts_csv);
        if (static_cast<int>(parts.size()) != g.q())
            fail(Errc::missing_parts, "--parts must list one 0/1 per edge");
        return LabellingKind::twin(*kind, parts, opt.strict);
    }
    return LabellingKind::of(*kind);
}

void write_or_print(const Options& opt, const std::string& text) {
    if (opt.out_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.out_file);
    out << text;
}

int run_verify(const Options& opt) {
    auto lg = load_graph(opt.graph_file);
    auto rep = verify(lg.graph, lg.labelling, kind_from_options(lg.graph, opt));
    emit(report_to_json(rep), opt.json_out, rep.summary());
    return rep.pass ? exit_ok : exit_verification_failed;
}

int run_construct(const Options& opt) {
    auto dump = [&](const LabelledGraph& lg) {
        if (opt.emit_dot)
            write_or_print(opt, to_dot(lg));
        else
            write_or_print(opt, serialize(lg));
        return (!lg.certificate || lg.certificate->pass) ? exit_ok : exit_verification_failed;
    };
    if (opt.what == "caterpillar-odd-graceful")
        return dump(caterpillar_set_ordered_odd_graceful(load_graph(opt.graph_file).graph));
    if (opt.what == "six-c") {
        auto lg = load_graph(opt.graph_file);
        return dump(sixC_from_set_ordered_graceful(lg.graph, lg.labelling, opt.odd_even));
    }
    if (opt.what == "ten") {
        auto lg = load_graph(opt.graph_file);
        auto derived = derive_ten_labellings(lg.graph, lg.labelling);
        json j = json::array();
        for (const auto& d : derived) {
            json dj;
            dj["kind"] = kind_name(d.kind);
            if (d.magic_constant) dj["magic_constant"] = *d.magic_constant;
            dj["graph"] = json::parse(serialize(d.labelled));
            j.push_back(dj);
        }
        write_or_print(opt, j.dump(2) + "\n");
        return exit_ok;
    }
    if (opt.what == "team") {
        auto team = matching_team(load_graph(opt.graph_file).graph);
        auto cert = verify_team(team);
        json j;
        j["members"] = static_cast<int>(team.members.size());
        j["pass"] = cert.pass;
        j["perfect"] = cert.perfect;
        emit(j, true, "");
        return cert.pass ? exit_ok : exit_verification_failed;
    }
    if (opt.what == "star-coloring") return dump(star_total_coloring(opt.n));
    if (opt.what == "bistar-coloring") return dump(bistar_total_coloring(opt.m, opt.n));
    if (opt.what == "spider-coloring")
        return dump(spider_total_coloring(load_graph(opt.graph_file).graph));
    if (opt.what == "tree-coloring")
        return dump(tree_equitable_total_coloring(load_graph(opt.graph_file).graph));
    if (opt.what == "complete-vset") {
        auto res = complete_graph_vset_graceful(
            opt.n, opt.flavor == "odd" ? TotalSetFlavor::odd_graceful : TotalSetFlavor::graceful);
        json j;
        j["n"] = opt.n;
        json sets = json::array();
        for (const auto& s : res.sets.vertex_sets) sets.push_back(*s);
        j["vertex_sets"] = sets;
        j["edge_labels"] = res.edge_labels.edge_labels();
        write_or_print(opt, j.dump(2) + "\n");
        return exit_ok;
    }
    fail(Errc::unknown_family, "unknown construction '" + opt.what + "'");
}

int run_search(const Options& opt) {
    auto lg = load_graph(opt.graph_file);
    SearchBudget budget;
    budget.time_limit_seconds = opt.max_seconds;
    auto kind = kind_from_options(lg.graph, opt);
    auto found = enumerate_labellings(lg.graph, kind, budget, opt.jobs);
    if (opt.emit_mode == "count") {
        json j;
        j["count"] = static_cast<int>(found.size());
        emit(j, opt.json_out, std::to_string(found.size()));
        return exit_ok;
    }
    if (opt.emit_mode == "first") {
        if (found.empty()) {
            emit(json{{"found", false}}, opt.json_out, "none");
            return exit_verification_failed;
        }
        write_or_print(opt, serialize(LabelledGraph{lg.graph, found.front(), std::nullopt}));
        return exit_ok;
    }
    json j = json::array();
    for (const auto& f : found) j.push_back(json::parse(serialize(LabelledGraph{lg.graph, f, std::nullopt})));
    write_or_print(opt, j.dump(2) + "\n");
    return exit_ok;
}

int run_extremal(const Options& opt) {
    Objective obj = opt.objective == "felicitous-sum" ? Objective::felicitous_sum()
                                                      : Objective::difference_sum();
    Direction dir = opt.mode == "max" ? Direction::max : Direction::min;
    json j;
    if (opt.method == "closed") {
        Family fam = opt.family == "complete" ? Family::complete(opt.param)
                     : opt.family == "path"   ? Family::path(opt.param)
                                              : Family::star(opt.param);
        long long value = closed_form(fam, dir);
        j["family"] = opt.family;
        j["param"] = opt.param;
        j["value"] = value;
        j["method"] = "closed_form";
        j["certified"] = true;
        emit(j, opt.json_out,
             opt.family + "(" + std::to_string(opt.param) + ") " + opt.mode + " = " +
                 std::to_string(value));
        return exit_ok;
    }
    auto lg = load_graph(opt.graph_file);
    ExtremalResult res;
    if (opt.method == "brute")
        res = brute_force_extremal(lg.graph, obj, dir);
    else if (opt.method == "local")
        res = local_search_extremal(lg.graph, obj, dir, opt.restarts, opt.seed);
    else if (opt.method == "caterpillar")
        res = caterpillar_min_sum(lg.graph);
    else
        fail(Errc::unknown_family, "unknown extremal method '" + opt.method + "'");
    j["p"] = lg.graph.p();
    j["value"] = res.value;
    j["method"] = opt.method;
    j["certified"] = res.optimal;
    j["labelling"] = json::parse(serialize(LabelledGraph{lg.graph, res.labelling, std::nullopt}));
    std::ostringstream table;
    table << "p=" << lg.graph.p() << " " << opt.mode << " " << opt.objective << " = " << res.value
          << " (" << opt.method << (res.optimal ? ", certified" : "") << ")";
    emit(j, opt.json_out, table.str());
    return exit_ok;
}

int run_compose(const Options& opt) {
    std::vector<LabelledGraph> parts;
    std::stringstream ss(opt.parts_csv);
    std::string path;
    while (std::getline(ss, path, ','))
        if (!path.empty()) parts.push_back(load_graph(path));
    auto partition = compose(parts);
    if (!opt.out_file.empty()) {
        write_or_print(opt, serialize(partition));
        return exit_ok;
    }
    json j;
    j["mode"] = partition_mode_name(partition.mode);
    j["k"] = partition.k;
    j["universal"] = json::parse(serialize(partition.universal));
    emit(j, true, "");
    return exit_ok;
}

int run_matrix(const Options& opt) {
    auto lg = load_graph(opt.graph_file);
    auto m = to_matrix(lg, opt.matrix_order == "endpoints" ? MatrixOrder::by_endpoints
                                                           : MatrixOrder::by_edge_label);
    json j;
    j["X"] = m.X;
    j["W"] = m.W;
    j["Y"] = m.Y;
    if (opt.traversal == "serpentine")
        j["text"] = matrix_serpentine_text(m, Traversal::column_serpentine).text;
    else
        j["text"] = matrix_serpentine_text(m, Traversal::row_major).text;
    std::ostringstream os;
    for (const auto* row : {&m.X, &m.W, &m.Y}) {
        for (size_t i = 0; i < row->size(); ++i) os << (i ? " " : "") << (*row)[i];
        os << "\n";
    }
    os << "text: " << j["text"].get<std::string>();
    emit(j, opt.json_out, os.str());
    return exit_ok;
}

int run_password(const Options& opt) {
    if (opt.scheme == "concat") {
        std::vector<PasswordString> parts;
        std::stringstream ss(opt.parts_csv);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) parts.push_back({item, "raw"});
        std::vector<int> order = parse_int_list(opt.order_csv);
        if (order.empty())
            for (int i = 1; i <= static_cast<int>(parts.size()); ++i) order.push_back(i);
        auto pw = concat_passwords(parts, order);
        emit(json{{"text", pw.text}}, opt.json_out, pw.text);
        return exit_ok;
    }
    auto lg = load_graph(opt.graph_file);
    auto walk = parse_int_list(opt.walk_csv);
    auto pw = derive_password_walk(lg, walk,
                                   opt.scheme == "vev" ? WalkScheme::vev : WalkScheme::vv,
                                   opt.marks);
    emit(json{{"text", pw.text}, {"scheme", pw.scheme}}, opt.json_out, pw.text);
    return exit_ok;
}

int run_group(const Options& opt) {
    if (!opt.op_args.empty()) {
        if (opt.op_args.size() != 3) fail(Errc::index_out_of_range, "--op needs i j k");
        int r = group_op(opt.op_args[0], opt.op_args[1], opt.op_args[2], opt.n);
        emit(json{{"result", r}}, opt.json_out, std::to_string(r));
        return exit_ok;
    }
    if (opt.do_verify) {
        GraphicGroup gp{{path_graph(2), vertex_labelling(path_graph(2), {0, 1}), std::nullopt},
                        opt.n,
                        false};
        if (!opt.graph_file.empty()) gp.base = load_graph(opt.graph_file);
        auto rep = verify_group(gp);
        json j{{"pass", rep.pass},
               {"closure", rep.closure},
               {"associativity", rep.associativity},
               {"identity", rep.identity},
               {"inverses", rep.inverses},
               {"commutativity", rep.commutativity}};
        emit(j, opt.json_out, rep.pass ? "group axioms hold for every zero" : "axioms FAIL");
        return rep.pass ? exit_ok : exit_verification_failed;
    }
    if (!opt.network_file.empty()) {
        auto net = load_graph(opt.network_file);
        GraphicGroup gp{load_graph(opt.graph_file), opt.n, false};
        auto assign = parse_int_list(opt.assign_csv);
        auto enc = encrypt_network(net.graph, gp, assign, opt.zero);
        json j;
        j["vertex_elements"] = enc.vertex_element;
        j["edge_elements"] = enc.edge_element;
        emit(j, opt.json_out, j.dump());
        return exit_ok;
    }
    fail(Errc::unknown_family, "group needs --op, --verify or --network");
}

int run_partition_solve(const Options& opt) {
    auto kind = partition_kind_from_name(opt.partition_kind);
    if (!kind) fail(Errc::unknown_family, "unknown partition kind '" + opt.partition_kind + "'");
    SearchBudget budget;
    budget.time_limit_seconds = opt.max_seconds;
    auto sols = solve_set_partition({*kind, opt.p, opt.q}, budget);
    if (opt.emit_mode == "count") {
        emit(json{{"count", static_cast<int>(sols.size())}}, opt.json_out,
             std::to_string(sols.size()));
        return exit_ok;
    }
    json j = json::array();
    for (const auto& s : sols) {
        json sj;
        sj["V"] = s.V;
        sj["E"] = s.E;
        for (auto& [name, value] : s.constants) sj["constants"][name] = value;
        if (!s.ev.empty()) {
            json ev = json::array();
            for (auto& t : s.ev) ev.push_back(json::array({t[0], t[1], t[2]}));
            sj["ev_matchings"] = ev;
        }
        j.push_back(sj);
    }
    std::cout << j.dump(2) << "\n";
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"topolab: labelled-graph verification, construction and search"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json_out, "machine-readable output");

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--graph", opt.graph_file, "labelled graph JSON file");
        sub->add_option("--out", opt.out_file, "output file (default stdout)");
        sub->add_flag("--emit-dot", opt.emit_dot, "emit DOT instead of JSON");
    };

    auto* verify_cmd = app.add_subcommand("verify", "check a labelling against a definition");
    add_common(verify_cmd);
    verify_cmd->add_option("--kind", opt.kind_name, "labelling kind")->required();
    verify_cmd->add_option("--shift", opt.shift, "k for k-sequential kinds");
    verify_cmd->add_option("--paired", opt.paired_file, "paired labelling for ve-exchanged");
    verify_cmd->add_option("--parts", opt.parts_csv, "0/1 per edge for twin kinds");
    verify_cmd->add_flag("--strict", opt.strict, "strict twin ranges");

    auto* construct_cmd = app.add_subcommand("construct", "run a constructive generator");
    add_common(construct_cmd);
    construct_cmd->add_option("--what", opt.what, "construction name")->required();
    construct_cmd->add_option("--n", opt.n, "size parameter");
    construct_cmd->add_option("--m", opt.m, "second size parameter");
    construct_cmd->add_option("--flavor", opt.flavor, "graceful|odd");
    construct_cmd->add_flag("--odd-even", opt.odd_even, "odd-even separable 6C variant");

    auto* search_cmd = app.add_subcommand("search", "exhaustive labelling enumeration");
    add_common(search_cmd);
    search_cmd->add_option("--kind", opt.kind_name, "labelling kind")->required();
    search_cmd->add_option("--shift", opt.shift, "k for k-sequential kinds");
    search_cmd->add_option("--paired", opt.paired_file, "paired labelling for ve-exchanged");
    search_cmd->add_option("--parts", opt.parts_csv, "0/1 per edge for twin kinds");
    search_cmd->add_option("--max-seconds", opt.max_seconds, "time budget");
    search_cmd->add_option("--emit", opt.emit_mode, "all|count|first");
    search_cmd->add_option("--jobs", opt.jobs, "parallel blocks");

    auto* extremal_cmd = app.add_subcommand("extremal", "difference/felicitous sum optimization");
    add_common(extremal_cmd);
    extremal_cmd->add_option("--objective", opt.objective, "diff-sum|felicitous-sum");
    extremal_cmd->add_option("--mode", opt.mode, "min|max");
    extremal_cmd->add_option("--method", opt.method, "brute|local|caterpillar|closed");
    extremal_cmd->add_option("--family", opt.family, "complete|path|star (closed form)");
    extremal_cmd->add_option("--param", opt.param, "family parameter");
    extremal_cmd->add_option("--restarts", opt.restarts, "local search restarts");
    extremal_cmd->add_option("--seed", opt.seed, "deterministic seed");

    auto* compose_cmd = app.add_subcommand("compose", "identify parts into a partition");
    add_common(compose_cmd);
    compose_cmd->add_option("--parts", opt.parts_csv, "comma-separated part files")->required();

    auto* matrix_cmd = app.add_subcommand("matrix", "canonical 3xq matrix encoding");
    add_common(matrix_cmd);
    matrix_cmd->add_option("--order", opt.matrix_order, "edge-label|endpoints");
    matrix_cmd->add_option("--traversal", opt.traversal, "serpentine|rowmajor");

    auto* password_cmd = app.add_subcommand("password", "text password derivation");
    add_common(password_cmd);
    password_cmd->add_option("--scheme", opt.scheme, "vv|vev|concat")->required();
    password_cmd->add_option("--parts", opt.parts_csv, "parts for concat");
    password_cmd->add_option("--order", opt.order_csv, "concatenation order");
    password_cmd->add_option("--walk", opt.walk_csv, "walk vertices for vv/vev");
    password_cmd->add_flag("--marks", opt.marks, "prime-mark the walk vertices");

    auto* group_cmd = app.add_subcommand("group", "every-zero graphic groups");
    add_common(group_cmd);
    group_cmd->add_option("--n", opt.n, "modulus")->required();
    group_cmd->add_option("--op", opt.op_args, "i j k")->expected(3);
    group_cmd->add_flag("--verify", opt.do_verify, "check the axioms for every zero");
    group_cmd->add_option("--network", opt.network_file, "network to encrypt");
    group_cmd->add_option("--assign", opt.assign_csv, "element index per network vertex");
    group_cmd->add_option("--zero", opt.zero, "zero element index");

    auto* solve_cmd = app.add_subcommand("partition-solve", "Set-1..Set-9 brute solvers");
    solve_cmd->add_option("--kind", opt.partition_kind, "partition kind")->required();
    solve_cmd->add_option("--p", opt.p, "p parameter")->required();
    solve_cmd->add_option("--q", opt.q, "q parameter")->required();
    solve_cmd->add_option("--max-seconds", opt.max_seconds, "time budget");
    solve_cmd->add_option("--emit", opt.emit_mode, "all|count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? exit_ok : exit_usage;
    }

    try {
        if (verify_cmd->parsed()) return run_verify(opt);
        if (construct_cmd->parsed()) return run_construct(opt);
        if (search_cmd->parsed()) return run_search(opt);
        if (extremal_cmd->parsed()) return run_extremal(opt);
        if (compose_cmd->parsed()) return run_compose(opt);
        if (matrix_cmd->parsed()) return run_matrix(opt);
        if (password_cmd->parsed()) return run_password(opt);
        if (group_cmd->parsed()) return run_group(opt);
        if (solve_cmd->parsed()) return run_partition_solve(opt);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        if (e.code() == Errc::budget_exceeded) return exit_budget;
        if (e.code() == Errc::parse_error || e.code() == Errc::unknown_family) return exit_usage;
        return exit_verification_failed;
    }
    return exit_usage;
}
