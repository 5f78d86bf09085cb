// radokit: command-line front end for the library.  Exit codes: 0 success,
// 1 property/verification failure, 2 usage error, 3 search bound exhausted.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "rado/constructions.hpp"
#include "rado/core.hpp"
#include "rado/fraisse.hpp"
#include "rado/groups.hpp"
#include "rado/isoengine.hpp"
#include "rado/logic.hpp"
#include "rado/transform.hpp"

using namespace rado;
using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

VertexSet parse_vertex_set(const std::string& csv) {
    VertexSet out;
    std::istringstream is(csv);
    std::string tok;
    while (std::getline(is, tok, ','))
        if (!tok.empty()) out.insert(Vertex(tok));
    return out;
}

std::vector<std::pair<Vertex, Vertex>> parse_pairs(const std::string& text) {
    std::vector<std::pair<Vertex, Vertex>> out;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        auto colon = tok.find(':');
        if (colon == std::string::npos)
            throw UsageError("pair list entries look like u:v");
        out.emplace_back(Vertex(tok.substr(0, colon)), Vertex(tok.substr(colon + 1)));
    }
    return out;
}

OraclePtr oracle_for(const std::string& selector) {
    try {
        return make_by_name(selector);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

UniversalSequence sequence_for(const std::string& selector) {
    if (selector == "concat") return UniversalSequence::concatenation();
    if (selector.rfind("rand:", 0) == 0)
        return UniversalSequence::seeded(std::stoull(selector.substr(5)));
    throw UsageError("sequence selector is concat or rand:<seed>");
}

ClassSpec class_for(const std::string& text) {
    try {
        return ClassSpec::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad class spec: ") + e.what());
    }
}

FiniteGraph graph_from_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    std::string text = ss.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return FiniteGraph::from_json(text);
    return FiniteGraph::from_edge_list(text);
}

void print_graph(const FiniteGraph& g, const std::string& format) {
    if (format == "edges" || format == "text") std::cout << g.to_edge_list();
    else if (format == "dot") std::cout << g.to_dot();
    else if (format == "json") std::cout << g.to_json() << "\n";
    else throw UsageError("format is edges, dot or json");
}

void emit(const json& j, const std::string& format, const std::string& text) {
    if (format == "json") std::cout << j.dump() << "\n";
    else std::cout << text;
}

std::string vertex_str(const Vertex& v) { return v.str(); }

FormulaPtr sentence_for(const std::string& inline_text, const std::string& file) {
    std::string text = inline_text;
    if (!file.empty()) {
        std::ifstream f(file);
        if (!f) throw UsageError("cannot read " + file);
        std::stringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    if (text.empty()) throw UsageError("no sentence given");
    try {
        return parse_sentence(text);
    } catch (const ParseError& e) {
        throw UsageError("parse error at position " + std::to_string(e.position) +
                         ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::vector<FiniteGraph> family_from_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    json j = json::parse(f, nullptr, false);
    if (j.is_discarded() || !j.contains("graphs"))
        throw UsageError("family file is JSON {\"graphs\":[{\"n\":..,\"edges\":[..]},..]}");
    std::vector<FiniteGraph> out;
    for (const auto& item : j["graphs"]) {
        FiniteGraph g(item.at("n").get<std::size_t>());
        for (const auto& e : item.at("edges"))
            g.set_edge(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
        out.push_back(std::move(g));
    }
    return out;
}

int witness_exit(const WitnessResult& r) {
    switch (r.status) {
        case WitnessStatus::found: return 0;
        case WitnessStatus::unsatisfiable: return 1;
        default: return 3;
    }
}

json witness_json(const WitnessResult& r) {
    json j;
    switch (r.status) {
        case WitnessStatus::found:
            j["status"] = "found";
            j["vertex"] = vertex_str(r.vertex);
            break;
        case WitnessStatus::unsatisfiable: j["status"] = "unsatisfiable"; break;
        default: j["status"] = "exhausted"; break;
    }
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

json extension_json(const ExtensionReport& r) {
    return json{{"queries", r.outcomes.size()},
                {"passed", r.passed},
                {"failed", r.failed},
                {"exhausted", r.exhausted}};
}

int extension_exit(const ExtensionReport& r) {
    if (r.failed) return 1;
    if (r.exhausted) return 3;
    return 0;
}

json map_json(const PartialMap& m) {
    json pairs = json::array();
    for (const auto& [x, y] : m.pairs)
        pairs.push_back({vertex_str(x), vertex_str(y)});
    return pairs;
}

int map_result(const ExtendResult& r, const std::string& format) {
    json j;
    j["status"] = r.status == WitnessStatus::found
                      ? "found"
                      : (r.status == WitnessStatus::unsatisfiable ? "unsatisfiable"
                                                                  : "exhausted");
    j["pairs"] = map_json(r.map);
    if (!r.detail.empty()) j["detail"] = r.detail;
    std::ostringstream text;
    for (const auto& [x, y] : r.map.pairs)
        text << vertex_str(x) << " -> " << vertex_str(y) << "\n";
    if (!r.ok()) text << j["status"].get<std::string>() << ": " << r.detail << "\n";
    emit(j, format, text.str());
    switch (r.status) {
        case WitnessStatus::found: return 0;
        case WitnessStatus::unsatisfiable: return 1;
        default: return 3;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"procedures on the countable random graph"};
    app.require_subcommand(1);
    int rc = 0;

    // shared flag storage
    std::string graph = "bit", g2 = "bit", format = "text";
    std::string u_csv, v_csv, x_csv, del_csv, flip_csv, cls = "Kn:3";
    std::string sentence, sentence_file, graph_file, family_file, s1 = "concat",
                s2 = "concat", group = "z", a_csv = "0";
    std::size_t n = 16, rounds = 16, steps = 5, msize = 3, pool = 10, parts = 2;
    std::size_t samples = 100, henson = 0, msig = 1, nsig = 1;
    std::uint64_t bound = 1000000, scan_cap = 1 << 16, seed = 0, prefix = 500;
    std::uint64_t clique_bound = 10000000, sqrt_bound = 1024, seq_bound = 256;
    double p = 0.5;
    bool spanning = false, do_translate = false, no_distinct = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format (text|json, plus edges|dot for graphs)");
    };

    // --- construct ---------------------------------------------------------
    auto* c_construct = app.add_subcommand("construct", "instantiate a graph oracle");
    c_construct->add_option("--graph", graph, "graph selector")->required();
    add_format(c_construct);
    c_construct->callback([&] {
        auto o = oracle_for(graph);
        emit(json{{"name", o->name()}}, format, o->name() + "\n");
    });

    // --- truncate ----------------------------------------------------------
    auto* c_trunc = app.add_subcommand("truncate", "finite truncation on vertices 0..n-1");
    c_trunc->add_option("--graph", graph)->required();
    c_trunc->add_option("--n", n, "vertex count");
    add_format(c_trunc);
    c_trunc->callback([&] { print_graph(truncate(*oracle_for(graph), n), format); });

    // --- witness -----------------------------------------------------------
    auto* c_wit = app.add_subcommand("witness", "find z joined to all of U, none of V");
    c_wit->add_option("--graph", graph)->required();
    c_wit->add_option("--u", u_csv, "comma-separated U");
    c_wit->add_option("--v", v_csv, "comma-separated V");
    c_wit->add_option("--excluded", x_csv, "comma-separated exclusions");
    c_wit->add_option("--bound", bound);
    add_format(c_wit);
    c_wit->callback([&] {
        WitnessQuery q{parse_vertex_set(u_csv), parse_vertex_set(v_csv),
                       parse_vertex_set(x_csv)};
        auto r = oracle_for(graph)->witness(q, bound);
        std::string text = r.ok() ? vertex_str(r.vertex) + "\n"
                                  : witness_json(r)["status"].get<std::string>() +
                                        (r.detail.empty() ? "" : ": " + r.detail) + "\n";
        emit(witness_json(r), format, text);
        rc = witness_exit(r);
    });

    // --- extcheck ----------------------------------------------------------
    auto* c_ext = app.add_subcommand("extcheck", "verify the extension property on a pool");
    c_ext->add_option("--graph", graph)->required();
    c_ext->add_option("--pool", pool, "pool is 0..pool-1");
    c_ext->add_option("--size", msize, "max |U|+|V|");
    c_ext->add_option("--bound", bound);
    add_format(c_ext);
    c_ext->callback([&] {
        std::vector<Vertex> pv;
        for (std::size_t i = 0; i < pool; ++i) pv.push_back(i);
        auto r = verify_extension(*oracle_for(graph), pv, msize, bound);
        std::ostringstream text;
        text << r.passed << " passed, " << r.failed << " failed, " << r.exhausted
             << " exhausted\n";
        emit(extension_json(r), format, text.str());
        rc = extension_exit(r);
    });

    // --- iso ---------------------------------------------------------------
    auto* c_iso = app.add_subcommand("iso", "back-and-forth partial isomorphism");
    c_iso->add_option("--g1", graph)->required();
    c_iso->add_option("--g2", g2)->required();
    c_iso->add_option("--rounds", rounds);
    c_iso->add_option("--bound", bound);
    c_iso->add_option("--scan-cap", scan_cap);
    add_format(c_iso);
    c_iso->callback([&] {
        rc = map_result(
            back_and_forth(*oracle_for(graph), *oracle_for(g2), rounds, bound, scan_cap),
            format);
    });

    // --- embed -------------------------------------------------------------
    auto* c_embed = app.add_subcommand("embed", "embed src into tgt (induced or spanning)");
    c_embed->add_option("--src", graph)->required();
    c_embed->add_option("--tgt", g2)->required();
    c_embed->add_option("--n", n, "source vertices 0..n-1 (induced mode)");
    c_embed->add_option("--rounds", rounds, "rounds (spanning mode)");
    c_embed->add_flag("--spanning", spanning, "spanning bijection prefix instead");
    c_embed->add_option("--bound", bound);
    c_embed->add_option("--scan-cap", scan_cap);
    add_format(c_embed);
    c_embed->callback([&] {
        auto src = oracle_for(graph), tgt = oracle_for(g2);
        auto r = spanning ? spanning_embed(*src, *tgt, rounds, bound, scan_cap)
                          : forth_embed(*src, *tgt, n, bound, scan_cap);
        rc = map_result(r, format);
    });

    // --- clique ------------------------------------------------------------
    auto* c_clique = app.add_subcommand("clique", "greedy maximal clique");
    c_clique->add_option("--graph", graph)->required();
    c_clique->add_option("--steps", steps);
    c_clique->add_option("--scan-bound", clique_bound);
    add_format(c_clique);
    c_clique->callback([&] {
        auto r = greedy_maximal_clique(*oracle_for(graph), steps, clique_bound);
        json verts = json::array();
        std::ostringstream text;
        for (std::size_t i = 0; i < r.vertices.size(); ++i) {
            verts.push_back(vertex_str(r.vertices[i]));
            text << (i ? " " : "") << vertex_str(r.vertices[i]);
        }
        text << "\n";
        emit(json{{"vertices", verts}, {"exhausted", r.exhausted}}, format, text.str());
        if (r.exhausted) rc = 3;
    });

    // --- switch ------------------------------------------------------------
    auto* c_switch = app.add_subcommand("switch", "switch a graph about a vertex set");
    c_switch->add_option("--graph", graph)->required();
    c_switch->add_option("--set", x_csv, "switching set")->required();
    c_switch->add_option("--n", n, "truncation size to print");
    add_format(c_switch);
    c_switch->callback([&] {
        auto o = switch_graph(oracle_for(graph), parse_vertex_set(x_csv));
        print_graph(truncate(*o, n), format);
    });

    // --- edit --------------------------------------------------------------
    auto* c_edit = app.add_subcommand("edit", "delete vertices, flip edges, switch");
    c_edit->add_option("--graph", graph)->required();
    c_edit->add_option("--delete", del_csv, "vertices to delete");
    c_edit->add_option("--flip", flip_csv, "edge pairs u:v to flip");
    c_edit->add_option("--switch", x_csv, "switching set");
    c_edit->add_option("--n", n, "truncation size to print");
    add_format(c_edit);
    c_edit->callback([&] {
        EditSet e{parse_vertex_set(del_csv),
                  flip_csv.empty() ? std::vector<std::pair<Vertex, Vertex>>{}
                                   : parse_pairs(flip_csv),
                  parse_vertex_set(x_csv)};
        auto o = edit(oracle_for(graph), std::move(e));
        print_graph(truncate(*o, n), format);
    });

    // --- pigeonhole --------------------------------------------------------
    auto* c_pig = app.add_subcommand("pigeonhole", "which residue class induces the graph");
    c_pig->add_option("--graph", graph)->required();
    c_pig->add_option("--parts", parts, "colour by vertex mod parts");
    c_pig->add_option("--pool", pool);
    c_pig->add_option("--size", msize);
    c_pig->add_option("--bound", bound);
    add_format(c_pig);
    c_pig->callback([&] {
        std::size_t m = parts;
        auto part = pigeonhole_probe(
            oracle_for(graph),
            [m](const Vertex& v) { return (v % m).convert_to<std::size_t>(); },
            parts, pool, msize, bound);
        json j{{"found", part.has_value()}};
        if (part) j["part"] = *part;
        emit(j, format, part ? std::to_string(*part) + "\n" : "none\n");
        if (!part) rc = 3;
    });

    // --- logic -------------------------------------------------------------
    auto* c_logic = app.add_subcommand("logic", "first-order sentences");
    c_logic->require_subcommand(1);
    auto add_sentence = [&](CLI::App* cmd) {
        cmd->add_option("--sentence", sentence, "sentence text");
        cmd->add_option("--sentence-file", sentence_file, "file with the sentence");
    };

    auto* l_parse = c_logic->add_subcommand("parse", "parse and reprint");
    add_sentence(l_parse);
    add_format(l_parse);
    l_parse->callback([&] {
        auto f = sentence_for(sentence, sentence_file);
        emit(json{{"sentence", print(*f)}}, format, print(*f) + "\n");
    });

    auto* l_eval = c_logic->add_subcommand("eval", "evaluate over a finite graph");
    add_sentence(l_eval);
    l_eval->add_option("--graph-file", graph_file, "edge-list or JSON graph file");
    l_eval->add_option("--graph", graph, "oracle selector (with --n)");
    l_eval->add_option("--n", n, "truncation size for --graph");
    add_format(l_eval);
    l_eval->callback([&] {
        auto f = sentence_for(sentence, sentence_file);
        FiniteGraph g = graph_file.empty() ? truncate(*oracle_for(graph), n)
                                           : graph_from_file(graph_file);
        bool val = eval_finite(*f, g);
        emit(json{{"value", val}}, format, val ? "true\n" : "false\n");
    });

    auto* l_decide = c_logic->add_subcommand("decide", "truth in the countable limit");
    add_sentence(l_decide);
    add_format(l_decide);
    l_decide->callback([&] {
        auto f = sentence_for(sentence, sentence_file);
        bool val = decide_R(*f);
        emit(json{{"value", val}}, format, val ? "true\n" : "false\n");
    });

    auto* l_sigma = c_logic->add_subcommand("sigma", "the extension axiom sigma(m,n)");
    l_sigma->add_option("--m", msig);
    l_sigma->add_option("--n", nsig);
    l_sigma->add_flag("--no-distinct", no_distinct, "omit witness distinctness conjuncts");
    add_format(l_sigma);
    l_sigma->callback([&] {
        auto f = sigma(msig, nsig, !no_distinct);
        emit(json{{"sentence", print(*f)}}, format, print(*f) + "\n");
    });

    auto* l_zo = c_logic->add_subcommand("zeroone", "Monte-Carlo satisfaction rate on G(N,p)");
    add_sentence(l_zo);
    l_zo->add_option("--n", n, "vertex count N");
    l_zo->add_option("--samples", samples);
    l_zo->add_option("--seed", seed);
    l_zo->add_option("--p", p);
    add_format(l_zo);
    l_zo->callback([&] {
        auto f = sentence_for(sentence, sentence_file);
        double rate = mc_zero_one(*f, n, samples, seed, p);
        std::ostringstream text;
        text << rate << "\n";
        emit(json{{"rate", rate}}, format, text.str());
    });

    auto* l_hyper = c_logic->add_subcommand("hyper", "derived hypergraphs and translation");
    add_sentence(l_hyper);
    l_hyper->add_option("--family-file", family_file, "JSON {\"graphs\":[..]}")->required();
    l_hyper->add_option("--graph-file", graph_file, "base graph for evaluation");
    l_hyper->add_flag("--translate", do_translate, "print the graph-language translation");
    add_format(l_hyper);
    l_hyper->callback([&] {
        auto f = sentence_for(sentence, sentence_file);
        auto F = family_from_file(family_file);
        if (do_translate) {
            auto t = translate(*f, F);
            emit(json{{"sentence", print(*t)}}, format, print(*t) + "\n");
            return;
        }
        if (graph_file.empty()) throw UsageError("--graph-file or --translate required");
        auto h = derived_hypergraph(F, graph_from_file(graph_file));
        bool val = eval_hyper(*f, h);
        emit(json{{"value", val}, {"hyperedges", h.edges.size()}}, format,
             val ? "true\n" : "false\n");
    });

    // --- fraisse -----------------------------------------------------------
    auto* c_fraisse = app.add_subcommand("fraisse", "amalgamation classes and their limits");
    c_fraisse->require_subcommand(1);

    auto* f_check = c_fraisse->add_subcommand("check", "exhaustive amalgamation check");
    f_check->add_option("--class", cls, "Kn:<n> or JSON class spec");
    std::size_t member_bound = 4;
    f_check->add_option("--bound", member_bound, "member size bound");
    add_format(f_check);
    f_check->callback([&] {
        auto report = check_amalgamation(class_for(cls), member_bound);
        std::ostringstream text;
        text << report.checked << " checked, " << report.failures.size()
             << " failures, " << report.strong_failures.size()
             << " strong-only failures\n";
        emit(json{{"checked", report.checked},
                  {"failures", report.failures.size()},
                  {"strong_failures", report.strong_failures.size()}},
             format, text.str());
        if (!report.ok()) rc = 1;
    });

    auto* f_limit = c_fraisse->add_subcommand("limit", "truncate the limit oracle");
    f_limit->add_option("--class", cls);
    f_limit->add_option("--n", n, "truncation size");
    add_format(f_limit);
    f_limit->callback([&] {
        auto o = limit_oracle(class_for(cls));
        print_graph(truncate(*o, n), format);
    });

    auto* f_wit = c_fraisse->add_subcommand("witness", "witness in the limit");
    f_wit->add_option("--class", cls);
    f_wit->add_option("--u", u_csv);
    f_wit->add_option("--v", v_csv);
    f_wit->add_option("--excluded", x_csv);
    f_wit->add_option("--henson", henson, "guard against completing K_n");
    f_wit->add_option("--bound", bound);
    add_format(f_wit);
    f_wit->callback([&] {
        auto o = limit_oracle(class_for(cls));
        WitnessQuery q{parse_vertex_set(u_csv), parse_vertex_set(v_csv),
                       parse_vertex_set(x_csv)};
        auto r = henson ? henson_witness(*o, henson, q, bound) : o->witness(q, bound);
        std::string text = r.ok() ? vertex_str(r.vertex) + "\n"
                                  : witness_json(r)["status"].get<std::string>() +
                                        (r.detail.empty() ? "" : ": " + r.detail) + "\n";
        emit(witness_json(r), format, text);
        rc = witness_exit(r);
    });

    // --- groups ------------------------------------------------------------
    auto* c_groups = app.add_subcommand("groups", "Cayley graphs and sum-free sets");
    c_groups->require_subcommand(1);
    auto group_for = [&]() {
        if (group == "z") return GroupSpec::integers();
        if (group == "z2") return GroupSpec::integer_pairs();
        throw UsageError("group is z or z2");
    };

    auto* g_cayley = c_groups->add_subcommand("cayley", "random Cayley graph truncation");
    g_cayley->add_option("--group", group, "z or z2");
    g_cayley->add_option("--seed", seed);
    g_cayley->add_option("--n", n, "truncation size");
    add_format(g_cayley);
    g_cayley->callback([&] {
        auto o = cayley_oracle(group_for(), seed);
        print_graph(truncate(*o, n), format);
    });

    auto* g_sqrt = c_groups->add_subcommand("sqrt", "square-root set of an element");
    g_sqrt->add_option("--group", group);
    g_sqrt->add_option("--a", a_csv, "element coordinates, comma-separated")->required();
    g_sqrt->add_option("--bound", sqrt_bound, "enumeration bound");
    add_format(g_sqrt);
    g_sqrt->callback([&] {
        auto g = group_for();
        GroupElement a;
        std::istringstream is(a_csv);
        std::string tok;
        while (std::getline(is, tok, ',')) a.push_back(Vertex(tok));
        if (a.size() != g.arity()) throw UsageError("element arity does not match the group");
        auto roots = sqrt_set(g, a, sqrt_bound);
        json jr = json::array();
        std::ostringstream text;
        for (const auto& r : roots) {
            jr.push_back(element_to_string(r));
            text << element_to_string(r) << "\n";
        }
        emit(json{{"roots", jr}}, format, roots.empty() ? "(empty)\n" : text.str());
    });

    auto* g_sumfree = c_groups->add_subcommand("sumfree", "random sum-free set report");
    g_sumfree->add_option("--seed", seed);
    g_sumfree->add_option("--prefix", prefix);
    add_format(g_sumfree);
    g_sumfree->callback([&] {
        SumFreeSet s(seed);
        auto members = s.members_upto(prefix);
        auto report = triangle_report(members, prefix);
        json j{{"prefix", prefix},
               {"set", members},
               {"all_odd", report.all_odd},
               {"triangle_free", !report.triangle}};
        std::ostringstream text;
        for (std::size_t i = 0; i < members.size(); ++i)
            text << (i ? " " : "") << members[i];
        text << "\nall_odd=" << (report.all_odd ? "true" : "false")
             << " triangle_free=" << (!report.triangle ? "true" : "false") << "\n";
        emit(j, format, text.str());
    });

    auto* g_cyclic = c_groups->add_subcommand("cyclic", "compare cyclic-automorphism sets");
    g_cyclic->add_option("--s1", s1, "concat or rand:<seed>");
    g_cyclic->add_option("--s2", s2, "concat or rand:<seed>");
    g_cyclic->add_option("--bound", seq_bound);
    add_format(g_cyclic);
    g_cyclic->callback([&] {
        auto r = cyclic_conjugacy(sequence_for(s1), sequence_for(s2), seq_bound);
        json j{{"equal", r.equal}};
        if (!r.equal) j["differ_at"] = r.differ_at;
        emit(j, format,
             r.equal ? "equal\n" : "differ-at " + std::to_string(r.differ_at) + "\n");
    });

    format = "text";
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
