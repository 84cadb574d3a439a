/*
   Copyright 2026 The gkmcoh Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gkm/gkm.hpp"

namespace {

using namespace gkm;

constexpr unsigned kDefaultDegreeCap = 3;

unsigned degree_cap_default() {
    const char* env = std::getenv("GKMCOH_DEGREE_CAP");
    if (env == nullptr || *env == '\0') return kDefaultDegreeCap;
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end == nullptr || *end != '\0' || v > 64)
        throw ValidationError("GKMCOH_DEGREE_CAP must be a small non-negative integer");
    return static_cast<unsigned>(v);
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
}

LabeledGraph load_graph(const std::string& path) {
    return graph_from_json(parse_json(read_input(path)));
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<Rational> parse_rationals(const std::string& text) {
    std::vector<Rational> out;
    for (const std::string& tok : split_commas(text)) out.push_back(parse_rational(tok));
    return out;
}

void emit(const Json& payload) { std::cout << payload.dump(2) << "\n"; }

// gen accepts a prefix expression: cube N | simplex N | product A B | bruhat N
std::size_t parse_count(const std::vector<std::string>& toks, std::size_t& pos) {
    if (pos >= toks.size()) throw ValidationError("generator needs a size argument");
    const std::string& t = toks[pos++];
    for (char c : t)
        if (c < '0' || c > '9') throw ValidationError("bad size: " + t);
    return static_cast<std::size_t>(std::stoul(t));
}

PolytopeGraph parse_polytope(const std::vector<std::string>& toks, std::size_t& pos) {
    if (pos >= toks.size()) throw ValidationError("missing generator kind");
    const std::string kind = toks[pos++];
    if (kind == "cube") return hypercube_graph(parse_count(toks, pos));
    if (kind == "simplex") return simplex_graph(parse_count(toks, pos));
    if (kind == "product") {
        PolytopeGraph a = parse_polytope(toks, pos);
        PolytopeGraph b = parse_polytope(toks, pos);
        return product_graph(a, b);
    }
    throw ValidationError("unknown generator kind: " + kind);
}

LabeledGraph run_gen(const std::vector<std::string>& toks) {
    std::size_t pos = 0;
    LabeledGraph g = [&] {
        if (!toks.empty() && toks[0] == "bruhat") {
            pos = 1;
            return gen_bruhat(parse_count(toks, pos)).graph;
        }
        return parse_polytope(toks, pos).graph;
    }();
    if (pos != toks.size()) throw ValidationError("trailing generator arguments");
    return g;
}

std::set<std::string> id_set(const std::vector<std::string>& ids) {
    return {ids.begin(), ids.end()};
}

std::vector<std::string> default_order(const LabeledGraph& g, const LabeledGraph& sub) {
    std::vector<std::string> order;
    for (const std::string& id : g.vertex_ids())
        if (!sub.contains(id)) order.push_back(id);
    return order;
}

Json sequence_to_json(const SequenceExtension& seq) {
    Json out;
    out["ok"] = seq.ok();
    if (seq.ok()) out["result"] = class_to_json(*seq.result);
    if (seq.failed_at) out["failed_at"] = *seq.failed_at;
    if (seq.certificate) out["certificate"] = certificate_to_json(*seq.certificate);
    return out;
}

Json span_to_json(const SpanReport& r) {
    Json out;
    out["ok"] = r.ok;
    Json steps = Json::array();
    for (const SpanStep& s : r.steps) {
        Json js;
        js["added"] = s.added;
        js["ok"] = s.ok;
        if (s.failing_pair)
            js["failing_pair"] = Json::array({s.failing_pair->first,
                                              s.failing_pair->second});
        steps.push_back(std::move(js));
    }
    out["steps"] = std::move(steps);
    return out;
}

int cmd_gen(const std::vector<std::string>& tokens) {
    emit(graph_to_json(run_gen(tokens)));
    return 0;
}

int cmd_check_class(const std::string& gpath, const std::string& cpath) {
    LabeledGraph g = load_graph(gpath);
    GradedClass cls = class_from_json(parse_json(read_input(cpath)), g.nvars());
    ClassCheck cc = check_class(g, cls);
    emit(class_check_to_json(cc));
    std::cerr << (cc.ok ? "class: all edge divisibilities hold\n"
                        : "not a class: failing edge " + cc.failing_edge->src + " -- " +
                              cc.failing_edge->dst + "\n");
    return cc.ok ? 0 : 1;
}

int cmd_basis(const std::string& gpath, unsigned cap) {
    LabeledGraph g = load_graph(gpath);
    Json degrees = Json::array();
    for (unsigned d = 0; d <= cap; ++d) {
        std::vector<GradedClass> basis = cohomology_basis(g, d);
        Json jd;
        jd["degree"] = d;
        jd["dim"] = basis.size();
        Json elems = Json::array();
        for (const GradedClass& f : basis) elems.push_back(class_to_json(f));
        jd["basis"] = std::move(elems);
        degrees.push_back(std::move(jd));
    }
    Json out;
    out["max_degree"] = cap;
    out["degrees"] = std::move(degrees);
    emit(out);
    return 0;
}

int cmd_extend(const std::string& gpath, const std::string& sub_ids,
               const std::string& cpath, const std::string& order_ids, unsigned slack) {
    LabeledGraph g = load_graph(gpath);
    LabeledGraph sub = g.induced(id_set(split_commas(sub_ids)));
    GradedClass cls = class_from_json(parse_json(read_input(cpath)), g.nvars());
    std::vector<std::string> order =
        order_ids.empty() ? default_order(g, sub) : split_commas(order_ids);
    SequenceExtension seq = extend_sequence(g, sub, cls, order, slack);
    emit(sequence_to_json(seq));
    std::cerr << (seq.ok() ? "extension succeeded\n"
                           : "extension obstructed at " + *seq.failed_at + "\n");
    return seq.ok() ? 0 : 1;
}

int cmd_check_pair(const std::string& gpath, const std::string& vertex, unsigned cap,
                   unsigned slack) {
    LabeledGraph g = load_graph(gpath);
    LabeledGraph sub = g.minus(vertex);
    bool ok = cr_pair_upto(g, sub, cap, slack);
    Json out;
    out["vertex"] = vertex;
    out["max_degree"] = cap;
    out["cr_pair"] = ok;
    emit(out);
    std::cerr << "degree <= " << cap << ": every class "
              << (ok ? "extends\n" : "does not extend\n");
    return ok ? 0 : 1;
}

int cmd_surjective(const std::string& gpath, const std::string& sub_ids, unsigned cap) {
    LabeledGraph g = load_graph(gpath);
    LabeledGraph sub = g.induced(id_set(split_commas(sub_ids)));
    SurjectivityReport rep = surjective_upto(g, sub, cap);
    emit(surjectivity_to_json(rep));
    std::cerr << "restriction surjective up to degree " << cap << ": "
              << (rep.all_surjective() ? "yes" : "no") << "\n";
    return rep.all_surjective() ? 0 : 1;
}

int cmd_sweep(const std::string& gpath, const std::string& xi_text,
              const std::string& cutoff_text, unsigned cap) {
    PolytopeGraph g = PolytopeGraph::adopt(load_graph(gpath));
    LinearFunctional xi(parse_rationals(xi_text));
    Rational cutoff = parse_rational(cutoff_text);
    LabeledGraph sub = sublevel_subgraph(g, xi, cutoff);
    std::set<std::string> keep = id_set(sub.vertex_ids());
    std::vector<std::string> order = sweep_order(g, keep, xi);
    SweepReport sweep = sweep_check(g, keep, order);
    SurjectivityReport oracle = surjective_upto(g.graph, sub, cap);

    Json out;
    out["keep"] = sub.vertex_ids();
    out["order"] = order;
    out["sweep"] = sweep_to_json(sweep);
    out["oracle"] = surjectivity_to_json(oracle);
    bool consistent = !sweep.ok || oracle.all_surjective();
    out["consistent"] = consistent;
    emit(out);
    std::cerr << "sweep certificate: " << (sweep.ok ? "holds" : "fails")
              << "; oracle up to degree " << cap << ": "
              << (oracle.all_surjective() ? "surjective" : "not surjective") << "\n";
    return sweep.ok && oracle.all_surjective() ? 0 : 1;
}

int cmd_span_check(const std::string& gpath, const std::string& interval,
                   const std::string& order_ids) {
    LabeledGraph g = load_graph(gpath);
    auto colon = interval.find(':');
    if (colon == std::string::npos)
        throw ValidationError("interval must look like u:w");
    Permutation u = Permutation::parse(interval.substr(0, colon));
    Permutation w = Permutation::parse(interval.substr(colon + 1));
    if (!bruhat_leq(u, w)) throw PreconditionError("empty interval: u is not below w");

    std::set<std::string> keep;
    for (const std::string& id : g.vertex_ids()) {
        Permutation z = Permutation::parse(id);
        if (bruhat_leq(u, z) && bruhat_leq(z, w)) keep.insert(id);
    }
    LabeledGraph sub = g.induced(keep);
    std::vector<std::string> order;
    if (order_ids.empty()) {
        order = default_order(g, sub);
        std::sort(order.begin(), order.end(),
                  [](const std::string& a, const std::string& b) {
                      std::size_t la = Permutation::parse(a).length();
                      std::size_t lb = Permutation::parse(b).length();
                      if (la != lb) return la < lb;
                      return a < b;
                  });
    } else {
        order = split_commas(order_ids);
    }
    SpanReport rep = span_condition_check(g, sub, order);
    Json out;
    out["interval"] = interval;
    out["order"] = order;
    out["report"] = span_to_json(rep);
    emit(out);
    std::cerr << "span condition: " << (rep.ok ? "certified" : "not certified") << "\n";
    return rep.ok ? 0 : 1;
}

int cmd_counterexample_cube() {
    PolytopeGraph cube = hypercube_graph(3);
    const LabeledGraph& g = cube.graph;
    std::set<std::string> keep = {"000", "001", "011", "111", "110"};
    LabeledGraph sub = g.induced(keep);

    Polynomial x = Polynomial::variable(3, 0);
    Polynomial z = Polynomial::variable(3, 2);
    GradedClass cls;
    for (const std::string& id : sub.vertex_ids())
        cls.set(id, id == "110" ? x + z : x);

    ClassCheck cc = check_class(sub, cls);
    // walk the missing vertices in a fixed order so the reported witness is stable
    SequenceExtension seq = extend_sequence(g, sub, cls, {"010", "100", "101"});

    bool witness_verified = false;
    if (!seq.ok() && seq.certificate && seq.certificate->witness) {
        const PairWitness& w = *seq.certificate->witness;
        witness_verified =
            !ideal_member_linear({w.modulus_i, w.modulus_j}, w.difference);
    }

    Json out;
    out["graph"] = {{"vertices", g.vertex_count()},
                    {"edges", g.edge_count()},
                    {"two_faces", g.two_faces().size()}};
    out["sub_vertices"] = sub.vertex_ids();
    out["class"] = class_to_json(cls);
    out["is_class"] = cc.ok;
    out["extension"] = sequence_to_json(seq);
    out["witness_verified"] = witness_verified;
    emit(out);
    std::cerr << "class on the 5-vertex subgraph: "
              << (cc.ok ? "valid" : "invalid")
              << "; extension to the cube: "
              << (seq.ok() ? "succeeded (unexpected)" : "obstructed") << "\n";
    return seq.ok() ? 0 : 1;
}

int cmd_export_dot(const std::string& gpath) {
    std::cout << to_dot(load_graph(gpath));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph cohomology of labeled moment graphs: generators, class "
                 "checks, congruence solving, and surjectivity certificates"};
    app.require_subcommand(1);

    int exit_code = 0;
    std::string gpath = "-";
    std::string cpath, sub_ids, order_ids, vertex, xi_text, cutoff_text, interval;
    unsigned slack = 1;
    std::vector<std::string> gen_tokens;
    bool degree_given = false;
    unsigned degree = 0;

    auto add_graph_flag = [&](CLI::App* cmd) {
        cmd->add_option("-g,--graph", gpath, "graph JSON file, - for stdin");
    };
    auto add_degree_flag = [&](CLI::App* cmd) {
        cmd->add_option_function<unsigned>(
               "-d,--degree",
               [&](const unsigned& v) {
                   degree_given = true;
                   degree = v;
               },
               "max degree (default " + std::to_string(kDefaultDegreeCap) +
                   ", or GKMCOH_DEGREE_CAP)");
    };
    auto cap = [&]() { return degree_given ? degree : degree_cap_default(); };

    CLI::App* gen = app.add_subcommand("gen", "generate a graph: cube N | simplex N | "
                                              "product A B | bruhat N");
    gen->add_option("tokens", gen_tokens, "generator expression")->required();
    gen->callback([&] { exit_code = cmd_gen(gen_tokens); });

    CLI::App* chk = app.add_subcommand("check-class", "test whether a vertex "
                                                      "assignment is a class");
    add_graph_flag(chk);
    chk->add_option("-c,--class", cpath, "class JSON file")->required();
    chk->callback([&] { exit_code = cmd_check_class(gpath, cpath); });

    CLI::App* bas = app.add_subcommand("basis", "graded cohomology bases");
    add_graph_flag(bas);
    add_degree_flag(bas);
    bas->callback([&] { exit_code = cmd_basis(gpath, cap()); });

    CLI::App* ext = app.add_subcommand("extend", "extend a class from an induced "
                                                 "subgraph vertex by vertex");
    add_graph_flag(ext);
    ext->add_option("--sub", sub_ids, "comma-separated subgraph vertex ids")->required();
    ext->add_option("-c,--class", cpath, "class JSON file")->required();
    ext->add_option("--order", order_ids, "comma-separated completion order");
    ext->add_option("--slack", slack, "degree slack for dependent moduli");
    ext->callback([&] { exit_code = cmd_extend(gpath, sub_ids, cpath, order_ids, slack); });

    CLI::App* pair = app.add_subcommand("check-pair", "one-vertex Chinese remainder "
                                                      "pair check");
    add_graph_flag(pair);
    pair->add_option("--vertex", vertex, "the vertex to remove")->required();
    add_degree_flag(pair);
    pair->add_option("--slack", slack, "degree slack for dependent moduli");
    pair->callback([&] { exit_code = cmd_check_pair(gpath, vertex, cap(), slack); });

    CLI::App* sur = app.add_subcommand("surjective", "exact graded surjectivity of "
                                                     "the restriction map");
    add_graph_flag(sur);
    sur->add_option("--sub", sub_ids, "comma-separated subgraph vertex ids")->required();
    add_degree_flag(sur);
    sur->callback([&] { exit_code = cmd_surjective(gpath, sub_ids, cap()); });

    CLI::App* swp = app.add_subcommand("sweep", "sublevel subgraph, sweep certificate "
                                                "and oracle cross-check");
    add_graph_flag(swp);
    swp->add_option("--xi", xi_text, "comma-separated rational functional")->required();
    swp->add_option("--cutoff", cutoff_text, "rational cutoff")->required();
    add_degree_flag(swp);
    swp->callback([&] { exit_code = cmd_sweep(gpath, xi_text, cutoff_text, cap()); });

    CLI::App* spn = app.add_subcommand("span-check", "stepwise span condition over a "
                                                     "Bruhat interval");
    add_graph_flag(spn);
    spn->add_option("--interval", interval, "interval u:w in one-line notation")
        ->required();
    spn->add_option("--order", order_ids, "comma-separated completion order");
    spn->callback([&] { exit_code = cmd_span_check(gpath, interval, order_ids); });

    CLI::App* cex = app.add_subcommand("counterexample-cube",
                                       "the 5-vertex cube subgraph whose class does "
                                       "not extend");
    cex->callback([&] { exit_code = cmd_counterexample_cube(); });

    CLI::App* dot = app.add_subcommand("export-dot", "emit the graph in DOT format");
    add_graph_flag(dot);
    dot->callback([&] { exit_code = cmd_export_dot(gpath); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
