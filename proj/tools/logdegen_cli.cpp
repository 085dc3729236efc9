#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "logdegen/io.hpp"
#include "logdegen/verify.hpp"

using namespace logdegen;
using nlohmann::json;

namespace {

Vec parse_beta(const std::string& s) {
    Vec out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(Int(cur));
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(Int(cur));
    if (out.empty()) throw validation_error("empty class vector");
    return out;
}

json graph_record(const OrderedGraph& og) {
    json j;
    j["vertices"] = json::array();
    for (const auto& v : og.graph.vertices) {
        json vj{{"component", v.r}, {"genus", v.g}, {"markings", v.markings}};
        json cls = json::array();
        for (const auto& x : v.beta) cls.push_back(x.get_str());
        vj["class"] = cls;
        j["vertices"].push_back(std::move(vj));
    }
    j["edges"] = json::array();
    for (const auto& e : og.graph.edges)
        j["edges"].push_back({{"a", e.a}, {"b", e.b}, {"weight", e.w.get_str()}});
    return j;
}

std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s + ")";
}

int cmd_enumerate(const TargetModel& t, int g, int n, const Vec& beta,
                  const std::string& format) {
    auto graphs = enumerate_graphs(t, g, n, beta);
    if (format == "records") {
        for (const auto& graph : graphs) {
            Int aut = automorphism_count(graph);
            auto ords = edge_orderings(graph);
            MultiplicityData m = multiplicity_data(ords.front());
            json j = graph_record(ords.front());
            j["kind"] = "graph";
            j["automorphisms"] = aut.get_str();
            j["orderings"] = ords.size();
            j["l"] = m.l_gamma.get_str();
            j["cycle_coeff"] = rat_to_string(m.cycle_coeff);
            j["numeric_coeff"] = rat_to_string(m.numeric_coeff);
            j["deg_phi"] = rat_to_string(m.deg_phi);
            j["deg_f"] = rat_to_string(m.deg_f);
            std::cout << j.dump() << "\n";
        }
        json tail{{"kind", "summary"}, {"graphs", graphs.size()}};
        std::cout << tail.dump() << "\n";
        return 0;
    }
    std::cout << "graphs of type (g=" << g << ", n=" << n << ", beta=" << vec_str(beta)
              << "): " << graphs.size() << "\n";
    size_t idx = 0;
    for (const auto& graph : graphs) {
        Int aut = automorphism_count(graph);
        auto ords = edge_orderings(graph);
        MultiplicityData m = multiplicity_data(ords.front());
        std::cout << "graph " << ++idx << ": " << graph.vertices.size() << " vertices, "
                  << graph.edges.size() << " edges, |Aut|=" << aut.get_str()
                  << ", orderings=" << ords.size() << ", l=" << m.l_gamma.get_str()
                  << ", coeff=" << rat_to_string(m.numeric_coeff) << "\n";
        for (const auto& v : graph.vertices) {
            std::cout << "  vertex r=" << v.r << " g=" << v.g << " class=" << vec_str(v.beta)
                      << " markings={";
            for (size_t i = 0; i < v.markings.size(); ++i)
                std::cout << (i ? "," : "") << v.markings[i];
            std::cout << "}\n";
        }
        for (const auto& e : graph.edges)
            std::cout << "  edge " << e.a << "-" << e.b << " w=" << e.w.get_str() << "\n";
    }
    return 0;
}

int cmd_split(const CurveGraph& cg, const std::string& format) {
    BasicMonoidDual b = basic_dual_cone(cg);
    auto rays_found = splitting_rays(b);
    int exit_code = 0;
    for (size_t i = 0; i < rays_found.size(); ++i) {
        const auto& rho = rays_found[i];
        SplitResult s = split_cones(cg, rho);
        SplitFacetWitness w = verify_split_facet(cg, rho);
        if (!w.verified) exit_code = 3;
        if (format == "records") {
            json j{{"kind", "splitting-ray"}, {"l", rho.l.get_str()}};
            json lens = json::array();
            for (const auto& x : rho.lengths) lens.push_back(x.get_str());
            j["lengths"] = lens;
            json pos = json::array();
            for (const auto& x : rho.positions) pos.push_back(x.get_str());
            j["positions"] = pos;
            j["splitting_nodes"] = rho.splitting_nodes;
            j["q1_dim"] = s.q1_dual.dim();
            j["q2_dim"] = s.q2_dual.dim();
            j["facet_verified"] = w.verified;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "ray " << i + 1 << ": l=" << rho.l.get_str() << " positions=";
            for (const auto& x : rho.positions) std::cout << x.get_str() << " ";
            std::cout << "lengths=";
            for (const auto& x : rho.lengths) std::cout << x.get_str() << " ";
            std::cout << "splitting nodes=" << rho.splitting_nodes.size()
                      << " facet=" << (w.verified ? "product verified" : "NOT VERIFIED") << "\n";
        }
    }
    if (format != "records")
        std::cout << "splitting rays: " << rays_found.size() << "\n";
    return exit_code;
}

int cmd_glue(const CurveHalf& h1, const CurveHalf& h2, const std::string& format) {
    GlueResult res = glue_halves(h1, h2);
    std::vector<Int> ws;
    for (const auto& he : h1.half_edges) ws.push_back(he.w);
    Rat deg = gluing_degree(ws);
    if (format == "records") {
        json j{{"kind", "glue"},
               {"l", res.l.get_str()},
               {"gluing_degree", rat_to_string(deg)}};
        json rho = json::array();
        for (const auto& x : res.rho) rho.push_back(x.get_str());
        j["rho"] = rho;
        j["curve"] = json::parse(save_curve_graph(res.glued));
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "glued curve graph: " << res.glued.vertices.size() << " vertices, "
                  << res.glued.edges.size() << " edges\n"
                  << "l = " << res.l.get_str() << "\n"
                  << "gluing degree = " << rat_to_string(deg) << "\n"
                  << "rho = " << vec_str(res.rho) << "\n";
    }
    return 0;
}

int cmd_evaluate(const TargetModel& t, const InvariantProvider& provider, int g, int n,
                 const Vec& beta, const std::vector<Insertion>& insertions,
                 const std::string& format, const std::string& lhs_path) {
    auto terms = evaluate_terms(t, g, n, beta, insertions, provider);
    Rat total = 0;
    for (const auto& term : terms) total += term.value;
    total.canonicalize();
    if (format == "records") {
        for (const auto& term : terms) {
            json j = graph_record(term.graph);
            j["kind"] = "term";
            j["value"] = rat_to_string(term.value);
            std::cout << j.dump() << "\n";
        }
        json j{{"kind", "total"}, {"value", rat_to_string(total)}};
        std::cout << j.dump() << "\n";
    } else {
        for (size_t i = 0; i < terms.size(); ++i)
            std::cout << "term " << i + 1 << " (" << terms[i].graph.graph.vertices.size()
                      << " vertices, " << terms[i].graph.graph.edges.size()
                      << " edges): " << rat_to_string(terms[i].value) << "\n";
        std::cout << "total = " << rat_to_string(total) << "\n";
    }
    if (!lhs_path.empty()) {
        json lhs = json::parse(read_file(lhs_path), nullptr, false);
        if (lhs.is_discarded() || lhs.value("schema", "") != "logdegen-lhs-v1")
            throw validation_error("expected schema \"logdegen-lhs-v1\"");
        bool found = false;
        for (const auto& rec : lhs.at("records")) {
            Vec b;
            for (const auto& x : rec.at("beta")) b.push_back(Int(x.get<std::string>()));
            if (rec.at("genus").get<int>() == g && rec.at("markings").get<int>() == n &&
                b == beta) {
                found = true;
                Rat expected = rat_from_string(rec.at("value").get<std::string>());
                bool match = expected == total;
                std::cout << "lhs comparison: " << (match ? "match" : "MISMATCH (lhs ")
                          << (match ? "" : rat_to_string(expected) + ")") << "\n";
                if (!match) return 1;
            }
        }
        if (!found) std::cout << "lhs comparison: no matching record\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial degeneration-formula toolkit"};
    app.require_subcommand(1);
    int jobs = 1;
    app.add_option("--jobs", jobs, "parallelism bound (evaluation is deterministic)");

    std::string target_path, table_path, format = "human", beta_str, lhs_path;
    int genus = 0, markings = 0;
    std::vector<std::string> insertion_specs;

    auto* enumerate_cmd = app.add_subcommand("enumerate", "list graphs of a given type");
    enumerate_cmd->add_option("--target", target_path)->required();
    enumerate_cmd->add_option("--genus", genus)->required();
    enumerate_cmd->add_option("--markings", markings);
    enumerate_cmd->add_option("--beta", beta_str)->required();
    enumerate_cmd->add_option("--format", format)->check(CLI::IsMember({"human", "records"}));

    std::string curve_path;
    auto* split_cmd = app.add_subcommand("split", "splitting rays and facet report");
    split_cmd->add_option("curve", curve_path)->required();
    split_cmd->add_option("--format", format)->check(CLI::IsMember({"human", "records"}));

    std::string half1_path, half2_path;
    auto* glue_cmd = app.add_subcommand("glue", "glue two curve halves");
    glue_cmd->add_option("half1", half1_path)->required();
    glue_cmd->add_option("half2", half2_path)->required();
    glue_cmd->add_option("--format", format)->check(CLI::IsMember({"human", "records"}));

    auto* eval_cmd = app.add_subcommand("evaluate", "evaluate the numerical formula");
    eval_cmd->add_option("--target", target_path)->required();
    eval_cmd->add_option("--table", table_path)->required();
    eval_cmd->add_option("--genus", genus)->required();
    eval_cmd->add_option("--markings", markings);
    eval_cmd->add_option("--beta", beta_str)->required();
    eval_cmd->add_option("--insertion", insertion_specs,
                         "psi-power:class-name, one per marking");
    eval_cmd->add_option("--format", format)->check(CLI::IsMember({"human", "records"}));
    eval_cmd->add_option("--both-sides", lhs_path, "compare against a table of totals");

    std::string suite;
    unsigned long long seed = 0;
    int size = 20;
    auto* verify_cmd = app.add_subcommand("verify", "run a randomized property suite");
    verify_cmd->add_option("--suite", suite)->required();
    verify_cmd->add_option("--seed", seed);
    verify_cmd->add_option("--size", size);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (enumerate_cmd->parsed()) {
            TargetModel t = load_target(read_file(target_path));
            return cmd_enumerate(t, genus, markings, parse_beta(beta_str), format);
        }
        if (split_cmd->parsed()) {
            return cmd_split(load_curve_graph(read_file(curve_path)), format);
        }
        if (glue_cmd->parsed()) {
            return cmd_glue(load_curve_half(read_file(half1_path)),
                            load_curve_half(read_file(half2_path)), format);
        }
        if (eval_cmd->parsed()) {
            TargetModel t = load_target(read_file(target_path));
            TableProvider provider(t, load_invariant_table(t, read_file(table_path)));
            Vec beta = parse_beta(beta_str);
            std::vector<Insertion> insertions;
            for (const auto& spec : insertion_specs) {
                auto colon = spec.find(':');
                if (colon == std::string::npos)
                    throw validation_error("insertion must be psi-power:class-name");
                int m = std::stoi(spec.substr(0, colon));
                std::string name = spec.substr(colon + 1);
                GradedClass cls = zero_class(t.x_cohomology);
                bool hit = false;
                for (size_t i = 0; i < t.x_cohomology.size(); ++i)
                    if (t.x_cohomology.names[i] == name) {
                        cls.coeffs[i] = 1;
                        hit = true;
                    }
                if (!hit) throw validation_error("unknown class name \"" + name + "\"");
                insertions.push_back({m, cls});
            }
            return cmd_evaluate(t, provider, genus, markings, beta, insertions, format, lhs_path);
        }
        if (verify_cmd->parsed()) {
            VerifyReport rep = run_suite(suite, seed, size);
            std::cout << rep.text;
            return rep.passed ? 0 : 1;
        }
    } catch (const unresolved_query_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const search_cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
