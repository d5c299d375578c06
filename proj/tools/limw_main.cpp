#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "limw/acceptance.hpp"
#include "limw/certificates.hpp"
#include "limw/config.hpp"
#include "limw/families.hpp"
#include "limw/graph.hpp"
#include "limw/io.hpp"
#include "limw/layout.hpp"
#include "limw/tree_width.hpp"

namespace {

using nlohmann::json;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw limw::IoError("cannot write " + out_path);
    f << text;
    if (text.empty() || text.back() != '\n') f << '\n';
}

std::string graph_text(const limw::Graph& g, const std::string& format) {
    if (format == "dot") return limw::to_dot(g);
    if (format == "json") {
        json j;
        j["n"] = g.n();
        j["edges"] = g.edges();
        return j.dump(2);
    }
    std::ostringstream os;
    limw::write_edge_list(os, g);
    return os.str();
}

limw::FamilyKind parse_family(const std::string& name) {
    if (name == "L") return limw::FamilyKind::L;
    if (name == "H") return limw::FamilyKind::H;
    throw limw::DomainError("family must be L or H");
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw limw::IoError("cannot read " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear MIM-width toolkit"};
    app.require_subcommand(1);

    limw::RunConfig cfg;
    std::string family = "L";
    int level = 1;
    int power_m = 2;
    int max_m = 8;
    std::string in_path, layout_path, cert_path, out_path, graph_out_path;
    std::string format = "edgelist";
    std::vector<int> only;

    auto add_run_flags = [&](CLI::App* cmd) {
        cmd->add_option("--oracle-cutoff", cfg.oracle_cutoff, "exact oracle size limit");
        cmd->add_option("--mim-budget", cfg.mim_budget, "matching search node budget");
        cmd->add_option("--seed", cfg.seed, "seed for randomized suites");
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "edgelist, dot or json")
            ->check(CLI::IsMember({"edgelist", "dot", "json"}));
    };

    CLI::App* gen = app.add_subcommand("gen", "generate a family tree");
    gen->add_option("--family", family, "L or H")->required();
    gen->add_option("--k", level, "recursion level")->required();
    gen->add_option("--out", out_path, "output path (stdout if absent)");
    add_format(gen);

    CLI::App* power = app.add_subcommand("power", "raise a graph to a power");
    power->add_option("input", in_path, "edge-list file")->required();
    power->add_option("--m", power_m, "power exponent")->required();
    power->add_option("--out", out_path, "output path");
    add_format(power);

    CLI::App* eval = app.add_subcommand("eval-layout", "evaluate a layout's width");
    eval->add_option("input", in_path, "edge-list file")->required();
    eval->add_option("layout", layout_path, "layout file (permutation of 0..n-1)")->required();
    eval->add_option("--out", out_path, "output path");
    eval->add_option("--mim-budget", cfg.mim_budget, "matching search node budget");

    CLI::App* exact = app.add_subcommand("lmw-exact", "exact width by subset oracle");
    exact->add_option("input", in_path, "edge-list file")->required();
    exact->add_option("--out", out_path, "output path");
    add_run_flags(exact);

    CLI::App* tree = app.add_subcommand("lmw-tree", "exact width of a tree");
    tree->add_option("input", in_path, "edge-list file")->required();
    tree->add_option("--out", out_path, "output path");

    CLI::App* laytree = app.add_subcommand("layout-tree", "optimal layout of a tree");
    laytree->add_option("input", in_path, "edge-list file")->required();
    laytree->add_option("--out", out_path, "output path");
    add_run_flags(laytree);

    CLI::App* certify = app.add_subcommand("certify", "lower-bound certificate for a family square");
    certify->add_option("--family", family, "L or H")->required();
    certify->add_option("--k", level, "recursion level")->required();
    certify->add_option("--out", out_path, "certificate path (stdout if absent)");
    certify->add_option("--graph-out", graph_out_path, "also write the squared graph here");

    CLI::App* check = app.add_subcommand("check-cert", "validate a certificate against a graph");
    check->add_option("input", in_path, "edge-list file")->required();
    check->add_option("certificate", cert_path, "certificate JSON file")->required();
    check->add_option("--out", out_path, "output path");
    add_run_flags(check);

    CLI::App* profile = app.add_subcommand("power-profile", "width bounds across powers");
    profile->add_option("input", in_path, "edge-list file")->required();
    profile->add_option("--max-m", max_m, "largest exponent to try");
    profile->add_option("--out", out_path, "output path");
    add_run_flags(profile);

    CLI::App* accept = app.add_subcommand("acceptance", "run the acceptance suite");
    accept->add_option("--only", only, "criterion ids to run");
    accept->add_option("--out", out_path, "output path");
    add_run_flags(accept);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            limw::FamilyInstance inst = limw::gen_family(parse_family(family), level);
            if (format == "json") {
                json j;
                j["kind"] = family;
                j["k"] = level;
                j["n"] = inst.tree.graph.n();
                j["edges"] = inst.tree.graph.edges();
                j["roles"] = inst.roles;
                emit(j.dump(2), out_path);
            } else {
                emit(graph_text(inst.tree.graph, format), out_path);
                if (!out_path.empty() && format == "edgelist")
                    emit(limw::roles_to_json(inst), out_path + ".roles.json");
            }
        } else if (*power) {
            limw::Graph g = limw::load_graph(in_path);
            emit(graph_text(limw::graph_power(g, power_m), format), out_path);
        } else if (*eval) {
            limw::Graph g = limw::load_graph(in_path);
            limw::LinearLayout sigma = limw::load_layout(layout_path, g.n());
            emit(limw::width_report_to_json(limw::mw_of_layout(g, sigma, cfg.mim_budget)),
                 out_path);
        } else if (*exact) {
            limw::LmwResult res = limw::lmw_oracle(limw::load_graph(in_path), cfg);
            json j;
            j["width"] = res.width;
            j["layout"] = res.layout.order;
            emit(j.dump(2), out_path);
        } else if (*tree) {
            json j;
            j["width"] = limw::tree_lmw(limw::load_graph(in_path));
            emit(j.dump(2), out_path);
        } else if (*laytree) {
            auto [lay, rep] = limw::construct_tree_layout(limw::load_graph(in_path), cfg);
            json j;
            j["width"] = rep.width;
            j["layout"] = lay.order;
            j["cut_values"] = rep.cut_values;
            emit(j.dump(2), out_path);
        } else if (*certify) {
            limw::FamilyKind kind = parse_family(family);
            limw::FamilyInstance inst = limw::gen_family(kind, level);
            limw::Graph square = limw::graph_power(inst.tree.graph, 2);
            limw::LowerBoundCertificate cert =
                kind == limw::FamilyKind::H
                    ? limw::certify_H_square(level)
                    : limw::certify_square_lower_bound(inst.tree.graph, cfg);
            emit(limw::certificate_to_json(cert), out_path);
            if (!graph_out_path.empty()) limw::save_graph(graph_out_path, square);
        } else if (*check) {
            limw::Graph g = limw::load_graph(in_path);
            limw::LowerBoundCertificate cert = limw::certificate_from_json(read_file(cert_path));
            limw::CheckResult res = limw::try_check_certificate(g, cert, cfg);
            json j;
            j["ok"] = res.ok;
            if (res.ok) {
                j["bound"] = res.bound;
            } else {
                j["node"] = res.node;
                j["condition"] = res.condition;
                j["message"] = res.message;
            }
            emit(j.dump(2), out_path);
            if (!res.ok) {
                std::cerr << "certificate rejected at " << res.node << " [" << res.condition
                          << "]: " << res.message << "\n";
                return 1;
            }
        } else if (*profile) {
            auto rows = limw::power_profile(limw::load_graph(in_path), max_m, cfg);
            json j = json::array();
            for (const auto& row : rows) {
                json r;
                r["m"] = row.m;
                r["lower"] = row.lower;
                r["upper"] = row.upper;
                r["exact"] = row.exact;
                j.push_back(r);
            }
            emit(j.dump(2), out_path);
        } else if (*accept) {
            auto results = limw::run_acceptance(cfg, std::cerr, only);
            bool all = true;
            json arr = json::array();
            for (const auto& r : results) {
                all = all && r.passed;
                json e;
                e["id"] = r.id;
                e["name"] = r.name;
                e["passed"] = r.passed;
                e["detail"] = r.detail;
                e["seconds"] = r.seconds;
                arr.push_back(e);
            }
            json j;
            j["seed"] = cfg.seed;
            j["all_passed"] = all;
            j["criteria"] = arr;
            emit(j.dump(2), out_path);
            if (!all) return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
