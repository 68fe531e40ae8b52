// Command-line front end: build graphs of a group, list neighborhood
// classes, reconstruct a group from an unlabeled difference graph, run the
// verification suites, and enumerate admissible groups.
//
// Exit codes: 0 success, 1 verification/validation failure, 2 bad input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gdiff/class_formulas.hpp"
#include "gdiff/group_graphs.hpp"
#include "gdiff/harness.hpp"
#include "gdiff/io.hpp"
#include "gdiff/reconstruct.hpp"

using json = nlohmann::ordered_json;

namespace {

void write_file(const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << text;
}

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

json counts_to_json(const std::map<std::int64_t, std::int64_t>& counts) {
    json out = json::object();
    for (const auto& [ord, cnt] : counts) out[std::to_string(ord)] = cnt;
    return out;
}

int cmd_build(const std::string& group, const std::string& kind, const std::string& out_path,
              const std::string& dot_path) {
    gdiff::GroupSpec spec = gdiff::parse_group_spec(group);
    gdiff::GroupCache cache(spec);
    gdiff::GraphFile f;
    if (kind == "difference") {
        f = gdiff::to_graph_file(gdiff::difference_graph(cache));
    } else if (kind == "power") {
        f = gdiff::to_graph_file(gdiff::power_graph(cache));
        f.spec = gdiff::format_group_spec(spec);
    } else if (kind == "enhanced") {
        f = gdiff::to_graph_file(gdiff::enhanced_power_graph(cache));
        f.spec = gdiff::format_group_spec(spec);
    } else {
        f = gdiff::to_graph_file(gdiff::directed_power_graph(cache));
        f.spec = gdiff::format_group_spec(spec);
    }
    write_file(out_path, gdiff::write_graph(f));
    if (!dot_path.empty()) write_file(dot_path, gdiff::export_dot(f));
    std::cerr << kind << " graph of " << gdiff::format_group_spec(spec) << ": "
              << f.vertex_count << " vertices, " << f.edges.size()
              << (f.directed ? " arcs" : " edges") << "\n";
    return 0;
}

int cmd_classes(const std::string& group) {
    gdiff::GroupSpec spec = gdiff::parse_group_spec(group);
    gdiff::GroupCache cache(spec);
    gdiff::LabeledDiffGraph L = gdiff::difference_graph(cache);
    gdiff::ClassPartition cp = gdiff::neighborhood_classes(L.graph);
    std::cout << "difference graph of " << gdiff::format_group_spec(spec) << ": "
              << L.graph.vertex_count() << " vertices, " << L.graph.edge_count() << " edges, "
              << cp.classes.size() << " classes\n";
    std::printf("%-5s %-6s %-8s %-16s %s\n", "class", "size", "degree", "kind", "example");
    for (std::size_t i = 0; i < cp.classes.size(); ++i) {
        gdiff::ClassKind kind = gdiff::classify_class(L, cache, cp.classes[i]);
        std::printf("%-5zu %-6lld %-8lld %-16s %s\n", i,
                    static_cast<long long>(cp.class_size[i]),
                    static_cast<long long>(cp.class_degree[i]), gdiff::tag_name(kind.tag),
                    gdiff::format_label(
                        L.labels[static_cast<std::size_t>(cp.classes[i].front())]).c_str());
    }
    return 0;
}

int cmd_reconstruct(const std::string& in_path, std::uint64_t shuffle_seed, bool has_seed,
                    bool no_validate, const std::string& report_path) {
    gdiff::GraphFile f = gdiff::read_graph(read_file(in_path));
    gdiff::SimpleGraph g = gdiff::graph_from_file(f);
    if (has_seed) g = gdiff::shuffle(g, shuffle_seed).first;
    gdiff::ReconstructionReport rep = gdiff::reconstruct(g, !no_validate);
    std::cout << "group: " << gdiff::format_group_spec(rep.spec) << "\n";
    std::cout << "branch: " << gdiff::branch_name(rep.branch) << "\n";
    for (const auto& line : rep.trace) std::cout << "  " << line << "\n";
    if (!report_path.empty()) {
        json out;
        out["group"] = gdiff::format_group_spec(rep.spec);
        out["branch"] = gdiff::branch_name(rep.branch);
        out["order"] = rep.spec.order();
        if (rep.params) {
            json par;
            par["p"] = rep.params->p;
            par["q"] = rep.params->q;
            par["n"] = rep.params->n;
            par["m"] = rep.params->m;
            par["k"] = rep.params->k;
            par["l"] = rep.params->l;
            par["r1"] = rep.params->r1;
            par["t1"] = rep.params->t1;
            out["params"] = par;
        }
        out["order_counts_a"] = counts_to_json(rep.counts_a);
        out["order_counts_b"] = counts_to_json(rep.counts_b);
        out["validated"] = rep.validated;
        out["trace"] = rep.trace;
        write_file(report_path, out.dump(2) + "\n");
    }
    return 0;
}

int cmd_verify(const gdiff::VerifyOptions& opt, const std::string& report_path) {
    gdiff::VerifySummary s = gdiff::verify_range(opt);
    std::map<std::string, std::pair<std::int64_t, std::int64_t>> by_suite;
    for (const auto& r : s.reports) {
        auto& [pass, fail] = by_suite[r.check];
        (r.pass ? pass : fail)++;
    }
    for (const auto& [suite, pf] : by_suite)
        std::printf("%-18s %lld passed, %lld failed\n", suite.c_str(),
                    static_cast<long long>(pf.first), static_cast<long long>(pf.second));
    for (const auto& r : s.reports)
        if (!r.pass)
            std::cout << "FAIL " << r.check << " " << r.subject << ": " << r.detail << "\n";
    std::printf("total: %lld passed, %lld failed in %.2fs\n",
                static_cast<long long>(s.passed), static_cast<long long>(s.failed), s.seconds);
    if (!report_path.empty()) {
        json out;
        out["passed"] = s.passed;
        out["failed"] = s.failed;
        out["seconds"] = s.seconds;
        json suites = json::object();
        for (const auto& [suite, pf] : by_suite)
            suites[suite] = {{"passed", pf.first}, {"failed", pf.second}};
        out["suites"] = suites;
        json failures = json::array();
        for (const auto& r : s.reports)
            if (!r.pass)
                failures.push_back({{"check", r.check}, {"subject", r.subject},
                                    {"detail", r.detail}});
        out["failures"] = failures;
        write_file(report_path, out.dump(2) + "\n");
    }
    return s.failed == 0 ? 0 : 1;
}

int cmd_enumerate(std::int64_t max_order) {
    auto specs = gdiff::enumerate_specs(max_order);
    for (const auto& spec : specs)
        std::cout << spec.order() << " " << gdiff::format_group_spec(spec) << "\n";
    std::cerr << specs.size() << " groups of order <= " << max_order << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"difference graphs of two-prime abelian groups"};
    app.require_subcommand(1);

    std::string group, kind = "difference", out_path, dot_path;
    auto* build = app.add_subcommand("build", "build a graph of a group");
    build->add_option("--group", group, "group spec, e.g. 2:2;3:1")->required();
    build->add_option("--kind", kind, "power|enhanced|difference|directed-power")
        ->check(CLI::IsMember({"power", "enhanced", "difference", "directed-power"}));
    build->add_option("--out", out_path, "write the graph file here")->required();
    build->add_option("--dot", dot_path, "also write DOT here");

    std::string cls_group;
    auto* classes = app.add_subcommand("classes", "neighborhood classes of a difference graph");
    classes->add_option("--group", cls_group, "group spec")->required();

    std::string in_path, rec_report;
    std::uint64_t seed = 0;
    bool no_validate = false;
    auto* rec = app.add_subcommand("reconstruct", "recover the group from a difference graph");
    rec->add_option("--in", in_path, "input graph file")->required();
    auto* seed_opt = rec->add_option("--shuffle-seed", seed, "relabel vertices first");
    rec->add_flag("--no-validate", no_validate, "skip the rebuild + isomorphism check");
    rec->add_option("--report", rec_report, "write a JSON report here");

    gdiff::VerifyOptions vopt;
    std::int64_t max_order = 0;
    std::string ver_report;
    auto* ver = app.add_subcommand("verify", "run the oracle suites");
    ver->add_option("--max-order", max_order,
                    "cap every suite bound at this order (0 = per-suite defaults)");
    ver->add_option("--suites", vopt.suites,
                    "subset of: adjacency isolated divisibility members formulas bipartite "
                    "product sdk cyclic order-sep partition-inverse roundtrip")
        ->delimiter(',');
    ver->add_option("--jobs", vopt.jobs, "worker threads");
    ver->add_flag("--fault-inject", vopt.fault_inject,
                  "corrupt a graph and require the suites to notice");
    ver->add_option("--report", ver_report, "write a JSON report here");

    std::int64_t enum_max = 0;
    auto* enu = app.add_subcommand("enumerate", "list admissible groups by order");
    enu->add_option("--max-order", enum_max, "largest group order")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return cmd_build(group, kind, out_path, dot_path);
        if (classes->parsed()) return cmd_classes(cls_group);
        if (rec->parsed())
            return cmd_reconstruct(in_path, seed, seed_opt->count() > 0, no_validate, rec_report);
        if (ver->parsed()) {
            if (max_order > 0) {
                vopt.adjacency_bound = std::min(vopt.adjacency_bound, max_order);
                vopt.formula_bound = std::min(vopt.formula_bound, max_order);
                vopt.roundtrip_bound = std::min(vopt.roundtrip_bound, max_order);
                vopt.sdk_bound = std::min(vopt.sdk_bound, max_order);
                vopt.cyclic_bound = std::min(vopt.cyclic_bound, max_order);
                vopt.order_sep_bound = std::min(vopt.order_sep_bound, max_order);
            }
            return cmd_verify(vopt, ver_report);
        }
        if (enu->parsed()) return cmd_enumerate(enum_max);
    } catch (const gdiff::not_a_difference_graph& e) {
        std::cerr << "error: not a difference graph: " << e.what() << "\n";
        return 2;
    } catch (const gdiff::internal_mismatch_error& e) {
        std::cerr << "error: internal cross-check failed: " << e.what() << "\n";
        return 1;
    } catch (const gdiff::group_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
