// Command-line front end. Talks to the library only through ioc.h.
//
// Exit status: 0 success, 1 the checked property does not hold, 2 bad input.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ioc/ioc.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

struct CliError {
    ioc_status status;
    std::string message;
};

void check(ioc_status status) {
    if (status != IOC_OK) throw CliError{status, ioc_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
using GraphPtr = std::unique_ptr<ioc_graph, Deleter<ioc_graph, ioc_graph_free>>;
using SetPtr = std::unique_ptr<ioc_vertex_set, Deleter<ioc_vertex_set, ioc_vertex_set_free>>;
using SolvePtr = std::unique_ptr<ioc_solve_result, Deleter<ioc_solve_result, ioc_solve_result_free>>;
using ConstructionPtr = std::unique_ptr<ioc_construction, Deleter<ioc_construction, ioc_construction_free>>;
using FamilyPtr = std::unique_ptr<ioc_family, Deleter<ioc_family, ioc_family_free>>;
using ReportPtr = std::unique_ptr<ioc_audit_report, Deleter<ioc_audit_report, ioc_audit_report_free>>;

struct OwnedString {
    char* p = nullptr;
    ~OwnedString() { ioc_string_free(p); }
    std::string str() const { return p ? std::string(p) : std::string(); }
};

bool is_regular_file(const std::string& path) {
    std::error_code ec;
    return std::filesystem::is_regular_file(path, ec);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{IOC_PARSE_ERROR, "cannot open " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// GRAPH is a path to a graph6 or edge-list file, or a literal graph6 string.
GraphPtr load_graph(const std::string& arg) {
    ioc_graph* g = nullptr;
    if (is_regular_file(arg)) {
        check(ioc_graph_read_file(arg.c_str(), &g));
    } else {
        check(ioc_graph_parse(arg.c_str(), &g));
    }
    return GraphPtr(g);
}

// CODE is a path to a file of vertex indices or a comma-separated list.
SetPtr load_code(const ioc_graph* g, const std::string& arg) {
    std::string text = is_regular_file(arg) ? slurp(arg) : arg;
    ioc_vertex_set* s = nullptr;
    check(ioc_vertex_set_parse(ioc_graph_order(g), text.c_str(), &s));
    return SetPtr(s);
}

std::vector<uint32_t> members(const ioc_vertex_set* s) {
    std::vector<uint32_t> out(ioc_vertex_set_size(s));
    ioc_vertex_set_members(s, out.data(), out.size());
    return out;
}

std::string join(const std::vector<uint32_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

json verdict_json(const ioc_verdict& v) {
    json j;
    j["ok"] = v.ok != 0;
    j["undominated"] = v.has_undominated ? json(v.undominated) : json(nullptr);
    j["collision"] = v.has_collision ? json::array({v.collision_u, v.collision_v}) : json(nullptr);
    return j;
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CliError{IOC_BAD_PARAM, "cannot write " + path};
    out << text;
}

std::size_t default_delta(const ioc_graph* g) {
    const std::size_t d = ioc_graph_max_degree(g);
    return d < 3 ? 3 : d;
}

// ---- subcommands ----

int run_verify(const std::string& graph_arg, const std::string& code_arg) {
    auto g = load_graph(graph_arg);
    auto code = load_code(g.get(), code_arg);
    ioc_verdict td{}, sep{}, io{};
    check(ioc_is_total_dominating(g.get(), code.get(), &td));
    check(ioc_is_separating_open_code(g.get(), code.get(), &sep));
    check(ioc_is_io_code(g.get(), code.get(), &io));
    json j = verdict_json(io);
    j["size"] = ioc_vertex_set_size(code.get());
    j["total_dominating"] = td.ok != 0;
    j["separating"] = sep.ok != 0;
    std::cout << j.dump() << '\n';
    return io.ok ? kExitOk : kExitViolation;
}

int run_solve(const std::string& graph_arg, std::optional<std::size_t> budget, bool oracle,
              std::size_t oracle_max_order) {
    auto g = load_graph(graph_arg);
    if (budget) {
        ioc_vertex_set* found = nullptr;
        check(ioc_solve_with_budget(g.get(), *budget, &found));
        SetPtr holder(found);
        json j;
        j["budget"] = *budget;
        j["feasible"] = found != nullptr;
        j["code"] = found ? json(members(found)) : json(nullptr);
        std::cout << j.dump() << '\n';
        return kExitOk;
    }
    ioc_solve_result* r = nullptr;
    check(oracle ? ioc_solve_oracle(g.get(), oracle_max_order, &r) : ioc_solve(g.get(), &r));
    SolvePtr holder(r);
    json j;
    j["gamma"] = ioc_solve_result_gamma(r);
    j["code"] = members(ioc_solve_result_code(r));
    j["nodes_explored"] = ioc_solve_result_nodes(r);
    j["method"] = ioc_solve_result_method(r);
    j["wall_time_ms"] = ioc_solve_result_wall_time_ms(r);
    std::cout << j.dump() << '\n';
    return kExitOk;
}

int run_construct(const std::string& graph_arg, std::optional<std::size_t> delta) {
    auto g = load_graph(graph_arg);
    const std::size_t d = delta.value_or(default_delta(g.get()));
    ioc_construction* c = nullptr;
    check(ioc_construct(g.get(), d, &c));
    ConstructionPtr holder(c);
    const auto code = members(ioc_construction_code(c));
    const std::string status = ioc_construction_bound_status(c);
    json j;
    j["n"] = ioc_graph_order(g.get());
    j["delta"] = d;
    j["code"] = code;
    j["size"] = code.size();
    j["bound_status"] = status;
    j["exceptional"] = ioc_construction_exceptional(c) != 0;
    j["trace"] = json::parse(ioc_construction_trace_json(c));
    std::cout << j.dump() << '\n';
    return status == "violation" ? kExitViolation : kExitOk;
}

int run_generate(const std::string& family, const std::vector<std::string>& params, const std::string& format,
                 const std::string& out_path, std::string sidecar_path) {
    std::string joined;
    for (const auto& p : params) joined += p + ",";
    ioc_family* f = nullptr;
    check(ioc_family_generate(family.c_str(), joined.c_str(), &f));
    FamilyPtr holder(f);
    const ioc_graph* g = ioc_family_graph(f);
    OwnedString text{format == "g6" ? ioc_graph_to_graph6(g) : ioc_graph_to_edge_list(g)};
    std::string body = text.str();
    if (format == "g6") body += '\n';
    write_text(out_path, body);
    if (sidecar_path.empty() && out_path != "-") sidecar_path = out_path + ".json";
    if (!sidecar_path.empty()) write_text(sidecar_path, std::string(ioc_family_sidecar_json(f)) + "\n");
    return kExitOk;
}

int emit_report(const ioc_audit_report* r, const std::string& csv_path, const std::string& summary_path,
                bool runtime) {
    if (!csv_path.empty()) write_text(csv_path, ioc_audit_report_csv(r));
    write_text(summary_path, std::string(ioc_audit_report_summary_json(r, runtime ? 1 : 0)) + "\n");
    return ioc_audit_report_ok(r) ? kExitOk : kExitViolation;
}

int run_signature(const std::string& graph_arg, const std::string& code_arg) {
    auto g = load_graph(graph_arg);
    auto code = load_code(g.get(), code_arg);
    const std::size_t n = ioc_graph_order(g.get());
    std::vector<std::string> sigs(n);
    for (uint32_t v = 0; v < n; ++v) {
        ioc_vertex_set* s = nullptr;
        check(ioc_signature(g.get(), code.get(), v, &s));
        SetPtr holder(s);
        sigs[v] = "{" + join(members(s)) + "}";
    }
    std::cout << "vertex\tin_code\tsignature\tnote\n";
    for (uint32_t v = 0; v < n; ++v) {
        std::string note;
        if (sigs[v] == "{}") note = "undominated";
        for (uint32_t u = 0; u < n; ++u) {
            if (u != v && sigs[u] == sigs[v]) {
                if (!note.empty()) note += ' ';
                note += "same-as-" + std::to_string(u);
            }
        }
        std::cout << v << '\t' << (ioc_vertex_set_contains(code.get(), v) ? "yes" : "no") << '\t' << sigs[v]
                  << '\t' << (note.empty() ? "-" : note) << '\n';
    }
    ioc_verdict io{};
    check(ioc_is_io_code(g.get(), code.get(), &io));
    return io.ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Identifying open codes: verification, exact solving, construction and audits"};
    app.require_subcommand(1);

    std::string graph_arg, code_arg;

    auto* verify = app.add_subcommand("verify", "Check whether CODE is an IO-code of GRAPH");
    verify->add_option("GRAPH", graph_arg, "graph6/edge-list file or graph6 string")->required();
    verify->add_option("CODE", code_arg, "file of vertex indices or comma-separated list")->required();

    auto* solve = app.add_subcommand("solve", "Minimum IO-code by branch-and-bound");
    std::optional<std::size_t> budget;
    bool use_oracle = false;
    std::size_t oracle_max_order = 24;
    solve->add_option("GRAPH", graph_arg, "graph6/edge-list file or graph6 string")->required();
    solve->add_option("--budget", budget, "only decide whether a code of size <= K exists");
    solve->add_flag("--oracle", use_oracle, "use exhaustive subset search instead");
    solve->add_option("--oracle-max-order", oracle_max_order, "largest order accepted by --oracle")
        ->capture_default_str();

    auto* construct = app.add_subcommand("construct", "Bound-certified IO-code by reduction");
    std::optional<std::size_t> delta;
    construct->add_option("GRAPH", graph_arg, "graph6/edge-list file or graph6 string")->required();
    construct->add_option("--delta", delta, "degree bound (default max(3, maximum degree))");

    auto* generate = app.add_subcommand("generate", "Emit a member of a named family");
    std::string family, format = "edges", out_path = "-", sidecar_path;
    std::vector<std::string> params;
    generate
        ->add_option("FAMILY", family,
                     "subdivided-star | reduced-subdivided-star | family-tree | tight-tree-pair | "
                     "subcubic-cycle | star-plus-edge")
        ->required();
    generate->add_option("PARAMS", params, "DELTA, P, K1..K6, or VARIANT K")->required();
    generate->add_option("--format", format, "output format")->check(CLI::IsMember({"g6", "edges"}))
        ->capture_default_str();
    generate->add_option("-o,--output", out_path, "graph output path ('-' for stdout)")->capture_default_str();
    generate->add_option("--sidecar", sidecar_path,
                         "JSON sidecar path (default OUTPUT.json when writing to a file)");

    auto* audit = app.add_subcommand("audit", "Batch certification over enumerated instances");
    audit->require_subcommand(1);
    std::size_t n_min = 5, n_max = 9, samples = 0, audit_delta = 0, audit_oracle = 0;
    std::uint64_t seed = 1;
    unsigned workers = 0;
    std::string csv_path, summary_path = "-";
    bool with_runtime = false;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n-min", n_min, "smallest order")->capture_default_str();
        sub->add_option("--n-max", n_max, "largest order")->capture_default_str();
        sub->add_option("--delta", audit_delta, "degree bound; 0 uses max(3, maximum degree) per instance")
            ->capture_default_str();
        sub->add_option("--oracle-max-order", audit_oracle, "cross-check against subset search up to this order")
            ->capture_default_str();
        sub->add_option("--workers", workers, "worker threads (0 reads IOC_WORKERS, default 1)");
        sub->add_option("--csv", csv_path, "write per-instance CSV here ('-' for stdout)");
        sub->add_option("--summary", summary_path, "write JSON summary here")->capture_default_str();
        sub->add_flag("--runtime", with_runtime, "include runtime_ms in the summary");
    };
    auto* audit_trees = audit->add_subcommand("trees", "All open twin-free trees");
    add_common(audit_trees);
    auto* audit_graphs = audit->add_subcommand("graphs", "Connected twin-free graphs without 4-cycles");
    add_common(audit_graphs);
    audit_graphs->add_option("--samples", samples, "random instances per order above 7 vertices")
        ->capture_default_str();
    audit_graphs->add_option("--seed", seed, "sampling seed")->capture_default_str();
    auto* audit_families = audit->add_subcommand("families", "Exact values on the tight families");
    std::size_t delta_max = 3, p_max = 3, p_exact_max = 3, p_decision_max = 3;
    audit_families->add_option("--delta-max", delta_max)->capture_default_str();
    audit_families->add_option("--p-max", p_max)->capture_default_str();
    audit_families->add_option("--p-exact-max", p_exact_max)->capture_default_str();
    audit_families->add_option("--p-decision-max", p_decision_max)->capture_default_str();
    audit_families->add_option("--summary", summary_path, "write the JSON report here")->capture_default_str();

    auto* sig = app.add_subcommand("signature", "Per-vertex N(v) ∩ CODE table");
    sig->add_option("GRAPH", graph_arg, "graph6/edge-list file or graph6 string")->required();
    sig->add_option("CODE", code_arg, "file of vertex indices or comma-separated list")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*verify) return run_verify(graph_arg, code_arg);
        if (*solve) return run_solve(graph_arg, budget, use_oracle, oracle_max_order);
        if (*construct) return run_construct(graph_arg, delta);
        if (*generate) return run_generate(family, params, format, out_path, sidecar_path);
        if (*sig) return run_signature(graph_arg, code_arg);
        if (*audit_families) {
            OwnedString report;
            check(ioc_verify_tight_families(delta_max, p_max, p_exact_max, p_decision_max, &report.p));
            const std::string text = report.str();
            write_text(summary_path, text + "\n");
            return json::parse(text).at("ok").get<bool>() ? kExitOk : kExitViolation;
        }
        ioc_audit_options options;
        ioc_audit_options_init(&options);
        options.n_min = n_min;
        options.n_max = n_max;
        options.delta = audit_delta;
        options.oracle_max_order = audit_oracle;
        options.samples_per_order = samples;
        options.seed = seed;
        options.workers = workers;
        ioc_audit_report* r = nullptr;
        check(*audit_trees ? ioc_audit_trees(&options, &r) : ioc_audit_graphs(&options, &r));
        ReportPtr holder(r);
        return emit_report(r, csv_path, summary_path, with_runtime);
    } catch (const CliError& e) {
        std::cerr << "error: " << ioc_status_name(e.status) << ": " << e.message << '\n';
        return e.status == IOC_NO_CODE ? kExitViolation : kExitInput;
    }
}
