#include "ioc/ioc.h"

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ioc/audit.hpp"
#include "ioc/constructive.hpp"
#include "ioc/enumerate.hpp"
#include "ioc/families.hpp"
#include "ioc/graph.hpp"
#include "ioc/graph_io.hpp"
#include "ioc/solver.hpp"
#include "ioc/verify.hpp"

struct ioc_graph {
    ioc::Graph g;
};

struct ioc_vertex_set {
    ioc::VertexSet s;
};

struct ioc_solve_result {
    ioc::SolveResult r;
    ioc_vertex_set code;
};

struct ioc_construction {
    ioc::Construction c;
    ioc_vertex_set code;
    std::string trace_json;
};

struct ioc_family {
    ioc::Family f;
    ioc_graph graph;
    std::string name;
    std::string sidecar;
};

struct ioc_audit_report {
    ioc::AuditReport report;
    std::string csv;
    std::string summary;
    std::string summary_with_runtime;
};

namespace {

thread_local std::string g_last_error;

ioc_status fail(ioc_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

// Runs body, translating exceptions into a status and the thread-local
// message.
template <class F>
ioc_status guarded(F&& body) {
    try {
        return body();
    } catch (const ioc::Error& e) {
        return fail(static_cast<ioc_status>(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(IOC_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(IOC_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void fill_verdict(const ioc::Verdict& v, ioc_verdict* out) {
    *out = ioc_verdict{};
    out->ok = v.ok ? 1 : 0;
    if (v.undominated) {
        out->has_undominated = 1;
        out->undominated = *v.undominated;
    }
    if (v.collision) {
        out->has_collision = 1;
        out->collision_u = v.collision->first;
        out->collision_v = v.collision->second;
    }
}

std::vector<std::string> split_tokens(std::string_view text) {
    std::vector<std::string> out;
    std::string current;
    for (char ch : text) {
        if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
            if (!current.empty()) out.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    if (!current.empty()) out.push_back(std::move(current));
    return out;
}

std::size_t parse_count(const std::string& token, const char* what) {
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(token, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != token.size() || token.empty() || token[0] == '-') {
        throw ioc::Error(ioc::ErrorCode::BadParam, std::string("expected a non-negative integer for ") + what +
                                                       ", got '" + token + "'");
    }
    return static_cast<std::size_t>(value);
}

ioc::Family generate_family(const std::string& family, const std::vector<std::string>& params) {
    using ioc::ErrorCode;
    auto want = [&](std::size_t count, const char* usage) {
        if (params.size() != count) {
            throw ioc::Error(ErrorCode::BadParam, family + " expects " + usage);
        }
    };
    if (family == "subdivided-star") {
        want(1, "DELTA");
        return ioc::gen_subdivided_star(parse_count(params[0], "DELTA"));
    }
    if (family == "reduced-subdivided-star") {
        want(1, "DELTA");
        return ioc::gen_reduced_subdivided_star(parse_count(params[0], "DELTA"));
    }
    if (family == "tight-tree-pair") {
        want(1, "DELTA");
        return ioc::gen_tight_tree_pair(parse_count(params[0], "DELTA"));
    }
    if (family == "subcubic-cycle") {
        want(1, "P");
        return ioc::gen_subcubic_gp(parse_count(params[0], "P"));
    }
    if (family == "family-tree") {
        want(6, "six attachment counts K1..K6");
        ioc::AttachmentVector k;
        for (std::size_t i = 0; i < 6; ++i) {
            k.k[i] = static_cast<std::uint32_t>(parse_count(params[i], "K"));
        }
        return ioc::build_family_tree(k);
    }
    if (family == "star-plus-edge") {
        want(2, "VARIANT (G1, G2 or G3) and K");
        std::string variant = params[0];
        for (char& ch : variant) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
        ioc::StarPlusEdgeVariant v;
        if (variant == "G1") {
            v = ioc::StarPlusEdgeVariant::SupportSupport;
        } else if (variant == "G2") {
            v = ioc::StarPlusEdgeVariant::LeafLeaf;
        } else if (variant == "G3") {
            v = ioc::StarPlusEdgeVariant::CenterLeaf;
        } else {
            throw ioc::Error(ErrorCode::BadParam, "unknown star-plus-edge variant '" + params[0] + "'");
        }
        return ioc::gen_star_plus_edge(v, parse_count(params[1], "K"));
    }
    throw ioc::Error(ErrorCode::BadParam, "unknown family '" + family + "'");
}

std::string family_sidecar(const ioc::Family& f) {
    nlohmann::ordered_json j;
    j["family"] = ioc::to_string(f.spec.kind);
    j["name"] = f.spec.name();
    j["n"] = f.graph.order();
    j["m"] = f.graph.size();
    if (f.spec.kind == ioc::FamilyKind::StarPlusEdge) {
        j["variant"] = ioc::to_string(f.spec.variant);
    }
    if (f.spec.kind != ioc::FamilyKind::FamilyTree) j["param"] = f.spec.param;
    if (f.spec.vector) j["vector"] = f.spec.vector->k;
    nlohmann::ordered_json labels = nlohmann::ordered_json::object();
    for (const auto& [name, v] : f.spec.labels) labels[name] = v;
    j["labels"] = labels;
    if (f.spec.reference_code) {
        j["reference_code"] = f.spec.reference_code->members();
    } else {
        j["reference_code"] = nullptr;
    }
    return j.dump(2);
}

ioc::AuditOptions to_options(const ioc_audit_options* o) {
    ioc::AuditOptions out;
    out.n_min = o->n_min;
    out.n_max = o->n_max;
    out.delta = o->delta;
    out.oracle_max_order = o->oracle_max_order;
    out.samples_per_order = o->samples_per_order;
    out.seed = o->seed;
    out.workers = o->workers;
    return out;
}

ioc_audit_report* wrap_report(ioc::AuditReport report) {
    auto* r = new ioc_audit_report{std::move(report), {}, {}, {}};
    r->csv = r->report.to_csv();
    r->summary = r->report.summary_json(false);
    r->summary_with_runtime = r->report.summary_json(true);
    return r;
}

#define IOC_REQUIRE(ptr)                                                       \
    do {                                                                       \
        if ((ptr) == nullptr) return fail(IOC_NULL_ARGUMENT, #ptr " is NULL"); \
    } while (0)

}  // namespace

extern "C" {

const char* ioc_status_name(ioc_status status) {
    if (status == IOC_OK) return "Ok";
    if (status == IOC_NULL_ARGUMENT) return "NullArgument";
    if (status >= IOC_INVALID_VERTEX && status <= IOC_INTERNAL) {
        return ioc::to_string(static_cast<ioc::ErrorCode>(status));
    }
    return "Unknown";
}

const char* ioc_last_error(void) { return g_last_error.c_str(); }

void ioc_string_free(char* s) { std::free(s); }

ioc_status ioc_graph_from_edges(size_t n, const uint32_t* endpoints, size_t edge_count, ioc_graph** out) {
    IOC_REQUIRE(out);
    *out = nullptr;
    if (edge_count > 0) IOC_REQUIRE(endpoints);
    return guarded([&] {
        std::vector<ioc::Edge> edges(edge_count);
        for (std::size_t i = 0; i < edge_count; ++i) edges[i] = {endpoints[2 * i], endpoints[2 * i + 1]};
        *out = new ioc_graph{ioc::Graph(n, edges)};
        return IOC_OK;
    });
}

ioc_status ioc_graph_parse(const char* text, ioc_graph** out) {
    IOC_REQUIRE(out);
    *out = nullptr;
    IOC_REQUIRE(text);
    return guarded([&] {
        *out = new ioc_graph{ioc::parse_graph(text)};
        return IOC_OK;
    });
}

ioc_status ioc_graph_read_file(const char* path, ioc_graph** out) {
    IOC_REQUIRE(out);
    *out = nullptr;
    IOC_REQUIRE(path);
    return guarded([&] {
        *out = new ioc_graph{ioc::read_graph_file(path)};
        return IOC_OK;
    });
}

void ioc_graph_free(ioc_graph* g) { delete g; }

size_t ioc_graph_order(const ioc_graph* g) { return g ? g->g.order() : 0; }
size_t ioc_graph_size(const ioc_graph* g) { return g ? g->g.size() : 0; }
size_t ioc_graph_max_degree(const ioc_graph* g) { return g ? ioc::max_degree(g->g) : 0; }
int ioc_graph_is_connected(const ioc_graph* g) { return g && ioc::is_connected(g->g) ? 1 : 0; }
int ioc_graph_is_tree(const ioc_graph* g) { return g && ioc::is_tree(g->g) ? 1 : 0; }
int ioc_graph_is_twin_free(const ioc_graph* g) { return g && ioc::is_open_twin_free(g->g) ? 1 : 0; }
int ioc_graph_has_four_cycle(const ioc_graph* g) { return g && ioc::has_four_cycle(g->g) ? 1 : 0; }

char* ioc_graph_to_graph6(const ioc_graph* g) {
    if (g == nullptr) return nullptr;
    try {
        return dup_string(ioc::to_graph6(g->g));
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return nullptr;
    }
}

char* ioc_graph_to_edge_list(const ioc_graph* g) {
    if (g == nullptr) return nullptr;
    try {
        return dup_string(ioc::to_edge_list(g->g));
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return nullptr;
    }
}

ioc_status ioc_graph_canonical_graph6(const ioc_graph* g, char** out) {
    IOC_REQUIRE(out);
    *out = nullptr;
    IOC_REQUIRE(g);
    return guarded([&] {
        *out = dup_string(ioc::canonical_graph6(g->g));
        return IOC_OK;
    });
}

ioc_status ioc_vertex_set_create(size_t universe, const uint32_t* members, size_t count, ioc_vertex_set** out) {
    IOC_REQUIRE(out);
    *out = nullptr;
    if (count > 0) IOC_REQUIRE(members);
    return guarded([&] {
        ioc::VertexSet s(universe);
        for (std::size_t i = 0; i < count; ++i) s.insert(members[i]);
        *out = new ioc_vertex_set{std::move(s)};
        return IOC_OK;
    });
}

ioc_status ioc_vertex_set_parse(size_t universe, const char* text, ioc_vertex_set** out) {
    IOC_REQUIRE(out);
    *out = nullptr;
    IOC_REQUIRE(text);
    return guarded([&] {
        ioc::VertexSet s(universe);
        for (const auto& token : split_tokens(text)) {
            std::size_t pos = 0;
            unsigned long long v = 0;
            try {
                v = std::stoull(token, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos != token.size() || token[0] == '-') {
                throw ioc::Error(ioc::ErrorCode::ParseError, "invalid vertex '" + token + "' in code");
            }
            if (v >= universe) {
                throw ioc::Error(ioc::ErrorCode::InvalidVertex,
                                 "vertex " + token + " out of range for " + std::to_string(universe) + " vertices");
            }
            s.insert(static_cast<ioc::Vertex>(v));
        }
        *out = new ioc_vertex_set{std::move(s)};
        return IOC_OK;
    });
}

void ioc_vertex_set_free(ioc_vertex_set* s) { delete s; }
size_t ioc_vertex_set_universe(const ioc_vertex_set* s) { return s ? s->s.universe() : 0; }
size_t ioc_vertex_set_size(const ioc_vertex_set* s) { return s ? s->s.size() : 0; }
int ioc_vertex_set_contains(const ioc_vertex_set* s, uint32_t v) { return s && s->s.contains(v) ? 1 : 0; }

size_t ioc_vertex_set_members(const ioc_vertex_set* s, uint32_t* buffer, size_t capacity) {
    if (s == nullptr) return 0;
    std::size_t i = 0;
    s->s.for_each([&](ioc::Vertex v) {
        if (buffer != nullptr && i < capacity) buffer[i] = v;
        ++i;
    });
    return i;
}

ioc_status ioc_is_total_dominating(const ioc_graph* g, const ioc_vertex_set* code, ioc_verdict* out) {
    IOC_REQUIRE(g);
    IOC_REQUIRE(code);
    IOC_REQUIRE(out);
    return guarded([&] {
        fill_verdict(ioc::is_total_dominating(g->g, code->s), out);
        return IOC_OK;
    });
}

ioc_status ioc_is_separating_open_code(const ioc_graph* g, const ioc_vertex_set* code, ioc_verdict* out) {
    IOC_REQUIRE(g);
    IOC_REQUIRE(code);
    IOC_REQUIRE(out);
    return guarded([&] {
        fill_verdict(ioc::is_separating_open_code(g->g, code->s), out);
        return IOC_OK;
    });
}

ioc_status ioc_is_io_code(const ioc_graph* g, const ioc_vertex_set* code, ioc_verdict* out) {
    IOC_REQUIRE(g);
    IOC_REQUIRE(code);
    IOC_REQUIRE(out);
    return guarded([&] {
        fill_verdict(ioc::is_io_code(g->g, code->s), out);
        return IOC_OK;
    });
}

int ioc_admits_io_code(const ioc_graph* g) { return g && ioc::admits_io_code(g->g) ? 1 : 0; }

ioc_status ioc_signature(const ioc_graph* g, const ioc_vertex_set* code, uint32_t v, ioc_vertex_set** out) {
    IOC_REQUIRE(out);
    *out = nullptr;
    IOC_REQUIRE(g);
    IOC_REQUIRE(code);
    return guarded([&] {
        *out = new ioc_vertex_set{ioc::signature(g->g, code->s, v)};
        return IOC_OK;
    });
}

ioc_status ioc_solve(const ioc_graph* g, ioc_solve_result** out) {
    IOC_REQUIRE(out);
    *out = nullptr;
    IOC_REQUIRE(g);
    return guarded([&] {
        auto r = ioc::solve(g->g);
        ioc::VertexSet code = r.code;
        *out = new ioc_solve_result{std::move(r), {std::move(code)}};
        return IOC_OK;
    });
}

ioc_status ioc_solve_oracle(const ioc_graph* g, size_t max_order, ioc_solve_result** out) {
    IOC_REQUIRE(out);
    *out = nullptr;
    IOC_REQUIRE(g);
    return guarded([&] {
        auto r = ioc::solve_oracle(g->g, max_order);
        ioc::VertexSet code = r.code;
        *out = new ioc_solve_result{std::move(r), {std::move(code)}};
        return IOC_OK;
    });
}

ioc_status ioc_solve_with_budget(const ioc_graph* g, size_t max_size, ioc_vertex_set** out) {
    IOC_REQUIRE(out);
    *out = nullptr;
    IOC_REQUIRE(g);
    return guarded([&] {
        if (auto s = ioc::solve_with_budget(g->g, max_size)) *out = new ioc_vertex_set{std::move(*s)};
        return IOC_OK;
    });
}

void ioc_solve_result_free(ioc_solve_result* r) { delete r; }
size_t ioc_solve_result_gamma(const ioc_solve_result* r) { return r ? r->r.gamma : 0; }
const ioc_vertex_set* ioc_solve_result_code(const ioc_solve_result* r) { return r ? &r->code : nullptr; }
uint64_t ioc_solve_result_nodes(const ioc_solve_result* r) { return r ? r->r.nodes_explored : 0; }
const char* ioc_solve_result_method(const ioc_solve_result* r) { return r ? ioc::to_string(r->r.method) : ""; }
double ioc_solve_result_wall_time_ms(const ioc_solve_result* r) { return r ? r->r.wall_time_ms : 0.0; }

ioc_status ioc_construct(const ioc_graph* g, size_t delta, ioc_construction** out) {
    IOC_REQUIRE(out);
    *out = nullptr;
    IOC_REQUIRE(g);
    return guarded([&] {
        auto c = ioc::is_tree(g->g) ? ioc::construct_tree_code(g->g, delta) : ioc::construct_graph_code(g->g, delta);
        ioc::VertexSet code = c.code;
        std::string trace = c.trace.to_json();
        *out = new ioc_construction{std::move(c), {std::move(code)}, std::move(trace)};
        return IOC_OK;
    });
}

void ioc_construction_free(ioc_construction* c) { delete c; }
const ioc_vertex_set* ioc_construction_code(const ioc_construction* c) { return c ? &c->code : nullptr; }
const char* ioc_construction_bound_status(const ioc_construction* c) {
    return c ? ioc::to_string(c->c.bound_status) : "";
}
int ioc_construction_exceptional(const ioc_construction* c) { return c && c->c.exceptional ? 1 : 0; }
const char* ioc_construction_trace_json(const ioc_construction* c) { return c ? c->trace_json.c_str() : ""; }

const char* ioc_check_bound(size_t n, size_t size, size_t delta, int is_subdivided_star) {
    return ioc::to_string(ioc::check_bound(n, size, delta, is_subdivided_star != 0));
}

ioc_status ioc_family_generate(const char* family, const char* params, ioc_family** out) {
    IOC_REQUIRE(out);
    *out = nullptr;
    IOC_REQUIRE(family);
    IOC_REQUIRE(params);
    return guarded([&] {
        auto f = generate_family(family, split_tokens(params));
        ioc::Graph g = f.graph;
        std::string name = f.spec.name();
        std::string sidecar = family_sidecar(f);
        *out = new ioc_family{std::move(f), {std::move(g)}, std::move(name), std::move(sidecar)};
        return IOC_OK;
    });
}

void ioc_family_free(ioc_family* f) { delete f; }
const ioc_graph* ioc_family_graph(const ioc_family* f) { return f ? &f->graph : nullptr; }
const char* ioc_family_name(const ioc_family* f) { return f ? f->name.c_str() : ""; }
const char* ioc_family_sidecar_json(const ioc_family* f) { return f ? f->sidecar.c_str() : ""; }

ioc_status ioc_recognize_family(const ioc_graph* g, char** json_out) {
    IOC_REQUIRE(json_out);
    *json_out = nullptr;
    IOC_REQUIRE(g);
    return guarded([&] {
        nlohmann::ordered_json j = nullptr;
        if (ioc::is_tree(g->g)) {
            if (auto rec = ioc::recognize_family(g->g)) {
                j = nlohmann::ordered_json::object();
                j["root"] = rec->root;
                j["vector"] = rec->vector.k;
                j["canonical_set"] = ioc::canonical_set(g->g, *rec).members();
            }
        }
        *json_out = dup_string(j.dump());
        return IOC_OK;
    });
}

ioc_status ioc_count_trees(size_t n, size_t* out) {
    IOC_REQUIRE(out);
    return guarded([&] {
        std::size_t count = 0;
        ioc::for_each_tree(n, [&](const ioc::Graph&) {
            ++count;
            return true;
        });
        *out = count;
        return IOC_OK;
    });
}

void ioc_audit_options_init(ioc_audit_options* options) {
    if (options == nullptr) return;
    ioc::AuditOptions d;
    options->n_min = d.n_min;
    options->n_max = d.n_max;
    options->delta = d.delta;
    options->oracle_max_order = d.oracle_max_order;
    options->samples_per_order = d.samples_per_order;
    options->seed = d.seed;
    options->workers = d.workers;
}

ioc_status ioc_audit_trees(const ioc_audit_options* options, ioc_audit_report** out) {
    IOC_REQUIRE(out);
    *out = nullptr;
    IOC_REQUIRE(options);
    return guarded([&] {
        *out = wrap_report(ioc::audit_trees(to_options(options)));
        return IOC_OK;
    });
}

ioc_status ioc_audit_graphs(const ioc_audit_options* options, ioc_audit_report** out) {
    IOC_REQUIRE(out);
    *out = nullptr;
    IOC_REQUIRE(options);
    return guarded([&] {
        *out = wrap_report(ioc::audit_graphs(to_options(options)));
        return IOC_OK;
    });
}

void ioc_audit_report_free(ioc_audit_report* r) { delete r; }
const char* ioc_audit_report_csv(const ioc_audit_report* r) { return r ? r->csv.c_str() : ""; }
const char* ioc_audit_report_summary_json(const ioc_audit_report* r, int include_runtime) {
    if (r == nullptr) return "";
    return include_runtime ? r->summary_with_runtime.c_str() : r->summary.c_str();
}
size_t ioc_audit_report_violations(const ioc_audit_report* r) { return r ? r->report.summary.violations : 0; }

int ioc_audit_report_ok(const ioc_audit_report* r) {
    if (r == nullptr) return 0;
    const auto& s = r->report.summary;
    return s.violations == 0 && s.constructor_failures == 0 && s.exceptional_matches_stars &&
                   s.oracle_mismatches == 0
               ? 1
               : 0;
}

ioc_status ioc_verify_tight_families(size_t delta_max, size_t p_max, size_t p_exact_max, size_t p_decision_max,
                                     char** json_out) {
    IOC_REQUIRE(json_out);
    *json_out = nullptr;
    return guarded([&] {
        ioc::TightFamilyOptions o;
        o.delta_max = delta_max;
        o.p_max = p_max;
        o.p_exact_max = p_exact_max;
        o.p_decision_max = p_decision_max;
        *json_out = dup_string(ioc::verify_tight_families(o));
        return IOC_OK;
    });
}

}  // extern "C"
