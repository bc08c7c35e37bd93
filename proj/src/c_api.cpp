#include "gamma2/gamma2.h"

#include <cstring>
#include <string>

#include "gamma2/curvature.hpp"
#include "gamma2/errors.hpp"
#include "gamma2/families.hpp"
#include "gamma2/graph.hpp"
#include "gamma2/isoperimetry.hpp"
#include "gamma2/parallel.hpp"
#include "gamma2/spectral.hpp"
#include "gamma2/verify.hpp"

struct g2_graph {
    g2::Graph graph;
};

namespace {

thread_local std::string t_last_error;

g2_status fail(g2_status code, const std::string& message) {
    t_last_error = message;
    return code;
}

template <typename Fn>
g2_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const g2::InputError& e) {
        return fail(G2_INVALID_INPUT, e.what());
    } catch (const g2::CapError& e) {
        return fail(G2_CAP_EXCEEDED, e.what());
    } catch (const std::exception& e) {
        return fail(G2_INTERNAL_ERROR, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

g2_status make_graph(g2::Graph g, g2_graph** out) {
    if (!out) return fail(G2_INVALID_INPUT, "null output handle");
    *out = new g2_graph{std::move(g)};
    return G2_OK;
}

} // namespace

extern "C" {

const char* g2_last_error(void) { return t_last_error.c_str(); }

void g2_string_free(char* s) { delete[] s; }

void g2_graph_free(g2_graph* g) { delete g; }

int32_t g2_threads(void) { return g2::worker_threads(); }

void g2_set_threads(int32_t n) { g2::set_worker_threads(n); }

g2_status g2_graph_parse_edge_list(const char* text, g2_graph** out) {
    return guarded([&] {
        if (!text) return fail(G2_INVALID_INPUT, "null text");
        return make_graph(g2::parse_edge_list(text), out);
    });
}

g2_status g2_graph_parse_json(const char* text, g2_graph** out) {
    return guarded([&] {
        if (!text) return fail(G2_INVALID_INPUT, "null text");
        return make_graph(g2::parse_graph_json(text), out);
    });
}

g2_status g2_graph_edge_list(const g2_graph* g, char** out) {
    return guarded([&] {
        if (!g || !out) return fail(G2_INVALID_INPUT, "null argument");
        *out = dup_string(g2::serialize_edge_list(g->graph));
        return G2_OK;
    });
}

g2_status g2_graph_json(const g2_graph* g, char** out) {
    return guarded([&] {
        if (!g || !out) return fail(G2_INVALID_INPUT, "null argument");
        *out = dup_string(g2::serialize_graph_json(g->graph));
        return G2_OK;
    });
}

g2_status g2_graph_counts(const g2_graph* g, int32_t* vertices, int64_t* edges) {
    if (!g) return fail(G2_INVALID_INPUT, "null graph");
    if (vertices) *vertices = g->graph.vertex_count();
    if (edges) *edges = g->graph.edge_count();
    return G2_OK;
}

g2_status g2_gen_hypercube(int32_t n, g2_graph** out) {
    return guarded([&] { return make_graph(g2::hypercube(n), out); });
}

g2_status g2_gen_complete(int32_t n, g2_graph** out) {
    return guarded([&] { return make_graph(g2::complete(n), out); });
}

g2_status g2_gen_cycle(int32_t n, g2_graph** out) {
    return guarded([&] { return make_graph(g2::cycle(n), out); });
}

g2_status g2_gen_path(int32_t n, g2_graph** out) {
    return guarded([&] { return make_graph(g2::path(n), out); });
}

g2_status g2_gen_slice(int32_t n, int32_t k, g2_graph** out) {
    return guarded([&] { return make_graph(g2::slice(n, k), out); });
}

g2_status g2_gen_middle_slice(int32_t n, g2_graph** out) {
    return guarded([&] { return make_graph(g2::middle_slice_adjacent(n), out); });
}

g2_status g2_gen_dyck(int32_t n, g2_graph** out) {
    return guarded([&] { return make_graph(g2::dyck(n), out); });
}

g2_status g2_gen_tree(int32_t d, int32_t depth, g2_graph** out) {
    return guarded([&] { return make_graph(g2::tree(d, depth), out); });
}

g2_status g2_gen_sn_special(int32_t n, g2_graph** out) {
    return guarded([&] { return make_graph(g2::sn_special(n), out); });
}

g2_status g2_gen_sn_transpositions(int32_t n, g2_graph** out) {
    return guarded([&] { return make_graph(g2::sn_transpositions(n), out); });
}

g2_status g2_gen_abelian_cayley(const int32_t* orders, int32_t norders,
                                const int32_t* generators, int32_t ngens,
                                g2_graph** out) {
    return guarded([&] {
        if (!orders || norders <= 0 || (!generators && ngens > 0))
            return fail(G2_INVALID_INPUT, "abelian_cayley: null or empty spec");
        g2::AbelianCayleySpec spec;
        spec.orders.assign(orders, orders + norders);
        for (int32_t i = 0; i < ngens; ++i)
            spec.generators.emplace_back(generators + i * norders,
                                         generators + (i + 1) * norders);
        return make_graph(g2::abelian_cayley(spec), out);
    });
}

g2_status g2_gen_perm_cayley(int32_t symbols, const int32_t* generators,
                             int32_t ngens, g2_graph** out) {
    return guarded([&] {
        if (!generators || ngens <= 0)
            return fail(G2_INVALID_INPUT, "perm_cayley: null or empty generator list");
        g2::PermCayleySpec spec;
        spec.symbols = symbols;
        for (int32_t i = 0; i < ngens; ++i)
            spec.generators.emplace_back(generators + i * symbols,
                                         generators + (i + 1) * symbols);
        return make_graph(g2::perm_cayley(spec), out);
    });
}

g2_status g2_curvature_json(const g2_graph* g, int32_t interior_only, char** out) {
    return guarded([&] {
        if (!g || !out) return fail(G2_INVALID_INPUT, "null argument");
        auto report = g2::curvature(g->graph, interior_only != 0);
        *out = dup_string(g2::curvature_report_json(report));
        return G2_OK;
    });
}

g2_status g2_spectrum_json(const g2_graph* g, char** out) {
    return guarded([&] {
        if (!g || !out) return fail(G2_INVALID_INPUT, "null argument");
        *out = dup_string(g2::spectral_report_json(g2::spectrum(g->graph)));
        return G2_OK;
    });
}

g2_status g2_cheeger_json(const g2_graph* g, const char* method, int32_t exact_cap,
                          char** out) {
    return guarded([&] {
        if (!g || !out || !method) return fail(G2_INVALID_INPUT, "null argument");
        std::string m = method;
        g2::IsoperimetryReport report;
        if (m == "exact")
            report = g2::cheeger_exact(g->graph, exact_cap > 0 ? exact_cap : 22);
        else if (m == "sweep")
            report = g2::cheeger_sweep(g->graph);
        else
            return fail(G2_INVALID_INPUT, "cheeger method must be \"exact\" or \"sweep\"");
        *out = dup_string(g2::isoperimetry_report_json(report));
        return G2_OK;
    });
}

g2_status g2_sn_test_set_json(int32_t n, char** out) {
    return guarded([&] {
        if (!out) return fail(G2_INVALID_INPUT, "null argument");
        *out = dup_string(g2::isoperimetry_report_json(g2::sn_test_set(n)));
        return G2_OK;
    });
}

g2_status g2_verify_jsonl(const char* corpus, uint64_t seed, double tol_scale,
                          char** out) {
    return guarded([&] {
        if (!corpus || !out) return fail(G2_INVALID_INPUT, "null argument");
        auto report = g2::run_all(corpus, seed, tol_scale);
        *out = dup_string(g2::verification_report_jsonl(report));
        if (!report.all_passed())
            return fail(G2_CHECK_FAILED, std::to_string(report.failed_required()) +
                                             " required checks failed");
        return G2_OK;
    });
}

} // extern "C"
