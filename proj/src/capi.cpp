#include "cliquevec.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "betti.hpp"
#include "chordal.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "homology.hpp"
#include "threshold.hpp"
#include "transform.hpp"
#include "verify.hpp"

struct cqv_graph {
    cqv::Graph g;
};
struct cqv_betti_table {
    cqv::BettiTable t;
};
struct cqv_bvector_enum {
    cqv::BVectorEnumerator e;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
cqv_status guarded(Fn&& fn) {
    try {
        fn();
        return CQV_OK;
    } catch (const cqv::ParseError& e) {
        g_last_error = e.what();
        return CQV_EPARSE;
    } catch (const cqv::ValidationReject& e) {
        g_last_error = e.what();
        return CQV_EREJECTED;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return CQV_EINVAL;
    } catch (const std::out_of_range& e) {
        g_last_error = e.what();
        return CQV_EINVAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CQV_EINTERNAL;
    }
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

std::string join_u64(const std::vector<std::uint64_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

cqv::GraphFormat parse_format(const char* format) {
    const std::string f = format ? format : "";
    if (f == "edge-list") return cqv::GraphFormat::edge_list;
    if (f == "graph6") return cqv::GraphFormat::graph6;
    throw std::invalid_argument("unknown graph format '" + f +
                                "' (expected edge-list or graph6)");
}

}  // namespace

extern "C" {

const char* cqv_version(void) { return "1.0.0"; }

const char* cqv_status_name(cqv_status s) {
    switch (s) {
        case CQV_OK: return "ok";
        case CQV_EINVAL: return "invalid-argument";
        case CQV_EPARSE: return "parse-error";
        case CQV_EREJECTED: return "rejected";
        case CQV_EINTERNAL: return "internal-error";
    }
    return "unknown";
}

const char* cqv_last_error(void) { return g_last_error.c_str(); }

void cqv_string_free(char* s) { std::free(s); }

cqv_status cqv_graph_new(int n, cqv_graph** out) {
    return guarded([&] {
        require(out != nullptr, "out is null");
        *out = new cqv_graph{cqv::Graph(n)};
    });
}

void cqv_graph_free(cqv_graph* g) { delete g; }

cqv_status cqv_graph_add_edge(cqv_graph* g, int u, int v) {
    return guarded([&] {
        require(g != nullptr, "graph is null");
        g->g.add_edge(u, v);
    });
}

int cqv_graph_vertex_count(const cqv_graph* g) { return g ? g->g.vertex_count() : 0; }

int cqv_graph_edge_count(const cqv_graph* g) { return g ? g->g.edge_count() : 0; }

int cqv_graph_has_edge(const cqv_graph* g, int u, int v) {
    if (!g || u < 0 || v < 0 || u >= g->g.vertex_count() || v >= g->g.vertex_count())
        return 0;
    return g->g.has_edge(u, v) ? 1 : 0;
}

int cqv_graph_component_count(const cqv_graph* g) {
    return g ? cqv::component_count(g->g) : 0;
}

cqv_status cqv_graph_parse(const char* text, const char* format, cqv_graph** out) {
    return guarded([&] {
        require(text != nullptr, "text is null");
        require(out != nullptr, "out is null");
        const std::string f = format ? format : "auto";
        cqv::Graph g = f == "auto" ? cqv::parse_graph(text)
                                   : cqv::parse_graph(text, parse_format(format));
        *out = new cqv_graph{std::move(g)};
    });
}

cqv_status cqv_graph_format(const cqv_graph* g, const char* format, char** out) {
    return guarded([&] {
        require(g != nullptr, "graph is null");
        require(out != nullptr, "out is null");
        *out = dup_string(cqv::format_graph(g->g, parse_format(format)));
    });
}

cqv_status cqv_graph_induced(const cqv_graph* g, const int* verts, int count,
                             cqv_graph** out) {
    return guarded([&] {
        require(g != nullptr, "graph is null");
        require(verts != nullptr || count == 0, "verts is null");
        require(count >= 0, "count is negative");
        require(out != nullptr, "out is null");
        const std::vector<int> w(verts, verts + count);
        *out = new cqv_graph{cqv::induced_subgraph(g->g, w)};
    });
}

cqv_status cqv_graph_cone(const cqv_graph* g, cqv_graph** out) {
    return guarded([&] {
        require(g != nullptr, "graph is null");
        require(out != nullptr, "out is null");
        *out = new cqv_graph{cqv::cone(g->g)};
    });
}

cqv_status cqv_graph_add_isolated(const cqv_graph* g, cqv_graph** out) {
    return guarded([&] {
        require(g != nullptr, "graph is null");
        require(out != nullptr, "out is null");
        *out = new cqv_graph{cqv::add_isolated(g->g)};
    });
}

cqv_status cqv_graph_chordal_peo(const cqv_graph* g, char** out) {
    return guarded([&] {
        require(g != nullptr, "graph is null");
        require(out != nullptr, "out is null");
        const auto peo = cqv::is_chordal(g->g);
        if (!peo) {
            *out = nullptr;
            return;
        }
        std::string s;
        for (std::size_t i = 0; i < peo->order.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(peo->order[i]);
        }
        *out = dup_string(s);
    });
}

cqv_status cqv_graph_clique_vector(const cqv_graph* g, int force_bruteforce, char** out) {
    return guarded([&] {
        require(g != nullptr, "graph is null");
        require(out != nullptr, "out is null");
        const auto c = force_bruteforce ? cqv::clique_vector_bruteforce(g->g)
                                        : cqv::clique_vector(g->g);
        *out = dup_string(join_u64(c));
    });
}

cqv_status cqv_graph_connectivity(const cqv_graph* g, int classical, int* out) {
    return guarded([&] {
        require(g != nullptr, "graph is null");
        require(out != nullptr, "out is null");
        *out = cqv::connectivity(
            g->g, classical ? cqv::Convention::classical : cqv::Convention::deletion);
    });
}

cqv_status cqv_clique_to_b(const char* c_csv, char** out) {
    return guarded([&] {
        require(c_csv != nullptr, "vector is null");
        require(out != nullptr, "out is null");
        *out = dup_string(cqv::format_int_vector(cqv::c_to_b(cqv::parse_int_vector(c_csv))));
    });
}

cqv_status cqv_b_to_clique(const char* b_csv, char** out) {
    return guarded([&] {
        require(b_csv != nullptr, "vector is null");
        require(out != nullptr, "out is null");
        *out = dup_string(cqv::format_int_vector(cqv::b_to_c(cqv::parse_int_vector(b_csv))));
    });
}

cqv_status cqv_validate(const char* c_csv, int k, int* out_valid, char** out_reason) {
    return guarded([&] {
        require(c_csv != nullptr, "vector is null");
        require(out_valid != nullptr, "out_valid is null");
        require(out_reason != nullptr, "out_reason is null");
        const auto v = cqv::validate_clique_vector(cqv::parse_int_vector(c_csv), k);
        *out_valid = v.ok ? 1 : 0;
        *out_reason = v.ok ? nullptr : dup_string(v.reason);
    });
}

cqv_status cqv_binomial(int64_t n, int64_t k, char** out) {
    return guarded([&] {
        require(n >= 0 && k >= 0, "binomial arguments must be nonnegative");
        require(out != nullptr, "out is null");
        *out = dup_string(cqv::binomial(static_cast<unsigned long>(n),
                                        static_cast<unsigned long>(k))
                              .get_str());
    });
}

cqv_status cqv_word_to_graph(const char* word, cqv_graph** out) {
    return guarded([&] {
        require(word != nullptr, "word is null");
        require(out != nullptr, "out is null");
        *out = new cqv_graph{cqv::word_to_graph(word)};
    });
}

cqv_status cqv_graph_to_word(const cqv_graph* g, char** out_word, int* out_is_threshold) {
    return guarded([&] {
        require(g != nullptr, "graph is null");
        require(out_word != nullptr, "out_word is null");
        require(out_is_threshold != nullptr, "out_is_threshold is null");
        const auto w = cqv::graph_to_word(g->g);
        *out_is_threshold = w.has_value() ? 1 : 0;
        *out_word = w ? dup_string(*w) : nullptr;
    });
}

cqv_status cqv_word_to_bvector(const char* word, char** out) {
    return guarded([&] {
        require(word != nullptr, "word is null");
        require(out != nullptr, "out is null");
        *out = dup_string(cqv::format_int_vector(cqv::word_to_bvector(word)));
    });
}

cqv_status cqv_bvector_to_word(const char* b_csv, char** out) {
    return guarded([&] {
        require(b_csv != nullptr, "vector is null");
        require(out != nullptr, "out is null");
        *out = dup_string(cqv::bvector_to_word(cqv::parse_int_vector(b_csv)));
    });
}

cqv_status cqv_word_is_k_connected(const char* word, int k, int* out) {
    return guarded([&] {
        require(word != nullptr, "word is null");
        require(out != nullptr, "out is null");
        *out = cqv::word_is_k_connected(word, k) ? 1 : 0;
    });
}

cqv_status cqv_realize(const char* c_csv, int k, cqv_graph** out_graph, char** out_word) {
    return guarded([&] {
        require(c_csv != nullptr, "vector is null");
        require(out_graph != nullptr, "out_graph is null");
        require(out_word != nullptr, "out_word is null");
        const cqv::IntVector c = cqv::parse_int_vector(c_csv);
        cqv::Graph g = cqv::realize(c, k);
        *out_graph = new cqv_graph{std::move(g)};
        *out_word = dup_string(cqv::bvector_to_word(cqv::c_to_b(c)));
    });
}

cqv_status cqv_bvector_enum_new(int64_t n, int d, int k, cqv_bvector_enum** out) {
    return guarded([&] {
        require(out != nullptr, "out is null");
        *out = new cqv_bvector_enum{cqv::BVectorEnumerator(n, d, k)};
    });
}

cqv_status cqv_bvector_enum_next(cqv_bvector_enum* e, char** out) {
    return guarded([&] {
        require(e != nullptr, "enumerator is null");
        require(out != nullptr, "out is null");
        const auto b = e->e.next();
        *out = b ? dup_string(cqv::format_int_vector(*b)) : nullptr;
    });
}

void cqv_bvector_enum_free(cqv_bvector_enum* e) { delete e; }

cqv_status cqv_bvector_count(int64_t n, int d, int k, char** out) {
    return guarded([&] {
        require(out != nullptr, "out is null");
        *out = dup_string(cqv::bvector_count(n, d, k).get_str());
    });
}

cqv_status cqv_graph_homology(const cqv_graph* g, char** out) {
    return guarded([&] {
        require(g != nullptr, "graph is null");
        require(out != nullptr, "out is null");
        *out = dup_string(join_u64(cqv::reduced_homology_ranks(g->g).ranks));
    });
}

cqv_status cqv_graph_betti_strand(const cqv_graph* g, char** out) {
    return guarded([&] {
        require(g != nullptr, "graph is null");
        require(out != nullptr, "out is null");
        *out = dup_string(join_u64(cqv::betti_linear_strand(g->g)));
    });
}

cqv_status cqv_graph_betti_table(const cqv_graph* g, cqv_betti_table** out) {
    return guarded([&] {
        require(g != nullptr, "graph is null");
        require(out != nullptr, "out is null");
        *out = new cqv_betti_table{cqv::betti_table_full(g->g)};
    });
}

void cqv_betti_table_free(cqv_betti_table* t) { delete t; }

int cqv_betti_table_size(const cqv_betti_table* t) {
    return t ? static_cast<int>(t->t.entries.size()) : 0;
}

cqv_status cqv_betti_table_entry(const cqv_betti_table* t, int idx, int* out_i, int* out_j,
                                 uint64_t* out_value) {
    return guarded([&] {
        require(t != nullptr, "table is null");
        require(out_i && out_j && out_value, "output pointer is null");
        require(idx >= 0 && idx < static_cast<int>(t->t.entries.size()),
                "entry index out of range");
        auto it = t->t.entries.begin();
        std::advance(it, idx);
        *out_i = it->first.first;
        *out_j = it->first.second;
        *out_value = it->second;
    });
}

int cqv_betti_table_projective_dimension(const cqv_betti_table* t) {
    return t ? t->t.projective_dimension() : 0;
}

int cqv_betti_table_depth(const cqv_betti_table* t) { return t ? t->t.depth() : 0; }

int cqv_betti_table_two_linear(const cqv_betti_table* t) {
    return t && t->t.has_two_linear_resolution() ? 1 : 0;
}

cqv_status cqv_betti_table_json(const cqv_betti_table* t, char** out) {
    return guarded([&] {
        require(t != nullptr, "table is null");
        require(out != nullptr, "out is null");
        *out = dup_string(t->t.to_json());
    });
}

cqv_status cqv_graph_connectivity_from_betti(const cqv_graph* g, int* out) {
    return guarded([&] {
        require(g != nullptr, "graph is null");
        require(out != nullptr, "out is null");
        *out = cqv::connectivity_from_betti(g->g);
    });
}

cqv_status cqv_verify(const char* theorem, int n_max, int jobs, char** out_json,
                      int* out_pass) {
    return guarded([&] {
        require(theorem != nullptr, "theorem is null");
        require(out_json != nullptr, "out_json is null");
        require(out_pass != nullptr, "out_pass is null");
        const auto report = cqv::run_verification(theorem, n_max, jobs);
        *out_json = dup_string(report.to_json());
        *out_pass = report.pass ? 1 : 0;
    });
}

}  // extern "C"
