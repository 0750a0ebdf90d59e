#include <doctest.h>

#include <cstring>
#include <string>

#include "cliquevec.h"

namespace {

// take ownership of a C string result
std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out(s);
    cqv_string_free(s);
    return out;
}

struct GraphHandle {
    cqv_graph* g = nullptr;
    ~GraphHandle() { cqv_graph_free(g); }
};

}  // namespace

TEST_CASE("version and status names") {
    CHECK(std::string(cqv_version()) == "1.0.0");
    CHECK(std::string(cqv_status_name(CQV_OK)) == "ok");
    CHECK(std::string(cqv_status_name(CQV_EPARSE)) == "parse-error");
    CHECK(std::string(cqv_status_name(CQV_EREJECTED)) == "rejected");
    CHECK(std::string(cqv_status_name(static_cast<cqv_status>(99))) == "unknown");
}

TEST_CASE("graph build, inspect, format") {
    GraphHandle h;
    REQUIRE(cqv_graph_new(4, &h.g) == CQV_OK);
    CHECK(cqv_graph_vertex_count(h.g) == 4);
    CHECK(cqv_graph_add_edge(h.g, 0, 1) == CQV_OK);
    CHECK(cqv_graph_add_edge(h.g, 0, 2) == CQV_OK);
    CHECK(cqv_graph_add_edge(h.g, 1, 3) == CQV_OK);
    CHECK(cqv_graph_add_edge(h.g, 2, 3) == CQV_OK);
    CHECK(cqv_graph_edge_count(h.g) == 4);
    CHECK(cqv_graph_has_edge(h.g, 1, 3) == 1);
    CHECK(cqv_graph_has_edge(h.g, 1, 2) == 0);
    CHECK(cqv_graph_component_count(h.g) == 1);

    char* g6 = nullptr;
    REQUIRE(cqv_graph_format(h.g, "graph6", &g6) == CQV_OK);
    CHECK(take(g6) == "Cr");

    CHECK(cqv_graph_add_edge(h.g, 0, 0) == CQV_EINVAL);
    CHECK(cqv_graph_add_edge(h.g, 0, 4) == CQV_EINVAL);
    CHECK(std::strlen(cqv_last_error()) > 0);
    cqv_graph* too_big = nullptr;
    CHECK(cqv_graph_new(65, &too_big) == CQV_EINVAL);
    CHECK(too_big == nullptr);
}

TEST_CASE("parse in each format and auto-detect") {
    GraphHandle a, b, c;
    REQUIRE(cqv_graph_parse("Cr", "graph6", &a.g) == CQV_OK);
    REQUIRE(cqv_graph_parse("4\n0 1\n0 2\n1 3\n2 3\n", "edge-list", &b.g) == CQV_OK);
    REQUIRE(cqv_graph_parse("Cr", "auto", &c.g) == CQV_OK);
    char* s = nullptr;
    REQUIRE(cqv_graph_format(b.g, "graph6", &s) == CQV_OK);
    CHECK(take(s) == "Cr");
    REQUIRE(cqv_graph_format(c.g, "graph6", &s) == CQV_OK);
    CHECK(take(s) == "Cr");

    cqv_graph* bad = nullptr;
    CHECK(cqv_graph_parse("not a graph", "graph6", &bad) == CQV_EPARSE);
    CHECK(bad == nullptr);
    CHECK(std::strlen(cqv_last_error()) > 0);
    CHECK(cqv_graph_parse("Cr", "dot", &bad) == CQV_EINVAL);
    CHECK(cqv_graph_parse(nullptr, "graph6", &bad) == CQV_EINVAL);
    CHECK(cqv_graph_parse("Cr", "graph6", nullptr) == CQV_EINVAL);
}

TEST_CASE("chordality, cliques, connectivity through the interface") {
    GraphHandle c4, k3;
    REQUIRE(cqv_graph_parse("Cr", "graph6", &c4.g) == CQV_OK);
    REQUIRE(cqv_graph_parse("Bw", "graph6", &k3.g) == CQV_OK);

    char* peo = nullptr;
    REQUIRE(cqv_graph_chordal_peo(c4.g, &peo) == CQV_OK);
    CHECK(peo == nullptr);  // C_4 is not chordal
    REQUIRE(cqv_graph_chordal_peo(k3.g, &peo) == CQV_OK);
    CHECK(take(peo).size() == 5);  // three indices, two commas

    char* cv = nullptr;
    REQUIRE(cqv_graph_clique_vector(k3.g, 0, &cv) == CQV_OK);
    CHECK(take(cv) == "3,3,1");
    REQUIRE(cqv_graph_clique_vector(c4.g, 1, &cv) == CQV_OK);
    CHECK(take(cv) == "4,4");

    int kappa = -1;
    REQUIRE(cqv_graph_connectivity(k3.g, 0, &kappa) == CQV_OK);
    CHECK(kappa == 3);
    REQUIRE(cqv_graph_connectivity(k3.g, 1, &kappa) == CQV_OK);
    CHECK(kappa == 2);
    REQUIRE(cqv_graph_connectivity(c4.g, 0, &kappa) == CQV_OK);
    CHECK(kappa == 2);
}

TEST_CASE("cone and induced subgraph handles") {
    GraphHandle base, coned, sub;
    REQUIRE(cqv_graph_parse("2\n0 1\n", "edge-list", &base.g) == CQV_OK);
    REQUIRE(cqv_graph_cone(base.g, &coned.g) == CQV_OK);
    CHECK(cqv_graph_vertex_count(coned.g) == 3);
    CHECK(cqv_graph_edge_count(coned.g) == 3);
    const int verts[] = {0, 2};
    REQUIRE(cqv_graph_induced(coned.g, verts, 2, &sub.g) == CQV_OK);
    CHECK(cqv_graph_vertex_count(sub.g) == 2);
    CHECK(cqv_graph_has_edge(sub.g, 0, 1) == 1);
    const int dup[] = {0, 0};
    cqv_graph* bad = nullptr;
    CHECK(cqv_graph_induced(coned.g, dup, 2, &bad) == CQV_EINVAL);
}

TEST_CASE("transform, validation, realization") {
    char* out = nullptr;
    REQUIRE(cqv_clique_to_b("10,14,11,3", &out) == CQV_OK);
    CHECK(take(out) == "4,1,2,3");
    REQUIRE(cqv_b_to_clique("4,1,2,3", &out) == CQV_OK);
    CHECK(take(out) == "10,14,11,3");
    CHECK(cqv_clique_to_b("10,x", &out) == CQV_EPARSE);

    int valid = -1;
    char* reason = nullptr;
    REQUIRE(cqv_validate("10,14,11,3", 0, &valid, &reason) == CQV_OK);
    CHECK(valid == 1);
    CHECK(reason == nullptr);
    REQUIRE(cqv_validate("10,14,11,3", 1, &valid, &reason) == CQV_OK);
    CHECK(valid == 0);
    CHECK(take(reason) == "b_1 = 4 != 1");
    CHECK(cqv_validate("10,14,11,3", -1, &valid, &reason) == CQV_EINVAL);

    GraphHandle realized;
    char* word = nullptr;
    REQUIRE(cqv_realize("5,4", 1, &realized.g, &word) == CQV_OK);
    CHECK(take(word) == "SDDDS");
    CHECK(cqv_graph_vertex_count(realized.g) == 5);

    cqv_graph* nog = nullptr;
    CHECK(cqv_realize("4,4", 0, &nog, &word) == CQV_EREJECTED);
    CHECK(nog == nullptr);
    CHECK(std::string(cqv_last_error()) == "b_1 = 0 not positive");

    REQUIRE(cqv_binomial(10, 5, &out) == CQV_OK);
    CHECK(take(out) == "252");
    CHECK(cqv_binomial(-1, 0, &out) == CQV_EINVAL);
}

TEST_CASE("words through the interface") {
    GraphHandle g;
    REQUIRE(cqv_word_to_graph("DDDSSDSDDS", &g.g) == CQV_OK);
    CHECK(cqv_graph_vertex_count(g.g) == 10);

    char* word = nullptr;
    int is_threshold = -1;
    REQUIRE(cqv_graph_to_word(g.g, &word, &is_threshold) == CQV_OK);
    CHECK(is_threshold == 1);
    CHECK(take(word) == "DDDSSDSDDS");

    GraphHandle c4;
    REQUIRE(cqv_graph_parse("Cr", "graph6", &c4.g) == CQV_OK);
    REQUIRE(cqv_graph_to_word(c4.g, &word, &is_threshold) == CQV_OK);
    CHECK(is_threshold == 0);
    CHECK(word == nullptr);

    char* out = nullptr;
    REQUIRE(cqv_word_to_bvector("DDDSSDSDDS", &out) == CQV_OK);
    CHECK(take(out) == "4,1,2,3");
    REQUIRE(cqv_bvector_to_word("4,1,2,3", &out) == CQV_OK);
    CHECK(take(out) == "DDDSSDSDDS");
    CHECK(cqv_word_to_bvector("SD", &out) == CQV_EPARSE);
    CHECK(cqv_bvector_to_word("0,1", &out) == CQV_EINVAL);

    int flag = -1;
    REQUIRE(cqv_word_is_k_connected("SSDS", 2, &flag) == CQV_OK);
    CHECK(flag == 1);
    REQUIRE(cqv_word_is_k_connected("SSDS", 3, &flag) == CQV_OK);
    CHECK(flag == 0);
}

TEST_CASE("b-vector enumeration stream") {
    cqv_bvector_enum* e = nullptr;
    REQUIRE(cqv_bvector_enum_new(4, 2, 0, &e) == CQV_OK);
    char* v = nullptr;
    REQUIRE(cqv_bvector_enum_next(e, &v) == CQV_OK);
    CHECK(take(v) == "1,3");
    REQUIRE(cqv_bvector_enum_next(e, &v) == CQV_OK);
    CHECK(take(v) == "2,2");
    REQUIRE(cqv_bvector_enum_next(e, &v) == CQV_OK);
    CHECK(take(v) == "3,1");
    REQUIRE(cqv_bvector_enum_next(e, &v) == CQV_OK);
    CHECK(v == nullptr);  // exhausted
    cqv_bvector_enum_free(e);

    CHECK(cqv_bvector_enum_new(2, 5, 0, &e) == CQV_EINVAL);

    char* count = nullptr;
    REQUIRE(cqv_bvector_count(10, 4, 2, &count) == CQV_OK);
    CHECK(take(count) == "7");
}

TEST_CASE("homology and Betti tables through the interface") {
    GraphHandle c4;
    REQUIRE(cqv_graph_parse("Cr", "graph6", &c4.g) == CQV_OK);

    char* h = nullptr;
    REQUIRE(cqv_graph_homology(c4.g, &h) == CQV_OK);
    CHECK(take(h) == "0,1");

    char* strand = nullptr;
    REQUIRE(cqv_graph_betti_strand(c4.g, &strand) == CQV_OK);
    CHECK(take(strand) == "0,2,0,0");

    cqv_betti_table* t = nullptr;
    REQUIRE(cqv_graph_betti_table(c4.g, &t) == CQV_OK);
    CHECK(cqv_betti_table_size(t) == 3);
    int i = -1, j = -1;
    uint64_t value = 0;
    REQUIRE(cqv_betti_table_entry(t, 1, &i, &j, &value) == CQV_OK);
    CHECK(i == 1);
    CHECK(j == 2);
    CHECK(value == 2);
    CHECK(cqv_betti_table_entry(t, 3, &i, &j, &value) == CQV_EINVAL);
    CHECK(cqv_betti_table_projective_dimension(t) == 2);
    CHECK(cqv_betti_table_depth(t) == 2);
    CHECK(cqv_betti_table_two_linear(t) == 0);
    char* json = nullptr;
    REQUIRE(cqv_betti_table_json(t, &json) == CQV_OK);
    CHECK(take(json) == "{\"n\": 4, \"entries\": [[0, 0, 1], [1, 2, 2], [2, 4, 1]]}");
    cqv_betti_table_free(t);

    int kappa = -1;
    REQUIRE(cqv_graph_connectivity_from_betti(c4.g, &kappa) == CQV_OK);
    CHECK(kappa == 2);
}

TEST_CASE("verification sweep through the interface") {
    char* json = nullptr;
    int pass = 0;
    REQUIRE(cqv_verify("counting", 5, 1, &json, &pass) == CQV_OK);
    CHECK(pass == 1);
    const std::string body = take(json);
    CHECK(body.find("\"theorem\": \"counting\"") != std::string::npos);
    CHECK(cqv_verify("nope", 3, 1, &json, &pass) == CQV_EINVAL);
}
