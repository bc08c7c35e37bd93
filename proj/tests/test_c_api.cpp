#include <doctest.h>

#include <cstring>
#include <string>

#include "gamma2/gamma2.h"

namespace {

struct StringOut {
    char* ptr = nullptr;
    ~StringOut() { g2_string_free(ptr); }
    std::string str() const { return ptr ? ptr : ""; }
};

struct GraphOut {
    g2_graph* ptr = nullptr;
    ~GraphOut() { g2_graph_free(ptr); }
};

} // namespace

TEST_CASE("c api: generate, counts, curvature") {
    GraphOut g;
    REQUIRE(g2_gen_hypercube(4, &g.ptr) == G2_OK);
    int32_t n = 0;
    int64_t m = 0;
    REQUIRE(g2_graph_counts(g.ptr, &n, &m) == G2_OK);
    CHECK(n == 16);
    CHECK(m == 32);

    StringOut json;
    REQUIRE(g2_curvature_json(g.ptr, 0, &json.ptr) == G2_OK);
    CHECK(json.str().find("\"ric\":2,") != std::string::npos);
}

TEST_CASE("c api: error codes and messages") {
    g2_graph* out = nullptr;
    CHECK(g2_gen_hypercube(-3, &out) == G2_INVALID_INPUT);
    CHECK(std::string(g2_last_error()).find("hypercube") != std::string::npos);

    CHECK(g2_graph_parse_edge_list("2 1\n1 1\n", &out) == G2_INVALID_INPUT);
    CHECK(std::string(g2_last_error()).find("self-loop") != std::string::npos);

    // cap exceeded on a big exact cheeger
    GraphOut big;
    REQUIRE(g2_gen_cycle(30, &big.ptr) == G2_OK);
    StringOut json;
    CHECK(g2_cheeger_json(big.ptr, "exact", 0, &json.ptr) == G2_CAP_EXCEEDED);
    CHECK(g2_cheeger_json(big.ptr, "bogus", 0, &json.ptr) == G2_INVALID_INPUT);
    CHECK(g2_cheeger_json(big.ptr, "sweep", 0, &json.ptr) == G2_OK);
    CHECK(json.str().find("\"method\":\"sweep\"") != std::string::npos);
}

TEST_CASE("c api: edge list and json round trip") {
    GraphOut g;
    REQUIRE(g2_graph_parse_edge_list("3 3\n0 1\n0 2\n1 2\n", &g.ptr) == G2_OK);
    StringOut text;
    REQUIRE(g2_graph_edge_list(g.ptr, &text.ptr) == G2_OK);
    CHECK(text.str() == "3 3\n0 1\n0 2\n1 2\n");

    StringOut json;
    REQUIRE(g2_graph_json(g.ptr, &json.ptr) == G2_OK);
    GraphOut back;
    REQUIRE(g2_graph_parse_json(json.ptr, &back.ptr) == G2_OK);
    int32_t n = 0;
    REQUIRE(g2_graph_counts(back.ptr, &n, nullptr) == G2_OK);
    CHECK(n == 3);
}

TEST_CASE("c api: cayley generators") {
    // Z_9 with {2, 3} (inverses added internally)
    const int32_t orders[] = {9};
    const int32_t gens[] = {2, 3};
    GraphOut g;
    REQUIRE(g2_gen_abelian_cayley(orders, 1, gens, 2, &g.ptr) == G2_OK);
    int32_t n = 0;
    REQUIRE(g2_graph_counts(g.ptr, &n, nullptr) == G2_OK);
    CHECK(n == 9);

    // identity permutation rejected
    const int32_t id_perm[] = {0, 1, 2};
    g2_graph* bad = nullptr;
    CHECK(g2_gen_perm_cayley(3, id_perm, 1, &bad) == G2_INVALID_INPUT);

    const int32_t swap01[] = {1, 0, 2, 3};
    GraphOut s4;
    REQUIRE(g2_gen_perm_cayley(4, swap01, 1, &s4.ptr) == G2_INVALID_INPUT);
    CHECK(std::string(g2_last_error()).find("reached") != std::string::npos);
}

TEST_CASE("c api: spectrum, cheeger, sn test set") {
    GraphOut g;
    REQUIRE(g2_gen_complete(7, &g.ptr) == G2_OK);
    StringOut spec;
    REQUIRE(g2_spectrum_json(g.ptr, &spec.ptr) == G2_OK);
    CHECK(spec.str().find("\"lambda\":7,") != std::string::npos);

    GraphOut c10;
    REQUIRE(g2_gen_cycle(10, &c10.ptr) == G2_OK);
    StringOut ch;
    REQUIRE(g2_cheeger_json(c10.ptr, "exact", 0, &ch.ptr) == G2_OK);
    CHECK(ch.str().find("\"h\":0.4,") != std::string::npos);

    StringOut sn;
    REQUIRE(g2_sn_test_set_json(4, &sn.ptr) == G2_OK);
    CHECK(sn.str().find("\"boundary\":8,\"method\":\"testset\"") != std::string::npos);
}

TEST_CASE("c api: verify quick corpus") {
    StringOut jsonl;
    REQUIRE(g2_verify_jsonl("quick", 7, 1.0, &jsonl.ptr) == G2_OK);
    CHECK(jsonl.str().find("\"summary\"") != std::string::npos);
    CHECK(jsonl.str().find("\"failed\":0") != std::string::npos);

    g2_graph* dummy = nullptr;
    (void)dummy;
    char* out = nullptr;
    CHECK(g2_verify_jsonl("bogus", 1, 1.0, &out) == G2_INVALID_INPUT);
}

TEST_CASE("c api: thread knob") {
    g2_set_threads(2);
    CHECK(g2_threads() == 2);
    g2_set_threads(0);
    CHECK(g2_threads() >= 1);
}
