#include <doctest.h>

#include <cmath>

#include "gamma2/errors.hpp"
#include "gamma2/families.hpp"
#include "gamma2/graph.hpp"
#include "test_helpers.hpp"

using namespace g2;

TEST_CASE("graph construction enforces the invariants") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), InputError);          // self-loop
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {0, 1}}), InputError);  // duplicate
    CHECK_THROWS_AS(Graph(3, {{0, 1}}), InputError);          // isolated vertex 2
    CHECK_THROWS_AS(Graph(2, {{0, 5}}), InputError);          // out of range

    Graph k2(2, {{0, 1}});
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK(k2.degree(0) == 1);
    CHECK(k2.adjacent(0, 1));
}

TEST_CASE("laplacian on fixed instances") {
    Graph k2(2, {{0, 1}});
    CHECK(laplacian_apply(k2, {0.0, 1.0}) == RealFunction{1.0, -1.0});

    // constant function is annihilated
    Graph h3 = hypercube(3);
    RealFunction c(8, 4.2);
    for (double v : laplacian_apply(h3, c)) CHECK(v == doctest::Approx(0.0));

    // C_4 with f = (1, 0, -1, 0): hand evaluation of the defining sum
    Graph c4 = cycle(4);
    RealFunction f = {1.0, 0.0, -1.0, 0.0};
    RealFunction lf = laplacian_apply(c4, f);
    CHECK(lf[0] == doctest::Approx(-2.0));
    CHECK(lf[1] == doctest::Approx(0.0));
    CHECK(lf[2] == doctest::Approx(2.0));
    CHECK(lf[3] == doctest::Approx(0.0));

    CHECK_THROWS_AS(laplacian_apply(c4, {1.0, 2.0}), InputError);
}

TEST_CASE("laplacian output sums to zero and is negative semidefinite") {
    Rng rng(31);
    for (int rep = 0; rep < 20; ++rep) {
        Graph g = testing::random_graph(4 + static_cast<int>(rng.below(10)), 0.4, rng);
        RealFunction f = testing::random_function(g.vertex_count(), rng);
        RealFunction lf = laplacian_apply(g, f);
        double total = 0.0, quad = 0.0;
        for (int x = 0; x < g.vertex_count(); ++x) {
            total += lf[x];
            quad += f[x] * lf[x];
        }
        CHECK(std::fabs(total) <= 1e-10 * g.vertex_count());
        CHECK(quad <= 1e-10);
    }
}

TEST_CASE("gamma on fixed instances") {
    Graph k2(2, {{0, 1}});
    CHECK(gamma(k2, {0.0, 1.0}, 0) == doctest::Approx(0.5));

    // star K_{1,3}, center 0, f = (0,1,2,3): (1+4+9)/2
    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(gamma(star, {0.0, 1.0, 2.0, 3.0}, 0) == doctest::Approx(7.0));

    RealFunction c(4, 3.0);
    CHECK(gamma(star, c, 0) == doctest::Approx(0.0));
}

TEST_CASE("gamma is symmetric and nonnegative on the diagonal") {
    Rng rng(32);
    for (int rep = 0; rep < 10; ++rep) {
        Graph g = testing::random_graph(8, 0.5, rng);
        RealFunction f = testing::random_function(8, rng);
        RealFunction h = testing::random_function(8, rng);
        for (int x = 0; x < 8; ++x) {
            CHECK(gamma(g, f, h, x) == doctest::Approx(gamma(g, h, f, x)).epsilon(1e-12));
            CHECK(gamma(g, f, x) >= 0.0);
        }
    }
}

TEST_CASE("global identity: sum Gamma(f,g) = -sum f Lap(g) = -sum g Lap(f)") {
    Rng rng(33);
    for (int rep = 0; rep < 20; ++rep) {
        Graph g = testing::random_graph(5 + static_cast<int>(rng.below(12)), 0.35, rng);
        int n = g.vertex_count();
        RealFunction f = testing::random_function(n, rng);
        RealFunction h = testing::random_function(n, rng);
        RealFunction lf = laplacian_apply(g, f);
        RealFunction lh = laplacian_apply(g, h);
        double sum_gamma = 0.0, sum_f_lh = 0.0, sum_h_lf = 0.0;
        for (int x = 0; x < n; ++x) {
            sum_gamma += gamma(g, f, h, x);
            sum_f_lh += f[x] * lh[x];
            sum_h_lf += h[x] * lf[x];
        }
        CHECK(std::fabs(sum_gamma + sum_f_lh) <= 1e-10 * n);
        CHECK(std::fabs(sum_gamma + sum_h_lf) <= 1e-10 * n);
    }
}

TEST_CASE("product rule: Lap(fg) = f Lap g + 2 Gamma(f,g) + g Lap f") {
    Rng rng(34);
    for (int rep = 0; rep < 20; ++rep) {
        Graph g = testing::random_graph(5 + static_cast<int>(rng.below(10)), 0.4, rng);
        int n = g.vertex_count();
        RealFunction f = testing::random_function(n, rng);
        RealFunction h = testing::random_function(n, rng);
        RealFunction fh(n);
        for (int i = 0; i < n; ++i) fh[i] = f[i] * h[i];
        RealFunction lfh = laplacian_apply(g, fh);
        RealFunction lf = laplacian_apply(g, f);
        RealFunction lh = laplacian_apply(g, h);
        for (int x = 0; x < n; ++x) {
            double rhs = f[x] * lh[x] + 2.0 * gamma(g, f, h, x) + h[x] * lf[x];
            CHECK(std::fabs(lfh[x] - rhs) <= 1e-10);
        }
    }
}

TEST_CASE("gamma2 on fixed instances") {
    // constant
    Graph h3 = hypercube(3);
    RealFunction c(8, 2.0);
    for (int x = 0; x < 8; ++x) CHECK(gamma2(h3, c, x) == doctest::Approx(0.0));

    // K_2: Gamma_2 = 1 on f=(0,1), so Gamma_2/Gamma = 2 = 1 + n/2 at n=2
    Graph k2(2, {{0, 1}});
    CHECK(gamma2(k2, {0.0, 1.0}, 0) == doctest::Approx(1.0));

    // C_5 flat witness: path values -2,-1,0,1,2 centered at x=0
    Graph c5 = cycle(5);
    RealFunction f = {0.0, -1.0, -2.0, 2.0, 1.0};
    CHECK(gamma2(c5, f, 0) == doctest::Approx(0.0));
}

TEST_CASE("gamma2 is invariant under adding constants") {
    Rng rng(35);
    for (int rep = 0; rep < 10; ++rep) {
        Graph g = testing::random_graph(9, 0.4, rng);
        RealFunction f = testing::random_function(9, rng);
        RealFunction shifted = f;
        for (double& v : shifted) v += 17.5;
        for (int x = 0; x < 9; ++x)
            CHECK(std::fabs(gamma2(g, f, x) - gamma2(g, shifted, x)) <= 1e-10);
    }
}

TEST_CASE("gamma2 reads only the 2-ball") {
    // C_7 at x=0: vertices 3 and 4 are at distance 3; junk there cannot matter
    Graph c7 = cycle(7);
    RealFunction f = {0.0, 1.0, -2.0, 0.0, 0.0, 0.5, 2.0};
    double base = gamma2(c7, f, 0);
    f[3] = 1e9;
    f[4] = -1e9;
    CHECK(gamma2(c7, f, 0) == doctest::Approx(base));
}

TEST_CASE("ball2 on fixed instances") {
    Graph h3 = hypercube(3);
    for (int x = 0; x < 8; ++x) {
        VertexBall2 b = ball2(h3, x);
        CHECK(b.n1.size() == 3);
        CHECK(b.n2.size() == 3);
        CHECK(b.edges_n1n1.empty());
        for (int r : b.r) CHECK(r == 2);
    }

    Graph k4 = complete(4);
    VertexBall2 bk = ball2(k4, 1);
    CHECK(bk.n2.empty());
    CHECK(bk.edges_n1n1.size() == 3);

    Graph c6 = cycle(6);
    VertexBall2 bc = ball2(c6, 2);
    CHECK(bc.n1.size() == 2);
    CHECK(bc.n2.size() == 2);
    for (int r : bc.r) CHECK(r == 1);
}

TEST_CASE("ball2 invariants on random graphs") {
    Rng rng(36);
    for (int rep = 0; rep < 10; ++rep) {
        Graph g = testing::random_graph(12, 0.3, rng);
        for (int x = 0; x < 12; ++x) {
            VertexBall2 b = ball2(g, x);
            // disjointness and distance classification
            for (Vertex v : b.n1) CHECK(g.adjacent(x, v));
            for (Vertex u : b.n2) {
                CHECK(!g.adjacent(x, u));
                CHECK(u != x);
            }
            // r(u) matches the incidence list
            std::vector<int> count(b.n2.size(), 0);
            for (auto [i, j] : b.edges_n1n2) {
                CHECK(g.adjacent(b.n1[i], b.n2[j]));
                ++count[j];
            }
            for (std::size_t j = 0; j < b.n2.size(); ++j) {
                CHECK(count[j] == b.r[j]);
                CHECK(b.r[j] >= 1);
            }
        }
    }
}

TEST_CASE("triangle stats") {
    CHECK(triangle_stats(hypercube(4)).max_per_edge == 0); // bipartite
    CHECK(triangle_stats(complete(6)).max_per_edge == 4);  // n - 2

    // k-slice with transpositions: every edge has t(e) = n - 2
    Graph s = slice(5, 2);
    TriangleStats ts = triangle_stats(s);
    for (const auto& [e, t] : ts.per_edge) CHECK(t == 3);
}

TEST_CASE("edge list round trip and diagnostics") {
    Graph k2 = parse_edge_list("2 1\n0 1\n");
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);

    Graph k3 = parse_edge_list("3 3\n0 1\n0 2\n1 2\n");
    CHECK(k3.edge_count() == 3);
    CHECK(k3.adjacent(1, 2));

    std::string canonical = "3 3\n0 1\n0 2\n1 2\n";
    CHECK(serialize_edge_list(parse_edge_list("3 3\n1 2\n0 2\n0 1\n")) == canonical);

    CHECK_THROWS_WITH_AS(parse_edge_list("oops\n"), doctest::Contains("malformed header"),
                         InputError);
    CHECK_THROWS_WITH_AS(parse_edge_list("2 1\n0 x\n"), doctest::Contains("malformed edge"),
                         InputError);
    CHECK_THROWS_WITH_AS(parse_edge_list("2 1\n0 7\n"), doctest::Contains("out of range"),
                         InputError);
    CHECK_THROWS_WITH_AS(parse_edge_list("2 1\n1 1\n"), doctest::Contains("self-loop"),
                         InputError);
    CHECK_THROWS_WITH_AS(parse_edge_list("2 2\n0 1\n0 1\n"), doctest::Contains("duplicate"),
                         InputError);
    CHECK_THROWS_WITH_AS(parse_edge_list("3 1\n0 1\n"), doctest::Contains("isolated"),
                         InputError);
    CHECK_THROWS_WITH_AS(parse_edge_list("2 1\n1 0\n"), doctest::Contains("u < v"),
                         InputError);
}

TEST_CASE("edge list round trip on random graphs") {
    Rng rng(37);
    for (int rep = 0; rep < 15; ++rep) {
        Graph g = testing::random_graph(4 + static_cast<int>(rng.below(20)), 0.3, rng);
        std::string text = serialize_edge_list(g);
        Graph back = parse_edge_list(text);
        CHECK(serialize_edge_list(back) == text);
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(back.edge_count() == g.edge_count());
    }
}

TEST_CASE("json graph format") {
    Graph g = parse_graph_json(R"({"n": 3, "edges": [[1,2],[0,1],[0,2]], "name": "tri"})");
    CHECK(g.vertex_count() == 3);
    CHECK(g.name() == "tri");
    CHECK(serialize_graph_json(g) ==
          R"({"n":3,"edges":[[0,1],[0,2],[1,2]],"name":"tri"})");

    // round trip
    Graph back = parse_graph_json(serialize_graph_json(g));
    CHECK(back.edge_count() == 3);

    CHECK_THROWS_AS(parse_graph_json("{"), InputError);
    CHECK_THROWS_AS(parse_graph_json(R"({"n": 2})"), InputError);
    CHECK_THROWS_AS(parse_graph_json(R"({"n": 2, "edges": [[0,0]]})"), InputError);
}
